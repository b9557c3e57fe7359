//! Command-line front end for the excepted-set pipeline.
//!
//! One verb per stage: `escalate` builds escalation trees, `densities`
//! reports local densities, `eligible` runs the analytic-threshold
//! machinery, `check` pushes numbers through the bitmap ladder, `classify`
//! sorts a quaternary into Type A/B/C, `pairs` emits the verified 73-row
//! pair table, and `verify-halmos` runs the flagship pipeline end to end.
//! The process exits zero only when every requested verdict is definitive;
//! unresolved numbers or open branches exit nonzero.

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use eisenstein_bounds::BoundConstants;
use eligible_engine::EligibleSession;
use eligible_engine::FormProfile;
use num_bigint::BigInt;
use num_rational::BigRational;
use pipeline_cli::{
    classify_with, emit_table, mine_witnesses, verify_halmos_with, ClassifyConfig, HalmosConfig,
    MineConfig,
};
use qform_core::{form_from_path, ExceptionSet};
use rep_checker::{
    boolean_theta, check_numbers, find_split_local_cover, precision_bound, BitsetMode,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pipeline-cli",
    about = "Escalation, local densities, and excepted-set verdicts for quadratic forms"
)]
struct Cli {
    /// Worker threads for the parallel stages (0 keeps the library default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Primary resource cap of the chosen verb (see each verb's help).
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Directory for output artifacts; stdout-only when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Build the escalation tree for a target exception set.
    /// Cap: truant search bound (default 10000).
    Escalate {
        /// Target exceptions, comma separated; omit for the empty target.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        target: Vec<u64>,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
    /// Report the local density of a quaternary form at one prime.
    Densities {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
    /// Eligible-number machinery under given analytic constants.
    /// Cap: squarefree set size bound.
    Eligible {
        /// Cusp constant C_f, as a decimal or "num/den" rational.
        #[arg(long, default_value = "13.4964")]
        c_f: String,
    },
    /// Check numbers against a form through a split local cover bitmap.
    /// Exits nonzero if any number stays unresolved.
    Check {
        #[arg(long)]
        form: PathBuf,
        /// Numbers file (ELG1 format).
        #[arg(long)]
        numbers: PathBuf,
        /// Slices attempted per number.
        #[arg(long, default_value_t = 5)]
        c: u64,
        /// Bitmap mode: approx | exact.
        #[arg(long, default_value = "approx")]
        mode: String,
    },
    /// Classify a quaternary form into Type A, B, or C.
    /// Cap: exception scan bound (default 10000).
    Classify {
        #[arg(long)]
        form: PathBuf,
    },
    /// Emit the 73-row excepted-pair table with verified witnesses.
    /// Cap: verification bound for quaternary rows (default 2000).
    Pairs {
        /// Re-run the witness hunt instead of using the shipped witnesses.
        #[arg(long)]
        mine: bool,
    },
    /// Run the full pipeline on the Halmos form x²+2y²+7z²+13w².
    /// Cap: largest value the full-theta fallback accepts (default 10⁶).
    VerifyHalmos {
        /// Cusp constant C_f, as a decimal or "num/den" rational.
        #[arg(long, default_value = "13.4964")]
        c_f: String,
        /// Slices per number in the wide insurance stage.
        #[arg(long, default_value_t = 64)]
        wide: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // A second build_global in the same process is harmless: the pool
        // is already running, which is all we need.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(definitive) => {
            if definitive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    match &cli.verb {
        Verb::Escalate { target, max_dim } => escalate(cli, target, *max_dim),
        Verb::Densities { form, p, m } => densities(form, *p, *m),
        Verb::Eligible { c_f } => eligible(cli, c_f),
        Verb::Check {
            form,
            numbers,
            c,
            mode,
        } => check(cli, form, numbers, *c, mode),
        Verb::Classify { form } => classify_verb(cli, form),
        Verb::Pairs { mine } => pairs(cli, *mine),
        Verb::VerifyHalmos { c_f, wide } => verify_halmos_verb(cli, c_f, *wide),
    }
}

fn escalate(cli: &Cli, target: &[u64], max_dim: usize) -> anyhow::Result<bool> {
    let truant_cap = cli.cap.unwrap_or(qform_core::TRUANT_CAP);
    let set = ExceptionSet::new(target.to_vec())?;
    let tree = escalator::escalate_tree(&set, max_dim, truant_cap)?;
    for level in &tree.stats {
        println!(
            "dim {}: raw {} classes {} survivors {} escalated {} candidates {}",
            level.dim, level.raw, level.classes, level.survivors, level.escalated, level.candidates
        );
    }
    let truants = tree.truant_set();
    println!("truants hit: {truants:?}");
    println!("candidate forms: {}", tree.candidates().count());
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("tree.jsonl");
        let file = std::fs::File::create(&path)?;
        tree.write_jsonl(std::io::BufWriter::new(file))?;
        println!("tree written to {}", path.display());
    }
    Ok(true)
}

fn densities(form_path: &Path, p: u64, m: u64) -> anyhow::Result<bool> {
    let form = form_from_path(form_path)?;
    let report = local_densities::local_density_report(&form, p, m)?;
    println!("beta_{p}({m}) = {}", report.beta);
    println!("  good {}  bad {}  zero {}", report.good, report.bad, report.zero);
    let locally = local_densities::is_locally_represented(&form, m)?;
    println!("locally represented: {locally}");
    Ok(true)
}

fn eligible(cli: &Cli, c_f: &str) -> anyhow::Result<bool> {
    let constants = BoundConstants::halmos().with_c_f(parse_rational(c_f)?);
    let session = EligibleSession::new(constants, FormProfile::halmos());
    println!("eligible primes: {}", session.eligible_primes().len());
    let squarefree = match cli.cap {
        Some(cap) => session.squarefree_eligible_capped(cap)?,
        None => session.squarefree_eligible()?,
    };
    println!("squarefree eligible numbers: {}", squarefree.len());
    if let Some(max) = squarefree.last() {
        println!("largest: {max}");
    }
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("eligible.bin");
        eligible_engine::write_numbers_path(&path, &squarefree)?;
        println!("numbers written to {}", path.display());
    }
    Ok(true)
}

fn check(
    cli: &Cli,
    form_path: &Path,
    numbers_path: &Path,
    attempts: u64,
    mode: &str,
) -> anyhow::Result<bool> {
    let mode = match mode {
        "approx" => BitsetMode::Approximate,
        "exact" => BitsetMode::Exact,
        other => bail!("unknown mode {other:?}: use approx or exact"),
    };
    let form = form_from_path(form_path)?;
    let numbers = eligible_engine::read_numbers_path(numbers_path)
        .with_context(|| format!("reading {}", numbers_path.display()))?;
    let cover = find_split_local_cover(&form)?;
    println!(
        "cover: d = {}, ternary Gram {:?}",
        cover.d,
        cover.ternary.gram_rows()
    );
    let outcome = check_numbers(&cover, &numbers, attempts, mode)?;
    println!(
        "checked {} numbers: {} represented, {} unresolved",
        numbers.len(),
        outcome.represented.len(),
        outcome.unresolved.len()
    );
    if !outcome.unresolved.is_empty() {
        let shown: Vec<u64> = outcome.unresolved.iter().copied().take(20).collect();
        println!("unresolved (first {}): {:?}", shown.len(), shown);
    }
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let max = numbers.iter().copied().max().unwrap_or(0);
        let bound = precision_bound(cover.d, attempts, max);
        let bits = boolean_theta(&cover.ternary, bound, mode)?;
        let path = dir.join("cover.bth");
        rep_checker::io::write_bitset_path(&path, &bits)?;
        println!("bitmap written to {}", path.display());
    }
    Ok(outcome.unresolved.is_empty())
}

fn classify_verb(cli: &Cli, form_path: &Path) -> anyhow::Result<bool> {
    let form = form_from_path(form_path)?;
    let config = ClassifyConfig {
        scan_bound: cli.cap.unwrap_or(ClassifyConfig::default().scan_bound),
        ..ClassifyConfig::default()
    };
    let verdict = classify_with(&form, &config)?;
    println!("kind: {}", verdict.kind.name());
    println!("evidence: {}", serde_json::to_string_pretty(&verdict.evidence)?);
    Ok(true)
}

fn pairs(cli: &Cli, mine: bool) -> anyhow::Result<bool> {
    let witnesses = if mine {
        let mined = mine_witnesses(&MineConfig::default())?;
        if let Some(dir) = &cli.out {
            std::fs::create_dir_all(dir)?;
            let path = dir.join("witnesses.json");
            std::fs::write(&path, serde_json::to_string_pretty(&mined)?)?;
            println!("witnesses written to {}", path.display());
        }
        mined
    } else {
        pipeline_cli::builtin_witnesses()?
    };
    let bound_dim4 = cli.cap.unwrap_or(2_000);
    let bound_dim5 = bound_dim4.min(2_000);
    let table = emit_table(&witnesses, bound_dim4, bound_dim5)?;
    for record in &table {
        println!(
            "{{{}, {}}} dim {} checked to {} via {}",
            record.pair.0,
            record.pair.1,
            record.dim,
            record.bound_checked,
            record.method.join(" + ")
        );
    }
    println!("{} rows verified", table.len());
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("pairs.json");
        std::fs::write(&path, serde_json::to_string_pretty(&table)?)?;
        println!("table written to {}", path.display());
    }
    Ok(true)
}

fn verify_halmos_verb(cli: &Cli, c_f: &str, wide: u64) -> anyhow::Result<bool> {
    let constants = BoundConstants::halmos().with_c_f(parse_rational(c_f)?);
    let config = HalmosConfig {
        wide_attempts: wide,
        full_theta_cap: cli.cap.unwrap_or(HalmosConfig::default().full_theta_cap),
        ..HalmosConfig::default()
    };
    let report = verify_halmos_with(constants, &config)?;
    println!(
        "cover: d = {}, ternary Gram {:?}",
        report.cover_d,
        report.cover_ternary.gram_rows()
    );
    println!("eligible primes: {}", report.eligible_primes);
    for (i, round) in report.outcome.rounds.iter().enumerate() {
        println!(
            "round {}: {} candidates, {} new exceptions",
            i + 1,
            round.candidates,
            round.new_exceptions.len()
        );
    }
    let stats = report.stats;
    println!(
        "ladder: {} checked / {} approx / {} exact / {} wide / {} theta",
        stats.checked,
        stats.settled_approximate,
        stats.settled_exact,
        stats.settled_wide,
        stats.settled_theta
    );
    println!("exceptions: {:?}", report.exceptions());
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join("halmos.json");
        let payload = serde_json::json!({
            "cover_d": report.cover_d,
            "cover_ternary": report.cover_ternary.gram_rows(),
            "exceptions": report.exceptions(),
        });
        std::fs::write(&path, serde_json::to_string_pretty(&payload)?)?;
        println!("report written to {}", path.display());
    }
    Ok(true)
}

/// Parse "num/den", a decimal like "13.4964", or a plain integer into an
/// exact rational.
fn parse_rational(s: &str) -> anyhow::Result<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().context("rational numerator")?;
        let d: BigInt = den.trim().parse().context("rational denominator")?;
        if d == BigInt::from(0) {
            bail!("zero denominator in {s:?}");
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let n: BigInt = digits.parse().context("decimal digits")?;
        let d = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(BigRational::new(n, d));
    }
    let n: BigInt = s.parse().context("integer constant")?;
    Ok(BigRational::from(n))
}
