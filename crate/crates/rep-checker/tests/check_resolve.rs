//! The bulk checking pipeline end to end: precision bound, slice scanning,
//! the retry ladder, witness materialization, and agreement with direct
//! theta expansion on a bank of random forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qform_core::QuadForm;
use rep_checker::{
    boolean_theta, check_against, check_numbers, find_split_local_cover_with,
    materialize_witness, precision_bound, resolve_numbers, resolve_with_full_theta, BitsetMode,
    CheckError, CheckedNumber, CoverConfig, DEFAULT_ATTEMPTS,
};

fn halmos() -> QuadForm {
    QuadForm::diagonal(&[1, 2, 7, 13]).unwrap()
}

/// Halmos cover with a light agreement certificate; the full-period
/// certification is exercised separately in the cover tests.
fn halmos_cover() -> rep_checker::SplitLocalCover {
    let config = CoverConfig {
        d_cap: 50,
        residue_cap: 1 << 10,
    };
    find_split_local_cover_with(&halmos(), &config).unwrap()
}

#[test]
fn precision_bound_is_an_exact_ceiling() {
    // ⌈10·√100000⌉ = ⌈√10⁷⌉ = 3163 (3162² = 9999844 < 10⁷ < 3163²).
    assert_eq!(precision_bound(1, 5, 100_000), 3163);
    // Perfect square inside: ⌈20·√25⌉ = 100 exactly.
    assert_eq!(precision_bound(2, 5, 25), 100);
    // ⌈2·√2⌉ = 3.
    assert_eq!(precision_bound(1, 1, 2), 3);
    assert_eq!(precision_bound(1, 1, 0), 0);
}

#[test]
fn halmos_batch_leaves_exactly_five_unresolved() {
    let cover = halmos_cover();
    let numbers: Vec<u64> = (1..=100).collect();
    let outcome = check_numbers(&cover, &numbers, DEFAULT_ATTEMPTS, BitsetMode::Exact).unwrap();
    assert_eq!(outcome.unresolved, vec![5]);
    assert_eq!(outcome.represented.len(), 99);
    // 1 = 1·1² + 0: resolved through the split square, remainder zero.
    let one = outcome.represented.iter().find(|c| c.value == 1).unwrap();
    assert_eq!(
        *one,
        CheckedNumber {
            value: 1,
            x: 1,
            remainder: 0
        }
    );
    // Every hit decomposes as claimed and lifts to a verified vector.
    for hit in &outcome.represented {
        assert_eq!(cover.d * hit.x * hit.x + hit.remainder, hit.value);
        let witness = materialize_witness(&cover, hit).unwrap();
        assert_eq!(cover.parent.evaluate(&witness).unwrap(), hit.value);
    }
}

#[test]
fn ladder_confirms_five_is_the_lone_exception() {
    let cover = halmos_cover();
    let numbers: Vec<u64> = (1..=20_000).collect();
    let outcome = resolve_numbers(&cover, &numbers, DEFAULT_ATTEMPTS).unwrap();
    assert_eq!(outcome.exceptions, vec![5]);
    // The cheap pass settles the overwhelming majority on its own.
    assert!(
        outcome.approximate_unresolved.len() < numbers.len() / 10,
        "approximate pass left {} of {} open",
        outcome.approximate_unresolved.len(),
        numbers.len()
    );
    assert!(outcome.exact_unresolved.contains(&5));
}

#[test]
fn full_theta_fallback_is_the_final_word() {
    let form = halmos();
    assert_eq!(resolve_with_full_theta(&form, &[1, 5]), vec![5]);
    assert_eq!(resolve_with_full_theta(&form, &[]), Vec::<u64>::new());
    assert_eq!(resolve_with_full_theta(&form, &[30, 5, 5, 12]), vec![5]);
}

#[test]
fn foreign_bitmap_is_rejected_by_hash() {
    let cover = halmos_cover();
    let stranger = QuadForm::diagonal(&[1, 1, 1]).unwrap();
    let bits = boolean_theta(&stranger, 100, BitsetMode::Exact).unwrap();
    match check_against(&cover, &bits, &[10, 20], DEFAULT_ATTEMPTS) {
        Err(CheckError::HashMismatch { .. }) => {}
        other => panic!("expected HashMismatch, got {other:?}"),
    }
}

#[test]
fn reused_bitmap_matches_a_fresh_run() {
    let cover = halmos_cover();
    let numbers: Vec<u64> = (1..=500).collect();
    let bound = precision_bound(cover.d, DEFAULT_ATTEMPTS, 500);
    let bits = boolean_theta(&cover.ternary, bound, BitsetMode::Exact).unwrap();
    let reused = check_against(&cover, &bits, &numbers, DEFAULT_ATTEMPTS).unwrap();
    let fresh = check_numbers(&cover, &numbers, DEFAULT_ATTEMPTS, BitsetMode::Exact).unwrap();
    assert_eq!(reused.represented, fresh.represented);
    assert_eq!(reused.unresolved, fresh.unresolved);
}

#[test]
fn random_forms_agree_with_direct_theta_to_500() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let config = CoverConfig {
        d_cap: 50,
        residue_cap: 1 << 12,
    };
    let numbers: Vec<u64> = (1..=500).collect();
    for trial in 0..20 {
        let mut diag: Vec<i64> = (0..4).map(|_| rng.gen_range(1..=6)).collect();
        diag.sort_unstable();
        let form = QuadForm::diagonal(&diag).unwrap();
        let cover = find_split_local_cover_with(&form, &config).unwrap();
        let outcome = resolve_numbers(&cover, &numbers, DEFAULT_ATTEMPTS).unwrap();
        let theta = form.theta_coefficients(500).unwrap();
        let brute: Vec<u64> = (1..=500).filter(|&m| theta[m as usize] == 0).collect();
        assert_eq!(
            outcome.exceptions, brute,
            "trial {trial}: ladder and theta disagree for diag {diag:?}"
        );
        // Sample some witnesses back through the parent form.
        let pass = check_numbers(&cover, &numbers, DEFAULT_ATTEMPTS, BitsetMode::Exact).unwrap();
        for hit in pass.represented.iter().step_by(37) {
            let witness = materialize_witness(&cover, hit).unwrap();
            assert_eq!(form.evaluate(&witness).unwrap(), hit.value);
        }
    }
}

#[test]
fn split_square_multiples_resolve_through_bit_zero() {
    // a = d·k² must land on the always-set zero bit.
    let form = QuadForm::diagonal(&[2, 3, 5, 7]).unwrap();
    let config = CoverConfig {
        d_cap: 50,
        residue_cap: 1 << 12,
    };
    let cover = find_split_local_cover_with(&form, &config).unwrap();
    assert_eq!(cover.d, 2);
    let squares: Vec<u64> = (1..=10).map(|k| 2 * k * k).collect();
    let outcome = check_numbers(&cover, &squares, DEFAULT_ATTEMPTS, BitsetMode::Exact).unwrap();
    assert!(outcome.unresolved.is_empty());
    for hit in &outcome.represented {
        if hit.remainder == 0 {
            assert_eq!(2 * hit.x * hit.x, hit.value);
        }
    }
}
