//! Randomized cross-checks: the theta walker against a plain box
//! enumeration, canonical forms against unimodular changes of basis, and
//! the equivalence test against the axioms of an equivalence relation.

use proptest::prelude::*;
use qform_core::{canonical, is_equivalent, QuadForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent representation counter: walk the full integer box
/// |x_i| <= R_i with R_i from the adjugate bound x_i^2 <= B * (A^{-1})_ii,
/// no interval tightening, no LDL. Slow but obviously correct.
fn brute_theta(q: &QuadForm, bound: u64) -> Option<Vec<u64>> {
    let n = q.dim();
    let det = q.determinant();
    let adj = q.adjugate();
    let mut radius = vec![0i64; n];
    let mut volume = 1u128;
    for i in 0..n {
        let num = bound as i128 * adj[i * n + i];
        let r = ((num / det) as f64).sqrt() as i64 + 2;
        radius[i] = r;
        volume = volume.saturating_mul((2 * r + 1) as u128);
    }
    if volume > 40_000_000 {
        return None; // box too large for a brute pass; caller skips
    }
    let mut counts = vec![0u64; bound as usize + 1];
    let mut x = vec![0i64; n];
    for i in 0..n {
        x[i] = -radius[i];
    }
    loop {
        let v = q.evaluate_i128(&x);
        if v >= 0 && v <= bound as i128 {
            counts[v as usize] += 1;
        }
        // odometer
        let mut k = 0;
        loop {
            if k == n {
                return Some(counts);
            }
            if x[k] < radius[k] {
                x[k] += 1;
                break;
            }
            x[k] = -radius[k];
            k += 1;
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, dim: usize) -> QuadForm {
    loop {
        let mut rows = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            for j in 0..=i {
                let v = rng.gen_range(-3..=5);
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        if let Ok(q) = QuadForm::from_gram(&rows) {
            return q;
        }
    }
}

#[test]
fn theta_matches_brute_force_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    while checked < 50 {
        let dim = rng.gen_range(1..=4);
        let q = random_form(&mut rng, dim);
        let Some(brute) = brute_theta(&q, 200) else {
            continue;
        };
        let fast = q.theta_coefficients(200).unwrap();
        assert_eq!(fast, brute, "theta mismatch for gram {:?}", q.gram_rows());
        // positivity agreement doubles as an is_represented check
        for m in 0..=200u64 {
            assert_eq!(q.is_represented(m), brute[m as usize] > 0);
        }
        checked += 1;
    }
}

#[test]
fn find_representation_agrees_with_theta() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf00d);
    for _ in 0..20 {
        let dim = rng.gen_range(1..=4);
        let q = random_form(&mut rng, dim);
        let counts = q.theta_coefficients(60).unwrap();
        for m in 0..=60u64 {
            match q.find_representation(m) {
                Some(x) => {
                    assert_eq!(q.evaluate(&x).unwrap(), m);
                    assert!(counts[m as usize] > 0);
                }
                None => assert_eq!(counts[m as usize], 0),
            }
        }
    }
}

// --- strategies -----------------------------------------------------------

/// Positive definite Gram via M^t M with M nonsingular (small entries).
fn posdef_strategy(dim: usize) -> impl Strategy<Value = QuadForm> {
    prop::collection::vec(-2i64..=2, dim * dim).prop_filter_map("singular", move |m| {
        let mut rows = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut acc = 0i64;
                for k in 0..dim {
                    acc += m[k * dim + i] * m[k * dim + j];
                }
                rows[i][j] = acc;
            }
        }
        QuadForm::from_gram(&rows).ok()
    })
}

/// Unimodular matrix as a short word in elementary operations.
fn unimodular_strategy(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..dim, 0..dim, -2i64..=2, any::<bool>()), 1..6).prop_map(
        move |ops| {
            let mut u = vec![vec![0i64; dim]; dim];
            for (i, row) in u.iter_mut().enumerate() {
                row[i] = 1;
            }
            for (i, j, c, flip) in ops {
                if i != j {
                    for k in 0..dim {
                        let add = c * u[j][k];
                        u[i][k] += add;
                    }
                } else if flip {
                    for k in 0..dim {
                        u[i][k] = -u[i][k];
                    }
                }
            }
            u
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluate_positive_definite(
        q in (1usize..=4).prop_flat_map(posdef_strategy),
        coords in prop::collection::vec(-5i64..=5, 4),
    ) {
        let x = &coords[..q.dim()];
        let v = q.evaluate(x).unwrap();
        if x.iter().all(|&c| c == 0) {
            prop_assert_eq!(v, 0);
        } else {
            prop_assert!(v > 0);
        }
    }

    #[test]
    fn canonical_is_basis_independent(
        (q, u) in (2usize..=4).prop_flat_map(|d| (posdef_strategy(d), unimodular_strategy(d))),
    ) {
        let moved = q.transform(&u).unwrap();
        let c1 = canonical(&q).unwrap();
        let c2 = canonical(&moved).unwrap();
        prop_assert_eq!(c1.gram(), c2.gram());
    }

    #[test]
    fn equivalence_is_an_equivalence_relation(
        (q, u, v) in (2usize..=3).prop_flat_map(|d| {
            (posdef_strategy(d), unimodular_strategy(d), unimodular_strategy(d))
        }),
        other in (2usize..=3).prop_flat_map(posdef_strategy),
    ) {
        let qu = q.transform(&u).unwrap();
        let qv = q.transform(&v).unwrap();
        let sample = [&q, &qu, &qv, &other];
        let mut rel = [[false; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                rel[i][j] = sample[i].dim() == sample[j].dim()
                    && is_equivalent(sample[i], sample[j]).unwrap();
            }
        }
        for i in 0..4 {
            prop_assert!(rel[i][i]);
            for j in 0..4 {
                prop_assert_eq!(rel[i][j], rel[j][i]);
                for k in 0..4 {
                    if rel[i][j] && rel[j][k] {
                        prop_assert!(rel[i][k]);
                    }
                }
                if rel[i][j] {
                    prop_assert_eq!(sample[i].determinant(), sample[j].determinant());
                    prop_assert_eq!(sample[i].level().unwrap(), sample[j].level().unwrap());
                    let pre = 2 * sample[i].max_diagonal().max(1) as u64;
                    prop_assert_eq!(
                        sample[i].theta_coefficients(pre).unwrap(),
                        sample[j].theta_coefficients(pre).unwrap()
                    );
                }
            }
        }
        // transformed copies are recognized
        prop_assert!(rel[0][1] && rel[0][2]);
    }
}
