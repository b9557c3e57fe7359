//! The B measure itself: closed forms, multiplicativity, cross-checks.

use eisenstein_bounds::{b_squared, factorize, BoundConstants};
use eligible_engine::FormProfile;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn b_of_one_is_one() {
    assert!(FormProfile::halmos().b_squared(&[]).is_one());
}

/// For a prime q off the level with χ(q) = −1 and no anisotropy,
/// B(q) = (√q/2)·(q−1)/(q+1); squared and exact.
#[test]
fn character_prime_closed_form() {
    let profile = FormProfile::halmos();
    // χ(5) = (182/5) = −1.
    assert_eq!(profile.chi(5), -1);
    assert_eq!(profile.b_squared_prime(5), rat(5 * 16, 4 * 36));
    // χ(3) = −1 as well: B(3)² = 3·4/(4·16) = 3/16.
    assert_eq!(profile.b_squared_prime(3), rat(3, 16));
    // Primes dividing the level carry no character factor.
    assert_eq!(profile.b_squared_prime(7), rat(7, 4));
    assert_eq!(profile.b_squared_prime(13), rat(13, 4));
}

/// Anisotropic primes drop out of m′ but still count in τ.
#[test]
fn anisotropic_prime_is_sub_unit() {
    let profile = FormProfile::new(728, 182, vec![7]);
    assert_eq!(profile.b_squared_prime(7), rat(1, 4));
    // C_B² picks the anisotropic prime up alongside 2, 3, 5.
    assert_eq!(profile.c_b_squared(), rat(5, 96) * rat(1, 4));
}

#[test]
fn halmos_c_b_squared_matches_config() {
    assert_eq!(
        FormProfile::halmos().c_b_squared(),
        BoundConstants::halmos().c_b_squared
    );
}

/// The Halmos profile agrees with the specialized B² in the bounds crate
/// for every m ≤ 500.
#[test]
fn profile_agrees_with_bounds_crate() {
    let profile = FormProfile::halmos();
    for m in 1..=500u64 {
        let factors = factorize(m);
        assert_eq!(
            profile.b_squared(&factors),
            b_squared(&factors),
            "B({m})² disagrees"
        );
    }
}

/// Strategy: a small factorization with distinct primes.
fn factors_strategy() -> impl Strategy<Value = Vec<(u64, u32)>> {
    let primes = prop::sample::subsequence(
        vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 107, 109],
        0..=6,
    );
    (primes, prop::collection::vec(1u32..=3, 13)).prop_map(|(ps, exps)| {
        ps.into_iter()
            .enumerate()
            .map(|(i, p)| (p, exps[i]))
            .collect()
    })
}

proptest! {
    /// B² is exactly multiplicative across any coprime split, under any of
    /// a few profiles (character, level, and anisotropy all in play).
    #[test]
    fn b_squared_is_multiplicative(factors in factors_strategy(), split_mask in any::<u16>()) {
        let profiles = [
            FormProfile::halmos(),
            FormProfile::new(1, 1, Vec::new()),
            FormProfile::new(88, 44, vec![2, 7]),
        ];
        for profile in &profiles {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, &f) in factors.iter().enumerate() {
                if split_mask & (1 << i) == 0 {
                    left.push(f);
                } else {
                    right.push(f);
                }
            }
            let product = profile.b_squared(&left) * profile.b_squared(&right);
            prop_assert_eq!(profile.b_squared(&factors), product);
        }
    }
}
