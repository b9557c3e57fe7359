//! Frozen Eisenstein values, the lower-bound floor, and the cusp-form gap
//! inequality checked against exact theta coefficients.

use eisenstein_bounds::{a_e_halmos, halmos_form, BoundConstants};
use num_rational::BigRational;
use num_traits::Signed;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn small_values_are_frozen() {
    assert_eq!(a_e_halmos(1).unwrap(), rat(56, 71));
    assert_eq!(a_e_halmos(2).unwrap(), rat(144, 71));
    assert_eq!(a_e_halmos(3).unwrap(), rat(84, 71));
    assert_eq!(a_e_halmos(5).unwrap(), rat(240, 71));
    assert!(a_e_halmos(0).is_err());
}

#[test]
fn floor_spot_values() {
    let c = BoundConstants::halmos();
    assert_eq!(c.eisenstein_lower_bound(1), rat(36, 71));
    // χ(3) = −1, so m = 3 picks up the factor 2/4
    assert_eq!(c.eisenstein_lower_bound(3), rat(54, 71));
    // 7 divides the level: no factor
    assert_eq!(c.eisenstein_lower_bound(7), rat(36 * 7, 71));
}

#[test]
fn floor_stays_below_a_e() {
    let c = BoundConstants::halmos();
    for m in 1..=2000u64 {
        let a = a_e_halmos(m).unwrap();
        let floor = c.eisenstein_lower_bound(m);
        assert!(a.is_positive(), "a_E({m}) must be positive");
        assert!(floor <= a, "floor exceeds a_E at m={m}");
    }
}

#[test]
fn cusp_gap_holds_for_small_targets() {
    // |r(m) − a_E(m)| ≤ C_f √m τ(m) for every m ≤ 2000, with r from the
    // exact theta expansion
    let c = BoundConstants::halmos();
    let theta = halmos_form().theta_coefficients(2000).unwrap();
    for m in 1..=2000u64 {
        assert!(
            c.representation_gap_ok(theta[m as usize], m).unwrap(),
            "gap bound fails at m={m}"
        );
    }
}

#[test]
fn forced_representation_excludes_only_five_in_range() {
    // a_E(m) > C_f √m τ(m) certifies r(m) > 0; it cannot hold at m = 5
    // (which the form misses) and indeed fails at many small m, but must
    // agree with the theta series wherever it fires
    let c = BoundConstants::halmos();
    let theta = halmos_form().theta_coefficients(2000).unwrap();
    let mut forced = 0u32;
    for m in 1..=2000u64 {
        if c.forces_representation(m).unwrap() {
            assert!(theta[m as usize] > 0, "forced m={m} but r = 0");
            forced += 1;
        }
    }
    assert!(!c.forces_representation(5).unwrap());
    assert!(forced > 0, "the bound should fire somewhere below 2000");
}
