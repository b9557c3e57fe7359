//! The closed-form local factors must agree exactly with the reduction-map
//! recursion — every m up to 500 at the three critical primes, the generic
//! factor at a sample of split/inert primes, and the full a_E assembly on
//! composite targets.

use eisenstein_bounds::{a_e_halmos, beta13, beta2, beta7, chi, generic_factor, halmos_form};
use local_densities::PrimeCtx;
use num_bigint::BigInt;
use num_rational::BigRational;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn closed_betas_match_recursion_up_to_500() {
    let q = halmos_form();
    for (p, closed) in [
        (2u64, beta2 as fn(u64) -> BigRational),
        (7, beta7),
        (13, beta13),
    ] {
        let mut ctx = PrimeCtx::new(&q, p).unwrap();
        for m in 1..=500u64 {
            assert_eq!(closed(m), ctx.beta(m), "β_{p}({m})");
        }
    }
}

#[test]
fn unit_spot_values() {
    assert_eq!(beta2(1), rat(3, 4));
    assert_eq!(beta7(1), rat(8, 7));
    assert_eq!(beta13(1), rat(14, 13));
}

#[test]
fn generic_factor_matches_recursion() {
    let q = halmos_form();
    for p in [3u64, 5, 11, 17, 19] {
        let c = chi(p);
        let mut ctx = PrimeCtx::new(&q, p).unwrap();
        // β_p at units is 1 − χ/p²
        assert_eq!(
            ctx.beta(1),
            rat((p * p) as i64 - c as i64, (p * p) as i64),
            "unit density at p={p}"
        );
        for e in 1..=3u32 {
            let m = p.pow(e);
            let relative = ctx.beta(m) * rat((p * p) as i64, (p * p) as i64 - c as i64);
            assert_eq!(relative, generic_factor(p, e, c), "p={p} e={e}");
        }
    }
}

#[test]
fn a_e_assembly_matches_recursion_product() {
    let q = halmos_form();
    for m in [6u64, 12, 30, 45, 90, 147, 169, 242, 350, 363, 480] {
        let mut val = BigRational::new(BigInt::from(182u32 * m as u32), BigInt::from(213u32));
        let mut rest = m;
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e == 0 && 728 % p != 0 {
                continue;
            }
            let mut ctx = PrimeCtx::new(&q, p).unwrap();
            let beta = ctx.beta(m);
            if 728 % p == 0 {
                val *= beta;
            } else {
                let c = chi(p);
                val *= beta * rat((p * p) as i64, (p * p) as i64 - c as i64);
            }
        }
        assert_eq!(rest, 1, "target list must stay 13-smooth");
        assert_eq!(val, a_e_halmos(m).unwrap(), "a_E({m})");
    }
}
