//! Hilbert-symbol identities and anisotropic prime sets.

use local_densities::{
    anisotropic_primes, diagonal_square_classes, hasse_invariant, hilbert_symbol, is_padic_square,
};
use qform_core::QuadForm;

const SAMPLES: [i128; 10] = [1, -1, 2, -2, 3, 5, 6, -7, 10, 15];
const PRIMES: [u64; 6] = [2, 3, 5, 7, 13, 17];

#[test]
fn symbol_is_symmetric_and_bimultiplicative() {
    for p in PRIMES {
        for &a in &SAMPLES {
            for &b in &SAMPLES {
                assert_eq!(hilbert_symbol(a, b, p), hilbert_symbol(b, a, p));
                for &c in &SAMPLES {
                    assert_eq!(
                        hilbert_symbol(a, b * c, p),
                        hilbert_symbol(a, b, p) * hilbert_symbol(a, c, p),
                        "a={a} b={b} c={c} p={p}"
                    );
                }
            }
        }
    }
}

#[test]
fn symbol_classics() {
    assert_eq!(hilbert_symbol(-1, -1, 2), -1);
    for p in [3u64, 5, 7, 13] {
        assert_eq!(hilbert_symbol(-1, -1, p), 1);
    }
    // squares pair trivially with everything
    for p in PRIMES {
        for &a in &SAMPLES {
            assert_eq!(hilbert_symbol(a, 9, p), 1);
            assert_eq!(hilbert_symbol(a, 16, p), 1);
        }
    }
    // (a, -a) = 1 always
    for p in PRIMES {
        for &a in &SAMPLES {
            assert_eq!(hilbert_symbol(a, -a, p), 1, "a={a} p={p}");
        }
    }
}

#[test]
fn product_formula() {
    // ∏_p (a,b)_p over all primes (only finitely many ≠ 1) times the real
    // symbol is 1
    for &a in &SAMPLES {
        for &b in &SAMPLES {
            let mut product = if a < 0 && b < 0 { -1 } else { 1 };
            let mut n = 2 * a.unsigned_abs() * b.unsigned_abs();
            let mut p = 2u128;
            while p * p <= n {
                if n % p == 0 {
                    while n % p == 0 {
                        n /= p;
                    }
                    product *= hilbert_symbol(a, b, p as u64);
                }
                p += 1;
            }
            if n > 1 {
                product *= hilbert_symbol(a, b, n as u64);
            }
            assert_eq!(product, 1, "a={a} b={b}");
        }
    }
}

#[test]
fn padic_squares() {
    assert!(is_padic_square(9, 2));
    assert!(is_padic_square(17, 2));
    assert!(!is_padic_square(2, 2));
    assert!(!is_padic_square(5, 2));
    assert!(is_padic_square(4, 5));
    assert!(!is_padic_square(10, 5));
    assert!(is_padic_square(-1, 13)); // 13 ≡ 1 (mod 4)
    assert!(!is_padic_square(-1, 7));
}

#[test]
fn square_classes_from_minors() {
    let q = QuadForm::diagonal(&[1, 2, 7, 13]).unwrap();
    assert_eq!(diagonal_square_classes(&q), vec![1, 2, 2 * 2 * 7, 2 * 7 * 2 * 7 * 13]);
}

#[test]
fn anisotropic_sets() {
    let i4 = QuadForm::diagonal(&[1, 1, 1, 1]).unwrap();
    assert_eq!(anisotropic_primes(&i4).unwrap(), vec![2]);
    // sum of four squares is the norm form of the rational quaternions,
    // ramified exactly at 2 and ∞
    assert_eq!(hasse_invariant(&i4, 2), -hilbert_symbol(-1, -1, 2));

    let halmos = QuadForm::diagonal(&[1, 2, 7, 13]).unwrap();
    assert_eq!(anisotropic_primes(&halmos).unwrap(), Vec::<u64>::new());

    let scaled = QuadForm::diagonal(&[1, 1, 4, 4]).unwrap();
    assert_eq!(anisotropic_primes(&scaled).unwrap(), vec![2]);
    let two_two = QuadForm::diagonal(&[1, 1, 2, 2]).unwrap();
    assert_eq!(anisotropic_primes(&two_two).unwrap(), vec![2]);

    let ternary = QuadForm::diagonal(&[1, 1, 1]).unwrap();
    assert!(anisotropic_primes(&ternary).is_err());
}
