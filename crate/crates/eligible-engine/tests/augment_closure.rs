//! Square augmentation and the closure loop.

use std::convert::Infallible;

use eisenstein_bounds::BoundConstants;
use eligible_engine::{
    closure_loop, square_augment, ClosureError, EligiblePrime, EligibleSession, FormProfile,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use qform_core::QuadForm;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Checker that classifies candidates by direct representation search.
fn unrep_by(form: &QuadForm) -> impl FnMut(&[u64]) -> Result<Vec<u64>, Infallible> + '_ {
    move |candidates| {
        Ok(candidates
            .iter()
            .copied()
            .filter(|&m| !form.is_represented(m))
            .collect())
    }
}

#[test]
fn toy_augment_squares_both_primes() {
    let primes = vec![
        EligiblePrime {
            prime: 2,
            b_squared: rat(1, 2),
        },
        EligiblePrime {
            prime: 3,
            b_squared: rat(3, 4),
        },
    ];
    let profile = FormProfile::new(1, 1, Vec::new());
    let threshold = rat(1_000, 1);
    let candidates = square_augment(&[2], &primes, &profile, &threshold).unwrap();
    assert_eq!(candidates, vec![8, 18]);
}

#[test]
fn no_exceptions_no_candidates() {
    let session = EligibleSession::new(BoundConstants::halmos(), FormProfile::halmos());
    assert!(session.square_augment(&[]).unwrap().is_empty());
}

/// Printed Halmos constants: the single exception 5 spawns 28 candidates
/// 5p², one per prime up to 107 (B(5·107²) just clears the threshold,
/// B(5·109²) just misses).
#[test]
fn halmos_exception_five_spawns_28() {
    let session = EligibleSession::new(BoundConstants::halmos(), FormProfile::halmos());
    let candidates = session.square_augment(&[5]).unwrap();
    assert_eq!(candidates.len(), 28);
    assert_eq!(candidates[0], 20);
    assert!(candidates.contains(&125));
    assert_eq!(*candidates.last().unwrap(), 5 * 107 * 107);
    assert!(!candidates.contains(&(5 * 109 * 109)));
}

/// The sp-ineligibility shortcut never changes the outcome: compare with
/// the unpruned filter over every eligible prime.
#[test]
fn shortcut_agrees_with_direct_filter() {
    let session = EligibleSession::new(BoundConstants::halmos(), FormProfile::halmos());
    let seeds = [5u64, 14];
    let fast = session.square_augment(&seeds).unwrap();
    let mut direct: Vec<u64> = Vec::new();
    for &s in &seeds {
        for entry in session.eligible_primes() {
            let candidate = s * entry.prime * entry.prime;
            if session.b_squared_of(candidate) <= *session.number_threshold_squared() {
                direct.push(candidate);
            }
        }
    }
    direct.sort_unstable();
    direct.dedup();
    assert_eq!(fast, direct);
}

/// Desk-scale closure for the Halmos form: squeeze the threshold to
/// B ≤ 1 (every true exception of this form is far below it) and check
/// the loop lands on {5} with an empty follow-up round.
#[test]
fn halmos_closure_returns_five() {
    let constants = BoundConstants {
        c_f: rat(1, 1),
        c_e: rat(1, 1),
        c_b_squared: rat(5, 96),
    };
    let session = EligibleSession::new(constants, FormProfile::halmos());
    let form = QuadForm::diagonal(&[1, 2, 7, 13]).unwrap();
    let outcome = closure_loop(&session, unrep_by(&form)).unwrap();
    assert_eq!(outcome.exceptions, vec![5]);
    assert_eq!(outcome.rounds.len(), 2);
    assert_eq!(outcome.rounds[0].new_exceptions, vec![5]);
    assert!(outcome.rounds[1].new_exceptions.is_empty());
}

/// x² + y² + 2z² + 22w² misses exactly {14, 78}.
#[test]
fn kneser_form_closure() {
    let form = QuadForm::diagonal(&[1, 1, 2, 22]).unwrap();
    let profile = FormProfile::new(
        form.level().unwrap(),
        form.determinant(),
        Vec::new(),
    );
    let constants = BoundConstants {
        c_f: rat(1, 1),
        c_e: rat(1, 1),
        c_b_squared: profile.c_b_squared(),
    };
    let session = EligibleSession::new(constants, profile);
    let outcome = closure_loop(&session, unrep_by(&form)).unwrap();
    assert_eq!(outcome.exceptions, vec![14, 78]);
}

/// x² + 3y² + 5z² + 7w² misses exactly {2, 22}.
#[test]
fn one_three_five_seven_closure() {
    let form = QuadForm::diagonal(&[1, 3, 5, 7]).unwrap();
    let profile = FormProfile::new(
        form.level().unwrap(),
        form.determinant(),
        Vec::new(),
    );
    let constants = BoundConstants {
        c_f: rat(1, 1),
        c_e: rat(1, 1),
        c_b_squared: profile.c_b_squared(),
    };
    let session = EligibleSession::new(constants, profile);
    let outcome = closure_loop(&session, unrep_by(&form)).unwrap();
    assert_eq!(outcome.exceptions, vec![2, 22]);
}

/// Checker failures surface as ClosureError::Checker.
#[test]
fn checker_errors_propagate() {
    let constants = BoundConstants {
        c_f: rat(1, 1),
        c_e: rat(1, 1),
        c_b_squared: rat(5, 96),
    };
    let session = EligibleSession::new(constants, FormProfile::halmos());
    let result = closure_loop(&session, |_: &[u64]| Err::<Vec<u64>, _>("solver offline"));
    match result {
        Err(ClosureError::Checker(msg)) => assert_eq!(msg, "solver offline"),
        other => panic!("expected checker error, got {other:?}"),
    }
}
