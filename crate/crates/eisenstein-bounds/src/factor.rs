//! Thin arithmetic helpers over `num-prime`: factorizations as sorted
//! exponent vectors, the divisor count τ, and squarefree tests.

use num_prime::nt_funcs::{factorize64, is_prime64};

/// Prime factorization of n ≥ 1 as (p, exponent), ascending in p.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    factorize64(n)
        .into_iter()
        .map(|(p, e)| (p, e as u32))
        .collect()
}

/// Divisor count τ(n).
pub fn tau(n: u64) -> u64 {
    factorize(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

/// τ from an already-known factorization.
pub fn tau_from_factors(factors: &[(u64, u32)]) -> u64 {
    factors.iter().map(|&(_, e)| e as u64 + 1).product()
}

pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn is_prime(n: u64) -> bool {
    is_prime64(n)
}
