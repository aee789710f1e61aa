//! Classical multiplicative functions.

use super::factor::{factorize, Factorization};

pub fn mobius(n: u64) -> i8 {
    mobius_of(&factorize(n))
}

pub fn mobius_of(f: &Factorization) -> i8 {
    if !f.is_squarefree() {
        0
    } else if f.omega().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    euler_phi_of(&factorize(n))
}

pub fn euler_phi_of(f: &Factorization) -> u64 {
    f.factors().iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product()
}

pub fn tau(n: u64) -> u64 {
    factorize(n).tau()
}

/// Number of ordered `k`-tuples of positive integers with product `n`.
///
/// # Panics
/// If `k == 0`.
pub fn tau_k(n: u64, k: u32) -> u64 {
    tau_k_of(&factorize(n), k)
}

pub fn tau_k_of(f: &Factorization, k: u32) -> u64 {
    assert!(k >= 1, "tau_k needs k >= 1");
    f.factors()
        .iter()
        .map(|&(_, e)| binomial(e as u64 + k as u64 - 1, k as u64 - 1))
        .product()
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `Some(p)` when `n = p^e` with `e >= 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    factorize(n).as_prime_power().map(|(p, _)| p)
}

pub fn von_mangoldt(n: u64) -> f64 {
    prime_power_base(n).map_or(0.0, |p| (p as f64).ln())
}
