//! Small divisors controlling the divisor function.

use super::factor::{factorize, Factorization};
use super::primes::iroot;

/// `tau(n) <= (2 tau(d))^(k log k / log 2)`, with an integer comparison whenever the exponent is integral.
fn general_bound_holds(tau_n: u64, tau_d: u64, k: u32) -> bool {
    let base = 2.0 * tau_d as f64;
    if k.is_power_of_two() {
        let exp = k * k.trailing_zeros();
        return (2 * tau_d as u128).checked_pow(exp).is_none_or(|v| tau_n as u128 <= v);
    }
    let exp = k as f64 * (k as f64).log2();
    (tau_n as f64).ln() <= exp * base.ln() * (1.0 + 1e-12)
}

fn squarefree_bound_holds(tau_n: u64, tau_d: u64, k: u32) -> bool {
    (2 * tau_d as u128).checked_pow(k).is_none_or(|v| tau_n as u128 <= v)
}

/// Whether `d` witnesses the divisor bounds for `n` at level `k`.
pub fn is_witness(f: &Factorization, d: &Factorization, k: u32) -> bool {
    let n = f.n();
    if !n.is_multiple_of(d.n()) || (d.n() as u128).pow(k) > n as u128 {
        return false;
    }
    let (tn, td) = (f.tau(), d.tau());
    general_bound_holds(tn, td, k) && (!f.is_squarefree() || squarefree_bound_holds(tn, td, k))
}

/// A divisor `d <= n^(1/k)` of `n` satisfying the divisor bounds.
///
/// Candidates are tried in decreasing `tau(d)`, ties by smallest `d`.
pub fn divisor_witness(n: u64, k: u32) -> Option<u64> {
    divisor_witness_of(&factorize(n), k)
}

pub fn divisor_witness_of(f: &Factorization, k: u32) -> Option<u64> {
    assert!(k >= 2, "divisor_witness needs k >= 2");
    let limit = iroot(f.n(), k);
    let mut cands: Vec<Factorization> =
        f.divisor_factorizations().into_iter().filter(|d| d.n() <= limit).collect();
    cands.sort_by_key(|d| (std::cmp::Reverse(d.tau()), d.n()));
    cands.into_iter().find(|d| is_witness(f, d, k)).map(|d| d.n())
}

/// `9 * sum_{d | n, d <= n^(1/3)} tau(d)`.
pub fn small_divisor_tau_mass(f: &Factorization) -> u64 {
    let limit = iroot(f.n(), 3);
    9 * f
        .divisor_factorizations()
        .iter()
        .filter(|d| d.n() <= limit)
        .map(|d| d.tau())
        .sum::<u64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(divisor_witness(1, 2), Some(1));
        let d = divisor_witness(30030, 2).unwrap();
        assert!(30030 % d == 0 && d * d <= 30030);
        assert!(64 <= (2 * factorize(d).tau()).pow(2));
        assert_eq!(divisor_witness(101, 3), Some(1));
    }

    #[test]
    fn tau_against_small_divisors() {
        for n in 1..=20_000u64 {
            let f = factorize(n);
            assert!(f.tau() <= small_divisor_tau_mass(&f), "n={n}");
        }
    }

    #[test]
    fn witnesses_exist() {
        for n in 1..=20_000u64 {
            for k in 2..=5 {
                assert!(divisor_witness(n, k).is_some(), "n={n} k={k}");
            }
        }
    }
}
