//! Prime factorization: trial division, then Pollard rho with Brent cycle detection.

use std::sync::OnceLock;

use super::primes::{gcd, is_prime, mul_mod, primes_up_to};

const TRIAL_LIMIT: u64 = 100_000;

fn trial_primes() -> &'static [u64] {
    static P: OnceLock<Vec<u64>> = OnceLock::new();
    P.get_or_init(|| primes_up_to(TRIAL_LIMIT))
}

/// Prime factorization of a positive integer, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub(crate) fn from_parts(n: u64, mut factors: Vec<(u64, u32)>) -> Self {
        factors.sort_unstable();
        Factorization { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_cubefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e <= 2)
    }

    /// `Some((p, e))` when `n = p^e`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    /// Number of divisors.
    pub fn tau(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Divisors paired with their own factorization, ascending by divisor.
    pub fn divisor_factorizations(&self) -> Vec<Factorization> {
        let mut out = vec![Factorization { n: 1, factors: Vec::new() }];
        for &(p, e) in &self.factors {
            let len = out.len();
            for i in 0..len {
                let mut pk = 1u64;
                for k in 1..=e {
                    pk *= p;
                    let mut f = out[i].factors.clone();
                    f.push((p, k));
                    out.push(Factorization { n: out[i].n * pk, factors: f });
                }
            }
        }
        out.sort_unstable_by_key(|f| f.n);
        out
    }
}

fn pollard_brent(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let m = 128;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let (mut x, mut ys);
    let mut g;
    loop {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        loop {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += m;
            if k >= r || g != 1 {
                break;
            }
        }
        r *= 2;
        if g != 1 {
            break;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g != 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn split_composite(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    for c in 1.. {
        if let Some(d) = pollard_brent(n, c) {
            split_composite(d, out);
            split_composite(n / d, out);
            return;
        }
    }
}

/// Factorizes `n >= 1`.
///
/// # Panics
/// If `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize(0)");
    let mut m = n;
    let mut factors = Vec::new();
    for &p in trial_primes() {
        if p * p > m {
            break;
        }
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if m > 1 {
        if m < TRIAL_LIMIT * TRIAL_LIMIT || is_prime(m) {
            factors.push((m, 1));
        } else {
            let mut ps = Vec::new();
            split_composite(m, &mut ps);
            ps.sort_unstable();
            for p in ps {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }
    Factorization::from_parts(n, factors)
}
