//! The sequence `a_n = #{(a, c) : a^2 + c^4 = n}`: congruence sums, main terms, densities,
//! remainders, and the prime-counting experiment over `a^2 + b^4`.

use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::arith::{chi4, factorize, iroot, is_prime, isqrt, primes_up_to, sqrt_mod_composite, Factorization};
use crate::congruences::{rho_b_of, rho_of};
pub use crate::quadrature::{kappa, kappa_closed_form};
use crate::summation::{neumaier_sum, Neumaier};
use crate::{Error, Result};

/// Weight of `b = c^2` in the theta series: 1 for `c = 0`, 2 otherwise.
fn theta_weight(c: u64) -> u64 {
    if c == 0 {
        1
    } else {
        2
    }
}

/// Number of integer pairs `(a, c)` with `a^2 + c^4 = n`.
pub fn a_n(n: u64) -> u64 {
    let mut count = 0;
    for c in 0..=iroot(n, 4) {
        let rest = n - c.pow(4);
        let a = isqrt(rest);
        if a * a == rest {
            count += theta_weight(c) * if a == 0 { 1 } else { 2 };
        }
    }
    count
}

/// `#{a : |a| <= amax, (a, c) != (0, 0)}` paired with the largest `|a|`.
fn a_range(x: u64, c: u64) -> u64 {
    isqrt(x - c.pow(4))
}

/// `A(x) = sum_{n <= x} a_n`, enumerated over `c` then `a`.
pub fn a_total(x: u64) -> u64 {
    (0..=iroot(x, 4))
        .map(|c| {
            let span = 2 * a_range(x, c) + 1 - (c == 0) as u64;
            theta_weight(c) * span
        })
        .sum()
}

/// Count of `a` in `[-amax, amax]` with `a = alpha (mod d)`.
fn count_in_class(alpha: u64, d: u64, amax: u64) -> u64 {
    // a = alpha + k d with -amax <= a <= amax
    let lo = -(amax as i128);
    let hi = amax as i128;
    let (alpha, d) = (alpha as i128, d as i128);
    let kmin = (lo - alpha).div_euclid(d) + ((lo - alpha).rem_euclid(d) != 0) as i128;
    let kmax = (hi - alpha).div_euclid(d);
    (kmax - kmin + 1).max(0) as u64
}

/// `A_d(x) = sum_{n <= x, d | n} a_n`, counted through the roots of `alpha^2 = -c^4 (mod d)`.
pub fn a_d(x: u64, d: u64) -> u64 {
    a_d_with(x, &factorize(d))
}

pub fn a_d_with(x: u64, f: &Factorization) -> u64 {
    let d = f.n();
    let mut total = 0;
    for c in 0..=iroot(x, 4) {
        let amax = a_range(x, c);
        let c4 = (c as u128).pow(4) % d as u128;
        let roots = sqrt_mod_composite(-(c4 as i64), f);
        let mut hits: u64 = roots.iter().map(|&alpha| count_in_class(alpha, d, amax)).sum();
        if c == 0 {
            hits -= 1; // the pair (0, 0)
        }
        total += theta_weight(c) * hits;
    }
    total
}

/// `d * M_d(x) = sum_c w(c) rho(c^2; d) #{a : 0 < a^2 + c^4 <= x}`, an integer.
pub fn m_d_numerator(x: u64, f: &Factorization) -> u64 {
    let d = f.n();
    (0..=iroot(x, 4))
        .map(|c| {
            let span = 2 * a_range(x, c) + 1 - (c == 0) as u64;
            let c2 = ((c as u128 * c as u128) % d as u128) as i64;
            theta_weight(c) * rho_b_of(c2, f) * span
        })
        .sum()
}

/// `M_d(x) = (1/d) sum_{0 < a^2 + b^2 <= x} theta(b) rho(b; d)`.
pub fn m_d(x: u64, d: u64) -> f64 {
    m_d_numerator(x, &factorize(d)) as f64 / d as f64
}

fn require_cubefree(f: &Factorization) -> Result<()> {
    if f.is_cubefree() {
        Ok(())
    } else {
        Err(Error::NotCubefree(f.n()))
    }
}

/// Density `g(d)` for cubefree `d`.
pub fn g(d: u64) -> Result<Ratio<i64>> {
    g_of(&factorize(d))
}

pub fn g_of(f: &Factorization) -> Result<Ratio<i64>> {
    require_cubefree(f)?;
    let mut acc = Ratio::from_integer(1i64);
    for &(p, e) in f.factors() {
        let pi = p as i64;
        let one_minus = Ratio::new(pi - 1, pi);
        let local = match (p, e) {
            (2, 2) => Ratio::new(1, 4),
            (_, 1) => (Ratio::from_integer(1) + one_minus * chi4(pi).to_i64()) / pi,
            _ => {
                let rho_p = rho_of(&factorize(p)) as i64;
                (Ratio::from_integer(1) + one_minus * rho_p) / (pi * pi)
            }
        };
        acc *= local;
    }
    Ok(acc)
}

/// The error-term weight `h(d)` for cubefree `d`.
pub fn h(d: u64) -> Result<Ratio<i64>> {
    h_of(&factorize(d))
}

pub fn h_of(f: &Factorization) -> Result<Ratio<i64>> {
    require_cubefree(f)?;
    let mut acc = Ratio::from_integer(1i64);
    for &(p, e) in f.factors() {
        let pi = p as i64;
        let rho_p = rho_of(&factorize(p)) as i64;
        acc *= if e == 1 { Ratio::new(1 + 2 * rho_p, pi) } else { Ratio::new(pi + 2 * rho_p, pi * pi) };
    }
    Ok(acc)
}

/// One modulus of the remainder scan.
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderRow {
    pub d: u64,
    pub a_d: u64,
    pub m_d: f64,
    pub g_d: Ratio<i64>,
    pub r_d: f64,
}

/// All cubefree moduli up to a bound, with the summed absolute remainder.
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderScan {
    pub x: u64,
    pub d_max: u64,
    pub a_x: u64,
    pub rows: Vec<RemainderRow>,
    pub sum_abs_r: f64,
    /// `sum |r_d| / (D^(1/4) x^(9/16))`.
    pub normalized: f64,
}

/// `r_d(x) = A_d(x) - g(d) A(x)`, exact before the final rounding.
pub fn r_d_exact(a_d: u64, g_d: Ratio<i64>, a_x: u64) -> Ratio<i128> {
    let g = Ratio::new(*g_d.numer() as i128, *g_d.denom() as i128);
    Ratio::from_integer(a_d as i128) - g * a_x as i128
}

fn ratio_to_f64(r: Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn remainder_row(x: u64, a_x: u64, f: &Factorization) -> Result<RemainderRow> {
    let g_d = g_of(f)?;
    let a = a_d_with(x, f);
    Ok(RemainderRow {
        d: f.n(),
        a_d: a,
        m_d: m_d_numerator(x, f) as f64 / f.n() as f64,
        g_d,
        r_d: ratio_to_f64(r_d_exact(a, g_d, a_x)),
    })
}

pub fn remainder_scan(x: u64, d_max: u64) -> RemainderScan {
    let a_x = a_total(x);
    let rows: Vec<RemainderRow> = (1..=d_max)
        .into_par_iter()
        .map(factorize)
        .filter(|f| f.is_cubefree())
        .map(|f| remainder_row(x, a_x, &f).expect("cubefree"))
        .collect();
    let sum_abs_r = neumaier_sum(rows.iter().map(|r| r.r_d.abs()));
    let scale = (d_max as f64).powf(0.25) * (x as f64).powf(9.0 / 16.0);
    RemainderScan { x, d_max, a_x, rows, sum_abs_r, normalized: sum_abs_r / scale }
}

/// `prod_{p <= P} (1 - chi4(p)/p)`.
pub fn h_partial(p_max: u64) -> f64 {
    primes_up_to(p_max)
        .into_iter()
        .map(|p| 1.0 - chi4(p as i64).to_i64() as f64 / p as f64)
        .product()
}

/// Observed against predicted prime-weighted count over `a^2 + b^4 <= x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub x: u64,
    pub observed: f64,
    pub predicted: f64,
    pub ratio: f64,
    /// Pairs `(a, b)` with `a^2 + b^4` a prime power.
    pub pair_count: u64,
    pub runtime_seconds: f64,
}

/// Prime powers `p^k <= x` with `k >= 2`, sorted, with their `log p`.
fn higher_prime_powers(x: u64) -> Vec<(u64, f64)> {
    let mut out = Vec::new();
    for p in primes_up_to(isqrt(x)) {
        let lp = (p as f64).ln();
        let mut q = p * p;
        loop {
            out.push((q, lp));
            match q.checked_mul(p) {
                Some(next) if next <= x => q = next,
                _ => break,
            }
        }
    }
    out.sort_by_key(|&(q, _)| q);
    out
}

fn lambda_lookup(n: u64, powers: &[(u64, f64)]) -> Option<f64> {
    if n.is_multiple_of(2) {
        return n.is_power_of_two().then_some(std::f64::consts::LN_2);
    }
    if is_prime(n) {
        return Some((n as f64).ln());
    }
    powers.binary_search_by_key(&n, |&(q, _)| q).ok().map(|i| powers[i].1)
}

pub const THEOREM1_MAX_X: u64 = 100_000_000_000;

/// `sum_{a, b >= 1, a^2 + b^4 <= x} Lambda(a^2 + b^4)` against `(4/pi) kappa x^(3/4)`.
///
/// Pairs are counted with multiplicity; each `b` is summed separately and the
/// per-`b` totals are combined in order, so the result does not depend on the thread count.
pub fn theorem1_experiment(x: u64) -> Result<ExperimentReport> {
    if x > THEOREM1_MAX_X {
        return Err(Error::OutOfRange(format!("x = {x} exceeds {THEOREM1_MAX_X}")));
    }
    let start = Instant::now();
    let powers = higher_prime_powers(x);
    let bmax = iroot(x, 4);
    let per_b: Vec<(f64, u64)> = (1..=bmax)
        .into_par_iter()
        .map(|b| {
            let b4 = b.pow(4);
            let mut acc = Neumaier::new();
            let mut pairs = 0;
            for a in 1..=isqrt(x - b4) {
                if let Some(l) = lambda_lookup(a * a + b4, &powers) {
                    acc.add(l);
                    pairs += 1;
                }
            }
            (acc.value(), pairs)
        })
        .collect();
    let observed = neumaier_sum(per_b.iter().map(|p| p.0));
    let pair_count = per_b.iter().map(|p| p.1).sum();
    let predicted = 4.0 / std::f64::consts::PI * kappa() * (x as f64).powf(0.75);
    Ok(ExperimentReport {
        x,
        observed,
        predicted,
        ratio: observed / predicted,
        pair_count,
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Theta weight of an arbitrary integer: number of `c` with `c^2 = b`.
pub fn theta(b: i64) -> u64 {
    if b < 0 {
        return 0;
    }
    let r = isqrt(b as u64);
    if r * r != b as u64 {
        0
    } else if r == 0 {
        1
    } else {
        2
    }
}

fn gaussians_of_norm(n: u64) -> Vec<crate::GaussianInt> {
    let r = isqrt(n) as i64;
    let mut out = Vec::new();
    for a in -r..=r {
        let rest = n - (a * a) as u64;
        let b = isqrt(rest) as i64;
        if (b * b) as u64 == rest {
            out.push(crate::GaussianInt::new(a, b));
            if b != 0 {
                out.push(crate::GaussianInt::new(a, -b));
            }
        }
    }
    out
}

/// Both sides of `4 a_{mn} = sum_{|w|^2 = m} sum_{|z|^2 = n} theta(Re(conj(w) z))`.
pub fn factorization_identity_sides(m: u64, n: u64) -> Result<(u64, u64)> {
    if crate::arith::gcd(m, n) != 1 || n.is_multiple_of(2) {
        return Err(Error::Hypothesis(format!("need (m, n) = 1 and n odd, got ({m}, {n})")));
    }
    let ws = gaussians_of_norm(m);
    let zs = gaussians_of_norm(n);
    let mut rhs = 0;
    for w in &ws {
        for z in &zs {
            rhs += theta(w.re * z.re + w.im * z.im);
        }
    }
    let mn = m.checked_mul(n).ok_or(Error::Overflow)?;
    Ok((4 * a_n(mn), rhs))
}

pub fn factorization_identity_check(m: u64, n: u64) -> Result<bool> {
    factorization_identity_sides(m, n).map(|(l, r)| l == r)
}

/// Checks of the local density conditions over primes up to `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct GAxiomsReport {
    pub y: u64,
    pub primes_checked: u64,
    /// Primes failing `0 <= g(p^2) <= g(p) < 1`, `g(p) <= 2/p` or `g(p^2) <= 4/p^2`.
    pub violations: Vec<u64>,
    /// `sum_{p <= y} g(p) - log log y`.
    pub mertens_offset: f64,
}

pub fn g_axioms_report(y: u64) -> GAxiomsReport {
    let mut violations = Vec::new();
    let mut sum = Neumaier::new();
    let primes = primes_up_to(y);
    for &p in &primes {
        let gp = g(p).expect("prime");
        let gp2 = g(p * p).expect("prime square");
        let pi = p as i64;
        let ok = Ratio::from_integer(0) <= gp2
            && gp2 <= gp
            && gp < Ratio::from_integer(1)
            && gp <= Ratio::new(2, pi)
            && gp2 <= Ratio::new(4, pi * pi);
        if !ok {
            violations.push(p);
        }
        sum.add(*gp.numer() as f64 / *gp.denom() as f64);
    }
    GAxiomsReport {
        y,
        primes_checked: primes.len() as u64,
        violations,
        mertens_offset: sum.value() - (y as f64).ln().ln(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_n_examples() {
        assert_eq!(a_n(1), 4);
        assert_eq!(a_n(5), 4);
        assert_eq!(a_n(17), 8);
        assert_eq!(a_n(3), 0);
    }

    #[test]
    fn totals_match_pointwise_sums() {
        let mut running = 0;
        for x in 1..=10_000u64 {
            running += a_n(x);
            if x % 97 == 0 || x <= 100 {
                assert_eq!(a_total(x), running, "x={x}");
            }
        }
        assert_eq!(a_total(16), 24);
        assert_eq!(a_total(1), 4);
    }

    fn a_d_brute(x: u64, d: u64) -> u64 {
        (1..=x).filter(|n| n % d == 0).map(a_n).sum()
    }

    #[test]
    fn a_d_matches_pointwise() {
        for d in 1..=50 {
            for x in [1u64, 16, 100, 1234, 10_000] {
                assert_eq!(a_d(x, d), a_d_brute(x, d), "x={x} d={d}");
            }
        }
        assert_eq!(a_d(777, 1), a_total(777));
    }

    #[test]
    fn m_1_is_close_to_a() {
        for x in [10_000u64, 1_000_000] {
            let diff = (m_d(x, 1) - a_total(x) as f64).abs();
            assert_eq!(diff, 0.0, "rho(b; 1) = 1 makes M_1 = A exactly");
        }
    }

    #[test]
    fn density_examples() {
        assert_eq!(g(5).unwrap(), Ratio::new(9, 25));
        assert_eq!(g(4).unwrap(), Ratio::new(1, 4));
        assert_eq!(g(2).unwrap(), Ratio::new(1, 2));
        assert_eq!(g(3).unwrap(), Ratio::new(1, 9));
        assert_eq!(h(5).unwrap(), Ratio::from_integer(1));
        assert_eq!(h(1).unwrap(), Ratio::from_integer(1));
        assert!(g(8).is_err());
        assert!(h(27).is_err());
    }

    #[test]
    fn remainder_at_one_vanishes() {
        for x in [1u64, 10, 1000, 123_456] {
            let scan = remainder_scan(x, 1);
            assert_eq!(scan.rows.len(), 1);
            assert_eq!(scan.rows[0].r_d, 0.0);
        }
    }

    #[test]
    fn partial_euler_product() {
        assert_eq!(h_partial(2), 1.0);
        assert!((h_partial(1_000_000) - 4.0 / std::f64::consts::PI).abs() < 0.01);
    }

    #[test]
    fn theorem1_small() {
        let r = theorem1_experiment(100).unwrap();
        let l = |p: f64| p.ln();
        let exact = 2.0 * l(2.0) + 2.0 * l(5.0) + 2.0 * l(17.0) + l(37.0) + l(41.0) + 2.0 * l(97.0);
        assert!((r.observed - exact).abs() < 1e-9);
        assert_eq!(r.pair_count, 10);
        assert_eq!(theorem1_experiment(1).unwrap().observed, 0.0);
        assert!(theorem1_experiment(THEOREM1_MAX_X + 1).is_err());
    }

    fn lambda_brute_sum(x: u64) -> f64 {
        let mut total = 0.0;
        for b in 1..=iroot(x, 4) {
            for a in 1..=isqrt(x - b.pow(4)) {
                total += crate::arith::von_mangoldt(a * a + b.pow(4));
            }
        }
        total
    }

    #[test]
    fn theorem1_matches_von_mangoldt() {
        for x in [2u64, 17, 32, 1000, 50_000] {
            let r = theorem1_experiment(x).unwrap();
            assert!((r.observed - lambda_brute_sum(x)).abs() < 1e-9, "x={x}");
        }
    }

    #[test]
    fn factorization_identity_examples() {
        assert_eq!(factorization_identity_sides(1, 5).unwrap(), (16, 16));
        assert!(factorization_identity_check(2, 17).unwrap());
        assert!(factorization_identity_check(13, 1).unwrap());
        assert!(factorization_identity_check(2, 4).is_err());
    }

    #[test]
    fn g_axioms_small() {
        let r = g_axioms_report(10_000);
        assert!(r.violations.is_empty());
        for p in [3u64, 7, 11, 19] {
            assert_eq!(g(p).unwrap(), Ratio::new(1, (p * p) as i64));
        }
    }
}
