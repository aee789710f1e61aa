//! Combinatorial decompositions of prime sums: the separation divisor of a squarefree
//! number, the bilinear splitting of `sum_l f(l)`, and Vaughan's identity.

use std::collections::BTreeMap;
use std::ops::Add;

use num_complex::Complex64;
use num_rational::Ratio;

use crate::arith::{factorize, mobius_of, prime_power_base, primes_up_to, Factorization, SpfTable};
use crate::summation::Neumaier;
use crate::{Error, Result};

/// `l = d m n` with `d` the separation divisor of `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SeparationTriple {
    pub d_sep: u64,
    pub m: u64,
    pub n: u64,
    pub r: u32,
}

impl SeparationTriple {
    pub fn l(&self) -> u64 {
        self.d_sep * self.m * self.n
    }
}

/// Prime factors in decreasing order.
fn descending(f: &Factorization) -> Vec<u64> {
    let mut ps: Vec<u64> = f.primes().collect();
    ps.reverse();
    ps
}

fn require_r(r: u32) -> Result<()> {
    if r < 2 {
        Err(Error::OutOfRange(format!("r = {r} must be at least 2")))
    } else {
        Ok(())
    }
}

/// Splits squarefree `l = p1 p2 ...` (decreasing primes) into
/// `d = p1...pr p2r p3r ...`, `m = (p_{r+1}...p_{2r-1})(p_{3r+1}...p_{4r-1})...` and
/// `n = (p_{2r+1}...p_{3r-1})(p_{4r+1}...p_{5r-1})...`.
pub fn separate(l: u64, r: u32) -> Result<SeparationTriple> {
    require_r(r)?;
    if l == 0 {
        return Err(Error::ZeroArgument);
    }
    let f = factorize(l);
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree(l));
    }
    Ok(separate_primes(&descending(&f), r))
}

fn separate_primes(ps: &[u64], r: u32) -> SeparationTriple {
    let r64 = r as usize;
    let (mut d, mut m, mut n) = (1u64, 1u64, 1u64);
    for (idx, &p) in ps.iter().enumerate() {
        let i = idx + 1;
        if i <= r64 || i % r64 == 0 {
            d *= p;
        } else if (i / r64) % 2 == 1 {
            m *= p;
        } else {
            n *= p;
        }
    }
    SeparationTriple { d_sep: d, m, n, r }
}

/// Shared block test: the `j`-th run of `r - 1` primes of `k` lies in
/// `(pi_{r+2j-1+shift}, pi_{r+2j-2+shift})`, and is complete whenever its lower end exists.
fn block_condition(k: u64, d_sep: u64, r: u32, shift: usize) -> bool {
    if r < 2 || k == 0 || d_sep == 0 {
        return false;
    }
    let (fk, fd) = (factorize(k), factorize(d_sep));
    if !fk.is_squarefree() || !fd.is_squarefree() {
        return false;
    }
    let qs = descending(&fk);
    let pis = descending(&fd);
    // pi_j is 1-based
    let pi = |j: usize| -> Option<u64> { pis.get(j - 1).copied() };
    let run = r as usize - 1;
    let r = r as usize;
    let mut j = 1;
    loop {
        let start = (j - 1) * run;
        let chunk = if start < qs.len() { &qs[start..qs.len().min(start + run)] } else { &[][..] };
        let hi = pi(r + 2 * j - 2 + shift);
        let lo = pi(r + 2 * j - 1 + shift);
        if hi.is_none() {
            return chunk.is_empty();
        }
        let hi = hi.unwrap();
        if lo.is_some() && chunk.len() != run {
            return false;
        }
        let lo = lo.unwrap_or(1);
        if chunk.iter().any(|&q| q <= lo || q >= hi) {
            return false;
        }
        j += 1;
    }
}

/// The characteristic function `gamma_d^+`.
pub fn gamma_plus(m: u64, d_sep: u64, r: u32) -> bool {
    block_condition(m, d_sep, r, 0)
}

/// The characteristic function `gamma_d^-`.
pub fn gamma_minus(n: u64, d_sep: u64, r: u32) -> bool {
    block_condition(n, d_sep, r, 1)
}

/// Every triple `(d, m, n)` with `d m n = l`, `gamma_d^+(m)` and `gamma_d^-(n)`.
pub fn separation_factorizations(l: u64, r: u32) -> Result<Vec<SeparationTriple>> {
    require_r(r)?;
    let f = factorize(l);
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree(l));
    }
    let mut out = Vec::new();
    for d in f.divisors() {
        let rest = l / d;
        for m in factorize(rest).divisors() {
            let n = rest / m;
            if gamma_plus(m, d, r) && gamma_minus(n, d, r) {
                out.push(SeparationTriple { d_sep: d, m, n, r });
            }
        }
    }
    Ok(out)
}

/// Number of prime factors of `l` exceeding `z`.
pub fn nu(l: u64, z: f64) -> u64 {
    if l == 0 {
        return 0;
    }
    factorize(l).primes().filter(|&p| p as f64 > z).count() as u64
}

/// Exact comparisons with `z = x^(1/r^2)`, `D = x^(2/r)` and `sqrt(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cutoffs {
    pub x: u64,
    pub r: u32,
}

impl Cutoffs {
    /// `k <= z`, i.e. `k^(r^2) <= x`.
    pub fn at_most_z(&self, k: u64) -> bool {
        (k as u128).checked_pow(self.r * self.r).is_some_and(|v| v <= self.x as u128)
    }

    /// `d <= D`, i.e. `d^r <= x^2`.
    pub fn at_most_d(&self, d: u64) -> bool {
        (d as u128).checked_pow(self.r).is_some_and(|v| v <= (self.x as u128).pow(2))
    }

    /// `k <= sqrt(x)`.
    pub fn at_most_sqrt(&self, k: u64) -> bool {
        (k as u128) * (k as u128) <= self.x as u128
    }

    pub fn z(&self) -> f64 {
        (self.x as f64).powf(1.0 / (self.r * self.r) as f64)
    }
}

/// Values in which the identities are evaluated: exact rationals, reals, or complex numbers.
pub trait Scalar: Copy + Add<Output = Self> + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    /// `self * num / den`.
    fn scale(self, num: i64, den: i64) -> Self;
}

impl Scalar for Ratio<i128> {
    fn zero() -> Self {
        Ratio::from_integer(0)
    }
    fn scale(self, num: i64, den: i64) -> Self {
        self * Ratio::new(num as i128, den as i128)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn scale(self, num: i64, den: i64) -> Self {
        self * num as f64 / den as f64
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn scale(self, num: i64, den: i64) -> Self {
        self * (num as f64 / den as f64)
    }
}

/// The three terms of the bilinear splitting and the plain sum they reproduce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitReport<T> {
    pub lhs: T,
    /// `sum_{d <= D} sum_{m, n <= sqrt x} gamma_d^+(m) gamma_d^-(n) f(d m n)`, over `d m n | P(z)`.
    pub bilinear: T,
    /// `sum_{p, q > z} gamma(q) f(p q)`.
    pub large_q: T,
    /// `sum_{p > z >= q} f(p q)`.
    pub small_q: T,
}

impl<T: Scalar> SplitReport<T> {
    pub fn rhs(&self) -> T {
        self.bilinear + self.large_q + self.small_q
    }
}

struct Support<'a, T, F: Fn(u64) -> T> {
    x: u64,
    f: &'a F,
    spf: SpfTable,
}

impl<T: Scalar, F: Fn(u64) -> T> Support<'_, T, F> {
    /// `f(l)` on squarefree `l <= x`, zero elsewhere.
    fn at(&self, l: u64) -> T {
        if l == 0 || l > self.x || !self.spf.factorize(l).is_squarefree() {
            T::zero()
        } else {
            (self.f)(l)
        }
    }
}

/// `sum_{d <= D} sum_{m, n <= sqrt x} gamma_d^+(m) gamma_d^-(n) f(d m n)`, optionally
/// restricted to `d` free of primes above `z` (equivalently `d m n | P(z)`).
fn bilinear_term<T: Scalar, F: Fn(u64) -> T>(s: &Support<T, F>, cut: Cutoffs, smooth_only: bool) -> T {
    let mut acc = T::zero();
    let mut d = 1u64;
    while cut.at_most_d(d) && d <= s.x {
        let fd = s.spf.factorize(d);
        let largest = fd.primes().last().unwrap_or(1);
        if fd.is_squarefree() && (!smooth_only || cut.at_most_z(largest)) {
            let limit = s.x / d;
            let ms: Vec<u64> =
                (1..=limit).take_while(|&m| cut.at_most_sqrt(m)).filter(|&m| gamma_plus(m, d, cut.r)).collect();
            let ns: Vec<u64> =
                (1..=limit).take_while(|&n| cut.at_most_sqrt(n)).filter(|&n| gamma_minus(n, d, cut.r)).collect();
            for &m in &ms {
                for &n in &ns {
                    if d * m * n <= s.x {
                        acc = acc + s.at(d * m * n);
                    }
                }
            }
        }
        d += 1;
    }
    acc
}

/// Evaluates both sides of `sum_l f(l) = bilinear + sum_{p,q>z} gamma(q) f(pq) + sum_{p>z>=q} f(pq)`
/// for `f` supported on squarefree `l <= x`, with `gamma(q) = 1/(1 + nu(q, z))`.
pub fn bilinear_split_check<T: Scalar, F: Fn(u64) -> T>(f: &F, x: u64, r: u32) -> Result<SplitReport<T>> {
    require_r(r)?;
    if x == 0 {
        return Err(Error::ZeroArgument);
    }
    let cut = Cutoffs { x, r };
    let s = Support { x, f, spf: SpfTable::new(x) };
    let mut lhs = T::zero();
    for l in 1..=x {
        lhs = lhs + s.at(l);
    }
    let bilinear = bilinear_term(&s, cut, true);
    let mut large_q = T::zero();
    let mut small_q = T::zero();
    for p in primes_up_to(x).into_iter().filter(|&p| !cut.at_most_z(p)) {
        for q in 1..=x / p {
            let v = s.at(p * q);
            if v == T::zero() {
                continue;
            }
            if cut.at_most_z(q) {
                small_q = small_q + v;
            } else {
                let big = s.spf.factorize(q).primes().filter(|&t| !cut.at_most_z(t)).count();
                large_q = large_q + v.scale(1, 1 + big as i64);
            }
        }
    }
    Ok(SplitReport { lhs, bilinear, large_q, small_q })
}

/// Both sides of `sum_{l | P(z)} f(l) = sum_{d <= D} sum_{m, n <= sqrt x} gamma_d^+(m) gamma_d^-(n) f(d m n)`
/// for `f` restricted to divisors of `P(z)`.
pub fn smooth_part_sides<T: Scalar, F: Fn(u64) -> T>(f: &F, x: u64, r: u32) -> Result<(T, T)> {
    require_r(r)?;
    let cut = Cutoffs { x, r };
    let spf = SpfTable::new(x.max(1));
    let smooth = |l: u64| -> T {
        let largest = spf.factorize(l).primes().last().unwrap_or(1);
        if cut.at_most_z(largest) {
            f(l)
        } else {
            T::zero()
        }
    };
    let s = Support { x, f: &smooth, spf: SpfTable::new(x.max(1)) };
    let mut lhs = T::zero();
    for l in 1..=x {
        lhs = lhs + s.at(l);
    }
    Ok((lhs, bilinear_term(&s, cut, false)))
}

/// An integer combination `sum c_p log p`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LogCombination(BTreeMap<u64, i64>);

impl LogCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `c log n`.
    pub fn add_log(&mut self, n: u64, c: i64) {
        if c == 0 || n <= 1 {
            return;
        }
        for &(p, e) in factorize(n).factors() {
            *self.0.entry(p).or_insert(0) += c * e as i64;
        }
        self.0.retain(|_, v| *v != 0);
    }

    pub fn combine(&self, other: &Self, c: i64) -> Self {
        let mut out = self.clone();
        for (&p, &v) in &other.0 {
            *out.0.entry(p).or_insert(0) += c * v;
        }
        out.0.retain(|_, v| *v != 0);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &BTreeMap<u64, i64> {
        &self.0
    }

    pub fn value(&self) -> f64 {
        self.0.iter().map(|(&p, &c)| c as f64 * (p as f64).ln()).collect::<Neumaier>().value()
    }
}

/// The three sums of Vaughan's identity as exact log combinations:
/// `sum_{a | n, a <= y} mu(a) log(n/a)`, `sum_{ab | n, a, b <= y} mu(a) Lambda(b)`,
/// `sum_{ab | n, a, b > y} mu(a) Lambda(b)`.
pub fn vaughan_terms_exact(n: u64, y: u64) -> Result<[LogCombination; 3]> {
    if n == 0 || y == 0 {
        return Err(Error::ZeroArgument);
    }
    let f = factorize(n);
    let mut t = [LogCombination::zero(), LogCombination::zero(), LogCombination::zero()];
    for af in f.divisor_factorizations() {
        let a = af.n();
        if a <= y {
            t[0].add_log(n / a, mobius_of(&af) as i64);
        }
    }
    for df in f.divisor_factorizations() {
        for af in df.divisor_factorizations() {
            let (a, b) = (af.n(), df.n() / af.n());
            let mu = mobius_of(&af) as i64;
            let Some(p) = prime_power_base(b) else { continue };
            if a <= y && b <= y {
                t[1].add_log(p, mu);
            } else if a > y && b > y {
                t[2].add_log(p, mu);
            }
        }
    }
    Ok(t)
}

/// `(t1, t2, t3)` in floating point, summed directly with `ln`.
pub fn vaughan_terms(n: u64, y: u64) -> Result<(f64, f64, f64)> {
    if n == 0 || y == 0 {
        return Err(Error::ZeroArgument);
    }
    let divs = factorize(n).divisors();
    let mu = |k: u64| mobius_of(&factorize(k)) as f64;
    let lam = |k: u64| crate::arith::von_mangoldt(k);
    let mut t = [Neumaier::new(), Neumaier::new(), Neumaier::new()];
    for &a in divs.iter().filter(|&&a| a <= y) {
        t[0].add(mu(a) * ((n / a) as f64).ln());
    }
    for &a in &divs {
        for &b in &divs {
            if !(n / a).is_multiple_of(b) {
                continue;
            }
            if a <= y && b <= y {
                t[1].add(mu(a) * lam(b));
            } else if a > y && b > y {
                t[2].add(mu(a) * lam(b));
            }
        }
    }
    Ok((t[0].value(), t[1].value(), t[2].value()))
}

/// `t1 - t2 + t3` equals `Lambda(n)` for `n > y` and vanishes for `n <= y`, compared exactly.
pub fn vaughan_check_exact(n: u64, y: u64) -> Result<bool> {
    let [t1, t2, t3] = vaughan_terms_exact(n, y)?;
    let combo = t1.combine(&t2, -1).combine(&t3, 1);
    let mut want = LogCombination::zero();
    if n > y {
        if let Some(p) = prime_power_base(n) {
            want.add_log(p, 1);
        }
    }
    Ok(combo == want)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separate_examples() {
        assert_eq!(separate(30030, 2).unwrap(), SeparationTriple { d_sep: 1430, m: 7, n: 3, r: 2 });
        assert_eq!(separate(1, 2).unwrap(), SeparationTriple { d_sep: 1, m: 1, n: 1, r: 2 });
        assert_eq!(separate(101, 3).unwrap(), SeparationTriple { d_sep: 101, m: 1, n: 1, r: 3 });
        assert!(separate(12, 2).is_err());
        assert!(separate(30, 1).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma_plus(7, 1430, 2));
        assert!(gamma_minus(3, 1430, 2));
        assert!(!gamma_plus(17, 1430, 2));
        assert!(gamma_plus(1, 1, 2) && gamma_minus(1, 1, 2));
        assert!(!gamma_plus(3, 1, 2));
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu(30030, 6.0), 3);
        assert_eq!(nu(1, 2.5), 0);
        assert_eq!(nu(97, 96.0), 1);
    }

    #[test]
    fn separation_bounds_and_uniqueness() {
        let spf = SpfTable::new(20_000);
        for l in 1..=20_000u64 {
            let f = spf.factorize(l);
            if !f.is_squarefree() {
                continue;
            }
            let p1 = f.primes().last().unwrap_or(1);
            for r in [2u32, 3, 4] {
                let t = separate(l, r).unwrap();
                assert_eq!(t.l(), l);
                assert!(t.n <= t.m && t.m <= t.d_sep * t.n, "{l} {t:?}");
                assert!(t.m * t.m <= l && t.n * t.n <= l);
                // d <= l^(1/r) p1^(r-1)  <=>  d^r <= l p1^(r(r-1))
                let lhs = (t.d_sep as f64).powi(r as i32);
                let rhs = l as f64 * (p1 as f64).powi((r * (r - 1)) as i32);
                assert!(lhs <= rhs * (1.0 + 1e-12));
                if l <= 3000 {
                    assert_eq!(separation_factorizations(l, r).unwrap(), vec![t]);
                }
            }
        }
    }

    fn pm_one(seed: u64) -> impl Fn(u64) -> Ratio<i128> {
        move |l: u64| {
            let h = (l ^ seed).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(17);
            Ratio::from_integer(if h & 1 == 0 { 1 } else { -1 })
        }
    }

    #[test]
    fn bilinear_split_exact() {
        for seed in 0..5 {
            for r in [2u32, 3] {
                let rep = bilinear_split_check(&pm_one(seed), 3000, r).unwrap();
                assert_eq!(rep.lhs, rep.rhs(), "seed={seed} r={r}");
            }
        }
        let single = |l: u64| Ratio::from_integer(if l == 30030 { 1i128 } else { 0 });
        let rep = bilinear_split_check(&single, 100_000, 2).unwrap();
        assert_eq!(rep.lhs, Ratio::from_integer(1));
        assert_eq!(rep.rhs(), Ratio::from_integer(1));
    }

    #[test]
    fn smooth_part_exact() {
        for r in [2u32, 3] {
            let (lhs, rhs) = smooth_part_sides(&pm_one(7), 5000, r).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn vaughan_examples() {
        let (a, b, c) = vaughan_terms(12, 2).unwrap();
        let l2 = 2f64.ln();
        assert!((a - l2).abs() < 1e-12 && b.abs() < 1e-12 && (c + l2).abs() < 1e-12);
        let (a, b, c) = vaughan_terms(101, 10).unwrap();
        assert!((a - 101f64.ln()).abs() < 1e-12 && b == 0.0 && c == 0.0);
        for n in 1..=3000u64 {
            for y in [1u64, 2, 10, 100] {
                assert!(vaughan_check_exact(n, y).unwrap(), "n={n} y={y}");
                let (a, b, c) = vaughan_terms(n, y).unwrap();
                let want = if n > y { crate::arith::von_mangoldt(n) } else { 0.0 };
                assert!((a - b + c - want).abs() < 1e-9);
            }
        }
    }
}
