//! Arithmetic in Z[i].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{factorize, gcd, inv_mod, is_prime, isqrt, sqrt_mod_prime_power, Factorization};
use crate::{Error, Result};

const BOUND: i128 = 1 << 62;

/// A Gaussian integer `re + i*im`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    fn from_wide(re: i128, im: i128) -> Result<Self> {
        if re.abs() > BOUND || im.abs() > BOUND {
            return Err(Error::Overflow);
        }
        Ok(GaussianInt::new(re as i64, im as i64))
    }

    pub fn norm(self) -> u128 {
        let (a, b) = (self.re as i128, self.im as i128);
        (a * a + b * b) as u128
    }

    pub fn conj(self) -> Self {
        GaussianInt::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// Odd means coprime to `1+i`, i.e. odd norm.
    pub fn is_odd(self) -> bool {
        (self.re + self.im) & 1 == 1
    }

    pub fn is_primitive(self) -> bool {
        gcd(self.re.unsigned_abs(), self.im.unsigned_abs()) == 1
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Self::from_wide(self.re as i128 + rhs.re as i128, self.im as i128 + rhs.im as i128)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Self::from_wide(self.re as i128 - rhs.re as i128, self.im as i128 - rhs.im as i128)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let (a, b, c, d) = (self.re as i128, self.im as i128, rhs.re as i128, rhs.im as i128);
        Self::from_wide(a * c - b * d, a * d + b * c)
    }

    pub fn checked_scale(self, k: i64) -> Result<Self> {
        Self::from_wide(self.re as i128 * k as i128, self.im as i128 * k as i128)
    }

    pub fn checked_pow(self, e: u32) -> Result<Self> {
        let mut acc = GaussianInt::ONE;
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d` when `d` divides `self`.
    pub fn div_exact(self, d: Self) -> Option<Self> {
        let n = d.norm() as i128;
        if n == 0 {
            return None;
        }
        let (a, b, c, e) = (self.re as i128, self.im as i128, d.re as i128, d.im as i128);
        let (re, im) = (a * c + b * e, b * c - a * e);
        if re % n != 0 || im % n != 0 {
            return None;
        }
        Self::from_wide(re / n, im / n).ok()
    }

    pub fn is_divisible_by(self, d: Self) -> bool {
        self.div_exact(d).is_some()
    }

    /// Quotient rounded to the nearest lattice point.
    fn div_round(self, d: Self) -> Self {
        let n = d.norm() as i128;
        let (a, b, c, e) = (self.re as i128, self.im as i128, d.re as i128, d.im as i128);
        let (re, im) = (a * c + b * e, b * c - a * e);
        let round = |x: i128| (2 * x + n).div_euclid(2 * n);
        GaussianInt::new(round(re) as i64, round(im) as i64)
    }

    /// Componentwise congruence to zero modulo a rational integer.
    pub fn is_zero_mod(self, m: u64) -> bool {
        let m = m as i64;
        self.re.rem_euclid(m) == 0 && self.im.rem_euclid(m) == 0
    }

    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re as f64, self.im as f64)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0 {
            write!(f, "{}-{}i", self.re, self.im.unsigned_abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("gaussian add overflow")
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("gaussian sub overflow")
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("gaussian mul overflow")
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> Self {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        GaussianInt::new(re, 0)
    }
}

pub fn norm(z: GaussianInt) -> u128 {
    z.norm()
}

pub fn conj(z: GaussianInt) -> GaussianInt {
    z.conj()
}

pub fn mul(a: GaussianInt, b: GaussianInt) -> Result<GaussianInt> {
    a.checked_mul(b)
}

pub fn add(a: GaussianInt, b: GaussianInt) -> Result<GaussianInt> {
    a.checked_add(b)
}

pub fn sub(a: GaussianInt, b: GaussianInt) -> Result<GaussianInt> {
    a.checked_sub(b)
}

pub fn is_primitive(z: GaussianInt) -> bool {
    z.is_primitive()
}

/// A unit of Z[i].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::MinusOne, Unit::MinusI];

    pub fn value(self) -> GaussianInt {
        match self {
            Unit::One => GaussianInt::new(1, 0),
            Unit::I => GaussianInt::new(0, 1),
            Unit::MinusOne => GaussianInt::new(-1, 0),
            Unit::MinusI => GaussianInt::new(0, -1),
        }
    }

    pub fn apply(self, z: GaussianInt) -> GaussianInt {
        match self {
            Unit::One => z,
            Unit::I => GaussianInt::new(-z.im, z.re),
            Unit::MinusOne => -z,
            Unit::MinusI => GaussianInt::new(z.im, -z.re),
        }
    }
}

fn satisfies_primary(z: GaussianInt) -> bool {
    z.re & 1 == 1 && (z.im - z.re + 1).rem_euclid(4) == 0
}

/// A primary Gaussian integer: `re` odd and `im = re - 1 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimaryGaussian(GaussianInt);

impl PrimaryGaussian {
    pub fn new(z: GaussianInt) -> Result<Self> {
        if satisfies_primary(z) {
            Ok(PrimaryGaussian(z))
        } else {
            Err(Error::NotPrimary(z.to_string()))
        }
    }

    pub fn one() -> Self {
        PrimaryGaussian(GaussianInt::ONE)
    }

    pub fn inner(self) -> GaussianInt {
        self.0
    }

    pub fn conj(self) -> Self {
        PrimaryGaussian(self.0.conj())
    }

    pub fn norm(self) -> u128 {
        self.0.norm()
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        Ok(PrimaryGaussian(self.0.checked_mul(rhs.0)?))
    }
}

impl fmt::Display for PrimaryGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_primary(z: GaussianInt) -> bool {
    satisfies_primary(z)
}

/// The unique primary associate `unit * z` of an odd `z`.
pub fn primary_associate(z: GaussianInt) -> Result<(PrimaryGaussian, Unit)> {
    if !z.is_odd() {
        return Err(Error::NotOdd(z.to_string()));
    }
    for u in Unit::ALL {
        let w = u.apply(z);
        if satisfies_primary(w) {
            return Ok((PrimaryGaussian(w), u));
        }
    }
    unreachable!("every odd Gaussian integer has a primary associate")
}

fn normalize_gcd(g: GaussianInt) -> GaussianInt {
    if g.is_odd() {
        return primary_associate(g).expect("odd").0.inner();
    }
    Unit::ALL
        .into_iter()
        .map(|u| u.apply(g))
        .find(|w| w.re > 0 && w.im >= 0)
        .expect("one associate lies in the first quadrant")
}

/// Greatest common divisor, normalized to the primary associate when odd.
pub fn ggcd(a: GaussianInt, b: GaussianInt) -> Result<GaussianInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = (a, b);
    while !y.is_zero() {
        let q = x.div_round(y);
        let r = x - q * y;
        (x, y) = (y, r);
    }
    Ok(normalize_gcd(x))
}

/// The representation `p = r^2 + s^2` with `r` odd and `r, s > 0`.
pub fn two_squares(p: u64) -> Result<(u64, u64)> {
    if p % 4 != 1 || !is_prime(p) {
        return Err(Error::NotSplitPrime(p));
    }
    let root = sqrt_mod_prime_power(-1, p, 1)[0];
    let (mut a, mut b) = (p, root);
    let bound = isqrt(p);
    while b > bound {
        (a, b) = (b, a % b);
    }
    let _ = a;
    let other = isqrt(p - b * b);
    debug_assert_eq!(b * b + other * other, p);
    Ok(if b % 2 == 1 { (b, other) } else { (other, b) })
}

/// Factorization of a primary number into primary Gaussian primes.
///
/// Split primes come in conjugate pairs listed next to each other; inert primes `q = 3 (mod 4)`
/// appear as their primary associate `-q`.
pub fn gaussian_factorize(z: PrimaryGaussian) -> Vec<(PrimaryGaussian, u32)> {
    let n = u64::try_from(z.norm()).expect("norm fits in 64 bits");
    let f = factorize(n);
    let mut rest = z.inner();
    let mut out = Vec::new();
    for &(p, e) in f.factors() {
        if p % 4 == 3 {
            let q = PrimaryGaussian(GaussianInt::new(-(p as i64), 0));
            out.push((q, e / 2));
            for _ in 0..e / 2 {
                rest = rest.div_exact(q.inner()).expect("inert prime divides");
            }
            continue;
        }
        let (r, s) = two_squares(p).expect("split prime");
        let pi = primary_associate(GaussianInt::new(r as i64, s as i64)).unwrap().0;
        let mut k = 0;
        while let Some(q) = rest.div_exact(pi.inner()) {
            rest = q;
            k += 1;
        }
        let bar = pi.conj();
        for _ in k..e {
            rest = rest.div_exact(bar.inner()).expect("conjugate divides");
        }
        let (lo, hi) = if pi.inner().im >= 0 { (pi, bar) } else { (bar, pi) };
        let (klo, khi) = if pi.inner().im >= 0 { (k, e - k) } else { (e - k, k) };
        if klo > 0 {
            out.push((lo, klo));
        }
        if khi > 0 {
            out.push((hi, khi));
        }
    }
    debug_assert_eq!(rest, GaussianInt::ONE);
    out
}

/// All primary `z` with `|z|^2 = n`, sorted.
pub fn primaries_of_norm(n: u64) -> Vec<PrimaryGaussian> {
    if n == 0 || n.is_multiple_of(2) {
        return Vec::new();
    }
    primaries_of_norm_with(&factorize(n))
}

pub fn primaries_of_norm_with(f: &Factorization) -> Vec<PrimaryGaussian> {
    let mut acc = vec![GaussianInt::ONE];
    for &(p, e) in f.factors() {
        if p == 2 {
            return Vec::new();
        }
        if p % 4 == 3 {
            if e % 2 == 1 {
                return Vec::new();
            }
            let q = GaussianInt::new(-(p as i64), 0).checked_pow(e / 2).expect("in range");
            acc.iter_mut().for_each(|z| *z = *z * q);
            continue;
        }
        let (r, s) = two_squares(p).expect("split prime");
        let pi = primary_associate(GaussianInt::new(r as i64, s as i64)).unwrap().0.inner();
        let bar = pi.conj();
        let mut choices = Vec::with_capacity(e as usize + 1);
        for k in 0..=e {
            choices.push(pi.checked_pow(k).unwrap() * bar.checked_pow(e - k).unwrap());
        }
        acc = acc.iter().flat_map(|&z| choices.iter().map(move |&c| z * c)).collect();
    }
    let mut out: Vec<PrimaryGaussian> = acc.into_iter().map(PrimaryGaussian).collect();
    out.sort_unstable();
    out
}

/// `Im(conj(z1) z2) = r1 s2 - r2 s1`.
pub fn delta(z1: GaussianInt, z2: GaussianInt) -> Result<i64> {
    let d = z1.re as i128 * z2.im as i128 - z2.re as i128 * z1.im as i128;
    i64::try_from(d).map_err(|_| Error::Overflow)
}

/// `t mod m` with `z2 = t z1 (mod m)` componentwise.
pub fn rational_residue(z1: GaussianInt, z2: GaussianInt, m: u64) -> Result<u64> {
    if m == 1 {
        return Ok(0);
    }
    let mm = m as i128;
    let n = (z1.norm() % m as u128) as u64;
    let inv = inv_mod(n, m).ok_or(Error::NonInvertible(n, m))? as i128;
    let dot = (z1.re as i128 * z2.re as i128 + z1.im as i128 * z2.im as i128).rem_euclid(mm);
    let t = (dot * inv).rem_euclid(mm);
    let ok = (z2.re as i128 - t * z1.re as i128).rem_euclid(mm) == 0
        && (z2.im as i128 - t * z1.im as i128).rem_euclid(mm) == 0;
    if !ok {
        return Err(Error::NotRational(m));
    }
    Ok(t as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(g(1, 4).norm(), 17);
        assert_eq!(g(-1, 2) * g(3, 2), g(-7, 4));
        assert_eq!(g(9, 4).conj(), g(9, -4));
        assert!(g(1 << 62, 0).checked_mul(g(2, 0)).is_err());
    }

    #[test]
    fn primary_examples() {
        assert_eq!(primary_associate(g(1, 0)).unwrap(), (PrimaryGaussian(g(1, 0)), Unit::One));
        assert_eq!(primary_associate(g(2, 1)).unwrap(), (PrimaryGaussian(g(-1, 2)), Unit::I));
        assert_eq!(primary_associate(g(1, 4)).unwrap(), (PrimaryGaussian(g(1, 4)), Unit::One));
        assert!(primary_associate(g(1, 1)).is_err());
        assert_eq!(primary_associate(g(3, 0)).unwrap().0.inner(), g(-3, 0));
    }

    #[test]
    fn exactly_one_primary_associate() {
        for re in -100i64..=100 {
            for im in -100i64..=100 {
                let z = g(re, im);
                if !z.is_odd() || z.norm() > 10_000 {
                    continue;
                }
                let count = Unit::ALL.iter().filter(|u| is_primary(u.apply(z))).count();
                assert_eq!(count, 1, "{z}");
            }
        }
    }

    #[test]
    fn primitivity() {
        assert!(g(1, 4).is_primitive());
        assert!(!g(3, 3).is_primitive());
        assert!(g(0, 1).is_primitive());
        assert!(!g(0, 0).is_primitive());
    }

    #[test]
    fn gcd_examples() {
        // 5 = (1+2i)(1-2i); the primary associate of 1+2i is -1-2i
        assert_eq!(ggcd(g(5, 0), g(1, 2)).unwrap(), g(-1, -2));
        assert_eq!(ggcd(g(3, 0), g(7, 0)).unwrap(), g(1, 0));
        // 4+2i = 2(2+i), so 2 itself is the gcd
        assert_eq!(ggcd(g(4, 2), g(2, 0)).unwrap(), g(2, 0));
        assert_eq!(ggcd(g(3, 1), g(2, 0)).unwrap(), g(1, 1));
        assert!(ggcd(g(0, 0), g(0, 0)).is_err());
    }

    #[test]
    fn gcd_divides_and_is_maximal() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let (x, y) = (g(a, b), g(b - 3, a + 5));
                if x.is_zero() && y.is_zero() {
                    continue;
                }
                let d = ggcd(x, y).unwrap();
                assert!(x.is_divisible_by(d) && y.is_divisible_by(d));
                // any common divisor of small norm divides d
                for c in -6i64..=6 {
                    for e in -6i64..=6 {
                        let c = g(c, e);
                        if !c.is_zero() && x.is_divisible_by(c) && y.is_divisible_by(c) {
                            assert!(d.is_divisible_by(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_squares_examples() {
        assert_eq!(two_squares(5).unwrap(), (1, 2));
        assert_eq!(two_squares(13).unwrap(), (3, 2));
        assert_eq!(two_squares(97).unwrap(), (9, 4));
        assert!(two_squares(7).is_err());
        assert!(two_squares(21).is_err());
    }

    #[test]
    fn two_squares_unique_up_to_1e5() {
        for p in crate::arith::primes_up_to(100_000).into_iter().filter(|p| p % 4 == 1) {
            let reps: Vec<(u64, u64)> = (1..=isqrt(p))
                .step_by(2)
                .filter_map(|r| {
                    let s2 = p - r * r;
                    let s = isqrt(s2);
                    (s > 0 && s * s == s2).then_some((r, s))
                })
                .collect();
            assert_eq!(reps, vec![two_squares(p).unwrap()], "p={p}");
        }
    }

    #[test]
    fn factorize_examples() {
        assert!(gaussian_factorize(PrimaryGaussian::one()).is_empty());
        let w = PrimaryGaussian::new(g(-1, 2)).unwrap();
        assert_eq!(gaussian_factorize(w), vec![(w, 1)]);
        // (-1+2i)^2 = -3-4i, which is primary
        let sq = PrimaryGaussian::new(g(-3, -4)).unwrap();
        assert_eq!(gaussian_factorize(sq), vec![(w, 2)]);
    }

    #[test]
    fn factorize_round_trip() {
        for re in (-317i64..=317).step_by(2) {
            for im in -317i64..=317 {
                let z = g(re, im);
                if z.norm() > 100_000 || !is_primary(z) {
                    continue;
                }
                let pz = PrimaryGaussian::new(z).unwrap();
                let mut prod = GaussianInt::ONE;
                for (p, e) in gaussian_factorize(pz) {
                    assert!(is_primary(p.inner()));
                    let np = p.norm() as u64;
                    assert!(is_prime(np) || (is_prime(isqrt(np)) && isqrt(np).pow(2) == np));
                    prod = prod * p.inner().checked_pow(e).unwrap();
                }
                assert_eq!(prod, z);
            }
        }
    }

    #[test]
    fn primaries_of_norm_matches_scan() {
        for n in 1..=3000u64 {
            let mut scan = Vec::new();
            let b = isqrt(n) as i64;
            for re in -b..=b {
                for im in -b..=b {
                    let z = g(re, im);
                    if z.norm() == n as u128 && is_primary(z) {
                        scan.push(PrimaryGaussian(z));
                    }
                }
            }
            scan.sort_unstable();
            assert_eq!(primaries_of_norm(n), scan, "n={n}");
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(g(1, 4), g(9, 4)).unwrap(), -32);
        assert_eq!(delta(g(5, 7), g(5, 7)).unwrap(), 0);
        assert_eq!(delta(g(1, 0), g(0, 1)).unwrap(), 1);
    }

    #[test]
    fn residue_examples() {
        assert_eq!(rational_residue(g(1, 4), g(9, 4), 32).unwrap(), 9);
        assert_eq!(rational_residue(g(3, 2), g(3, 2), 35).unwrap(), 1);
        assert_eq!(rational_residue(g(1, 0), g(5, 0), 7).unwrap(), 5);
        assert!(matches!(rational_residue(g(1, 2), g(1, 0), 5), Err(Error::NonInvertible(..))));
        assert!(matches!(rational_residue(g(1, 0), g(0, 1), 7), Err(Error::NotRational(7))));
    }

    fn arb_primary() -> impl Strategy<Value = GaussianInt> {
        (-5000i64..5000, -5000i64..5000).prop_map(|(a, b)| {
            let z = g(2 * a + 1, 2 * b);
            primary_associate(z).unwrap().0.inner()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 10_000, max_global_rejects: 100_000, ..ProptestConfig::default() })]
        #[test]
        fn primaries_closed_under_products(a in arb_primary(), b in arb_primary()) {
            prop_assert!(is_primary(a * b));
        }

        #[test]
        fn residue_reverified(r1 in -500i64..500, s1 in -500i64..500, r2 in -500i64..500, s2 in -500i64..500) {
            let (z1, z2) = (g(r1, s1), g(r2, s2));
            let d = delta(z1, z2).unwrap().unsigned_abs();
            prop_assume!(d > 1 && gcd(z1.norm() as u64 % d, d) == 1);
            let t = rational_residue(z1, z2, d).unwrap() as i64;
            prop_assert!((z2 - z1.checked_scale(t).unwrap()).is_zero_mod(d));
        }
    }
}
