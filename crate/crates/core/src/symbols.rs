//! Real and quartic characters on Z[i]: the Dirichlet symbol, the Jacobi–Kubota symbol,
//! the sign factor of the multiplier rule, and spins.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;

use crate::arith::{hilbert_sign, inv_mod, jacobi, jacobi_extended, SymbolValue};
use crate::gaussian::{delta, ggcd, is_primary, rational_residue, two_squares, GaussianInt, PrimaryGaussian};
use crate::{Error, Result};

/// A value in `{0, 1, i, -1, -i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuarticValue {
    Zero,
    One,
    I,
    MinusOne,
    MinusI,
}

impl QuarticValue {
    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => QuarticValue::One,
            1 => QuarticValue::I,
            2 => QuarticValue::MinusOne,
            _ => QuarticValue::MinusI,
        }
    }

    /// Exponent `k` in `0..4` with `self = i^k`, or `None` for zero.
    pub fn exponent(self) -> Option<i64> {
        match self {
            QuarticValue::Zero => None,
            QuarticValue::One => Some(0),
            QuarticValue::I => Some(1),
            QuarticValue::MinusOne => Some(2),
            QuarticValue::MinusI => Some(3),
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            QuarticValue::Zero => Complex64::new(0.0, 0.0),
            QuarticValue::One => Complex64::new(1.0, 0.0),
            QuarticValue::I => Complex64::new(0.0, 1.0),
            QuarticValue::MinusOne => Complex64::new(-1.0, 0.0),
            QuarticValue::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    /// `(re, im)` as exact integers.
    pub fn to_pair(self) -> (i64, i64) {
        match self {
            QuarticValue::Zero => (0, 0),
            QuarticValue::One => (1, 0),
            QuarticValue::I => (0, 1),
            QuarticValue::MinusOne => (-1, 0),
            QuarticValue::MinusI => (0, -1),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for QuarticValue {
    type Output = QuarticValue;
    fn mul(self, rhs: Self) -> Self {
        match (self.exponent(), rhs.exponent()) {
            (Some(a), Some(b)) => QuarticValue::i_pow(a + b),
            _ => QuarticValue::Zero,
        }
    }
}

impl Mul<SymbolValue> for QuarticValue {
    type Output = QuarticValue;
    fn mul(self, rhs: SymbolValue) -> Self {
        self * QuarticValue::from(rhs)
    }
}

impl From<SymbolValue> for QuarticValue {
    fn from(v: SymbolValue) -> Self {
        match v {
            SymbolValue::One => QuarticValue::One,
            SymbolValue::Zero => QuarticValue::Zero,
            SymbolValue::MinusOne => QuarticValue::MinusOne,
        }
    }
}

impl fmt::Display for QuarticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuarticValue::Zero => "0",
            QuarticValue::One => "1",
            QuarticValue::I => "i",
            QuarticValue::MinusOne => "-1",
            QuarticValue::MinusI => "-i",
        };
        f.write_str(s)
    }
}

/// Primary and primitive.
pub fn is_primary_primitive(w: GaussianInt) -> bool {
    is_primary(w) && w.is_primitive()
}

fn require_primary_primitive(w: PrimaryGaussian) -> Result<(i64, i64, i64)> {
    let g = w.inner();
    if !g.is_primitive() {
        return Err(Error::NotPrimaryPrimitive(g.to_string()));
    }
    let q = i64::try_from(w.norm()).map_err(|_| Error::Overflow)?;
    Ok((g.re, g.im, q))
}

fn jacobi_wide(a: i128, q: i64) -> SymbolValue {
    let r = a.rem_euclid(q as i128) as i64;
    jacobi(r, q).expect("odd positive modulus")
}

/// `(z/w) = (Re(wz) / |w|^2)` for `w` primary primitive.
pub fn dirichlet_symbol(z: GaussianInt, w: PrimaryGaussian) -> Result<SymbolValue> {
    let (_, _, q) = require_primary_primitive(w)?;
    let wz = w.inner().checked_mul(z)?;
    Ok(jacobi_wide(wz.re as i128, q))
}

/// `((r + omega s) / q)` for a root `omega` of `x^2 + 1 (mod q)`.
pub fn dirichlet_symbol_via_root(z: GaussianInt, q: u64, omega: u64) -> Result<SymbolValue> {
    if q.is_multiple_of(2) || q == 0 {
        return Err(Error::InvalidModulus(q as i64));
    }
    let qq = q as u128;
    if !(omega as u128 % qq * (omega as u128 % qq) + 1).is_multiple_of(qq) {
        return Err(Error::NotARoot(omega, q));
    }
    Ok(jacobi_wide(z.re as i128 + (omega % q) as i128 * z.im as i128, q as i64))
}

/// `((u r - v s) / q)`: the coordinate form with `w = u + iv` and `q = u^2 + v^2`.
pub fn dirichlet_symbol_coordinates(z: GaussianInt, w: PrimaryGaussian) -> Result<SymbolValue> {
    let (u, v, q) = require_primary_primitive(w)?;
    Ok(jacobi_wide(u as i128 * z.re as i128 - v as i128 * z.im as i128, q))
}

/// The root `omega = -v u^{-1} (mod q)` attached to a primary primitive `w`.
pub fn root_of_primary(w: PrimaryGaussian) -> Result<u64> {
    let (u, v, q) = require_primary_primitive(w)?;
    let qu = q as u64;
    if qu == 1 {
        return Ok(0);
    }
    let ui = inv_mod(u.rem_euclid(q) as u64, qu).ok_or(Error::NonInvertible(u.unsigned_abs(), qu))?;
    let minus_v = (-(v as i128)).rem_euclid(q as i128) as u128;
    Ok((minus_v * ui as u128 % qu as u128) as u64)
}

/// `[z] = i^((r-1)/2) (s/|r|)` for `z = r + is` with `r` odd.
pub fn jacobi_kubota(z: GaussianInt) -> Result<QuarticValue> {
    if z.re % 2 == 0 {
        return Err(Error::NotOdd(z.to_string()));
    }
    let k = (z.re - 1).div_euclid(2);
    let j = jacobi(z.im, z.re.abs())?;
    Ok(QuarticValue::i_pow(k) * j)
}

fn sign(x: i128) -> i128 {
    x.signum()
}

/// The sign factor of the multiplier rule, by cases on `Re(wz)`.
pub fn epsilon_factor(w: GaussianInt, z: GaussianInt) -> Result<SymbolValue> {
    let (u, v, r, s) = (w.re, w.im, z.re, z.im);
    let ur = u as i128 * r as i128;
    let vs = v as i128 * s as i128;
    let huv = hilbert_sign(u, v);
    if ur > vs {
        Ok(huv * hilbert_sign(r, -v))
    } else if ur < vs {
        Ok(huv * hilbert_sign(-r, v))
    } else {
        Err(Error::Degenerate)
    }
}

/// The same factor from `2 eps (u, v) = 1 + sign(vr) - (sign v - sign r) sign(Re wz)`.
pub fn epsilon_unified(w: GaussianInt, z: GaussianInt) -> Result<SymbolValue> {
    let (u, v, r, s) = (w.re as i128, w.im as i128, z.re as i128, z.im as i128);
    let a = u * r - v * s;
    if a == 0 {
        return Err(Error::Degenerate);
    }
    let twice = 1 + sign(v * r) - (sign(v) - sign(r)) * sign(a);
    let half = match twice {
        2 => SymbolValue::One,
        -2 => SymbolValue::MinusOne,
        _ => return Err(Error::Hypothesis(format!("sign form undefined at w={w}, z={z}"))),
    };
    Ok(half * hilbert_sign(w.re, w.im))
}

/// Both sides of `[wz] = eps [w] [z] (z/w)`.
pub fn multiplier_sides(w: PrimaryGaussian, z: GaussianInt) -> Result<(QuarticValue, QuarticValue)> {
    if z.re % 2 == 0 || z.im % 2 != 0 {
        return Err(Error::NotOdd(z.to_string()));
    }
    let wz = w.inner().checked_mul(z)?;
    let lhs = jacobi_kubota(wz)?;
    let eps = epsilon_factor(w.inner(), z)?;
    let rhs = QuarticValue::from(eps) * jacobi_kubota(w.inner())? * jacobi_kubota(z)? * dirichlet_symbol(z, w)?;
    Ok((lhs, rhs))
}

/// The spin `(s/r)` of a prime `p = r^2 + s^2`, `r` odd.
pub fn spin(p: u64) -> Result<SymbolValue> {
    let (r, s) = two_squares(p)?;
    jacobi(s as i64, r as i64)
}

/// `e`, the primary associate of `(w1, conj(w2))`, and the primary primitive `w1 w2 / (e conj(e))`.
pub fn primary_gcd_cofactor(w1: PrimaryGaussian, w2: PrimaryGaussian) -> Result<(PrimaryGaussian, PrimaryGaussian)> {
    require_primary_primitive(w1)?;
    require_primary_primitive(w2)?;
    let e = PrimaryGaussian::new(ggcd(w1.inner(), w2.inner().conj())?)?;
    let d = i64::try_from(e.norm()).map_err(|_| Error::Overflow)?;
    let prod = w1.inner().checked_mul(w2.inner())?;
    let cof = prod.div_exact(GaussianInt::new(d, 0)).expect("e conj(e) divides w1 w2");
    let cof = PrimaryGaussian::new(cof)?;
    debug_assert!(cof.inner().is_primitive());
    Ok((e, cof))
}

/// `(z/w1)(z/w2)` against `(|z|^2/d)(z / (w1 w2/d))` with `d = |e|^2`.
pub fn product_law_sides(z: GaussianInt, w1: PrimaryGaussian, w2: PrimaryGaussian) -> Result<(SymbolValue, SymbolValue)> {
    let lhs = dirichlet_symbol(z, w1)? * dirichlet_symbol(z, w2)?;
    let (e, cof) = primary_gcd_cofactor(w1, w2)?;
    let d = e.norm() as i64;
    let nz = (z.norm() % d as u128) as i64;
    let rhs = jacobi(nz, d)? * dirichlet_symbol(z, cof)?;
    Ok((lhs, rhs))
}

/// `xi_{w1} xi_{w2}` against `xi_e xi_{conj e} xi_{w1 w2 / e conj(e)}` at `z`.
pub fn lower_multiplicativity_sides(
    z: GaussianInt,
    w1: PrimaryGaussian,
    w2: PrimaryGaussian,
) -> Result<(SymbolValue, SymbolValue)> {
    let lhs = dirichlet_symbol(z, w1)? * dirichlet_symbol(z, w2)?;
    let (e, cof) = primary_gcd_cofactor(w1, w2)?;
    let rhs = dirichlet_symbol(z, e)? * dirichlet_symbol(z, e.conj())? * dirichlet_symbol(z, cof)?;
    Ok((lhs, rhs))
}

/// `xi_w(z) xi_{conj w}(z)` against `(|z|^2 / |w|^2)`.
pub fn norm_relation_sides(z: GaussianInt, w: PrimaryGaussian) -> Result<(SymbolValue, SymbolValue)> {
    let (_, _, q) = require_primary_primitive(w)?;
    let lhs = dirichlet_symbol(z, w)? * dirichlet_symbol(z, w.conj())?;
    let rhs = jacobi((z.norm() % q as u128) as i64, q)?;
    Ok((lhs, rhs))
}

/// The symbol `((z2/z1) / |Delta|)`, computed from the rational residue of `z2/z1`.
pub fn quotient_symbol(z1: GaussianInt, z2: GaussianInt) -> Result<SymbolValue> {
    let d = delta(z1, z2)?;
    if d == 0 {
        return Err(Error::Degenerate);
    }
    let t = rational_residue(z1, z2, d.unsigned_abs())? as i64;
    jacobi_extended(t, d)
}

/// `(z1, conj z1) = 1`: primitive with odd norm.
pub fn coprime_to_conjugate(z: GaussianInt) -> bool {
    z.is_odd() && z.is_primitive()
}

/// The hypotheses of the quotient-symbol identity: coprimality, `z1 = z2 (mod 8)` and `0 < r1 r2 = 1 (mod 8)`.
pub fn quotient_identity_applies(z1: GaussianInt, z2: GaussianInt) -> bool {
    let r1r2 = z1.re as i128 * z2.re as i128;
    coprime_to_conjugate(z1)
        && coprime_to_conjugate(z2)
        && (z1.re - z2.re).rem_euclid(8) == 0
        && (z1.im - z2.im).rem_euclid(8) == 0
        && r1r2 > 0
        && r1r2.rem_euclid(8) == 1
        && delta(z1, z2).is_ok_and(|d| d != 0)
        && ggcd(z1, z2).is_ok_and(|g| g == GaussianInt::ONE)
}

/// `((z2/z1)/|Delta|)` against `(s1/|r1|)(s2/|r2|)`.
pub fn quotient_identity_sides(z1: GaussianInt, z2: GaussianInt) -> Result<(SymbolValue, SymbolValue)> {
    let lhs = quotient_symbol(z1, z2)?;
    let rhs = jacobi(z1.im, z1.re.abs())? * jacobi(z2.im, z2.re.abs())?;
    Ok((lhs, rhs))
}
