//! Hecke eigenvalues, quadratic eigenvalues built from the Jacobi-Kubota symbol,
//! and the spin sums over split primes.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arith::{factorize, isqrt, jacobi, primes_in_segment, primes_up_to, segments, von_mangoldt, Factorization};
use crate::gaussian::{primaries_of_norm_with, PrimaryGaussian, Unit};
use crate::summation::ComplexNeumaier;
use crate::symbols::{dirichlet_symbol, is_primary_primitive, jacobi_kubota, spin};
use crate::{Error, GaussianInt, Result};

pub type ComplexValue = Complex64;

/// `psi(z) = xi_w(z) (z/|z|)^k`, with the twist `xi_w` optional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeckeCharacter {
    k: i64,
    twist: Option<PrimaryGaussian>,
}

impl HeckeCharacter {
    pub fn trivial() -> Self {
        Self { k: 0, twist: None }
    }

    pub fn angular(k: i64) -> Self {
        Self { k, twist: None }
    }

    pub fn new(k: i64, twist: Option<GaussianInt>) -> Result<Self> {
        let twist = match twist {
            None => None,
            Some(w) if is_primary_primitive(w) => Some(PrimaryGaussian::new(w)?),
            Some(w) => return Err(Error::NotPrimaryPrimitive(w.to_string())),
        };
        Ok(Self { k, twist })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn twist(&self) -> Option<PrimaryGaussian> {
        self.twist
    }
}

/// `psi(z)`, with `(z/|z|)^k = exp(i k arg z)`.
pub fn psi_eval(psi: &HeckeCharacter, z: GaussianInt) -> Result<ComplexValue> {
    if z.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let chi = match psi.twist {
        None => 1.0,
        Some(w) => {
            if !z.is_odd() {
                return Err(Error::NotOdd(z.to_string()));
            }
            dirichlet_symbol(z, w)?.to_i64() as f64
        }
    };
    if chi == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if psi.k == 0 {
        return Ok(Complex64::new(chi, 0.0));
    }
    let theta = psi.k as f64 * (z.im as f64).atan2(z.re as f64);
    Ok(Complex64::from_polar(chi, theta))
}

fn primaries(n: u64) -> Vec<PrimaryGaussian> {
    if n.is_multiple_of(2) {
        return Vec::new();
    }
    primaries_of_norm_with(&factorize(n))
}

/// `sum psi(z)` over primary `z` with `|z|^2 = n`.
pub fn hecke_lambda(n: u64, psi: &HeckeCharacter) -> Result<ComplexValue> {
    let mut acc = ComplexNeumaier::new();
    for z in primaries(n) {
        acc.add(psi_eval(psi, z.inner())?);
    }
    Ok(acc.value())
}

/// `lambda(n) = sum psi(z) [z]` over primary `z` with `|z|^2 = n`.
pub fn quad_lambda(n: u64, psi: &HeckeCharacter) -> Result<ComplexValue> {
    quad_lambda_with(&factorize_nonzero(n)?, psi)
}

fn factorize_nonzero(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(factorize(n))
}

pub fn quad_lambda_with(f: &Factorization, psi: &HeckeCharacter) -> Result<ComplexValue> {
    let mut acc = ComplexNeumaier::new();
    if f.n() % 2 == 1 {
        for z in primaries_of_norm_with(f) {
            let (a, b) = jacobi_kubota(z.inner())?.to_pair();
            acc.add(psi_eval(psi, z.inner())? * Complex64::new(a as f64, b as f64));
        }
    }
    Ok(acc.value())
}

/// The coordinate form `sum i^((r-1)/2) psi(r + is) (s/|r|)` over primary `r + is`,
/// by scanning `r^2 + s^2 = n`.
pub fn quad_lambda_coordinates(n: u64, psi: &HeckeCharacter) -> Result<ComplexValue> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut acc = ComplexNeumaier::new();
    let top = isqrt(n) as i64;
    for r in -top..=top {
        if r % 2 == 0 {
            continue;
        }
        let rest = n - (r * r) as u64;
        let s0 = isqrt(rest) as i64;
        if (s0 * s0) as u64 != rest {
            continue;
        }
        for s in if s0 == 0 { vec![0] } else { vec![s0, -s0] } {
            if (s - r + 1).rem_euclid(4) != 0 {
                continue;
            }
            let j = jacobi(s, r.abs())?.to_i64() as f64;
            let ipow = match (r - 1).div_euclid(2).rem_euclid(4) {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
            acc.add(ipow * psi_eval(psi, GaussianInt::new(r, s))? * j);
        }
    }
    Ok(acc.value())
}

/// Every `z` with `|z|^2 = n`: units times a power of `1 + i` times a primary.
fn all_of_norm(f: &Factorization) -> Vec<GaussianInt> {
    let twos = f.exponent_of(2);
    let odd = f.n() >> twos;
    let odd_f = factorize(odd);
    let ramified = GaussianInt::new(1, 1).checked_pow(twos).expect("in range");
    let mut out = Vec::new();
    for z in primaries_of_norm_with(&odd_f) {
        let base = z.inner() * ramified;
        out.extend(Unit::ALL.iter().map(|u| u.apply(base)));
    }
    out.sort_unstable();
    out
}

/// `lambda0(n) = sum (s/r)` over `r^2 + s^2 = n` with `r, s > 0` and `r` odd.
pub fn lambda0(n: u64) -> Result<i64> {
    let f = factorize_nonzero(n)?;
    let mut total = 0;
    for z in all_of_norm(&f) {
        if z.re > 0 && z.im > 0 && z.re % 2 == 1 {
            total += jacobi(z.im, z.re)?.to_i64();
        }
    }
    Ok(total)
}

pub const SPIN_MAX_X: u64 = 1_000_000_000;
const SEGMENT: u64 = 1 << 18;

/// Spin sum over primes `p = 1 (mod 4)` with `p <= x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinSum {
    pub sum: i64,
    pub prime_count: u64,
}

/// `sum_{p <= x} sigma_p` over primes `p = 1 (mod 4)`, streamed segment by segment.
pub fn spin_sum(x: u64) -> Result<SpinSum> {
    if x > SPIN_MAX_X {
        return Err(Error::OutOfRange(format!("x = {x} exceeds {SPIN_MAX_X}")));
    }
    let base = primes_up_to(isqrt(x));
    let parts = segments(x, SEGMENT)
        .into_par_iter()
        .map(|(lo, hi)| -> Result<SpinSum> {
            let mut part = SpinSum { sum: 0, prime_count: 0 };
            for p in primes_in_segment(lo, hi, &base) {
                if p % 4 == 1 {
                    part.sum += spin(p)?.to_i64();
                    part.prime_count += 1;
                }
            }
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.iter().fold(SpinSum { sum: 0, prime_count: 0 }, |a, b| SpinSum {
        sum: a.sum + b.sum,
        prime_count: a.prime_count + b.prime_count,
    }))
}

/// `sum_{n <= x} Lambda(n) lambda(c n)`.
///
/// Only prime powers contribute; their terms are summed in increasing order.
pub fn lambda_prime_sum(x: u64, c: u64, psi: &HeckeCharacter) -> Result<ComplexValue> {
    if c == 0 {
        return Err(Error::ZeroArgument);
    }
    x.checked_mul(c).ok_or(Error::Overflow)?;
    let mut powers: Vec<u64> = Vec::new();
    for p in primes_up_to(x) {
        let mut q = p;
        loop {
            powers.push(q);
            match q.checked_mul(p) {
                Some(next) if next <= x => q = next,
                _ => break,
            }
        }
    }
    powers.sort_unstable();
    let terms = powers
        .par_chunks(4096)
        .map(|chunk| -> Result<Complex64> {
            let mut acc = ComplexNeumaier::new();
            for &n in chunk {
                let lam = quad_lambda(c * n, psi)?;
                if lam != Complex64::new(0.0, 0.0) {
                    acc.add(lam * von_mangoldt(n));
                }
            }
            Ok(acc.value())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(terms.into_iter().collect::<ComplexNeumaier>().value())
}

/// `L(N) = sum_{n <= N} lambda(m n)`, optionally restricted to `(n, m) = 1`.
pub fn linear_form(big_n: u64, m: u64, psi: &HeckeCharacter, restricted: bool) -> Result<ComplexValue> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    big_n.checked_mul(m).ok_or(Error::Overflow)?;
    let ns: Vec<u64> = (1..=big_n).collect();
    let parts = ns
        .par_chunks(4096)
        .map(|chunk| -> Result<Complex64> {
            let mut acc = ComplexNeumaier::new();
            for &n in chunk {
                if restricted && crate::arith::gcd(n, m) != 1 {
                    continue;
                }
                acc.add(quad_lambda(m * n, psi)?);
            }
            Ok(acc.value())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().collect::<ComplexNeumaier>().value())
}

/// `d (|k| + 1) tau(m)^4 sqrt(m) N^(3/4)` for a character with twist of norm `d`.
pub fn linear_form_bound_shape(big_n: u64, m: u64, psi: &HeckeCharacter) -> f64 {
    let d = psi.twist.map_or(1.0, |w| w.norm() as f64);
    let tau = crate::arith::tau(m) as f64;
    d * (psi.k.unsigned_abs() as f64 + 1.0) * tau.powi(4) * (m as f64).sqrt() * (big_n as f64).powf(0.75)
}
