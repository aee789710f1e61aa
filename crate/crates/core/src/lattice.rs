//! Lattice points under the biquadratic ellipse: the count `C(z1, z2)` by direct
//! enumeration and by the `(c1, c2)` parameterization, and the zero-frequency term `C0`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::{factorize, iroot, isqrt, sqrt_mod_composite};
use crate::congruences::{g0_formula, g0_formula_applies};
use crate::gaussian::{delta, ggcd, rational_residue};
use crate::quadrature::integrate;
use crate::sieve::theta;
use crate::summation::{neumaier_sum, Neumaier};
use crate::symbols::coprime_to_conjugate;
use crate::{Error, GaussianInt, Result};

pub use crate::quadrature::e_gamma;

/// Normalizing constant of the profile; keeps `|f^(j)| <= M^-j` for `j <= 4`.
pub const WEIGHT_SCALE: f64 = 1.0 / 2000.0;

/// Degree-9 smoothstep, `C^4` at both ends.
pub fn smoothstep(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        let t5 = t.powi(5);
        t5 * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + t * 70.0))))
    }
}

/// `f(u) = c S((u - M/4)/(3M/4)) S((4M - u)/(3M))`, supported on `[M/4, 4M]`.
pub fn weight_eval(m: f64, u: f64) -> f64 {
    let rise = smoothstep((u - m / 4.0) / (0.75 * m));
    if rise == 0.0 {
        return 0.0;
    }
    WEIGHT_SCALE * rise * smoothstep((4.0 * m - u) / (3.0 * m))
}

/// Radial weight `f(w) = frak_f(|w|^2)` at scale `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialWeight {
    m: f64,
}

impl RadialWeight {
    pub fn new(m: f64) -> Result<Self> {
        if m > 0.0 && m.is_finite() {
            Ok(Self { m })
        } else {
            Err(Error::OutOfRange(format!("scale M = {m} must be positive")))
        }
    }

    pub fn scale(&self) -> f64 {
        self.m
    }

    /// The profile `frak_f(u)`.
    pub fn eval(&self, u: f64) -> f64 {
        weight_eval(self.m, u)
    }

    /// `f(w) = frak_f(|w|^2)`.
    pub fn at(&self, w: GaussianInt) -> f64 {
        self.eval(w.norm() as f64)
    }

    pub fn in_support(&self, norm: u128) -> bool {
        let n = norm as f64;
        4.0 * n >= self.m && n <= 4.0 * self.m
    }

    /// `f_hat(0) = int_0^inf frak_f(s^2) ds`, the mean of the radial profile in `|w|`.
    pub fn f_hat_zero(&self) -> f64 {
        let r = self.m.sqrt();
        integrate(|s| self.eval(s * s), 0.5 * r, 2.0 * r, &[r], 1e-13).value
    }
}

/// Hypotheses of the lattice count: `Delta != 0`, `(z1, z2) = (z1, conj z1) = (z2, conj z2) = 1`.
pub fn lattice_pair_valid(z1: GaussianInt, z2: GaussianInt) -> bool {
    delta(z1, z2).is_ok_and(|d| d != 0)
        && coprime_to_conjugate(z1)
        && coprime_to_conjugate(z2)
        && ggcd(z1, z2).is_ok_and(|g| g == GaussianInt::ONE)
}

fn require_valid(z1: GaussianInt, z2: GaussianInt) -> Result<()> {
    if lattice_pair_valid(z1, z2) {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("({z1}, {z2}) is not a valid lattice pair")))
    }
}

/// Multiplicity of each `w` in `C(z1, z2)`.
pub type LatticeTerms = BTreeMap<GaussianInt, u64>;

/// Sum of `multiplicity * f(w)`, in the order of `w`.
pub fn weighted_total(terms: &LatticeTerms, weight: &RadialWeight) -> f64 {
    neumaier_sum(terms.iter().map(|(&w, &k)| k as f64 * weight.at(w)))
}

/// `w -> theta(Re conj(w) z1) theta(Re conj(w) z2)` over `M/4 <= |w|^2 <= 4M`.
pub fn c_direct_terms(z1: GaussianInt, z2: GaussianInt, m: f64) -> Result<LatticeTerms> {
    require_valid(z1, z2)?;
    let weight = RadialWeight::new(m)?;
    let r = isqrt((4.0 * m).floor() as u64) as i64;
    let mut terms = LatticeTerms::new();
    for re in -r..=r {
        for im in -r..=r {
            let w = GaussianInt::new(re, im);
            if !weight.in_support(w.norm()) {
                continue;
            }
            let k1 = theta(re * z1.re + im * z1.im);
            if k1 == 0 {
                continue;
            }
            let k = k1 * theta(re * z2.re + im * z2.im);
            if k > 0 {
                terms.insert(w, k);
            }
        }
    }
    Ok(terms)
}

/// Pairs `(c1, c2)` with `c1^2 z2 = c2^2 z1 (mod |Delta|)`, each giving `w` through
/// `i Delta w = c1^2 z2 - c2^2 z1`.
pub fn c_param_terms(z1: GaussianInt, z2: GaussianInt, m: f64) -> Result<LatticeTerms> {
    require_valid(z1, z2)?;
    let weight = RadialWeight::new(m)?;
    let d = delta(z1, z2)?;
    let modulus = d.unsigned_abs();
    let fm = factorize(modulus);
    // z2 = t z1 (mod |Delta|) and z1 is a unit there, so the congruence reads c2^2 = t c1^2.
    let t = rational_residue(z1, z2, modulus)? as u128;
    let top = (4.0 * m).floor() as u128;
    let bound = |z: GaussianInt| -> Result<i64> {
        let b = top.checked_mul(z.norm()).ok_or(Error::Overflow)?;
        Ok(iroot(u64::try_from(b).map_err(|_| Error::Overflow)?, 4) as i64)
    };
    let (b1, b2) = (bound(z1)?, bound(z2)?);
    let i_delta = GaussianInt::new(0, d);
    let mut terms = LatticeTerms::new();
    for c1 in -b1..=b1 {
        let sq = (c1 as i128 * c1 as i128) as u128;
        let target = (t * (sq % modulus as u128) % modulus as u128) as i64;
        for alpha in sqrt_mod_composite(target, &fm) {
            let alpha = alpha as i64;
            let first = alpha - (alpha + b2).div_euclid(modulus as i64) * modulus as i64;
            let mut c2 = first;
            while c2 <= b2 {
                let v = z2.checked_scale(c1 * c1)?.checked_sub(z1.checked_scale(c2 * c2)?)?;
                let w = v
                    .div_exact(i_delta)
                    .ok_or_else(|| Error::Hypothesis(format!("{v} is not divisible by {i_delta}")))?;
                if weight.in_support(w.norm()) {
                    *terms.entry(w).or_insert(0) += 1;
                }
                c2 += modulus as i64;
            }
        }
    }
    Ok(terms)
}

/// `C(z1, z2) = sum_w f(w) theta(Re conj(w) z1) theta(Re conj(w) z2)`.
pub fn c_direct(z1: GaussianInt, z2: GaussianInt, m: f64) -> Result<f64> {
    Ok(weighted_total(&c_direct_terms(z1, z2, m)?, &RadialWeight::new(m)?))
}

/// `C(z1, z2)` through the parameterization by `(c1, c2)`.
pub fn c_param(z1: GaussianInt, z2: GaussianInt, m: f64) -> Result<f64> {
    Ok(weighted_total(&c_param_terms(z1, z2, m)?, &RadialWeight::new(m)?))
}

/// `(gamma, delta)` with `conj(z1) z2 / |z1 z2| = gamma + i delta`.
pub fn angle_pair(z1: GaussianInt, z2: GaussianInt) -> Result<(f64, f64)> {
    let scale = ((z1.norm() as f64) * (z2.norm() as f64)).sqrt();
    if scale == 0.0 {
        return Err(Error::ZeroArgument);
    }
    let dot = z1.re as f64 * z2.re as f64 + z1.im as f64 * z2.im as f64;
    Ok((dot / scale, delta(z1, z2)? as f64 / scale))
}

/// `C0 = |z1 z2|^(-1/2) f_hat(0) E(gamma) G0`.
pub fn c0(z1: GaussianInt, z2: GaussianInt, m: f64) -> Result<f64> {
    let weight = RadialWeight::new(m)?;
    let g0 = g0_formula(z1, z2)?;
    let (gamma, _) = angle_pair(z1, z2)?;
    let scale = ((z1.norm() as f64) * (z2.norm() as f64)).sqrt();
    let g0 = *g0.numer() as f64 / *g0.denom() as f64;
    Ok(scale.powf(-0.5) * weight.f_hat_zero() * e_gamma(gamma)? * g0)
}

/// `z` with `norm_lo <= N(z) <= norm_hi` and `arg_lo <= arg z < arg_hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarBox {
    pub norm_lo: u64,
    pub norm_hi: u64,
    pub arg_lo: f64,
    pub arg_hi: f64,
}

impl PolarBox {
    pub fn contains(&self, z: GaussianInt) -> bool {
        let n = z.norm();
        let a = (z.im as f64).atan2(z.re as f64);
        n >= self.norm_lo as u128 && n <= self.norm_hi as u128 && a >= self.arg_lo && a < self.arg_hi
    }

    /// Elements with `(z, conj z) = 1`, sorted.
    pub fn members(&self) -> Vec<GaussianInt> {
        let r = isqrt(self.norm_hi) as i64;
        let mut out = Vec::new();
        for re in -r..=r {
            for im in -r..=r {
                let z = GaussianInt::new(re, im);
                if self.contains(z) && coprime_to_conjugate(z) {
                    out.push(z);
                }
            }
        }
        out
    }
}

/// One ordered pair of the box experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeRow {
    pub z1: GaussianInt,
    pub z2: GaussianInt,
    pub delta: i64,
    pub c_direct: f64,
    pub c0: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoxReport {
    pub m: f64,
    pub rows: Vec<LatticeRow>,
    pub mean_c: f64,
    pub mean_c0: f64,
    /// `|mean(C - C0)| / mean(C0)`.
    pub relative_gap: f64,
}

/// `C` against `C0` over every ordered pair of the box to which the closed form for `G0` applies.
pub fn box_experiment(m: f64, bx: &PolarBox) -> Result<BoxReport> {
    let zs = bx.members();
    let pairs: Vec<(GaussianInt, GaussianInt)> = zs
        .iter()
        .flat_map(|&a| zs.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| g0_formula_applies(a, b))
        .collect();
    let rows = pairs
        .into_par_iter()
        .map(|(z1, z2)| {
            Ok(LatticeRow { z1, z2, delta: delta(z1, z2)?, c_direct: c_direct(z1, z2, m)?, c0: c0(z1, z2, m)? })
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.is_empty() {
        return Err(Error::Degenerate);
    }
    let n = rows.len() as f64;
    let mean_c = rows.iter().map(|r| r.c_direct).collect::<Neumaier>().value() / n;
    let mean_c0 = rows.iter().map(|r| r.c0).collect::<Neumaier>().value() / n;
    Ok(BoxReport { m, rows, mean_c, mean_c0, relative_gap: (mean_c - mean_c0).abs() / mean_c0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn weight_support() {
        let m = 100.0;
        assert!(weight_eval(m, m) > 0.0);
        assert_eq!(weight_eval(m, m / 8.0), 0.0);
        assert_eq!(weight_eval(m, 4.5 * m), 0.0);
        assert_eq!(weight_eval(m, m), WEIGHT_SCALE);
    }

    #[test]
    fn weight_derivative_bounds() {
        for m in [1.0, 16.0, 1e4] {
            let steps = 20_000;
            let h = 4.0 * m / steps as f64;
            let vals: Vec<f64> = (0..=steps + 1).map(|k| weight_eval(m, k as f64 * h)).collect();
            for j in 1..4 {
                // j-th forward difference over h^j
                let mut diff = vals.clone();
                for _ in 0..j {
                    diff = diff.windows(2).map(|p| (p[1] - p[0]) / h).collect();
                }
                let max = diff.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
                assert!(max <= m.powi(-j), "M={m} j={j} max={max}");
            }
        }
    }

    fn c_oracle(z1: GaussianInt, z2: GaussianInt, m: f64) -> f64 {
        // every (c1, c2) with a lattice w, found by scanning w and counting square roots
        let r = (4.0 * m).sqrt() as i64 + 1;
        let mut total = 0.0;
        for a in -r..=r {
            for b in -r..=r {
                let b1 = a * z1.re + b * z1.im;
                let b2 = a * z2.re + b * z2.im;
                let k1 = (-40i64..=40).filter(|c| c * c == b1).count();
                let k2 = (-40i64..=40).filter(|c| c * c == b2).count();
                total += (k1 * k2) as f64 * weight_eval(m, (a * a + b * b) as f64);
            }
        }
        total
    }

    #[test]
    fn tiny_case_both_routes() {
        let (z1, z2) = (g(1, 4), g(9, 4));
        let d = c_direct(z1, z2, 16.0).unwrap();
        let p = c_param(z1, z2, 16.0).unwrap();
        assert!((d - c_oracle(z1, z2, 16.0)).abs() < 1e-15);
        assert_eq!(c_direct_terms(z1, z2, 16.0).unwrap(), c_param_terms(z1, z2, 16.0).unwrap());
        assert_eq!(d, p);
        assert_eq!(c_direct(z2, z1, 16.0).unwrap(), d);
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(c_direct(g(1, 2), g(2, 4), 16.0).is_err());
        assert!(c_param(g(5, 0), g(1, 4), 16.0).is_err());
        assert!(c_direct(g(1, 4), g(1, 4), 16.0).is_err());
    }

    #[test]
    fn routes_agree_on_grid() {
        let mut checked = 0;
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                let z1 = g(a, b);
                let z2 = g(3, 2);
                if !lattice_pair_valid(z1, z2) {
                    continue;
                }
                for m in [9.0, 50.0, 400.0] {
                    assert_eq!(c_direct_terms(z1, z2, m).unwrap(), c_param_terms(z1, z2, m).unwrap(), "{z1} {m}");
                }
                checked += 1;
            }
        }
        assert!(checked > 30);
    }

    #[test]
    fn angles_and_fhat() {
        let (gm, dl) = angle_pair(g(1, 4), g(9, 4)).unwrap();
        assert!((gm * gm + dl * dl - 1.0).abs() < 1e-15);
        for m in [16.0, 1e4] {
            let w = RadialWeight::new(m).unwrap();
            let fh = w.f_hat_zero();
            assert!(fh > 0.0 && fh <= 4.0 * m * WEIGHT_SCALE);
            // f_hat(0) scales like sqrt(M)
            let ratio = fh / m.sqrt();
            let unit = RadialWeight::new(1.0).unwrap().f_hat_zero();
            assert!((ratio - unit).abs() < 1e-12);
        }
    }
}
