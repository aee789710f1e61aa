//! Adaptive Gauss–Kronrod quadrature and the constants built from it.

use crate::summation::neumaier_sum;
use crate::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel with its embedded 7-point Gauss estimate.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`, splitting the worst panel first.
///
/// `breaks` are interior points where `f` is known to vary sharply.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, breaks: &[f64], tol: f64) -> Quadrature {
    let mut cuts = vec![a];
    cuts.extend(breaks.iter().copied().filter(|&x| x > a && x < b));
    cuts.push(b);
    let mut panels: Vec<(f64, f64, f64, f64)> = cuts
        .windows(2)
        .map(|w| {
            let (v, e) = gk15(&f, w[0], w[1]);
            (w[0], w[1], v, e)
        })
        .collect();
    const MAX_PANELS: usize = 20_000;
    loop {
        let total: f64 = panels.iter().map(|p| p.3).sum();
        if total <= tol || panels.len() >= MAX_PANELS {
            break;
        }
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("nonempty");
        let (lo, hi, _, _) = panels.swap_remove(idx);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            panels.push((lo, hi, gk15(&f, lo, hi).0, 0.0));
            continue;
        }
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        panels.push((lo, mid, v1, e1));
        panels.push((mid, hi, v2, e2));
    }
    panels.sort_by(|x, y| x.0.total_cmp(&y.0));
    Quadrature {
        value: neumaier_sum(panels.iter().map(|p| p.2)),
        error: panels.iter().map(|p| p.3).sum(),
        panels: panels.len(),
    }
}

/// `int_0^1 (1 - t^4)^(1/2) dt`, with `t = 1 - u^2` removing the square-root endpoint.
pub fn kappa() -> f64 {
    integrate(
        |u: f64| {
            let t = 1.0 - u * u;
            2.0 * u * (1.0 - t.powi(4)).max(0.0).sqrt()
        },
        0.0,
        1.0,
        &[],
        1e-14,
    )
    .value
}

/// `Gamma(1/4)^2 / (6 sqrt(2 pi))`.
pub fn kappa_closed_form() -> f64 {
    let g = statrs::function::gamma::gamma(0.25);
    g * g / (6.0 * (2.0 * std::f64::consts::PI).sqrt())
}

/// `E(gamma) = int_0^inf (t^2 - 2 gamma t + 1)^(-1/2) t^(-1/2) dt` for `|gamma| < 1`.
///
/// With `t = tau^2` on `[0, 1]` and `t = 1/tau^2` on `[1, inf)` both halves become
/// `2 int_0^1 (tau^4 - 2 gamma tau^2 + 1)^(-1/2) dtau`; the integrand peaks at `tau = sqrt(gamma)`.
pub fn e_gamma(gamma: f64) -> Result<f64> {
    if gamma.is_nan() || gamma.abs() >= 1.0 {
        return Err(Error::Divergent(gamma));
    }
    let breaks = if gamma > 0.0 { vec![gamma.sqrt()] } else { Vec::new() };
    let one_minus = (1.0 - gamma) * (1.0 + gamma);
    let q = integrate(
        |tau: f64| {
            let x = tau * tau - gamma;
            1.0 / (x * x + one_minus).sqrt()
        },
        0.0,
        1.0,
        &breaks,
        1e-12,
    );
    Ok(4.0 * q.value)
}
