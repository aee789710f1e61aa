//! One report per CLI command.

use crate::report::{Cell, Report};
use crate::suites::{self, Check, SuiteParams};
use gaussprime::arith::isqrt;
use gaussprime::decomp::bilinear_split_check;
use gaussprime::eigen::spin_sum;
use gaussprime::lattice::{box_experiment, PolarBox};
use gaussprime::quadrature::{e_gamma, kappa, kappa_closed_form};
use gaussprime::sieve::{h_partial, remainder_scan, theorem1_experiment};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Outcome of a command: the report and whether every identity it checked held.
pub struct Outcome {
    pub report: Report,
    pub identities_hold: bool,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome { report, identities_hold: true }
    }
}

/// `x, x/10, ..., x/10^(k-1)` in increasing order.
pub fn decade_sweep(x: u64, checkpoints: u32) -> Vec<u64> {
    let mut xs: Vec<u64> = (0..checkpoints.max(1)).map(|j| x / 10u64.pow(j)).filter(|&v| v > 0).collect();
    xs.reverse();
    xs
}

/// Number of consecutive steps where `|ratio - 1|` grows.
pub fn inversions(ratios: &[f64]) -> usize {
    ratios.windows(2).filter(|w| (w[1] - 1.0).abs() > (w[0] - 1.0).abs()).count()
}

pub fn theorem1(x: u64, checkpoints: u32, timing: bool) -> gaussprime::Result<Outcome> {
    let mut r = Report::new("theorem1", &["x", "observed", "predicted", "ratio", "pair_count", "runtime_s"]);
    r.param("x", x).param("checkpoints", checkpoints);
    let mut ratios = Vec::new();
    for xi in decade_sweep(x, checkpoints) {
        let e = theorem1_experiment(xi)?;
        ratios.push(e.ratio);
        let runtime = if timing { e.runtime_seconds } else { 0.0 };
        r.push(vec![e.x.into(), e.observed.into(), e.predicted.into(), e.ratio.into(), e.pair_count.into(), runtime.into()]);
    }
    r.summarize("final_ratio", *ratios.last().expect("at least one row"));
    r.summarize("inversions", inversions(&ratios));
    Ok(Outcome::ok(r))
}

pub fn spin(x: u64, checkpoints: u32) -> gaussprime::Result<Outcome> {
    let mut r = Report::new("spin", &["x", "sum", "prime_count", "bound", "within_bound"]);
    r.param("x", x).param("checkpoints", checkpoints);
    let mut all_within = true;
    for xi in decade_sweep(x, checkpoints) {
        let s = spin_sum(xi)?;
        let bound = (xi as f64).powf(0.75);
        let within = (s.sum.unsigned_abs() as f64) <= bound;
        all_within &= within;
        r.push(vec![xi.into(), s.sum.into(), s.prime_count.into(), bound.into(), within.into()]);
    }
    r.summarize("all_within_bound", all_within);
    Ok(Outcome::ok(r))
}

pub fn identities(suite: &str, p: SuiteParams) -> Option<Outcome> {
    let names: Vec<&str> = if suite == "all" { suites::SUITES.to_vec() } else { vec![suite] };
    let mut checks: Vec<Check> = Vec::new();
    for name in names {
        let params = if suite == "all" { SuiteParams { bound: None, cases: None, seed: p.seed } } else { p };
        checks.extend(suites::run_suite(name, params)?);
    }
    let mut r = Report::new("identities", &["suite", "check", "bound", "checked", "violations", "first_violation"]);
    r.param("suite", suite).param("seed", p.seed);
    if let Some(b) = p.bound {
        r.param("bound", b);
    }
    if let Some(c) = p.cases {
        r.param("cases", c);
    }
    let (mut checked, mut violations) = (0u64, 0u64);
    for c in &checks {
        checked += c.checked;
        violations += c.violations;
        r.push(vec![
            c.suite.into(),
            c.name.clone().into(),
            c.bound.into(),
            c.checked.into(),
            c.violations.into(),
            c.first_violation.clone().unwrap_or_default().into(),
        ]);
    }
    r.summarize("checked", checked).summarize("violations", violations);
    Some(Outcome { report: r, identities_hold: violations == 0 })
}

pub fn remainder(x: u64, d_max: Option<u64>) -> gaussprime::Result<Outcome> {
    let d_max = d_max.unwrap_or_else(|| isqrt(x));
    let scan = remainder_scan(x, d_max);
    let mut r = Report::new("remainder", &["d", "a_d", "m_d", "g_d", "r_d"]);
    r.param("x", x).param("d_max", d_max);
    for row in &scan.rows {
        r.push(vec![row.d.into(), row.a_d.into(), row.m_d.into(), row.g_d.to_string().into(), row.r_d.into()]);
    }
    let bound = (x as f64).powf(0.7);
    r.summarize("a_x", scan.a_x)
        .summarize("sum_abs_r", scan.sum_abs_r)
        .summarize("normalized", scan.normalized)
        .summarize("bound", bound)
        .summarize("within_bound", scan.sum_abs_r <= bound)
        .summarize("r_1", scan.rows.first().map_or(f64::NAN, |row| row.r_d));
    Ok(Outcome::ok(r))
}

pub const DEFAULT_BOX: PolarBox = PolarBox { norm_lo: 1000, norm_hi: 4000, arg_lo: 0.5, arg_hi: 0.8 };

pub fn lattice(m: f64, bx: PolarBox) -> gaussprime::Result<Outcome> {
    let rep = box_experiment(m, &bx)?;
    let mut r = Report::new("lattice", &["z1", "z2", "delta", "c_direct", "c0"]);
    r.param("m", m)
        .param("norm_lo", bx.norm_lo)
        .param("norm_hi", bx.norm_hi)
        .param("arg_lo", bx.arg_lo)
        .param("arg_hi", bx.arg_hi);
    for row in &rep.rows {
        r.push(vec![row.z1.to_string().into(), row.z2.to_string().into(), row.delta.into(), row.c_direct.into(), row.c0.into()]);
    }
    r.summarize("pairs", rep.rows.len())
        .summarize("mean_c", rep.mean_c)
        .summarize("mean_c0", rep.mean_c0)
        .summarize("relative_gap", rep.relative_gap);
    Ok(Outcome::ok(r))
}

pub fn constants(p_max: u64) -> gaussprime::Result<Outcome> {
    let mut r = Report::new("constants", &["name", "parameter", "value", "reference", "abs_error", "tolerance", "within"]);
    r.param("p_max", p_max);
    let push = |r: &mut Report, name: &str, param: f64, value: f64, reference: f64, tol: f64| {
        let err = (value - reference).abs();
        r.push(vec![name.into(), param.into(), value.into(), reference.into(), err.into(), tol.into(), (err <= tol).into()]);
    };
    let k = kappa();
    push(&mut r, "kappa", 0.0, k, kappa_closed_form(), 1e-9);
    push(&mut r, "h_partial", p_max as f64, h_partial(p_max), 4.0 / PI, 0.01);
    for delta in [0.1f64, 0.05, 0.02] {
        let e = e_gamma((1.0 - delta * delta).sqrt())?;
        let d2 = delta * delta;
        let tol = 2.0 * d2 * (1.0 / d2).ln();
        push(&mut r, "e_gamma_log4", delta, e, (4.0 / d2).ln(), tol);
        push(&mut r, "e_gamma_log64", delta, e, (64.0 / d2).ln(), tol);
    }
    r.summarize("kappa", k).summarize("four_over_pi", 4.0 / PI);
    Ok(Outcome::ok(r))
}

fn split_row(r: &mut Report, kind: &str, v: [f64; 5], holds: bool) {
    let [lhs, bilinear, large_q, small_q, rhs] = v;
    r.push(vec![
        kind.into(),
        lhs.into(),
        bilinear.into(),
        large_q.into(),
        small_q.into(),
        rhs.into(),
        Cell::Float((lhs - rhs).abs()),
        holds.into(),
    ]);
}

fn to_f64(v: Ratio<i128>) -> f64 {
    *v.numer() as f64 / *v.denom() as f64
}

pub fn decomp(x: u64, r_param: u32, seed: u64) -> gaussprime::Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ints: Vec<i128> = (0..=x).map(|_| rng.gen_range(-5..=5)).collect();
    let reals: Vec<f64> = (0..=x).map(|_| rng.gen_range(-1.0..=1.0)).collect();
    let mut r = Report::new("decomp", &["f", "lhs", "bilinear", "large_q", "small_q", "rhs", "abs_difference", "holds"]);
    r.param("x", x).param("r", r_param).param("seed", seed);

    let si = bilinear_split_check(&|l: u64| Ratio::from_integer(ints[l as usize]), x, r_param)?;
    let exact_holds = si.lhs == si.rhs();
    let v = [si.lhs, si.bilinear, si.large_q, si.small_q, si.rhs()].map(to_f64);
    split_row(&mut r, "integer", v, exact_holds);

    let sr = bilinear_split_check(&|l: u64| reals[l as usize], x, r_param)?;
    let real_holds = (sr.lhs - sr.rhs()).abs() <= 1e-9;
    split_row(&mut r, "real", [sr.lhs, sr.bilinear, sr.large_q, sr.small_q, sr.rhs()], real_holds);
    r.summarize("holds", exact_holds && real_holds);
    Ok(Outcome { report: r, identities_hold: exact_holds && real_holds })
}
