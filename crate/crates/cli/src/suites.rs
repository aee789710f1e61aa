//! Exhaustive and seeded identity suites.
//!
//! Each suite returns one [`Check`] per identity; a check records how many cases it
//! ran, how many failed, and the first failing case.

use gaussprime::arith::{divisor_witness_of, gcd, iroot, small_divisor_tau_mass, tau, SpfTable};
use gaussprime::congruences::{g0_count_with, g0_formula, g0_formula_applies, n_formula, G0Scratch};
use gaussprime::decomp::{bilinear_split_check, smooth_part_sides, vaughan_check_exact};
use gaussprime::gaussian::delta;
use gaussprime::lattice::{c_direct_terms, c_param_terms, lattice_pair_valid};
use gaussprime::sieve::factorization_identity_sides;
use gaussprime::symbols::*;
use gaussprime::{GaussianInt, PrimaryGaussian};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt::Display;

pub const SUITES: [&str; 10] =
    ["g0", "count", "multiplier", "symbols", "quotient", "split", "vaughan", "divisors", "factorization", "lattice"];

/// Result of one identity over a family of cases.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub bound: u64,
    pub checked: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
}

/// Counts for one chunk of cases, merged in case order.
#[derive(Debug, Clone, Default)]
struct Tally {
    checked: u64,
    violations: u64,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first.is_none() {
                self.first = Some(case());
            }
        }
    }

    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, got: gaussprime::Result<(T, T)>, case: impl Display) {
        match got {
            Ok((l, r)) => {
                let ok = l == r;
                self.record(ok, || format!("{case}: {l:?} != {r:?}"));
            }
            Err(e) => self.record(false, || format!("{case}: {e}")),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.violations += other.violations;
        if self.first.is_none() {
            self.first = other.first;
        }
        self
    }

    fn finish(self, suite: &'static str, name: &str, bound: u64) -> Check {
        Check {
            suite,
            name: name.to_string(),
            bound,
            checked: self.checked,
            violations: self.violations,
            first_violation: self.first,
        }
    }
}

fn merged(parts: Vec<Tally>) -> Tally {
    parts.into_iter().fold(Tally::default(), Tally::merge)
}

/// Suite sizes; `None` selects the suite default.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteParams {
    pub bound: Option<u64>,
    pub cases: Option<u64>,
    pub seed: u64,
}

pub fn default_bound(suite: &str) -> Option<u64> {
    Some(match suite {
        "g0" | "quotient" => 5000,
        "count" | "symbols" => 2000,
        "multiplier" => 500,
        "split" | "factorization" | "lattice" => 10_000,
        "vaughan" => 100_000,
        "divisors" => 1_000_000,
        _ => return None,
    })
}

pub fn default_cases(suite: &str) -> u64 {
    match suite {
        "symbols" => 10_000,
        "split" => 100,
        _ => 0,
    }
}

pub fn run_suite(suite: &str, p: SuiteParams) -> Option<Vec<Check>> {
    let bound = p.bound.or_else(|| default_bound(suite))?;
    let cases = p.cases.unwrap_or_else(|| default_cases(suite));
    Some(match suite {
        "g0" => g0_suite(bound),
        "count" => count_suite(bound),
        "multiplier" => multiplier_suite(bound),
        "symbols" => symbols_suite(bound, cases, p.seed),
        "quotient" => quotient_suite(bound),
        "split" => split_suite(bound, cases, p.seed),
        "vaughan" => vaughan_suite(bound),
        "divisors" => divisors_suite(bound),
        "factorization" => factorization_suite(bound),
        "lattice" => lattice_suite(bound),
        _ => return None,
    })
}

fn gaussians_up_to(bound: u64) -> Vec<GaussianInt> {
    let r = iroot(bound, 2) as i64;
    (-r..=r)
        .flat_map(|a| (-r..=r).map(move |b| GaussianInt::new(a, b)))
        .filter(|z| z.norm() <= bound as u128)
        .collect()
}

fn primary_primitive_up_to(bound: u64) -> Vec<PrimaryGaussian> {
    gaussians_up_to(bound)
        .into_iter()
        .filter(|&w| is_primary_primitive(w))
        .map(|w| PrimaryGaussian::new(w).expect("primary"))
        .collect()
}

fn square(r: i64) -> Vec<GaussianInt> {
    (-r..=r).flat_map(|a| (-r..=r).map(move |b| GaussianInt::new(a, b))).collect()
}

/// Elements with `(z, conj z) = 1` and norm at most `bound`, grouped by residue mod 8.
type ResidueClasses = BTreeMap<(i64, i64), Vec<GaussianInt>>;

fn residue_classes(bound: u64) -> (Vec<GaussianInt>, ResidueClasses) {
    let zs: Vec<GaussianInt> = gaussians_up_to(bound).into_iter().filter(|&z| coprime_to_conjugate(z)).collect();
    let mut classes = ResidueClasses::new();
    for &z in &zs {
        classes.entry(class8(z)).or_default().push(z);
    }
    (zs, classes)
}

fn class8(z: GaussianInt) -> (i64, i64) {
    (z.re.rem_euclid(8), z.im.rem_euclid(8))
}

/// Closed form for `G0` against the direct count of `g1^2 z2 = g2^2 z1 (mod |Delta|)`.
pub fn g0_suite(bound: u64) -> Vec<Check> {
    let (zs, classes) = residue_classes(bound);
    let parts: Vec<Tally> = zs
        .par_iter()
        .map_init(G0Scratch::default, |scratch, &z1| {
            let mut t = Tally::default();
            for &z2 in &classes[&class8(z1)] {
                if !g0_formula_applies(z1, z2) {
                    continue;
                }
                let got = (|| {
                    let m = delta(z1, z2)?.unsigned_abs() as i64;
                    Ok((g0_formula(z1, z2)?, Ratio::new(g0_count_with(z1, z2, scratch)? as i64, m)))
                })();
                t.compare(got, format_args!("({z1}, {z2})"));
            }
            t
        })
        .collect();
    let mut spot = Tally::default();
    let (a, b) = (GaussianInt::new(1, 4), GaussianInt::new(9, 4));
    spot.compare(g0_formula(a, b).map(|v| (v, Ratio::from_integer(5))), format_args!("({a}, {b})"));
    vec![merged(parts).finish("g0", "formula_vs_count", bound), spot.finish("g0", "spot_value", bound)]
}

/// `N(a; q) = q sum_{d | q} phi(d)/d (a/d)` against counting pairs with `a g1^2 = g2^2 (mod q)`.
pub fn count_suite(bound: u64) -> Vec<Check> {
    let qs: Vec<u64> = (1..=bound).step_by(2).collect();
    let parts: Vec<Tally> = qs
        .par_iter()
        .map(|&q| {
            let mut hist = vec![0u64; q as usize];
            let squares: Vec<u64> = (0..q).map(|g| g * g % q).collect();
            for &s in &squares {
                hist[s as usize] += 1;
            }
            let mut t = Tally::default();
            for a in (0..q).filter(|&a| gcd(a, q) == 1) {
                let brute: u64 = squares.iter().map(|&s| hist[(a * s % q) as usize]).sum();
                t.compare(n_formula(a as i64, q).map(|f| (f, brute)), format_args!("N({a}; {q})"));
            }
            t
        })
        .collect();
    let mut spot = Tally::default();
    spot.compare(n_formula(1, 5).map(|v| (v, 9)), "N(1; 5)");
    spot.compare(n_formula(2, 5).map(|v| (v, 1)), "N(2; 5)");
    vec![merged(parts).finish("count", "formula_vs_count", bound), spot.finish("count", "spot_values", bound)]
}

/// `[wz] = eps [w][z] (z/w)` and the two forms of `eps`, for odd `z = r + is` with `s` even.
pub fn multiplier_suite(bound: u64) -> Vec<Check> {
    let ws = primary_primitive_up_to(bound);
    let zs: Vec<GaussianInt> =
        gaussians_up_to(bound).into_iter().filter(|z| z.re % 2 != 0 && z.im % 2 == 0).collect();
    let parts: Vec<(Tally, Tally)> = ws
        .par_iter()
        .map(|&w| {
            let (mut rule, mut eps) = (Tally::default(), Tally::default());
            for &z in &zs {
                rule.compare(multiplier_sides(w, z), format_args!("w={w} z={z}"));
                let pair = (|| Ok((epsilon_unified(w.inner(), z)?, epsilon_factor(w.inner(), z)?)))();
                eps.compare(pair, format_args!("w={w} z={z}"));
            }
            (rule, eps)
        })
        .collect();
    let (rule, eps): (Vec<Tally>, Vec<Tally>) = parts.into_iter().unzip();
    vec![
        merged(rule).finish("multiplier", "multiplier_rule", bound),
        merged(eps).finish("multiplier", "epsilon_forms", bound),
    ]
}

/// Laws of the Dirichlet symbol: exhaustive over `N(w) <= bound`, plus seeded random triples.
pub fn symbols_suite(bound: u64, cases: u64, seed: u64) -> Vec<Check> {
    let ws = primary_primitive_up_to(bound);
    let box12 = square(12);
    let per_w: Vec<[Tally; 3]> = ws
        .par_iter()
        .map(|&w| {
            let mut t: [Tally; 3] = Default::default();
            let q = w.norm() as u64;
            let omega = root_of_primary(w).ok();
            for &z in &box12 {
                let defs = (|| {
                    let a = dirichlet_symbol(z, w)?;
                    let b = dirichlet_symbol_via_root(z, q, omega.ok_or(gaussprime::Error::Degenerate)?)?;
                    let c = dirichlet_symbol_coordinates(z, w)?;
                    Ok(((a, a), (b, c)))
                })();
                t[0].compare(defs, format_args!("w={w} z={z}"));
                t[1].compare(norm_relation_sides(z, w), format_args!("w={w} z={z}"));
            }
            for &v in &ws {
                let pair = (|| Ok((dirichlet_symbol(v.inner(), w)?, dirichlet_symbol(w.inner(), v)?)))();
                t[2].compare(pair, format_args!("w={w} z={v}"));
            }
            t
        })
        .collect();
    let mut defs = Tally::default();
    let mut norm = Tally::default();
    let mut recip = Tally::default();
    for [a, b, c] in per_w {
        defs = defs.merge(a);
        norm = norm.merge(b);
        recip = recip.merge(c);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut rdefs, mut product, mut lower) = (Tally::default(), Tally::default(), Tally::default());
    for _ in 0..cases {
        let w1 = ws[rng.gen_range(0..ws.len())];
        let w2 = ws[rng.gen_range(0..ws.len())];
        let z = GaussianInt::new(rng.gen_range(-300..=300), rng.gen_range(-300..=300));
        let d = (|| {
            let a = dirichlet_symbol(z, w1)?;
            let b = dirichlet_symbol_via_root(z, w1.norm() as u64, root_of_primary(w1)?)?;
            let c = dirichlet_symbol_coordinates(z, w1)?;
            Ok(((a, a), (b, c)))
        })();
        rdefs.compare(d, format_args!("w={w1} z={z}"));
        product.compare(product_law_sides(z, w1, w2), format_args!("z={z} w1={w1} w2={w2}"));
        lower.compare(lower_multiplicativity_sides(z, w1, w2), format_args!("z={z} w1={w1} w2={w2}"));
    }
    vec![
        defs.finish("symbols", "definitions", bound),
        rdefs.finish("symbols", "definitions_random", cases),
        recip.finish("symbols", "reciprocity", bound),
        norm.finish("symbols", "norm_relation", bound),
        product.finish("symbols", "product_law_random", cases),
        lower.finish("symbols", "lower_multiplicativity_random", cases),
    ]
}

/// `((z2/z1)/|Delta|) = (s1/|r1|)(s2/|r2|)` over all hypothesis pairs with norms at most `bound`.
pub fn quotient_suite(bound: u64) -> Vec<Check> {
    let (zs, classes) = residue_classes(bound);
    let parts: Vec<Tally> = zs
        .par_iter()
        .map(|&z1| {
            let mut t = Tally::default();
            for &z2 in &classes[&class8(z1)] {
                if quotient_identity_applies(z1, z2) {
                    t.compare(quotient_identity_sides(z1, z2), format_args!("({z1}, {z2})"));
                }
            }
            t
        })
        .collect();
    vec![merged(parts).finish("quotient", "quotient_symbol", bound)]
}

/// The bilinear split and its smooth part at `x = bound` for seeded random `f`, `r` in {2, 3}.
pub fn split_suite(bound: u64, cases: u64, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..cases).map(|_| rng.gen()).collect();
    let parts: Vec<[Tally; 4]> = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let mut t: [Tally; 4] = Default::default();
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let ints: Vec<i128> = (0..=bound).map(|_| rng.gen_range(-5..=5)).collect();
            let reals: Vec<f64> = (0..=bound).map(|_| rng.gen_range(-1.0..=1.0)).collect();
            let fi = |l: u64| Ratio::from_integer(ints[l as usize]);
            let fr = |l: u64| reals[l as usize];
            for r in [2u32, 3] {
                let case = format_args!("case {i} r={r}").to_string();
                t[0].compare(bilinear_split_check(&fi, bound, r).map(|s| (s.lhs, s.rhs())), &case);
                t[1].compare(smooth_part_sides(&fi, bound, r), &case);
                match bilinear_split_check(&fr, bound, r) {
                    Ok(s) => {
                        let diff = (s.lhs - s.rhs()).abs();
                        t[2].record(diff <= 1e-9, || format!("{case}: |difference| = {diff:e}"));
                    }
                    Err(e) => t[2].record(false, || format!("{case}: {e}")),
                }
                match smooth_part_sides(&fr, bound, r) {
                    Ok((l, rr)) => {
                        let diff = (l - rr).abs();
                        t[3].record(diff <= 1e-9, || format!("{case}: |difference| = {diff:e}"));
                    }
                    Err(e) => t[3].record(false, || format!("{case}: {e}")),
                }
            }
            t
        })
        .collect();
    let mut out: [Tally; 4] = Default::default();
    for p in parts {
        for (acc, t) in out.iter_mut().zip(p) {
            *acc = std::mem::take(acc).merge(t);
        }
    }
    let names = ["bilinear_split_integer", "smooth_part_integer", "bilinear_split_real", "smooth_part_real"];
    out.into_iter().zip(names).map(|(t, n)| t.finish("split", n, bound)).collect()
}

/// Vaughan's identity as an exact combination of logarithms for all `n <= bound`.
pub fn vaughan_suite(bound: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, y) in [("y=10", Some(10)), ("y=100", Some(100)), ("y=cbrt(n)", None)] {
        let parts: Vec<Tally> = (1..=bound)
            .collect::<Vec<_>>()
            .par_chunks(4096)
            .map(|chunk| {
                let mut t = Tally::default();
                for &n in chunk {
                    let yy = y.unwrap_or_else(|| iroot(n, 3).max(1));
                    match vaughan_check_exact(n, yy) {
                        Ok(ok) => t.record(ok, || format!("n={n} y={yy}")),
                        Err(e) => t.record(false, || format!("n={n} y={yy}: {e}")),
                    }
                }
                t
            })
            .collect();
        out.push(merged(parts).finish("vaughan", &format!("vaughan_{name}"), bound));
    }
    out
}

/// The divisor lemma: witnesses `d <= n^(1/k)` for `k = 2, 3, 4` and the small-divisor bound on `tau(n)`.
pub fn divisors_suite(bound: u64) -> Vec<Check> {
    let spf = SpfTable::new(bound);
    let parts: Vec<[Tally; 3]> = (1..=bound)
        .collect::<Vec<_>>()
        .par_chunks(4096)
        .map(|chunk| {
            let mut t: [Tally; 3] = Default::default();
            for &n in chunk {
                let f = spf.factorize(n);
                let tn = tau(n);
                for k in 2u32..=4 {
                    let d = divisor_witness_of(&f, k);
                    let general = d.is_some_and(|d| {
                        n % d == 0
                            && (d as u128).pow(k) <= n as u128
                            && (tn as f64).ln() <= k as f64 * (k as f64).log2() * (2.0 * tau(d) as f64).ln() + 1e-12
                    });
                    t[0].record(general, || format!("n={n} k={k} d={d:?}"));
                    if f.is_squarefree() {
                        let sq = d.is_some_and(|d| tn as u128 <= (2 * tau(d) as u128).pow(k));
                        t[1].record(sq, || format!("n={n} k={k} d={d:?}"));
                    }
                }
                let mass = small_divisor_tau_mass(&f);
                t[2].record(tn <= mass, || format!("n={n}: tau={tn} > {mass}"));
            }
            t
        })
        .collect();
    let mut out: [Tally; 3] = Default::default();
    for p in parts {
        for (acc, t) in out.iter_mut().zip(p) {
            *acc = std::mem::take(acc).merge(t);
        }
    }
    let names = ["general_witness", "squarefree_witness", "small_divisor_mass"];
    out.into_iter().zip(names).map(|(t, n)| t.finish("divisors", n, bound)).collect()
}

/// `4 a_{mn} = sum_{|w|^2 = m} sum_{|z|^2 = n} theta(Re conj(w) z)` for coprime `m`, odd `n`, `mn <= bound`.
pub fn factorization_suite(bound: u64) -> Vec<Check> {
    let parts: Vec<Tally> = (1..=bound)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&m| {
            let mut t = Tally::default();
            for n in (1..=bound / m).step_by(2) {
                if gcd(m, n) == 1 {
                    t.compare(factorization_identity_sides(m, n), format_args!("m={m} n={n}"));
                }
            }
            t
        })
        .collect();
    vec![merged(parts).finish("factorization", "four_a_mn", bound)]
}

/// Term-by-term equality of the direct and parameterized lattice counts for `|Delta| <= 200`.
pub fn lattice_suite(bound: u64) -> Vec<Check> {
    let zs: Vec<GaussianInt> = gaussians_up_to(50).into_iter().filter(|&z| coprime_to_conjugate(z)).collect();
    let pairs: Vec<(GaussianInt, GaussianInt)> = zs
        .iter()
        .flat_map(|&a| zs.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| lattice_pair_valid(a, b) && delta(a, b).is_ok_and(|d| d.abs() <= 200))
        .collect();
    let mut out = Vec::new();
    let mut scales = vec![16u64, 1000, bound];
    scales.dedup();
    for m in scales {
        let parts: Vec<Tally> = pairs
            .par_iter()
            .map(|&(z1, z2)| {
                let mut t = Tally::default();
                let got: gaussprime::Result<_> = (|| Ok((c_direct_terms(z1, z2, m as f64)?, c_param_terms(z1, z2, m as f64)?)))();
                match got {
                    Ok((a, b)) => t.record(a == b, || format!("({z1}, {z2}) M={m}")),
                    Err(e) => t.record(false, || format!("({z1}, {z2}) M={m}: {e}")),
                }
                t
            })
            .collect();
        out.push(merged(parts).finish("lattice", &format!("direct_vs_param_M={m}"), m));
    }
    out
}
