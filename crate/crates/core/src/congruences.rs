//! Counting kernels for quadratic congruences: roots of `x^2 + 1`, the rho-functions,
//! square-root counts, the pair counts `N(a; q)` and the sums `G(h1, h2)` and `G0`.

use num_complex::Complex64;
use num_rational::Ratio;

use crate::arith::{
    count_sqrt_mod, euler_phi_of, factorize, gcd, gcd_i64, is_prime, jacobi, jacobi_extended, sqrt_mod_composite,
    Factorization,
};
use crate::gaussian::{delta, ggcd, rational_residue, GaussianInt};
use crate::summation::Neumaier;
use crate::symbols::coprime_to_conjugate;
use crate::{Error, Result};

/// The residues `nu mod d` with `nu^2 + 1 = 0 (mod d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    pub d: u64,
    pub roots: Vec<u64>,
}

pub fn roots_minus_one(d: u64) -> RootSet {
    roots_minus_one_with(&factorize(d))
}

pub fn roots_minus_one_with(f: &Factorization) -> RootSet {
    RootSet { d: f.n(), roots: sqrt_mod_composite(-1, f) }
}

/// Number of roots of `x^2 + 1 (mod d)`.
pub fn rho(d: u64) -> u64 {
    rho_of(&factorize(d))
}

pub fn rho_of(f: &Factorization) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, e)| match (p % 4, p, e) {
            (_, 2, 1) => 1,
            (_, 2, _) => 0,
            (1, _, _) => 2,
            _ => 0,
        })
        .product()
}

/// Largest `d2` with `d2^2 | d`.
pub fn square_part_root(f: &Factorization) -> u64 {
    f.factors().iter().map(|&(p, e)| p.pow(e / 2)).product()
}

/// `#{alpha mod d : alpha^2 + b^2 = 0 (mod d)}` via `(b, d2) rho(d / (b^2, d))`.
pub fn rho_b(b: i64, d: u64) -> u64 {
    rho_b_of(b, &factorize(d))
}

pub fn rho_b_of(b: i64, f: &Factorization) -> u64 {
    let d = f.n();
    let d2 = square_part_root(f);
    let bm = b.unsigned_abs() % d;
    let b2 = (bm as u128 * bm as u128 % d as u128) as u64;
    let g = gcd(b2, d);
    gcd(bm, d2) * rho(d / g)
}

/// Direct count of `alpha mod d` with `alpha^2 + b^2 = 0 (mod d)`.
pub fn rho_b_brute(b: i64, d: u64) -> u64 {
    let b2 = (b as i128 * b as i128).rem_euclid(d as i128) as u64;
    (0..d).filter(|&a| (a as u128 * a as u128 + b2 as u128).is_multiple_of(d as u128)).count() as u64
}

fn e_frac(num: u64, den: u64) -> Complex64 {
    let theta = std::f64::consts::TAU * (num % den) as f64 / den as f64;
    Complex64::new(theta.cos(), theta.sin())
}

/// `sum_{nu^2 + l^2 = 0 (mod d)} e(nu k / d)`, by enumerating the roots.
pub fn rho_exp(k: i64, l: i64, d: u64) -> Complex64 {
    let f = factorize(d);
    let minus_l2 = -((l as i128 * l as i128).rem_euclid(d as i128) as i64);
    let kk = k.rem_euclid(d as i64) as u64;
    let (mut re, mut im) = (Neumaier::new(), Neumaier::new());
    for nu in sqrt_mod_composite(minus_l2, &f) {
        let z = e_frac((nu as u128 * kk as u128 % d as u128) as u64, d);
        re.add(z.re);
        im.add(z.im);
    }
    Complex64::new(re.value(), im.value())
}

/// The same sum through the reduction to `l = 1`: with `(d, l^2) = gamma delta^2`,
/// it is `delta * rho(k' l', 1; d')` when `delta | k` and zero otherwise.
pub fn rho_exp_reduced(k: i64, l: i64, d: u64) -> Complex64 {
    let (gamma, delta_, d_prime) = split_gcd_with_square(l, d);
    if k.rem_euclid(delta_ as i64) != 0 {
        return Complex64::new(0.0, 0.0);
    }
    let k_prime = k / delta_ as i64;
    let l_prime = l / (gamma * delta_) as i64;
    let kl = (k_prime as i128 * l_prime as i128).rem_euclid(d_prime as i128) as i64;
    rho_exp(kl, 1, d_prime) * delta_ as f64
}

/// `(gamma, delta, d')` with `(d, l^2) = gamma delta^2`, `gamma` squarefree, `d = gamma delta^2 d'`.
fn split_gcd_with_square(l: i64, d: u64) -> (u64, u64, u64) {
    let lm = l.unsigned_abs() % d;
    let g = gcd((lm as u128 * lm as u128 % d as u128) as u64, d);
    let g = if g == 0 { d } else { g };
    let f = factorize(g);
    let mut gamma = 1;
    let mut delta_ = 1;
    for &(p, e) in f.factors() {
        if e % 2 == 1 {
            gamma *= p;
        }
        delta_ *= p.pow(e / 2);
    }
    (gamma, delta_, d / g)
}

/// `#{omega mod b : omega^2 = a (mod b)}`.
pub fn n_sqrt(a: i64, b: u64) -> u64 {
    count_sqrt_mod(a, &factorize(b))
}

/// `#{(g1, g2) mod q : a g1^2 = g2^2 (mod q)}` by direct counting.
pub fn n_brute(a: i64, q: u64) -> u64 {
    n2_brute(a, 1, q)
}

/// `#{(g1, g2) mod q : a g1^2 = b g2^2 (mod q)}` by direct counting.
pub fn n2_brute(a: i64, b: i64, q: u64) -> u64 {
    let qq = q as usize;
    let am = (a as i128).rem_euclid(q as i128) as u64;
    let bm = (b as i128).rem_euclid(q as i128) as u64;
    let mut hits = vec![0u64; qq];
    for g in 0..q {
        let v = (bm as u128 * (g as u128 * g as u128 % q as u128) % q as u128) as usize;
        hits[v] += 1;
    }
    (0..q)
        .map(|g| {
            let v = (am as u128 * (g as u128 * g as u128 % q as u128) % q as u128) as usize;
            hits[v]
        })
        .sum()
}

/// `q sum_{d | q} phi(d)/d (a/d)` for odd `q` and `(a, q) = 1`.
pub fn n_formula(a: i64, q: u64) -> Result<u64> {
    if q.is_multiple_of(2) || gcd_i64(a, q as i64) != 1 {
        return Err(Error::Hypothesis(format!("N({a}; {q}) needs q odd and (a, q) = 1")));
    }
    let mut acc: i128 = 0;
    for df in factorize(q).divisor_factorizations() {
        let d = df.n();
        let j = jacobi(a.rem_euclid(d as i64), d as i64)?.to_i64() as i128;
        acc += (q / d) as i128 * euler_phi_of(&df) as i128 * j;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// `p^-nu N(a; p^nu)` as an exact rational.
pub fn n_local(a: i64, p: u64, nu: u32) -> Result<Ratio<i64>> {
    if !is_prime(p) {
        return Err(Error::Hypothesis(format!("{p} is not prime")));
    }
    if p == 2 {
        if nu < 1 || a.rem_euclid(8) != 1 {
            return Err(Error::Hypothesis("2-adic case needs a = 1 (mod 8) and nu >= 1".into()));
        }
        return Ok(Ratio::from_integer(nu as i64));
    }
    if a.rem_euclid(p as i64) == 0 {
        return Err(Error::Hypothesis(format!("({a}, {p}) > 1")));
    }
    let chi = jacobi(a, p as i64)?.to_i64();
    let inner = (nu / 2) as i64 + nu.div_ceil(2) as i64 * chi;
    let p = p as i64;
    Ok(Ratio::from_integer(1) + Ratio::new(p - 1, p) * inner)
}

fn delta_abs(z1: GaussianInt, z2: GaussianInt) -> Result<u64> {
    let d = delta(z1, z2)?;
    if d == 0 {
        return Err(Error::Degenerate);
    }
    Ok(d.unsigned_abs())
}

/// `(1/|Delta|) sum e((g1 h1 + g2 h2)/|Delta|)` over `g1^2 z2 = g2^2 z1 (mod |Delta|)`.
pub fn g_sum(h1: i64, h2: i64, z1: GaussianInt, z2: GaussianInt) -> Result<Complex64> {
    let m = delta_abs(z1, z2)?;
    let mi = m as i128;
    let reduce = |z: GaussianInt| (z.re as i128).rem_euclid(mi) as u64 * m + (z.im as i128).rem_euclid(mi) as u64;
    let (h1, h2) = (h1.rem_euclid(m as i64) as u64, h2.rem_euclid(m as i64) as u64);
    let mut freq = vec![0u64; m as usize];
    let lhs: Vec<u64> = (0..m).map(|g| reduce(scale_mod(z2, g * g % m, m))).collect();
    let rhs: Vec<u64> = (0..m).map(|g| reduce(scale_mod(z1, g * g % m, m))).collect();
    for (g1, a) in lhs.iter().enumerate() {
        for (g2, b) in rhs.iter().enumerate() {
            if a == b {
                let phase = (g1 as u128 * h1 as u128 + g2 as u128 * h2 as u128) % m as u128;
                freq[phase as usize] += 1;
            }
        }
    }
    let (mut re, mut im) = (Neumaier::new(), Neumaier::new());
    for (j, &c) in freq.iter().enumerate() {
        if c > 0 {
            let z = e_frac(j as u64, m) * c as f64;
            re.add(z.re);
            im.add(z.im);
        }
    }
    Ok(Complex64::new(re.value(), im.value()) / m as f64)
}

fn scale_mod(z: GaussianInt, k: u64, m: u64) -> GaussianInt {
    let mi = m as i128;
    GaussianInt::new(
        (z.re as i128 * k as i128).rem_euclid(mi) as i64,
        (z.im as i128 * k as i128).rem_euclid(mi) as i64,
    )
}

/// Reusable scratch space for [`g0_count_with`].
#[derive(Debug, Default)]
pub struct G0Scratch {
    head: Vec<u32>,
    next: Vec<u32>,
    second: Vec<u32>,
}

/// `#{(g1, g2) mod |Delta| : g1^2 z2 = g2^2 z1 (mod |Delta|)}` by direct counting.
pub fn g0_count(z1: GaussianInt, z2: GaussianInt) -> Result<u64> {
    g0_count_with(z1, z2, &mut G0Scratch::default())
}

/// As [`g0_count`], bucketing the values `g2^2 z1` by real part so each `g1` scans one bucket.
pub fn g0_count_with(z1: GaussianInt, z2: GaussianInt, s: &mut G0Scratch) -> Result<u64> {
    let m = delta_abs(z1, z2)?;
    let n = m as usize;
    let mi = m as i64;
    const NIL: u32 = u32::MAX;
    s.head.clear();
    s.head.resize(n, NIL);
    s.next.clear();
    s.next.resize(n, NIL);
    s.second.clear();
    s.second.resize(n, 0);
    let (a1, b1) = (z1.re.rem_euclid(mi) as u64, z1.im.rem_euclid(mi) as u64);
    let (a2, b2) = (z2.re.rem_euclid(mi) as u64, z2.im.rem_euclid(mi) as u64);
    let sq = |g: u64| (g as u128 * g as u128 % m as u128) as u64;
    let mulm = |x: u64, y: u64| (x as u128 * y as u128 % m as u128) as u64;
    for g in 0..m {
        let q = sq(g);
        let (re, im) = (mulm(q, a1), mulm(q, b1));
        s.second[g as usize] = im as u32;
        s.next[g as usize] = s.head[re as usize];
        s.head[re as usize] = g as u32;
    }
    let mut count = 0u64;
    for g in 0..m {
        let q = sq(g);
        let (re, im) = (mulm(q, a2), mulm(q, b2));
        let mut j = s.head[re as usize];
        while j != NIL {
            if s.second[j as usize] == im as u32 {
                count += 1;
            }
            j = s.next[j as usize];
        }
    }
    Ok(count)
}

/// `G0 = #{...} / |Delta|` from the direct count.
pub fn g0_brute(z1: GaussianInt, z2: GaussianInt) -> Result<Ratio<i64>> {
    let m = delta_abs(z1, z2)?;
    Ok(Ratio::new(g0_count(z1, z2)? as i64, m as i64))
}

/// Coprimality hypotheses of the closed form for `G0`: `(z1, z2) = (z1, conj z1) = (z2, conj z2) = 1`
/// and `z1 = z2 (mod 8)`, with `Delta != 0`.
pub fn g0_formula_applies(z1: GaussianInt, z2: GaussianInt) -> bool {
    coprime_to_conjugate(z1)
        && coprime_to_conjugate(z2)
        && (z1.re - z2.re).rem_euclid(8) == 0
        && (z1.im - z2.im).rem_euclid(8) == 0
        && delta(z1, z2).is_ok_and(|d| d != 0)
        && ggcd(z1, z2).is_ok_and(|g| g == GaussianInt::ONE)
}

/// `G0 = 2 sum_{4d | Delta} phi(d)/d ((z2/z1)/d)`.
pub fn g0_formula(z1: GaussianInt, z2: GaussianInt) -> Result<Ratio<i64>> {
    if !g0_formula_applies(z1, z2) {
        return Err(Error::Hypothesis(format!("closed form for G0 does not apply to ({z1}, {z2})")));
    }
    let m = delta_abs(z1, z2)?;
    let t = rational_residue(z1, z2, m)? as i64;
    let mut acc = Ratio::from_integer(0i64);
    for df in factorize(m / 4).divisor_factorizations() {
        let d = df.n() as i64;
        let j = jacobi_extended(t, d)?.to_i64();
        if j != 0 {
            acc += Ratio::new(euler_phi_of(&df) as i64 * j, d);
        }
    }
    Ok(acc * 2)
}

/// The local product `prod_{p^nu || Delta} p^-nu N(z2/z1; p^nu)`.
pub fn g0_local_product(z1: GaussianInt, z2: GaussianInt) -> Result<Ratio<i64>> {
    let m = delta_abs(z1, z2)?;
    let t = rational_residue(z1, z2, m)? as i64;
    let mut acc = Ratio::from_integer(1i64);
    for &(p, e) in factorize(m).factors() {
        acc *= n_local(t, p, e)?;
    }
    Ok(acc)
}

/// `4 tau_3(Delta) |Delta|^-1 (z1 h1^2 - z2 h2^2, Delta)`, the gcd read componentwise.
pub fn g_sum_bound(h1: i64, h2: i64, z1: GaussianInt, z2: GaussianInt) -> Result<f64> {
    let m = delta_abs(z1, z2)?;
    let lam = z1.checked_scale(h1 * h1)?.checked_sub(z2.checked_scale(h2 * h2)?)?;
    let g = gcd(m, gcd(lam.re.unsigned_abs(), lam.im.unsigned_abs()));
    let t3 = crate::arith::tau_k(m, 3);
    Ok(4.0 * t3 as f64 * g as f64 / m as f64)
}

/// The representation `d = r^2 + s^2`, `-s < r <= s`, `(r, s) = 1`, with `nu s = r (mod d)`.
pub fn root_to_representation(nu: u64, d: u64) -> Result<(i64, i64)> {
    let dd = d as i128;
    let nu = nu % d;
    if (nu as i128 * nu as i128 + 1).rem_euclid(dd) != 0 {
        return Err(Error::NotARoot(nu, d));
    }
    // Gauss reduction of the lattice {(x, y) : x = nu y (mod d)}
    let (mut a, mut b) = ((dd, 0i128), (nu as i128, 1i128));
    let n2 = |v: (i128, i128)| v.0 * v.0 + v.1 * v.1;
    if n2(a) < n2(b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let nb = n2(b);
        let dot = a.0 * b.0 + a.1 * b.1;
        let q = (2 * dot + nb).div_euclid(2 * nb);
        let r = (a.0 - q * b.0, a.1 - q * b.1);
        if n2(r) >= nb {
            break;
        }
        a = b;
        b = r;
    }
    if n2(b) != dd {
        return Err(Error::NoPrimitiveRepresentation(d));
    }
    let (x, y) = b;
    for (r, s) in [(x, y), (-y, x), (-x, -y), (y, -x)] {
        if s > 0 && -s < r && r <= s {
            return Ok((r as i64, s as i64));
        }
    }
    Err(Error::NoPrimitiveRepresentation(d))
}

/// Outcome of the root-spacing scan.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SpacingReport {
    pub moduli: u64,
    pub points: u64,
    pub pairs_checked: u64,
    /// `(nu1, d1, nu2, d2)` for each violating pair.
    pub violations: Vec<(u64, u64, u64, u64)>,
}

/// Checks `||nu1/d1 - nu2/d2|| > 1/(4 sqrt(d1 d2))` for roots with moduli in `(8D/9, D]`,
/// `r1, r2` of the same sign and `2/3 <= s1/s2 <= 3/2`.
pub fn root_spacing_check(dmax: u64) -> SpacingReport {
    let lo = 8 * dmax / 9;
    let mut pts: Vec<(u64, u64, i64, i64)> = Vec::new();
    let mut report = SpacingReport::default();
    for d in (lo + 1)..=dmax {
        report.moduli += 1;
        for nu in roots_minus_one(d).roots {
            let (r, s) = root_to_representation(nu, d).expect("every root has a representation");
            pts.push((nu, d, r, s));
        }
    }
    report.points = pts.len() as u64;
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let (nu1, d1, r1, s1) = pts[i];
            let (nu2, d2, r2, s2) = pts[j];
            if r1.signum() != r2.signum() || 3 * s1 < 2 * s2 || 2 * s1 > 3 * s2 {
                continue;
            }
            report.pairs_checked += 1;
            let den = d1 as u128 * d2 as u128;
            let num = (nu1 as i128 * d2 as i128 - nu2 as i128 * d1 as i128).rem_euclid(den as i128) as u128;
            let near = num.min(den - num);
            if 16 * near * near <= den {
                report.violations.push((nu1, d1, nu2, d2));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn root_examples() {
        assert_eq!(roots_minus_one(5).roots, vec![2, 3]);
        assert_eq!(roots_minus_one(65).roots, vec![8, 18, 47, 57]);
        assert!(roots_minus_one(12).roots.is_empty());
        assert_eq!(roots_minus_one(1).roots, vec![0]);
        assert_eq!(rho(5), 2);
        assert_eq!(rho(4), 0);
        assert_eq!(rho(65), 4);
        assert_eq!(rho(2), 1);
    }

    #[test]
    fn rho_counts_roots() {
        for d in 1..=100_000 {
            let f = factorize(d);
            assert_eq!(rho_of(&f), roots_minus_one_with(&f).roots.len() as u64, "d={d}");
        }
    }

    #[test]
    fn representation_examples() {
        assert_eq!(root_to_representation(2, 5).unwrap(), (-1, 2));
        assert_eq!(root_to_representation(3, 5).unwrap(), (1, 2));
        assert_eq!(root_to_representation(1, 2).unwrap(), (1, 1));
        assert!(root_to_representation(4, 5).is_err());
    }

    #[test]
    fn representations_cover_all_roots() {
        for d in 2..=3000u64 {
            for nu in roots_minus_one(d).roots {
                let (r, s) = root_to_representation(nu, d).unwrap();
                assert_eq!((r * r + s * s) as u64, d);
                assert_eq!(gcd_i64(r, s), 1);
                assert!(-s < r && r <= s);
                assert_eq!((nu as i64 * s - r).rem_euclid(d as i64), 0);
            }
        }
    }

    #[test]
    fn rho_b_examples() {
        assert_eq!(rho_b(2, 4), 2);
        assert_eq!(rho_b(3, 9), 3);
        for d in 1..200 {
            assert_eq!(rho_b(1, d), rho(d));
        }
    }

    #[test]
    fn rho_b_formula_matches_brute() {
        for d in 1..=400u64 {
            let f = factorize(d);
            for b in 0..d as i64 {
                assert_eq!(rho_b_of(b, &f), rho_b_brute(b, d), "b={b} d={d}");
            }
        }
    }

    #[test]
    fn rho_exp_examples() {
        let z = rho_exp(1, 1, 5);
        assert!((z.re - 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos()).abs() < 1e-12);
        assert!(z.im.abs() < 1e-12);
        assert_eq!(rho_exp(7, 1, 3), Complex64::new(0.0, 0.0));
        for d in 1..60 {
            for l in 0..d as i64 {
                assert!((rho_exp(0, l, d).re - rho_b(l, d) as f64).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn rho_exp_reduction_small() {
        for d in 1..=120u64 {
            for k in 0..d as i64 {
                for l in 0..d as i64 {
                    let a = rho_exp(k, l, d);
                    let b = rho_exp_reduced(k, l, d);
                    assert!((a - b).norm() < 1e-9, "k={k} l={l} d={d}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn n_examples() {
        assert_eq!(n_sqrt(1, 5), 2);
        assert_eq!(n_sqrt(9, 25), 2);
        for a in 1..6 {
            assert_eq!(n_sqrt(1, 1 << a), 4u64.min(1 << (a - 1)));
        }
        assert_eq!(n_brute(1, 5), 9);
        assert_eq!(n_brute(2, 5), 1);
        assert_eq!(n_brute(1, 15), 45);
        assert_eq!(n_formula(1, 5).unwrap(), 9);
        assert_eq!(n_formula(2, 5).unwrap(), 1);
        assert_eq!(n_formula(1, 15).unwrap(), 45);
        assert!(n_formula(1, 6).is_err());
        assert!(n_formula(5, 15).is_err());
        assert_eq!(n2_brute(1, 1, 5), 9);
        assert_eq!(n2_brute(0, 0, 7), 49);
        assert_eq!(n2_brute(1, 2, 5), 1);
    }

    #[test]
    fn n_local_examples() {
        assert_eq!(n_local(1, 5, 1).unwrap(), Ratio::new(9, 5));
        assert_eq!(n_local(1, 2, 5).unwrap(), Ratio::from_integer(5));
        assert_eq!(n_local(2, 5, 2).unwrap() * 25, Ratio::from_integer(n_brute(2, 25) as i64));
        assert!(n_local(3, 2, 3).is_err());
        assert!(n_local(5, 5, 1).is_err());
    }

    #[test]
    fn n_local_matches_brute_on_prime_powers() {
        for p in crate::arith::primes_up_to(4096) {
            let mut nu = 1;
            while p.pow(nu) <= 4096 {
                let q = p.pow(nu);
                let residues: Vec<i64> = if p == 2 { vec![1, 9, 17, 25] } else { (1..p as i64).collect() };
                for a in residues {
                    let local = n_local(a, p, nu).unwrap() * q as i64;
                    assert_eq!(local, Ratio::from_integer(n_brute(a, q) as i64), "a={a} p^nu={q}");
                }
                nu += 1;
            }
        }
    }

    #[test]
    fn g_sum_bound_small() {
        for q in 1..=60u64 {
            let tq = factorize(q).tau();
            for a in 0..q as i64 {
                for b in 0..q as i64 {
                    let lcm = if a == 0 || b == 0 { 0 } else { a / gcd_i64(a, b) as i64 * b };
                    let bound = gcd(lcm as u64, q) * q * tq;
                    assert!(n2_brute(a, b, q) <= bound, "a={a} b={b} q={q}");
                }
            }
        }
    }

    #[test]
    fn g0_example() {
        let (z1, z2) = (g(1, 4), g(9, 4));
        assert_eq!(g0_brute(z1, z2).unwrap(), Ratio::from_integer(5));
        assert_eq!(g0_formula(z1, z2).unwrap(), Ratio::from_integer(5));
        assert_eq!(g0_local_product(z1, z2).unwrap(), Ratio::from_integer(5));
        assert_eq!(g_sum(0, 0, z1, z2).unwrap(), Complex64::new(5.0, 0.0));
        assert!(g0_formula(g(1, 4), g(3, 4)).is_err());
    }

    #[test]
    fn g_sum_conjugate_symmetry() {
        let (z1, z2) = (g(1, 4), g(9, 4));
        for (h1, h2) in [(1, 0), (0, 1), (3, 5), (7, -2)] {
            let a = g_sum(h1, h2, z1, z2).unwrap();
            let b = g_sum(-h1, -h2, z1, z2).unwrap();
            assert!((a - b.conj()).norm() < 1e-12);
            assert!(a.norm() <= g_sum_bound(h1, h2, z1, z2).unwrap() + 1e-12);
        }
    }

    #[test]
    fn spacing_small() {
        assert!(root_spacing_check(100).violations.is_empty());
        assert!(root_spacing_check(2).violations.is_empty());
    }
}
