use gaussprime::arith::{factorize, gcd};
use gaussprime::congruences::*;
use gaussprime::GaussianInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `sq[v] = #{alpha mod d : alpha^2 = v}`.
fn square_histogram(d: u64) -> Vec<u64> {
    let mut sq = vec![0u64; d as usize];
    for a in 0..d {
        sq[(a * a % d) as usize] += 1;
    }
    sq
}

#[test]
fn rho_b_matches_counting_up_to_2000() {
    for d in 1..=2000u64 {
        let sq = square_histogram(d);
        for b in 0..d {
            let want = sq[((d - b * b % d) % d) as usize];
            assert_eq!(rho_b(b as i64, d), want, "b={b} d={d}");
        }
    }
}

#[test]
fn rho_matches_root_sets() {
    for d in 1..=5000u64 {
        let sq = square_histogram(d);
        assert_eq!(rho(d), sq[((d - 1) % d) as usize], "d={d}");
        assert_eq!(roots_minus_one(d).roots.len() as u64, rho(d));
    }
}

/// `(d, l^2) = gamma delta^2` with `gamma` squarefree; returns `delta`.
fn delta_of(l: u64, d: u64) -> u64 {
    let g = gcd(l * l % d, d);
    let g = if g == 0 { d } else { g };
    factorize(g).factors().iter().map(|&(p, e)| p.pow(e / 2)).product()
}

#[test]
fn rho_exp_reduction_up_to_500() {
    for d in 1..=500u64 {
        let unit: Vec<Complex64> =
            (0..d).map(|j| Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / d as f64)).collect();
        let mut roots_of: Vec<Vec<u64>> = vec![Vec::new(); d as usize];
        for nu in 0..d {
            roots_of[(nu * nu % d) as usize].push(nu);
        }
        for l in 0..d {
            let target = ((d - l * l % d) % d) as usize;
            let roots = &roots_of[target];
            let delta = delta_of(l, d);
            for k in 0..d {
                let direct: Complex64 = roots.iter().map(|&nu| unit[(nu * k % d) as usize]).sum();
                let reduced = rho_exp_reduced(k as i64, l as i64, d);
                assert!((direct - reduced).norm() < 1e-8, "k={k} l={l} d={d}: {direct} vs {reduced}");
                if k % delta != 0 {
                    assert!(direct.norm() < 1e-8, "k={k} l={l} d={d}");
                }
            }
        }
    }
}

fn lcm_gcd(a: u64, b: u64, q: u64) -> u64 {
    if a == 0 || b == 0 {
        return q;
    }
    gcd(a / gcd(a, b) * b, q)
}

#[test]
fn pair_count_bound_up_to_500() {
    for q in 1..=500u64 {
        let tq = factorize(q).tau();
        let sq: Vec<u64> = (0..q).map(|g| g * g % q).collect();
        // h[a][v] = #{g : a g^2 = v}, kept sparse
        let hist: Vec<Vec<(usize, u32)>> = (0..q)
            .map(|a| {
                let mut h = vec![0u32; q as usize];
                for &s in &sq {
                    h[(a * s % q) as usize] += 1;
                }
                h.iter().enumerate().filter(|(_, &c)| c > 0).map(|(v, &c)| (v, c)).collect()
            })
            .collect();
        let mut dense = vec![0u32; q as usize];
        for b in 0..q {
            for &(v, c) in &hist[b as usize] {
                dense[v] = c;
            }
            for a in b..q {
                let n: u64 = hist[a as usize].iter().map(|&(v, c)| c as u64 * dense[v] as u64).sum();
                assert!(n <= lcm_gcd(a, b, q) * q * tq, "a={a} b={b} q={q}");
            }
            for &(v, _) in &hist[b as usize] {
                dense[v] = 0;
            }
        }
        if q <= 40 {
            for a in 0..q as i64 {
                for b in 0..q as i64 {
                    let n: u64 = hist[a as usize]
                        .iter()
                        .map(|&(v, c)| c as u64 * hist[b as usize].iter().find(|p| p.0 == v).map_or(0, |p| p.1) as u64)
                        .sum();
                    assert_eq!(n, n2_brute(a, b, q));
                }
            }
        }
    }
}

#[test]
fn exponential_sum_bound_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(85);
    let mut done = 0;
    while done < 1000 {
        let z1 = GaussianInt::new(rng.gen_range(-15..=15), rng.gen_range(-15..=15));
        let z2 = GaussianInt::new(rng.gen_range(-15..=15), rng.gen_range(-15..=15));
        if !g0_formula_applies(z1, z2) {
            continue;
        }
        let (h1, h2) = (rng.gen_range(-30..=30), rng.gen_range(-30..=30));
        let g = g_sum(h1, h2, z1, z2).unwrap();
        assert!(g.norm() <= g_sum_bound(h1, h2, z1, z2).unwrap() + 1e-9, "{z1} {z2} {h1} {h2}");
        if h1 == 0 && h2 == 0 {
            let g0 = g0_formula(z1, z2).unwrap();
            assert!((g.re - *g0.numer() as f64 / *g0.denom() as f64).abs() < 1e-9);
        }
        done += 1;
    }
}

#[test]
fn g0_routes_small_norms() {
    let zs: Vec<GaussianInt> = (-20i64..=20)
        .flat_map(|a| (-20i64..=20).map(move |b| GaussianInt::new(a, b)))
        .filter(|z| z.norm() <= 400)
        .collect();
    let mut checked = 0;
    for &a in &zs {
        for &b in &zs {
            if g0_formula_applies(a, b) {
                let f = g0_formula(a, b).unwrap();
                assert_eq!(f, g0_brute(a, b).unwrap(), "{a} {b}");
                assert_eq!(f, g0_local_product(a, b).unwrap(), "{a} {b}");
                checked += 1;
            }
        }
    }
    assert!(checked > 500, "{checked}");
}
