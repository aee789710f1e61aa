use gaussprime::arith::factorize;
use gaussprime::lattice::*;
use gaussprime::quadrature::e_gamma;
use gaussprime::sieve::*;

fn to_f64(r: num_rational::Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[test]
fn main_term_within_error_weight() {
    let k = kappa();
    for x in [10_000u64, 100_000, 1_000_000] {
        for d in 1..=100u64 {
            let f = factorize(d);
            if !f.is_cubefree() {
                continue;
            }
            let md = m_d(x, d);
            let main = 4.0 * to_f64(g(d).unwrap()) * k * (x as f64).powf(0.75);
            let err = 10.0 * to_f64(h(d).unwrap()) * (x as f64).sqrt();
            assert!((md - main).abs() <= err, "x={x} d={d}: M_d={md} main={main} err={err}");
        }
    }
}

#[test]
fn total_mass_tracks_main_term() {
    for x in [10_000u64, 1_000_000, 100_000_000] {
        let a = a_total(x) as f64;
        let main = 4.0 * kappa() * (x as f64).powf(0.75);
        assert!((a - main).abs() <= 10.0 * (x as f64).sqrt(), "x={x}");
    }
}

/// Trapezoid rule in `s = log t` on `[-80, 80]`, step `h`.
fn e_gamma_log_grid(gamma: f64, h: f64) -> f64 {
    let n = (160.0 / h).round() as i64;
    let mut acc = gaussprime::summation::Neumaier::new();
    for j in 0..=n {
        let s = -80.0 + j as f64 * h;
        let t = s.exp();
        let w = if j == 0 || j == n { 0.5 } else { 1.0 };
        acc.add(w * (t / (t * t - 2.0 * gamma * t + 1.0)).sqrt());
    }
    acc.value() * h
}

#[test]
fn e_gamma_two_grids() {
    for gamma in [-0.9, -0.5, 0.0, 0.3, 0.7, 0.9, 0.99] {
        let coarse = e_gamma_log_grid(gamma, 0.02);
        let fine = e_gamma_log_grid(gamma, 0.01);
        assert!((coarse - fine).abs() <= 1e-8, "gamma={gamma}: {coarse} vs {fine}");
        assert!((e_gamma(gamma).unwrap() - fine).abs() <= 1e-8, "gamma={gamma}");
    }
}

#[test]
fn box_average_matches_zero_frequency() {
    let bx = PolarBox { norm_lo: 1000, norm_hi: 4000, arg_lo: 0.5, arg_hi: 0.8 };
    let report = box_experiment(10_000.0, &bx).unwrap();
    assert!(report.rows.len() >= 100);
    assert!(report.relative_gap <= 0.25, "gap {}", report.relative_gap);
    for row in &report.rows {
        let (gm, dl) = angle_pair(row.z1, row.z2).unwrap();
        assert!((gm * gm + dl * dl - 1.0).abs() < 1e-12);
    }
}

#[test]
fn parameterized_count_matches_on_varied_scales() {
    let zs = [(1, 4), (9, 4), (5, 2), (-3, 8), (7, -6), (11, 10), (-13, 2), (3, -10)];
    for &(a, b) in &zs {
        for &(c, d) in &zs {
            let (z1, z2) = (gaussprime::GaussianInt::new(a, b), gaussprime::GaussianInt::new(c, d));
            if !lattice_pair_valid(z1, z2) {
                continue;
            }
            for m in [16.0, 250.0, 3000.0] {
                let direct = c_direct_terms(z1, z2, m).unwrap();
                let param = c_param_terms(z1, z2, m).unwrap();
                assert_eq!(direct, param, "{z1} {z2} M={m}");
                assert_eq!(direct.values().sum::<u64>(), param.values().sum::<u64>());
            }
        }
    }
}
