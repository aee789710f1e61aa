//! Python module `gaussprime`.

use gaussprime::eigen::HeckeCharacter;
use gaussprime::{congruences, decomp, eigen, gaussian, lattice, quadrature, sieve, symbols};
use gaussprime::{GaussianInt, PrimaryGaussian};
use num_rational::Ratio;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: gaussprime::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A Gaussian integer `re + im i`.
#[pyclass(name = "GaussianInt", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyGaussianInt {
    inner: GaussianInt,
}

impl From<GaussianInt> for PyGaussianInt {
    fn from(inner: GaussianInt) -> Self {
        PyGaussianInt { inner }
    }
}

#[pymethods]
impl PyGaussianInt {
    #[new]
    #[pyo3(signature = (re, im = 0))]
    fn new(re: i64, im: i64) -> Self {
        GaussianInt::new(re, im).into()
    }

    #[getter]
    fn re(&self) -> i64 {
        self.inner.re
    }

    #[getter]
    fn im(&self) -> i64 {
        self.inner.im
    }

    fn norm(&self) -> u128 {
        self.inner.norm()
    }

    fn conj(&self) -> Self {
        self.inner.conj().into()
    }

    fn is_primary(&self) -> bool {
        gaussian::is_primary(self.inner)
    }

    fn is_primitive(&self) -> bool {
        self.inner.is_primitive()
    }

    /// The primary associate `i^k z` together with `k`.
    fn primary_associate(&self) -> PyResult<(Self, u8)> {
        let (p, u) = gaussian::primary_associate(self.inner).map_err(err)?;
        Ok((p.inner().into(), u as u8))
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        self.inner.checked_add(o.inner).map(Into::into).map_err(err)
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        self.inner.checked_sub(o.inner).map(Into::into).map_err(err)
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        self.inner.checked_mul(o.inner).map(Into::into).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("GaussianInt({}, {})", self.inner.re, self.inner.im)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

fn primary(z: &PyGaussianInt) -> PyResult<PrimaryGaussian> {
    PrimaryGaussian::new(z.inner).map_err(err)
}

fn ratio(r: Ratio<i64>) -> (i64, i64) {
    (*r.numer(), *r.denom())
}

fn complex(z: eigen::ComplexValue) -> (f64, f64) {
    (z.re, z.im)
}

#[pyfunction]
fn ggcd(a: &PyGaussianInt, b: &PyGaussianInt) -> PyResult<PyGaussianInt> {
    gaussian::ggcd(a.inner, b.inner).map(Into::into).map_err(err)
}

#[pyfunction]
fn delta(z1: &PyGaussianInt, z2: &PyGaussianInt) -> PyResult<i64> {
    gaussian::delta(z1.inner, z2.inner).map_err(err)
}

/// The Dirichlet symbol `(z/w)` for primary primitive `w`, as -1, 0 or 1.
#[pyfunction]
fn dirichlet_symbol(z: &PyGaussianInt, w: &PyGaussianInt) -> PyResult<i64> {
    Ok(symbols::dirichlet_symbol(z.inner, primary(w)?).map_err(err)?.to_i64())
}

/// The Jacobi-Kubota symbol `[z]` as a pair `(re, im)`.
#[pyfunction]
fn jacobi_kubota(z: &PyGaussianInt) -> PyResult<(i64, i64)> {
    Ok(symbols::jacobi_kubota(z.inner).map_err(err)?.to_pair())
}

/// Both sides of the multiplier rule `[wz] = eps [w][z] (z/w)`.
#[pyfunction]
fn multiplier_sides(w: &PyGaussianInt, z: &PyGaussianInt) -> PyResult<((i64, i64), (i64, i64))> {
    let (l, r) = symbols::multiplier_sides(primary(w)?, z.inner).map_err(err)?;
    Ok((l.to_pair(), r.to_pair()))
}

#[pyfunction]
fn spin(p: u64) -> PyResult<i64> {
    Ok(symbols::spin(p).map_err(err)?.to_i64())
}

#[pyfunction]
fn rho(d: u64) -> u64 {
    congruences::rho(d)
}

#[pyfunction]
fn n_formula(a: i64, q: u64) -> PyResult<u64> {
    congruences::n_formula(a, q).map_err(err)
}

#[pyfunction]
fn n_brute(a: i64, q: u64) -> u64 {
    congruences::n_brute(a, q)
}

/// `G0` from the closed form, as `(numerator, denominator)`.
#[pyfunction]
fn g0_formula(z1: &PyGaussianInt, z2: &PyGaussianInt) -> PyResult<(i64, i64)> {
    congruences::g0_formula(z1.inner, z2.inner).map(ratio).map_err(err)
}

/// `G0` by direct counting, as `(numerator, denominator)`.
#[pyfunction]
fn g0_brute(z1: &PyGaussianInt, z2: &PyGaussianInt) -> PyResult<(i64, i64)> {
    congruences::g0_brute(z1.inner, z2.inner).map(ratio).map_err(err)
}

#[pyfunction]
fn a_total(x: u64) -> u64 {
    sieve::a_total(x)
}

#[pyfunction]
fn g(d: u64) -> PyResult<(i64, i64)> {
    sieve::g(d).map(ratio).map_err(err)
}

#[pyfunction]
fn kappa() -> f64 {
    quadrature::kappa()
}

#[pyfunction]
fn e_gamma(gamma: f64) -> PyResult<f64> {
    quadrature::e_gamma(gamma).map_err(err)
}

#[pyfunction]
fn theorem1_experiment(py: Python<'_>, x: u64) -> PyResult<Bound<'_, PyDict>> {
    let e = sieve::theorem1_experiment(x).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("x", e.x)?;
    d.set_item("observed", e.observed)?;
    d.set_item("predicted", e.predicted)?;
    d.set_item("ratio", e.ratio)?;
    d.set_item("pair_count", e.pair_count)?;
    d.set_item("runtime_s", e.runtime_seconds)?;
    Ok(d)
}

/// Remainder scan as `(sum |r_d|, [(d, A_d, r_d), ...])`.
#[pyfunction]
fn remainder_scan(x: u64, d_max: u64) -> (f64, Vec<(u64, u64, f64)>) {
    let s = sieve::remainder_scan(x, d_max);
    (s.sum_abs_r, s.rows.iter().map(|r| (r.d, r.a_d, r.r_d)).collect())
}

/// `(sum of spins, number of primes)` over `p = 1 (mod 4)`, `p <= x`.
#[pyfunction]
fn spin_sum(x: u64) -> PyResult<(i64, u64)> {
    eigen::spin_sum(x).map(|s| (s.sum, s.prime_count)).map_err(err)
}

#[pyfunction]
fn lambda0(n: u64) -> PyResult<i64> {
    eigen::lambda0(n).map_err(err)
}

/// `lambda(n)` for the character `z -> (z/|z|)^(4k)`, optionally twisted by a primary primitive `w`.
#[pyfunction]
#[pyo3(signature = (n, k = 0, twist = None))]
fn quad_lambda(n: u64, k: i64, twist: Option<PyGaussianInt>) -> PyResult<(f64, f64)> {
    let psi = HeckeCharacter::new(k, twist.map(|t| t.inner)).map_err(err)?;
    eigen::quad_lambda(n, &psi).map(complex).map_err(err)
}

#[pyfunction]
fn c_direct(z1: &PyGaussianInt, z2: &PyGaussianInt, m: f64) -> PyResult<f64> {
    lattice::c_direct(z1.inner, z2.inner, m).map_err(err)
}

#[pyfunction]
fn c_param(z1: &PyGaussianInt, z2: &PyGaussianInt, m: f64) -> PyResult<f64> {
    lattice::c_param(z1.inner, z2.inner, m).map_err(err)
}

#[pyfunction]
fn c0(z1: &PyGaussianInt, z2: &PyGaussianInt, m: f64) -> PyResult<f64> {
    lattice::c0(z1.inner, z2.inner, m).map_err(err)
}

/// The separation `(d, m, n)` of a squarefree `l`.
#[pyfunction]
fn separate(l: u64, r: u32) -> PyResult<(u64, u64, u64)> {
    decomp::separate(l, r).map(|t| (t.d_sep, t.m, t.n)).map_err(err)
}

#[pyfunction]
fn vaughan_check(n: u64, y: u64) -> PyResult<bool> {
    decomp::vaughan_check_exact(n, y).map_err(err)
}

#[pymodule]
#[pyo3(name = "gaussprime")]
fn gaussprime_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGaussianInt>()?;
    m.add_function(wrap_pyfunction!(ggcd, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi_kubota, m)?)?;
    m.add_function(wrap_pyfunction!(multiplier_sides, m)?)?;
    m.add_function(wrap_pyfunction!(spin, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(n_formula, m)?)?;
    m.add_function(wrap_pyfunction!(n_brute, m)?)?;
    m.add_function(wrap_pyfunction!(g0_formula, m)?)?;
    m.add_function(wrap_pyfunction!(g0_brute, m)?)?;
    m.add_function(wrap_pyfunction!(a_total, m)?)?;
    m.add_function(wrap_pyfunction!(g, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(e_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(theorem1_experiment, m)?)?;
    m.add_function(wrap_pyfunction!(remainder_scan, m)?)?;
    m.add_function(wrap_pyfunction!(spin_sum, m)?)?;
    m.add_function(wrap_pyfunction!(lambda0, m)?)?;
    m.add_function(wrap_pyfunction!(quad_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(c_direct, m)?)?;
    m.add_function(wrap_pyfunction!(c_param, m)?)?;
    m.add_function(wrap_pyfunction!(c0, m)?)?;
    m.add_function(wrap_pyfunction!(separate, m)?)?;
    m.add_function(wrap_pyfunction!(vaughan_check, m)?)?;
    Ok(())
}
