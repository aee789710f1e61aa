//! Exact arithmetic and experiments around the primes represented by `a^2 + b^4`.
//!
//! The crate is organized bottom-up:
//!
//! - [`arith`]: rational-integer arithmetic (factorization, multiplicative functions,
//!   Jacobi/Hilbert symbols, modular square roots, prime sieves).
//! - [`gaussian`]: the ring `Z[i]` (primary normalization, gcd, factorization,
//!   two-squares representations, the determinant `Im(conj(z1) z2)`).
//! - [`symbols`]: Dirichlet symbol, Jacobi-Kubota symbol, spins and the
//!   reciprocity/multiplier laws relating them.
//! - [`congruences`]: counting kernels for quadratic congruences, with closed forms
//!   paired against brute force.
//! - [`sieve`]: the sequence `a_n = #{a^2 + c^4 = n}`, its congruence sums, densities
//!   and the prime-counting experiment.
//! - [`lattice`]: lattice points under the biquadratic ellipse and their main term.
//! - [`eigen`]: Hecke and quadratic eigenvalues, spin sums.
//! - [`decomp`]: separation-divisor decomposition and Vaughan's identity.
//!
//! Every operation is a pure function. Batch routines parallelize with rayon on the
//! ambient thread pool and reduce in a fixed block order, so their output does not
//! depend on the number of workers.

pub mod arith;
pub mod congruences;
pub mod decomp;
pub mod eigen;
mod error;
pub mod gaussian;
pub mod lattice;
pub mod quadrature;
pub mod sieve;
pub mod summation;
pub mod symbols;

pub use error::{Error, Result};
pub use gaussian::{GaussianInt, PrimaryGaussian, Unit};
pub use arith::SymbolValue;
pub use symbols::QuarticValue;
