//! Rational-integer arithmetic.

mod divisors;
mod factor;
mod multiplicative;
mod primes;
mod residue;
mod sqrt;

pub use divisors::{divisor_witness, divisor_witness_of, is_witness, small_divisor_tau_mass};
pub use factor::{factorize, Factorization};
pub use multiplicative::{
    euler_phi, euler_phi_of, mobius, mobius_of, prime_power_base, tau, tau_k, tau_k_of, von_mangoldt,
};
pub use primes::{
    gcd, gcd_i64, inv_mod, iroot, is_prime, isqrt, mul_mod, pow_mod, primes_in_segment, primes_up_to, segments,
    SpfTable,
};
pub(crate) use residue::hilbert_sign;
pub use residue::{chi4, hilbert_infinity, jacobi, jacobi_extended, SymbolValue};
pub use sqrt::{count_sqrt_mod, crt_combine, crt_pair, sqrt_mod, sqrt_mod_composite, sqrt_mod_prime_power};
