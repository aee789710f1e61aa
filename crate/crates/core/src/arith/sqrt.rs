//! Square roots modulo prime powers (Tonelli–Shanks plus Hensel lifting) and CRT assembly.

use super::factor::{factorize, Factorization};
use super::primes::{inv_mod, mul_mod, pow_mod};
use super::residue::jacobi_u;
use crate::{Error, Result};

fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if jacobi_u(a, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let z = (2..).find(|&z| jacobi_u(z, p) == -1).unwrap();
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Roots of `x^2 = a` modulo `p^e` for `a` a unit.
fn unit_roots(a: u64, p: u64, e: u32, pe: u64) -> Vec<u64> {
    if p == 2 {
        return match e {
            1 => vec![1],
            2 => if a % 4 == 1 { vec![1, 3] } else { vec![] },
            _ => {
                if a % 8 != 1 {
                    return vec![];
                }
                let mut x = 1u64;
                for k in 3..e {
                    let m = 1u64 << (k + 1);
                    if mul_mod(x, x, m) != a % m {
                        x += 1 << (k - 1);
                    }
                }
                let half = pe / 2;
                vec![x, pe - x, (x + half) % pe, (pe - x + half) % pe]
            }
        };
    }
    let Some(mut x) = tonelli_shanks(a, p) else {
        return vec![];
    };
    // Newton iteration converges p-adically since 2x is a unit
    while mul_mod(x, x, pe) != a % pe {
        let fx = (mul_mod(x, x, pe) + pe - a % pe) % pe;
        let inv = inv_mod(2 * x % pe, pe).expect("2x is a unit");
        x = (x + pe - mul_mod(fx, inv, pe)) % pe;
    }
    vec![x, pe - x]
}

/// All `x mod p^e` with `x^2 = a (mod p^e)`, ascending.
pub fn sqrt_mod_prime_power(a: i64, p: u64, e: u32) -> Vec<u64> {
    let pe = p.pow(e);
    let a = (a as i128).rem_euclid(pe as i128) as u64;
    let mut out = Vec::new();
    if a == 0 {
        let step = p.pow(e.div_ceil(2));
        out.extend((0..p.pow(e / 2)).map(|k| k * step));
        return out;
    }
    let mut v = 0;
    let mut rest = a;
    while rest.is_multiple_of(p) {
        rest /= p;
        v += 1;
    }
    if v % 2 == 1 {
        return out;
    }
    let j = v / 2;
    let inner_e = e - 2 * j;
    let inner = p.pow(inner_e);
    let pj = p.pow(j);
    for y0 in unit_roots(rest % inner, p, inner_e, inner) {
        for t in 0..pj {
            let y = y0 + t * inner;
            out.push(mul_mod(pj, y, pe));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// All square roots of `a` modulo a prime power `pk`, ascending.
pub fn sqrt_mod(a: i64, pk: u64) -> Result<Vec<u64>> {
    let f = factorize(pk.max(1));
    match f.as_prime_power() {
        Some((p, e)) => Ok(sqrt_mod_prime_power(a, p, e)),
        None => Err(Error::NotPrimePower(pk)),
    }
}

/// Combines `x = r1 (mod m1)` and `x = r2 (mod m2)` for coprime moduli.
pub fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    let m = m1 as u128 * m2 as u128;
    let inv = inv_mod(m1 % m2, m2).expect("coprime moduli") as u128;
    let diff = (r2 as u128 + m2 as u128 - (r1 % m2) as u128) % m2 as u128;
    let k = diff * inv % m2 as u128;
    ((r1 as u128 + m1 as u128 * k) % m) as u64
}

/// Combines per-prime-power residue sets into residues modulo their product, ascending.
pub fn crt_combine(parts: &[(u64, Vec<u64>)]) -> Vec<u64> {
    let mut acc = vec![0u64];
    let mut modulus = 1u64;
    for (m, roots) in parts {
        let mut next = Vec::with_capacity(acc.len() * roots.len());
        for &a in &acc {
            for &r in roots {
                next.push(crt_pair(a, modulus, r, *m));
            }
        }
        modulus *= m;
        acc = next;
    }
    acc.sort_unstable();
    acc
}

/// All square roots of `a` modulo a composite `n` given its factorization, ascending.
pub fn sqrt_mod_composite(a: i64, f: &Factorization) -> Vec<u64> {
    let parts: Vec<(u64, Vec<u64>)> = f
        .factors()
        .iter()
        .map(|&(p, e)| (p.pow(e), sqrt_mod_prime_power(a, p, e)))
        .collect();
    crt_combine(&parts)
}

/// Number of square roots of `a` modulo `n`, without listing them.
pub fn count_sqrt_mod(a: i64, f: &Factorization) -> u64 {
    f.factors().iter().map(|&(p, e)| sqrt_mod_prime_power(a, p, e).len() as u64).product()
}
