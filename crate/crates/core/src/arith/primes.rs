//! Primality, modular exponentiation and prime sieves.

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd(a.unsigned_abs(), b.unsigned_abs())
}

const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const BASES_32: [u64; 3] = [2, 7, 61];
const BASES_64: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

fn strong_probable_prime(n: u64, d: u64, s: u32, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let bases: &[u64] = if n < 1 << 32 { &BASES_32 } else { &BASES_64 };
    bases.iter().all(|&a| strong_probable_prime(n, d, s, a))
}

/// All primes `<= limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    let mut i = 2usize;
    while i <= n {
        if !composite[i] {
            out.push(i as u64);
            if let Some(start) = i.checked_mul(i) {
                let mut j = start;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        i += 1;
    }
    out
}

/// Integer square root.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|v| v > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|v| v <= n) {
        x += 1;
    }
    x
}

/// Largest `r` with `r^k <= n`.
pub fn iroot(n: u64, k: u32) -> u64 {
    if k == 1 || n < 2 {
        return n;
    }
    let fits = |r: u64| (r as u128).checked_pow(k).is_some_and(|v| v <= n as u128);
    let mut r = (n as f64).powf(1.0 / k as f64) as u64;
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// Segmented sieve of Eratosthenes over `[lo, hi)`.
///
/// `base` must contain every prime up to `sqrt(hi)`.
pub fn primes_in_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    let len = (hi - lo) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        if p * p >= hi {
            break;
        }
        let mut start = lo.div_ceil(p) * p;
        if start < p * p {
            start = p * p;
        }
        let mut j = (start - lo) as usize;
        while j < len {
            composite[j] = true;
            j += p as usize;
        }
    }
    let mut out = Vec::new();
    for (i, &c) in composite.iter().enumerate() {
        let v = lo + i as u64;
        if !c && v >= 2 {
            out.push(v);
        }
    }
    out
}

/// Splits `[1, x]` into half-open segments of at most `width` integers.
pub fn segments(x: u64, width: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut lo = 1;
    while lo <= x {
        let hi = (lo + width).min(x + 1);
        out.push((lo, hi));
        lo = hi;
    }
    out
}

/// Smallest-prime-factor table for bulk factorization of `n <= limit`.
#[derive(Debug, Clone)]
pub struct SpfTable {
    spf: Vec<u32>,
}

impl SpfTable {
    pub fn new(limit: u64) -> Self {
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        for i in 2..=n {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        SpfTable { spf }
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    pub fn factorize(&self, n: u64) -> super::Factorization {
        assert!(n >= 1 && n <= self.limit(), "{n} outside the table");
        let mut m = n as usize;
        let mut factors: Vec<(u64, u32)> = Vec::new();
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        super::Factorization::from_parts(n, factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..200_000 {
            assert_eq!(is_prime(n), trial_prime(n), "{n}");
        }
    }

    #[test]
    fn known_hard_composites() {
        // strong pseudoprimes to several small bases
        for n in [3215031751u64, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051] {
            assert!(!is_prime(n), "{n}");
        }
        assert!(is_prime(18446744073709551557));
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(91));
        assert!(is_prime(97));
    }

    #[test]
    fn segmented_matches_simple() {
        let base = primes_up_to(1000);
        let all = primes_up_to(1_000_000);
        let mut seg = Vec::new();
        for (lo, hi) in segments(1_000_000, 65_536) {
            seg.extend(primes_in_segment(lo, hi, &base));
        }
        assert_eq!(seg, all);
    }

    #[test]
    fn roots() {
        assert_eq!(isqrt(u64::MAX), 4294967295);
        assert_eq!(isqrt(99), 9);
        assert_eq!(iroot(1_000_000_000, 3), 1000);
        assert_eq!(iroot(999_999_999, 3), 999);
        assert_eq!(iroot(u64::MAX, 4), 65535);
    }

    #[test]
    fn inverse() {
        assert_eq!(inv_mod(17, 32), Some(17));
        assert_eq!(inv_mod(6, 9), None);
    }
}
