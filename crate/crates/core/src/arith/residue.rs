//! Jacobi, extended Jacobi, Hilbert-at-infinity and the character of conductor four.

use std::fmt;
use std::ops::{Mul, Neg};

use crate::{Error, Result};

/// A value in `{-1, 0, +1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolValue {
    MinusOne,
    Zero,
    One,
}

impl SymbolValue {
    pub fn from_sign(v: i64) -> Self {
        match v.signum() {
            1 => SymbolValue::One,
            -1 => SymbolValue::MinusOne,
            _ => SymbolValue::Zero,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            SymbolValue::MinusOne => -1,
            SymbolValue::Zero => 0,
            SymbolValue::One => 1,
        }
    }

    pub fn to_i64(self) -> i64 {
        self.to_i8() as i64
    }
}

impl Mul for SymbolValue {
    type Output = SymbolValue;
    fn mul(self, rhs: Self) -> Self {
        SymbolValue::from_sign(self.to_i64() * rhs.to_i64())
    }
}

impl Neg for SymbolValue {
    type Output = SymbolValue;
    fn neg(self) -> Self {
        SymbolValue::from_sign(-self.to_i64())
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i8())
    }
}

/// Jacobi symbol `(a/m)` for odd positive `m`, computed on unsigned residues.
pub(crate) fn jacobi_u(a: u64, m: u64) -> i8 {
    debug_assert!(m % 2 == 1);
    let (mut a, mut m) = (a % m, m);
    let mut t = 1i8;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z % 2 == 1 && (m % 8 == 3 || m % 8 == 5) {
            t = -t;
        }
        if a % 4 == 3 && m % 4 == 3 {
            t = -t;
        }
        (a, m) = (m % a, a);
    }
    if m == 1 {
        t
    } else {
        0
    }
}

/// Jacobi symbol; `m` must be odd and positive.
pub fn jacobi(a: i64, m: i64) -> Result<SymbolValue> {
    if m <= 0 || m % 2 == 0 {
        return Err(Error::InvalidModulus(m));
    }
    let r = a.rem_euclid(m) as u64;
    Ok(SymbolValue::from_sign(jacobi_u(r, m as u64) as i64))
}

/// `(a/d)` for odd `a` and any nonzero `d`, evaluated at the odd part of `|d|`.
pub fn jacobi_extended(a: i64, d: i64) -> Result<SymbolValue> {
    if a % 2 == 0 {
        return Err(Error::EvenUpperEntry(a));
    }
    if d == 0 {
        return Err(Error::ZeroArgument);
    }
    let m = d.unsigned_abs();
    let odd = m >> m.trailing_zeros();
    let r = (a as i128).rem_euclid(odd as i128) as u64;
    Ok(SymbolValue::from_sign(jacobi_u(r, odd) as i64))
}

/// `(a, b)_inf`: `-1` when both arguments are negative.
pub fn hilbert_infinity(a: i64, b: i64) -> Result<SymbolValue> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(hilbert_sign(a, b))
}

/// Same rule with zero counted as nonnegative.
pub(crate) fn hilbert_sign(a: i64, b: i64) -> SymbolValue {
    if a < 0 && b < 0 {
        SymbolValue::MinusOne
    } else {
        SymbolValue::One
    }
}

pub fn chi4(n: i64) -> SymbolValue {
    match n.rem_euclid(4) {
        1 => SymbolValue::One,
        3 => SymbolValue::MinusOne,
        _ => SymbolValue::Zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn legendre_brute(a: i64, p: i64) -> i64 {
        let a = a.rem_euclid(p);
        if a == 0 {
            return 0;
        }
        if (1..p).any(|x| x * x % p == a) {
            1
        } else {
            -1
        }
    }

    fn jacobi_brute(a: i64, m: i64) -> i64 {
        let mut out = 1;
        let mut n = m;
        let mut p = 3;
        while n > 1 {
            while n % p == 0 {
                out *= legendre_brute(a, p);
                n /= p;
            }
            p += 2;
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(jacobi(2, 1).unwrap(), SymbolValue::One);
        assert_eq!(jacobi(2, 3).unwrap(), SymbolValue::MinusOne);
        assert_eq!(jacobi(3, 5).unwrap(), SymbolValue::MinusOne);
        assert!(jacobi(3, 4).is_err());
        assert!(jacobi(3, -5).is_err());
        assert_eq!(jacobi_extended(9, 32).unwrap(), SymbolValue::One);
        assert_eq!(jacobi_extended(3, 10).unwrap(), SymbolValue::MinusOne);
        assert_eq!(jacobi_extended(7, -3).unwrap(), SymbolValue::One);
        assert!(jacobi_extended(4, 3).is_err());
        assert_eq!(hilbert_infinity(-1, -1).unwrap(), SymbolValue::MinusOne);
        assert_eq!(hilbert_infinity(-1, 1).unwrap(), SymbolValue::One);
        assert_eq!(hilbert_infinity(5, 7).unwrap(), SymbolValue::One);
        assert!(hilbert_infinity(0, 7).is_err());
        assert_eq!(chi4(5), SymbolValue::One);
        assert_eq!(chi4(7), SymbolValue::MinusOne);
        assert_eq!(chi4(6), SymbolValue::Zero);
        assert_eq!(chi4(-1), SymbolValue::MinusOne);
    }

    #[test]
    fn matches_euler_criterion_products() {
        for m in (1..400).step_by(2) {
            for a in -50..450 {
                assert_eq!(jacobi(a, m).unwrap().to_i64(), jacobi_brute(a, m), "({a}/{m})");
            }
        }
    }

    #[test]
    fn supplement_for_two() {
        // (2/d) = i^((d^2-1)/4) read as +-1, over odd |d|
        for d in (-10_001i64..=10_001).filter(|d| d % 2 != 0) {
            let e = ((d * d - 1) / 4) % 4;
            let expected = if e == 0 { 1 } else { -1 };
            assert_eq!(e % 2, 0);
            assert_eq!(jacobi(2, d.abs()).unwrap().to_i64(), expected, "d={d}");
        }
    }

    #[test]
    fn hilbert_sign_identity() {
        for x in [-3i64, -1, 2, 5] {
            for y in [-7i64, -2, 1, 4] {
                let h = hilbert_infinity(x, y).unwrap().to_i64();
                assert_eq!(2 * h, 1 + x.signum() + y.signum() - (x * y).signum());
            }
        }
    }

    proptest! {
        #[test]
        fn multiplicative_in_modulus(a in -1_000_000i64..1_000_000, m1 in 0i64..50_000, m2 in 0i64..50_000) {
            let (m1, m2) = (2 * m1 + 1, 2 * m2 + 1);
            let lhs = jacobi(a, m1 * m2).unwrap();
            prop_assert_eq!(lhs, jacobi(a, m1).unwrap() * jacobi(a, m2).unwrap());
        }

        #[test]
        fn reciprocity_with_signs(a in -100_000i64..100_000, b in -100_000i64..100_000) {
            let (a, b) = (2 * a + 1, 2 * b + 1);
            prop_assume!(super::super::primes::gcd_i64(a, b) == 1);
            let lhs = jacobi(a, b.abs()).unwrap() * jacobi(b, a.abs()).unwrap();
            let exp = ((a - 1) / 2).rem_euclid(2) * ((b - 1) / 2).rem_euclid(2);
            let sign = if exp == 0 { SymbolValue::One } else { SymbolValue::MinusOne };
            prop_assert_eq!(lhs, sign * hilbert_infinity(a, b).unwrap());
        }
    }
}
