//! Exact scalars over the rationals or a prime field.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 61;

/// The base field shared by every scalar in one computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Validated prime field constructor.
    pub fn prime(p: u64) -> Result<Self, Error> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(self) -> Option<u64> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some(p),
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let r = (n as i128).rem_euclid(p as i128) as u64;
                Scalar::Residue { value: r, modulus: p }
            }
        }
    }

    /// `num / den`, or `None` when `den` vanishes in this field.
    pub fn from_ratio(self, num: i64, den: i64) -> Option<Scalar> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.from_i64(num) * &d.inv()?)
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let r = n.mod_floor(&m);
                Scalar::Residue { value: r.to_u64().unwrap_or(0), modulus: p }
            }
        }
    }

    /// Parses `a` or `a/b` with arbitrary-precision integers.
    pub fn parse(self, text: &str) -> Result<Scalar, Error> {
        let bad = || Error::Parse { line: 0, message: alloc::format!("malformed scalar `{text}`") };
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        let d = self.from_bigint(&den);
        if d.is_zero() {
            return Err(bad());
        }
        Ok(&self.from_bigint(&num) * &d.inv().ok_or_else(bad)?)
    }

    /// Every element in a fixed order (0, 1, ..., p-1); `None` over the rationals.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(|v| Scalar::Residue { value: v, modulus: p }).collect()),
        }
    }

    /// Whether the field contains a primitive `n`-th root of unity, and the smallest one.
    pub fn primitive_root_of_unity(self, n: u64) -> Option<Scalar> {
        match self {
            Field::Rationals => match n {
                1 => Some(self.one()),
                2 => Some(self.from_i64(-1)),
                _ => None,
            },
            Field::Prime(p) => {
                (1..p).map(|v| Scalar::Residue { value: v, modulus: p }).find(|q| q.multiplicative_order() == Some(n))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
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

/// An exact field element: a reduced fraction or a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: pow_mod(*value, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Order in the multiplicative group, searched up to 2^16 over the rationals.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(r) => {
                if r.is_one() {
                    Some(1)
                } else if (-r.clone()).is_one() {
                    Some(2)
                } else {
                    None
                }
            }
            Scalar::Residue { value, modulus } => {
                let mut x = *value;
                for k in 1..*modulus {
                    if x == 1 {
                        return Some(k);
                    }
                    x = mul_mod(x, *value, *modulus);
                }
                None
            }
        }
    }

    /// Integer representative of a residue, or the numerator/denominator of a rational.
    pub fn as_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Residue { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    /// Residue value for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn to_plain_string(&self) -> String {
        self.to_string()
    }

    fn check(&self, other: &Scalar) {
        debug_assert_eq!(self.field(), other.field(), "scalar field mismatch");
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                let s = a + b;
                Scalar::Residue { value: if s >= *modulus { s - modulus } else { s }, modulus: *modulus }
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                let v = if a >= b { a - b } else { modulus - (b - a) };
                Scalar::Residue { value: v, modulus: *modulus }
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => {
                if a.is_zero() || b.is_zero() {
                    Scalar::Rational(BigRational::zero())
                } else if a.is_one() {
                    Scalar::Rational(b.clone())
                } else if b.is_one() {
                    Scalar::Rational(a.clone())
                } else {
                    Scalar::Rational(a * b)
                }
            }
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { value: mul_mod(*a, *b, *modulus), modulus: *modulus }
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => {
                if !b.is_zero() {
                    *a += b;
                }
            }
            _ => *self = &*self + rhs,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a.clone()),
            Scalar::Residue { value, modulus } => {
                Scalar::Residue { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Sign of a rational scalar (residues are treated as nonnegative).
pub fn is_negative(s: &Scalar) -> bool {
    matches!(s, Scalar::Rational(r) if r.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime((1 << 61) - 1).is_ok());
    }

    #[test]
    fn residues_stay_reduced() {
        let f = Field::Prime(5);
        assert_eq!(f.from_i64(-1), Scalar::Residue { value: 4, modulus: 5 });
        let x = f.from_i64(3);
        assert_eq!((&x * &x.inv().unwrap()), f.one());
        assert_eq!(&x + &f.from_i64(4), f.from_i64(2));
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let q = Field::Rationals;
        let a = q.parse("6/-4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(q.parse("4/2").unwrap().to_string(), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn roots_of_unity() {
        let f = Field::Prime(7);
        let q = f.primitive_root_of_unity(3).unwrap();
        assert_eq!(q, f.from_i64(2));
        assert!(f.primitive_root_of_unity(4).is_none());
        assert!(Field::Rationals.primitive_root_of_unity(3).is_none());
    }
}
