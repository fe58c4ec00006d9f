//! Ground fields: exact rationals and prime fields of odd characteristic.
//!
//! Every solver in the crate is generic over [`Field`]. Two families of
//! implementations are provided: [`Rational`] (arbitrary precision, always
//! reduced with a positive denominator) and [`Fp<P>`] for an odd prime `P`.
//! Characteristic two is rejected everywhere: `Fp<2>` fails to compile and
//! [`FieldTag::prime`] refuses `p = 2` at runtime.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::Value;
use thiserror::Error;

use crate::linalg::rref;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot parse `{0}` as a scalar")]
    Parse(String),
    #[error("division by zero in `{0}`")]
    ZeroDenominator(String),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("denominator of {0} is not invertible modulo {1}")]
    NotInvertible(String, u64),
}

/// Runtime description of a ground field, as carried in JSON payloads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rationals,
    Prime(u64),
}

impl FieldTag {
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p == 2 {
            return Err(ScalarError::CharacteristicTwo);
        }
        if !is_odd_prime(p) {
            return Err(ScalarError::NotOddPrime(p));
        }
        Ok(FieldTag::Prime(p))
    }

    pub fn to_json(self) -> Value {
        match self {
            FieldTag::Rationals => Value::String("Q".into()),
            FieldTag::Prime(p) => serde_json::json!({ "Fp": p }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, ScalarError> {
        match v {
            Value::String(s) if s == "Q" => Ok(FieldTag::Rationals),
            Value::Object(map) => match map.get("Fp").and_then(Value::as_u64) {
                Some(p) => FieldTag::prime(p),
                None => Err(ScalarError::Parse(v.to_string())),
            },
            _ => Err(ScalarError::Parse(v.to_string())),
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub const fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A field of characteristic different from two.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn tag() -> FieldTag;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// Image of a rational number, `None` if its denominator vanishes in the field.
    fn from_rational(q: &Rational) -> Option<Self>;

    /// Parses `"p/q"`, `"p"` or a bare integer.
    fn parse(s: &str) -> Result<Self, ScalarError>;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self, ScalarError> {
        match v {
            Value::String(s) => Self::parse(s),
            Value::Number(n) => Self::parse(&n.to_string()),
            _ => Err(ScalarError::Parse(v.to_string())),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self -= a * b`, the inner step of every elimination loop.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        let lhs = std::mem::replace(self, Self::zero());
        *self = lhs - prod;
    }

    /// Reduces dense rows to reduced row echelon form in place and returns the
    /// pivot columns. Zero rows are removed.
    fn row_reduce(rows: &mut Vec<Vec<Self>>, cols: usize) -> Vec<usize> {
        rref::gauss_jordan(rows, cols)
    }
}

impl Field for Rational {
    fn tag() -> FieldTag {
        FieldTag::Rationals
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }

    fn parse(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| ScalarError::Parse(s.to_string()))?;
        let den = BigInt::from_str(den).map_err(|_| ScalarError::Parse(s.to_string()))?;
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator(s.to_string()));
        }
        Ok(Rational::new(num, den))
    }

    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }

    fn row_reduce(rows: &mut Vec<Vec<Self>>, cols: usize) -> Vec<usize> {
        rref::bareiss_rref(rows, cols)
    }
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of the prime field `Z/PZ`, stored as its least non-negative residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(is_odd_prime(P), "Fp<P> requires an odd prime modulus");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp(v % P)
    }

    pub fn from_signed(v: i64) -> Self {
        Self::new(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub const fn modulus() -> u64 {
        P
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// All field elements in increasing residue order.
    pub fn elements() -> impl Iterator<Item = Self> {
        (0..P).map(Self::new)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {P})", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Self::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Self::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn tag() -> FieldTag {
        FieldTag::Prime(P)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Self::from_signed(v)
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let num = q.numer().mod_floor(&p).to_u64()?;
        let den = q.denom().mod_floor(&p).to_u64()?;
        let den = Self::new(den).inv()?;
        Some(Self::new(num) * den)
    }

    fn parse(s: &str) -> Result<Self, ScalarError> {
        let q = Rational::parse(s)?;
        Self::from_rational(&q).ok_or_else(|| ScalarError::NotInvertible(s.to_string(), P))
    }

    fn to_json(&self) -> Value {
        Value::from(self.0)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        *self * *other
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = *self - *a * *b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F3 = Fp<3>;
    type F5 = Fp<5>;

    #[test]
    fn rationals_are_reduced_with_positive_denominator() {
        let q = Rational::parse("4/-6").unwrap();
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
        assert_eq!(format_rational(&q), "-2/3");
        assert_eq!(format_rational(&Rational::parse("10/5").unwrap()), "2");
        assert_eq!(Rational::parse("1/0"), Err(ScalarError::ZeroDenominator("1/0".into())));
    }

    #[test]
    fn prime_field_arithmetic() {
        let two = F5::from_i64(2);
        assert_eq!(two.inv().unwrap(), F5::from_i64(3));
        assert_eq!(F5::from_i64(-1), F5::new(4));
        assert_eq!(F3::parse("1/2").unwrap(), F3::new(2));
        assert!(F3::parse("1/3").is_err());
        for a in F5::elements().skip(1) {
            assert_eq!(a * a.inv().unwrap(), F5::one());
        }
    }

    #[test]
    fn characteristic_two_is_rejected() {
        assert_eq!(FieldTag::prime(2), Err(ScalarError::CharacteristicTwo));
        assert_eq!(FieldTag::prime(9), Err(ScalarError::NotOddPrime(9)));
        assert_eq!(FieldTag::prime(7), Ok(FieldTag::Prime(7)));
        assert!(!is_odd_prime(2));
    }

    #[test]
    fn field_tag_json() {
        for tag in [FieldTag::Rationals, FieldTag::Prime(5)] {
            assert_eq!(FieldTag::from_json(&tag.to_json()).unwrap(), tag);
        }
        assert!(FieldTag::from_json(&serde_json::json!({"Fp": 2})).is_err());
    }
}
