//! Exact rational scalars.
//!
//! Every coordinate, dimension and area in this crate is a [`Scalar`]. Values
//! are kept in a machine-word representation while numerator and denominator
//! fit in an `i64`, and are promoted to arbitrary precision on overflow, so the
//! arithmetic is exact regardless of magnitude. The representation is
//! canonical: a value that fits is always stored small, which keeps equality
//! and hashing structural.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone)]
enum Repr {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

/// An exact rational number.
#[derive(Clone)]
pub struct Scalar(Repr);

/// Error returned when a string is not a decimal or fraction literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid number literal {literal:?}: {reason}")]
pub struct ParseScalarError {
    pub literal: String,
    pub reason: &'static str,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Small(Ratio::new_raw(0, 1)))
    }

    pub fn one() -> Self {
        Scalar(Repr::Small(Ratio::new_raw(1, 1)))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_small(Ratio::from_integer(n))
    }

    /// `numer / denom`. Panics when `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_big(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigrational(value: BigRational) -> Self {
        Self::from_big(value)
    }

    fn from_small(r: Ratio<i64>) -> Self {
        if *r.numer() == i64::MIN {
            Scalar(Repr::Big(Box::new(to_big(&r))))
        } else {
            Scalar(Repr::Small(r))
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Scalar(Repr::Small(Ratio::new_raw(n, d))),
            _ => Scalar(Repr::Big(Box::new(r))),
        }
    }

    pub fn to_bigrational(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => to_big(r),
            Repr::Big(r) => (**r).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_positive(),
            Repr::Big(r) => r.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(r) if r.is_integer() => Some(*r.numer()),
            _ => None,
        }
    }

    /// Nearest `f64`. Only meant for rendering.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// `max(0, self)`.
    pub fn clamp_nonneg(self) -> Scalar {
        if self.is_negative() {
            Scalar::zero()
        } else {
            self
        }
    }

    /// True when the denominator has no prime factors other than 2 and 5,
    /// i.e. the value has a finite decimal expansion.
    pub fn is_terminating_decimal(&self) -> bool {
        let mut d = self.denom();
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        while d.is_even() {
            d /= &two;
        }
        while (&d % &five).is_zero() {
            d /= &five;
        }
        d.is_one()
    }
}

fn to_big(r: &Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_integer(n.into())
    }
}

impl From<u32> for Scalar {
    fn from(n: u32) -> Self {
        Scalar::from_integer(n.into())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.numer() == b.numer() && a.denom() == b.denom(),
            (Repr::Big(a), Repr::Big(b)) => a.numer() == b.numer() && a.denom() == b.denom(),
            // canonical form: a value never has both representations
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(r) => {
                0u8.hash(state);
                r.numer().hash(state);
                r.denom().hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.numer().hash(state);
                r.denom().hash(state);
            }
        }
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                if a.denom() == b.denom() {
                    a.numer().cmp(b.numer())
                } else {
                    a.cmp(b)
                }
            }
            (Repr::Big(a), Repr::Big(b)) => a.cmp(b),
            (Repr::Small(a), Repr::Big(b)) => to_big(a).cmp(&**b),
            (Repr::Big(a), Repr::Small(b)) => (**a).cmp(&to_big(b)),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn small_add(a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
    if *a.denom() == 1 && *b.denom() == 1 {
        return i64::checked_add(*a.numer(), *b.numer()).map(Ratio::from_integer);
    }
    a.checked_add(b)
}

fn small_sub(a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
    if *a.denom() == 1 && *b.denom() == 1 {
        return i64::checked_sub(*a.numer(), *b.numer()).map(Ratio::from_integer);
    }
    a.checked_sub(b)
}

fn small_mul(a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
    if *a.denom() == 1 && *b.denom() == 1 {
        return i64::checked_mul(*a.numer(), *b.numer()).map(Ratio::from_integer);
    }
    a.checked_mul(b)
}

macro_rules! binop {
    ($trait:ident, $method:ident, $small:expr, $big:tt) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(r) = $small(a, b) {
                        return Scalar::from_small(r);
                    }
                }
                Scalar::from_big(self.to_bigrational() $big rhs.to_bigrational())
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, small_add, +);
binop!(Sub, sub, small_sub, -);
binop!(Mul, mul, small_mul, *);

fn small_div(a: &Ratio<i64>, b: &Ratio<i64>) -> Option<Ratio<i64>> {
    if b.is_zero() {
        panic!("division by zero");
    }
    num_traits::CheckedDiv::checked_div(a, b)
}

binop!(Div, div, small_div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(r) => Scalar::from_small(-r),
            Repr::Big(r) => Scalar::from_big(-&**r),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Integers print bare, terminating fractions as decimals, anything else as
/// `p/q`. The output always parses back to the same value.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let numer = self.numer();
        let denom = self.denom();
        if denom.is_one() {
            return write!(f, "{numer}");
        }
        if !self.is_terminating_decimal() {
            return write!(f, "{numer}/{denom}");
        }
        // scale by 10^k until the denominator divides out
        let mut digits = 0usize;
        let mut scaled = numer.abs();
        let mut d = denom;
        let ten = BigInt::from(10);
        while !(&scaled % &d).is_zero() {
            scaled *= &ten;
            digits += 1;
        }
        let g = scaled.gcd(&d);
        scaled /= &g;
        d /= &g;
        let q = scaled / d;
        let mut s = q.to_string();
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        let (int_part, frac_part) = s.split_at(s.len() - digits);
        let sign = if numer.is_negative() { "-" } else { "" };
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `[-]digits`, `[-]digits.digits` and `[-]digits/digits`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseScalarError {
            literal: s.to_string(),
            reason,
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(err("empty"));
        }
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let all_digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
        let value = if let Some((n, d)) = body.split_once('/') {
            if !all_digits(n) || !all_digits(d) {
                return Err(err("expected digits around '/'"));
            }
            let n: BigInt = n.parse().map_err(|_| err("bad numerator"))?;
            let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            BigRational::new(n, d)
        } else if let Some((i, frac)) = body.split_once('.') {
            if !(all_digits(i) || i.is_empty()) || !all_digits(frac) {
                return Err(err("expected digits around '.'"));
            }
            let joined = format!("{i}{frac}");
            let n: BigInt = joined.parse().map_err(|_| err("bad digits"))?;
            let d = num_traits::pow(BigInt::from(10), frac.len());
            BigRational::new(n, d)
        } else {
            if !all_digits(body) {
                return Err(err("expected a decimal or fraction"));
            }
            BigRational::from_integer(body.parse().map_err(|_| err("bad digits"))?)
        };
        let value = Scalar::from_big(value);
        Ok(if negative { -value } else { value })
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a decimal string, a fraction string, or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
        v.parse().map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar::from_integer(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        i64::try_from(v)
            .map(Scalar::from_integer)
            .map_err(|_| E::custom("integer out of range"))
    }

    fn visit_f64<E: de::Error>(self, _v: f64) -> Result<Scalar, E> {
        Err(E::custom(
            "binary floating-point numbers are not accepted; write the value as a string",
        ))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}
