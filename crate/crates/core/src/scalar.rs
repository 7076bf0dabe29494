//! Exact field elements.
//!
//! Two backends live behind one [`Scalar`] type: arbitrary-precision
//! rationals and prime fields `F_p` with a small modulus. Every value is kept
//! in canonical form (reduced fraction with positive denominator, or least
//! nonnegative residue), so structural equality is field equality.
//!
//! The `std::ops` impls panic when the operands live in different fields;
//! structures validate their field once at construction and then use the
//! operators freely. The `checked_*` methods report the mismatch instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::ScalarError;

/// Largest accepted prime modulus. Moduli are expected to be small; the bound
/// keeps the trial-division primality test and `u64` products cheap.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The ground field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u64),
}

impl FieldDescriptor {
    /// Prime field `F_p`; fails unless `p` is a prime below [`MAX_MODULUS`].
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldDescriptor::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => f.write_str("Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldDescriptor::Rationals);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.trim().parse::<u64>().ok())
            .ok_or_else(|| ScalarError::BadField(s.to_string()))?;
        FieldDescriptor::prime(p)
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

/// An exact element of a [`FieldDescriptor`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    repr: Repr,
}

impl Scalar {
    pub fn zero(field: FieldDescriptor) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldDescriptor) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldDescriptor, n: i64) -> Self {
        Self::from_bigint(field, &BigInt::from(n))
    }

    fn from_bigint(field: FieldDescriptor, n: &BigInt) -> Self {
        match field {
            FieldDescriptor::Rationals => Scalar {
                repr: Repr::Rational(BigRational::from_integer(n.clone())),
            },
            FieldDescriptor::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar {
                    repr: Repr::Residue {
                        value: r.to_u64().expect("residue below modulus"),
                        modulus: p,
                    },
                }
            }
        }
    }

    /// Fraction `num/den` in the given field.
    pub fn from_fraction(field: FieldDescriptor, num: i64, den: i64) -> Result<Self, ScalarError> {
        let num = Self::from_i64(field, num);
        let den = Self::from_i64(field, den);
        num.checked_mul(&den.checked_inv()?)
    }

    /// Parses `"a"` or `"a/b"` with arbitrary-size integers. In a prime field
    /// the integers are reduced and the denominator inverted.
    pub fn parse(field: FieldDescriptor, text: &str) -> Result<Self, ScalarError> {
        let text = text.trim();
        let bad = || ScalarError::Parse {
            text: text.to_string(),
            field,
        };
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        let num = Self::from_bigint(field, &num);
        let den = Self::from_bigint(field, &den);
        num.checked_mul(&den.checked_inv()?)
    }

    pub fn field(&self) -> FieldDescriptor {
        match &self.repr {
            Repr::Rational(_) => FieldDescriptor::Rationals,
            Repr::Residue { modulus, .. } => FieldDescriptor::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => Repr::Residue {
                value: (a + b) % modulus,
                modulus: *modulus,
            },
            _ => unreachable!("fields checked equal"),
        };
        Ok(Scalar { repr })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => Repr::Residue {
                value: a * b % modulus,
                modulus: *modulus,
            },
            _ => unreachable!("fields checked equal"),
        };
        Ok(Scalar { repr })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(-a),
            Repr::Residue { value, modulus } => Repr::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        };
        Scalar { repr }
    }

    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(a.recip()),
            Repr::Residue { value, modulus } => Repr::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        };
        Ok(Scalar { repr })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&other.checked_inv()?)
    }

    /// Structural equality, refusing to compare across fields.
    pub fn checked_eq(&self, other: &Scalar) -> Result<bool, ScalarError> {
        self.same_field(other)?;
        Ok(self == other)
    }

    /// Nonzero inverse; panics on zero. Use [`Scalar::checked_inv`] on
    /// untrusted input.
    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of a nonzero scalar")
    }

    /// `self^exp` for a nonnegative exponent.
    pub fn pow(&self, exp: u64) -> Scalar {
        match &self.repr {
            Repr::Residue { value, modulus } => Scalar {
                repr: Repr::Residue {
                    value: pow_mod(*value, exp, *modulus),
                    modulus: *modulus,
                },
            },
            Repr::Rational(_) => {
                let mut acc = Scalar::one(self.field());
                let mut base = self.clone();
                let mut e = exp;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = &acc * &base;
                    }
                    base = &base * &base;
                    e >>= 1;
                }
                acc
            }
        }
    }

    /// Rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            Repr::Residue { .. } => None,
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_negative())
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc
}

/// True iff `omega` is a primitive `n`-th root of unity.
pub fn root_of_unity_check(omega: &Scalar, n: u64) -> Result<bool, ScalarError> {
    if omega.is_zero() {
        return Err(ScalarError::ZeroRoot);
    }
    if n == 0 {
        return Ok(false);
    }
    let one = Scalar::one(omega.field());
    let mut power = omega.clone();
    for k in 1..=n {
        if power == one {
            return Ok(k == n);
        }
        power = &power * omega;
    }
    Ok(false)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Repr::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
