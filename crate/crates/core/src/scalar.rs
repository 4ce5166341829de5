//! Exact coefficient fields: the rationals and prime fields of odd characteristic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LeibError, Result};

/// Largest modulus accepted for prime fields; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The coefficient field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Fp")]
    PrimeField { p: u64 },
}

impl FieldSpec {
    /// The prime field of order `p`. Rejects composites and `p = 2`.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(LeibError::CharacteristicTwo);
        }
        if !is_prime(p) || p > MAX_PRIME {
            return Err(LeibError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField { p })
    }

    /// Re-checks the invariants of a deserialized descriptor.
    pub fn validated(self) -> Result<Self> {
        match self {
            FieldSpec::Rationals => Ok(self),
            FieldSpec::PrimeField { p } => FieldSpec::prime(p),
        }
    }

    /// 0 for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField { p } => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::PrimeField { .. })
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField { p } => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(LeibError::DivisionByZero);
        }
        self.from_i64(num).div(&self.from_i64(den))
    }

    fn embed_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField { p } => {
                let r = n % BigInt::from(p);
                let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                Scalar::Residue {
                    value: r.to_u64().expect("residue below p"),
                    p,
                }
            }
        }
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`. Over a prime field the value is reduced and
    /// `b` must be invertible.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || LeibError::Schema(format!("invalid scalar literal {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let num = self.embed_bigint(&num);
        match den {
            None => Ok(num),
            Some(d) => {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                let d = self.embed_bigint(&d);
                if d.is_zero() {
                    return Err(bad());
                }
                num.div(&d)
            }
        }
    }

    /// Short display name, `Q` or `F<p>`.
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::PrimeField { p } => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
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

/// A field element: a reduced fraction or a residue modulo an odd prime.
///
/// Arithmetic between scalars of different fields is a logic error and panics;
/// [`crate::Matrix`] construction rejects mixed-field input up front.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { p, .. } => FieldSpec::PrimeField { p: *p },
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
            Scalar::Residue { value, p } => Scalar::Residue {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        let inv = other.inv().ok_or(LeibError::DivisionByZero)?;
        Ok(self * &inv)
    }

    /// Canonical text form: `"a/b"` with `b > 0` reduced, a bare integer, or a residue in `[0, p)`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }

    fn check_same(&self, other: &Scalar) {
        if let (Scalar::Residue { p: a, .. }, Scalar::Residue { p: b, .. }) = (self, other) {
            assert_eq!(a, b, "scalar field mismatch");
        } else if std::mem::discriminant(self) != std::mem::discriminant(other) {
            panic!("scalar field mismatch");
        }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Scalar) {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Residue { value, p }, Scalar::Residue { value: b, .. }) => {
                *value = (*value + b) % *p;
            }
            _ => unreachable!(),
        }
    }

    /// `self -= factor * other`, the elimination step.
    pub(crate) fn sub_mul_assign(&mut self, factor: &Scalar, other: &Scalar) {
        match (&mut *self, factor, other) {
            (Scalar::Residue { value, p }, Scalar::Residue { value: f, .. }, Scalar::Residue { value: o, .. }) => {
                let prod = (f * o) % *p;
                *value = (*value + *p - prod) % *p;
            }
            (Scalar::Rational(a), Scalar::Rational(f), Scalar::Rational(o)) => {
                *a -= f * o;
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
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

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: a * b % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, p } => Scalar::Residue {
                value: (p - value) % p,
                p: *p,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
