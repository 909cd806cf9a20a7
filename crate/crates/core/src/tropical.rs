//! The base semirings of characteristic one: `B`, `Z_min` and `R_max`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// A commutative semiring with idempotent addition.
///
/// Every semiring in the crate implements this, so the law checks in the
/// test suite can be written once.
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Exponent of `q`: an integer or `+inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Exp {
    Finite(BigInt),
    Infinite,
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exp::Finite(a), Exp::Finite(b)) => a.cmp(b),
            (Exp::Finite(_), Exp::Infinite) => Ordering::Less,
            (Exp::Infinite, Exp::Finite(_)) => Ordering::Greater,
            (Exp::Infinite, Exp::Infinite) => Ordering::Equal,
        }
    }
}

/// An element `q^n` of `Z_min`; `q^inf` is the semiring zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZminElem {
    exp: Exp,
}

impl ZminElem {
    pub fn q(n: impl Into<BigInt>) -> Self {
        ZminElem { exp: Exp::Finite(n.into()) }
    }

    pub fn infinity() -> Self {
        ZminElem { exp: Exp::Infinite }
    }

    pub fn exponent(&self) -> &Exp {
        &self.exp
    }

    pub fn finite_exponent(&self) -> Option<&BigInt> {
        match &self.exp {
            Exp::Finite(n) => Some(n),
            Exp::Infinite => None,
        }
    }

    /// `Fr_k(q^n) = q^{kn}`.
    pub fn frobenius(&self, k: u64) -> Self {
        assert!(k >= 1, "Frobenius index must be positive");
        match &self.exp {
            Exp::Finite(n) => ZminElem::q(n * BigInt::from(k)),
            Exp::Infinite => ZminElem::infinity(),
        }
    }

    /// The same element seen in `Z_max`, where `q^n` has exponent `-n`.
    /// `None` stands for `-inf`.
    pub fn zmax_exponent(&self) -> Option<BigInt> {
        self.finite_exponent().map(|n| -n)
    }

    pub fn from_zmax_exponent(n: Option<BigInt>) -> Self {
        match n {
            Some(n) => ZminElem::q(-n),
            None => ZminElem::infinity(),
        }
    }
}

impl Semiring for ZminElem {
    fn zero() -> Self {
        ZminElem::infinity()
    }

    fn one() -> Self {
        ZminElem::q(0)
    }

    fn add(&self, other: &Self) -> Self {
        std::cmp::min(self, other).clone()
    }

    fn mul(&self, other: &Self) -> Self {
        match (&self.exp, &other.exp) {
            (Exp::Finite(a), Exp::Finite(b)) => ZminElem::q(a + b),
            _ => ZminElem::infinity(),
        }
    }
}

impl fmt::Display for ZminElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exp {
            Exp::Finite(n) => write!(f, "q^{n}"),
            Exp::Infinite => write!(f, "q^inf"),
        }
    }
}

impl Serialize for ZminElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(1))?;
        match &self.exp {
            Exp::Finite(n) => match i64::try_from(n) {
                Ok(v) => map.serialize_entry("exp", &v)?,
                Err(_) => map.serialize_entry("exp", &n.to_string())?,
            },
            Exp::Infinite => map.serialize_entry("exp", "inf")?,
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ZminElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            exp: serde_json::Value,
        }
        let raw = Raw::deserialize(d)?;
        match raw.exp {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(ZminElem::q)
                .ok_or_else(|| de::Error::custom("exponent must be an integer")),
            serde_json::Value::String(s) if s == "inf" => Ok(ZminElem::infinity()),
            serde_json::Value::String(s) => s
                .parse::<BigInt>()
                .map(ZminElem::q)
                .map_err(|_| de::Error::custom("exponent must be an integer or \"inf\"")),
            _ => Err(de::Error::custom("exponent must be an integer or \"inf\"")),
        }
    }
}

/// The Boolean semifield `{0, 1}` with `1 + 1 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoolSemifield(pub bool);

impl Semiring for BoolSemifield {
    fn zero() -> Self {
        BoolSemifield(false)
    }

    fn one() -> Self {
        BoolSemifield(true)
    }

    fn add(&self, other: &Self) -> Self {
        BoolSemifield(self.0 || other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        BoolSemifield(self.0 && other.0)
    }
}

impl BoolSemifield {
    /// The image of `B` inside `Z_min`.
    pub fn to_zmin(self) -> ZminElem {
        if self.0 {
            ZminElem::one()
        } else {
            ZminElem::zero()
        }
    }
}

/// `([0, inf), max, x)`. Floating point, used for reporting only.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct RmaxElem(f64);

impl RmaxElem {
    pub fn new(value: f64) -> Option<Self> {
        (value >= 0.0 && value.is_finite()).then_some(RmaxElem(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `Fr_u(x) = x^u`, an automorphism for `u > 0`.
    pub fn frobenius(self, u: f64) -> Self {
        assert!(u > 0.0, "Frobenius exponent must be positive");
        RmaxElem(self.0.powf(u))
    }
}

impl Semiring for RmaxElem {
    fn zero() -> Self {
        RmaxElem(0.0)
    }

    fn one() -> Self {
        RmaxElem(1.0)
    }

    fn add(&self, other: &Self) -> Self {
        RmaxElem(self.0.max(other.0))
    }

    fn mul(&self, other: &Self) -> Self {
        RmaxElem(self.0 * other.0)
    }
}

/// `q^n` with `n >= 0`: the sub-semiring `Z_min^+`.
pub fn is_nonnegative(x: &ZminElem) -> bool {
    match &x.exp {
        Exp::Finite(n) => !n.is_negative(),
        Exp::Infinite => true,
    }
}

pub(crate) fn is_unit_or_zero(x: &ZminElem) -> bool {
    match &x.exp {
        Exp::Finite(n) => n.is_zero(),
        Exp::Infinite => true,
    }
}
