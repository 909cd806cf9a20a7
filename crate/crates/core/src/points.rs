//! Points as rank-one subgroups `H_a ⊂ Q` labelled by supernatural numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tropical::{is_unit_or_zero, ZminElem};

/// `p`-adic exponent in `N ∪ {inf}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exponent {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(n) => write!(f, "{n}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

/// The exponent applied to unlisted primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DefaultExponent {
    Zero,
    Infinite,
}

impl DefaultExponent {
    fn as_exponent(self) -> Exponent {
        match self {
            DefaultExponent::Zero => Exponent::Finite(0),
            DefaultExponent::Infinite => Exponent::Infinite,
        }
    }
}

/// A supernatural number `prod p^{n_p}` with finitely many exceptions to a
/// default, or the base point `{0}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Supernatural {
    explicit: BTreeMap<u64, Exponent>,
    default: DefaultExponent,
    base_point: bool,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Supernatural {
    pub fn new(
        explicit: impl IntoIterator<Item = (u64, Exponent)>,
        default: DefaultExponent,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, e) in explicit {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if map.insert(p, e).is_some() {
                return Err(Error::InvalidSupernatural(format!("prime {p} listed twice")));
            }
        }
        map.retain(|_, e| *e != default.as_exponent());
        Ok(Supernatural { explicit: map, default, base_point: false })
    }

    /// The group `Z`: every exponent zero.
    pub fn integers() -> Self {
        Supernatural { explicit: BTreeMap::new(), default: DefaultExponent::Zero, base_point: false }
    }

    /// The group `Q`: every exponent infinite.
    pub fn rationals() -> Self {
        Supernatural {
            explicit: BTreeMap::new(),
            default: DefaultExponent::Infinite,
            base_point: false,
        }
    }

    pub fn base_point() -> Self {
        Supernatural { explicit: BTreeMap::new(), default: DefaultExponent::Zero, base_point: true }
    }

    /// `p^inf`: the fractions whose denominator is a power of `p`.
    pub fn p_infinity(p: u64) -> Result<Self> {
        Supernatural::new([(p, Exponent::Infinite)], DefaultExponent::Zero)
    }

    pub fn is_base_point(&self) -> bool {
        self.base_point
    }

    pub fn default_exponent(&self) -> DefaultExponent {
        self.default
    }

    pub fn explicit(&self) -> &BTreeMap<u64, Exponent> {
        &self.explicit
    }

    pub fn exponent(&self, p: u64) -> Exponent {
        self.explicit.get(&p).copied().unwrap_or(self.default.as_exponent())
    }

    /// Whether `x ∈ H_a`, i.e. `v_p(x) + a_p >= 0` for every prime `p`.
    pub fn contains(&self, x: &BigRational) -> bool {
        if self.base_point {
            return x.is_zero();
        }
        let mut den = x.denom().clone();
        match self.default {
            DefaultExponent::Zero => {
                for (&p, &e) in &self.explicit {
                    let p = BigInt::from(p);
                    let mut left = match e {
                        Exponent::Finite(n) => n,
                        Exponent::Infinite => u64::MAX,
                    };
                    while left > 0 && (&den % &p).is_zero() {
                        den /= &p;
                        left -= 1;
                    }
                }
                den.is_one()
            }
            DefaultExponent::Infinite => self.explicit.iter().all(|(&p, &e)| {
                let Exponent::Finite(n) = e else { return true };
                valuation(&den, p) <= n
            }),
        }
    }

    /// Primes with infinite exponent among the listed ones.
    fn infinite_set(&self) -> Vec<u64> {
        self.explicit
            .iter()
            .filter(|(_, &e)| e == Exponent::Infinite)
            .map(|(&p, _)| p)
            .collect()
    }
}

fn valuation(n: &BigInt, p: u64) -> u64 {
    if n.is_zero() {
        return u64::MAX;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

pub fn subgroup_contains(a: &Supernatural, x: &BigRational) -> bool {
    a.contains(x)
}

/// `H_a ≅ H_b` as ordered groups: same infinite primes and same default.
pub fn points_isomorphic(a: &Supernatural, b: &Supernatural) -> bool {
    if a.base_point || b.base_point {
        return a.base_point == b.base_point;
    }
    if a.default != b.default {
        return false;
    }
    match a.default {
        DefaultExponent::Zero => a.infinite_set() == b.infinite_set(),
        // every listed exponent is finite, so the infinite sets are complements
        DefaultExponent::Infinite => a.explicit.keys().eq(b.explicit.keys()),
    }
}

impl fmt::Display for Supernatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base_point {
            return write!(f, "base");
        }
        let mut parts: Vec<String> = self
            .explicit
            .iter()
            .map(|(p, e)| match e {
                Exponent::Finite(1) => p.to_string(),
                e => format!("{p}^{e}"),
            })
            .collect();
        if self.default == DefaultExponent::Infinite {
            parts.push("*^inf".into());
        }
        if parts.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for Supernatural {
    type Err = Error;

    /// `base`, `1`, or a product like `3*2^inf*5^2`; `*^inf` sets the default
    /// to infinity. JSON objects are accepted as well.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidSupernatural(e.to_string()));
        }
        if s == "base" {
            return Ok(Supernatural::base_point());
        }
        if s == "1" {
            return Ok(Supernatural::integers());
        }
        let mut default = DefaultExponent::Zero;
        let mut explicit = Vec::new();
        for factor in s.split('*').map(str::trim) {
            if factor == "^inf" {
                default = DefaultExponent::Infinite;
                continue;
            }
            let (p, e) = factor.split_once('^').unwrap_or((factor, "1"));
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidSupernatural(format!("bad prime {p:?}")))?;
            let e = match e {
                "inf" => Exponent::Infinite,
                e => Exponent::Finite(
                    e.parse()
                        .map_err(|_| Error::InvalidSupernatural(format!("bad exponent {e:?}")))?,
                ),
            };
            explicit.push((p, e));
        }
        Supernatural::new(explicit, default)
    }
}

impl Serialize for Supernatural {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.base_point {
            let mut map = s.serialize_map(Some(1))?;
            map.serialize_entry("base_point", &true)?;
            return map.end();
        }
        let explicit: BTreeMap<String, serde_json::Value> = self
            .explicit
            .iter()
            .map(|(p, e)| {
                let v = match e {
                    Exponent::Finite(n) => serde_json::Value::from(*n),
                    Exponent::Infinite => serde_json::Value::from("inf"),
                };
                (p.to_string(), v)
            })
            .collect();
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("explicit", &explicit)?;
        match self.default {
            DefaultExponent::Zero => map.serialize_entry("default", &0)?,
            DefaultExponent::Infinite => map.serialize_entry("default", "inf")?,
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Supernatural {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(default)]
            explicit: BTreeMap<String, serde_json::Value>,
            #[serde(default)]
            default: Option<serde_json::Value>,
            #[serde(default)]
            base_point: bool,
        }
        fn exponent(v: &serde_json::Value) -> Option<Exponent> {
            match v {
                serde_json::Value::String(s) if s == "inf" => Some(Exponent::Infinite),
                v => v.as_u64().map(Exponent::Finite),
            }
        }
        let raw = Raw::deserialize(d)?;
        if raw.base_point {
            if !raw.explicit.is_empty() || raw.default.is_some() {
                return Err(de::Error::custom("base point carries no exponents"));
            }
            return Ok(Supernatural::base_point());
        }
        let default = match raw.default.as_ref().map(exponent) {
            None | Some(Some(Exponent::Finite(0))) => DefaultExponent::Zero,
            Some(Some(Exponent::Infinite)) => DefaultExponent::Infinite,
            _ => return Err(de::Error::custom("default must be 0 or \"inf\"")),
        };
        let mut explicit = Vec::new();
        for (p, v) in &raw.explicit {
            let p: u64 = p.parse().map_err(|_| de::Error::custom(format!("bad prime {p:?}")))?;
            let e = exponent(v).ok_or_else(|| de::Error::custom("bad exponent"))?;
            explicit.push((p, e));
        }
        Supernatural::new(explicit, default).map_err(de::Error::custom)
    }
}

/// A rational number known to lie in `H_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneElem {
    value: BigRational,
    owner: Supernatural,
}

impl RankOneElem {
    pub fn new(value: BigRational, owner: &Supernatural) -> Result<Self> {
        if !owner.contains(&value) {
            return Err(Error::NotInSubgroup { value: value.to_string(), owner: owner.to_string() });
        }
        Ok(RankOneElem { value, owner: owner.clone() })
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn owner(&self) -> &Supernatural {
        &self.owner
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StalkOp {
    Max,
    Plus,
}

/// The operations of the stalk semifield `H_max = (H ∪ {-inf}, max, +)`.
pub fn stalk_ops(a: &Supernatural, op: StalkOp, x: &RankOneElem, y: &RankOneElem) -> Result<RankOneElem> {
    if x.owner != *a || y.owner != *a {
        return Err(Error::OwnerMismatch);
    }
    let value = match op {
        StalkOp::Max => std::cmp::max(&x.value, &y.value).clone(),
        StalkOp::Plus => &x.value + &y.value,
    };
    RankOneElem::new(value, a)
}

/// `x = n + sum n_p / p^alpha` with `0 < n_p < p^alpha`, `p ∤ n_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub integer: BigInt,
    pub parts: Vec<(u64, u32, BigInt)>,
}

impl PartialFractions {
    pub fn reassemble(&self) -> BigRational {
        let mut acc = BigRational::from_integer(self.integer.clone());
        for (p, alpha, n) in &self.parts {
            acc += BigRational::new(n.clone(), BigInt::from(*p).pow(*alpha));
        }
        acc
    }
}

/// Prime factorization by trial division.
pub fn factor(n: &BigInt) -> Vec<(u64, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        let mut k = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let p = n.to_u64().expect("prime factor beyond 64 bits");
        out.push((p, 1));
    }
    out
}

/// Decomposition in simple elements, one part per prime of the denominator.
pub fn partial_fractions(x: &BigRational) -> PartialFractions {
    let d = x.denom();
    let r = x.numer().mod_floor(d);
    let mut parts = Vec::new();
    let mut frac = BigRational::zero();
    for (p, alpha) in factor(d) {
        let pa = BigInt::from(p).pow(alpha);
        let cofactor = d / &pa;
        // n_p = r * cofactor^{-1} mod p^alpha
        let inv = cofactor.extended_gcd(&pa).x.mod_floor(&pa);
        let n = (&r * inv).mod_floor(&pa);
        frac += BigRational::new(n.clone(), pa);
        parts.push((p, alpha, n));
    }
    let integer = (x - frac).to_integer();
    PartialFractions { integer, parts }
}

/// A prime of `Spec Z` or its generic point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecPoint {
    Prime(u64),
    Generic,
}

/// The point `H(p)` attached to a prime; the generic point goes to the base point.
pub fn theta_image(p: SpecPoint) -> Result<Supernatural> {
    match p {
        SpecPoint::Prime(p) => Supernatural::p_infinity(p),
        SpecPoint::Generic => Ok(Supernatural::base_point()),
    }
}

/// Whether `x` is fixed by every Frobenius `Fr_k`: exactly `q^0` and `q^inf`.
pub fn global_sections_check(x: &ZminElem) -> bool {
    is_unit_or_zero(x)
}
