//! Exact positive slopes `lambda` and the sign test `sign(lambda*x + y)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real number `lambda > 0` with exact comparisons against rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SlopeJson", into = "SlopeJson")]
pub enum Slope {
    Rational(BigRational),
    Quadratic(QuadraticSurd),
    ContinuedFraction(ContinuedFraction),
}

/// `(a + b*sqrt(d)) / c` with `c > 0`, `d > 1` square-free, `b != 0` and
/// `gcd(a, b, c) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

/// The leading partial quotients of an irrational number.
///
/// Only the prefix is known, so a comparison with `y/x` is decided by the
/// last convergent `p/q` and is trusted for `|x| < q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
    p: BigInt,
    q: BigInt,
}

fn sign(x: &BigInt) -> Ordering {
    x.cmp(&BigInt::zero())
}

/// Sign of `p + q*sqrt(d)` for `d > 0`.
fn sign_surd(p: &BigInt, q: &BigInt, d: &BigInt) -> Ordering {
    match (sign(p), sign(q)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (Ordering::Greater, Ordering::Less) => (p * p).cmp(&(q * q * d)),
        (Ordering::Less, Ordering::Greater) => (q * q * d).cmp(&(p * p)),
    }
}

/// Split `n > 0` as `s^2 * f` with `f` square-free.
fn square_free_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut f = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            s *= &p;
        }
        if (&rest % &p).is_zero() {
            rest /= &p;
            f *= &p;
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    (s, f * rest)
}

impl QuadraticSurd {
    /// Normalizes `(a + b*sqrt(d)) / c`; collapses to a rational when possible.
    pub fn build(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Slope> {
        if c.is_zero() {
            return Err(Error::InvalidSlope("zero denominator".into()));
        }
        if !d.is_positive() {
            return Err(Error::InvalidSlope("radicand must be positive".into()));
        }
        let (s, d) = square_free_part(&d);
        let b = b * s;
        if b.is_zero() || d.is_one() {
            let r = BigRational::new(a + b, c);
            return Slope::from_rational(r);
        }
        let (mut a, mut b, mut c) = (a, b, c);
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        let x = QuadraticSurd { a: a / &g, b: b / &g, c: c / &g, d };
        if sign_surd(&x.a, &x.b, &x.d) != Ordering::Greater {
            return Err(Error::InvalidSlope(format!("{x} is not positive")));
        }
        Ok(Slope::Quadratic(x))
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// `sign(lambda*x + y)`.
    pub fn sign_linear(&self, x: &BigInt, y: &BigInt) -> Ordering {
        let p = &self.a * x + &self.c * y;
        let q = &self.b * x;
        sign_surd(&p, &q, &self.d)
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        (self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * d.sqrt())
            / self.c.to_f64().unwrap_or(f64::NAN)
    }

    pub fn floor(&self) -> BigInt {
        let mut n = BigInt::from(self.to_f64().floor() as i64);
        let one = BigInt::one();
        while self.sign_linear(&one, &-&n) == Ordering::Less {
            n -= 1;
        }
        while self.sign_linear(&one, &-(&n + BigInt::one())) != Ordering::Less {
            n += 1;
        }
        n
    }

    /// Continued-fraction expansion, `depth` partial quotients.
    pub fn continued_fraction(&self, depth: usize) -> ContinuedFraction {
        let mut terms = Vec::with_capacity(depth);
        // x = (a + b sqrt d)/c, possibly nonpositive after the first step
        let (mut a, mut b, mut c) = (self.a.clone(), self.b.clone(), self.c.clone());
        let d = &self.d;
        for _ in 0..depth {
            let x = QuadraticSurd { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() };
            let n = x.floor();
            terms.push(n.clone());
            // x - n = (a - n c + b sqrt d)/c, then invert
            let a1 = &a - &n * &c;
            // 1/((a1 + b sqrt d)/c) = c (a1 - b sqrt d) / (a1^2 - b^2 d)
            let den = &a1 * &a1 - &b * &b * d;
            let (mut na, mut nb, mut nc) = (&c * &a1, -(&c * &b), den);
            if nc.is_negative() {
                na = -na;
                nb = -nb;
                nc = -nc;
            }
            let g = na.gcd(&nb).gcd(&nc);
            a = na / &g;
            b = nb / &g;
            c = nc / &g;
        }
        ContinuedFraction::from_terms(terms).expect("expansion of a positive irrational")
    }

    /// Product of two surds, when it stays in a single quadratic field.
    pub fn mul(&self, other: &QuadraticSurd) -> Result<Slope> {
        let c = &self.c * &other.c;
        if self.d == other.d {
            let a = &self.a * &other.a + &self.b * &other.b * &self.d;
            let b = &self.a * &other.b + &other.a * &self.b;
            return QuadraticSurd::build(a, b, c, self.d.clone());
        }
        if self.a.is_zero() && other.a.is_zero() {
            return QuadraticSurd::build(
                BigInt::zero(),
                &self.b * &other.b,
                c,
                &self.d * &other.d,
            );
        }
        Err(Error::UnsupportedSlopeProduct(format!(
            "{self} * {other} is not quadratic"
        )))
    }

    fn scale(&self, r: &BigRational) -> Result<Slope> {
        QuadraticSurd::build(
            &self.a * r.numer(),
            &self.b * r.numer(),
            &self.c * r.denom(),
            self.d.clone(),
        )
    }
}

impl fmt::Display for QuadraticSurd {
    /// `sqrt(2)`, `2*sqrt(2)`, `sqrt(2)/2`, `(1+sqrt(5))/2`, `(5-2*sqrt(3))/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        if !self.a.is_zero() {
            num.push_str(&self.a.to_string());
            num.push(if self.b.is_negative() { '-' } else { '+' });
        } else if self.b.is_negative() {
            num.push('-');
        }
        let b = self.b.abs();
        if !b.is_one() {
            num.push_str(&format!("{b}*"));
        }
        num.push_str(&format!("sqrt({})", self.d));
        match (self.c.is_one(), self.a.is_zero()) {
            (true, _) => write!(f, "{num}"),
            (false, true) => write!(f, "{num}/{}", self.c),
            (false, false) => write!(f, "({num})/{}", self.c),
        }
    }
}

impl ContinuedFraction {
    pub fn from_terms(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidSlope("empty continued fraction".into()));
        }
        if terms[0].is_negative() || terms[1..].iter().any(|t| !t.is_positive()) {
            return Err(Error::InvalidSlope(
                "partial quotients must be a0 >= 0 then positive".into(),
            ));
        }
        if terms[0].is_zero() && terms.len() == 1 {
            return Err(Error::InvalidSlope("slope must be positive".into()));
        }
        let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
        let (mut p, mut q) = (terms[0].clone(), BigInt::one());
        for t in &terms[1..] {
            let p2 = t * &p + &p0;
            let q2 = t * &q + &q0;
            p0 = std::mem::replace(&mut p, p2);
            q0 = std::mem::replace(&mut q, q2);
        }
        Ok(ContinuedFraction { terms, p, q })
    }

    /// Draws `depth` partial quotients from a generator.
    pub fn from_fn(depth: usize, mut term: impl FnMut(usize) -> BigInt) -> Result<Self> {
        ContinuedFraction::from_terms((0..depth).map(&mut term).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn convergent(&self) -> BigRational {
        BigRational::new(self.p.clone(), self.q.clone())
    }

    /// Comparisons `sign(lambda*x + y)` are exact for `|x| < guarantee`.
    pub fn guarantee(&self) -> &BigInt {
        &self.q
    }

    pub fn sign_linear(&self, x: &BigInt, y: &BigInt) -> Result<Ordering> {
        if x.abs() >= self.q {
            return Err(Error::DepthExceeded {
                guarantee: self.q.to_string(),
                needed: x.abs().to_string(),
            });
        }
        Ok(sign(&(&self.p * x + &self.q * y)))
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.terms[0])?;
        for (i, t) in self.terms[1..].iter().enumerate() {
            write!(f, "{}{t}", if i == 0 { "; " } else { ", " })?;
        }
        write!(f, "]")
    }
}

impl Slope {
    pub fn from_rational(r: BigRational) -> Result<Slope> {
        if !r.is_positive() {
            return Err(Error::InvalidSlope(format!("{r} is not positive")));
        }
        Ok(Slope::Rational(r))
    }

    pub fn rational(num: i64, den: i64) -> Result<Slope> {
        if den == 0 {
            return Err(Error::InvalidSlope("zero denominator".into()));
        }
        Slope::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: i64) -> Result<Slope> {
        Slope::rational(n, 1)
    }

    pub fn sqrt(d: i64) -> Result<Slope> {
        Slope::quadratic(0, 1, 1, d)
    }

    pub fn quadratic(a: i64, b: i64, c: i64, d: i64) -> Result<Slope> {
        QuadraticSurd::build(a.into(), b.into(), c.into(), d.into())
    }

    pub fn continued_fraction(terms: &[u64]) -> Result<Slope> {
        ContinuedFraction::from_terms(terms.iter().map(|&t| BigInt::from(t)).collect())
            .map(Slope::ContinuedFraction)
    }

    /// `sign(lambda*x + y)`.
    pub fn sign_linear(&self, x: &BigInt, y: &BigInt) -> Result<Ordering> {
        match self {
            Slope::Rational(r) => Ok(sign(&(r.numer() * x + r.denom() * y))),
            Slope::Quadratic(s) => Ok(s.sign_linear(x, y)),
            Slope::ContinuedFraction(cf) => cf.sign_linear(x, y),
        }
    }

    /// Compares `lambda*i + j` with `lambda*i2 + j2`.
    pub fn compare(&self, i: i64, j: i64, i2: i64, j2: i64) -> Result<Ordering> {
        let x = BigInt::from(i) - BigInt::from(i2);
        let y = BigInt::from(j) - BigInt::from(j2);
        self.sign_linear(&x, &y)
    }

    /// Compares `lambda` with `b/a` for `a > 0`.
    pub fn cmp_ratio(&self, b: &BigInt, a: &BigInt) -> Result<Ordering> {
        debug_assert!(a.is_positive());
        self.sign_linear(a, &-b)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Slope::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// `Some(true)` for rationals, `Some(false)` for quadratic irrationals,
    /// `None` when only a prefix of the expansion is known.
    pub fn is_rational(&self) -> Option<bool> {
        match self {
            Slope::Rational(_) => Some(true),
            Slope::Quadratic(_) => Some(false),
            Slope::ContinuedFraction(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Slope::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Slope::Quadratic(s) => s.to_f64(),
            Slope::ContinuedFraction(cf) => cf.convergent().to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Exact product. Continued-fraction prefixes are refused.
    pub fn mul(&self, other: &Slope) -> Result<Slope> {
        match (self, other) {
            (Slope::Rational(x), Slope::Rational(y)) => Slope::from_rational(x * y),
            (Slope::Rational(r), Slope::Quadratic(s)) | (Slope::Quadratic(s), Slope::Rational(r)) => {
                s.scale(r)
            }
            (Slope::Quadratic(s), Slope::Quadratic(t)) => s.mul(t),
            _ => Err(Error::UnsupportedSlopeProduct(
                "continued-fraction prefixes cannot be multiplied exactly".into(),
            )),
        }
    }

    /// Continued fraction prefix with `depth` terms, for irrational slopes.
    pub fn expand(&self, depth: usize) -> Option<ContinuedFraction> {
        match self {
            Slope::Quadratic(s) => Some(s.continued_fraction(depth)),
            _ => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Slope::Quadratic(s) => s.fmt(f),
            Slope::ContinuedFraction(cf) => cf.fmt(f),
        }
    }
}

fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidSlope(format!("not an integer: {s:?}")))
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',').map(parse_int).collect()
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `n`, `n/m`, `rational:n/m`, `sqrtD`, `sqrt(D)`,
    /// `(a+b*sqrt(d))/c`, `quadratic:a,b,c,d`, `cf:a0,a1,...` or a JSON
    /// object.
    fn from_str(s: &str) -> Result<Slope> {
        let s = s.trim();
        if s.starts_with('{') {
            return serde_json::from_str(s).map_err(|e| Error::InvalidSlope(e.to_string()));
        }
        if s.contains("sqrt(") {
            return parse_surd(s);
        }
        if let Some(rest) = s.strip_prefix("sqrt") {
            return Slope::sqrt(parse_int(rest)?);
        }
        if let Some(rest) = s.strip_prefix("quadratic:") {
            return match parse_list(rest)?[..] {
                [a, b, c, d] => Slope::quadratic(a, b, c, d),
                _ => Err(Error::InvalidSlope("quadratic needs a,b,c,d".into())),
            };
        }
        if let Some(rest) = s.strip_prefix("cf:") {
            let terms = parse_list(rest)?;
            if terms.iter().any(|&t| t < 0) {
                return Err(Error::InvalidSlope("negative partial quotient".into()));
            }
            return ContinuedFraction::from_terms(terms.into_iter().map(BigInt::from).collect())
                .map(Slope::ContinuedFraction);
        }
        let s = s.strip_prefix("rational:").unwrap_or(s);
        match s.split_once('/') {
            Some((n, d)) => Slope::rational(parse_int(n)?, parse_int(d)?),
            None => Slope::integer(parse_int(s)?),
        }
    }
}

fn strip_outer_parens(s: &str) -> &str {
    let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) else { return s };
    let mut depth = 0i32;
    for ch in inner.chars() {
        depth += match ch {
            '(' => 1,
            ')' => -1,
            _ => 0,
        };
        if depth < 0 {
            return s;
        }
    }
    inner
}

/// The displayed form of a surd, `[(][a+|a-][b*]sqrt(d)[)][/c]`.
fn parse_surd(text: &str) -> Result<Slope> {
    let bad = || Error::InvalidSlope(format!("cannot read {text:?}"));
    let close = text.rfind(')').ok_or_else(bad)?;
    let (body, c) = match text[close + 1..].trim() {
        "" => (&text[..=close], 1),
        rest => (&text[..=close], parse_int(rest.strip_prefix('/').ok_or_else(bad)?)?),
    };
    let body = body.trim();
    let body = strip_outer_parens(body);
    let (prefix, rest) = body.split_once("sqrt(").ok_or_else(bad)?;
    let d = parse_int(rest.strip_suffix(')').ok_or_else(bad)?)?;
    let prefix = prefix.trim().trim_end_matches('*');
    let (a, b) = match prefix.rfind(['+', '-']).filter(|&i| i > 0) {
        Some(i) => (parse_int(&prefix[..i])?, &prefix[i..]),
        None => (0, prefix),
    };
    let b = match b.trim() {
        "" | "+" => 1,
        "-" => -1,
        t => parse_int(t.trim_start_matches('+'))?,
    };
    Slope::quadratic(a, b, c, d)
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum SlopeJson {
    Rational {
        #[serde(with = "crate::json")]
        num: BigInt,
        #[serde(with = "crate::json")]
        den: BigInt,
    },
    Quadratic {
        #[serde(with = "crate::json")]
        a: BigInt,
        #[serde(with = "crate::json")]
        b: BigInt,
        #[serde(with = "crate::json")]
        c: BigInt,
        #[serde(with = "crate::json")]
        d: BigInt,
    },
    Cf {
        #[serde(with = "crate::json::vec")]
        terms: Vec<BigInt>,
    },
}

impl TryFrom<SlopeJson> for Slope {
    type Error = Error;

    fn try_from(raw: SlopeJson) -> Result<Slope> {
        match raw {
            SlopeJson::Rational { num, den } => {
                if den.is_zero() {
                    return Err(Error::InvalidSlope("zero denominator".into()));
                }
                Slope::from_rational(BigRational::new(num, den))
            }
            SlopeJson::Quadratic { a, b, c, d } => QuadraticSurd::build(a, b, c, d),
            SlopeJson::Cf { terms } => {
                ContinuedFraction::from_terms(terms).map(Slope::ContinuedFraction)
            }
        }
    }
}

impl From<Slope> for SlopeJson {
    fn from(s: Slope) -> SlopeJson {
        match s {
            Slope::Rational(r) => {
                let (num, den) = r.into();
                SlopeJson::Rational { num, den }
            }
            Slope::Quadratic(QuadraticSurd { a, b, c, d }) => SlopeJson::Quadratic { a, b, c, d },
            Slope::ContinuedFraction(cf) => SlopeJson::Cf { terms: cf.terms },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn normalization() {
        assert_eq!(Slope::sqrt(4).unwrap(), Slope::integer(2).unwrap());
        let s8 = Slope::sqrt(8).unwrap();
        assert_eq!(s8, Slope::quadratic(0, 2, 1, 2).unwrap());
        assert_eq!(Slope::quadratic(-2, -4, -6, 3).unwrap(), Slope::quadratic(1, 2, 3, 3).unwrap());
        assert!(Slope::quadratic(1, -1, 1, 2).is_err());
        assert!(Slope::rational(-1, 2).is_err());
        assert!(Slope::rational(0, 2).is_err());
    }

    #[test]
    fn sqrt2_against_rationals() {
        let s = Slope::sqrt(2).unwrap();
        assert_eq!(s.cmp_ratio(&big(1), &big(1)).unwrap(), Ordering::Greater);
        assert_eq!(s.cmp_ratio(&big(3), &big(2)).unwrap(), Ordering::Less);
        assert_eq!(s.cmp_ratio(&big(99), &big(70)).unwrap(), Ordering::Less);
        assert_eq!(s.cmp_ratio(&big(140), &big(99)).unwrap(), Ordering::Greater);
        assert_eq!(s.compare(1, 0, 0, 1).unwrap(), Ordering::Greater);
    }

    #[test]
    fn rational_ties() {
        let s = Slope::rational(1, 2).unwrap();
        assert_eq!(s.compare(2, 0, 0, 1).unwrap(), Ordering::Equal);
        assert_eq!(s.compare(1, 0, 0, 1).unwrap(), Ordering::Less);
    }

    #[test]
    fn expansion_of_surds() {
        let cf = Slope::sqrt(2).unwrap().expand(6).unwrap();
        let terms: Vec<i64> = cf.terms().iter().map(|t| t.to_i64().unwrap()).collect();
        assert_eq!(terms, [1, 2, 2, 2, 2, 2]);
        assert_eq!(cf.convergent(), BigRational::new(big(99), big(70)));

        let golden = Slope::quadratic(1, 1, 2, 5).unwrap().expand(5).unwrap();
        assert!(golden.terms().iter().all(|t| t.is_one()));

        let inv = Slope::quadratic(0, 1, 2, 2).unwrap().expand(4).unwrap();
        let terms: Vec<i64> = inv.terms().iter().map(|t| t.to_i64().unwrap()).collect();
        assert_eq!(terms, [0, 1, 2, 2]);

        let s7 = Slope::sqrt(7).unwrap().expand(9).unwrap();
        let terms: Vec<i64> = s7.terms().iter().map(|t| t.to_i64().unwrap()).collect();
        assert_eq!(terms, [2, 1, 1, 1, 4, 1, 1, 1, 4]);
    }

    #[test]
    fn continued_fraction_guarantee() {
        let cf = Slope::continued_fraction(&[1, 2, 2, 2]).unwrap();
        // convergent 17/12
        assert_eq!(cf.compare(11, 0, 0, 15).unwrap(), Ordering::Greater);
        assert!(matches!(cf.compare(12, 0, 0, 17), Err(Error::DepthExceeded { .. })));
        let exact = Slope::sqrt(2).unwrap();
        for a in 1..12i64 {
            for b in 0..30i64 {
                assert_eq!(cf.compare(a, 0, 0, b).unwrap(), exact.compare(a, 0, 0, b).unwrap());
            }
        }
    }

    #[test]
    fn products() {
        let s2 = Slope::sqrt(2).unwrap();
        let s3 = Slope::sqrt(3).unwrap();
        assert_eq!(s2.mul(&s3).unwrap(), Slope::sqrt(6).unwrap());
        assert_eq!(s2.mul(&Slope::quadratic(0, 1, 2, 2).unwrap()).unwrap(), Slope::integer(1).unwrap());
        assert_eq!(s2.mul(&Slope::sqrt(8).unwrap()).unwrap(), Slope::integer(4).unwrap());
        let golden = Slope::quadratic(1, 1, 2, 5).unwrap();
        assert!(matches!(golden.mul(&s2), Err(Error::UnsupportedSlopeProduct(_))));
        assert_eq!(Slope::integer(2).unwrap().mul(&Slope::integer(3).unwrap()).unwrap(), Slope::integer(6).unwrap());
    }

    #[test]
    fn text_and_json() {
        assert_eq!("sqrt2".parse::<Slope>().unwrap(), Slope::sqrt(2).unwrap());
        assert_eq!("rational:2/1".parse::<Slope>().unwrap(), Slope::integer(2).unwrap());
        assert_eq!("3/6".parse::<Slope>().unwrap(), Slope::rational(1, 2).unwrap());
        assert_eq!("quadratic:0,1,1,3".parse::<Slope>().unwrap(), Slope::sqrt(3).unwrap());
        let shown = [
            ((1, 1, 2, 5), "(1+sqrt(5))/2"),
            ((5, -2, 3, 3), "(5-2*sqrt(3))/3"),
            ((0, 1, 1, 6), "sqrt(6)"),
            ((0, 1, 2, 2), "sqrt(2)/2"),
            ((0, 2, 1, 2), "2*sqrt(2)"),
            ((-1, 2, 1, 2), "-1+2*sqrt(2)"),
            ((0, 3, 7, 5), "3*sqrt(5)/7"),
        ];
        for ((a, b, c, d), text) in shown {
            let q = Slope::quadratic(a, b, c, d).unwrap();
            assert_eq!(q.to_string(), text);
            assert_eq!(text.parse::<Slope>().unwrap(), q);
        }
        assert_eq!("(0+1*sqrt(2))/1".parse::<Slope>().unwrap(), Slope::sqrt(2).unwrap());
        assert!("sqrt(2".parse::<Slope>().is_err());
        let json = serde_json::to_string(&Slope::sqrt(2).unwrap()).unwrap();
        assert_eq!(json, r#"{"kind":"quadratic","a":0,"b":1,"c":1,"d":2}"#);
        assert_eq!(json.parse::<Slope>().unwrap(), Slope::sqrt(2).unwrap());
        let r: Slope = serde_json::from_str(r#"{"kind":"rational","num":4,"den":2}"#).unwrap();
        assert_eq!(r.to_string(), "2/1");
        let cf: Slope = serde_json::from_str(r#"{"kind":"cf","terms":[1,2,2]}"#).unwrap();
        assert_eq!(cf.to_string(), "[1; 2, 2]");
        assert!(serde_json::from_str::<Slope>(r#"{"kind":"rational","num":-1,"den":2}"#).is_err());
    }
}
