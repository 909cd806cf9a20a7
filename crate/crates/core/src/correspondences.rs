//! Frobenius correspondences `Psi(lambda)`, their composition and the germ
//! semiring carrying the tangential deformation `Id_eps`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::slope::Slope;

/// The exponent `i*lambda + j (+ k*lambda')`, kept formal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExponentVec {
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

impl ExponentVec {
    pub fn new(i: u64, j: u64) -> Self {
        ExponentVec { i, j, k: 0 }
    }

}

/// Exponents add under multiplication of the powers of `q`.
impl std::ops::Mul for ExponentVec {
    type Output = ExponentVec;

    fn mul(self, other: ExponentVec) -> ExponentVec {
        ExponentVec { i: self.i + other.i, j: self.j + other.j, k: self.k + other.k }
    }
}

/// `Psi(lambda) = (R(lambda), l, r)` with `l(q) = q^lambda` and `r(q) = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCorrespondence {
    slope: Slope,
}

pub fn make_correspondence(lambda: Slope) -> ReducedCorrespondence {
    ReducedCorrespondence { slope: lambda }
}

impl ReducedCorrespondence {
    pub fn slope(&self) -> &Slope {
        &self.slope
    }

    /// `l(q^n) = q^{n lambda}`.
    pub fn left(&self, n: u64) -> ExponentVec {
        ExponentVec::new(n, 0)
    }

    /// `r(q^n) = q^n`.
    pub fn right(&self, n: u64) -> ExponentVec {
        ExponentVec::new(0, n)
    }

    /// Order of `q^x` and `q^y` in `R(lambda)` by exponent.
    pub fn compare(&self, x: ExponentVec, y: ExponentVec) -> Result<Ordering> {
        if x.k != 0 || y.k != 0 {
            return Err(Error::Type("exponent uses a second slope".into()));
        }
        let xi = BigInt::from(x.i) - BigInt::from(y.i);
        let xj = BigInt::from(x.j) - BigInt::from(y.j);
        self.slope.sign_linear(&xi, &xj)
    }

    /// Rational brackets `lower < lambda <= upper` over denominators up to
    /// `depth`, read off from comparisons of `X^a = l(q^a)` with `Y^b = r(q^b)`.
    pub fn dedekind_cut(&self, depth: u64) -> Result<(BigRational, BigRational)> {
        if depth == 0 {
            return Err(Error::Config("depth must be positive".into()));
        }
        let mut lower: Option<BigRational> = None;
        let mut upper: Option<BigRational> = None;
        for a in 1..=depth {
            let b = self.ceil_multiple(a)?;
            let ab = BigInt::from(a);
            let up = BigRational::new(b.clone(), ab.clone());
            let low = BigRational::new(b - 1, ab);
            if upper.as_ref().is_none_or(|u| up < *u) {
                upper = Some(up);
            }
            if low >= BigRational::zero() && lower.as_ref().is_none_or(|l| low > *l) {
                lower = Some(low);
            }
        }
        Ok((lower.unwrap_or_else(BigRational::zero), upper.expect("depth >= 1")))
    }

    /// Smallest `b >= 0` with `lambda * a <= b`.
    fn ceil_multiple(&self, a: u64) -> Result<BigInt> {
        let ab = BigInt::from(a);
        let guess = (self.slope.to_f64() * a as f64).ceil().max(0.0);
        let mut b = BigInt::from(guess as u64);
        // X^a versus Y^b: sign(lambda a - b)
        while self.slope.cmp_ratio(&b, &ab)? == Ordering::Greater {
            b += 1;
        }
        while b > BigInt::zero() && self.slope.cmp_ratio(&(&b - 1), &ab)? != Ordering::Greater {
            b -= 1;
        }
        Ok(b)
    }
}

/// An exponent `value + eps * slope` of a germ at `eps = 0+`, ordered
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GermExponent {
    pub value: BigRational,
    pub eps: BigRational,
}

impl GermExponent {
    pub fn new(value: BigRational, eps: BigRational) -> Self {
        GermExponent { value, eps }
    }

    pub fn from_ints(value: i64, eps: i64) -> Self {
        GermExponent::new(BigRational::from_integer(value.into()), BigRational::from_integer(eps.into()))
    }

    /// The sum of germs `q^x + q^y`: near `eps = 0+` the smaller exponent wins.
    pub fn add(&self, other: &Self) -> Self {
        std::cmp::min(self, other).clone()
    }

    pub fn mul(&self, other: &Self) -> Self {
        GermExponent::new(&self.value + &other.value, &self.eps + &other.eps)
    }

    pub fn at_zero(&self) -> &BigRational {
        &self.value
    }
}

/// The result of a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Correspondence {
    Psi(ReducedCorrespondence),
    /// `Id_eps o Psi(alpha)` with rational `alpha`; `alpha = 1` is `Id_eps`.
    Deformed(BigRational),
}

impl Correspondence {
    pub fn kind(&self) -> &'static str {
        match self {
            Correspondence::Psi(_) => "psi",
            Correspondence::Deformed(a) if a.is_one() => "id-eps",
            Correspondence::Deformed(_) => "id-eps-psi",
        }
    }

    /// The slope seen at `eps = 0`.
    pub fn slope(&self) -> Slope {
        match self {
            Correspondence::Psi(p) => p.slope.clone(),
            Correspondence::Deformed(a) => Slope::Rational(a.clone()),
        }
    }

    /// The `eps` coefficient of `l(q)`.
    pub fn eps_slope(&self) -> BigRational {
        match self {
            Correspondence::Psi(_) => BigRational::zero(),
            Correspondence::Deformed(a) => a.clone(),
        }
    }

    /// `l(q^n)` as a germ, when its value is rational.
    pub fn left_germ(&self, n: u64) -> Option<GermExponent> {
        let n = BigRational::from_integer(n.into());
        match self {
            Correspondence::Psi(p) => {
                p.slope.as_rational().map(|r| GermExponent::new(r * &n, BigRational::zero()))
            }
            Correspondence::Deformed(a) => Some(GermExponent::new(a * &n, a * &n)),
        }
    }

    /// `r(q^n) = q^n`, undeformed in every case.
    pub fn right_germ(&self, n: u64) -> GermExponent {
        GermExponent::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// Evaluation at `eps = 0`.
    pub fn at_eps_zero(&self) -> ReducedCorrespondence {
        make_correspondence(self.slope())
    }

    pub fn into_psi(self) -> Result<ReducedCorrespondence> {
        match self {
            Correspondence::Psi(p) => Ok(p),
            Correspondence::Deformed(_) => Err(Error::ChainedDeformation),
        }
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Correspondence::Psi(p) => write!(f, "Psi({})", p.slope),
            Correspondence::Deformed(a) if a.is_one() => write!(f, "Id_eps"),
            Correspondence::Deformed(a) => write!(f, "Id_eps o Psi({}/{})", a.numer(), a.denom()),
        }
    }
}

/// `Psi(lambda) o Psi(lambda')` together with the intermediate data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub result: Correspondence,
    /// `(s, t)` with `lambda lambda' = s lambda' + t`, when both slopes are
    /// irrational and such a relation exists; the tensor product then lives
    /// in the germ semiring before evaluation at `eps = 0`.
    pub relation: Option<(BigRational, BigRational)>,
}

fn ratio(n: &BigInt, d: &BigInt) -> BigRational {
    BigRational::new(n.clone(), d.clone())
}

/// Solves `p = s q + t` for rationals `s, t` with `q` irrational.
fn linear_relation(p: &Slope, q: &Slope) -> Option<(BigRational, BigRational)> {
    let Slope::Quadratic(q) = q else { return None };
    let (qa, qb, qc, qd) = q.parts();
    match p {
        Slope::Rational(r) => Some((BigRational::zero(), r.clone())),
        Slope::Quadratic(p) => {
            let (pa, pb, pc, pd) = p.parts();
            if pd != qd {
                return None;
            }
            let s = ratio(pb, pc) / ratio(qb, qc);
            let t = ratio(pa, pc) - &s * ratio(qa, qc);
            Some((s, t))
        }
        Slope::ContinuedFraction(_) => None,
    }
}

/// The composition law: `Psi(lambda) o Psi(lambda') = Psi(lambda lambda')`
/// unless both slopes are irrational with rational product `alpha`, in which
/// case the result is `Id_eps o Psi(alpha)`.
pub fn compose(lhs: &ReducedCorrespondence, rhs: &ReducedCorrespondence) -> Result<Composition> {
    let (l, r) = (&lhs.slope, &rhs.slope);
    if l.is_rational().is_none() || r.is_rational().is_none() {
        return Err(Error::UnsupportedSlopeProduct(
            "rationality of a product of continued-fraction prefixes is undecidable".into(),
        ));
    }
    let product = l.mul(r)?;
    let both_irrational = l.is_rational() == Some(false) && r.is_rational() == Some(false);
    let relation = if both_irrational { linear_relation(&product, r) } else { None };
    let result = match product {
        Slope::Rational(alpha) if both_irrational => Correspondence::Deformed(alpha),
        other => Correspondence::Psi(make_correspondence(other)),
    };
    Ok(Composition { result, relation })
}

/// Additive span of `{Z^k : k in S}`: only the extreme indices survive.
pub fn span_reduce(indices: &[u64]) -> Result<(u64, u64)> {
    let lo = indices.iter().min().ok_or(Error::EmptySet)?;
    let hi = indices.iter().max().ok_or(Error::EmptySet)?;
    Ok((*lo, *hi))
}

/// Membership table of the monoid generated by `gens`, for `0..=limit`.
pub fn monoid_members(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut member = vec![false; limit as usize + 1];
    member[0] = true;
    for x in 1..=limit as usize {
        member[x] = gens.iter().any(|&g| g as usize <= x && g > 0 && member[x - g as usize]);
    }
    member
}

/// Largest integer outside `{n a + m b}` for coprime `n, m >= 2`, by
/// enumeration.
pub fn frobenius_number(n: u64, m: u64) -> Option<u64> {
    if n.gcd(&m) != 1 || n < 2 || m < 2 {
        return None;
    }
    let limit = n * m + n + m;
    let member = monoid_members(&[n, m], limit);
    member.iter().rposition(|&x| !x).map(|x| x as u64)
}

/// The semiring `F(n, m) ⊂ Z_min^+` generated by `X = q^n` and `Y = q^m`,
/// described by its range of exponents up to a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: (u64, u64),
    range: BTreeSet<u64>,
    bound: u64,
}

pub fn presentation(n: u64, m: u64) -> Result<Presentation> {
    if n == 0 || m == 0 {
        return Err(Error::Config("generators must be positive".into()));
    }
    let bound = n * m + n + m;
    let range = monoid_members(&[n, m], bound)
        .into_iter()
        .enumerate()
        .filter_map(|(x, member)| member.then_some(x as u64))
        .collect();
    Ok(Presentation { generators: (n, m), range, bound })
}

impl Presentation {
    /// Exponents of `X` and `Y`.
    pub fn generators(&self) -> (u64, u64) {
        self.generators
    }

    /// `(e, f)` with `X^e = Y^f`, the defining relation.
    pub fn relation(&self) -> (u64, u64) {
        let (n, m) = self.generators;
        let g = n.gcd(&m);
        (m / g, n / g)
    }

    pub fn range(&self) -> impl Iterator<Item = u64> + '_ {
        self.range.iter().copied()
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }
}

/// Recovers `{n, m}` from the exponent range alone, as its indecomposables.
pub fn recover_pair(p: &Presentation) -> Result<(u64, u64)> {
    let nonzero: Vec<u64> = p.range.iter().copied().filter(|&x| x > 0).collect();
    let indecomposable: Vec<u64> = nonzero
        .iter()
        .copied()
        .filter(|&x| {
            !nonzero.iter().take_while(|&&y| 2 * y <= x).any(|&y| p.range.contains(&(x - y)))
        })
        .collect();
    match indecomposable[..] {
        [n, m] if n.gcd(&m) == 1 => Ok((n, m)),
        [n, m] => Err(Error::NotRecoverable(format!("gcd({n}, {m}) != 1"))),
        _ => Err(Error::NotRecoverable(format!(
            "{} indecomposable elements",
            indecomposable.len()
        ))),
    }
}

/// Exponents `i (n/m) + j` of `R(n/m)` up to `limit`, scaled by `m`.
pub fn scaled_exponents(n: u64, m: u64, limit: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for i in 0..=limit / n.max(1) {
        for j in 0..=limit / m.max(1) {
            let v = i * n + j * m;
            if v <= limit {
                out.insert(v);
            }
        }
    }
    out
}

pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
