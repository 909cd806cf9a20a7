//! A small expression language for the staircase and polygon semirings.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' INT)?
//! atom   := 'q^' INT '(x)' 'q^' INT | 'q^' (INT | 'inf') | '0' | '1'
//!         | 'sigma(' INT ',' INT ')' | 'fr(' INT ',' INT ',' expr ')'
//!         | 'mu(' expr ')' | 'gamma(' expr ')' | '(' expr ')'
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::polygon::{gamma, sigma, NewtonPolygon};
use crate::square::Staircase;
use crate::tropical::{Semiring, ZminElem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Zero,
    One,
    /// `q^a (x) q^b`.
    Tensor(i64, i64),
    /// `q^a` in `Z_min`; `None` is `q^inf`.
    Power(Option<i64>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Sigma(i64, i64),
    Fr(i64, i64, Box<Expr>),
    Mu(Box<Expr>),
    Gamma(Box<Expr>),
}

/// The value of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Square(Staircase),
    Polygon(NewtonPolygon),
    Zmin(ZminElem),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn syntax<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Syntax { offset, message: message.into() })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn looking_at(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.looking_at(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            syntax(self.pos, format!("expected '{s}'"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return syntax(start, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().or_else(|_| syntax(start, "integer does not fit in 64 bits"))
    }

    fn positive(&mut self) -> Result<i64> {
        self.skip_ws();
        let at = self.pos;
        let n = self.int()?;
        if n < 1 {
            return syntax(at, "expected a positive integer");
        }
        Ok(n)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while self.eat("+") {
            lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat("*") {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat("^") {
            self.skip_ws();
            let at = self.pos;
            let n = self.int()?;
            let n = u32::try_from(n).or_else(|_| syntax(at, "exponent must be a non-negative 32-bit integer"))?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn call_arg(&mut self) -> Result<Expr> {
        let e = self.expr()?;
        self.expect(")")?;
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = {
            self.skip_ws();
            self.pos
        };
        if self.eat("sigma(") {
            let a = self.positive()?;
            self.expect(",")?;
            let b = self.positive()?;
            self.expect(")")?;
            return Ok(Expr::Sigma(a, b));
        }
        if self.eat("fr(") {
            let n = self.positive()?;
            self.expect(",")?;
            let m = self.positive()?;
            self.expect(",")?;
            return Ok(Expr::Fr(n, m, Box::new(self.call_arg()?)));
        }
        if self.eat("mu(") {
            return Ok(Expr::Mu(Box::new(self.call_arg()?)));
        }
        if self.eat("gamma(") {
            return Ok(Expr::Gamma(Box::new(self.call_arg()?)));
        }
        if self.eat("q^") {
            if self.eat("inf") {
                return Ok(Expr::Power(None));
            }
            let a = self.int()?;
            if !self.eat("(x)") {
                return Ok(Expr::Power(Some(a)));
            }
            self.expect("q^")?;
            let b = self.int()?;
            return Ok(Expr::Tensor(a, b));
        }
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Expr::Zero)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Expr::One)
            }
            Some(_) => syntax(start, "unexpected input"),
            None => syntax(start, "unexpected end of input"),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return syntax(p.pos, "trailing input");
    }
    Ok(e)
}

impl Expr {
    fn is_atom(&self) -> bool {
        matches!(
            self,
            Expr::Zero | Expr::One | Expr::Sigma(..) | Expr::Fr(..) | Expr::Mu(_) | Expr::Gamma(_)
        )
    }

    pub fn eval(&self) -> Result<Value> {
        Ok(match self {
            Expr::Zero => Value::Square(Staircase::zero()),
            Expr::One => Value::Square(Staircase::one()),
            Expr::Tensor(a, b) => Value::Square(Staircase::monomial(*a, *b)),
            Expr::Power(Some(a)) => Value::Zmin(ZminElem::q(*a)),
            Expr::Power(None) => Value::Zmin(ZminElem::infinity()),
            Expr::Add(l, r) => binary(l.eval()?, r.eval()?, |x, y| x.add(y), |x, y| x.add(y), |x, y| x.add(y)),
            Expr::Mul(l, r) => binary(l.eval()?, r.eval()?, |x, y| x.mul(y), |x, y| x.mul(y), |x, y| x.mul(y)),
            Expr::Pow(e, n) => match e.eval()? {
                Value::Square(x) => Value::Square(x.pow(*n)),
                Value::Polygon(x) => Value::Polygon(x.pow(*n)),
                Value::Zmin(x) => Value::Zmin(x.pow(*n)),
            },
            Expr::Sigma(a, b) => Value::Square(sigma(*a, *b)),
            Expr::Fr(n, m, e) => match e.eval()? {
                Value::Square(x) => Value::Square(x.frobenius(*n, *m)),
                Value::Polygon(x) => Value::Polygon(x.frobenius(*n, *m)),
                Value::Zmin(_) => return Err(Error::Type("fr applies to the square".into())),
            },
            Expr::Mu(e) => match e.eval()? {
                Value::Square(x) => Value::Zmin(x.mu()),
                Value::Polygon(x) => Value::Zmin(x.mu()),
                Value::Zmin(_) => return Err(Error::Type("mu applies to the square".into())),
            },
            Expr::Gamma(e) => match e.eval()? {
                Value::Square(x) => Value::Polygon(gamma(&x)),
                Value::Polygon(x) => Value::Polygon(x),
                Value::Zmin(_) => return Err(Error::Type("gamma applies to the square".into())),
            },
        })
    }
}

/// Staircases mixed with polygons are reduced first.
fn binary(
    x: Value,
    y: Value,
    sq: impl Fn(&Staircase, &Staircase) -> Staircase,
    poly: impl Fn(&NewtonPolygon, &NewtonPolygon) -> NewtonPolygon,
    zmin: impl Fn(&ZminElem, &ZminElem) -> ZminElem,
) -> Value {
    match (x, y) {
        (Value::Square(a), Value::Square(b)) => Value::Square(sq(&a, &b)),
        (Value::Polygon(a), Value::Polygon(b)) => Value::Polygon(poly(&a, &b)),
        (Value::Square(a), Value::Polygon(b)) => Value::Polygon(poly(&gamma(&a), &b)),
        (Value::Polygon(a), Value::Square(b)) => Value::Polygon(poly(&a, &gamma(&b))),
        (Value::Zmin(a), Value::Zmin(b)) => Value::Zmin(zmin(&a, &b)),
        // q^n acts on the square through the diagonal unit q^n (x) q^0
        (Value::Zmin(z), Value::Square(s)) | (Value::Square(s), Value::Zmin(z)) => {
            Value::Square(sq(&zmin_to_square(&z), &s))
        }
        (Value::Zmin(z), Value::Polygon(p)) | (Value::Polygon(p), Value::Zmin(z)) => {
            Value::Polygon(poly(&gamma(&zmin_to_square(&z)), &p))
        }
    }
}

fn zmin_to_square(z: &ZminElem) -> Staircase {
    match z.finite_exponent().and_then(|n| i64::try_from(n).ok()) {
        Some(n) => Staircase::left(n),
        None => Staircase::zero(),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zero => write!(f, "0"),
            Expr::One => write!(f, "1"),
            Expr::Tensor(a, b) => write!(f, "q^{a}(x)q^{b}"),
            Expr::Power(Some(a)) => write!(f, "q^{a}"),
            Expr::Power(None) => write!(f, "q^inf"),
            Expr::Add(l, r) => match **r {
                Expr::Add(..) => write!(f, "{l} + ({r})"),
                _ => write!(f, "{l} + {r}"),
            },
            Expr::Mul(l, r) => {
                match **l {
                    Expr::Add(..) => write!(f, "({l})")?,
                    _ => write!(f, "{l}")?,
                }
                write!(f, " * ")?;
                match **r {
                    Expr::Add(..) | Expr::Mul(..) => write!(f, "({r})"),
                    _ => write!(f, "{r}"),
                }
            }
            Expr::Pow(e, n) if e.is_atom() => write!(f, "{e}^{n}"),
            Expr::Pow(e, n) => write!(f, "({e})^{n}"),
            Expr::Sigma(a, b) => write!(f, "sigma({a},{b})"),
            Expr::Fr(n, m, e) => write!(f, "fr({n},{m},{e})"),
            Expr::Mu(e) => write!(f, "mu({e})"),
            Expr::Gamma(e) => write!(f, "gamma({e})"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Square(x) => x.fmt(f),
            Value::Polygon(x) => x.fmt(f),
            Value::Zmin(x) => x.fmt(f),
        }
    }
}

impl Value {
    /// Reads `{"corners": ...}`, `{"extremes": ...}` or `{"exp": ...}`.
    pub fn from_json(v: serde_json::Value) -> Result<Value> {
        let bad = |e: serde_json::Error| Error::Type(e.to_string());
        let key = v.as_object().and_then(|m| m.keys().next().cloned()).unwrap_or_default();
        match key.as_str() {
            "corners" => serde_json::from_value(v).map(Value::Square).map_err(bad),
            "extremes" => serde_json::from_value(v).map(Value::Polygon).map_err(bad),
            "exp" => serde_json::from_value(v).map(Value::Zmin).map_err(bad),
            _ => Err(Error::Type("expected a staircase, polygon or Z_min element".into())),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Square(x) => serde_json::to_value(x),
            Value::Polygon(x) => serde_json::to_value(x),
            Value::Zmin(x) => serde_json::to_value(x),
        }
        .expect("values serialize")
    }
}
