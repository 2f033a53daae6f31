//! Exact scalars: rationals and rational functions in one parameter `t`.

mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use parse::parse_scalar;
pub use poly::Poly;

use crate::error::ScalarError;

/// Which field a scalar (or a matrix of scalars) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    RationalFunction,
}

/// A reduced ratio of polynomials in `t` that is not a constant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// Monic denominator.
    pub fn denominator(&self) -> &Poly {
        &self.den
    }
}

/// An element of Q or Q(t), always in canonical form so that `==` is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Function(RationalFunction),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q`, reduced. Fails on `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Result<Self, ScalarError> {
        if q == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(p.into(), q.into())))
    }

    /// The parameter symbol `t`.
    pub fn parameter() -> Self {
        Scalar::Function(RationalFunction {
            num: Poly::monomial(1),
            den: Poly::one(),
        })
    }

    /// Builds `num/den` in canonical form: gcd removed, denominator monic,
    /// constants demoted to `Scalar::Rational`.
    pub fn from_ratio(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lc = den.leading().unwrap().recip();
        num = num.scale(&lc);
        den = den.scale(&lc);
        if den.is_constant() && num.is_constant() {
            return Ok(Scalar::Rational(num.constant_term()));
        }
        Ok(Scalar::Function(RationalFunction { num, den }))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar::from_ratio(p, Poly::one()).expect("unit denominator")
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Function(_) => ScalarKind::RationalFunction,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Function(_) => None,
        }
    }

    /// Numerator and denominator as polynomials in `t`.
    pub fn to_ratio(&self) -> (Poly, Poly) {
        match self {
            Scalar::Rational(r) => (Poly::constant(r.clone()), Poly::one()),
            Scalar::Function(f) => (f.num.clone(), f.den.clone()),
        }
    }

    pub fn recip(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Function(f) => Scalar::from_ratio(f.den.clone(), f.num.clone()),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.recip()?)
    }

    /// Substitutes `t := value`. Fails when `value` is a pole.
    pub fn substitute(&self, value: &Scalar) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(_) => Ok(self.clone()),
            Scalar::Function(f) => {
                let (vn, vd) = value.to_ratio();
                let num = compose(&f.num, &vn, &vd);
                let den = compose(&f.den, &vn, &vd);
                // Both sides were scaled by vd^max(deg); fix up the degree gap.
                let dn = f.num.degree().unwrap_or(0);
                let dd = f.den.degree().unwrap_or(0);
                let (num, den) = match dn.cmp(&dd) {
                    std::cmp::Ordering::Less => (num.mul(&vd.pow((dd - dn) as u32)), den),
                    std::cmp::Ordering::Greater => (num, den.mul(&vd.pow((dn - dd) as u32))),
                    std::cmp::Ordering::Equal => (num, den),
                };
                if den.is_zero() {
                    return Err(ScalarError::Pole(value.to_string()));
                }
                Scalar::from_ratio(num, den)
            }
        }
    }
}

/// Homogenised composition `p(n/d) * d^deg(p)`.
fn compose(p: &Poly, n: &Poly, d: &Poly) -> Poly {
    let deg = p.degree().unwrap_or(0);
    let mut acc = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = n.pow(k as u32).mul(&d.pow((deg - k) as u32)).scale(c);
        acc = acc.add(&term);
    }
    acc
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (an, ad) = self.to_ratio();
                let (bn, bd) = rhs.to_ratio();
                Scalar::from_ratio(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd)).unwrap()
            }
        }
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
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ if self.is_zero() || rhs.is_zero() => Scalar::zero(),
            _ => {
                let (an, ad) = self.to_ratio();
                let (bn, bd) = rhs.to_ratio();
                Scalar::from_ratio(an.mul(&bn), ad.mul(&bd)).unwrap()
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Function(f) => Scalar::Function(RationalFunction {
                num: f.num.neg(),
                den: f.den.clone(),
            }),
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

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Function(rf) => {
                let num_terms = rf.num.coeffs().iter().filter(|c| !c.is_zero()).count();
                if rf.den.is_constant() {
                    return write!(f, "{}", rf.num);
                }
                if num_terms > 1 {
                    write!(f, "({})", rf.num)?;
                } else {
                    write!(f, "{}", rf.num)?;
                }
                let den_terms = rf.den.coeffs().iter().filter(|c| !c.is_zero()).count();
                if den_terms > 1 {
                    write!(f, "/({})", rf.den)
                } else {
                    write!(f, "/{}", rf.den)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
