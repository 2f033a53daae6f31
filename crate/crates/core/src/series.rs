//! Rational generating functions for Betti sequences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Poly;

/// `num(z)/den(z)` with integer coefficients, `den(0) = 1` and coprime parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    num: Vec<i64>,
    den: Vec<i64>,
}

/// Outcome of [`recognize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Series(RationalSeries),
    Inconclusive,
}

impl Recognition {
    pub fn series(&self) -> Option<&RationalSeries> {
        match self {
            Recognition::Series(s) => Some(s),
            Recognition::Inconclusive => None,
        }
    }
}

impl fmt::Display for Recognition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recognition::Series(s) => write!(f, "{s}"),
            Recognition::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

fn to_poly(c: &[i64]) -> Poly {
    Poly::from_i64(c)
}

fn to_ints(p: &Poly) -> Option<Vec<i64>> {
    p.coeffs()
        .iter()
        .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
        .collect()
}

impl RationalSeries {
    /// Canonicalises `num/den`. Fails when `den` vanishes at 0 after
    /// cancellation or the reduced form is not integral.
    pub fn from_polys(num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Format("series denominator is zero".into()));
        }
        let g = num.gcd(den);
        let (num, den) = if num.is_zero() {
            (Poly::zero(), Poly::one())
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let c0 = den.constant_term();
        if c0.is_zero() {
            return Err(Error::Format("series has a pole at z = 0".into()));
        }
        let inv = c0.recip();
        let (num, den) = (num.scale(&inv), den.scale(&inv));
        match (to_ints(&num), to_ints(&den)) {
            (Some(num), Some(den)) => Ok(RationalSeries {
                num: if num.is_empty() { vec![] } else { num },
                den,
            }),
            _ => Err(Error::Format("series is not integral".into())),
        }
    }

    pub fn new(num: &[i64], den: &[i64]) -> Result<Self> {
        RationalSeries::from_polys(&to_poly(num), &to_poly(den))
    }

    pub fn polynomial(coeffs: &[i64]) -> Self {
        RationalSeries::new(coeffs, &[1]).expect("polynomial")
    }

    /// `(1+z)^(n-q) / (1-z)^q`.
    pub fn abelian_closed_form(n: u32, q: u32) -> Self {
        assert!(q <= n, "q must not exceed n");
        let num = Poly::from_i64(&[1, 1]).pow(n - q);
        let den = Poly::from_i64(&[1, -1]).pow(q);
        RationalSeries::from_polys(&num, &den).unwrap()
    }

    /// Ascending coefficients; empty for the zero series.
    pub fn numerator(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> &[i64] {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        let (a, b) = (to_poly(&self.num), to_poly(&self.den));
        let (c, d) = (to_poly(&other.num), to_poly(&other.den));
        RationalSeries::from_polys(&a.mul(&d).add(&c.mul(&b)), &b.mul(&d)).unwrap()
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let num = to_poly(&self.num).mul(&to_poly(&other.num));
        let den = to_poly(&self.den).mul(&to_poly(&other.den));
        RationalSeries::from_polys(&num, &den).unwrap()
    }

    /// First `n + 1` Taylor coefficients.
    pub fn expand(&self, n: usize) -> Vec<i64> {
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut v = self.num.get(k).copied().unwrap_or(0);
            for (i, &c) in self.den.iter().enumerate().skip(1) {
                if i <= k {
                    v -= c * out[k - i];
                }
            }
            out.push(v);
        }
        out
    }

    /// Coefficients of `h(-z)`.
    pub fn at_minus_z(&self) -> RationalSeries {
        let flip = |c: &[i64]| -> Vec<i64> {
            c.iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 1 { -x } else { x })
                .collect()
        };
        RationalSeries::new(&flip(&self.num), &flip(&self.den)).unwrap()
    }
}

fn render_poly(c: &[i64]) -> String {
    let mut s = String::new();
    for (i, &x) in c.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let mag = x.unsigned_abs();
        if x < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        match (i, mag) {
            (0, m) => s.push_str(&m.to_string()),
            (_, 1) => {}
            (_, m) => s.push_str(&m.to_string()),
        }
        match i {
            0 => {}
            1 => s.push('z'),
            _ => s.push_str(&format!("z^{i}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn wrap(c: &[i64]) -> String {
    let body = render_poly(c);
    if c.iter().filter(|&&x| x != 0).count() > 1 {
        format!("({body})")
    } else {
        body
    }
}

impl RationalSeries {
    /// Smallest `k` with `den | 1 - z^k`, i.e. the period of the tail.
    pub fn period(&self) -> Option<usize> {
        let den = to_poly(&self.den);
        let deg = den.degree()?;
        if deg == 0 {
            return None;
        }
        // A squarefree product of cyclotomic factors divides 1 - z^k for k <= 64 here.
        (deg..=64).find(|&k| {
            let mut c = vec![0i64; k + 1];
            c[0] = 1;
            c[k] = -1;
            to_poly(&c).div_rem(&den).1.is_zero()
        })
    }

    /// `(num', 1 - z^k)` presentation when the denominator divides `1 - z^k`.
    pub fn periodic_form(&self) -> Option<(Vec<i64>, usize)> {
        let k = self.period()?;
        let mut c = vec![0i64; k + 1];
        c[0] = 1;
        c[k] = -1;
        let cof = to_poly(&c).exact_div(&to_poly(&self.den))?;
        let num = to_ints(&to_poly(&self.num).mul(&cof))?;
        Some((num, k))
    }
}

/// Renders with polynomials in ascending powers, preferring a `1 - z^k`
/// denominator, e.g. `(1+z)/(1-z^3)`.
impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return f.write_str(&render_poly(&self.num));
        }
        if let Some((num, k)) = self.periodic_form() {
            let mut den = vec![0i64; k + 1];
            den[0] = 1;
            den[k] = -1;
            return write!(f, "{}/{}", wrap(&num), wrap(&den));
        }
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// Berlekamp–Massey over Q. Returns the connection polynomial, the linear
/// complexity and the index of the last update.
fn berlekamp_massey(seq: &[BigRational]) -> (Vec<BigRational>, usize, Option<usize>) {
    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = BigRational::one();
    let mut last = None;
    for n in 0..seq.len() {
        let mut d = seq[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d += &c[i] * &seq[n - i];
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let coef = &d / &bd;
        let t = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, BigRational::zero());
        }
        for (i, x) in b.iter().enumerate() {
            c[i + m] -= &coef * x;
        }
        last = Some(n);
        if 2 * l <= n {
            l = n + 1 - l;
            b = t;
            bd = d;
            m = 1;
        } else {
            m += 1;
        }
    }
    while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    (c, l, last)
}

/// Finds the rational generating function of an integer sequence.
///
/// The minimal recurrence must be confirmed by at least `2r + 5` terms after
/// the last Berlekamp–Massey update, where `r` is its order; otherwise the
/// answer is [`Recognition::Inconclusive`].
pub fn recognize(seq: &[i64]) -> Recognition {
    let q: Vec<BigRational> = seq
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    let (c, l, last) = berlekamp_massey(&q);
    let order = c.len() - 1;
    let fitted = last.map_or(0, |n| n + 1);
    if seq.len() - fitted < 2 * order + 5 {
        return Recognition::Inconclusive;
    }
    // num = (S * C) mod z^l
    let mut num = vec![BigRational::zero(); l];
    for (k, slot) in num.iter_mut().enumerate() {
        for (i, ci) in c.iter().enumerate().take(k + 1) {
            *slot += ci * &q[k - i];
        }
    }
    match RationalSeries::from_polys(&Poly::from_coeffs(num), &Poly::from_coeffs(c)) {
        Ok(rs) if rs.expand(seq.len() - 1) == seq => Recognition::Series(rs),
        _ => Recognition::Inconclusive,
    }
}

/// `gcd` of integers, used for content checks in tests and callers.
pub fn content(c: &[i64]) -> i64 {
    c.iter().fold(0i64, |g, &x| g.gcd(&x))
}
