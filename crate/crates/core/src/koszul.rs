//! Sign algebras `A_{J,Q}`, their quadratic duals and the product on
//! normal-form monomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::color::{ColorLieAlgebra, CommutationMatrix};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::RationalSeries;

/// The algebra on `f_1..f_n` with `f_i^2 = 0` for `i` in `square_zero`,
/// `f_i f_j = f_j f_i` for pairs in `commuting` and `f_i f_j = -f_j f_i` for
/// the remaining pairs. Indices are 0-based, pairs stored as `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignAlgebra {
    n: usize,
    square_zero: BTreeSet<usize>,
    commuting: BTreeSet<(usize, usize)>,
}

impl SignAlgebra {
    pub fn new<J, Q>(n: usize, square_zero: J, commuting: Q) -> Result<Self>
    where
        J: IntoIterator<Item = usize>,
        Q: IntoIterator<Item = (usize, usize)>,
    {
        let square_zero: BTreeSet<usize> = square_zero.into_iter().collect();
        if let Some(&i) = square_zero.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: i + 1, n });
        }
        let mut pairs = BTreeSet::new();
        for (i, j) in commuting {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange { index: i.max(j) + 1, n });
            }
            if i == j {
                return Err(Error::Dimension(format!(
                    "commuting pair ({0},{0}) is not a pair",
                    i + 1
                )));
            }
            pairs.insert((i.min(j), i.max(j)));
        }
        Ok(SignAlgebra {
            n,
            square_zero,
            commuting: pairs,
        })
    }

    /// The enveloping algebra of the abelian algebra with these signs:
    /// `J = {i : s_ii = -1}`, `Q = {(i,j) : s_ij = +1}`.
    pub fn enveloping(cm: &CommutationMatrix) -> Self {
        let n = cm.dim();
        let square_zero = (0..n).filter(|&i| cm.sign(i, i) == -1).collect();
        let commuting = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| cm.sign(i, j) == 1)
            .collect();
        SignAlgebra {
            n,
            square_zero,
            commuting,
        }
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn square_zero(&self) -> &BTreeSet<usize> {
        &self.square_zero
    }

    pub fn commuting_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.commuting
    }

    pub fn is_square_zero(&self, i: usize) -> bool {
        self.square_zero.contains(&i)
    }

    pub fn commute(&self, i: usize, j: usize) -> bool {
        i == j || self.commuting.contains(&(i.min(j), i.max(j)))
    }

    /// `A_{J,Q}^! = A_{[n]-J, P-Q}`.
    pub fn dual(&self) -> SignAlgebra {
        let n = self.n;
        SignAlgebra {
            n,
            square_zero: (0..n).filter(|i| !self.square_zero.contains(i)).collect(),
            commuting: (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|p| !self.commuting.contains(p))
                .collect(),
        }
    }

    /// Exponent vectors of degree `d` respecting the caps, largest power of
    /// `f_1` first (descending lexicographic order).
    pub fn monomial_basis(&self, d: u32) -> Vec<DualMonomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n];
        self.fill(0, d, &mut cur, &mut out);
        out
    }

    fn fill(&self, i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<DualMonomial>) {
        if i == self.n {
            if rest == 0 {
                out.push(DualMonomial(cur.clone()));
            }
            return;
        }
        let cap = if self.is_square_zero(i) { rest.min(1) } else { rest };
        for a in (0..=cap).rev() {
            cur[i] = a;
            self.fill(i + 1, rest - a, cur, out);
        }
        cur[i] = 0;
    }

    /// `(1+z)^|J| / (1-z)^(n-|J|)`; the exponent roles were fixed by
    /// comparing against [`Self::monomial_basis`] counts.
    pub fn hilbert_series(&self) -> RationalSeries {
        let n = self.n as u32;
        let j = self.square_zero.len() as u32;
        RationalSeries::abelian_closed_form(n, n - j)
    }

    /// Product of two monomials: the sign from reordering and the sorted
    /// monomial, or `None` when a capped exponent exceeds 1.
    pub fn multiply_monomials(&self, a: &DualMonomial, b: &DualMonomial) -> Option<(i8, DualMonomial)> {
        let mut exps = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let e = a.0[i] + b.0[i];
            if e > 1 && self.is_square_zero(i) {
                return None;
            }
            exps.push(e);
        }
        // Each f_j of b moves left past every f_i of a with i > j.
        let mut swaps = 0u64;
        for i in 0..self.n {
            for j in 0..i {
                if !self.commute(i, j) {
                    swaps += u64::from(a.0[i]) * u64::from(b.0[j]);
                }
            }
        }
        Some((if swaps.is_multiple_of(2) { 1 } else { -1 }, DualMonomial(exps)))
    }

    pub fn multiply(&self, x: &DgaElement, y: &DgaElement) -> DgaElement {
        let mut out = DgaElement::zero();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                if let Some((sign, m)) = self.multiply_monomials(a, b) {
                    let c = ca * cb;
                    out.add_term(m, if sign == 1 { c } else { -c });
                }
            }
        }
        out
    }

    /// The monomial `f_{i_1} f_{i_2} ...` of a word, with its sign.
    pub fn word(&self, indices: &[usize]) -> DgaElement {
        let mut acc = DgaElement::one(self.n);
        for &i in indices {
            acc = self.multiply(&acc, &DgaElement::generator(self.n, i));
        }
        acc
    }
}

impl fmt::Display for SignAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sq: Vec<String> = self.square_zero.iter().map(|i| format!("f{}^2", i + 1)).collect();
        let comm: Vec<String> = self
            .commuting
            .iter()
            .map(|(i, j)| format!("f{}f{}", i + 1, j + 1))
            .collect();
        let anti: Vec<String> = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|p| !self.commuting.contains(p))
            .map(|(i, j)| format!("f{}f{}", i + 1, j + 1))
            .collect();
        let list = |v: &[String]| if v.is_empty() { "none".to_string() } else { v.join(" ") };
        writeln!(f, "generators: {}", self.n)?;
        writeln!(f, "square zero: {}", list(&sq))?;
        writeln!(f, "commuting: {}", list(&comm))?;
        write!(f, "anticommuting: {}", list(&anti))
    }
}

/// The dual of the enveloping algebra of `g`'s abelianization.
pub fn dual_of(g: &ColorLieAlgebra) -> SignAlgebra {
    SignAlgebra::enveloping(g.signs()).dual()
}

pub fn quadratic_dual(a: &SignAlgebra) -> SignAlgebra {
    a.dual()
}

/// Exponent vector `(a_1, ..., a_n)` of `f_1^{a_1} ... f_n^{a_n}`.
///
/// Ordered by degree, then with larger powers of earlier generators first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualMonomial(pub Vec<u32>);

impl DualMonomial {
    pub fn one(n: usize) -> Self {
        DualMonomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        DualMonomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Indices with multiplicity in ascending order.
    pub fn factors(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize))
            .collect()
    }
}

impl Ord for DualMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for DualMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        for (i, &a) in self.0.iter().enumerate() {
            match a {
                0 => {}
                1 => write!(f, "f{}", i + 1)?,
                _ => write!(f, "f{}^{a}", i + 1)?,
            }
        }
        Ok(())
    }
}

/// A linear combination of dual monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DgaElement {
    terms: BTreeMap<DualMonomial, Scalar>,
}

impl DgaElement {
    pub fn zero() -> Self {
        DgaElement::default()
    }

    pub fn one(n: usize) -> Self {
        DgaElement::monomial(DualMonomial::one(n), Scalar::one())
    }

    pub fn generator(n: usize, i: usize) -> Self {
        DgaElement::monomial(DualMonomial::generator(n, i), Scalar::one())
    }

    pub fn monomial(m: DualMonomial, c: Scalar) -> Self {
        let mut out = DgaElement::zero();
        out.add_term(m, c);
        out
    }

    pub fn add_term(&mut self, m: DualMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DualMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &DualMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Common degree of all terms, `None` for zero or inhomogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(DualMonomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add(&self, other: &DgaElement) -> DgaElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> DgaElement {
        let mut out = DgaElement::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn sub(&self, other: &DgaElement) -> DgaElement {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    /// Coordinates in the given basis. Terms outside the basis are ignored.
    pub fn coordinates(&self, basis: &[DualMonomial]) -> Vec<Scalar> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn from_coordinates(basis: &[DualMonomial], coords: &[Scalar]) -> DgaElement {
        let mut out = DgaElement::zero();
        for (m, c) in basis.iter().zip(coords) {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn substitute(&self, value: &Scalar) -> Result<DgaElement> {
        let mut out = DgaElement::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.substitute(value)?);
        }
        Ok(out)
    }
}

impl fmt::Display for DgaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if c.as_rational().is_some() => (true, rest.to_string()),
                _ => (false, text),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = m.to_string();
            if body == "1" {
                f.write_str(&mono)?;
            } else if mono == "1" {
                f.write_str(&body)?;
            } else if c.as_rational().is_some() {
                write!(f, "{body}*{mono}")?;
            } else {
                write!(f, "({body})*{mono}")?;
            }
        }
        Ok(())
    }
}
