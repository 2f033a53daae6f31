//! Exact matrices over Q or Q(t): rank, kernel and image.
//!
//! Rank and kernel go through fraction-free elimination over Z or Q[t] after
//! clearing row denominators. Image bases and the independent rank route use
//! ordinary elimination in the fraction field. Columns are eliminated left to
//! right, so pivot columns (and the reduced kernel basis) are reproducible.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Poly, Scalar, ScalarKind};

/// Sparse exact matrix. Every entry belongs to the matrix's scalar kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    kind: ScalarKind,
    entries: BTreeMap<(usize, usize), Scalar>,
}

/// Result of [`ExactMatrix::rank_kernel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub kernel: Vec<Vec<Scalar>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, kind: ScalarKind) -> Self {
        ExactMatrix {
            rows,
            cols,
            kind,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n, ScalarKind::Rational);
        for i in 0..n {
            m.entries.insert((i, i), Scalar::one());
        }
        m
    }

    /// Dense constructor. The kind is `RationalFunction` if any entry needs it.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let kind = if rows.iter().flatten().any(|s| s.kind() == ScalarKind::RationalFunction) {
            ScalarKind::RationalFunction
        } else {
            ScalarKind::Rational
        };
        let mut m = ExactMatrix::zeros(nrows, ncols, kind);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {}, expected {ncols}",
                    row.len()
                )));
            }
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v)?;
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect())
                .collect(),
        )
        .expect("rectangular integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Stores an entry; a rational function in a rational matrix is rejected.
    pub fn set(&mut self, row: usize, col: usize, value: Scalar) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::Dimension(format!(
                "entry ({row},{col}) outside {}x{}",
                self.rows, self.cols
            )));
        }
        if self.kind == ScalarKind::Rational && value.kind() == ScalarKind::RationalFunction {
            return Err(Error::MixedScalarKinds { row, col });
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    /// Adds `value` to an entry.
    pub fn add_to(&mut self, row: usize, col: usize, value: &Scalar) -> Result<()> {
        let cur = self.get(row, col);
        self.set(row, col, &cur + value)
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            kind: self.kind,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let kind = if self.kind == ScalarKind::RationalFunction || rhs.kind == ScalarKind::RationalFunction {
            ScalarKind::RationalFunction
        } else {
            ScalarKind::Rational
        };
        let mut by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (&(k, j), v) in &rhs.entries {
            by_row.entry(k).or_default().push((j, v));
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols, kind);
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.add_to(i, j, &(a * b))?;
                }
            }
        }
        Ok(out)
    }

    /// `M v` for a dense column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            if !v[j].is_zero() {
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        Ok(out)
    }

    /// Substitutes `t := value` in every entry.
    pub fn substitute(&self, value: &Scalar) -> Result<ExactMatrix> {
        let mut out = ExactMatrix::zeros(self.rows, self.cols, value.kind());
        for (&(i, j), v) in &self.entries {
            let s = v.substitute(value)?;
            if s.kind() == ScalarKind::RationalFunction {
                out.kind = ScalarKind::RationalFunction;
            }
            out.set(i, j, s)?;
        }
        Ok(out)
    }

    fn check_kind(&self) -> Result<()> {
        if self.kind == ScalarKind::Rational {
            if let Some((&(row, col), _)) = self
                .entries
                .iter()
                .find(|(_, v)| v.kind() == ScalarKind::RationalFunction)
            {
                return Err(Error::MixedScalarKinds { row, col });
            }
        }
        Ok(())
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> Result<usize> {
        self.check_kind()?;
        Ok(match self.kind {
            ScalarKind::Rational => fraction_free(self.integer_rows()).len(),
            ScalarKind::RationalFunction => fraction_free(self.polynomial_rows()).len(),
        })
    }

    /// Rank and a kernel basis in reduced form: for the `k`-th free column the
    /// basis vector has a 1 there and 0 in every other free column.
    pub fn rank_kernel(&self) -> Result<RankKernel> {
        self.check_kind()?;
        let echelon: Vec<(usize, Vec<(usize, Scalar)>)> = match self.kind {
            ScalarKind::Rational => to_scalar_rows(fraction_free(self.integer_rows())),
            ScalarKind::RationalFunction => to_scalar_rows(fraction_free(self.polynomial_rows())),
        };
        let rank = echelon.len();
        let pivot_cols: Vec<usize> = echelon.iter().map(|(c, _)| *c).collect();
        let mut kernel = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut x = vec![Scalar::zero(); self.cols];
            x[free] = Scalar::one();
            for (pc, row) in echelon.iter().rev() {
                let mut acc = Scalar::zero();
                let mut piv = None;
                for (j, v) in row {
                    if j == pc {
                        piv = Some(v);
                    } else if !x[*j].is_zero() {
                        acc = &acc + &(v * &x[*j]);
                    }
                }
                x[*pc] = (-acc).checked_div(piv.expect("pivot present"))?;
            }
            kernel.push(x);
        }
        Ok(RankKernel { rank, kernel })
    }

    /// Reduced echelon basis of the column space.
    pub fn image_basis(&self) -> Result<Vec<Vec<Scalar>>> {
        self.check_kind()?;
        let rows = sparse_rows(&self.transpose());
        let reduced = field_rref(rows, self.rows)?;
        Ok(reduced.into_iter().map(|(_, row)| densify(&row, self.rows)).collect())
    }

    /// Rank by plain elimination in the fraction field. Independent of the
    /// fraction-free route and used to cross-check it.
    pub fn rank_naive(&self) -> Result<usize> {
        self.check_kind()?;
        Ok(field_rref(sparse_rows(self), self.cols)?.len())
    }

    fn integer_rows(&self) -> Vec<BTreeMap<usize, BigInt>> {
        sparse_rows(self)
            .into_iter()
            .map(|row| {
                let lcm = row.values().fold(BigInt::one(), |acc, v| {
                    acc.lcm(v.as_rational().expect("rational entry").denom())
                });
                row.into_iter()
                    .map(|(j, v)| {
                        let r = v.as_rational().unwrap();
                        (j, r.numer() * (&lcm / r.denom()))
                    })
                    .collect()
            })
            .collect()
    }

    fn polynomial_rows(&self) -> Vec<BTreeMap<usize, Poly>> {
        sparse_rows(self)
            .into_iter()
            .map(|row| {
                let lcm = row.values().fold(Poly::one(), |acc, v| {
                    let (_, d) = v.to_ratio();
                    let g = acc.gcd(&d);
                    acc.mul(&d).exact_div(&g).unwrap()
                });
                row.into_iter()
                    .map(|(j, v)| {
                        let (n, d) = v.to_ratio();
                        (j, n.mul(&lcm.exact_div(&d).unwrap()))
                    })
                    .collect()
            })
            .collect()
    }
}

fn sparse_rows(m: &ExactMatrix) -> Vec<BTreeMap<usize, Scalar>> {
    let mut rows = vec![BTreeMap::new(); m.rows];
    for (&(i, j), v) in &m.entries {
        rows[i].insert(j, v.clone());
    }
    rows
}

fn densify(row: &BTreeMap<usize, Scalar>, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (&j, v) in row {
        out[j] = v.clone();
    }
    out
}

/// Integral domain with gcds, enough for fraction-free elimination.
trait Domain: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Self;
    fn to_scalar(&self) -> Scalar;
}

impl Domain for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn exact_div(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)));
        self / other
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(BigRational::from_integer(self.clone()))
    }
}

impl Domain for Poly {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn gcd(&self, other: &Self) -> Self {
        Poly::gcd(self, other)
    }
    fn exact_div(&self, other: &Self) -> Self {
        Poly::exact_div(self, other).expect("content divides every entry")
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::from_poly(self.clone())
    }
}

/// Divides a row by the gcd of its entries.
fn primitive<D: Domain>(row: BTreeMap<usize, D>) -> BTreeMap<usize, D> {
    let mut entries = row.values();
    let Some(first) = entries.next() else {
        return row;
    };
    let content = entries.fold(first.clone(), |acc, v| acc.gcd(v));
    row.into_iter().map(|(j, v)| (j, v.exact_div(&content))).collect()
}

/// Fraction-free forward elimination: `row <- piv * row - a * pivot_row`
/// on the rows meeting the pivot column, followed by removal of the content.
/// The pivot row is the shortest candidate. Returns the nonzero echelon rows
/// with their pivot columns, in pivot order.
fn fraction_free<D: Domain>(rows: Vec<BTreeMap<usize, D>>) -> Vec<(usize, BTreeMap<usize, D>)> {
    let mut rows: Vec<BTreeMap<usize, D>> = rows.into_iter().filter(|r| !r.is_empty()).map(primitive).collect();
    let mut out = Vec::new();
    let cols: std::collections::BTreeSet<usize> = rows.iter().flat_map(|r| r.keys().copied()).collect();
    for col in cols {
        let Some(p) = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.contains_key(&col))
            .min_by_key(|(_, r)| r.len())
            .map(|(i, _)| i)
        else {
            continue;
        };
        let pivot_row = rows.swap_remove(p);
        let piv = &pivot_row[&col];
        for row in rows.iter_mut() {
            let Some(a) = row.remove(&col) else {
                continue;
            };
            let mut next: BTreeMap<usize, D> = row.iter().map(|(&j, v)| (j, v.mul(piv))).collect();
            for (&j, v) in pivot_row.range(col + 1..) {
                let r = a.mul(v);
                let val = match next.remove(&j) {
                    Some(l) => l.sub(&r),
                    None => r.neg(),
                };
                if !val.is_zero() {
                    next.insert(j, val);
                }
            }
            *row = primitive(next);
        }
        rows.retain(|r| !r.is_empty());
        out.push((col, pivot_row));
    }
    out
}

fn to_scalar_rows<D: Domain>(rows: Vec<(usize, BTreeMap<usize, D>)>) -> Vec<(usize, Vec<(usize, Scalar)>)> {
    rows.into_iter()
        .map(|(c, row)| (c, row.into_iter().map(|(j, v)| (j, v.to_scalar())).collect()))
        .collect()
}

/// Reduced row echelon form over the fraction field; returns nonzero rows
/// (pivot normalised to 1) with their pivot columns.
fn field_rref(mut rows: Vec<BTreeMap<usize, Scalar>>, ncols: usize) -> Result<Vec<(usize, BTreeMap<usize, Scalar>)>> {
    let mut done: Vec<(usize, BTreeMap<usize, Scalar>)> = Vec::new();
    for col in 0..ncols {
        let Some(p) = rows.iter().position(|r| r.contains_key(&col)) else {
            continue;
        };
        let mut prow = rows.remove(p);
        let inv = prow[&col].recip()?;
        for v in prow.values_mut() {
            *v = &*v * &inv;
        }
        for row in rows.iter_mut().chain(done.iter_mut().map(|(_, r)| r)) {
            if let Some(a) = row.get(&col).cloned() {
                for (j, v) in &prow {
                    let cur = row.get(j).cloned().unwrap_or_else(Scalar::zero);
                    let val = &cur - &(&a * v);
                    if val.is_zero() {
                        row.remove(j);
                    } else {
                        row.insert(*j, val);
                    }
                }
            }
        }
        rows.retain(|r| !r.is_empty());
        done.push((col, prow));
    }
    Ok(done)
}

/// Growing echelon basis of a subspace of K^n, used for complements and
/// reduction modulo coboundaries.
#[derive(Clone, Debug, Default)]
pub struct EchelonSpan {
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonSpan {
    pub fn new(dim: usize) -> Self {
        EchelonSpan { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&a * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v` if independent; returns whether the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool> {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].recip()?;
        let r: Vec<Scalar> = r.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let a = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x = &*x - &(&a * y);
                    }
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r));
        Ok(true)
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.rows.iter().map(|(_, r)| r)
    }
}
