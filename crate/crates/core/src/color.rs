//! Color Lie algebras with a ±1 commutation factor.
//!
//! Generators are indexed from 0 in this API; text formats and reports use
//! the 1-based `e1, e2, ...` naming.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::EchelonSpan;
use crate::scalar::Scalar;

/// Values of the commutation factor on pairs of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommutationMatrix {
    signs: Vec<Vec<i8>>,
}

/// Outcome of [`CommutationMatrix::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommutationReport {
    /// 1-based pairs `(i, j)`, `i < j`, where `s[i][j] != s[j][i]`.
    pub asymmetric: Vec<(usize, usize)>,
}

impl CommutationReport {
    pub fn is_ok(&self) -> bool {
        self.asymmetric.is_empty()
    }
}

impl CommutationMatrix {
    /// Square array of ±1 entries. Symmetry is checked by [`Self::validate`].
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        let mut signs = Vec::with_capacity(n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension(format!(
                    "sign matrix row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(n);
            for (j, v) in row.into_iter().enumerate() {
                match v {
                    1 => out.push(1),
                    -1 => out.push(-1),
                    value => {
                        return Err(Error::InvalidSign {
                            row: i + 1,
                            col: j + 1,
                            value,
                        })
                    }
                }
            }
            signs.push(out);
        }
        Ok(CommutationMatrix { signs })
    }

    /// Symmetric matrix from its diagonal and the upper triangle in row order
    /// (`s12, s13, ..., s23, ...`).
    pub fn symmetric(diagonal: &[i8], upper: &[i8]) -> Result<Self> {
        let n = diagonal.len();
        if upper.len() != n * (n.saturating_sub(1)) / 2 {
            return Err(Error::Dimension("upper triangle has the wrong length".into()));
        }
        let mut rows = vec![vec![1i64; n]; n];
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        for ((i, j), &v) in pairs.zip(upper) {
            rows[i][j] = v as i64;
            rows[j][i] = v as i64;
        }
        for (i, &d) in diagonal.iter().enumerate() {
            rows[i][i] = d as i64;
        }
        CommutationMatrix::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.signs[i][j]
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.signs
    }

    pub fn validate(&self) -> CommutationReport {
        let n = self.dim();
        let mut asymmetric = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.signs[i][j] * self.signs[j][i] != 1 {
                    asymmetric.push((i + 1, j + 1));
                }
            }
        }
        CommutationReport { asymmetric }
    }

    /// No two rows coincide.
    pub fn is_injective(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.signs[i] != self.signs[j]))
    }

    /// Number of generators with `s[i][i] = -1`.
    pub fn square_count(&self) -> usize {
        (0..self.dim()).filter(|&i| self.signs[i][i] == -1).count()
    }

    /// Sign character of a monomial with the given exponents: the product of
    /// the rows of its generators.
    pub fn character(&self, exponents: &[u32]) -> Vec<i8> {
        let n = self.dim();
        let mut ch = vec![1i8; n];
        for (i, &a) in exponents.iter().enumerate() {
            if a % 2 == 1 {
                for (c, s) in ch.iter_mut().zip(&self.signs[i]) {
                    *c *= s;
                }
            }
        }
        ch
    }

    /// Whether a bracket of `e_i` and `e_j` may have an `e_k` component.
    pub fn compatible(&self, i: usize, j: usize, k: usize) -> bool {
        (0..self.dim()).all(|l| self.signs[k][l] == self.signs[i][l] * self.signs[j][l])
    }

    /// Anticommuting pairs and square-zero generators, 1-based, as graph data.
    pub fn graph(&self) -> (Vec<(usize, usize)>, Vec<usize>) {
        let n = self.dim();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.signs[i][j] == -1 {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        let loops = (0..n).filter(|&i| self.signs[i][i] == -1).map(|i| i + 1).collect();
        (edges, loops)
    }
}

impl fmt::Display for CommutationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .signs
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|v| format!("{v:>2}")).collect();
                format!("[{}]", cells.join(" "))
            })
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}

/// Explicit Z_2^m degrees for the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingAssignment {
    degrees: Vec<Vec<u8>>,
}

impl GradingAssignment {
    pub fn new(degrees: Vec<Vec<u8>>) -> Result<Self> {
        let m = degrees.first().map_or(0, Vec::len);
        if degrees.iter().any(|d| d.len() != m || d.iter().any(|&b| b > 1)) {
            return Err(Error::Grading("degrees must be bit-vectors of equal length".into()));
        }
        Ok(GradingAssignment { degrees })
    }

    pub fn degrees(&self) -> &[Vec<u8>] {
        &self.degrees
    }

    pub fn bits(&self) -> usize {
        self.degrees.first().map_or(0, Vec::len)
    }

    pub fn degree_sum(&self, i: usize, j: usize) -> Vec<u8> {
        self.degrees[i]
            .iter()
            .zip(&self.degrees[j])
            .map(|(a, b)| a ^ b)
            .collect()
    }

    /// Finds a bilinear form `B` over Z_2 with `s[i][j] = (-1)^(d_i B d_j)`.
    /// Returns `B` row-major, or `None` if the signs are not realised.
    pub fn bilinear_form(&self, cm: &CommutationMatrix) -> Option<Vec<Vec<u8>>> {
        let m = self.bits();
        let n = self.degrees.len();
        let vars = m * m;
        // Each equation: coefficient bits over B_ab, plus right-hand side.
        let mut eqs: Vec<(Vec<u8>, u8)> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![0u8; vars];
                for a in 0..m {
                    for b in 0..m {
                        row[a * m + b] = self.degrees[i][a] & self.degrees[j][b];
                    }
                }
                eqs.push((row, u8::from(cm.sign(i, j) == -1)));
            }
        }
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..vars {
            let Some(p) = (r..eqs.len()).find(|&k| eqs[k].0[c] == 1) else {
                continue;
            };
            eqs.swap(r, p);
            for k in 0..eqs.len() {
                if k != r && eqs[k].0[c] == 1 {
                    let (pr, pv) = eqs[r].clone();
                    for (x, y) in eqs[k].0.iter_mut().zip(&pr) {
                        *x ^= y;
                    }
                    eqs[k].1 ^= pv;
                }
            }
            pivots.push(c);
            r += 1;
        }
        if eqs[r..].iter().any(|(_, rhs)| *rhs == 1) {
            return None;
        }
        let mut sol = vec![0u8; vars];
        for (k, &c) in pivots.iter().enumerate() {
            sol[c] = eqs[k].1;
        }
        Some(sol.chunks(m.max(1)).map(<[u8]>::to_vec).collect())
    }
}

/// Result of the Lie-superalgebra reduction for algebras with at most two
/// nonzero homogeneous components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoComponentClass {
    Abelian,
    LieAlgebra,
    LieSuperalgebra,
    NotApplicable,
}

/// One failing Jacobi triple: 1-based generator indices and the defect vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiDefect {
    pub triple: (usize, usize, usize),
    pub defect: Vec<Scalar>,
}

/// Full validation verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub commutation: CommutationReport,
    pub injective: bool,
    /// Brackets `<e_i, e_j>` with an `e_k` component outside the degree of
    /// `e_i e_j`, 1-based.
    pub grading: Vec<(usize, usize, usize)>,
    pub jacobi: Vec<JacobiDefect>,
}

impl ValidationReport {
    /// Axioms hold. Injectivity is reported separately: abelian families need not be injective.
    pub fn is_valid(&self) -> bool {
        self.commutation.is_ok() && self.grading.is_empty() && self.jacobi.is_empty()
    }
}

/// A finite-dimensional color Lie algebra: signs plus structure constants
/// `<e_i, e_j> = sum_k c_ij^k e_k` stored for `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorLieAlgebra {
    cm: CommutationMatrix,
    brackets: BTreeMap<(usize, usize), Vec<Scalar>>,
    grading: Option<GradingAssignment>,
}

impl ColorLieAlgebra {
    /// Abelian algebra on the given signs. Fails on an asymmetric matrix.
    pub fn abelian(cm: CommutationMatrix) -> Result<Self> {
        let report = cm.validate();
        if !report.is_ok() {
            return Err(Error::AsymmetricSigns(report.asymmetric));
        }
        Ok(ColorLieAlgebra {
            cm,
            brackets: BTreeMap::new(),
            grading: None,
        })
    }

    /// Builds an algebra from brackets `(i, j, coefficients)`. Pairs with
    /// `i > j` are converted by skew-symmetry. Checks indices, the diagonal
    /// rule and sign-level grading compatibility, but not Jacobi.
    pub fn new<I>(cm: CommutationMatrix, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    {
        let mut g = ColorLieAlgebra::abelian(cm)?;
        for (i, j, coeffs) in brackets {
            g.add_bracket(i, j, coeffs, true)?;
        }
        Ok(g)
    }

    /// Like [`Self::new`] but skips the grading-compatibility check. Used to
    /// build test mutants whose brackets leave the homogeneous components.
    pub fn new_relaxed<I>(cm: CommutationMatrix, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Scalar>)>,
    {
        let mut g = ColorLieAlgebra::abelian(cm)?;
        for (i, j, coeffs) in brackets {
            g.add_bracket(i, j, coeffs, false)?;
        }
        Ok(g)
    }

    fn add_bracket(&mut self, i: usize, j: usize, coeffs: Vec<Scalar>, graded: bool) -> Result<()> {
        let n = self.dim();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx + 1, n });
            }
        }
        if coeffs.len() != n {
            return Err(Error::Dimension(format!(
                "bracket <e{},e{}> has {} coefficients, expected {n}",
                i + 1,
                j + 1,
                coeffs.len()
            )));
        }
        let (i, j, coeffs) = if i <= j {
            (i, j, coeffs)
        } else {
            let s = Scalar::from_i64(-(self.cm.sign(i, j) as i64));
            (j, i, coeffs.iter().map(|c| &s * c).collect())
        };
        if coeffs.iter().all(Scalar::is_zero) {
            return Ok(());
        }
        if i == j && self.cm.sign(i, i) == 1 {
            return Err(Error::DiagonalBracket(i + 1));
        }
        for (k, c) in coeffs.iter().enumerate() {
            if graded && !c.is_zero() && !self.cm.compatible(i, j, k) {
                return Err(Error::GradingViolation {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                });
            }
        }
        let slot = self.brackets.entry((i, j)).or_insert_with(|| vec![Scalar::zero(); n]);
        for (s, c) in slot.iter_mut().zip(&coeffs) {
            *s = &*s + c;
        }
        if slot.iter().all(Scalar::is_zero) {
            self.brackets.remove(&(i, j));
        }
        Ok(())
    }

    /// Attaches explicit degrees after checking that they realise the signs.
    pub fn with_grading(mut self, grading: GradingAssignment) -> Result<Self> {
        if grading.degrees().len() != self.dim() {
            return Err(Error::Grading(format!(
                "{} degrees for {} generators",
                grading.degrees().len(),
                self.dim()
            )));
        }
        if grading.bilinear_form(&self.cm).is_none() {
            return Err(Error::Grading(
                "no bilinear form over Z_2 realises the sign matrix".into(),
            ));
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.cm.dim()
    }

    pub fn signs(&self) -> &CommutationMatrix {
        &self.cm
    }

    pub fn grading(&self) -> Option<&GradingAssignment> {
        self.grading.as_ref()
    }

    /// Stored structure constants, `i <= j`, 0-based.
    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<Scalar>> {
        &self.brackets
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `<e_i, e_j>` as a coefficient vector, using skew-symmetry for `i > j`.
    pub fn full_bracket(&self, i: usize, j: usize) -> Result<Vec<Scalar>> {
        let n = self.dim();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::IndexOutOfRange { index: idx + 1, n });
            }
        }
        Ok(self.bracket_unchecked(i, j))
    }

    fn bracket_unchecked(&self, i: usize, j: usize) -> Vec<Scalar> {
        let n = self.dim();
        if i <= j {
            return self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Scalar::zero(); n]);
        }
        match self.brackets.get(&(j, i)) {
            None => vec![Scalar::zero(); n],
            Some(c) => {
                let s = Scalar::from_i64(-(self.cm.sign(i, j) as i64));
                c.iter().map(|x| &s * x).collect()
            }
        }
    }

    /// `<e_a, <e_b, e_c>>`.
    fn nested(&self, a: usize, b: usize, c: usize) -> Vec<Scalar> {
        let inner = self.bracket_unchecked(b, c);
        let mut out = vec![Scalar::zero(); self.dim()];
        for (m, coef) in inner.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.bracket_unchecked(a, m)) {
                if !x.is_zero() {
                    *o = &*o + &(coef * &x);
                }
            }
        }
        out
    }

    /// Cyclic Jacobi sum on `(e_i, e_j, e_k)`.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let s = |x: usize, y: usize| Scalar::from_i64(self.cm.sign(x, y) as i64);
        let terms = [
            (s(k, i), self.nested(i, j, k)),
            (s(j, k), self.nested(k, i, j)),
            (s(i, j), self.nested(j, k, i)),
        ];
        let mut out = vec![Scalar::zero(); self.dim()];
        for (eps, v) in terms {
            for (o, x) in out.iter_mut().zip(v) {
                *o = &*o + &(&eps * &x);
            }
        }
        out
    }

    /// Triples `i <= j <= k` whose Jacobi sum does not vanish.
    pub fn jacobi_defect(&self) -> Vec<JacobiDefect> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let defect = self.jacobi_sum(i, j, k);
                    if defect.iter().any(|x| !x.is_zero()) {
                        out.push(JacobiDefect {
                            triple: (i + 1, j + 1, k + 1),
                            defect,
                        });
                    }
                }
            }
        }
        out
    }

    /// Structure constants that violate sign-level grading compatibility.
    pub fn grading_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (&(i, j), coeffs) in &self.brackets {
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() && !self.cm.compatible(i, j, k) {
                    out.push((i + 1, j + 1, k + 1));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            commutation: self.cm.validate(),
            injective: self.cm.is_injective(),
            grading: self.grading_violations(),
            jacobi: self.jacobi_defect(),
        }
    }

    /// Dimension and echelon basis of `[g, g]`.
    pub fn derived_algebra(&self) -> Result<(usize, Vec<Vec<Scalar>>)> {
        let n = self.dim();
        let mut span = EchelonSpan::new(n);
        for i in 0..n {
            for j in 0..n {
                span.insert(&self.bracket_unchecked(i, j))?;
            }
        }
        Ok((span.rank(), span.basis().cloned().collect()))
    }

    pub fn derived_dimension(&self) -> usize {
        self.derived_algebra().map(|(d, _)| d).unwrap_or(0)
    }

    /// Same generators and signs, all brackets zero.
    pub fn associated_abelian(&self) -> ColorLieAlgebra {
        ColorLieAlgebra {
            cm: self.cm.clone(),
            brackets: BTreeMap::new(),
            grading: self.grading.clone(),
        }
    }

    /// Substitutes `t := value` in every structure constant.
    pub fn substitute(&self, value: &Scalar) -> Result<ColorLieAlgebra> {
        let mut brackets = BTreeMap::new();
        for (&key, coeffs) in &self.brackets {
            let c = coeffs
                .iter()
                .map(|x| x.substitute(value))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            if c.iter().any(|x| !x.is_zero()) {
                brackets.insert(key, c);
            }
        }
        Ok(ColorLieAlgebra {
            cm: self.cm.clone(),
            brackets,
            grading: self.grading.clone(),
        })
    }

    /// Whether any structure constant involves the parameter `t`.
    pub fn is_parametric(&self) -> bool {
        self.brackets
            .values()
            .flatten()
            .any(|x| x.kind() == crate::scalar::ScalarKind::RationalFunction)
    }

    /// Classification for algebras with at most two nonzero homogeneous
    /// components: abelian, an ordinary Lie algebra, or a Lie superalgebra.
    pub fn two_component_reduction(&self) -> Result<TwoComponentClass> {
        let grading = self.grading.as_ref().ok_or(Error::MissingGrading)?;
        let mut components: Vec<&Vec<u8>> = grading.degrees().iter().collect();
        components.sort();
        components.dedup();
        if components.len() > 2 {
            return Ok(TwoComponentClass::NotApplicable);
        }
        // The grading axiom forces every bracket into the sum of the degrees.
        let live = self.brackets.iter().any(|(&(i, j), coeffs)| {
            let target = grading.degree_sum(i, j);
            coeffs
                .iter()
                .enumerate()
                .any(|(k, c)| !c.is_zero() && grading.degrees()[k] == target)
        });
        if !live {
            return Ok(TwoComponentClass::Abelian);
        }
        let n = self.dim();
        let all_commute = (0..n).all(|i| (0..n).all(|j| self.cm.sign(i, j) == 1));
        Ok(if all_commute {
            TwoComponentClass::LieAlgebra
        } else {
            TwoComponentClass::LieSuperalgebra
        })
    }
}
