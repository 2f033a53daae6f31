//! Quadratic-linear presentations of `U(g)` and the overlap test that
//! certifies the PBW property.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::color::ColorLieAlgebra;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A word in `v_1..v_n`, 0-based indices.
///
/// Ordered degree-lexicographically with `v_1 > v_2 > ... > v_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i])
    }

    pub fn pair(i: usize, j: usize) -> Self {
        Word(vec![i, j])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for i in &self.0 {
            write!(f, "v{}", i + 1)?;
        }
        Ok(())
    }
}

/// A linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Combination(BTreeMap<Word, Scalar>);

impl Combination {
    pub fn zero() -> Self {
        Combination::default()
    }

    pub fn word(w: Word) -> Self {
        let mut c = Combination::zero();
        c.add_term(w, Scalar::one());
        c
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(w.clone()).or_insert_with(Scalar::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, other: &Combination) -> Combination {
        let mut out = self.clone();
        for (w, c) in &other.0 {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Combination {
        let mut out = Combination::zero();
        for (w, c) in &self.0 {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.0.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.0.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn wrap(&self, left: &[usize], right: &[usize]) -> Combination {
        let mut out = Combination::zero();
        for (w, c) in &self.0 {
            let mut v = left.to_vec();
            v.extend(&w.0);
            v.extend(right);
            out.add_term(Word(v), c.clone());
        }
        out
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        // Greatest word first.
        for (k, (w, c)) in self.0.iter().rev().enumerate() {
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
            match (body.as_str(), w.is_empty()) {
                ("1", _) => write!(f, "{w}")?,
                (_, true) => f.write_str(&body)?,
                _ if c.as_rational().is_some() => write!(f, "{body}*{w}")?,
                _ => write!(f, "({body})*{w}")?,
            }
        }
        Ok(())
    }
}

/// `leading + (other quadratic terms) + (linear terms)` with leading
/// coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadLinRelation {
    leading: Word,
    body: Combination,
}

impl QuadLinRelation {
    /// Normalises a combination of words of length 1 and 2. Constant or
    /// longer terms are rejected.
    pub fn new(terms: Combination) -> Result<Self> {
        if let Some((w, _)) = terms.terms().find(|(w, _)| w.is_empty() || w.len() > 2) {
            return Err(Error::NotQuadraticLinear(format!("term {w} in {terms}")));
        }
        let Some((leading, lc)) = terms.0.last_key_value().filter(|(w, _)| w.len() == 2) else {
            return Err(Error::NotQuadraticLinear(format!("{terms} has no quadratic part")));
        };
        let leading = leading.clone();
        let inv = lc.recip()?;
        Ok(QuadLinRelation {
            leading,
            body: terms.scale(&inv),
        })
    }

    pub fn leading(&self) -> &Word {
        &self.leading
    }

    /// The whole relation, leading term included.
    pub fn as_combination(&self) -> &Combination {
        &self.body
    }

    /// Quadratic terms other than the leading one.
    pub fn quadratic_part(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.body.terms().filter(|(w, _)| w.len() == 2)
    }

    pub fn linear_part(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.body
            .terms()
            .filter(|(w, _)| w.len() == 1)
            .map(|(w, c)| (w.0[0], c))
    }

    /// What the leading monomial rewrites to.
    fn tail(&self) -> Combination {
        let mut t = Combination::zero();
        for (w, c) in self.body.terms() {
            if *w != self.leading {
                t.add_term(w.clone(), -c);
            }
        }
        t
    }
}

impl fmt::Display for QuadLinRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.body)
    }
}

/// `v_i v_j - s_ij v_j v_i - sum_k c_ij^k v_k` for `i < j` and
/// `v_i^2 - 1/2 sum_k c_ii^k v_k` when `s_ii = -1`.
pub fn uea_relations(g: &ColorLieAlgebra) -> Result<Vec<QuadLinRelation>> {
    let n = g.dim();
    let cm = g.signs();
    let half = Scalar::ratio(1, 2)?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && cm.sign(i, i) == 1 {
                if g.brackets().contains_key(&(i, i)) {
                    return Err(Error::DiagonalBracket(i + 1));
                }
                continue;
            }
            let mut c = Combination::word(Word::pair(i, j));
            let scale = if i == j {
                half.clone()
            } else {
                c.add_term(Word::pair(j, i), Scalar::from_i64(-(cm.sign(i, j) as i64)));
                Scalar::one()
            };
            if let Some(coeffs) = g.brackets().get(&(i, j)) {
                for (k, x) in coeffs.iter().enumerate() {
                    c.add_term(Word::letter(k), -(&scale * x));
                }
            }
            out.push(QuadLinRelation::new(c)?);
        }
    }
    Ok(out)
}

/// Rewriting system built from relations with distinct leading monomials.
#[derive(Clone, Debug)]
pub struct Rewriter {
    rules: HashMap<(usize, usize), Combination>,
}

impl Rewriter {
    pub fn new(rels: &[QuadLinRelation]) -> Result<Self> {
        let mut rules = HashMap::new();
        for r in rels {
            let key = (r.leading.0[0], r.leading.0[1]);
            if rules.insert(key, r.tail()).is_some() {
                return Err(Error::DuplicateLeading(r.leading.to_string()));
            }
        }
        Ok(Rewriter { rules })
    }

    pub fn is_leading(&self, a: usize, b: usize) -> bool {
        self.rules.contains_key(&(a, b))
    }

    fn reducible_at(&self, w: &Word) -> Option<usize> {
        w.0.windows(2).position(|p| self.rules.contains_key(&(p[0], p[1])))
    }

    /// Normal form. The greatest pending word is always handled first, and
    /// rewriting only produces smaller words, so each word is visited once.
    pub fn reduce(&self, x: &Combination) -> Combination {
        let mut pending = x.0.clone();
        let mut done = Combination::zero();
        while let Some((w, c)) = pending.pop_last() {
            match self.reducible_at(&w) {
                None => done.add_term(w, c),
                Some(p) => {
                    let tail = &self.rules[&(w.0[p], w.0[p + 1])];
                    for (t, tc) in tail.wrap(&w.0[..p], &w.0[p + 2..]).terms() {
                        let e = pending.entry(t.clone()).or_insert_with(Scalar::zero);
                        *e = &*e + &(&c * tc);
                        if e.is_zero() {
                            pending.remove(t);
                        }
                    }
                }
            }
        }
        done
    }
}

pub fn reduce_word(x: &Combination, rels: &[QuadLinRelation]) -> Result<Combination> {
    Ok(Rewriter::new(rels)?.reduce(x))
}

/// Verdict of [`groebner_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerReport {
    pub overlaps: Vec<Word>,
    /// Overlap words whose s-polynomial has a nonzero normal form.
    pub failing: Vec<(Word, Combination)>,
}

impl GroebnerReport {
    pub fn is_pbw(&self) -> bool {
        self.failing.is_empty()
    }
}

/// Reduces the s-polynomial `r_ab v_c - v_a r_bc` of every overlap `v_a v_b v_c`.
pub fn groebner_check(rels: &[QuadLinRelation]) -> Result<GroebnerReport> {
    let rw = Rewriter::new(rels)?;
    let by_lead: HashMap<(usize, usize), &QuadLinRelation> =
        rels.iter().map(|r| ((r.leading.0[0], r.leading.0[1]), r)).collect();
    let mut overlaps = Vec::new();
    for r in rels {
        let (a, b) = (r.leading.0[0], r.leading.0[1]);
        for s in rels {
            if s.leading.0[0] == b {
                overlaps.push(Word(vec![a, b, s.leading.0[1]]));
            }
        }
    }
    overlaps.sort_by(|x, y| y.cmp(x));
    let failing: Vec<(Word, Combination)> = overlaps
        .par_iter()
        .filter_map(|w| {
            let (a, b, c) = (w.0[0], w.0[1], w.0[2]);
            let left = by_lead[&(a, b)].body.wrap(&[], &[c]);
            let right = by_lead[&(b, c)].body.wrap(&[a], &[]);
            let s = left.add(&right.scale(&Scalar::from_i64(-1)));
            let nf = rw.reduce(&s);
            (!nf.is_zero()).then(|| (w.clone(), nf))
        })
        .collect();
    Ok(GroebnerReport { overlaps, failing })
}

/// Words of length `d` with no leading monomial as a factor, greatest first.
pub fn normal_words(rels: &[QuadLinRelation], n: usize, d: usize) -> Result<Vec<Word>> {
    let rw = Rewriter::new(rels)?;
    let mut words = vec![Word::empty()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &words {
            for i in 0..n {
                if w.0.last().is_some_and(|&l| rw.is_leading(l, i)) {
                    continue;
                }
                let mut v = w.0.clone();
                v.push(i);
                next.push(Word(v));
            }
        }
        words = next;
    }
    words.sort_by(|x, y| y.cmp(x));
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::CommutationMatrix;

    fn e(k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 3];
        v[k] = Scalar::one();
        v
    }

    fn heis() -> CommutationMatrix {
        CommutationMatrix::symmetric(&[1, 1, 1], &[-1, -1, -1]).unwrap()
    }

    fn case3() -> ColorLieAlgebra {
        ColorLieAlgebra::new(heis(), [(0, 1, e(2)), (0, 2, e(1)), (1, 2, e(0))]).unwrap()
    }

    fn w(v: &[usize]) -> Combination {
        Combination::word(Word(v.to_vec()))
    }

    #[test]
    fn word_order() {
        assert!(Word(vec![0, 1]) > Word(vec![1, 0]));
        assert!(Word(vec![2, 2]) > Word(vec![0]));
        assert!(Word(vec![0, 0]) > Word(vec![0, 1]));
    }

    #[test]
    fn heisenberg_relations() {
        let g = ColorLieAlgebra::new(heis(), [(0, 1, e(2))]).unwrap();
        let rels = uea_relations(&g).unwrap();
        let text: Vec<String> = rels.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["v1v2 + v2v1 - v3", "v1v3 + v3v1", "v2v3 + v3v2"]);
        // v1v2 leads under v1 > v2, so v2v1 is already normal.
        let r = reduce_word(&w(&[0, 1]), &rels).unwrap();
        assert_eq!(r.to_string(), "-v2v1 + v3");
        assert_eq!(reduce_word(&w(&[1, 0]), &rels).unwrap(), w(&[1, 0]));
        assert_eq!(reduce_word(&w(&[0, 1]), &[]).unwrap(), w(&[0, 1]));
    }

    #[test]
    fn diagonal_relation() {
        let cm = CommutationMatrix::symmetric(&[1, 1, -1], &[1, 1, -1]).unwrap();
        let g = ColorLieAlgebra::new(cm, [(2, 2, e(0))]).unwrap();
        let rels = uea_relations(&g).unwrap();
        assert!(rels.iter().any(|r| r.to_string() == "v3v3 - 1/2*v1"));
        let r = reduce_word(&w(&[2, 2]), &rels).unwrap();
        assert_eq!(r.to_string(), "1/2*v1");
    }

    #[test]
    fn overlap_check() {
        assert!(groebner_check(&uea_relations(&case3()).unwrap()).unwrap().is_pbw());
        assert!(groebner_check(&[]).unwrap().is_pbw());
        let mut leak = e(2);
        leak[0] = Scalar::one();
        let bad = ColorLieAlgebra::new_relaxed(heis(), [(0, 1, leak), (0, 2, e(1)), (1, 2, e(0))]).unwrap();
        let report = groebner_check(&uea_relations(&bad).unwrap()).unwrap();
        assert!(!report.is_pbw());
        assert!(report.failing.iter().any(|(w, _)| w.0 == [0, 1, 2]));
    }

    #[test]
    fn rejects_non_quadratic() {
        assert!(QuadLinRelation::new(w(&[0, 1, 2])).is_err());
        assert!(QuadLinRelation::new(w(&[])).is_err());
        assert!(QuadLinRelation::new(w(&[1])).is_err());
        let dup = QuadLinRelation::new(w(&[0, 1])).unwrap();
        assert!(matches!(
            groebner_check(&[dup.clone(), dup]),
            Err(Error::DuplicateLeading(_))
        ));
    }

    #[test]
    fn normal_word_counts() {
        let heis_ab = ColorLieAlgebra::abelian(heis()).unwrap();
        let rels = uea_relations(&heis_ab).unwrap();
        assert_eq!(normal_words(&rels, 3, 2).unwrap().len(), 6);
        assert_eq!(normal_words(&rels, 3, 0).unwrap(), vec![Word::empty()]);
        let c10 = ColorLieAlgebra::abelian(CommutationMatrix::symmetric(&[1, -1, -1], &[1, 1, 1]).unwrap()).unwrap();
        let rels = uea_relations(&c10).unwrap();
        let words: Vec<String> = normal_words(&rels, 3, 2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(words, ["v1v1", "v2v1", "v3v1", "v3v2"]);
    }
}
