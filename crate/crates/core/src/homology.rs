//! Cocycles, coboundaries, Betti numbers and the cup product of `H(A^!, d)`.

use rayon::prelude::*;

use crate::color::ColorLieAlgebra;
use crate::dga::{Differential, LeibnizSign};
use crate::error::{Error, Result};
use crate::koszul::{DgaElement, DualMonomial};
use crate::linalg::EchelonSpan;
use crate::scalar::Scalar;
use crate::series::{recognize, Recognition};

/// `h_0, ..., h_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub h: Vec<usize>,
}

impl BettiTable {
    pub fn max_degree(&self) -> usize {
        self.h.len().saturating_sub(1)
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.h.iter().map(|&x| x as i64).collect()
    }

    pub fn recognize(&self) -> Recognition {
        recognize(&self.as_i64())
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.h.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A cocycle standing for its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: u32,
    pub representative: DgaElement,
}

/// Ranks of `d_0, ..., d_N`, computed independently per degree.
fn ranks(d: &Differential, max: u32) -> Result<Vec<usize>> {
    if d.is_zero() {
        return Ok(vec![0; max as usize + 1]);
    }
    (0..=max).into_par_iter().map(|n| d.matrix(n)?.matrix.rank()).collect()
}

/// Betti numbers from ranks: `h_n = dim A_n - rank d_n - rank d_{n-1}`.
pub fn betti(d: &Differential, max: u32) -> Result<BettiTable> {
    let r = ranks(d, max)?;
    let h = (0..=max)
        .map(|n| {
            let dim = d.ambient().monomial_basis(n).len();
            let prev = if n == 0 { 0 } else { r[n as usize - 1] };
            dim.checked_sub(r[n as usize] + prev).ok_or(Error::NotADifferential(n))
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable { h })
}

/// Betti numbers of `g` under the given sign rule; parameters stay symbolic,
/// so a parametric `g` yields its generic table.
pub fn betti_of(g: &ColorLieAlgebra, max: u32, leibniz: LeibnizSign) -> Result<BettiTable> {
    betti(&Differential::from_brackets(g, leibniz), max)
}

/// `h_1 = n - dim [g, g]`.
pub fn h1_dimension_check(g: &ColorLieAlgebra) -> Result<bool> {
    let t = betti_of(g, 1, LeibnizSign::default())?;
    Ok(t.h[1] == g.dim() - g.derived_dimension())
}

/// Cocycles, coboundaries and a complement in one degree.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub degree: u32,
    pub basis: Vec<DualMonomial>,
    pub cocycles: Vec<Vec<Scalar>>,
    pub coboundaries: EchelonSpan,
    pub representatives: Vec<CohomologyClass>,
}

impl DegreeCohomology {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of `x` in the monomial basis, reduced modulo coboundaries.
    pub fn reduce(&self, x: &DgaElement) -> Vec<Scalar> {
        self.coboundaries.reduce(&x.coordinates(&self.basis))
    }

    pub fn is_cocycle(&self, d: &Differential, x: &DgaElement) -> bool {
        d.apply(x).is_zero()
    }

    /// Whether `a` and `b` span the same subspace of `Z^n / B^n`.
    pub fn same_span(&self, a: &[DgaElement], b: &[DgaElement]) -> Result<bool> {
        let span = |xs: &[DgaElement]| -> Result<EchelonSpan> {
            let mut s = self.coboundaries.clone();
            for x in xs {
                s.insert(&x.coordinates(&self.basis))?;
            }
            Ok(s)
        };
        let (sa, sb) = (span(a)?, span(b)?);
        Ok(sa.rank() == sb.rank() && sa.basis().all(|v| sb.contains(v)))
    }
}

/// Cocycles and a deterministic complement of `B^n` in `Z^n`: kernel vectors
/// are taken in the order of the echelon kernel basis, reduced modulo `B^n`,
/// and kept when independent.
pub fn cohomology_in_degree(d: &Differential, n: u32) -> Result<DegreeCohomology> {
    let here = d.matrix(n)?;
    let basis = here.source.clone();
    let cocycles = here.matrix.rank_kernel()?.kernel;
    let mut coboundaries = EchelonSpan::new(basis.len());
    if n > 0 {
        for v in d.matrix(n - 1)?.matrix.image_basis()? {
            coboundaries.insert(&v)?;
        }
    }
    let mut span = coboundaries.clone();
    let mut representatives = Vec::new();
    for z in &cocycles {
        let r = coboundaries.reduce(z);
        if span.insert(&r)? {
            representatives.push(CohomologyClass {
                degree: n,
                representative: DgaElement::from_coordinates(&basis, &r),
            });
        }
    }
    Ok(DegreeCohomology {
        degree: n,
        basis,
        cocycles,
        coboundaries,
        representatives,
    })
}

pub fn representatives(d: &Differential, n: u32) -> Result<Vec<CohomologyClass>> {
    Ok(cohomology_in_degree(d, n)?.representatives)
}

/// Product of representatives reduced modulo coboundaries; `None` for the
/// zero class.
pub fn cup_product(d: &Differential, a: &CohomologyClass, b: &CohomologyClass) -> Result<Option<CohomologyClass>> {
    let degree = a.degree + b.degree;
    let product = d.ambient().multiply(&a.representative, &b.representative);
    if product.is_zero() {
        return Ok(None);
    }
    let target = cohomology_in_degree(d, degree)?;
    let r = target.reduce(&product);
    if r.iter().all(Scalar::is_zero) {
        return Ok(None);
    }
    Ok(Some(CohomologyClass {
        degree,
        representative: DgaElement::from_coordinates(&target.basis, &r),
    }))
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

    #[test]
    fn case3_and_case5() {
        let g3 = ColorLieAlgebra::new(heis(), [(0, 1, e(2)), (0, 2, e(1)), (1, 2, e(0))]).unwrap();
        assert_eq!(
            betti_of(&g3, 5, LeibnizSign::Homological).unwrap().h,
            [1, 0, 0, 1, 0, 0]
        );
        let g5 = ColorLieAlgebra::new(heis(), [(0, 1, e(2))]).unwrap();
        assert_eq!(betti_of(&g5, 4, LeibnizSign::Homological).unwrap().h, [1, 2, 2, 1, 0]);
        assert!(h1_dimension_check(&g3).unwrap());
        assert!(h1_dimension_check(&g5).unwrap());
    }

    #[test]
    fn case4_h1() {
        let g4 = ColorLieAlgebra::new(heis(), [(0, 1, e(2)), (0, 2, e(1))]).unwrap();
        let d = Differential::from_brackets(&g4, LeibnizSign::Homological);
        let reps = representatives(&d, 1).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].representative.to_string(), "f1");
        assert_eq!(representatives(&d, 0).unwrap()[0].representative.to_string(), "1");
    }

    #[test]
    fn cup_in_top_degree_vanishes() {
        let g3 = ColorLieAlgebra::new(heis(), [(0, 1, e(2)), (0, 2, e(1)), (1, 2, e(0))]).unwrap();
        let d = Differential::from_brackets(&g3, LeibnizSign::Homological);
        let top = representatives(&d, 3).unwrap();
        assert_eq!(top[0].representative.to_string(), "f1f2f3");
        let unit = &representatives(&d, 0).unwrap()[0];
        assert_eq!(
            cup_product(&d, unit, &top[0]).unwrap().unwrap().representative,
            top[0].representative
        );
        assert!(cup_product(&d, &top[0], &top[0]).unwrap().is_none());
    }

    #[test]
    fn abelian_rows() {
        let cm = CommutationMatrix::symmetric(&[1, -1, -1], &[1, 1, 1]).unwrap();
        let g = ColorLieAlgebra::abelian(cm).unwrap();
        let t = betti_of(&g, 6, LeibnizSign::Homological).unwrap();
        assert_eq!(
            t.h,
            crate::series::RationalSeries::abelian_closed_form(3, 2)
                .expand(6)
                .iter()
                .map(|&x| x as usize)
                .collect::<Vec<_>>()
        );
    }
}
