#![allow(dead_code)]

use colorcoh::catalog;
use colorcoh::color::{ColorLieAlgebra, CommutationMatrix};
use colorcoh::Scalar;
use rand::Rng;

/// Every catalog entry, the parameter kept symbolic.
pub fn catalog_algebras() -> Vec<(u8, ColorLieAlgebra)> {
    catalog::entries()
        .into_iter()
        .map(|e| {
            let mu = e.is_parametric().then(Scalar::parameter);
            (e.id, catalog::load(e.id, mu.as_ref()).unwrap())
        })
        .collect()
}

/// Catalog entries at a fixed rational parameter, for tests that need Q.
pub fn rational_catalog_algebras() -> Vec<(u8, ColorLieAlgebra)> {
    catalog::entries()
        .into_iter()
        .map(|e| {
            let mu = e.is_parametric().then(|| Scalar::ratio(-1, 2).unwrap());
            (e.id, catalog::load(e.id, mu.as_ref()).unwrap())
        })
        .collect()
}

/// Symmetric sign matrix from six bits: three diagonal, then s12, s13, s23.
pub fn signs_from_bits(bits: u8) -> CommutationMatrix {
    let s = |b: u8| if bits >> b & 1 == 1 { -1 } else { 1 };
    CommutationMatrix::symmetric(&[s(0), s(1), s(2)], &[s(3), s(4), s(5)]).unwrap()
}

pub fn all_sign_matrices() -> impl Iterator<Item = CommutationMatrix> {
    (0..64u8).map(signs_from_bits)
}

/// Random sign-compatible structure constants in {-2..2} on `cm`; each
/// admissible constant is nonzero with probability `density`.
pub fn random_algebra<R: Rng>(rng: &mut R, cm: &CommutationMatrix, density: f64) -> ColorLieAlgebra {
    let n = cm.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && cm.sign(i, i) == 1 {
                continue;
            }
            let mut v = vec![Scalar::zero(); n];
            for (k, slot) in v.iter_mut().enumerate() {
                if cm.compatible(i, j, k) && rng.random_bool(density) {
                    let c = rng.random_range(1..=2) * if rng.random_bool(0.5) { 1 } else { -1 };
                    *slot = Scalar::from_i64(c);
                }
            }
            brackets.push((i, j, v));
        }
    }
    ColorLieAlgebra::new(cm.clone(), brackets).unwrap()
}

/// Catalog entry `g` with one extra random admissible constant.
pub fn perturb<R: Rng>(rng: &mut R, g: &ColorLieAlgebra) -> ColorLieAlgebra {
    let cm = g.signs().clone();
    let n = g.dim();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                if (i != j || cm.sign(i, i) == -1) && cm.compatible(i, j, k) {
                    triples.push((i, j, k));
                }
            }
        }
    }
    let mut brackets: Vec<(usize, usize, Vec<Scalar>)> =
        g.brackets().iter().map(|(&(i, j), v)| (i, j, v.clone())).collect();
    if !triples.is_empty() {
        let (i, j, k) = triples[rng.random_range(0..triples.len())];
        let mut v = vec![Scalar::zero(); n];
        v[k] = Scalar::from_i64(rng.random_range(1..=3));
        brackets.push((i, j, v));
    }
    ColorLieAlgebra::new(cm, brackets).unwrap()
}

pub fn unit(n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[k] = Scalar::one();
    v
}
