//! The differential on the Koszul dual, dual to the bracket and extended by
//! a Leibniz rule.

use crate::color::{ColorLieAlgebra, CommutationMatrix};
use crate::error::Result;
use crate::koszul::{dual_of, DgaElement, DualMonomial, SignAlgebra};
use crate::linalg::ExactMatrix;
use crate::scalar::{Scalar, ScalarKind};

/// Sign attached to the term `f_{i_1}..f_{i_p} d(f_{i_{p+1}}) ..` of the
/// Leibniz expansion of an ascending monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LeibnizSign {
    /// `(-1)^p`, the graded derivation rule.
    #[default]
    Homological,
    /// `prod_{h in prefix} s[h][g]` where `g` is the generator being
    /// differentiated; no homological sign.
    Color,
}

impl LeibnizSign {
    pub fn name(self) -> &'static str {
        match self {
            LeibnizSign::Homological => "homological",
            LeibnizSign::Color => "color",
        }
    }
}

impl std::str::FromStr for LeibnizSign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "homological" => Ok(LeibnizSign::Homological),
            "color" => Ok(LeibnizSign::Color),
            other => Err(format!("unknown Leibniz sign {other:?}, expected homological or color")),
        }
    }
}

/// `d` on `A^!`, stored by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    ambient: SignAlgebra,
    signs: CommutationMatrix,
    on_generators: Vec<DgaElement>,
    leibniz: LeibnizSign,
    kind: ScalarKind,
}

/// The matrix of `d: A^!_n -> A^!_{n+1}`; column `j` holds `d(source[j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialMatrix {
    pub degree: u32,
    pub source: Vec<DualMonomial>,
    pub target: Vec<DualMonomial>,
    pub matrix: ExactMatrix,
}

/// `d f_k = sum_{i<j} c_ij^k f_i f_j + sum_i c_ii^k f_i^2` with the homological sign rule.
pub fn differential_from_brackets(g: &ColorLieAlgebra) -> Differential {
    Differential::from_brackets(g, LeibnizSign::default())
}

impl Differential {
    pub fn from_brackets(g: &ColorLieAlgebra, leibniz: LeibnizSign) -> Differential {
        let n = g.dim();
        let ambient = dual_of(g);
        let mut on_generators = vec![DgaElement::zero(); n];
        for (&(i, j), coeffs) in g.brackets() {
            let pair = ambient.multiply(&DgaElement::generator(n, i), &DgaElement::generator(n, j));
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    on_generators[k] = on_generators[k].add(&pair.scale(c));
                }
            }
        }
        Differential {
            ambient,
            signs: g.signs().clone(),
            on_generators,
            leibniz,
            kind: if g.is_parametric() {
                ScalarKind::RationalFunction
            } else {
                ScalarKind::Rational
            },
        }
    }

    pub fn with_leibniz(mut self, leibniz: LeibnizSign) -> Differential {
        self.leibniz = leibniz;
        self
    }

    pub fn leibniz(&self) -> LeibnizSign {
        self.leibniz
    }

    pub fn ambient(&self) -> &SignAlgebra {
        &self.ambient
    }

    pub fn scalar_kind(&self) -> ScalarKind {
        self.kind
    }

    /// `d f_k`, 0-based.
    pub fn on_generator(&self, k: usize) -> &DgaElement {
        &self.on_generators[k]
    }

    pub fn is_zero(&self) -> bool {
        self.on_generators.iter().all(DgaElement::is_zero)
    }

    pub fn apply_monomial(&self, m: &DualMonomial) -> DgaElement {
        let n = self.ambient.generators();
        let factors = m.factors();
        let mut out = DgaElement::zero();
        let mut prefix = DualMonomial::one(n);
        for (p, &g) in factors.iter().enumerate() {
            let dg = &self.on_generators[g];
            if !dg.is_zero() {
                let mut suffix = m.clone();
                for &h in &factors[..=p] {
                    suffix.0[h] -= 1;
                }
                let negative = match self.leibniz {
                    LeibnizSign::Homological => p % 2 == 1,
                    LeibnizSign::Color => {
                        factors[..p].iter().filter(|&&h| self.signs.sign(h, g) == -1).count() % 2 == 1
                    }
                };
                let left = DgaElement::monomial(prefix.clone(), Scalar::one());
                let right = DgaElement::monomial(suffix, Scalar::one());
                let term = self.ambient.multiply(&self.ambient.multiply(&left, dg), &right);
                out = if negative { out.sub(&term) } else { out.add(&term) };
            }
            prefix.0[g] += 1;
        }
        out
    }

    pub fn apply(&self, x: &DgaElement) -> DgaElement {
        let mut out = DgaElement::zero();
        for (m, c) in x.terms() {
            out = out.add(&self.apply_monomial(m).scale(c));
        }
        out
    }

    pub fn matrix(&self, n: u32) -> Result<DifferentialMatrix> {
        let source = self.ambient.monomial_basis(n);
        let target = self.ambient.monomial_basis(n + 1);
        let index: std::collections::HashMap<&DualMonomial, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut matrix = ExactMatrix::zeros(target.len(), source.len(), self.kind);
        if !self.is_zero() {
            for (j, m) in source.iter().enumerate() {
                for (t, c) in self.apply_monomial(m).terms() {
                    matrix.set(index[t], j, c.clone())?;
                }
            }
        }
        Ok(DifferentialMatrix {
            degree: n,
            source,
            target,
            matrix,
        })
    }

    /// `d_{n+1} d_n = 0` for every `n <= max`.
    pub fn check_d_squared(&self, max: u32) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        let mut prev = self.matrix(0)?;
        for n in 0..=max {
            let next = self.matrix(n + 1)?;
            if !next.matrix.mul(&prev.matrix)?.is_zero() {
                return Ok(false);
            }
            prev = next;
        }
        Ok(true)
    }

    /// Substitutes `t := value` in the values on generators.
    pub fn substitute(&self, value: &Scalar) -> Result<Differential> {
        let on_generators = self
            .on_generators
            .iter()
            .map(|x| x.substitute(value))
            .collect::<Result<Vec<_>>>()?;
        Ok(Differential {
            on_generators,
            kind: ScalarKind::Rational,
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heis() -> CommutationMatrix {
        CommutationMatrix::symmetric(&[1, 1, 1], &[-1, -1, -1]).unwrap()
    }

    fn e(k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 3];
        v[k] = Scalar::one();
        v
    }

    fn case3() -> ColorLieAlgebra {
        ColorLieAlgebra::new(heis(), [(0, 1, e(2)), (0, 2, e(1)), (1, 2, e(0))]).unwrap()
    }

    #[test]
    fn generators_case3() {
        let d = differential_from_brackets(&case3());
        let names: Vec<String> = (0..3).map(|k| d.on_generator(k).to_string()).collect();
        assert_eq!(names, ["f2f3", "f1f3", "f1f2"]);
        let top = DualMonomial(vec![1, 1, 1]);
        assert!(d.apply_monomial(&top).is_zero());
        assert!(d.apply_monomial(&DualMonomial::one(3)).is_zero());
        let m = d.matrix(1).unwrap();
        assert_eq!(m.matrix.rank().unwrap(), 3);
        assert!(d.check_d_squared(4).unwrap());
    }

    #[test]
    fn diagonal_bracket() {
        let cm = CommutationMatrix::symmetric(&[1, 1, -1], &[1, 1, -1]).unwrap();
        let g = ColorLieAlgebra::new(cm, [(2, 2, e(0))]).unwrap();
        let d = differential_from_brackets(&g);
        assert_eq!(d.on_generator(0).to_string(), "f3^2");
        assert!(d.on_generator(1).is_zero() && d.on_generator(2).is_zero());
    }

    #[test]
    fn abelian_is_zero() {
        let g = ColorLieAlgebra::abelian(heis()).unwrap();
        let d = differential_from_brackets(&g);
        assert!(d.matrix(2).unwrap().matrix.is_zero());
        assert!(d.check_d_squared(3).unwrap());
    }

    #[test]
    fn parameter_vanishing() {
        // [e1,e2] = t e2, [e1,e3] = e3 with s23 = -1.
        let cm = CommutationMatrix::symmetric(&[1, 1, 1], &[1, 1, -1]).unwrap();
        let mut b = vec![Scalar::zero(); 3];
        b[1] = Scalar::parameter();
        let g = ColorLieAlgebra::new(cm, [(0, 1, b), (0, 2, e(2))]).unwrap();
        let d = differential_from_brackets(&g);
        let x = d.apply_monomial(&DualMonomial(vec![0, 1, 1]));
        let c = x.coefficient(&DualMonomial(vec![1, 1, 1]));
        assert_eq!(c.to_string(), "t+1");
        assert!(d
            .substitute(&Scalar::from_i64(-1))
            .unwrap()
            .apply_monomial(&DualMonomial(vec![0, 1, 1]))
            .is_zero());
    }

    #[test]
    fn broken_jacobi_fails_at_degree_one() {
        let mut leak = e(2);
        leak[0] = Scalar::one();
        let g = ColorLieAlgebra::new_relaxed(heis(), [(0, 1, leak), (0, 2, e(1)), (1, 2, e(0))]).unwrap();
        let d = differential_from_brackets(&g);
        let m1 = d.matrix(1).unwrap().matrix;
        let m2 = d.matrix(2).unwrap().matrix;
        assert!(!m2.mul(&m1).unwrap().is_zero());
    }
}
