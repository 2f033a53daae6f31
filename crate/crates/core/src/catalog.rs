//! The fifteen non-abelian three-dimensional color Lie algebras with
//! injective ±1 commutation factor, plus the abelian family.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::color::{ColorLieAlgebra, CommutationMatrix};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::RationalSeries;

/// Sign patterns shared by several entries: `(diagonal, [s12, s13, s23])`.
const SIGNS_A: ([i8; 3], [i8; 3]) = ([1, 1, 1], [1, 1, -1]);
const SIGNS_B: ([i8; 3], [i8; 3]) = ([1, 1, 1], [-1, -1, -1]);
const SIGNS_C: ([i8; 3], [i8; 3]) = ([1, 1, -1], [1, 1, -1]);
const SIGNS_D: ([i8; 3], [i8; 3]) = ([1, -1, -1], [1, 1, 1]);
const SIGNS_E: ([i8; 3], [i8; 3]) = ([1, -1, -1], [-1, -1, 1]);

/// Coefficient of one bracket term: a number or the parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Int(i64),
    Mu,
}

/// `<e_left, e_right> = coefficient * e_result`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketTerm {
    pub left: usize,
    pub right: usize,
    pub result: usize,
    pub coefficient: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: u8,
    /// Number in the published classification.
    pub classification_id: u8,
    diagonal: [i8; 3],
    upper: [i8; 3],
    pub brackets: Vec<BracketTerm>,
    /// Tabulated Poincaré series with its case split.
    pub expected_text: &'static str,
}

impl CatalogEntry {
    pub fn signs(&self) -> CommutationMatrix {
        CommutationMatrix::symmetric(&self.diagonal, &self.upper).expect("catalog signs are valid")
    }

    pub fn is_parametric(&self) -> bool {
        self.brackets.iter().any(|b| b.coefficient == Coefficient::Mu)
    }

    /// Edges are anticommuting pairs, loops are odd generators.
    pub fn graph(&self) -> (Vec<(usize, usize)>, Vec<usize>) {
        self.signs().graph()
    }

    /// Relations in the tabulated style, e.g. `{e1,e2}=e3`, `[e1,e2]=mu*e2`, `2e3^2=e1`.
    pub fn relations_text(&self) -> Vec<String> {
        let cm = self.signs();
        self.brackets
            .iter()
            .map(|b| {
                let coef = match b.coefficient {
                    Coefficient::Int(1) => String::new(),
                    Coefficient::Int(c) => format!("{c}*"),
                    Coefficient::Mu => "mu*".into(),
                };
                if b.left == b.right {
                    format!("2e{}^2={coef}e{}", b.left, b.result)
                } else if cm.sign(b.left - 1, b.right - 1) == -1 {
                    format!("{{e{},e{}}}={coef}e{}", b.left, b.right, b.result)
                } else {
                    format!("[e{},e{}]={coef}e{}", b.left, b.right, b.result)
                }
            })
            .collect()
    }
}

fn term(left: usize, right: usize, result: usize, coefficient: Coefficient) -> BracketTerm {
    BracketTerm {
        left,
        right,
        result,
        coefficient,
    }
}

/// `(id, classification id, signs, brackets, tabulated series)`.
type Row = (u8, u8, ([i8; 3], [i8; 3]), Vec<BracketTerm>, &'static str);

pub fn entries() -> Vec<CatalogEntry> {
    use Coefficient::{Int, Mu};
    let one = Int(1);
    let rows: [Row; 15] = [
        (1, 16, SIGNS_A, vec![term(1, 2, 2, Mu), term(1, 3, 3, one)], "1+z (mu != -1); 1+z+z^2+z^3 (mu = -1)"),
        (2, 17, SIGNS_A, vec![term(1, 2, 2, one)], "1+2z+z^2"),
        (3, 1, SIGNS_B, vec![term(1, 2, 3, one), term(1, 3, 2, one), term(2, 3, 1, one)], "1+z^3"),
        (4, 2, SIGNS_B, vec![term(1, 2, 3, one), term(1, 3, 2, one)], "1+z+z^2+z^3"),
        (5, 3, SIGNS_B, vec![term(1, 2, 3, one)], "1+2z+2z^2+z^3"),
        (6, 19, SIGNS_C, vec![term(1, 2, 2, Mu), term(1, 3, 3, one)], "1+z+z^(k+1)+z^(k+2) (mu = -1/k, k >= 1); 1+z otherwise"),
        (7, 20, SIGNS_C, vec![term(3, 3, 1, one)], "1+2z+z^2"),
        (8, 21, SIGNS_C, vec![term(1, 2, 2, one)], "(1+z)/(1-z)"),
        (9, 22, SIGNS_C, vec![term(1, 3, 3, one)], "1+2z+2z^2+z^3"),
        (
            10,
            24,
            SIGNS_D,
            vec![term(1, 2, 2, Mu), term(1, 3, 3, one)],
            "mu = p/q, r = |p|+q: 1+z (p even > 0); (1+z)/(1-z^r) (p even < 0); 1+z+z^r(1+z)/(1-z^2r) (p odd > 0); (1+z)/(1-z^2r) (p odd < 0); 1+z (mu irrational)",
        ),
        (11, 25, SIGNS_D, vec![term(3, 3, 1, one)], "(1+z)/(1-z)"),
        (12, 26, SIGNS_D, vec![term(1, 2, 2, one)], "(1+z)/(1-z)"),
        (13, 5, SIGNS_E, vec![term(1, 2, 3, one), term(1, 3, 2, one)], "1/(1-z)"),
        (14, 6, SIGNS_E, vec![term(2, 3, 1, one)], "(1+z)/(1-z)"),
        (15, 7, SIGNS_E, vec![term(1, 2, 3, one)], "(1+z)/(1-z)"),
    ];
    rows.into_iter()
        .map(
            |(id, classification_id, (diagonal, upper), brackets, expected_text)| CatalogEntry {
                id,
                classification_id,
                diagonal,
                upper,
                brackets,
                expected_text,
            },
        )
        .collect()
}

pub fn entry(id: u8) -> Result<CatalogEntry> {
    entries()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Catalog(format!("no entry {id}; ids run from 1 to 15")))
}

/// The algebra with the relations exactly as tabulated `mu` substituted
/// literally. Pass `Scalar::parameter()` for a symbolic `mu`.
pub fn load(id: u8, mu: Option<&Scalar>) -> Result<ColorLieAlgebra> {
    let e = entry(id)?;
    match (e.is_parametric(), mu) {
        (true, None) => return Err(Error::Catalog(format!("entry {id} needs a value for mu"))),
        (false, Some(_)) => return Err(Error::Catalog(format!("entry {id} has no parameter"))),
        (true, Some(m)) if m.is_zero() => return Err(Error::Catalog("mu must be nonzero".into())),
        _ => {}
    }
    let brackets = e.brackets.iter().map(|b| {
        let mut v = vec![Scalar::zero(); 3];
        v[b.result - 1] = match b.coefficient {
            Coefficient::Int(c) => Scalar::from_i64(c),
            Coefficient::Mu => mu.expect("checked above").clone(),
        };
        (b.left - 1, b.right - 1, v)
    });
    ColorLieAlgebra::new(e.signs(), brackets)
}

/// The bracket coefficient that reproduces the tabulated row for `mu`:
/// `1/mu`, since the tabulated differential carries `mu^{-1}`.
pub fn reconcile(mu: &Scalar) -> Result<Scalar> {
    Ok(mu.recip()?)
}

/// `load(id, 1/mu)`.
pub fn load_reconciled(id: u8, mu: Option<&Scalar>) -> Result<ColorLieAlgebra> {
    match mu {
        Some(m) => load(id, Some(&reconcile(m)?)),
        None => load(id, None),
    }
}

fn poly(c: &[i64]) -> RationalSeries {
    RationalSeries::polynomial(c)
}

fn one_minus_z_pow(k: usize) -> Vec<i64> {
    let mut d = vec![0; k + 1];
    d[0] = 1;
    d[k] = -1;
    d
}

/// Splits a rational `mu` into `(p, q)` with `q > 0`, coprime.
fn as_fraction(mu: &Scalar) -> Option<(i64, i64)> {
    let r = mu.as_rational()?;
    Some((r.numer().to_i64()?, r.denom().to_i64()?))
}

/// Tabulated Poincaré series for `id` at the tabulated parameter value `mu`. A
/// symbolic `mu` selects the generic row.
pub fn expected_series(id: u8, mu: Option<&Scalar>) -> Result<RationalSeries> {
    let e = entry(id)?;
    if e.is_parametric() != mu.is_some() {
        return Err(Error::Catalog(format!("entry {id}: parameter mismatch")));
    }
    let frac = mu.and_then(as_fraction);
    let one_z = poly(&[1, 1]);
    Ok(match id {
        1 => match frac {
            Some((-1, 1)) => poly(&[1, 1, 1, 1]),
            _ => one_z,
        },
        2 | 7 => poly(&[1, 2, 1]),
        3 => poly(&[1, 0, 0, 1]),
        4 => poly(&[1, 1, 1, 1]),
        5 | 9 => poly(&[1, 2, 2, 1]),
        6 => match frac {
            Some((-1, k)) if k >= 1 => {
                let k = k as usize;
                let mut c = vec![0; k + 3];
                c[0] = 1;
                c[1] = 1;
                c[k + 1] = 1;
                c[k + 2] = 1;
                poly(&c)
            }
            _ => one_z,
        },
        8 | 11 | 12 | 14 | 15 => RationalSeries::new(&[1, 1], &[1, -1])?,
        13 => RationalSeries::new(&[1], &[1, -1])?,
        10 => match frac {
            None => one_z,
            Some((p, q)) => {
                let r = (p.unsigned_abs() + q as u64) as usize;
                match (p.is_even(), p > 0) {
                    (true, true) => one_z,
                    (true, false) => RationalSeries::new(&[1, 1], &one_minus_z_pow(r))?,
                    (false, true) => {
                        let mut num = vec![0; r + 2];
                        num[r] = 1;
                        num[r + 1] = 1;
                        one_z.add(&RationalSeries::new(&num, &one_minus_z_pow(2 * r))?)
                    }
                    (false, false) => RationalSeries::new(&[1, 1], &one_minus_z_pow(2 * r))?,
                }
            }
        },
        _ => unreachable!("entry() rejects unknown ids"),
    })
}

/// `h_0..h_N` of the tabulated series.
pub fn expected_betti(id: u8, mu: Option<&Scalar>, max: usize) -> Result<Vec<i64>> {
    Ok(expected_series(id, mu)?.expand(max))
}

/// One abelian algebra per diagonal pattern; `q` counts the odd generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianMember {
    pub signs: CommutationMatrix,
    pub q: u32,
}

impl AbelianMember {
    pub fn algebra(&self) -> ColorLieAlgebra {
        ColorLieAlgebra::abelian(self.signs.clone()).expect("symmetric")
    }

    pub fn expected_series(&self) -> RationalSeries {
        RationalSeries::abelian_closed_form(self.signs.dim() as u32, self.q)
    }

    /// Diagonal as `+`/`-` characters, e.g. `+--`.
    pub fn label(&self) -> String {
        (0..self.signs.dim())
            .map(|i| if self.signs.sign(i, i) == 1 { '+' } else { '-' })
            .collect()
    }
}

/// All `2^n` diagonal patterns. Two even generators anticommute, every other
/// pair commutes.
pub fn abelian_family(n: usize) -> Vec<AbelianMember> {
    (0..1u32 << n)
        .map(|mask| {
            let odd = |i: usize| mask >> (n - 1 - i) & 1 == 1;
            let rows = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| match (i == j, odd(i), odd(j)) {
                            (true, true, _) => -1,
                            (true, false, _) => 1,
                            (false, false, false) => -1,
                            _ => 1,
                        })
                        .collect()
                })
                .collect();
            AbelianMember {
                signs: CommutationMatrix::from_rows(rows).expect("valid signs"),
                q: mask.count_ones(),
            }
        })
        .collect()
}

/// Sign matrix of the color Heisenberg example.
pub fn heisenberg_signs() -> CommutationMatrix {
    CommutationMatrix::symmetric(&SIGNS_B.0, &SIGNS_B.1).unwrap()
}

/// Case 3 with `<e1,e2> = e3 + e1`: the first term keeps the grading, the
/// second leaves it, and the Jacobi identity fails on `(1,2,3)`.
pub fn case3_jacobi_mutant() -> ColorLieAlgebra {
    let e = |k: usize| {
        let mut v = vec![Scalar::zero(); 3];
        v[k] = Scalar::one();
        v
    };
    let mut leak = e(2);
    leak[0] = Scalar::one();
    ColorLieAlgebra::new_relaxed(heisenberg_signs(), [(0, 1, leak), (0, 2, e(1)), (1, 2, e(0))])
        .expect("indices in range")
}

/// Whether `mu` is a negative unit fraction `-1/k`.
pub fn negative_unit_fraction(mu: &Scalar) -> Option<u64> {
    let r = mu.as_rational()?;
    (r.is_negative() && r.numer().abs() == 1.into())
        .then(|| r.denom().to_u64())
        .flatten()
}
