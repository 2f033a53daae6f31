//! TOML description of an algebra, one document per file. Indices are
//! 1-based and coefficients use the scalar grammar:
//!
//! ```toml
//! name = "heisenberg"
//! dimension = 3
//! signs = [[1, -1, -1], [-1, 1, -1], [-1, -1, 1]]
//!
//! [[bracket]]
//! left = 1
//! right = 2
//! result = { e3 = "1" }
//! ```
//!
//! Optional keys: `description`, `parameter` (`"generic"` or a value for
//! `t`) and `grading` (one bit vector per generator).

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, Coefficient};
use crate::color::{ColorLieAlgebra, CommutationMatrix, GradingAssignment};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar, ScalarKind};

/// How the parameter `t` is treated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parameter {
    /// Kept symbolic: computations run over Q(t).
    Generic,
    Value(Scalar),
}

impl FromStr for Parameter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "generic" {
            return Ok(Parameter::Generic);
        }
        let v = parse_scalar(s)?;
        if v.kind() == ScalarKind::RationalFunction {
            return Err(Error::Format(format!("parameter value {s:?} must not contain t")));
        }
        Ok(Parameter::Value(v))
    }
}

impl std::fmt::Display for Parameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parameter::Generic => f.write_str("generic"),
            Parameter::Value(v) => write!(f, "{v}"),
        }
    }
}

/// A coefficient written as a TOML integer or a scalar string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientText {
    Int(i64),
    Text(String),
}

impl CoefficientText {
    fn value(&self) -> Result<Scalar> {
        match self {
            CoefficientText::Int(n) => Ok(Scalar::from_i64(*n)),
            CoefficientText::Text(s) => Ok(parse_scalar(s)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    /// `e<k>` to coefficient.
    pub result: BTreeMap<String, CoefficientText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub dimension: usize,
    pub signs: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<Vec<u8>>>,
    #[serde(default, rename = "bracket", skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketEntry>,
}

fn generator_index(key: &str, n: usize) -> Result<usize> {
    let k: usize = key
        .strip_prefix('e')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Format(format!("result key {key:?} is not of the form e<k>")))?;
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    Ok(k - 1)
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: AlgebraFile = toml::from_str(text).map_err(|e| Error::Format(e.message().to_string()))?;
        if file.signs.len() != file.dimension {
            return Err(Error::Format(format!(
                "dimension is {} but the sign matrix has {} rows",
                file.dimension,
                file.signs.len()
            )));
        }
        Ok(file)
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
        AlgebraFile::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("algebra files serialize")
    }

    /// Sign matrix as written; symmetry is not checked here.
    pub fn signs(&self) -> Result<CommutationMatrix> {
        CommutationMatrix::from_rows(self.signs.clone())
    }

    /// Parameter requested by the file, `generic` when absent.
    pub fn parameter(&self) -> Result<Parameter> {
        self.parameter.as_deref().map_or(Ok(Parameter::Generic), str::parse)
    }

    /// Brackets as `(i, j, coefficients)`, 0-based.
    fn bracket_vectors(&self) -> Result<Vec<(usize, usize, Vec<Scalar>)>> {
        let n = self.dimension;
        self.brackets
            .iter()
            .map(|b| {
                for idx in [b.left, b.right] {
                    if idx == 0 || idx > n {
                        return Err(Error::IndexOutOfRange { index: idx, n });
                    }
                }
                let mut v = vec![Scalar::zero(); n];
                for (key, c) in &b.result {
                    let k = generator_index(key, n)?;
                    v[k] = &v[k] + &c.value()?;
                }
                Ok((b.left - 1, b.right - 1, v))
            })
            .collect()
    }

    /// The algebra with `t` symbolic. Grading compatibility and Jacobi are
    /// left to [`ColorLieAlgebra::validate`] so they can be reported.
    pub fn algebra_symbolic(&self) -> Result<ColorLieAlgebra> {
        let g = ColorLieAlgebra::new_relaxed(self.signs()?, self.bracket_vectors()?)?;
        match &self.grading {
            Some(bits) => g.with_grading(GradingAssignment::new(bits.clone())?),
            None => Ok(g),
        }
    }

    /// The algebra at `param`, falling back to the file's own parameter.
    pub fn algebra(&self, param: Option<&Parameter>) -> Result<ColorLieAlgebra> {
        let g = self.algebra_symbolic()?;
        let param = match param {
            Some(p) => p.clone(),
            None => self.parameter()?,
        };
        match param {
            Parameter::Generic => Ok(g),
            Parameter::Value(_) if !g.is_parametric() => Err(Error::Format(
                "a parameter value was given but the algebra has no parameter t".into(),
            )),
            Parameter::Value(v) => g.substitute(&v),
        }
    }

    /// Describes `g`; brackets are written for `i <= j` only.
    pub fn from_algebra(name: Option<String>, g: &ColorLieAlgebra) -> AlgebraFile {
        let brackets = g
            .brackets()
            .iter()
            .map(|(&(i, j), coeffs)| BracketEntry {
                left: i + 1,
                right: j + 1,
                result: coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (format!("e{}", k + 1), CoefficientText::Text(c.to_string())))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name,
            description: None,
            dimension: g.dim(),
            signs: g
                .signs()
                .rows()
                .iter()
                .map(|r| r.iter().map(|&s| s as i64).collect())
                .collect(),
            parameter: None,
            grading: g.grading().map(|gr| gr.degrees().to_vec()),
            brackets,
        }
    }
}

/// Catalog entry `id` as a file. In parametric entries `t` stands for the
/// tabulated parameter, so the bracket coefficient is written `1/t`.
pub fn catalog_file(id: u8) -> Result<AlgebraFile> {
    let e = catalog::entry(id)?;
    let brackets = e
        .brackets
        .iter()
        .map(|b| {
            let c = match b.coefficient {
                Coefficient::Int(c) => CoefficientText::Int(c),
                Coefficient::Mu => CoefficientText::Text("1/t".into()),
            };
            BracketEntry {
                left: b.left,
                right: b.right,
                result: BTreeMap::from([(format!("e{}", b.result), c)]),
            }
        })
        .collect();
    let mut description = format!("relations: {}", e.relations_text().join(", "));
    if e.is_parametric() {
        description.push_str("; t is the tabulated mu");
    }
    Ok(AlgebraFile {
        name: Some(format!("case {id}")),
        description: Some(description),
        dimension: 3,
        signs: e
            .signs()
            .rows()
            .iter()
            .map(|r| r.iter().map(|&s| s as i64).collect())
            .collect(),
        parameter: None,
        grading: None,
        brackets,
    })
}
