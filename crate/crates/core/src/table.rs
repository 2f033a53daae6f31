//! Reproduction of the cohomology table: every catalog entry at its sample
//! parameters, plus the abelian family, checked against the tabulated series.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, abelian_family};
use crate::color::ColorLieAlgebra;
use crate::dga::{Differential, LeibnizSign};
use crate::error::Result;
use crate::homology::betti;
use crate::scalar::Scalar;
use crate::series::{recognize, RationalSeries};

/// Parameter of a table row, in the tabulated convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sample {
    None,
    Generic,
    Value(Scalar),
}

impl Sample {
    fn label(&self) -> String {
        match self {
            Sample::None => "-".into(),
            Sample::Generic => "generic".into(),
            Sample::Value(v) => v.to_string(),
        }
    }

    fn tabulated(&self) -> Option<Scalar> {
        match self {
            Sample::None => None,
            Sample::Generic => Some(Scalar::parameter()),
            Sample::Value(v) => Some(v.clone()),
        }
    }
}

/// Parameter values checked for the parametric entries.
pub fn samples(id: u8) -> Vec<Sample> {
    let q = |p, r| Sample::Value(Scalar::ratio(p, r).unwrap());
    match id {
        1 => vec![q(-1, 1), q(2, 1), q(1, 2), Sample::Generic],
        6 => vec![q(-1, 1), q(-1, 2), q(-1, 3), q(2, 1), Sample::Generic],
        10 => vec![
            q(2, 1),
            q(-2, 1),
            q(3, 1),
            q(-3, 1),
            q(1, 2),
            q(-1, 2),
            q(1, 1),
            q(-1, 1),
            Sample::Generic,
        ],
        _ => vec![Sample::None],
    }
}

#[derive(Clone, Debug)]
pub struct TableConfig {
    /// Betti numbers compared up to this degree.
    pub max_degree: u32,
    /// Number of terms minus one fed to series recognition.
    pub series_degree: u32,
    pub leibniz: LeibnizSign,
}

impl Default for TableConfig {
    fn default() -> Self {
        TableConfig {
            max_degree: 12,
            series_degree: 40,
            leibniz: LeibnizSign::Color,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableRow {
    /// `1`..`15`, or `ab<diagonal>` for the abelian family.
    pub id: String,
    pub classification_id: Option<u8>,
    /// Tabulated parameter value, `generic` or `-`.
    pub param: String,
    /// Bracket coefficient actually used.
    pub coefficient: String,
    pub betti: Vec<usize>,
    pub series: String,
    pub expected: String,
    pub betti_match: bool,
    pub series_match: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableReport {
    pub reconciliation: &'static str,
    pub leibniz: &'static str,
    pub max_degree: u32,
    pub series_degree: u32,
    pub rows: Vec<TableRow>,
    pub passed: usize,
    pub total: usize,
}

impl TableReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }
}

/// Description of the parameter convention recorded in every report.
pub const RECONCILIATION: &str = "tabulated mu is loaded as bracket coefficient 1/mu";

struct Job {
    id: String,
    classification_id: Option<u8>,
    sample: Sample,
    algebra: ColorLieAlgebra,
    coefficient: String,
    expected: RationalSeries,
}

fn jobs() -> Result<Vec<Job>> {
    let mut out = Vec::new();
    for e in catalog::entries() {
        for sample in samples(e.id) {
            let tabulated = sample.tabulated();
            let coefficient = match &sample {
                Sample::None => Scalar::one(),
                Sample::Generic => Scalar::parameter(),
                Sample::Value(v) => catalog::reconcile(v)?,
            };
            let algebra = if e.is_parametric() {
                catalog::load(e.id, Some(&coefficient))?
            } else {
                catalog::load(e.id, None)?
            };
            out.push(Job {
                id: e.id.to_string(),
                classification_id: Some(e.classification_id),
                expected: catalog::expected_series(e.id, tabulated.as_ref())?,
                coefficient: if e.is_parametric() {
                    coefficient.to_string()
                } else {
                    "-".into()
                },
                sample,
                algebra,
            });
        }
    }
    for m in abelian_family(3) {
        out.push(Job {
            id: format!("ab{}", m.label()),
            classification_id: None,
            sample: Sample::None,
            algebra: m.algebra(),
            coefficient: "-".into(),
            expected: m.expected_series(),
        });
    }
    Ok(out)
}

fn run(job: Job, config: &TableConfig) -> Result<TableRow> {
    let depth = config.max_degree.max(config.series_degree);
    let d = Differential::from_brackets(&job.algebra, config.leibniz);
    let full = betti(&d, depth)?;
    let betti: Vec<usize> = full.h[..=config.max_degree as usize].to_vec();
    let want = job.expected.expand(config.max_degree as usize);
    let betti_match = betti.iter().zip(&want).all(|(&a, &b)| a as i64 == b);
    let recognized = recognize(&full.as_i64()[..=config.series_degree as usize]);
    let series_match = recognized.series() == Some(&job.expected);
    Ok(TableRow {
        id: job.id,
        classification_id: job.classification_id,
        param: job.sample.label(),
        coefficient: job.coefficient,
        betti,
        series: recognized.to_string(),
        expected: job.expected.to_string(),
        betti_match,
        series_match,
        pass: betti_match && series_match,
    })
}

/// Runs every row; rows are computed in parallel and returned in table order.
pub fn reproduce(config: &TableConfig) -> Result<TableReport> {
    let rows: Vec<TableRow> = jobs()?.into_par_iter().map(|j| run(j, config)).collect::<Result<_>>()?;
    let passed = rows.iter().filter(|r| r.pass).count();
    Ok(TableReport {
        reconciliation: RECONCILIATION,
        leibniz: config.leibniz.name(),
        max_degree: config.max_degree,
        series_degree: config.series_degree,
        total: rows.len(),
        passed,
        rows,
    })
}
