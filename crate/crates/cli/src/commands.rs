//! Subcommand bodies. Each returns the rendered report and whether every
//! check passed; input and mathematical errors become a [`Failure`].

use std::fmt::Write as _;
use std::path::Path;

use colorcoh::color::ColorLieAlgebra;
use colorcoh::dga::{Differential, LeibnizSign};
use colorcoh::format::{AlgebraFile, Parameter};
use colorcoh::homology::{betti, cohomology_in_degree};
use colorcoh::koszul::{dual_of, SignAlgebra};
use colorcoh::pbw::{groebner_check, uea_relations};
use colorcoh::series::recognize;
use colorcoh::table::{reproduce, TableConfig};
use colorcoh::Error;
use serde::Serialize;

use crate::{ComputeOpts, Format};

/// Rendered output plus the verdict that decides between exit 0 and 1.
pub struct Report {
    pub text: String,
    pub ok: bool,
}

/// A diagnostic printed to stderr with its exit code.
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::AsymmetricSigns(_)
            | Error::DiagonalBracket(_)
            | Error::GradingViolation { .. }
            | Error::NotADifferential(_)
            | Error::NotQuadraticLinear(_)
            | Error::DuplicateLeading(_) => 1,
            _ => 2,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

type Outcome = Result<Report, Failure>;

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

fn math_error(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 1,
    }
}

fn no_csv(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(input_error(format!("{command} has no csv output; use text or json")));
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

/// Reads a file and rejects asymmetric sign matrices before any bracket is
/// interpreted.
fn load_file(path: &Path) -> Result<AlgebraFile, Failure> {
    let file = AlgebraFile::read(path)?;
    let report = file.signs()?.validate();
    if !report.is_ok() {
        return Err(Error::AsymmetricSigns(report.asymmetric).into());
    }
    Ok(file)
}

/// A validated algebra at the requested parameter.
fn load_valid(path: &Path, param: Option<&str>) -> Result<(AlgebraFile, ColorLieAlgebra), Failure> {
    let file = load_file(path)?;
    let param = param.map(str::parse::<Parameter>).transpose()?;
    let g = file.algebra(param.as_ref())?;
    let v = g.validate();
    if let Some(&(i, j, k)) = v.grading.first() {
        return Err(Error::GradingViolation { i, j, k }.into());
    }
    if !v.jacobi.is_empty() {
        let triples: Vec<String> = v.jacobi.iter().map(|d| format!("{:?}", d.triple)).collect();
        return Err(math_error(format!("Jacobi identity fails on {}", triples.join(" "))));
    }
    Ok((file, g))
}

fn display_name(file: &AlgebraFile, path: &Path) -> String {
    file.name.clone().unwrap_or_else(|| path.display().to_string())
}

fn parameter_label(file: &AlgebraFile, param: Option<&str>) -> String {
    match param {
        Some(p) => p.trim().to_string(),
        None => file.parameter.clone().unwrap_or_else(|| "generic".into()),
    }
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    symmetric: bool,
    asymmetric: Vec<(usize, usize)>,
    injective: bool,
    grading_violations: Vec<(usize, usize, usize)>,
    jacobi_defects: Vec<JacobiJson>,
    pbw: bool,
    failing_overlaps: Vec<OverlapJson>,
    pass: bool,
}

#[derive(Serialize)]
struct JacobiJson {
    triple: (usize, usize, usize),
    defect: Vec<String>,
}

#[derive(Serialize)]
struct OverlapJson {
    overlap: String,
    normal_form: String,
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn check(path: &Path, format: Format) -> Outcome {
    no_csv(format, "check")?;
    let file = AlgebraFile::read(path)?;
    let signs = file.signs()?;
    let sym = signs.validate();
    let name = display_name(&file, path);
    if !sym.is_ok() {
        let pairs: Vec<String> = sym.asymmetric.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let text = match format {
            Format::Json => json(&CheckJson {
                name,
                symmetric: false,
                asymmetric: sym.asymmetric.clone(),
                injective: false,
                grading_violations: vec![],
                jacobi_defects: vec![],
                pbw: false,
                failing_overlaps: vec![],
                pass: false,
            }),
            _ => format!(
                "algebra: {name}\nsigns: FAIL not symmetric at {}\nverdict: FAIL\n",
                pairs.join(" ")
            ),
        };
        return Ok(Report { text, ok: false });
    }
    let g = file.algebra_symbolic()?;
    let v = g.validate();
    let (pbw_ok, failing) = if v.grading.is_empty() {
        let r = groebner_check(&uea_relations(&g)?)?;
        (r.is_pbw(), r.failing)
    } else {
        (false, Vec::new())
    };
    let pass = v.is_valid() && v.injective && pbw_ok;
    let text = match format {
        Format::Json => json(&CheckJson {
            name,
            symmetric: true,
            asymmetric: vec![],
            injective: v.injective,
            grading_violations: v.grading.clone(),
            jacobi_defects: v
                .jacobi
                .iter()
                .map(|d| JacobiJson {
                    triple: d.triple,
                    defect: d.defect.iter().map(ToString::to_string).collect(),
                })
                .collect(),
            pbw: pbw_ok,
            failing_overlaps: failing
                .iter()
                .map(|(w, nf)| OverlapJson {
                    overlap: w.to_string(),
                    normal_form: nf.to_string(),
                })
                .collect(),
            pass,
        }),
        _ => {
            let mut s = String::new();
            writeln!(s, "algebra: {name}").unwrap();
            writeln!(s, "signs: PASS symmetric").unwrap();
            writeln!(s, "injective: {}", verdict(v.injective)).unwrap();
            if v.grading.is_empty() {
                writeln!(s, "grading: PASS").unwrap();
            } else {
                let at: Vec<String> = v
                    .grading
                    .iter()
                    .map(|(i, j, k)| format!("<e{i},e{j}> -> e{k}"))
                    .collect();
                writeln!(s, "grading: FAIL {}", at.join(", ")).unwrap();
            }
            if v.jacobi.is_empty() {
                writeln!(s, "jacobi: PASS").unwrap();
            } else {
                writeln!(s, "jacobi: FAIL").unwrap();
                for d in &v.jacobi {
                    let defect: Vec<String> = d.defect.iter().map(ToString::to_string).collect();
                    writeln!(s, "  triple {:?}: defect [{}]", d.triple, defect.join(", ")).unwrap();
                }
            }
            if !v.grading.is_empty() {
                writeln!(s, "pbw: skipped (grading violated)").unwrap();
            } else if pbw_ok {
                writeln!(s, "pbw: PASS").unwrap();
            } else {
                writeln!(s, "pbw: FAIL").unwrap();
                for (w, nf) in &failing {
                    writeln!(s, "  overlap {w}: normal form {nf}").unwrap();
                }
            }
            writeln!(s, "verdict: {}", verdict(pass)).unwrap();
            s
        }
    };
    Ok(Report { text, ok: pass })
}

#[derive(Serialize)]
struct CohomologyJson {
    name: String,
    param: String,
    leibniz: &'static str,
    betti: Vec<usize>,
    series: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<DegreeJson>>,
}

#[derive(Serialize)]
struct DegreeJson {
    degree: u32,
    classes: Vec<String>,
}

fn degree_csv(betti: &[usize]) -> String {
    let rows: Vec<Vec<String>> = betti
        .iter()
        .enumerate()
        .map(|(n, h)| vec![n.to_string(), h.to_string()])
        .collect();
    csv_text(&["degree".into(), "h".into()], &rows)
}

/// Betti numbers to `shown`, with the series recognized from at least
/// `window + 1` terms.
fn betti_and_series(
    g: &ColorLieAlgebra,
    leibniz: LeibnizSign,
    shown: u32,
    window: u32,
) -> Result<(Differential, Vec<usize>, String), Failure> {
    let d = Differential::from_brackets(g, leibniz);
    let full = betti(&d, shown.max(window))?;
    let series = recognize(&full.as_i64()).to_string();
    Ok((d, full.h[..=shown as usize].to_vec(), series))
}

pub fn cohomology(path: &Path, opts: &ComputeOpts, representatives: bool, format: Format) -> Outcome {
    if representatives && format == Format::Csv {
        return Err(input_error("--representatives has no csv output; use text or json"));
    }
    let (file, g) = load_valid(path, opts.param.as_deref())?;
    let leibniz: LeibnizSign = opts.leibniz.into();
    let max = opts.max_degree.unwrap_or(12);
    let (d, h, series) = betti_and_series(&g, leibniz, max, 40)?;
    let reps = if representatives {
        let mut out = Vec::new();
        for n in 0..=max {
            let c = cohomology_in_degree(&d, n)?;
            out.push(DegreeJson {
                degree: n,
                classes: c.representatives.iter().map(|r| r.representative.to_string()).collect(),
            });
        }
        Some(out)
    } else {
        None
    };
    let name = display_name(&file, path);
    let param = parameter_label(&file, opts.param.as_deref());
    let text = match format {
        Format::Csv => degree_csv(&h),
        Format::Json => json(&CohomologyJson {
            name,
            param,
            leibniz: leibniz.name(),
            betti: h,
            series,
            representatives: reps,
        }),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "algebra: {name}").unwrap();
            writeln!(s, "param: {param}").unwrap();
            writeln!(s, "leibniz: {}", leibniz.name()).unwrap();
            writeln!(s, "betti: {}", join(&h)).unwrap();
            writeln!(s, "series: {series}").unwrap();
            for r in reps.iter().flatten() {
                let classes = if r.classes.is_empty() {
                    "none".to_string()
                } else {
                    r.classes.join(", ")
                };
                writeln!(s, "H^{}: {classes}", r.degree).unwrap();
            }
            s
        }
    };
    Ok(Report { text, ok: true })
}

#[derive(Serialize)]
struct SeriesJson {
    name: String,
    param: String,
    leibniz: &'static str,
    betti: Vec<usize>,
    series: String,
    recognized: bool,
}

pub fn series(path: &Path, opts: &ComputeOpts, format: Format) -> Outcome {
    let (file, g) = load_valid(path, opts.param.as_deref())?;
    let leibniz: LeibnizSign = opts.leibniz.into();
    let max = opts.max_degree.unwrap_or(40);
    let (_, h, series) = betti_and_series(&g, leibniz, max, max)?;
    let recognized = series != "inconclusive";
    let name = display_name(&file, path);
    let param = parameter_label(&file, opts.param.as_deref());
    let text = match format {
        Format::Csv => degree_csv(&h),
        Format::Json => json(&SeriesJson {
            name,
            param,
            leibniz: leibniz.name(),
            betti: h,
            series,
            recognized,
        }),
        Format::Text => format!(
            "algebra: {name}\nparam: {param}\nleibniz: {}\nbetti: {}\nseries: {series}\n",
            leibniz.name(),
            join(&h)
        ),
    };
    Ok(Report { text, ok: recognized })
}

#[derive(Serialize)]
struct SignAlgebraJson {
    generators: usize,
    square_zero: Vec<usize>,
    commuting: Vec<(usize, usize)>,
}

impl From<&SignAlgebra> for SignAlgebraJson {
    fn from(a: &SignAlgebra) -> Self {
        SignAlgebraJson {
            generators: a.generators(),
            square_zero: a.square_zero().iter().map(|i| i + 1).collect(),
            commuting: a.commuting_pairs().iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
        }
    }
}

#[derive(Serialize)]
struct DualJson {
    enveloping: SignAlgebraJson,
    dual: SignAlgebraJson,
}

pub fn dual(path: &Path, format: Format) -> Outcome {
    no_csv(format, "dual")?;
    let file = load_file(path)?;
    let g = file.algebra_symbolic()?;
    let u = SignAlgebra::enveloping(g.signs());
    let du = dual_of(&g);
    let text = match format {
        Format::Json => json(&DualJson {
            enveloping: (&u).into(),
            dual: (&du).into(),
        }),
        _ => format!("enveloping algebra of the abelianization:\n{u}\nkoszul dual:\n{du}\n"),
    };
    Ok(Report { text, ok: true })
}

/// `(1+z)^a/(1-z)^b` with trivial factors dropped.
fn closed_form(a: usize, b: usize) -> String {
    let power = |base: &str, e: usize| match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    };
    match (a, b) {
        (0, 0) => "1".into(),
        (_, 0) => power("(1+z)", a),
        (0, _) => format!("1/{}", power("(1-z)", b)),
        _ => format!("{}/{}", power("(1+z)", a), power("(1-z)", b)),
    }
}

#[derive(Serialize)]
struct HilbertJson {
    closed_form: String,
    series: String,
    coefficients: Vec<i64>,
    enumerated: Vec<usize>,
    agree: bool,
}

pub fn hilbert(path: &Path, max_degree: u32, format: Format) -> Outcome {
    let file = load_file(path)?;
    let g = file.algebra_symbolic()?;
    let u = SignAlgebra::enveloping(g.signs());
    let j = u.square_zero().len();
    let closed = closed_form(j, u.generators() - j);
    let series = u.hilbert_series();
    let coefficients = series.expand(max_degree as usize);
    let enumerated: Vec<usize> = (0..=max_degree).map(|d| u.monomial_basis(d).len()).collect();
    let agree = coefficients.iter().zip(&enumerated).all(|(&c, &e)| c == e as i64);
    let text = match format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = coefficients
                .iter()
                .zip(&enumerated)
                .enumerate()
                .map(|(d, (c, e))| vec![d.to_string(), c.to_string(), e.to_string()])
                .collect();
            csv_text(&["degree".into(), "coefficient".into(), "enumerated".into()], &rows)
        }
        Format::Json => json(&HilbertJson {
            closed_form: closed,
            series: series.to_string(),
            coefficients,
            enumerated,
            agree,
        }),
        Format::Text => format!(
            "hilbert series: {closed}\ncanonical: {series}\ncoefficients: {}\nenumeration: {}\n",
            join(&coefficients),
            if agree { "agrees" } else { "DISAGREES" }
        ),
    };
    Ok(Report { text, ok: agree })
}

#[derive(Serialize)]
struct PbwJson {
    relations: Vec<String>,
    overlaps: usize,
    failing_overlaps: Vec<OverlapJson>,
    pbw: bool,
}

pub fn pbw(path: &Path, format: Format) -> Outcome {
    no_csv(format, "pbw")?;
    let file = load_file(path)?;
    let g = file.algebra_symbolic()?;
    let rels = uea_relations(&g)?;
    let report = groebner_check(&rels)?;
    let ok = report.is_pbw();
    let text = match format {
        Format::Json => json(&PbwJson {
            relations: rels.iter().map(ToString::to_string).collect(),
            overlaps: report.overlaps.len(),
            failing_overlaps: report
                .failing
                .iter()
                .map(|(w, nf)| OverlapJson {
                    overlap: w.to_string(),
                    normal_form: nf.to_string(),
                })
                .collect(),
            pbw: ok,
        }),
        _ => {
            let mut s = String::from("relations:\n");
            for r in &rels {
                writeln!(s, "  {r}").unwrap();
            }
            writeln!(s, "overlaps: {}", report.overlaps.len()).unwrap();
            for (w, nf) in &report.failing {
                writeln!(s, "  overlap {w}: normal form {nf}").unwrap();
            }
            writeln!(s, "pbw: {}", verdict(ok)).unwrap();
            s
        }
    };
    Ok(Report { text, ok })
}

pub fn table(max_degree: u32, leibniz: LeibnizSign, format: Format) -> Outcome {
    let config = TableConfig {
        max_degree,
        leibniz,
        ..TableConfig::default()
    };
    let report = reproduce(&config)?;
    let text = match format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut header = vec!["id".to_string(), "param".to_string()];
            header.extend((0..=max_degree).map(|n| format!("h{n}")));
            header.extend(["series", "expected", "verdict"].map(String::from));
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    let mut row = vec![r.id.clone(), r.param.clone()];
                    row.extend(r.betti.iter().map(ToString::to_string));
                    row.extend([r.series.clone(), r.expected.clone(), verdict(r.pass).to_string()]);
                    row
                })
                .collect();
            csv_text(&header, &rows)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "reconciliation: {}", report.reconciliation).unwrap();
            writeln!(s, "leibniz: {}", report.leibniz).unwrap();
            writeln!(
                s,
                "betti degrees 0..{}, series from {} terms",
                report.max_degree,
                report.series_degree + 1
            )
            .unwrap();
            for r in &report.rows {
                writeln!(
                    s,
                    "{:<6} {:<8} {:<4} {:<32} {:<32} betti: {}",
                    r.id,
                    r.param,
                    verdict(r.pass),
                    r.series,
                    r.expected,
                    join(&r.betti)
                )
                .unwrap();
            }
            writeln!(s, "{}/{} rows pass", report.passed, report.total).unwrap();
            s
        }
    };
    Ok(Report {
        text,
        ok: report.all_pass(),
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(0, 0), "1");
        assert_eq!(closed_form(3, 0), "(1+z)^3");
        assert_eq!(closed_form(0, 1), "1/(1-z)");
        assert_eq!(closed_form(1, 2), "(1+z)/(1-z)^2");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::AsymmetricSigns(vec![(1, 2)])).code, 1);
        assert_eq!(Failure::from(Error::NotADifferential(3)).code, 1);
        assert_eq!(Failure::from(Error::Format("x".into())).code, 2);
        assert_eq!(Failure::from(Error::IndexOutOfRange { index: 4, n: 3 }).code, 2);
    }

    #[test]
    fn csv_quotes_fields() {
        let s = csv_text(&["a".into(), "b".into()], &[vec!["1,2".into(), "x".into()]]);
        assert_eq!(s, "a,b\n\"1,2\",x\n");
    }
}
