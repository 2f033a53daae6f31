//! `colorcoh`: validation, cohomology and table reproduction for color Lie
//! algebras described in TOML files.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use colorcoh::dga::LeibnizSign;

#[derive(Parser, Debug)]
#[command(name = "colorcoh", version, about = "Exact cohomology of color Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sign matrix, grading, Jacobi identity and PBW check.
    Check { file: PathBuf },
    /// Betti numbers, recognized Poincare series and representatives.
    Cohomology {
        file: PathBuf,
        #[command(flatten)]
        opts: ComputeOpts,
        /// Print a basis of cocycle representatives per degree.
        #[arg(long)]
        representatives: bool,
    },
    /// Betti numbers to a larger degree and the recognized series.
    Series {
        file: PathBuf,
        #[command(flatten)]
        opts: ComputeOpts,
    },
    /// The Koszul dual of the enveloping algebra of the abelianization.
    Dual { file: PathBuf },
    /// Hilbert series of the enveloping algebra, checked by enumeration.
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// Groebner (PBW) check of the enveloping algebra relations.
    Pbw { file: PathBuf },
    /// Reproduce the full cohomology table with PASS/FAIL per row.
    Table {
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
        /// Sign rule of the differential on products.
        #[arg(long, value_enum, default_value_t = Rule::Color)]
        leibniz: Rule,
    },
}

#[derive(clap::Args, Debug)]
struct ComputeOpts {
    /// Highest degree reported (default 12 for cohomology, 40 for series).
    #[arg(long)]
    max_degree: Option<u32>,
    /// Value of the parameter t, or `generic`; defaults to the file's own setting.
    #[arg(long, allow_hyphen_values = true)]
    param: Option<String>,
    /// Sign rule of the differential on products.
    #[arg(long, value_enum, default_value_t = Rule::Color)]
    leibniz: Rule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Rule {
    Color,
    Homological,
}

impl From<Rule> for LeibnizSign {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Color => LeibnizSign::Color,
            Rule::Homological => LeibnizSign::Homological,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check { file } => commands::check(file, cli.format),
        Command::Cohomology {
            file,
            opts,
            representatives,
        } => commands::cohomology(file, opts, *representatives, cli.format),
        Command::Series { file, opts } => commands::series(file, opts, cli.format),
        Command::Dual { file } => commands::dual(file, cli.format),
        Command::Hilbert { file, max_degree } => commands::hilbert(file, *max_degree, cli.format),
        Command::Pbw { file } => commands::pbw(file, cli.format),
        Command::Table { max_degree, leibniz } => commands::table(*max_degree, (*leibniz).into(), cli.format),
    };
    match outcome {
        Ok(report) => {
            let text = report.text;
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write {}: {e}", cli.out.as_ref().unwrap().display());
                return ExitCode::from(2);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
