//! `orbiform` — decides whether ℝⁿ/Γ (and Sⁿ⁻¹/Γ) is a manifold for a
//! finite orthogonal matrix group Γ given by generators, and prints a
//! verifiable decomposition certificate.
//!
//! Exit codes: 0 any verdict, 1 invalid input, 2 closure cap exceeded,
//! 3 float tolerance conflict (ambiguous rank).

mod input;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use orbiform::catalog::{self, CatalogGroup, CatalogId};
use orbiform::error::Error;
use orbiform::group::{
    has_periodic_cohomology, is_perfect, FiniteGroup, FiniteMatrixGroup,
};
use orbiform::numeric::DEFAULT_TOLERANCE;
use orbiform::quaternion::{lift_group, orbit_angle_spectrum};
use orbiform::recognize;

use input::InputFile;

#[derive(Parser)]
#[command(name = "orbiform", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Catalog expression, e.g. poincare, cyclic(5), sum(poincare,trivial(1)),
    /// conj(klein_four,42), sl2(7)
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,
    /// Path to a generator file (JSON)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Extend the action trivially up to this ambient dimension
    #[arg(long)]
    dim: Option<usize>,
    /// Closure cap (errors out above this many elements)
    #[arg(long, default_value_t = 1_000_000)]
    cap: usize,
    /// Comparison tolerance for the float64 backend
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    epsilon: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide both quotient questions and print the certificate
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Also write the report as JSON to this path
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Catalog access
    Catalog {
        #[command(subcommand)]
        sub: CatalogCommand,
    },
    /// Lift an SO(4) group through the double cover and show (L/L_K; R/R_K)
    Lift {
        #[command(flatten)]
        source: Source,
    },
    /// Orbit-angle spectrum of the left lift factor (the X_alpha table)
    Spectrum {
        #[command(flatten)]
        source: Source,
    },
    /// Order, perfectness and periodic cohomology
    Invariants {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the built-in constructions with their fingerprints
    List,
    /// Emit a catalog group as a generator file
    Emit {
        /// Catalog expression
        #[arg(long)]
        id: String,
        /// Extend trivially up to this dimension before emitting
        #[arg(long)]
        dim: Option<usize>,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded(_) => 2,
                Error::AmbiguousRank { .. } => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn load_matrix_group(source: &Source) -> Result<FiniteMatrixGroup, Error> {
    let group = match (&source.catalog, &source.input) {
        (Some(expr), None) => {
            let id: CatalogId = expr.parse()?;
            catalog::build_with(&id, source.cap, source.epsilon)?.expect_matrix()?
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::BadParameter(format!("cannot read {path:?}: {e}")))?;
            let file: InputFile = serde_json::from_str(&text)
                .map_err(|e| Error::BadParameter(format!("bad input JSON: {e}")))?;
            let gens = file.parse_generators()?;
            FiniteMatrixGroup::generate(gens, source.cap, source.epsilon)?
        }
        _ => {
            return Err(Error::BadParameter(
                "exactly one of --catalog or --input is required".into(),
            ))
        }
    };
    match source.dim {
        Some(n) => catalog::pad_to_dimension(group, n),
        None => Ok(group),
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Analyze { source, report } => {
            let group = load_matrix_group(&source)?;
            let analysis = recognize::analyze(&group)?;
            let rep = report::build_report(&group, &analysis);
            print!("{}", report::render_text(&rep));
            if let Some(path) = report {
                let json = serde_json::to_string_pretty(&rep)
                    .map_err(|e| Error::Internal(format!("serialize: {e}")))?;
                fs::write(&path, json)
                    .map_err(|e| Error::BadParameter(format!("cannot write {path:?}: {e}")))?;
            }
            Ok(())
        }
        Command::Catalog { sub } => match sub {
            CatalogCommand::List => {
                for entry in catalog::list() {
                    let verdicts: Vec<String> = entry
                        .verdicts
                        .iter()
                        .map(|(n, a, b)| {
                            format!(
                                "R^{n}: {}/{}",
                                if *a { "yes" } else { "no" },
                                if *b { "yes" } else { "no" }
                            )
                        })
                        .collect();
                    println!(
                        "{:<24} order {:<6} perfect {:<5} periodic {:<5} {}",
                        entry.id.to_string(),
                        entry.order,
                        entry.perfect,
                        entry.periodic_cohomology,
                        verdicts.join("  ")
                    );
                }
                Ok(())
            }
            CatalogCommand::Emit { id, dim, out } => {
                let id: CatalogId = id.parse()?;
                let mut group = catalog::build(&id)?.expect_matrix()?;
                if let Some(n) = dim {
                    group = catalog::pad_to_dimension(group, n)?;
                }
                let file = InputFile::from_group(&group);
                let json = serde_json::to_string_pretty(&file)
                    .map_err(|e| Error::Internal(format!("serialize: {e}")))?;
                match out {
                    Some(path) => fs::write(&path, json)
                        .map_err(|e| Error::BadParameter(format!("cannot write {path:?}: {e}")))?,
                    None => println!("{json}"),
                }
                Ok(())
            }
        },
        Command::Lift { source } => {
            let group = load_matrix_group(&source)?;
            let data = lift_group(&group)?;
            println!(
                "lift: ({} / |L_K| = {}; {} / |R_K| = {})",
                data.left_class,
                data.left_kernel.len(),
                data.right_class,
                data.right_kernel.len()
            );
            println!(
                "order formula: |G| = {} = 1/2 * {} * {} = 1/2 * {} * {}  [{}]",
                data.group_order,
                data.left.order(),
                data.right_kernel.len(),
                data.right.order(),
                data.left_kernel.len(),
                if data.order_formula_holds() {
                    "holds"
                } else {
                    "VIOLATED"
                }
            );
            Ok(())
        }
        Command::Spectrum { source } => {
            let group = load_matrix_group(&source)?;
            let data = lift_group(&group)?;
            let spectrum = orbit_angle_spectrum(&data.left);
            println!("{:>10}  {:>24}  {:>6}", "angle", "cosine", "count");
            for (cos, count) in &spectrum.entries {
                let deg = cos.to_f64().clamp(-1.0, 1.0).acos().to_degrees();
                println!("{:>9.3}°  {:>24}  {:>6}", deg, cos.to_string(), count);
            }
            Ok(())
        }
        Command::Invariants { source } => {
            let (order, perfect, periodic, name) = match &source.catalog {
                Some(expr) => {
                    let id: CatalogId = expr.parse()?;
                    match catalog::build_with(&id, source.cap, source.epsilon)? {
                        CatalogGroup::Table(t) => (
                            t.order(),
                            is_perfect(&t),
                            has_periodic_cohomology(&t)?,
                            id.to_string(),
                        ),
                        CatalogGroup::Matrix(g) => (
                            g.order(),
                            is_perfect(&g),
                            has_periodic_cohomology(&g)?,
                            id.to_string(),
                        ),
                    }
                }
                None => {
                    let g = load_matrix_group(&source)?;
                    (
                        g.order(),
                        is_perfect(&g),
                        has_periodic_cohomology(&g)?,
                        "input".to_string(),
                    )
                }
            };
            println!("group: {name}");
            println!("order: {order}");
            println!("perfect: {perfect}");
            println!("periodic cohomology: {periodic}");
            Ok(())
        }
    }
}
