//! Command-line front end: property checks on poset files, Betti tables by
//! either route, the verification suites, and poset enumeration.
//!
//! Exit codes: 0 = property holds / all suite instances pass, 1 = property
//! fails / counterexample found, 2 = inconclusive or error.

use std::path::PathBuf;
use std::process::ExitCode;

use aslkit::betti::{
    has_linear_resolution, hochster_betti, is_chordal, koszul_betti, ring_invariants,
    GradedQuotient,
};
use aslkit::complex::{order_complex, SimplicialComplex};
use aslkit::lattice::is_distributive_type;
use aslkit::linalg::FieldSpec;
use aslkit::poset::{enumerate_posets, Poset};
use aslkit::report::VerificationReport;
use aslkit::suites::{
    explore_conjecture, suite_asl, suite_chordal, suite_divposet, suite_gorenstein_level,
    suite_la_classification,
};
use aslkit::topology::{is_cm_poset, is_shellable_poset, is_vd_poset, Tristate};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "aslkit", version, about = "Exact checks on posets of distributive type")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide one property of the poset in FILE.
    Check {
        /// distributive-type, cm, shellable, vertex-decomposable, pure,
        /// chordal, linear-resolution, gorenstein, level, sum-of-antichains
        property: String,
        #[arg(long)]
        poset: PathBuf,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
    },
    /// Graded Betti numbers of the quotient ring attached to a poset file.
    Betti {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
    },
    /// Run a verification suite and report pass/fail per instance family.
    Verify {
        /// la-classification, divposet, chordal, gorenstein-level, asl,
        /// conjecture
        suite: String,
        #[arg(long)]
        max_p: Option<usize>,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the full report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Facet file for the conjecture suite (one facet per line).
        #[arg(long)]
        facets: Option<PathBuf>,
    },
    /// Print every poset of the given size, one isomorphism class each.
    Enumerate {
        #[arg(long)]
        size: usize,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FieldArg {
    Q,
    F2,
    F3,
}

impl FieldArg {
    fn spec(self) -> FieldSpec {
        match self {
            FieldArg::Q => FieldSpec::Rational,
            FieldArg::F2 => FieldSpec::Prime(2),
            FieldArg::F3 => FieldSpec::Prime(3),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Hochster,
    Koszul,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Box<dyn std::error::Error>> {
    match cli.cmd {
        Cmd::Check { property, poset, field } => {
            let p = read_poset(&poset)?;
            let verdict = check_property(&property, &p, field.spec())?;
            println!("{}: {}", property, verdict);
            Ok(match verdict {
                Tristate::True => 0,
                Tristate::False => 1,
                Tristate::Inconclusive { .. } => 2,
            })
        }
        Cmd::Betti { poset, method, field } => {
            let p = read_poset(&poset)?;
            let table = match method {
                Method::Hochster => hochster_betti(&order_complex(&p)?, field.spec())?,
                Method::Koszul => {
                    if field != FieldArg::Q {
                        return Err("the koszul route works over the rationals only".into());
                    }
                    koszul_betti(&mut GradedQuotient::straightening(&p)?)?
                }
            };
            println!("{}", table.to_json());
            Ok(0)
        }
        Cmd::Verify { suite, max_p, max_rank, max_n, workers, json, facets } => {
            let report = run_suite(
                &suite,
                max_p,
                max_rank,
                max_n,
                workers,
                facets.as_deref(),
            )?;
            print!("{}", report.summary());
            if let Some(path) = json {
                std::fs::write(path, report.to_json())?;
            }
            Ok(report.exit_code() as u8)
        }
        Cmd::Enumerate { size } => {
            let posets = enumerate_posets(size)?;
            for p in &posets {
                print!("{}", p.serialize());
                println!();
            }
            println!("count: {}", posets.len());
            Ok(0)
        }
    }
}

fn read_poset(path: &std::path::Path) -> Result<Poset, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(path)?;
    Ok(Poset::parse(&text)?)
}

fn check_property(
    property: &str,
    p: &Poset,
    field: FieldSpec,
) -> Result<Tristate, Box<dyn std::error::Error>> {
    let of_bool = |b: bool| if b { Tristate::True } else { Tristate::False };
    Ok(match property {
        "distributive-type" => of_bool(is_distributive_type(p)),
        "cm" => of_bool(is_cm_poset(p, field)?),
        "shellable" => is_shellable_poset(p)?,
        "vertex-decomposable" => is_vd_poset(p)?,
        "pure" => of_bool(p.is_pure()?),
        "chordal" => of_bool(is_chordal(&p.comparability_graph())),
        "linear-resolution" => of_bool(has_linear_resolution(p)?),
        "gorenstein" => of_bool(ring_invariants(p, field)?.gorenstein),
        "level" => of_bool(ring_invariants(p, field)?.level),
        "sum-of-antichains" => of_bool(p.is_sum_of_antichains()),
        other => {
            return Err(format!(
                "unknown property `{}`; expected one of distributive-type, cm, \
                 shellable, vertex-decomposable, pure, chordal, linear-resolution, \
                 gorenstein, level, sum-of-antichains",
                other
            )
            .into())
        }
    })
}

fn run_suite(
    suite: &str,
    max_p: Option<usize>,
    max_rank: Option<usize>,
    max_n: Option<usize>,
    workers: usize,
    facets: Option<&std::path::Path>,
) -> Result<VerificationReport, Box<dyn std::error::Error>> {
    Ok(match suite {
        "la-classification" => suite_la_classification(max_p.unwrap_or(5), workers)?,
        "divposet" => suite_divposet(max_rank.unwrap_or(5), workers)?,
        "chordal" => suite_chordal(max_p.unwrap_or(7), workers)?,
        "gorenstein-level" => suite_gorenstein_level(max_n.unwrap_or(6), workers)?,
        "asl" => suite_asl(max_p.unwrap_or(6), workers)?,
        "conjecture" => {
            let path = facets.ok_or("the conjecture suite needs --facets FILE")?;
            let text = std::fs::read_to_string(path)?;
            let delta = SimplicialComplex::parse(&text)?;
            explore_conjecture(&delta, workers)?
        }
        other => {
            return Err(format!(
                "unknown suite `{}`; expected one of la-classification, divposet, \
                 chordal, gorenstein-level, asl, conjecture",
                other
            )
            .into())
        }
    })
}
