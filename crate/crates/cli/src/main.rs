//! `djh`: command-line front end.
//!
//! Reports go to standard output (or `--output`) as JSON; a one-line
//! summary goes to standard error. Exit codes: 0 success, 1 parse or input
//! error, 2 invalid group, 3 cross-check disagreement, 4 promise violated
//! or not balanced, 5 unsupported modulus.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use djh_core::circuit::{self, CircuitVerdict};
use djh_core::cyclotomic;
use djh_core::formats::{self, FunctionSpec, GroupReport, IrrepFile, Versioned};
use djh_core::promise::{self, FunctionProfile, PromiseFunction};
use djh_core::qft;
use djh_core::representation::{self, EntryIndex, IrrepSet};
use djh_core::{Error, FiniteGroup, IntPolynomial, DEFAULT_TOL, DEFAULT_VERDICT_TOL};

#[derive(Parser, Debug)]
#[command(
    name = "djh",
    version,
    about = "Groups, irreps, Fourier transforms and the one-query promise circuit"
)]
struct Cli {
    /// Tolerance for representation and unitarity checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Tolerance for circuit verdicts.
    #[arg(long, global = true, default_value_t = DEFAULT_VERDICT_TOL)]
    verdict_tol: f64,
    /// Seed for the measurement sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct IrrepSource {
    /// `builtin` or the path of an irrep file.
    #[arg(long, default_value = "builtin")]
    irreps: String,
}

#[derive(Args, Debug)]
struct FunctionInput {
    /// Function spec file.
    function: PathBuf,
    /// Group spec file for the codomain (overrides the spec's own).
    #[arg(long)]
    group: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a group spec and print its basic data.
    Group { spec: PathBuf },
    /// List the irreps of a group with β and a Schur orthogonality check.
    Irreps {
        spec: PathBuf,
        #[command(flatten)]
        source: IrrepSource,
        /// Emit the full irrep file instead of the summary.
        #[arg(long)]
        export: bool,
    },
    /// Emit the Fourier matrix of a group as [re, im] pairs.
    Qft {
        spec: PathBuf,
        #[command(flatten)]
        source: IrrepSource,
    },
    /// Classify a function at every non-trivial (k, i).
    Classify {
        #[command(flatten)]
        input: FunctionInput,
        #[command(flatten)]
        source: IrrepSource,
    },
    /// Run the one-query circuit.
    Simulate {
        #[command(flatten)]
        input: FunctionInput,
        #[command(flatten)]
        source: IrrepSource,
        /// Irrep index k (one-based, must be non-trivial).
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Row index i (one-based).
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// Column index j (one-based).
        #[arg(long, default_value_t = 1)]
        j: usize,
        /// Include the final amplitude vector in the report.
        #[arg(long)]
        dump_state: bool,
        /// Also draw this many seeded measurements of the first register.
        #[arg(long, default_value_t = 0)]
        shots: usize,
    },
    /// Cyclotomic analyses.
    #[command(subcommand)]
    Cyclo(Cyclo),
}

#[derive(Args, Debug)]
struct PolyInput {
    /// Coefficients, ascending, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "function"
    )]
    coeffs: Option<Vec<i64>>,
    /// Function spec file with a cyclic codomain; its profile is used.
    #[arg(long)]
    function: Option<PathBuf>,
    /// Modulus n (required with --coeffs).
    #[arg(long)]
    n: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Cyclo {
    /// Coefficients of Φ_n.
    Phi { n: u64 },
    /// Non-negative decomposition of a multiple of Φ_n.
    Decompose(PolyInput),
    /// Exact test Φ_n | P.
    Balanced(PolyInput),
    /// Even-cover report and partition for a function into ℤ_n.
    Cover {
        function: PathBuf,
        /// Generator of the subgroup K for the coset report (default n/p).
        #[arg(long)]
        kgen: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    Io(String),
    Core(Error),
    Exit(u8, String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Exit(c, _) => *c,
            CliError::Core(e) => match e {
                Error::InvalidOrder(_) | Error::InvalidGroup(_) | Error::NotAssociative { .. } => 2,
                Error::Inconsistent(_) => 3,
                Error::NotBalanced(_) => 4,
                Error::TooManyPrimes { .. } => 5,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(m) | CliError::Exit(_, m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A finished report: its JSON, a summary line and the exit code.
struct Outcome {
    json: String,
    summary: String,
    code: u8,
}

fn outcome<T: Serialize>(report: &str, body: T, summary: String, code: u8) -> CliResult<Outcome> {
    let json = serde_json::to_string_pretty(&Versioned::new(report, body)).map_err(Error::from)?;
    Ok(Outcome { json, summary, code })
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_group(path: &Path) -> CliResult<FiniteGroup> {
    Ok(formats::parse_group_spec(&read(path)?)?.build()?)
}

fn load_irreps(group: &FiniteGroup, source: &IrrepSource, tol: f64) -> CliResult<IrrepSet> {
    if source.irreps == "builtin" {
        return Ok(representation::builtin_irreps(group)?);
    }
    let text = read(Path::new(&source.irreps))?;
    let file: IrrepFile = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("irrep file: {e}")))?;
    Ok(file.load(group, tol)?)
}

fn load_function(input: &FunctionInput) -> CliResult<(FunctionSpec, PromiseFunction)> {
    let spec = formats::parse_function_spec(&read(&input.function)?)?;
    let f = match &input.group {
        Some(path) => spec.build_over(load_group(path)?)?,
        None => spec.build()?,
    };
    Ok((spec, f))
}

#[derive(Serialize)]
struct IrrepSummary {
    order: usize,
    dims: Vec<usize>,
    beta: Vec<BetaEntry>,
    schur: representation::SchurReport,
}

#[derive(Serialize)]
struct BetaEntry {
    element: usize,
    label: String,
    ijk: [usize; 3],
}

#[derive(Serialize)]
struct QftReport {
    order: usize,
    unitarity: qft::UnitarityReport,
    matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct SimulateBody {
    #[serde(flatten)]
    circuit: circuit::CircuitReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<Vec<u64>>,
}

#[derive(Serialize)]
struct PhiReport {
    n: u64,
    degree: Option<usize>,
    coeffs: IntPolynomial,
}

#[derive(Serialize)]
struct BalancedReport {
    n: u64,
    polynomial: IntPolynomial,
    balanced: bool,
}

#[derive(Serialize)]
struct CoverReport {
    modulus: usize,
    check: promise::EvenCoverReport,
    partition: promise::EvenCoverPartition,
    /// `|X_i| = p_i · N_i` for each part.
    part_sizes: Vec<PartSize>,
}

#[derive(Serialize)]
struct PartSize {
    prime: u64,
    cover_count: u64,
    size: usize,
}

fn poly_input(input: &PolyInput) -> CliResult<(IntPolynomial, u64)> {
    match (&input.coeffs, &input.function) {
        (Some(c), None) => {
            let n = input
                .n
                .ok_or_else(|| CliError::Exit(1, "--n is required with --coeffs".into()))?;
            Ok((IntPolynomial::from_i64s(c), n))
        }
        (None, Some(path)) => {
            let spec = formats::parse_function_spec(&read(path)?)?;
            let f = spec.build()?;
            let profile = promise::profile_polynomial(&f)?;
            if input.n.is_some_and(|n| n as usize != profile.modulus) {
                return Err(CliError::Exit(1, "--n disagrees with the codomain order".into()));
            }
            Ok((profile.polynomial(), profile.modulus as u64))
        }
        _ => Err(CliError::Exit(1, "give exactly one of --coeffs or --function".into())),
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let tol = cli.tol;
    if !(tol > 0.0 && cli.verdict_tol > 0.0) {
        return Err(CliError::Exit(1, "tolerances must be positive".into()));
    }
    match &cli.command {
        Command::Group { spec } => {
            let g = load_group(spec)?;
            let summary = format!(
                "valid, order {}, {}",
                g.order(),
                if g.is_abelian() { "abelian" } else { "non-abelian" }
            );
            outcome("group", GroupReport::new(&g), summary, 0)
        }
        Command::Irreps { spec, source, export } => {
            let g = load_group(spec)?;
            let set = load_irreps(&g, source, tol)?;
            if *export {
                let summary = format!("{} irreps exported", set.len());
                return outcome("irrep-file", IrrepFile::from_set(&set), summary, 0);
            }
            let schur = representation::verify_schur(&set, tol);
            let summary = format!(
                "{} irreps of dimensions {:?}; Schur max deviation {:.2e}",
                set.len(),
                set.dims(),
                schur.max_deviation
            );
            let body = IrrepSummary {
                order: g.order(),
                dims: set.dims(),
                beta: g
                    .elements()
                    .map(|x| BetaEntry {
                        element: x,
                        label: g.label(x).to_string(),
                        ijk: set.beta(x).one_based(),
                    })
                    .collect(),
                schur,
            };
            outcome("irreps", body, summary, 0)
        }
        Command::Qft { spec, source } => {
            let g = load_group(spec)?;
            let set = load_irreps(&g, source, tol)?;
            let f = qft::fourier_matrix(&set);
            let unitarity = qft::verify_unitary(&f);
            let summary = format!(
                "{}x{} Fourier matrix, unitarity deviation {:.2e}",
                g.order(),
                g.order(),
                unitarity.max_deviation()
            );
            let body = QftReport {
                order: g.order(),
                unitarity,
                matrix: f.to_pairs(),
            };
            outcome("qft", body, summary, 0)
        }
        Command::Classify { input, source } => {
            let (spec, f) = load_function(input)?;
            let set = load_irreps(f.codomain(), source, tol)?;
            let mut report = formats::classify_all(&f, &set, tol)?;
            report.function_id = spec.id;
            let verdicts: Vec<String> = report
                .rows
                .iter()
                .map(|r| format!("(k={},i={}) {:?}", r.k, r.i, r.verdict))
                .collect();
            let code = if report.all_agree { 0 } else { 3 };
            let summary = if report.all_agree {
                verdicts.join(", ")
            } else {
                format!("methods disagree: {}", verdicts.join(", "))
            };
            outcome("classify", report, summary, code)
        }
        Command::Simulate {
            input,
            source,
            k,
            i,
            j,
            dump_state,
            shots,
        } => {
            let (spec, f) = load_function(input)?;
            let set = load_irreps(f.codomain(), source, tol)?;
            let idx = EntryIndex::from_one_based(*i, *j, *k)?;
            let mut report = circuit::run_djh(&f, &set, idx, cli.verdict_tol)?;
            report.function_id = spec.id;
            let samples = if *shots > 0 {
                Some(circuit::sample_first_register(&report, *shots, cli.seed)?)
            } else {
                None
            };
            if !dump_state {
                report.final_state = None;
            }
            let code = if report.verdict == CircuitVerdict::PromiseViolated {
                4
            } else {
                0
            };
            let summary = format!(
                "{:?}: Pr[first register = identity] = {:.9}",
                report.verdict, report.probability_identity
            );
            outcome(
                "simulate",
                SimulateBody {
                    circuit: report,
                    samples,
                },
                summary,
                code,
            )
        }
        Command::Cyclo(sub) => run_cyclo(sub),
    }
}

fn run_cyclo(sub: &Cyclo) -> CliResult<Outcome> {
    match sub {
        Cyclo::Phi { n } => {
            let phi = cyclotomic::cyclotomic_poly(*n)?;
            let summary = format!("Φ_{n} = {phi}");
            outcome(
                "phi",
                PhiReport {
                    n: *n,
                    degree: phi.degree(),
                    coeffs: phi,
                },
                summary,
                0,
            )
        }
        Cyclo::Decompose(input) => {
            let (g, n) = poly_input(input)?;
            let dec = cyclotomic::dephi_decompose(&g, n)?;
            let summary = match &dec.s2 {
                Some(s2) => format!("s1 = {}, s2 = {}", dec.s1, s2),
                None => format!("s = {}", dec.s1),
            };
            outcome("decompose", dec, summary, 0)
        }
        Cyclo::Balanced(input) => {
            let (g, n) = poly_input(input)?;
            let balanced = if g.degree().is_some_and(|d| d as u64 >= n) {
                cyclotomic::eval_at_root_of_unity_is_zero(&g, n)?
            } else {
                g.is_divisible_by(&cyclotomic::cyclotomic_poly(n)?)
            };
            let summary = format!("Φ_{n} {} P", if balanced { "divides" } else { "does not divide" });
            outcome(
                "balanced",
                BalancedReport {
                    n,
                    polynomial: g,
                    balanced,
                },
                summary,
                0,
            )
        }
        Cyclo::Cover { function, kgen } => {
            let spec = formats::parse_function_spec(&read(function)?)?;
            let f = spec.build()?;
            let profile: FunctionProfile = promise::profile_polynomial(&f)?;
            let n = profile.modulus;
            let partition = promise::even_cover_decompose(&f)?;
            let kgen = kgen.unwrap_or(partition.parts[0].subgroup_generator);
            let check = promise::even_cover_check(&f, kgen)?;
            let part_sizes: Vec<PartSize> = partition
                .parts
                .iter()
                .map(|p| PartSize {
                    prime: p.prime,
                    cover_count: p.cover_count(),
                    size: p.domain.len(),
                })
                .collect();
            let summary = part_sizes
                .iter()
                .map(|p| format!("|X_{}| = {} = {}·{}", p.prime, p.size, p.prime, p.cover_count))
                .collect::<Vec<_>>()
                .join(", ");
            outcome(
                "cover",
                CoverReport {
                    modulus: n,
                    check,
                    partition,
                    part_sizes,
                },
                summary,
                0,
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, format!("{}\n", out.json)).map_err(|e| e.to_string()),
                None => {
                    println!("{}", out.json);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            eprintln!("{}", out.summary);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
