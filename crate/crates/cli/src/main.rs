//! Command-line surface: parse root-datum + fan spec files, dispatch the
//! computations, and emit machine-readable JSON reports.
//!
//! Exit codes: 0 success, 1 domain error (inadmissible fan, non-prime
//! input, ...), 2 I/O or parse failure. Every error path emits a single
//! structured error object on stderr. Output is byte-identical for
//! identical input and flags.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use toromotive::error::Error;
use toromotive::fan::{validate_fan, weyl_chamber_fan, Fan};
use toromotive::poincare::PoincarePolynomial;
use toromotive::root_datum::{build_root_datum, Family, LatticeKind, RootDatum};
use toromotive::specfile::SpecFile;

#[derive(Parser)]
#[command(
    name = "toromotive",
    version,
    about = "Poincaré polynomials of toroidal group compactifications and \
             motivic decompositions, in exact arithmetic"
)]
struct Cli {
    /// Additionally render polynomials in t-notation.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generating polynomials of flag varieties, toric varieties and
    /// toroidal compactifications.
    #[command(subcommand)]
    Poincare(PoincareCmd),
    /// Decompose a Poincaré polynomial into the Rost pattern plus
    /// shifted Severi-Brauer polynomials.
    Decompose {
        /// Prime degree of the division algebra.
        #[arg(long)]
        p: u64,
        /// Degree of the Rost pattern.
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Ascending coefficients, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        coeffs: Vec<u64>,
    },
    /// Graded presentation of the Chow ring.
    #[command(name = "chow-ring")]
    ChowRing {
        #[arg(long)]
        p: u64,
        /// The nonsplit-torsor answer instead (characteristic 0).
        #[arg(long)]
        torsor: bool,
    },
    /// Fan construction, validation and refinement.
    #[command(subcommand)]
    Fan(FanCmd),
}

#[derive(Subcommand)]
enum PoincareCmd {
    /// Length generating function of the Weyl group.
    Flag {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "simply_connected")]
        lattice: String,
    },
    /// Fixed-point count of a smooth complete toric variety.
    Toric { spec: PathBuf },
    /// Factored polynomial of the toroidal compactification of an
    /// admissible fan.
    Compactification { spec: PathBuf },
}

#[derive(Subcommand)]
enum FanCmd {
    /// Validate a fan and print the report.
    Check { spec: PathBuf },
    /// Write the Weyl-chamber fan of a root datum as a spec file.
    Chambers {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "simply_connected")]
        lattice: String,
        /// Also write the spec to a file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Stellar subdivision at a ray, optionally closed under the Weyl
    /// action.
    Subdivide {
        spec: PathBuf,
        /// Ray in cocharacter coordinates, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        ray: String,
        #[arg(long)]
        symmetrize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum CliError {
    /// Domain error: exit code 1.
    Domain(Error),
    /// I/O or parse failure: exit code 2.
    Parse(String, String),
}

impl CliError {
    fn parse(kind: &str, message: impl Into<String>) -> CliError {
        CliError::Parse(kind.into(), message.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(..) => 2,
        }
    }

    fn kind(&self) -> String {
        match self {
            CliError::Domain(e) => e.kind().into(),
            CliError::Parse(kind, _) => kind.clone(),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Domain(e) => e.to_string(),
            CliError::Parse(_, msg) => msg.clone(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::SpecFile(msg) => CliError::parse("SpecFile", msg),
            other => CliError::Domain(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo = echo(&cli.command);
    if let Err(e) = configure_threads().and_then(|()| run(&cli)) {
        let error = json!({
            "command": command_echo,
            "status": "error",
            "error": {"kind": e.kind(), "message": e.message()},
        });
        eprintln!("{error}");
        return ExitCode::from(e.exit_code());
    }
    ExitCode::SUCCESS
}

/// Optional cap on internal parallelism.
fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("TOROMOTIVE_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.parse().map_err(|_| {
        CliError::parse(
            "Environment",
            format!("TOROMOTIVE_THREADS must be a positive integer, got \"{value}\""),
        )
    })?;
    if threads == 0 {
        return Err(CliError::parse(
            "Environment",
            "TOROMOTIVE_THREADS must be a positive integer, got \"0\"",
        ));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::parse("Environment", e.to_string()))
}

fn echo(command: &Command) -> String {
    match command {
        Command::Poincare(PoincareCmd::Flag { .. }) => "poincare flag".into(),
        Command::Poincare(PoincareCmd::Toric { .. }) => "poincare toric".into(),
        Command::Poincare(PoincareCmd::Compactification { .. }) => {
            "poincare compactification".into()
        }
        Command::Decompose { .. } => "decompose".into(),
        Command::ChowRing { .. } => "chow-ring".into(),
        Command::Fan(FanCmd::Check { .. }) => "fan check".into(),
        Command::Fan(FanCmd::Chambers { .. }) => "fan chambers".into(),
        Command::Fan(FanCmd::Subdivide { .. }) => "fan subdivide".into(),
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Poincare(cmd) => run_poincare(cmd, cli.pretty),
        Command::Decompose { p, n, coeffs } => run_decompose(*p, *n, coeffs),
        Command::ChowRing { p, torsor } => run_chow_ring(*p, *torsor),
        Command::Fan(cmd) => run_fan(cmd, cli.pretty),
    }
}

fn parse_datum(family: &str, rank: usize, lattice: &str) -> Result<RootDatum, CliError> {
    let mut letters = family.chars();
    let (Some(letter), None) = (letters.next(), letters.next()) else {
        return Err(CliError::parse(
            "Arguments",
            format!("family must be a single letter A-G, got \"{family}\""),
        ));
    };
    let family = Family::from_letter(letter).ok_or_else(|| {
        CliError::parse(
            "Arguments",
            format!("family must be a single letter A-G, got \"{letter}\""),
        )
    })?;
    let kind = parse_lattice(lattice)?;
    Ok(build_root_datum(family, rank, kind)?)
}

fn parse_lattice(lattice: &str) -> Result<LatticeKind, CliError> {
    match lattice {
        "simply_connected" => Ok(LatticeKind::SimplyConnected),
        "adjoint" => Ok(LatticeKind::Adjoint),
        other => Err(CliError::parse(
            "Arguments",
            format!("lattice must be \"simply_connected\" or \"adjoint\", got \"{other}\""),
        )),
    }
}

fn load_spec(path: &Path) -> Result<SpecFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::parse("Io", format!("{}: {e}", path.display())))?;
    Ok(SpecFile::from_json(&text)?)
}

fn digest(canonical: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let hash = hasher.finalize();
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

fn print_report(command: &str, input_digest: &str, result: Value) {
    let report = json!({
        "command": command,
        "input_digest": input_digest,
        "status": "ok",
        "result": result,
    });
    println!("{report}");
}

fn coeff_array(poly: &PoincarePolynomial) -> Value {
    Value::Array(poly.coeffs().iter().map(|&c| json!(c)).collect())
}

fn run_poincare(cmd: &PoincareCmd, pretty: bool) -> Result<(), CliError> {
    match cmd {
        PoincareCmd::Flag {
            family,
            rank,
            lattice,
        } => {
            let rd = parse_datum(family, *rank, lattice)?;
            let poly = toromotive::poincare::flag_poincare(&rd)?;
            let mut result = Map::new();
            result.insert("coeffs".into(), coeff_array(&poly));
            if pretty {
                result.insert("pretty".into(), json!(poly.to_string()));
            }
            let canonical = format!("flag family={family} rank={rank} lattice={lattice}");
            print_report("poincare flag", &digest(&canonical), Value::Object(result));
            Ok(())
        }
        PoincareCmd::Toric { spec } => {
            let spec = load_spec(spec)?;
            let fan = spec.fan()?;
            let poly = match spec.root_datum()? {
                Some(rd) => toromotive::poincare::toric_poincare(&rd, &fan)?,
                None => toromotive::poincare::toric_poincare_standard(&fan)?,
            };
            let mut result = Map::new();
            result.insert("coeffs".into(), coeff_array(&poly));
            if pretty {
                result.insert("pretty".into(), json!(poly.to_string()));
            }
            print_report(
                "poincare toric",
                &digest(&spec.to_canonical_json()),
                Value::Object(result),
            );
            Ok(())
        }
        PoincareCmd::Compactification { spec } => {
            let spec = load_spec(spec)?;
            let rd = spec.root_datum()?.ok_or_else(|| {
                CliError::parse("SpecFile", "compactification requires a root_datum section")
            })?;
            let fan = spec.fan()?;
            let factored = toromotive::poincare::compactification_poincare(&rd, &fan)?;
            let report = validate_fan(&rd, &fan)?;
            let fixed_points = toromotive::poincare::fixed_point_count(&rd, &fan)?;
            let mut result = Map::new();
            result.insert("coeffs".into(), coeff_array(&factored.product));
            result.insert(
                "factored".into(),
                json!({
                    "first": coeff_array(&factored.first_factor),
                    "flag": coeff_array(&factored.flag_factor),
                }),
            );
            result.insert("s".into(), json!(report.max_cone_count));
            result.insert("k".into(), json!(report.negative_chamber_cones));
            result.insert("fixed_points".into(), json!(fixed_points));
            if pretty {
                result.insert("pretty".into(), json!(factored.to_string()));
            }
            print_report(
                "poincare compactification",
                &digest(&spec.to_canonical_json()),
                Value::Object(result),
            );
            Ok(())
        }
    }
}

fn run_decompose(p: u64, n: u32, coeffs: &[u64]) -> Result<(), CliError> {
    let poly = PoincarePolynomial::from_coeffs(coeffs.to_vec());
    let decomposition = toromotive::motivic::decompose(&poly, p, n)?;
    let sb: Map<String, Value> = decomposition
        .sb_multiplicities()
        .iter()
        .map(|(&shift, &mult)| (shift.to_string(), json!(mult)))
        .collect();
    let result = json!({
        "rost_shifts": decomposition.rost_shifts(),
        "sb": sb,
    });
    let canonical = format!(
        "decompose p={p} n={n} coeffs={}",
        coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    print_report("decompose", &digest(&canonical), result);
    Ok(())
}

fn run_chow_ring(p: u64, torsor: bool) -> Result<(), CliError> {
    let ring = if torsor {
        toromotive::motivic::chow_torsor(p)?
    } else {
        toromotive::motivic::chow_ring_sl1(p)?
    };
    let mut result = Map::new();
    for (&degree, group) in ring.components() {
        result.insert(degree.to_string(), json!(group.to_string()));
    }
    if !ring.relations().is_empty() {
        result.insert("relations".into(), json!(ring.relations()));
    }
    if let Some(note) = ring.note() {
        result.insert("note".into(), json!(note));
    }
    let canonical = format!("chow-ring p={p} torsor={torsor}");
    print_report("chow-ring", &digest(&canonical), Value::Object(result));
    Ok(())
}

fn emit_spec(spec: &SpecFile, output: Option<&PathBuf>) -> Result<(), CliError> {
    let text = spec.to_pretty_json();
    if let Some(path) = output {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::parse("Io", format!("{}: {e}", path.display())))?;
    }
    println!("{text}");
    Ok(())
}

fn run_fan(cmd: &FanCmd, _pretty: bool) -> Result<(), CliError> {
    match cmd {
        FanCmd::Check { spec } => {
            let spec = load_spec(spec)?;
            let rd = spec.root_datum()?.ok_or_else(|| {
                CliError::parse("SpecFile", "fan check requires a root_datum section")
            })?;
            let fan = spec.fan()?;
            let report = validate_fan(&rd, &fan)?;
            let result = serde_json::to_value(report)
                .expect("fan reports serialize");
            print_report("fan check", &digest(&spec.to_canonical_json()), result);
            Ok(())
        }
        FanCmd::Chambers {
            family,
            rank,
            lattice,
            output,
        } => {
            let rd = parse_datum(family, *rank, lattice)?;
            let fan = weyl_chamber_fan(&rd)?;
            let spec = SpecFile::from_fan(Some(&rd), &fan);
            emit_spec(&spec, output.as_ref())
        }
        FanCmd::Subdivide {
            spec,
            ray,
            symmetrize,
            output,
        } => {
            let spec = load_spec(spec)?;
            let fan = spec.fan()?;
            let ray: Vec<i64> = ray
                .split(',')
                .map(|part| {
                    part.trim().parse().map_err(|_| {
                        CliError::parse(
                            "Arguments",
                            format!("ray coordinates must be integers, got \"{part}\""),
                        )
                    })
                })
                .collect::<Result<_, _>>()?;
            let subdivided = toromotive::fan::stellar_subdivide(&fan, &ray)?;
            let (rd, result): (Option<RootDatum>, Fan) = if *symmetrize {
                let rd = spec.root_datum()?.ok_or_else(|| {
                    CliError::parse("SpecFile", "--symmetrize requires a root_datum section")
                })?;
                let symmetrized = toromotive::fan::symmetrize(&rd, &subdivided)?;
                (Some(rd), symmetrized)
            } else {
                (spec.root_datum()?, subdivided)
            };
            let out_spec = SpecFile::from_fan(rd.as_ref(), &result);
            emit_spec(&out_spec, output.as_ref())
        }
    }
}
