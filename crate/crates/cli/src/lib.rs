//! The `dnull` command line: replay of the elimination argument and the
//! pointwise shape-operator analyses, with JSON or text reports on stdout
//! and a fixed exit-code contract.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, positive verdict |
//! | 1 | negative verdict |
//! | 2 | usage or input error |
//! | 3 | internal checkpoint failure |

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dnull_geometry::surface::GridDiagnostics;
use dnull_geometry::{
    catalog_shape_operator, curvature_report, detect_ideal_pattern, ideality_gap, null2type_check,
    parse_case, parse_operator, shape_operator_from_grid, to_json_17, Case, DeltaConfig,
    GeometryError, IdealPattern, Method, Null2TypeReport, ShapeOperator, SpectrumReport,
    SurfaceSpec, Witness,
};
use dnull_replay::{replay_all, ReplayConfig, ReplayError, SignReading, Verdict};
use dnull_sym::{Execution, Rational};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dnull",
    version,
    about = "Replay and shape-operator diagnostics for null 2-type hypersurfaces"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// δ(r) of a shape operator against its universal bound.
    Delta(DeltaArgs),
    /// Extremal eigenvalue pattern and equality in the r = 3 bound.
    Ideal(AnalysisArgs),
    /// Null 2-type screening at a point with constant mean curvature.
    Null2(Null2Args),
    /// Exact replay of the elimination argument for one dimension.
    Replay(ReplayArgs),
    /// Shape operator of a catalog surface or a sampled immersion.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
pub struct OperatorSource {
    /// Principal curvatures, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["matrix", "input"])]
    pub spectrum: Option<Vec<f64>>,
    /// Symmetric matrix as a JSON array of rows.
    #[arg(long, conflicts_with = "input")]
    pub matrix: Option<String>,
    /// JSON file: {"n", "matrix"}, {"spectrum"}, a catalog surface or a sampled grid.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    #[command(flatten)]
    pub source: OperatorSource,
    #[arg(long, default_value_t = 32)]
    pub restarts: usize,
    /// Seed of the optimizer restarts.
    #[arg(long, env = "DNULL_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[arg(long)]
    pub r: usize,
    #[command(flatten)]
    pub common: AnalysisArgs,
    /// Exit 1 unless the bound is attained.
    #[arg(long)]
    pub assert_ideal: bool,
}

#[derive(Debug, Args)]
pub struct Null2Args {
    #[command(flatten)]
    pub source: OperatorSource,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Drop the constant mean curvature assumption (not supported pointwise).
    #[arg(long)]
    pub no_constant_h: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Reference,
    Strict,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    #[arg(long)]
    pub n: u32,
    /// `symbolic` or a nonzero rational such as `1` or `-3/2`.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, value_enum, default_value_t = Reading::Reference)]
    pub reading: Reading,
    /// Include full polynomial texts in the report.
    #[arg(long)]
    pub keep: bool,
    /// Run the resultant on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    SphericalCylinder,
    RoundSphere,
    Hyperplane,
    Graph,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Surface or grid JSON file.
    #[arg(long, conflicts_with = "kind")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, required_unless_present = "input")]
    pub kind: Option<Kind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Hessian for `graph`, JSON array of rows.
    #[arg(long)]
    pub hessian: Option<String>,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<GeometryError> for Failure {
    fn from(e: GeometryError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<ReplayError> for Failure {
    fn from(e: ReplayError) -> Self {
        let code = match e {
            ReplayError::DimensionTooSmall(_) | ReplayError::InvalidConfig(_) => EXIT_USAGE,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Rendered output plus exit code.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn load_operator(src: &OperatorSource) -> Result<ShapeOperator, Failure> {
    if let Some(s) = &src.spectrum {
        return Ok(ShapeOperator::diagonal(s)?);
    }
    if let Some(m) = &src.matrix {
        let rows: Vec<Vec<f64>> =
            serde_json::from_str(m).map_err(|e| Failure::usage(format!("--matrix: {e}")))?;
        return Ok(ShapeOperator::from_rows(&rows)?);
    }
    if let Some(path) = &src.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        return Ok(parse_operator(&text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?);
    }
    Err(Failure::usage(
        "one of --spectrum, --matrix or --input is required",
    ))
}

fn delta_config(a: &AnalysisArgs) -> Result<DeltaConfig, Failure> {
    if !(a.tol > 0.0) {
        return Err(Failure::usage(format!(
            "--tol must be positive (got {})",
            a.tol
        )));
    }
    Ok(DeltaConfig {
        restarts: a.restarts,
        seed: a.seed,
        tol: a.tol,
        ..Default::default()
    })
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeltaReport {
    pub spectrum: SpectrumReport,
    pub r: usize,
    pub delta: f64,
    pub tau: f64,
    pub inf_tau_l: f64,
    pub bound: f64,
    pub gap: f64,
    pub ideal: bool,
    pub method: Method,
    pub witness: Witness,
    pub combinatorial: f64,
    pub optimizer: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealReport {
    pub spectrum: SpectrumReport,
    pub pattern: Option<IdealPattern>,
    pub delta: f64,
    pub bound: f64,
    pub gap: f64,
    pub ideal: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Null2Report {
    pub spectrum: SpectrumReport,
    #[serde(flatten)]
    pub check: Null2TypeReport,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spec: Option<SurfaceSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid: Option<GridDiagnostics>,
    pub matrix: Vec<Vec<f64>>,
    pub spectrum: SpectrumReport,
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => to_json_17(value),
        Format::Text => text(),
    }
}

fn spectrum_text(s: &SpectrumReport) -> String {
    let l: Vec<String> = s
        .principal_curvatures
        .iter()
        .map(|v| format!("{v}"))
        .collect();
    format!(
        "principal curvatures: {}\nH: {}\ntrA2: {}\ntau: {}\n",
        l.join(", "),
        s.h,
        s.tr_a2,
        s.tau
    )
}

fn delta(format: Format, args: &DeltaArgs) -> Result<Outcome, Failure> {
    let a = load_operator(&args.common.source)?;
    let cfg = delta_config(&args.common)?;
    let g = ideality_gap(&a, args.r, &cfg)?;
    let rep = DeltaReport {
        spectrum: curvature_report(&a),
        r: args.r,
        delta: g.delta.delta,
        tau: g.delta.tau,
        inf_tau_l: g.delta.inf_tau_l,
        bound: g.bound,
        gap: g.gap,
        ideal: g.ideal,
        method: g.delta.method,
        witness: g.delta.witness.clone(),
        combinatorial: g.delta.combinatorial,
        optimizer: g.delta.optimizer,
    };
    let stdout = render(format, &rep, || {
        format!(
            "{}r: {}\ndelta: {}\ninf tau(L): {}\nbound: {}\ngap: {}\nideal: {}\nmethod: {:?}\n",
            spectrum_text(&rep.spectrum),
            rep.r,
            rep.delta,
            rep.inf_tau_l,
            rep.bound,
            rep.gap,
            rep.ideal,
            rep.method
        )
    });
    let code = if args.assert_ideal && !rep.ideal {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    Ok(Outcome { code, stdout })
}

fn ideal(format: Format, args: &AnalysisArgs) -> Result<Outcome, Failure> {
    let a = load_operator(&args.source)?;
    let cfg = delta_config(args)?;
    if a.n < 4 {
        return Err(Failure::usage(format!(
            "the r = 3 pattern needs n >= 4 (got n = {})",
            a.n
        )));
    }
    let g = ideality_gap(&a, 3, &cfg)?;
    let rep = IdealReport {
        spectrum: curvature_report(&a),
        pattern: detect_ideal_pattern(&a, cfg.tol),
        delta: g.delta.delta,
        bound: g.bound,
        gap: g.gap,
        ideal: g.ideal,
    };
    let stdout = render(format, &rep, || {
        let pattern = match &rep.pattern {
            Some(p) => format!(
                "({}, {}, {}) repeated {} x{}",
                p.alpha, p.beta, p.gamma, p.repeated, p.multiplicity
            ),
            None => "none".into(),
        };
        format!(
            "{}pattern: {pattern}\ndelta(3): {}\nbound: {}\ngap: {}\nideal: {}\n",
            spectrum_text(&rep.spectrum),
            rep.delta,
            rep.bound,
            rep.gap,
            rep.ideal
        )
    });
    Ok(Outcome {
        code: if rep.ideal { EXIT_OK } else { EXIT_NEGATIVE },
        stdout,
    })
}

fn null2(format: Format, args: &Null2Args) -> Result<Outcome, Failure> {
    let a = load_operator(&args.source)?;
    if !(args.tol > 0.0) {
        return Err(Failure::usage(format!(
            "--tol must be positive (got {})",
            args.tol
        )));
    }
    let check = null2type_check(&a, !args.no_constant_h, args.tol)?;
    let rep = Null2Report {
        spectrum: curvature_report(&a),
        check,
    };
    let stdout = render(format, &rep, || {
        let status = serde_json::to_value(rep.check.status)
            .expect("enum")
            .as_str()
            .unwrap_or_default()
            .to_string();
        let a = rep.check.a.map(|v| format!("a: {v}\n")).unwrap_or_default();
        format!("{}status: {status}\n{a}", spectrum_text(&rep.spectrum))
    });
    Ok(Outcome {
        code: if rep.check.is_candidate() {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        },
        stdout,
    })
}

fn replay(format: Format, args: &ReplayArgs) -> Result<Outcome, Failure> {
    let mut cfg = ReplayConfig::new(args.n).with_reading(match args.reading {
        Reading::Reference => SignReading::Reference,
        Reading::Strict => SignReading::Strict,
    });
    if args.a != "symbolic" {
        let value: Rational = args
            .a
            .parse()
            .map_err(|e| Failure::usage(format!("--a: {e}")))?;
        cfg = cfg.with_numeric_a(value);
    }
    if args.keep {
        cfg = cfg.keeping_intermediates();
    }
    if args.sequential {
        cfg = cfg.with_execution(Execution::Sequential);
    }
    let rep = replay_all(&cfg)?;
    let stdout = match format {
        Format::Json => rep.to_json_string(),
        Format::Text => rep.to_text(),
    };
    let code = if rep.verdict == Verdict::HLocallyConstant {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Ok(Outcome { code, stdout })
}

fn catalog(format: Format, args: &CatalogArgs) -> Result<Outcome, Failure> {
    let (spec, grid, op) = if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        match parse_case(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))? {
            Case::Spec(s) => {
                let op = catalog_shape_operator(&s)?;
                (Some(s), None, op)
            }
            Case::Grid(g) => {
                let (op, diag) = shape_operator_from_grid(&g)?;
                (None, Some(diag), op)
            }
        }
    } else {
        let need_n = || {
            args.n
                .ok_or_else(|| Failure::usage("--n is required for this kind"))
        };
        let spec = match args.kind.expect("clap requires --kind without --input") {
            Kind::SphericalCylinder => SurfaceSpec::SphericalCylinder {
                p: args
                    .p
                    .ok_or_else(|| Failure::usage("--p is required for spherical-cylinder"))?,
                n: need_n()?,
                radius: args.radius,
            },
            Kind::RoundSphere => SurfaceSpec::RoundSphere {
                n: need_n()?,
                radius: args.radius,
            },
            Kind::Hyperplane => SurfaceSpec::Hyperplane { n: need_n()? },
            Kind::Graph => {
                let h = args
                    .hessian
                    .as_ref()
                    .ok_or_else(|| Failure::usage("--hessian is required for graph"))?;
                let rows = serde_json::from_str(h)
                    .map_err(|e| Failure::usage(format!("--hessian: {e}")))?;
                SurfaceSpec::Graph {
                    hessian: rows,
                    n: args.n,
                }
            }
        };
        let op = catalog_shape_operator(&spec)?;
        (Some(spec), None, op)
    };
    let rep = CatalogReport {
        spec,
        grid,
        matrix: dnull_geometry::shape::to_rows(&op.matrix),
        spectrum: curvature_report(&op),
    };
    let stdout = render(format, &rep, || spectrum_text(&rep.spectrum));
    Ok(Outcome {
        code: EXIT_OK,
        stdout,
    })
}

pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Delta(a) => delta(cli.format, a),
        Command::Ideal(a) => ideal(cli.format, a),
        Command::Null2(a) => null2(cli.format, a),
        Command::Replay(a) => replay(cli.format, a),
        Command::Catalog(a) => catalog(cli.format, a),
    }
}

/// Parse `args`, run, write the report or diagnostics, return the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
