//! Command-line front end: JSON in, verdicts out.
//!
//! Exit codes: 0 success, 1 check failure (a verdict came back negative or an
//! internal consistency assertion fired), 2 input error.

use std::ffi::OsString;
use std::fs;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liebialg::bialgebra::{
    double_embedding, drinfeld_double, r_matrix_witness, DoubleAlgebra,
};
use liebialg::classical::{
    admissible_roots, build_series, reproduce_families, standard_r_matrix, Series,
};
use liebialg::construction::{construct, subspace_from_group};
use liebialg::error::Error;
use liebialg::json as io;
use liebialg::liealg::LieAlgebra;
use liebialg::linalg::Matrix;
use liebialg::multivector::Multivector;
use liebialg::scalar::{GaussRational, Rational, Scalar};
use liebialg::subspace::{Ambient, Subspace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

const MAX_RANK_VAR: &str = "LIEBIALG_MAX_RANK";
const DEFAULT_MAX_RANK: usize = 6;

#[derive(Parser)]
#[command(
    name = "liebialg",
    about = "Exact Lie bialgebra computations: r-matrices and coisotropic subalgebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Path to an algebra JSON file
    #[arg(long)]
    algebra: String,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct AlgebraPiArgs {
    #[command(flatten)]
    base: AlgebraArgs,
    /// Path to a bivector JSON file
    #[arg(long)]
    pi: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity of an algebra file
    Validate(AlgebraArgs),
    /// Check that a bivector is an r-matrix
    RmatrixCheck(AlgebraPiArgs),
    /// Run the subalgebra construction for an algebra element X
    Construct {
        #[command(flatten)]
        with_pi: AlgebraPiArgs,
        /// Coordinates of X, comma separated ("1,0,2/3")
        #[arg(long)]
        x: String,
    },
    /// Run the group-element route for a matrix g of the realization
    Group {
        #[command(flatten)]
        with_pi: AlgebraPiArgs,
        /// Row-major entries of g, comma separated
        #[arg(long)]
        g: String,
    },
    /// Work with a classical series: list admissible roots or construct one
    Classical {
        /// Series letter: A, B, C or D
        #[arg(long)]
        series: String,
        /// Rank of the series
        #[arg(long)]
        rank: usize,
        /// List the roots passing the root-string condition
        #[arg(long, conflicts_with = "root")]
        list_roots: bool,
        /// Run the construction for one root, e.g. "L1-L3" or "2L1"
        #[arg(long)]
        root: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the Drinfeld double, optionally testing a subspace for the
    /// lagrangian property of its double embedding
    Double {
        #[command(flatten)]
        with_pi: AlgebraPiArgs,
        /// Path to a subspace JSON file (ambient "g")
        #[arg(long)]
        subspace: Option<String>,
    },
    /// Reproduce the tabulated coisotropic family of every admissible root
    Reproduce {
        #[arg(long)]
        series: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Result of one invocation, for both `main` and the tests.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn check_failed(stdout: String) -> Self {
        Outcome {
            code: EXIT_CHECK_FAILED,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: String) -> Self {
        Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: message,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with a zero exit
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            return Outcome {
                code,
                stdout: if code == EXIT_OK { e.to_string() } else { String::new() },
                stderr: if code == EXIT_OK { String::new() } else { e.to_string() },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::input_error(format!("error: {e}")),
    }
}

/// Either field instantiation of an algebra file.
enum Loaded {
    Q(LieAlgebra<Rational>),
    Qi(LieAlgebra<GaussRational>),
}

fn read_json(path: &str) -> Result<Value, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::invalid_input("file", format!("{path}: {e}")))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::invalid_input("file", format!("{path}: malformed JSON: {e}")))
}

fn load_algebra(path: &str) -> Result<Loaded, Error> {
    let v = read_json(path)?;
    match io::declared_field(&v)? {
        io::FieldTag::Q => Ok(Loaded::Q(io::parse_algebra::<Rational>(&v)?)),
        io::FieldTag::Qi => Ok(Loaded::Qi(io::parse_algebra::<GaussRational>(&v)?)),
    }
}

fn parse_vector<S: Scalar>(text: &str, dim: usize) -> Result<Vec<S>, Error> {
    let coords = text
        .split(',')
        .map(|c| S::parse(c.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Error::invalid_input("x", e.to_string()))?;
    if coords.len() != dim {
        return Err(Error::invalid_input(
            "x",
            format!("expected {dim} coordinates, got {}", coords.len()),
        ));
    }
    Ok(coords)
}

fn parse_square_matrix<S: Scalar>(text: &str) -> Result<Matrix<S>, Error> {
    let entries = text
        .split(',')
        .map(|c| S::parse(c.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Error::invalid_input("g", e.to_string()))?;
    let size = (entries.len() as f64).sqrt().round() as usize;
    if size * size != entries.len() {
        return Err(Error::invalid_input(
            "g",
            format!("{} entries do not form a square matrix", entries.len()),
        ));
    }
    Ok(Matrix::from_fn(size, size, |r, c| {
        entries[r * size + c].clone()
    }))
}

fn parse_series_rank(series: &str, rank: usize) -> Result<(Series, usize), Error> {
    let series = Series::from_str(series)?;
    let cap = std::env::var(MAX_RANK_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_RANK);
    if rank > cap {
        return Err(Error::invalid_input(
            "rank",
            format!("rank {rank} exceeds the cap {cap} (set {MAX_RANK_VAR} to raise it)"),
        ));
    }
    Ok((series, rank))
}

/// Render a report in the requested format. Text output prints the same
/// verdict fields as the JSON, one `key: value` line each.
fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => report.to_string(),
        Format::Text => {
            let mut lines = Vec::new();
            render_text("", report, &mut lines);
            lines.join("\n")
        }
    }
}

fn render_text(prefix: &str, v: &Value, lines: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                render_text(&key, val, lines);
            }
        }
        Value::Array(items) => {
            if items.iter().all(|i| !i.is_object() && !i.is_array()) {
                let rendered: Vec<String> = items.iter().map(plain).collect();
                lines.push(format!("{prefix}: [{}]", rendered.join(", ")));
            } else {
                for (idx, item) in items.iter().enumerate() {
                    render_text(&format!("{prefix}[{idx}]"), item, lines);
                }
            }
        }
        other => lines.push(format!("{prefix}: {}", plain(other))),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dispatch(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Validate(args) => {
            let loaded = load_algebra(&args.algebra)?;
            let (report, ok) = match &loaded {
                Loaded::Q(a) => jacobi_report(a),
                Loaded::Qi(a) => jacobi_report(a),
            };
            Ok(finish(report, args.format, ok))
        }
        Command::RmatrixCheck(args) => {
            let loaded = load_algebra(&args.base.algebra)?;
            let pi_v = read_json(&args.pi)?;
            let (report, ok) = match &loaded {
                Loaded::Q(a) => rmatrix_report(a, &pi_v)?,
                Loaded::Qi(a) => rmatrix_report(a, &pi_v)?,
            };
            Ok(finish(report, args.base.format, ok))
        }
        Command::Construct { with_pi, x } => {
            let loaded = load_algebra(&with_pi.base.algebra)?;
            let pi_v = read_json(&with_pi.pi)?;
            let report = match &loaded {
                Loaded::Q(a) => construct_report(a, &pi_v, &x)?,
                Loaded::Qi(a) => construct_report(a, &pi_v, &x)?,
            };
            Ok(finish(report, with_pi.base.format, true))
        }
        Command::Group { with_pi, g } => {
            let loaded = load_algebra(&with_pi.base.algebra)?;
            let pi_v = read_json(&with_pi.pi)?;
            let report = match &loaded {
                Loaded::Q(a) => group_report(a, &pi_v, &g)?,
                Loaded::Qi(a) => group_report(a, &pi_v, &g)?,
            };
            Ok(finish(report, with_pi.base.format, true))
        }
        Command::Classical {
            series,
            rank,
            list_roots,
            root,
            format,
        } => {
            let (series, rank) = parse_series_rank(&series, rank)?;
            if list_roots {
                let (_, rd) = build_series::<Rational>(series, rank)?;
                let roots: Vec<String> = admissible_roots(&rd)?
                    .iter()
                    .map(|r| r.to_string())
                    .collect();
                return Ok(finish(json!(roots), format, true));
            }
            let Some(root_text) = root else {
                return Err(Error::invalid_input(
                    "root",
                    "pass either --list-roots or --root SPEC",
                ));
            };
            let (alg, rd) = build_series::<Rational>(series, rank)?;
            let root = rd.parse_root(&root_text)?;
            let pi = standard_r_matrix(&alg, &rd)?;
            let x = rd.generator_vector(&root).expect("parse_root checked membership");
            let report = construct(&alg, &pi, &x)?;
            Ok(finish(io::construction_report_to_json(&report), format, true))
        }
        Command::Double { with_pi, subspace } => {
            let loaded = load_algebra(&with_pi.base.algebra)?;
            let pi_v = read_json(&with_pi.pi)?;
            let subspace_v = subspace.map(|p| read_json(&p)).transpose()?;
            let (report, ok) = match &loaded {
                Loaded::Q(a) => double_report(a, &pi_v, subspace_v.as_ref())?,
                Loaded::Qi(a) => double_report(a, &pi_v, subspace_v.as_ref())?,
            };
            Ok(finish(report, with_pi.base.format, ok))
        }
        Command::Reproduce {
            series,
            rank,
            format,
        } => {
            let (series, rank) = parse_series_rank(&series, rank)?;
            let rows = reproduce_families::<Rational>(series, rank)?;
            let mut all_ok = true;
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let ok = row.matched && row.report.is_coisotropic();
                    all_ok &= ok;
                    json!({
                        "root": row.root.to_string(),
                        "dim": row.report.dim(),
                        "condi_holds": row.report.condition.holds,
                        "match": row.matched,
                        "is_coisotropic": row.report.is_coisotropic(),
                    })
                })
                .collect();
            let report = json!({
                "series": series.letter().to_string(),
                "rank": rank,
                "rows": rows_json,
                "all_match": all_ok,
            });
            Ok(finish(report, format, all_ok))
        }
    }
}

fn finish(report: Value, format: Format, ok: bool) -> Outcome {
    let rendered = render(&report, format);
    if ok {
        Outcome::ok(rendered)
    } else {
        Outcome::check_failed(rendered)
    }
}

fn jacobi_report<S: Scalar>(alg: &LieAlgebra<S>) -> (Value, bool) {
    match alg.jacobi_check() {
        None => (json!({"jacobi": true}), true),
        Some((i, j, k)) => (json!({"jacobi": false, "witness": [i, j, k]}), false),
    }
}

fn load_pi<S: Scalar>(alg: &LieAlgebra<S>, pi_v: &Value) -> Result<Multivector<S>, Error> {
    io::parse_bivector::<S>(pi_v, alg.dim())
}

fn rmatrix_report<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi_v: &Value,
) -> Result<(Value, bool), Error> {
    let pi = load_pi(alg, pi_v)?;
    Ok(match r_matrix_witness(alg, &pi)? {
        None => (json!({"r_matrix": true}), true),
        Some(i) => (json!({"r_matrix": false, "witness": i}), false),
    })
}

fn construct_report<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi_v: &Value,
    x_text: &str,
) -> Result<Value, Error> {
    let pi = load_pi(alg, pi_v)?;
    let x = parse_vector::<S>(x_text, alg.dim())?;
    let report = construct(alg, &pi, &x)?;
    Ok(io::construction_report_to_json(&report))
}

fn group_report<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi_v: &Value,
    g_text: &str,
) -> Result<Value, Error> {
    let pi = load_pi(alg, pi_v)?;
    let g = parse_square_matrix::<S>(g_text)?;
    let report = subspace_from_group(alg, &pi, &g)?;
    Ok(io::group_report_to_json(&report))
}

fn double_report<S: Scalar>(
    alg: &LieAlgebra<S>,
    pi_v: &Value,
    subspace_v: Option<&Value>,
) -> Result<(Value, bool), Error> {
    let pi = load_pi(alg, pi_v)?;
    let double: DoubleAlgebra<S> = drinfeld_double(alg, &pi)?;
    let pairing_ok = double.pairing_invariance_witness().is_none();
    let mut ok = pairing_ok;
    let mut report = json!({
        "dim": double.algebra.dim(),
        "jacobi": true,
        "pairing_ad_invariant": pairing_ok,
    });
    if let Some(v) = subspace_v {
        let k: Subspace<S> = io::parse_subspace(v, alg.dim())?;
        if k.ambient() != Ambient::Algebra {
            return Err(Error::invalid_input(
                "ambient",
                "the double verb expects a subspace of the algebra itself",
            ));
        }
        let embedded = double_embedding(&k);
        let lagrangian = double.is_lagrangian(&embedded)?;
        ok &= lagrangian;
        report["subspace_dim"] = json!(k.dim());
        report["lagrangian"] = json!(lagrangian);
    }
    Ok((report, ok))
}
