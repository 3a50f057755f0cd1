//! Command-line surface.
//!
//! Every subcommand prints JSON lines on standard output, preceded by a
//! `{"meta":{...}}` header unless `--no-meta` is given. Errors are printed to
//! standard error as one JSON line and end the process with exit code 3.
//! `verify` exits 0, 1 or 2 for a verified claim, a refuted claim or an
//! exhausted search budget.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::builtins;
use crate::complex::{Complex, VertexId};
use crate::deform::{self, GSpec};
use crate::dos::{self, Operator, DEFAULT_MAX_DENSE};
use crate::error::{invalid, Error, Result};
use crate::io;
use crate::potts::{self, Coloring};
use crate::spectral::{self, DEFAULT_TOL};
use crate::topology::{Search, DEFAULT_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "isospectral", version, about = "Dirac deformations, refinement spectra and level sets of simplicial complexes")]
pub struct Cli {
    /// Do not print the leading meta line.
    #[arg(long, global = true)]
    pub no_meta: bool,

    /// Cap on worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical complex JSON with f-vector and Euler characteristic.
    Build {
        #[command(flatten)]
        source: Source,
        /// Number of Barycentric refinements applied to the source.
        #[arg(long, default_value_t = 0)]
        refine: usize,
        /// Write the complex JSON here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Spectra along the refinement sequence with l1 distances of the spectral functions.
    #[command(alias = "dos")]
    Spectrum {
        #[command(flatten)]
        source: Source,
        /// Number of refinement generations after the source.
        #[arg(long, default_value_t = 0)]
        refine: usize,
        #[arg(long, default_value = "kirchhoff")]
        operator: Operator,
        /// Largest matrix that is diagonalized.
        #[arg(long, default_value_t = DEFAULT_MAX_DENSE)]
        max_dense: usize,
        /// Eigenvalue CSV prefix; generation m goes to PREFIX_gen{m}.csv.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Isospectral QR deformation of the Dirac matrix.
    Deform {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        refine: usize,
        /// Polynomial coefficients of g, constant term first.
        #[arg(long, default_value = "0,1")]
        g: String,
        /// Comma separated deformation times.
        #[arg(long, default_value = "1")]
        t: String,
        /// Also integrate the Lax equation with this many RK4 steps.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_DENSE)]
        max_dense: usize,
        /// CSV prefix for the deformed matrices; time index i goes to PREFIX_t{i}.csv.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Level set of one coloring.
    Levelset {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        refine: usize,
        /// Number of colors; the level set has codimension values - 1.
        #[arg(long, default_value_t = 2)]
        values: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use the constant coloring with this value.
        #[arg(long, conflicts_with = "coloring")]
        constant: Option<u32>,
        /// Read the coloring from a file of `vertex value` lines.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Betti statistics of the level sets of random colorings.
    Stats {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        refine: usize,
        #[arg(long, default_value_t = 2)]
        values: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check every nonempty level set for the manifold property.
        #[arg(long)]
        check: bool,
    },
    /// Check a topological claim: manifold:m, sphere:d or contractible.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        refine: usize,
        #[arg(long)]
        claim: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Builtin name, e.g. octahedron, cycle:7, octahedron*cycle:7.
    #[arg(long, group = "src")]
    pub builtin: Option<String>,
    /// Complex JSON file.
    #[arg(long, group = "src")]
    pub input: Option<PathBuf>,
    /// Edge list; the source is its Whitney complex.
    #[arg(long, group = "src")]
    pub graph: Option<PathBuf>,
    /// Comma separated builtins to join.
    #[arg(long, group = "src")]
    pub join: Option<String>,
    /// Dimension for a bare cross-polytope.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Take the downward closure of the input instead of rejecting it.
    #[arg(long)]
    pub close: bool,
}

impl Source {
    pub fn load(&self) -> Result<Complex> {
        if let Some(name) = &self.builtin {
            builtins::builtin(name, self.dim)
        } else if let Some(names) = &self.join {
            builtins::builtin(&names.replace(',', "*"), self.dim)
        } else if let Some(path) = &self.input {
            io::parse_complex(&fs::read_to_string(path)?, self.close)
        } else if let Some(path) = &self.graph {
            let (g, ids) = io::parse_edge_list(&fs::read_to_string(path)?)?;
            io::whitney_with_ids(&g, &ids)
        } else {
            invalid("no source given: use --builtin, --join, --input or --graph")
        }
    }

    fn describe(&self) -> String {
        if let Some(b) = &self.builtin {
            b.clone()
        } else if let Some(j) = &self.join {
            j.replace(',', "*")
        } else if let Some(p) = self.input.as_ref().or(self.graph.as_ref()) {
            p.display().to_string()
        } else {
            String::new()
        }
    }
}

fn load_refined(source: &Source, refine: usize) -> Result<Complex> {
    let mut c = source.load()?;
    for _ in 0..refine {
        c = builtins::renumber_from_one(&c.barycentric_refine());
    }
    Ok(c)
}

/// Parsed `--claim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Manifold(i64),
    Sphere(i64),
    Contractible,
}

impl std::str::FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let dim = |a: &str| a.parse::<i64>().map_err(|_| Error::InvalidInput(format!("bad dimension in claim '{s}'")));
        match s.split_once(':') {
            Some(("manifold", a)) => Ok(Claim::Manifold(dim(a)?)),
            Some(("sphere", a)) => Ok(Claim::Sphere(dim(a)?)),
            None if s == "contractible" => Ok(Claim::Contractible),
            _ => invalid(format!("unknown claim '{s}' (manifold:m|sphere:d|contractible)")),
        }
    }
}

impl std::fmt::Display for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Claim::Manifold(m) => write!(f, "manifold:{m}"),
            Claim::Sphere(d) => write!(f, "sphere:{d}"),
            Claim::Contractible => f.write_str("contractible"),
        }
    }
}

fn parse_times(text: &str) -> Result<Vec<f64>> {
    let times: Vec<f64> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| Error::InvalidInput(format!("bad time '{s}'"))))
        .collect::<Result<_>>()?;
    if times.is_empty() {
        return invalid("--t needs at least one value");
    }
    Ok(times)
}

fn parse_coloring(text: &str, k: u32) -> Result<Coloring> {
    let mut values = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()).collect();
        let [v, x] = fields.as_slice() else {
            return invalid(format!("line {}: expected `vertex value`", lineno + 1));
        };
        let bad = || Error::InvalidInput(format!("line {}: bad number", lineno + 1));
        values.insert(v.parse::<VertexId>().map_err(|_| bad())?, x.parse::<u32>().map_err(|_| bad())?);
    }
    Coloring::new(values, k)
}

fn codimension(values: u32) -> Result<u32> {
    if values < 2 {
        return invalid("--values must be at least 2");
    }
    Ok(values - 1)
}

fn line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Build { .. } => "build",
        Command::Spectrum { .. } => "spectrum",
        Command::Deform { .. } => "deform",
        Command::Levelset { .. } => "levelset",
        Command::Stats { .. } => "stats",
        Command::Verify { .. } => "verify",
    }
}

fn meta(cli: &Cli) -> Value {
    let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    json!({"meta": {
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "command": command_name(&cli.command),
        "timestamp": timestamp,
    }})
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::NotClosed { .. } => "not_closed",
        Error::NotSymmetric(_) => "not_symmetric",
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::Singular(_) => "singular",
        Error::BudgetExhausted(_) => "budget_exhausted",
        Error::TooLarge { .. } => "too_large",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

/// Single-line JSON error record.
pub fn error_json(kind: &str, message: &str) -> String {
    json!({"error": {"kind": kind, "message": message}}).to_string()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents)?;
    Ok(())
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "{}", error_json("usage", first));
            return EXIT_ERROR;
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{}", error_json(error_kind(&e), &e.to_string()));
            EXIT_ERROR
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return invalid("--threads must be positive");
        }
        // A pool built earlier in the same process keeps its size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    if !cli.no_meta {
        line(out, &meta(cli))?;
    }
    match &cli.command {
        Command::Build { source, refine, output } => {
            let c = load_refined(source, *refine)?;
            let text = io::complex_to_json(&c)?;
            match output {
                Some(path) => {
                    write_file(path, &format!("{text}\n"))?;
                    let f = c.f_vector();
                    line(out, &json!({"output": path, "f_vector": f.0, "chi": c.euler_characteristic()}))?;
                }
                None => writeln!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Spectrum { source, refine, operator, max_dense, output } => {
            let c = source.load()?;
            let gens = dos::generations(&c, *refine);
            if let Some(last) = gens.last() {
                let n = dos::operator_size(last, *operator);
                if n > *max_dense {
                    return Err(Error::TooLarge { size: n, limit: *max_dense });
                }
            }
            let mut spectra = Vec::with_capacity(gens.len());
            for (m, g) in gens.iter().enumerate() {
                let s = dos::operator_spectrum(g, *operator, *max_dense)?;
                let zeros = s.values().iter().filter(|v| v.abs() < DEFAULT_TOL).count();
                let mut record = json!({
                    "generation": m,
                    "operator": operator,
                    "size": s.len(),
                    "f_vector": g.f_vector().0,
                    "max": s.max(),
                    "zero_count": zeros,
                });
                if let Some(prefix) = output {
                    let path = with_suffix(prefix, &format!("_gen{m}.csv"));
                    write_file(&path, &s.to_csv())?;
                    record["csv"] = json!(path);
                }
                line(out, &record)?;
                spectra.push(s);
            }
            let report = dos::convergence_report(&c, *operator, &spectra);
            line(out, &json!({"report": report}))?;
            Ok(EXIT_OK)
        }
        Command::Deform { source, refine, g, t, steps, tol, max_dense, output } => {
            let c = load_refined(source, *refine)?;
            if c.len() > *max_dense {
                return Err(Error::TooLarge { size: c.len(), limit: *max_dense });
            }
            let g = GSpec::parse(g)?;
            let times = parse_times(t)?;
            let d0 = spectral::dirac(&c);
            for (i, &ti) in times.iter().enumerate() {
                let state = deform::qr_deform(&d0, &g, ti)?;
                let report = deform::diagnose(&d0, &g, &state, *tol)?;
                let mut record = serde_json::to_value(&report)?;
                if let Some(n) = steps {
                    let lax = deform::lax_integrate(&d0, &g, ti, *n)?;
                    record["steps"] = json!(n);
                    record["lax_difference"] = json!(crate::linalg::max_abs(&(&lax - &state.d_t)));
                }
                if let Some(prefix) = output {
                    let path = with_suffix(prefix, &format!("_t{i}.csv"));
                    write_file(&path, &io::matrix_to_csv(&state.d_t))?;
                    record["csv"] = json!(path);
                }
                line(out, &record)?;
            }
            Ok(EXIT_OK)
        }
        Command::Levelset { source, refine, values, seed, constant, coloring, budget } => {
            let c = load_refined(source, *refine)?;
            let k = codimension(*values)?;
            let m = c.dim().ok_or_else(|| Error::InvalidInput("empty host complex".into()))? as i64;
            let f = match (constant, coloring) {
                (Some(v), _) => Coloring::constant(&c, *v, k)?,
                (None, Some(path)) => parse_coloring(&fs::read_to_string(path)?, k)?,
                (None, None) => potts::random_coloring(&c, k, *seed),
            };
            let report = potts::verify_interface_with_budget(&c, &f, m, *budget)?;
            let violation = report.is_violation();
            line(
                out,
                &json!({
                    "source": source.describe(),
                    "host_dim": m,
                    "values": values,
                    "codimension": k,
                    "seed": f.seed(),
                    "report": report,
                }),
            )?;
            Ok(if violation { EXIT_REFUTED } else { EXIT_OK })
        }
        Command::Stats { source, refine, values, samples, seed, check } => {
            let c = load_refined(source, *refine)?;
            let k = codimension(*values)?;
            let stats = potts::betti_statistics(&c, k, *samples, *seed)?;
            let mut violations = 0usize;
            let m = c.dim().map_or(0, |d| d as i64);
            for r in &stats.records {
                let mut record = serde_json::to_value(r)?;
                if *check && !r.empty {
                    let f = potts::random_coloring_stream(&c, k, *seed, r.sample);
                    let rep = potts::verify_interface(&c, &f, m)?;
                    if rep.is_violation() {
                        violations += 1;
                    }
                    record["manifold"] = json!(!rep.is_violation());
                }
                line(out, &record)?;
            }
            let gb_failures = stats.records.iter().filter(|r| !r.empty && !r.gauss_bonnet_ok).count();
            let mut summary = json!({
                "summary": {
                    "source": source.describe(),
                    "values": values,
                    "codimension": k,
                    "seed": seed,
                    "samples": stats.samples,
                    "empty": stats.empty,
                    "mean_betti": stats.mean_betti,
                    "gauss_bonnet_failures": gb_failures,
                }
            });
            if *check {
                summary["summary"]["violations"] = json!(violations);
            }
            line(out, &summary)?;
            Ok(EXIT_OK)
        }
        Command::Verify { source, refine, claim, budget } => {
            let c = load_refined(source, *refine)?;
            let claim: Claim = claim.parse()?;
            let g = potts::verification_graph(&c);
            let mut search = Search::new(&g).with_budget(*budget);
            let outcome = match claim {
                Claim::Manifold(m) => search.is_manifold(m),
                Claim::Sphere(d) => search.is_sphere(d),
                Claim::Contractible => search.is_contractible(),
            };
            let (status, code) = match outcome {
                Ok(true) => ("verified", EXIT_OK),
                Ok(false) => ("refuted", EXIT_REFUTED),
                Err(Error::BudgetExhausted(_)) => ("budget_exhausted", EXIT_BUDGET),
                Err(e) => return Err(e),
            };
            line(
                out,
                &json!({
                    "source": source.describe(),
                    "claim": claim.to_string(),
                    "status": status,
                    "nodes": search.nodes_used(),
                    "budget": budget,
                }),
            )?;
            Ok(code)
        }
    }
}
