//! Command-line front end.
//!
//! Subcommands: `pt`, `report`, `werner-sweep`, `validate`. Every command is
//! a thin composition of library calls; the helpers here
//! ([`entanglement_report`], [`werner_sweep_rows`], ...) are public so the
//! CLI output can be checked against direct library results.

pub mod io;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::density::{validate_density, DensityMatrix};
use crate::dims::{DimensionSpec, TransposeMask};
use crate::entanglement::{hse, log_negativity_from, negativity, HseReport};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::ptranspose::partial_transpose;
use crate::states;

pub use io::{format_exact, format_matrix, format_sig, parse_matrix, read_matrix, write_matrix};

/// Significant digits in reports and CSV output.
pub const REPORT_DIGITS: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Argument(_) | Error::Dimension(_) | Error::Index(_) => EXIT_USAGE,
        Error::Parse { .. } | Error::Io(_) => EXIT_PARSE,
        Error::Contract(_) | Error::NoConvergence { .. } | Error::Numerical(_) => EXIT_NUMERICAL,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ptent",
    version,
    about = "Partial transposes and entanglement measures of density matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the partial transpose of a matrix file.
    Pt {
        #[command(flatten)]
        input: StateArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print E_n, E_ln, E_hs and related quantities for a state.
    Report {
        #[command(flatten)]
        input: StateArgs,
        /// Write the closest separable state candidate here (skipped when E_hs = 0).
        #[arg(long, value_name = "PATH")]
        css: Option<PathBuf>,
        /// One CSV header line plus one data line instead of key = value lines.
        #[arg(long)]
        csv: bool,
    },
    /// Two- or three-qubit Werner sweep over w in [0, 1], as CSV.
    WernerSweep {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        qubits: u8,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        steps: u32,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check Hermiticity, unit trace and (unless --no-psd) positivity.
    Validate {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Subsystem dimensions; defaults to a single system.
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long)]
        no_psd: bool,
    },
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["ssys", "mask"]))]
pub struct StateArgs {
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
    /// Subsystem dimensions, e.g. `2,2` or `2,3,4`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
    /// Per-subsystem 0/1 list: 0 = transpose this subsystem, 1 = leave it.
    #[arg(long, value_delimiter = ',')]
    pub ssys: Option<Vec<u8>>,
    /// Per-subsystem boolean list: true = transpose this subsystem.
    #[arg(long, value_delimiter = ',', action = clap::ArgAction::Set, num_args = 1)]
    pub mask: Option<Vec<bool>>,
}

impl StateArgs {
    fn spec(&self) -> Result<DimensionSpec> {
        DimensionSpec::new(self.dims.clone())
    }

    fn mask(&self) -> Result<TransposeMask> {
        match (&self.ssys, &self.mask) {
            (Some(ssys), None) => TransposeMask::from_ssys(ssys),
            (None, Some(flags)) => Ok(TransposeMask::new(flags.clone())),
            _ => Err(Error::Argument(
                "give exactly one of --ssys or --mask".into(),
            )),
        }
    }

    fn load(&self) -> Result<(DensityMatrix, TransposeMask)> {
        let spec = self.spec()?;
        let mask = self.mask()?;
        mask.check_against(&spec)?;
        let rho = DensityMatrix::new(read_matrix(&self.input)?, spec)?;
        Ok((rho, mask))
    }
}

pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<()> {
    match cli.command {
        Command::Pt { input, out: path } => {
            let (rho, mask) = input.load()?;
            cmd_pt(&rho, &mask, &path)
        }
        Command::Report { input, css, csv } => {
            let (rho, mask) = input.load()?;
            cmd_report(&rho, &mask, css.as_deref(), csv, out)
        }
        Command::WernerSweep {
            qubits,
            steps,
            out: path,
        } => {
            let csv = werner_sweep_csv(qubits as usize, steps as usize)?;
            match path {
                Some(p) => {
                    std::fs::write(&p, csv).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
                }
                None => out.write_all(csv.as_bytes()).map_err(Error::from),
            }
        }
        Command::Validate {
            input,
            dims,
            no_psd,
        } => {
            let m = read_matrix(&input)?;
            let spec = DimensionSpec::new(dims.unwrap_or_else(|| vec![m.dim()]))?;
            cmd_validate(&DensityMatrix::new(m, spec)?, !no_psd, out)
        }
    }
}

pub fn cmd_pt(rho: &DensityMatrix, mask: &TransposeMask, out: &Path) -> Result<()> {
    let pt = partial_transpose(rho.matrix(), rho.spec(), mask)?;
    write_matrix(out, &pt)
}

/// Everything `report` prints.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementReport {
    pub negativity: f64,
    pub log_negativity: f64,
    pub hse: HseReport,
}

pub fn entanglement_report(
    rho: &DensityMatrix,
    mask: &TransposeMask,
    want_css: bool,
) -> Result<EntanglementReport> {
    let pt = partial_transpose(rho.matrix(), rho.spec(), mask)?;
    let negativity = negativity(&pt)?;
    let hse = hse(&pt, rho.spec(), mask, want_css)?;
    Ok(EntanglementReport {
        negativity,
        log_negativity: log_negativity_from(negativity),
        hse,
    })
}

const REPORT_KEYS: [&str; 7] = [
    "E_n",
    "E_ln",
    "E_hs",
    "d_plus_prime",
    "xi",
    "min_pt_eigenvalue",
    "oracle_lower_bound",
];

impl EntanglementReport {
    fn values(&self) -> [String; 7] {
        let f = |x: f64| format_sig(x, REPORT_DIGITS);
        [
            f(self.negativity),
            f(self.log_negativity),
            f(self.hse.e_hs),
            self.hse.d_plus_prime.to_string(),
            f(self.hse.xi),
            f(self.hse.min_pt_eigenvalue()),
            f(self.hse.oracle_lower_bound),
        ]
    }
}

pub fn cmd_report<W: Write>(
    rho: &DensityMatrix,
    mask: &TransposeMask,
    css_path: Option<&Path>,
    csv: bool,
    out: &mut W,
) -> Result<()> {
    let report = entanglement_report(rho, mask, css_path.is_some())?;
    let values = report.values();
    if csv {
        writeln!(out, "{}", REPORT_KEYS.join(","))?;
        writeln!(out, "{}", values.join(","))?;
    } else {
        for (k, v) in REPORT_KEYS.iter().zip(&values) {
            writeln!(out, "{k} = {v}")?;
        }
        if report.hse.trace_anomaly {
            writeln!(out, "# warning: negative PT eigenvalues with positives summing to <= 1 (trace rounding)")?;
        }
    }
    // no CSS when E_hs = 0: the state is its own closest separable state
    if let (Some(path), false) = (css_path, report.hse.is_separable_branch()) {
        if let Some(css) = &report.hse.css {
            write_matrix(path, css.matrix())?;
            let min = report.hse.css_min_eigenvalue.unwrap_or(f64::NAN);
            if !csv {
                writeln!(out, "css_file = {}", path.display())?;
                writeln!(
                    out,
                    "css_min_eigenvalue = {}",
                    format_sig(min, REPORT_DIGITS)
                )?;
            }
        }
    }
    Ok(())
}

pub fn cmd_validate<W: Write>(rho: &DensityMatrix, check_psd: bool, out: &mut W) -> Result<()> {
    let verdict = validate_density(rho, check_psd)?;
    if verdict.is_valid() {
        writeln!(out, "valid")?;
        return Ok(());
    }
    for v in &verdict.violations {
        writeln!(
            out,
            "violated {} by {}",
            v.kind,
            format_sig(v.magnitude, REPORT_DIGITS)
        )?;
    }
    Err(Error::Contract(format!(
        "{} density-matrix invariant(s) violated",
        verdict.violations.len()
    )))
}

/// One row of the Werner sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub w: f64,
    pub negativity: f64,
    pub e_hs: f64,
    pub d_plus_prime: usize,
    pub oracle_lower_bound: f64,
}

/// State and mask used by the sweep: two qubits with the second transposed,
/// or three qubits grouped as qubit (x) ququart with the qubit transposed.
pub fn werner_bipartition(qubits: usize, w: f64) -> Result<(DensityMatrix, TransposeMask)> {
    let rho = states::werner(qubits, w)?;
    match qubits {
        2 => Ok((rho, TransposeMask::single(2, 1))),
        3 => {
            let (m, _) = rho.into_parts();
            let rho = DensityMatrix::new(m, DimensionSpec::new(vec![2, 4])?)?;
            Ok((rho, TransposeMask::single(2, 0)))
        }
        n => Err(Error::Argument(format!(
            "werner sweep supports 2 or 3 qubits, got {n}"
        ))),
    }
}

/// `w_i = i / (steps - 1)` for `i = 0..steps`.
pub fn sweep_grid(steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::Argument(format!(
            "steps must be at least 2, got {steps}"
        )));
    }
    Ok((0..steps).map(|i| i as f64 / (steps - 1) as f64).collect())
}

pub fn werner_sweep_rows(qubits: usize, steps: usize) -> Result<Vec<SweepRow>> {
    sweep_grid(steps)?
        .into_iter()
        .map(|w| {
            let (rho, mask) = werner_bipartition(qubits, w)?;
            let r = entanglement_report(&rho, &mask, false)?;
            Ok(SweepRow {
                w,
                negativity: r.negativity,
                e_hs: r.hse.e_hs,
                d_plus_prime: r.hse.d_plus_prime,
                oracle_lower_bound: r.hse.oracle_lower_bound,
            })
        })
        .collect()
}

pub const SWEEP_HEADER: &str = "w,E_n,E_hs,d_plus_prime,oracle_lower_bound";

pub fn render_sweep_csv(rows: &[SweepRow]) -> String {
    let f = |x: f64| format_sig(x, REPORT_DIGITS);
    let mut s = String::from(SWEEP_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            f(r.w),
            f(r.negativity),
            f(r.e_hs),
            r.d_plus_prime,
            f(r.oracle_lower_bound)
        ));
    }
    s
}

pub fn werner_sweep_csv(qubits: usize, steps: usize) -> Result<String> {
    Ok(render_sweep_csv(&werner_sweep_rows(qubits, steps)?))
}

/// Reads a matrix file and pairs it with `dims` (helper for tests and tools).
pub fn load_density(path: &Path, dims: Vec<usize>) -> Result<DensityMatrix> {
    let m: ComplexMatrix = read_matrix(path)?;
    DensityMatrix::new(m, DimensionSpec::new(dims)?)
}
