//! `quartic` command-line front-end.
//!
//! Every subcommand prints to standard output unless `--output` names a
//! file. Exit codes: 0 on success, 1 when a computation fails, 2 on a usage
//! error.

pub mod plot;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use quartic_core::{
    compute_spectrum, convergence_study, fd_spectrum, optimize_omega, richardson_pair, wkb_table, BasisSpec,
    GridSpec, OmegaSearch, OscillatorParams, WkbConstants,
};

pub use plot::{render_levels_svg, LevelSet, PlotSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Compute(#[from] quartic_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot encode JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(name = "quartic", version, about = "Quartic oscillator eigenvalues in a ladder-operator basis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lowest eigenvalues of the truncated Hamiltonian.
    Spectrum(SpectrumArgs),
    /// Semiclassical energies of the pure quartic oscillator.
    Wkb(WkbArgs),
    /// Golden-section search for the ω minimizing the ground-state energy.
    ScanOmega(ScanArgs),
    /// Ground-state energy against basis size at fixed ω.
    Converge(ConvergeArgs),
    /// Finite-difference reference spectrum.
    Oracle(OracleArgs),
    /// SVG of the potential with energy levels.
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
struct Physics {
    /// Quadratic stiffness k.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    k: f64,
    /// Quartic coupling λ.
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
}

impl Physics {
    fn params(&self) -> Result<OscillatorParams, CliError> {
        Ok(OscillatorParams::new(self.k, self.lambda)?)
    }
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[arg(long, default_value_t = 10)]
    n_basis: usize,
    #[arg(long, default_value_t = 2.16)]
    omega: f64,
    #[command(flatten)]
    physics: Physics,
    #[arg(long, default_value_t = 10)]
    levels: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct WkbArgs {
    #[arg(long, default_value_t = 10)]
    levels: usize,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 10)]
    n_basis: usize,
    #[command(flatten)]
    physics: Physics,
    #[arg(long, default_value_t = 0.5)]
    lo: f64,
    #[arg(long, default_value_t = 6.0)]
    hi: f64,
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    #[arg(long, default_value_t = 2.16)]
    omega: f64,
    /// Comma-separated, strictly increasing basis sizes.
    #[arg(long, value_delimiter = ',', default_value = "10,20,40,80")]
    sizes: Vec<usize>,
    #[command(flatten)]
    physics: Physics,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Box half width L; chosen from the highest level when omitted.
    #[arg(long)]
    half_width: Option<f64>,
    /// Interior grid points M.
    #[arg(long, default_value_t = 2000)]
    points: usize,
    #[arg(long, default_value_t = 10)]
    levels: usize,
    /// Combine spacings h and h/2 to cancel the O(h²) error.
    #[arg(long)]
    richardson: bool,
    #[command(flatten)]
    physics: Physics,
    #[command(flatten)]
    out: Output,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[arg(long, default_value_t = 10)]
    levels: usize,
    #[arg(long, default_value_t = 10)]
    n_basis: usize,
    #[arg(long, default_value_t = 2.16)]
    omega: f64,
    #[command(flatten)]
    physics: Physics,
    /// Also draw the WKB energies.
    #[arg(long)]
    wkb: bool,
    /// Draw levels across the whole plot rather than between turning points.
    #[arg(long)]
    full_width: bool,
    /// Destination file; `-` for standard output.
    #[arg(long, default_value = "figure.svg")]
    output: PathBuf,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 1000)]
    height: u32,
    #[arg(long, default_value = plot::COMPUTED_COLOR)]
    computed_color: String,
    #[arg(long, default_value = plot::WKB_COLOR)]
    wkb_color: String,
}

/// Parses `argv` (program name first) and executes the subcommand.
pub fn run<S: AsRef<str>>(argv: &[S]) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Spectrum(a) => {
            let text = spectrum(&a)?;
            emit(&text, a.out.output.as_ref())
        }
        Command::Wkb(a) => emit(&wkb(&a)?, a.out.output.as_ref()),
        Command::ScanOmega(a) => emit(&scan_omega(&a)?, a.out.output.as_ref()),
        Command::Converge(a) => emit(&converge(&a)?, a.out.output.as_ref()),
        Command::Oracle(a) => emit(&oracle(&a)?, a.out.output.as_ref()),
        Command::Plot(a) => {
            let svg = plot_svg(&a)?;
            let dest = (a.output.as_os_str() != "-").then_some(&a.output);
            emit(&svg, dest)
        }
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Six significant figures, the precision of printed tables.
fn sig6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let decimals = (5 - v.abs().log10().floor() as i32).max(0) as usize;
    format!("{v:.decimals$}")
}

fn json_text(v: &Value) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn level_rows(levels: &[f64]) -> Vec<Value> {
    levels
        .iter()
        .enumerate()
        .map(|(n, e)| json!({ "n": n, "energy": e }))
        .collect()
}

fn levels_csv(levels: &[f64]) -> String {
    let mut s = String::from("n,energy\n");
    for (n, e) in levels.iter().enumerate() {
        s.push_str(&format!("{n},{e}\n"));
    }
    s
}

fn levels_table(title: &str, levels: &[f64]) -> String {
    let mut s = format!("{title}\n{:>4}  {:>14}\n", "n", "energy");
    for (n, e) in levels.iter().enumerate() {
        s.push_str(&format!("{n:>4}  {:>14}\n", sig6(*e)));
    }
    s
}

fn spectrum(a: &SpectrumArgs) -> Result<String, CliError> {
    let params = a.physics.params()?;
    let basis = BasisSpec::new(a.n_basis, a.omega)?;
    let s = compute_spectrum(&params, &basis, a.levels)?;
    Ok(match a.out.format {
        Format::Json => json_text(&json!({
            "params": { "k": params.k(), "lambda": params.lambda() },
            "basis": { "n_basis": basis.n_basis(), "omega": basis.omega() },
            "levels": level_rows(&s.levels),
            "solver": { "tol": s.solver_tol, "sweeps": s.sweeps },
        }))?,
        Format::Csv => levels_csv(&s.levels),
        Format::Table => levels_table(
            &format!(
                "k = {}, lambda = {}, N = {}, omega = {}",
                params.k(),
                params.lambda(),
                basis.n_basis(),
                basis.omega()
            ),
            &s.levels,
        ),
    })
}

fn wkb(a: &WkbArgs) -> Result<String, CliError> {
    let table = wkb_table(a.levels, a.lambda)?;
    let energies: Vec<f64> = table.iter().map(|l| l.energy).collect();
    let c = WkbConstants::get().coefficient;
    Ok(match a.out.format {
        Format::Json => json_text(&json!({
            "lambda": a.lambda,
            "coefficient": c,
            "levels": level_rows(&energies),
        }))?,
        Format::Csv => levels_csv(&energies),
        Format::Table => levels_table(&format!("WKB, lambda = {}, C = {}", a.lambda, sig6(c)), &energies),
    })
}

fn scan_omega(a: &ScanArgs) -> Result<String, CliError> {
    let params = a.physics.params()?;
    let search = OmegaSearch {
        lo: a.lo,
        hi: a.hi,
        tol: a.tol,
    };
    let r = optimize_omega(&params, a.n_basis, search)?;
    Ok(match a.out.format {
        Format::Json => json_text(&json!({
            "params": { "k": params.k(), "lambda": params.lambda() },
            "n_basis": a.n_basis,
            "search": search,
            "omega_star": r.omega,
            "e0": r.e0,
            "evaluations": r.evaluations,
        }))?,
        Format::Csv => format!("omega_star,e0\n{},{}\n", r.omega, r.e0),
        Format::Table => format!(
            "N = {}, search [{}, {}] tol {}\nomega* = {}\nE0     = {}\n",
            a.n_basis,
            a.lo,
            a.hi,
            a.tol,
            sig6(r.omega),
            sig6(r.e0)
        ),
    })
}

fn converge(a: &ConvergeArgs) -> Result<String, CliError> {
    let params = a.physics.params()?;
    let r = convergence_study(&params, a.omega, &a.sizes)?;
    Ok(match a.out.format {
        Format::Json => json_text(&json!({
            "params": { "k": params.k(), "lambda": params.lambda() },
            "report": r,
        }))?,
        Format::Csv => {
            let mut s = String::from("n_basis,e0,delta\n");
            for (i, (n, e)) in r.sizes.iter().zip(&r.ground_energies).enumerate() {
                let delta = i.checked_sub(1).map(|j| r.deltas[j].to_string()).unwrap_or_default();
                s.push_str(&format!("{n},{e},{delta}\n"));
            }
            s
        }
        Format::Table => {
            let mut s = format!("omega = {}\n{:>6}  {:>14}  {:>12}\n", r.omega, "N", "E0", "delta");
            for (i, (n, e)) in r.sizes.iter().zip(&r.ground_energies).enumerate() {
                let delta = i.checked_sub(1).map(|j| format!("{:.3e}", r.deltas[j])).unwrap_or_default();
                s.push_str(&format!("{n:>6}  {:>14}  {delta:>12}\n", format!("{e:.10}")));
            }
            s.push_str(&format!("converged: {}\n", r.converged));
            s
        }
    })
}

fn oracle(a: &OracleArgs) -> Result<String, CliError> {
    let params = a.physics.params()?;
    let grid = match a.half_width {
        Some(l) => GridSpec::new(l, a.points)?,
        None => GridSpec::default_for(&params, a.levels, a.points)?,
    };
    let levels = if a.richardson {
        richardson_pair(&params, &grid, a.levels)?
    } else {
        fd_spectrum(&params, &grid, a.levels)?
    };
    Ok(match a.out.format {
        Format::Json => json_text(&json!({
            "params": { "k": params.k(), "lambda": params.lambda() },
            "grid": { "half_width": grid.half_width(), "points": grid.points() },
            "richardson": a.richardson,
            "levels": level_rows(&levels),
        }))?,
        Format::Csv => levels_csv(&levels),
        Format::Table => levels_table(
            &format!(
                "finite differences, L = {}, M = {}{}",
                grid.half_width(),
                grid.points(),
                if a.richardson { ", Richardson" } else { "" }
            ),
            &levels,
        ),
    })
}

fn plot_svg(a: &PlotArgs) -> Result<String, CliError> {
    let params = a.physics.params()?;
    let basis = BasisSpec::new(a.n_basis, a.omega)?;
    let computed = compute_spectrum(&params, &basis, a.levels)?.levels;
    let mut sets = Vec::new();
    if a.wkb {
        if !params.is_pure_quartic() {
            return Err(quartic_core::Error::Domain("WKB levels are only available for k = 0".into()).into());
        }
        let energies = wkb_table(a.levels, params.lambda())?.iter().map(|l| l.energy).collect();
        sets.push(LevelSet {
            label: "wkb".into(),
            color: a.wkb_color.clone(),
            energies,
        });
    }
    sets.push(LevelSet {
        label: "computed".into(),
        color: a.computed_color.clone(),
        energies: computed,
    });
    let mut spec = PlotSpec::with_default_ranges(params, sets, a.width, a.height)?;
    spec.full_width = a.full_width;
    Ok(render_levels_svg(&spec)?)
}
