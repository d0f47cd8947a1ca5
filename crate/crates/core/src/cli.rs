//! Command-line frontend.
//!
//! Six subcommands cover the library's capabilities: `trajectory`
//! (mean-field integration), `sweep` (asymptotic informed count over a
//! cutoff grid), `layers` (solved cutoffs for the Dunbar hierarchy),
//! `alpha-curve` and `population-curve` (cutoff scaling laws), and
//! `montecarlo` (stochastic ensemble statistics).
//!
//! Every option resolves through the same precedence chain: command-line
//! flag, then `DUNBAR_*` environment variable, then a `key=value` config
//! file (`--config`), then the built-in default. Config files accept `#`
//! comments, blank lines, and either `-` or `_` in key names; unknown keys
//! are rejected rather than ignored.
//!
//! Results are written atomically (temp file + rename in the target
//! directory) so a crash or full disk never leaves a truncated table
//! behind. Exit codes: 0 success, 2 invalid input, 3 infeasible model or
//! target, 4 unwritable output.

use crate::chart::{LineChart, Series};
use crate::dunbar::{self, DunbarLayers};
use crate::dynamics::{self, ModelParams};
use crate::error::Error;
use crate::monte_carlo;
use crate::table::{Cell, Table};
use crate::trust::{DriverRange, TrustDistribution};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::HashMap;
use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

const DEFAULT_POPULATION: u32 = 150;
const DEFAULT_BETA: f64 = 0.25;
const DEFAULT_TC: f64 = 0.66;
const DEFAULT_ALPHA: f64 = 2.1;
const DEFAULT_SEED: u64 = 42;
const DEFAULT_RUNS: u32 = 500;
const DEFAULT_T_END: f64 = 100.0;
const DEFAULT_DT: f64 = 0.01;
const DEFAULT_LAYER: u32 = 50;
const DEFAULT_STEP: f64 = 0.01;
const DEFAULT_POPULATIONS: [u32; 4] = [150, 500, 1500, 5000];

fn default_alphas() -> Vec<f64> {
    (0..9).map(|j| 2.1 + 0.1 * j as f64).collect()
}

/// Keys a config file may define; anything else is a hard error.
const KNOWN_KEYS: [&str; 18] = [
    "population",
    "beta",
    "tc",
    "r0",
    "dist",
    "alpha",
    "driver",
    "seed",
    "runs",
    "t_end",
    "dt",
    "layer",
    "layers",
    "populations",
    "alphas",
    "step",
    "format",
    "output",
];

#[derive(Debug, Parser)]
#[command(
    name = "dunbar-diffusion",
    version,
    about = "Trust-gated rumor diffusion across Dunbar's social layers"
)]
struct Cli {
    #[command(subcommand)]
    command: CommandKind,
}

#[derive(Debug, Subcommand)]
enum CommandKind {
    /// Integrate the mean-field trajectory and tabulate i, s, r over time
    Trajectory(CommonArgs),
    /// Tabulate the asymptotic informed count over a trust-cutoff grid
    Sweep(CommonArgs),
    /// Solve the trust cutoff needed to reach each Dunbar layer
    Layers(CommonArgs),
    /// Solve the layer cutoff across a grid of power-law exponents
    AlphaCurve(CommonArgs),
    /// Solve the layer cutoff across increasing population sizes
    PopulationCurve(CommonArgs),
    /// Run a stochastic ensemble and tabulate mean and spread over time
    Montecarlo(CommonArgs),
}

/// Trust distribution family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistKind {
    /// Uniform trust on [0, 1]
    Uniform,
    /// Bounded power law x^(-alpha) on [0.1, 1]
    PowerLaw,
}

/// Driver range feeding the power-law inverse transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DriverKind {
    /// Uniform driver on [0, 1]
    FullUnit,
    /// Uniform driver truncated to [0.1, 1]
    Truncated,
}

impl From<DriverKind> for DriverRange {
    fn from(kind: DriverKind) -> Self {
        match kind {
            DriverKind::FullUnit => DriverRange::FullUnit,
            DriverKind::Truncated => DriverRange::Truncated,
        }
    }
}

/// Output format selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatKind {
    Csv,
    Svg,
    Both,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Population size N
    #[arg(long, short = 'n', alias = "n", env = "DUNBAR_POPULATION", value_name = "N")]
    population: Option<u32>,

    /// Transmission rate in (0, 1] (0 freezes the dynamics)
    #[arg(long, env = "DUNBAR_BETA")]
    beta: Option<f64>,

    /// Trust cutoff in [0, 1]
    #[arg(long, env = "DUNBAR_TC")]
    tc: Option<f64>,

    /// Initial transmitter fraction (default: one person, 1/N)
    #[arg(long, env = "DUNBAR_R0")]
    r0: Option<f64>,

    /// Trust distribution family
    #[arg(long, env = "DUNBAR_DIST", value_enum)]
    dist: Option<DistKind>,

    /// Power-law exponent alpha
    #[arg(long, env = "DUNBAR_ALPHA")]
    alpha: Option<f64>,

    /// Driver range for power-law sampling
    #[arg(long, env = "DUNBAR_DRIVER", value_enum)]
    driver: Option<DriverKind>,

    /// Base RNG seed; ensemble run k derives seed XOR k
    #[arg(long, env = "DUNBAR_SEED")]
    seed: Option<u64>,

    /// Ensemble size for montecarlo
    #[arg(long, env = "DUNBAR_RUNS")]
    runs: Option<u32>,

    /// Simulation horizon
    #[arg(long, env = "DUNBAR_T_END")]
    t_end: Option<f64>,

    /// Integrator time step
    #[arg(long, env = "DUNBAR_DT")]
    dt: Option<f64>,

    /// Target layer size for cutoff solving
    #[arg(long, env = "DUNBAR_LAYER")]
    layer: Option<u32>,

    /// Comma-separated layer sizes for the layers command
    #[arg(long, env = "DUNBAR_LAYERS")]
    layers: Option<String>,

    /// Comma-separated population sizes for population-curve
    #[arg(long, env = "DUNBAR_POPULATIONS")]
    populations: Option<String>,

    /// Comma-separated exponent grid for alpha-curve
    #[arg(long, env = "DUNBAR_ALPHAS")]
    alphas: Option<String>,

    /// Cutoff grid step for sweep
    #[arg(long, env = "DUNBAR_STEP")]
    step: Option<f64>,

    /// Output format
    #[arg(long, env = "DUNBAR_FORMAT", value_enum)]
    format: Option<FormatKind>,

    /// Output path (default: <command>.<ext> in the working directory)
    #[arg(long, short = 'o', env = "DUNBAR_OUTPUT")]
    output: Option<PathBuf>,

    /// Config file with key=value lines
    #[arg(long, env = "DUNBAR_CONFIG")]
    config: Option<PathBuf>,
}

/// Fully resolved run configuration after the precedence chain.
#[derive(Debug, Clone, PartialEq)]
struct RunConfig {
    population: u32,
    beta: f64,
    tc: f64,
    r0: Option<f64>,
    dist: DistKind,
    alpha: f64,
    driver: DriverKind,
    seed: u64,
    runs: u32,
    t_end: f64,
    dt: f64,
    layer: u32,
    layers: Vec<u32>,
    populations: Vec<u32>,
    alphas: Vec<f64>,
    step: f64,
    format: FormatKind,
    output: Option<PathBuf>,
}

/// Frontend failure, carrying its process exit code.
#[derive(Debug, thiserror::Error, PartialEq)]
enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::OutOfDomain { .. } | Error::InvalidDistribution(_) => {
                CliError::Validation(err.to_string())
            }
            Error::InfeasibleState { .. }
            | Error::UnreachableLevel { .. }
            | Error::NoSeedTransmitter { .. }
            | Error::InfeasibleLayer { .. } => CliError::Infeasible(err.to_string()),
        }
    }
}

/// Parses `argv` and executes one subcommand, returning the process exit
/// code. The binary is a one-liner over this so integration tests can
/// drive the full frontend in-process as well.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests land here too; they exit 0.
            let rendered = err.render();
            if err.use_stderr() {
                eprint!("{rendered}");
                return 2;
            }
            print!("{rendered}");
            return 0;
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    let started = Instant::now();
    let (name, args) = match &cli.command {
        CommandKind::Trajectory(a) => ("trajectory", a),
        CommandKind::Sweep(a) => ("sweep", a),
        CommandKind::Layers(a) => ("layers", a),
        CommandKind::AlphaCurve(a) => ("alpha-curve", a),
        CommandKind::PopulationCurve(a) => ("population-curve", a),
        CommandKind::Montecarlo(a) => ("montecarlo", a),
    };
    let cfg = resolve(args)?;
    let (table, chart) = match &cli.command {
        CommandKind::Trajectory(_) => trajectory_outputs(&cfg)?,
        CommandKind::Sweep(_) => sweep_outputs(&cfg)?,
        CommandKind::Layers(_) => layers_outputs(&cfg)?,
        CommandKind::AlphaCurve(_) => alpha_outputs(&cfg)?,
        CommandKind::PopulationCurve(_) => population_outputs(&cfg)?,
        CommandKind::Montecarlo(_) => montecarlo_outputs(&cfg)?,
    };
    emit(&cfg, name, &table, &chart, started)
}

// ---------------------------------------------------------------------
// Option resolution
// ---------------------------------------------------------------------

fn resolve(args: &CommonArgs) -> Result<RunConfig, CliError> {
    let map = match &args.config {
        Some(path) => parse_config(path)?,
        None => HashMap::new(),
    };

    let population = match args.population {
        Some(v) => v,
        None => cfg_value(&map, "population", parse_num::<u32>)?.unwrap_or(DEFAULT_POPULATION),
    };
    let beta = match args.beta {
        Some(v) => v,
        None => cfg_value(&map, "beta", parse_num::<f64>)?.unwrap_or(DEFAULT_BETA),
    };
    let tc = match args.tc {
        Some(v) => v,
        None => cfg_value(&map, "tc", parse_num::<f64>)?.unwrap_or(DEFAULT_TC),
    };
    let r0 = match args.r0 {
        Some(v) => Some(v),
        None => cfg_value(&map, "r0", parse_num::<f64>)?,
    };
    let dist = match args.dist {
        Some(v) => v,
        None => cfg_value(&map, "dist", parse_enum::<DistKind>)?.unwrap_or(DistKind::Uniform),
    };
    let alpha = match args.alpha {
        Some(v) => v,
        None => cfg_value(&map, "alpha", parse_num::<f64>)?.unwrap_or(DEFAULT_ALPHA),
    };
    let driver = match args.driver {
        Some(v) => v,
        None => {
            cfg_value(&map, "driver", parse_enum::<DriverKind>)?.unwrap_or(DriverKind::FullUnit)
        }
    };
    let seed = match args.seed {
        Some(v) => v,
        None => cfg_value(&map, "seed", parse_num::<u64>)?.unwrap_or(DEFAULT_SEED),
    };
    let runs = match args.runs {
        Some(v) => v,
        None => cfg_value(&map, "runs", parse_num::<u32>)?.unwrap_or(DEFAULT_RUNS),
    };
    let t_end = match args.t_end {
        Some(v) => v,
        None => cfg_value(&map, "t_end", parse_num::<f64>)?.unwrap_or(DEFAULT_T_END),
    };
    let dt = match args.dt {
        Some(v) => v,
        None => cfg_value(&map, "dt", parse_num::<f64>)?.unwrap_or(DEFAULT_DT),
    };
    let layer = match args.layer {
        Some(v) => v,
        None => cfg_value(&map, "layer", parse_num::<u32>)?.unwrap_or(DEFAULT_LAYER),
    };
    let layers = match &args.layers {
        Some(raw) => parse_u32_list(raw).map_err(flag_error("--layers"))?,
        None => cfg_value(&map, "layers", parse_u32_list)?
            .unwrap_or_else(|| dunbar::DEFAULT_LAYERS.to_vec()),
    };
    let populations = match &args.populations {
        Some(raw) => parse_u32_list(raw).map_err(flag_error("--populations"))?,
        None => cfg_value(&map, "populations", parse_u32_list)?
            .unwrap_or_else(|| DEFAULT_POPULATIONS.to_vec()),
    };
    let alphas = match &args.alphas {
        Some(raw) => parse_f64_list(raw).map_err(flag_error("--alphas"))?,
        None => cfg_value(&map, "alphas", parse_f64_list)?.unwrap_or_else(default_alphas),
    };
    let step = match args.step {
        Some(v) => v,
        None => cfg_value(&map, "step", parse_num::<f64>)?.unwrap_or(DEFAULT_STEP),
    };
    let format = match args.format {
        Some(v) => v,
        None => cfg_value(&map, "format", parse_enum::<FormatKind>)?.unwrap_or(FormatKind::Csv),
    };
    let output = match &args.output {
        Some(v) => Some(v.clone()),
        None => cfg_value(&map, "output", |s| Ok(PathBuf::from(s)))?,
    };

    Ok(RunConfig {
        population,
        beta,
        tc,
        r0,
        dist,
        alpha,
        driver,
        seed,
        runs,
        t_end,
        dt,
        layer,
        layers,
        populations,
        alphas,
        step,
        format,
        output,
    })
}

/// Reads a `key=value` config file: `#` starts a comment, blank lines are
/// skipped, keys are case-insensitive with `-` and `_` interchangeable,
/// and the last assignment of a repeated key wins.
fn parse_config(path: &Path) -> Result<HashMap<String, String>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Validation(format!("cannot read config {}: {e}", path.display()))
    })?;
    let mut map = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Validation(format!(
                "config {} line {}: expected key=value",
                path.display(),
                idx + 1
            ))
        })?;
        let key = key.trim().to_lowercase().replace('-', "_");
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(CliError::Validation(format!(
                "config {} line {}: unknown key '{key}'",
                path.display(),
                idx + 1
            )));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

fn cfg_value<T>(
    map: &HashMap<String, String>,
    key: &str,
    parse: impl Fn(&str) -> Result<T, String>,
) -> Result<Option<T>, CliError> {
    match map.get(key) {
        None => Ok(None),
        Some(raw) => parse(raw)
            .map(Some)
            .map_err(|e| CliError::Validation(format!("config key '{key}': {e}"))),
    }
}

fn flag_error(flag: &str) -> impl Fn(String) -> CliError + '_ {
    move |e| CliError::Validation(format!("{flag}: {e}"))
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T, String>
where
    T::Err: fmt::Display,
{
    let trimmed = s.trim();
    trimmed
        .parse()
        .map_err(|e| format!("invalid value '{trimmed}': {e}"))
}

fn parse_enum<T: ValueEnum>(s: &str) -> Result<T, String> {
    T::from_str(s.trim(), true)
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',').map(parse_num::<u32>).collect()
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(parse_num::<f64>).collect()
}

// ---------------------------------------------------------------------
// Subcommand execution
// ---------------------------------------------------------------------

fn build_dist(cfg: &RunConfig) -> Result<TrustDistribution, CliError> {
    match cfg.dist {
        DistKind::Uniform => Ok(TrustDistribution::uniform_unit()),
        DistKind::PowerLaw => {
            warn_unconventional(&[cfg.alpha]);
            Ok(TrustDistribution::power_law_on(
                cfg.alpha,
                0.1,
                1.0,
                cfg.driver.into(),
            )?)
        }
    }
}

/// Exponents outside the conventional open interval (2, 3) are allowed
/// but worth flagging; empirical social-tie strength estimates land
/// inside it.
fn warn_unconventional(alphas: &[f64]) {
    let outside: Vec<f64> = alphas
        .iter()
        .copied()
        .filter(|a| !(*a > 2.0 && *a < 3.0))
        .collect();
    if !outside.is_empty() {
        eprintln!(
            "warning: alpha {:?} outside the conventional (2, 3) range",
            outside
        );
    }
}

fn build_params(cfg: &RunConfig, dist: TrustDistribution) -> Result<ModelParams, CliError> {
    let params = match cfg.r0 {
        None => ModelParams::new(cfg.population, cfg.beta, cfg.tc, dist)?,
        Some(r0) => ModelParams::with_r0(cfg.population, cfg.beta, cfg.tc, r0, dist)?,
    };
    Ok(params)
}

fn trajectory_outputs(cfg: &RunConfig) -> Result<(Table, LineChart), CliError> {
    let params = build_params(cfg, build_dist(cfg)?)?;
    let traj = dynamics::integrate(&params, cfg.dt, cfg.t_end)?;
    let mut table = Table::new(vec!["t", "i", "s", "r", "informed"]);
    let mut ignorant = Vec::with_capacity(traj.times.len());
    let mut susceptible = Vec::with_capacity(traj.times.len());
    let mut transmitter = Vec::with_capacity(traj.times.len());
    for j in 0..traj.times.len() {
        let t = traj.times[j];
        let state = traj.states[j];
        table.push_row(vec![
            Cell::from(t),
            Cell::from(state.ignorant),
            Cell::from(state.susceptible),
            Cell::from(state.transmitter),
            Cell::from(traj.informed[j]),
        ]);
        ignorant.push((t, state.ignorant));
        susceptible.push((t, state.susceptible));
        transmitter.push((t, state.transmitter));
    }
    let mut chart = LineChart::new(
        format!(
            "Rumor trajectory (N={}, beta={}, tc={})",
            cfg.population, cfg.beta, cfg.tc
        ),
        "time".to_string(),
        "population fraction".to_string(),
    );
    chart.push_series(Series::new("ignorant", ignorant));
    chart.push_series(Series::new("susceptible", susceptible));
    chart.push_series(Series::new("transmitter", transmitter));
    Ok((table, chart))
}

fn sweep_outputs(cfg: &RunConfig) -> Result<(Table, LineChart), CliError> {
    let dist = build_dist(cfg)?;
    let sweep = dunbar::sweep_cutoffs(&dist, cfg.population, cfg.step)?;
    let mut table = Table::new(vec!["tc", "informed"]);
    let mut points = Vec::with_capacity(sweep.rows.len());
    for row in &sweep.rows {
        table.push_row(vec![Cell::from(row.x), Cell::from(row.value)]);
        if let Some(v) = row.value {
            points.push((row.x, v));
        }
    }
    let mut chart = LineChart::new(
        format!("Asymptotic informed count (N={})", cfg.population),
        "trust cutoff".to_string(),
        "informed people".to_string(),
    );
    chart.push_series(Series::new("informed", points));
    Ok((table, chart))
}

fn layers_outputs(cfg: &RunConfig) -> Result<(Table, LineChart), CliError> {
    let dist = build_dist(cfg)?;
    let layers = DunbarLayers::new(cfg.layers.clone())?;
    let mut table = Table::new(vec!["layer", "cutoff", "feasible"]);
    let mut points = Vec::new();
    for &layer in layers.levels() {
        let row = dunbar::cutoff_for_layer(&dist, cfg.population, layer)?;
        table.push_row(vec![
            Cell::from(layer),
            Cell::from(row.cutoff),
            Cell::from(row.feasible()),
        ]);
        if let Some(cutoff) = row.cutoff {
            points.push((layer as f64, cutoff));
        }
    }
    let mut chart = LineChart::new(
        format!("Trust cutoff per layer (N={})", cfg.population),
        "layer size".to_string(),
        "trust cutoff".to_string(),
    );
    chart.push_series(Series::new("cutoff", points));
    Ok((table, chart))
}

fn alpha_outputs(cfg: &RunConfig) -> Result<(Table, LineChart), CliError> {
    warn_unconventional(&cfg.alphas);
    let sweep =
        dunbar::alpha_cutoff_curve(cfg.population, cfg.layer, &cfg.alphas, cfg.driver.into())?;
    let mut table = Table::new(vec!["alpha", "cutoff", "alpha_times_cutoff"]);
    let mut cutoff_pts = Vec::new();
    let mut product_pts = Vec::new();
    for row in &sweep.rows {
        let product = row.value.map(|c| row.x * c);
        table.push_row(vec![
            Cell::from(row.x),
            Cell::from(row.value),
            Cell::from(product),
        ]);
        if let Some(c) = row.value {
            cutoff_pts.push((row.x, c));
            product_pts.push((row.x, row.x * c));
        }
    }
    let mut chart = LineChart::new(
        format!(
            "Layer-{} cutoff vs exponent (N={})",
            cfg.layer, cfg.population
        ),
        "alpha".to_string(),
        "trust cutoff".to_string(),
    );
    chart.push_series(Series::new("cutoff", cutoff_pts));
    chart.push_series(Series::new("alpha*cutoff", product_pts));
    Ok((table, chart))
}

fn population_outputs(cfg: &RunConfig) -> Result<(Table, LineChart), CliError> {
    let dist = build_dist(cfg)?;
    let sweep = dunbar::cutoff_vs_population(&dist, cfg.layer, &cfg.populations)?;
    let mut table = Table::new(vec!["n", "cutoff"]);
    let mut points = Vec::new();
    for row in &sweep.rows {
        table.push_row(vec![Cell::from(row.x as i64), Cell::from(row.value)]);
        if let Some(c) = row.value {
            points.push((row.x, c));
        }
    }
    let mut chart = LineChart::new(
        format!("Layer-{} cutoff vs population", cfg.layer),
        "population size".to_string(),
        "trust cutoff".to_string(),
    );
    chart.push_series(Series::new("cutoff", points));
    Ok((table, chart))
}

fn montecarlo_outputs(cfg: &RunConfig) -> Result<(Table, LineChart), CliError> {
    let params = build_params(cfg, build_dist(cfg)?)?;
    let ensemble = monte_carlo::simulate_ensemble(&params, cfg.runs, cfg.seed, cfg.t_end)?;
    let mut table = Table::new(vec!["t", "mean_r", "std_r"]);
    let mut mean_pts = Vec::with_capacity(ensemble.times.len());
    let mut field_pts = Vec::with_capacity(ensemble.times.len());
    let ignorant = params.ignorant_fraction();
    for j in 0..ensemble.times.len() {
        let t = ensemble.times[j];
        table.push_row(vec![
            Cell::from(t),
            Cell::from(ensemble.mean_r[j]),
            Cell::from(ensemble.std_r[j]),
        ]);
        mean_pts.push((t, ensemble.mean_r[j]));
        field_pts.push((
            t,
            dynamics::transmitter_fraction(t, ignorant, params.r0, params.beta)?,
        ));
    }
    let mut chart = LineChart::new(
        format!(
            "Stochastic ensemble ({} runs, N={}, seed {})",
            cfg.runs, cfg.population, cfg.seed
        ),
        "time".to_string(),
        "transmitter fraction".to_string(),
    );
    chart.push_series(Series::new("ensemble mean", mean_pts));
    chart.push_series(Series::new("mean-field", field_pts));
    Ok((table, chart))
}

// ---------------------------------------------------------------------
// Output writing
// ---------------------------------------------------------------------

fn emit(
    cfg: &RunConfig,
    name: &str,
    table: &Table,
    chart: &LineChart,
    started: Instant,
) -> Result<(), CliError> {
    let (csv_path, svg_path) = output_paths(cfg, name);
    let mut written = Vec::new();
    if let Some(path) = csv_path {
        write_atomic(&path, &table.to_csv())?;
        written.push(path);
    }
    if let Some(path) = svg_path {
        write_atomic(&path, &chart.render())?;
        written.push(path);
    }
    let names: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
    println!(
        "{name}: {} rows -> {} ({} ms)",
        table.row_count(),
        names.join(", "),
        started.elapsed().as_millis()
    );
    Ok(())
}

/// Chooses output paths for the selected format. With `--format both`, an
/// explicit `--output` acts as a base name: a trailing `.csv` or `.svg`
/// extension is stripped before both extensions are attached.
fn output_paths(cfg: &RunConfig, name: &str) -> (Option<PathBuf>, Option<PathBuf>) {
    match cfg.format {
        FormatKind::Csv => {
            let path = cfg
                .output
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("{name}.csv")));
            (Some(path), None)
        }
        FormatKind::Svg => {
            let path = cfg
                .output
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("{name}.svg")));
            (None, Some(path))
        }
        FormatKind::Both => {
            let base = match &cfg.output {
                None => PathBuf::from(name),
                Some(p) => match p.extension().and_then(|e| e.to_str()) {
                    Some("csv") | Some("svg") => p.with_extension(""),
                    _ => p.clone(),
                },
            };
            let mut csv = base.clone().into_os_string();
            csv.push(".csv");
            let mut svg = base.into_os_string();
            svg.push(".svg");
            (Some(csv.into()), Some(svg.into()))
        }
    }
}

/// Writes `content` through a sibling temp file and an atomic rename, so
/// the destination either keeps its old bytes or holds the complete new
/// ones — never a truncated mix.
fn write_atomic(path: &Path, content: &str) -> Result<(), CliError> {
    let mut tmp_name = path.as_os_str().to_os_string();
    tmp_name.push(".tmp");
    let tmp = PathBuf::from(tmp_name);
    let describe = |e: std::io::Error| CliError::Io(format!("cannot write {}: {e}", path.display()));
    fs::write(&tmp, content).map_err(describe)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        describe(e)
    })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn empty_args() -> CommonArgs {
        CommonArgs {
            population: None,
            beta: None,
            tc: None,
            r0: None,
            dist: None,
            alpha: None,
            driver: None,
            seed: None,
            runs: None,
            t_end: None,
            dt: None,
            layer: None,
            layers: None,
            populations: None,
            alphas: None,
            step: None,
            format: None,
            output: None,
            config: None,
        }
    }

    fn write_config(dir: &tempfile::TempDir, body: &str) -> PathBuf {
        let path = dir.path().join("run.conf");
        fs::write(&path, body).unwrap();
        path
    }

    #[test]
    fn defaults_resolve_when_nothing_is_given() {
        let cfg = resolve(&empty_args()).unwrap();
        assert_eq!(cfg.population, 150);
        assert_eq!(cfg.beta, 0.25);
        assert_eq!(cfg.tc, 0.66);
        assert_eq!(cfg.r0, None);
        assert_eq!(cfg.dist, DistKind::Uniform);
        assert_eq!(cfg.seed, 42);
        assert_eq!(cfg.runs, 500);
        assert_eq!(cfg.t_end, 100.0);
        assert_eq!(cfg.dt, 0.01);
        assert_eq!(cfg.layer, 50);
        assert_eq!(cfg.layers, vec![5, 15, 50, 150]);
        assert_eq!(cfg.populations, vec![150, 500, 1500, 5000]);
        assert_eq!(cfg.alphas.len(), 9);
        assert_eq!(cfg.step, 0.01);
        assert_eq!(cfg.format, FormatKind::Csv);
        assert_eq!(cfg.output, None);
    }

    #[test]
    fn config_file_fills_gaps_but_flags_win() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_config(&dir, "population = 500\nbeta = 0.25\n");
        let mut args = empty_args();
        args.config = Some(path);
        args.population = Some(200);
        let cfg = resolve(&args).unwrap();
        assert_eq!(cfg.population, 200, "flag outranks config");
        assert_eq!(cfg.beta, 0.25, "config outranks default");
    }

    #[test]
    fn config_accepts_comments_blank_lines_and_dashed_keys() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_config(
            &dir,
            "# run profile\n\nt-end = 55   # horizon\nFORMAT=svg\nlayers = 5, 15, 50\n",
        );
        let mut args = empty_args();
        args.config = Some(path);
        let cfg = resolve(&args).unwrap();
        assert_eq!(cfg.t_end, 55.0);
        assert_eq!(cfg.format, FormatKind::Svg);
        assert_eq!(cfg.layers, vec![5, 15, 50]);
    }

    #[test]
    fn unknown_config_key_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_config(&dir, "populaton = 500\n");
        let mut args = empty_args();
        args.config = Some(path);
        let err = resolve(&args).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("unknown key 'populaton'"), "{err}");
    }

    #[test]
    fn malformed_config_lines_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        for body in ["beta 0.5\n", "beta = pi\n", "dist = gaussian\n"] {
            let path = write_config(&dir, body);
            let mut args = empty_args();
            args.config = Some(path);
            let err = resolve(&args).unwrap_err();
            assert_eq!(err.exit_code(), 2, "body {body:?} should fail validation");
        }
    }

    #[test]
    fn missing_config_file_is_a_validation_error() {
        let mut args = empty_args();
        args.config = Some(PathBuf::from("/nonexistent/run.conf"));
        let err = resolve(&args).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn bad_list_flags_are_validation_errors() {
        let mut args = empty_args();
        args.layers = Some("5,x,50".to_string());
        assert_eq!(resolve(&args).unwrap_err().exit_code(), 2);
        let mut args = empty_args();
        args.alphas = Some("2.1,,2.5".to_string());
        assert_eq!(resolve(&args).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn both_format_strips_known_extensions_from_the_base() {
        let mut cfg = resolve(&empty_args()).unwrap();
        cfg.format = FormatKind::Both;
        cfg.output = Some(PathBuf::from("out/result.csv"));
        let (csv, svg) = output_paths(&cfg, "layers");
        assert_eq!(csv, Some(PathBuf::from("out/result.csv")));
        assert_eq!(svg, Some(PathBuf::from("out/result.svg")));

        cfg.output = Some(PathBuf::from("report"));
        let (csv, svg) = output_paths(&cfg, "layers");
        assert_eq!(csv, Some(PathBuf::from("report.csv")));
        assert_eq!(svg, Some(PathBuf::from("report.svg")));

        cfg.output = None;
        let (csv, svg) = output_paths(&cfg, "layers");
        assert_eq!(csv, Some(PathBuf::from("layers.csv")));
        assert_eq!(svg, Some(PathBuf::from("layers.svg")));
    }

    #[test]
    fn single_format_uses_the_output_path_verbatim() {
        let mut cfg = resolve(&empty_args()).unwrap();
        cfg.output = Some(PathBuf::from("custom.name"));
        let (csv, svg) = output_paths(&cfg, "sweep");
        assert_eq!(csv, Some(PathBuf::from("custom.name")));
        assert_eq!(svg, None);
        cfg.format = FormatKind::Svg;
        let (csv, svg) = output_paths(&cfg, "sweep");
        assert_eq!(csv, None);
        assert_eq!(svg, Some(PathBuf::from("custom.name")));
    }

    #[test]
    fn library_errors_carry_the_right_exit_codes() {
        let validation: CliError = Error::OutOfDomain {
            name: "tc",
            value: 1.5,
            min: 0.0,
            max: 1.0,
        }
        .into();
        assert_eq!(validation.exit_code(), 2);
        let infeasible: CliError = Error::InfeasibleLayer { layer: 150, n: 150 }.into();
        assert_eq!(infeasible.exit_code(), 3);
        assert_eq!(CliError::Io("disk".into()).exit_code(), 4);
    }

    #[test]
    fn atomic_write_replaces_and_never_leaves_temp_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.csv");
        write_atomic(&path, "a,b\n1,2\n").unwrap();
        write_atomic(&path, "a,b\n3,4\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "a,b\n3,4\n");
        let leftovers: Vec<_> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        assert_eq!(leftovers, vec![std::ffi::OsString::from("table.csv")]);
    }

    #[test]
    fn unwritable_output_is_an_io_error() {
        let err = write_atomic(Path::new("/nonexistent-dir/out.csv"), "x").unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn help_and_parse_failures_use_standard_codes() {
        assert_eq!(run(["dunbar-diffusion", "--help"]), 0);
        assert_eq!(run(["dunbar-diffusion", "not-a-command"]), 2);
        assert_eq!(run(["dunbar-diffusion", "trajectory", "--beta", "nope"]), 2);
    }
}
