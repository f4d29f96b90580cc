//! Command-line frontend: flag parsing, scenario assembly, and CSV/JSON
//! emission of sweep records.
//!
//! All dB-to-linear conversions for user inputs happen here; the library
//! below is entirely linear scale. CSV output is locale-independent
//! (`.` decimal separator, `,` field separator, `\n` line terminator)
//! with at least six significant digits per numeric cell. JSON output is
//! a compact document with alphabetically ordered keys, so parsing and
//! re-emitting it reproduces the byte stream; every JSON row carries the
//! full parameter echo alongside the tabulated columns.
//!
//! Exit codes: 0 on success, 2 on invalid arguments, 3 on numerical
//! failure (an energy overflowed the f64 range).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::channel::{capacity, snr_for_rate};
use crate::energy::{
    db_to_linear, evaluate_breakdown, linear_to_db, BurstFactor, ComplexityModel, NetworkKind,
    Scenario,
};
use crate::error::{ensure_positive, Error, Result};
use crate::optimize::{optimal_relay_count, tradeoff_curve, BurstMode};
use crate::power::{equal_allocation, recursive_allocation};
use crate::sweeps::{
    delta_grid_lines, delta_grid_markers, rate_grid_half_steps, reproduce_fig2,
    reproduce_fig3_fig4, reproduce_fig5, reproduce_fig6, SweepParameters, SweepRecord,
};

/// Parsed command line. Exactly one of `--pref` / `--rref` may be given;
/// the other is derived through the capacity function.
#[derive(Debug, Parser)]
#[command(
    name = "multihop-energy",
    version,
    about = "Transmission-computation energy tradeoffs of multi-hop decode-and-forward networks"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Path loss exponent.
    #[arg(long, global = true, default_value_t = 3.0)]
    pub alpha: f64,

    /// Noise power (linear).
    #[arg(long, global = true, default_value_t = 1.0)]
    pub sigma2: f64,

    /// Reference transmit power (linear). Defaults to 1 when neither
    /// --pref nor --rref is given.
    #[arg(long, global = true, conflicts_with = "rref")]
    pub pref: Option<f64>,

    /// Reference rate in bits/symbol; implies --pref = sigma2 * (2^R - 1).
    #[arg(long, global = true)]
    pub rref: Option<f64>,

    /// Reference computation-to-transmission energy ratio at rate 1, in dB.
    #[arg(long = "eta1-db", global = true, default_value_t = 0.0)]
    pub eta1_db: f64,

    /// Receiver complexity model.
    #[arg(long, global = true, value_enum, default_value = "exp")]
    pub model: ModelArg,

    /// Network kind.
    #[arg(long, global = true, value_enum, default_value = "wireless")]
    pub network: NetworkArg,

    /// Largest relay count examined by optimize-n and the network-size sweep.
    #[arg(long, global = true, default_value_t = 64)]
    pub nmax: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: FormatArg,

    /// Output path; standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-node transmit power assignment.
    ///
    /// CSV columns: kind,node,power,power_db
    PowerAssign {
        /// Number of relays.
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, value_enum, default_value = "recursive")]
        allocation: AllocationArg,
    },
    /// Normalized energies over one or more burst factors.
    ///
    /// CSV columns: n,delta_t,e_tx_norm,e_c_norm,e_sum_norm,eta
    EnergySweep {
        /// Number of relays.
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Burst factors in (0, 1], comma separated.
        #[arg(long = "delta-t", value_delimiter = ',', default_value = "1.0")]
        delta_t: Vec<f64>,
    },
    /// Transmission-computation tradeoff over the relay count.
    ///
    /// CSV columns: n,e_tx_norm,e_c_norm
    Tradeoff {
        #[arg(long = "n-min", default_value_t = 1)]
        n_min: usize,
        #[arg(long = "n-max", default_value_t = 30)]
        n_max: usize,
    },
    /// Sum-energy-optimal relay count.
    ///
    /// CSV columns: best_n,delta_t,e_tx_norm,e_c_norm,e_sum_norm,eta,candidates_examined
    OptimizeN {
        #[arg(long = "burst-mode", value_enum, default_value = "comp-opt")]
        burst_mode: BurstModeArg,
    },
    /// Bundled figure presets (fig2..fig6) with their reference grids.
    Reproduce {
        #[arg(value_enum)]
        figure: FigureArg,
        /// Burst-factor grid of the fig3/fig4 presets.
        #[arg(long, value_enum, default_value = "lines")]
        grid: GridArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Exp,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NetworkArg {
    Wireless,
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AllocationArg {
    Recursive,
    Equal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BurstModeArg {
    CompOpt,
    SumOpt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureArg {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    Lines,
    Markers,
}

/// Parses `argv`, runs the selected command, and writes its records.
/// Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(config) => config,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    match execute(&config) {
        Ok(()) => 0,
        Err(RunError::Model(err @ Error::PowerOverflow { .. })) => {
            eprintln!("error: {err}");
            3
        }
        Err(RunError::Model(err)) => {
            eprintln!("error: {err}");
            2
        }
        Err(RunError::Io(err)) => {
            eprintln!("error: {err}");
            2
        }
    }
}

enum RunError {
    Model(Error),
    Io(std::io::Error),
}

impl From<Error> for RunError {
    fn from(err: Error) -> Self {
        RunError::Model(err)
    }
}

/// One table cell; CSV and JSON render it differently.
#[derive(Debug, Clone)]
enum Cell {
    Int(i64),
    Real(f64),
    Text(&'static str),
    Flag(bool),
}

struct Row {
    cells: Vec<Cell>,
    /// Extra key/value pairs emitted only in JSON (the parameter echo).
    echo: Vec<(&'static str, Cell)>,
}

struct Emission {
    columns: Vec<&'static str>,
    rows: Vec<Row>,
    /// Emit a bare object instead of a one-element array.
    single_object: bool,
}

fn execute(config: &CliConfig) -> std::result::Result<(), RunError> {
    let globals = Globals::resolve(config)?;
    let emission = match &config.command {
        Command::PowerAssign { n, allocation } => power_assign(*n, *allocation, &globals)?,
        Command::EnergySweep { n, delta_t } => energy_sweep(*n, delta_t, &globals)?,
        Command::Tradeoff { n_min, n_max } => tradeoff(*n_min, *n_max, &globals)?,
        Command::OptimizeN { burst_mode } => optimize_n(*burst_mode, &globals)?,
        Command::Reproduce { figure, grid } => reproduce(*figure, *grid, &globals)?,
    };
    let text = match globals.format {
        FormatArg::Csv => to_csv(&emission),
        FormatArg::Json => to_json(&emission),
    };
    match &globals.out {
        Some(path) => std::fs::write(path, text).map_err(RunError::Io)?,
        None => {
            let stdout = std::io::stdout();
            stdout
                .lock()
                .write_all(text.as_bytes())
                .map_err(RunError::Io)?;
        }
    }
    Ok(())
}

/// Global flags resolved to linear scale.
struct Globals {
    alpha: f64,
    sigma2: f64,
    p_ref: f64,
    r_ref: f64,
    eta1: f64,
    model: ComplexityModel,
    network: NetworkKind,
    nmax: usize,
    format: FormatArg,
    out: Option<PathBuf>,
}

impl Globals {
    fn resolve(config: &CliConfig) -> Result<Self> {
        ensure_positive("alpha", config.alpha)?;
        ensure_positive("sigma2", config.sigma2)?;
        let (p_ref, r_ref) = match (config.pref, config.rref) {
            (None, Some(r_ref)) => {
                ensure_positive("rref", r_ref)?;
                (config.sigma2 * snr_for_rate(r_ref)?, r_ref)
            }
            (pref, None) => {
                let p_ref = pref.unwrap_or(1.0);
                ensure_positive("pref", p_ref)?;
                (p_ref, capacity(p_ref / config.sigma2)?)
            }
            // clap rejects the combination already.
            (Some(_), Some(_)) => unreachable!("--pref conflicts with --rref"),
        };
        Ok(Self {
            alpha: config.alpha,
            sigma2: config.sigma2,
            p_ref,
            r_ref,
            eta1: db_to_linear(config.eta1_db),
            model: match config.model {
                ModelArg::Exp => ComplexityModel::exponential(),
                ModelArg::Linear => ComplexityModel::linear(),
            },
            network: match config.network {
                NetworkArg::Wireless => NetworkKind::Wireless,
                NetworkArg::Fixed => NetworkKind::Fixed,
            },
            nmax: config.nmax,
            format: config.format,
            out: config.out.clone(),
        })
    }

    fn scenario(&self) -> Scenario {
        Scenario {
            r_ref: self.r_ref,
            alpha: self.alpha,
            sigma2: self.sigma2,
            eta1: self.eta1,
            model: self.model,
            network: self.network,
        }
    }

    fn echo(&self) -> Vec<(&'static str, Cell)> {
        vec![
            ("alpha", Cell::Real(self.alpha)),
            ("sigma2", Cell::Real(self.sigma2)),
            ("p_ref", Cell::Real(self.p_ref)),
            ("r_ref", Cell::Real(self.r_ref)),
            ("eta1", Cell::Real(self.eta1)),
            ("model", Cell::Text(model_name(&self.model))),
            ("network", Cell::Text(network_name(self.network))),
        ]
    }
}

fn model_name(model: &ComplexityModel) -> &'static str {
    match model {
        ComplexityModel::Exponential { .. } => "exp",
        ComplexityModel::Linear { .. } => "linear",
    }
}

fn network_name(network: NetworkKind) -> &'static str {
    match network {
        NetworkKind::Wireless => "wireless",
        NetworkKind::Fixed => "fixed",
    }
}

fn record_echo(parameters: &SweepParameters) -> Vec<(&'static str, Cell)> {
    let mut echo = vec![
        ("alpha", Cell::Real(parameters.alpha)),
        ("sigma2", Cell::Real(parameters.sigma2)),
        ("p_ref", Cell::Real(parameters.p_ref)),
        ("r_ref", Cell::Real(parameters.r_ref)),
        ("eta1", Cell::Real(parameters.eta1)),
        ("model", Cell::Text(model_name(&parameters.model))),
        ("network", Cell::Text(network_name(parameters.network))),
    ];
    if let Some(n) = parameters.relay_count {
        echo.push(("relay_count", Cell::Int(n as i64)));
    }
    if let Some(divisor) = parameters.divisor {
        echo.push(("divisor", Cell::Int(divisor as i64)));
    }
    echo
}

fn record_output(record: &SweepRecord, name: &str) -> f64 {
    record
        .outputs
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(_, v)| v)
        .expect("sweep record output")
}

fn power_assign(n: usize, allocation: AllocationArg, globals: &Globals) -> Result<Emission> {
    let alloc = match allocation {
        AllocationArg::Recursive => recursive_allocation(n, globals.alpha, globals.p_ref)?,
        AllocationArg::Equal => equal_allocation(n, globals.alpha, globals.p_ref)?,
    };
    let kind = match allocation {
        AllocationArg::Recursive => "recursive",
        AllocationArg::Equal => "equal",
    };
    let rows = alloc
        .powers()
        .iter()
        .enumerate()
        .map(|(node, &power)| Row {
            cells: vec![
                Cell::Text(kind),
                Cell::Int(node as i64),
                Cell::Real(power),
                Cell::Real(linear_to_db(power / globals.p_ref)),
            ],
            echo: globals.echo(),
        })
        .collect();
    Ok(Emission {
        columns: vec!["kind", "node", "power", "power_db"],
        rows,
        single_object: false,
    })
}

fn energy_sweep(n: usize, delta_ts: &[f64], globals: &Globals) -> Result<Emission> {
    let scenario = globals.scenario();
    let mut rows = Vec::new();
    for &dt in delta_ts {
        let breakdown = evaluate_breakdown(n, BurstFactor::new(dt)?, &scenario)?;
        rows.push(Row {
            cells: vec![
                Cell::Int(n as i64),
                Cell::Real(dt),
                Cell::Real(breakdown.e_tx_norm),
                Cell::Real(breakdown.e_c_norm),
                Cell::Real(breakdown.e_sum_norm),
                Cell::Real(breakdown.eta),
            ],
            echo: globals.echo(),
        });
    }
    Ok(Emission {
        columns: vec![
            "n",
            "delta_t",
            "e_tx_norm",
            "e_c_norm",
            "e_sum_norm",
            "eta",
        ],
        rows,
        single_object: false,
    })
}

fn tradeoff(n_min: usize, n_max: usize, globals: &Globals) -> Result<Emission> {
    let points = tradeoff_curve(&globals.scenario(), n_min..=n_max)?;
    let rows = points
        .iter()
        .map(|point| Row {
            cells: vec![
                Cell::Int(point.relay_count as i64),
                Cell::Real(point.e_tx_norm),
                Cell::Real(point.e_c_norm),
            ],
            echo: globals.echo(),
        })
        .collect();
    Ok(Emission {
        columns: vec!["n", "e_tx_norm", "e_c_norm"],
        rows,
        single_object: false,
    })
}

fn optimize_n(burst_mode: BurstModeArg, globals: &Globals) -> Result<Emission> {
    let mode = match burst_mode {
        BurstModeArg::CompOpt => BurstMode::CompOpt,
        BurstModeArg::SumOpt => BurstMode::SumOpt,
    };
    let result = optimal_relay_count(&globals.scenario(), globals.nmax, mode)?;
    let row = Row {
        cells: vec![
            Cell::Int(result.best_n as i64),
            Cell::Real(result.best_delta_t.get()),
            Cell::Real(result.breakdown.e_tx_norm),
            Cell::Real(result.breakdown.e_c_norm),
            Cell::Real(result.breakdown.e_sum_norm),
            Cell::Real(result.breakdown.eta),
            Cell::Int(result.candidates_examined as i64),
        ],
        echo: globals.echo(),
    };
    Ok(Emission {
        columns: vec![
            "best_n",
            "delta_t",
            "e_tx_norm",
            "e_c_norm",
            "e_sum_norm",
            "eta",
            "candidates_examined",
        ],
        rows: vec![row],
        single_object: true,
    })
}

fn reproduce(figure: FigureArg, grid: GridArg, globals: &Globals) -> Result<Emission> {
    match figure {
        FigureArg::Fig2 => {
            let records = reproduce_fig2(&[3.0, 4.0, 5.0], 5, globals.p_ref)?;
            let rows = records
                .iter()
                .map(|r| Row {
                    cells: vec![
                        Cell::Real(r.parameters.alpha),
                        Cell::Int(r.independent_value as i64),
                        Cell::Real(record_output(r, "power_db")),
                    ],
                    echo: record_echo(&r.parameters),
                })
                .collect();
            Ok(Emission {
                columns: vec!["alpha", "node", "power_db"],
                rows,
                single_object: false,
            })
        }
        FigureArg::Fig3 | FigureArg::Fig4 => {
            let delta_grid = match grid {
                GridArg::Lines => delta_grid_lines(),
                GridArg::Markers => delta_grid_markers(),
            };
            let records =
                reproduce_fig3_fig4(&[0, 1], globals.r_ref, globals.alpha, &delta_grid)?;
            let rows = records
                .iter()
                .map(|r| Row {
                    cells: vec![
                        Cell::Int(r.parameters.relay_count.unwrap_or(0) as i64),
                        Cell::Real(r.independent_value),
                        Cell::Real(record_output(r, "e_tx_exact")),
                        Cell::Real(record_output(r, "e_tx_fixed")),
                        Cell::Real(record_output(r, "e_c_norm")),
                        Cell::Flag(r.clipped_in_paper),
                        Cell::Flag(r.overflow),
                    ],
                    echo: record_echo(&r.parameters),
                })
                .collect();
            Ok(Emission {
                columns: vec![
                    "n",
                    "delta_t",
                    "e_tx_exact",
                    "e_tx_fixed",
                    "e_c_norm",
                    "clipped_in_paper",
                    "overflow",
                ],
                rows,
                single_object: false,
            })
        }
        FigureArg::Fig5 => {
            let records = reproduce_fig5(&[0.1, 2.0], 1..=30, globals.alpha)?;
            let rows = records
                .iter()
                .map(|r| Row {
                    cells: vec![
                        Cell::Real(r.parameters.r_ref),
                        Cell::Text(network_name(r.parameters.network)),
                        Cell::Int(r.independent_value as i64),
                        Cell::Real(record_output(r, "e_tx_norm")),
                        Cell::Real(record_output(r, "e_c_norm")),
                    ],
                    echo: record_echo(&r.parameters),
                })
                .collect();
            Ok(Emission {
                columns: vec!["r_ref", "network", "n", "e_tx_norm", "e_c_norm"],
                rows,
                single_object: false,
            })
        }
        FigureArg::Fig6 => {
            let records = reproduce_fig6(
                &[0.0, -10.0, -20.0],
                &rate_grid_half_steps(),
                &[ComplexityModel::exponential(), ComplexityModel::linear()],
                &[NetworkKind::Wireless, NetworkKind::Fixed],
                globals.nmax,
            )?;
            let rows = records
                .iter()
                .map(|r| Row {
                    cells: vec![
                        Cell::Real(linear_to_db(r.parameters.eta1)),
                        Cell::Text(model_name(&r.parameters.model)),
                        Cell::Text(network_name(r.parameters.network)),
                        Cell::Real(r.independent_value),
                        Cell::Int(record_output(r, "best_n") as i64),
                        Cell::Real(record_output(r, "delta_t")),
                        Cell::Real(record_output(r, "e_sum_norm")),
                    ],
                    echo: record_echo(&r.parameters),
                })
                .collect();
            Ok(Emission {
                columns: vec![
                    "eta1_db",
                    "model",
                    "network",
                    "r_ref",
                    "best_n",
                    "delta_t",
                    "e_sum_norm",
                ],
                rows,
                single_object: false,
            })
        }
    }
}

/// Formats a real with six significant digits, trailing zeros trimmed.
fn fmt_sig(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if value.is_nan() {
        return "nan".to_string();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).clamp(0, 30) as usize;
    let mut text = format!("{value:.decimals$}");
    if text.contains('.') {
        while text.ends_with('0') {
            text.pop();
        }
        if text.ends_with('.') {
            text.pop();
        }
    }
    if text == "-0" {
        text = "0".to_string();
    }
    text
}

fn cell_to_csv(cell: &Cell) -> String {
    match cell {
        Cell::Int(i) => i.to_string(),
        Cell::Real(v) => fmt_sig(*v),
        Cell::Text(s) => (*s).to_string(),
        Cell::Flag(b) => b.to_string(),
    }
}

fn cell_to_json(cell: &Cell) -> Value {
    match cell {
        Cell::Int(i) => Value::from(*i),
        Cell::Real(v) if v.is_finite() => Value::from(*v),
        Cell::Real(_) => Value::Null,
        Cell::Text(s) => Value::from(*s),
        Cell::Flag(b) => Value::from(*b),
    }
}

fn to_csv(emission: &Emission) -> String {
    let mut text = emission.columns.join(",");
    text.push('\n');
    for row in &emission.rows {
        let fields: Vec<String> = row.cells.iter().map(cell_to_csv).collect();
        text.push_str(&fields.join(","));
        text.push('\n');
    }
    text
}

fn to_json(emission: &Emission) -> String {
    let objects: Vec<Value> = emission
        .rows
        .iter()
        .map(|row| {
            let mut map = Map::new();
            for (key, cell) in &row.echo {
                map.insert((*key).to_string(), cell_to_json(cell));
            }
            for (key, cell) in emission.columns.iter().zip(&row.cells) {
                map.insert((*key).to_string(), cell_to_json(cell));
            }
            Value::Object(map)
        })
        .collect();
    let document = if emission.single_object && objects.len() == 1 {
        objects.into_iter().next().expect("one row")
    } else {
        Value::Array(objects)
    };
    let mut text = document.to_string();
    text.push('\n');
    text
}
