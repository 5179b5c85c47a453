use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{Command, InputFormArg, OptimizerArg, PipelineConfig, StrategyArg};

/// Quantum-circuit time-series toolkit on a statevector simulator.
#[derive(Debug, Parser)]
#[command(name = "qts", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Amplitude-encode the selected columns in every layout.
    Encode(Flags),
    /// Quantum exponential smoothing over the rows.
    Smooth(Flags),
    /// Bin averages by Hadamards on the low qubits.
    Bin(Flags),
    /// Haar wavelet transform, optionally truncated.
    Haar(Flags),
    /// Distance between the Fourier coefficients of two columns.
    QftDist(Flags),
    /// First, second or seasonal differencing circuit.
    Diff(Flags),
    /// Overlap with the equal superposition, before and after differencing.
    Stationarity(Flags),
    /// Classical ARIMA fit, plus a variational fit with --layers.
    Fit(Flags),
    /// Classical ARIMA forecast.
    Forecast(Flags),
}

#[derive(Debug, Args)]
pub struct Flags {
    /// CSV file with a header row.
    #[arg(long)]
    pub input: PathBuf,
    /// Report path; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Timestamp column; the row index is used when absent.
    #[arg(long = "time-col")]
    pub time_col: Option<String>,
    /// Comma-separated value columns; all non-time columns when absent.
    #[arg(long = "value-cols", value_delimiter = ',')]
    pub value_cols: Vec<String>,
    /// Smoothing factor in (0, 1).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Bin size (power of two).
    #[arg(long)]
    pub k: Option<usize>,
    /// Seasonal lag.
    #[arg(long)]
    pub s: Option<usize>,
    /// Haar coefficients to keep.
    #[arg(long)]
    pub keep: Option<usize>,
    /// Autoregressive order (default 1)
    #[arg(long)]
    pub p: Option<usize>,
    /// Differencing order.
    #[arg(long)]
    pub d: Option<usize>,
    /// Moving-average order (default 0)
    #[arg(long)]
    pub q: Option<usize>,
    /// Ansatz layers; enables the variational fit.
    #[arg(long)]
    pub layers: Option<usize>,
    /// Variational model input state (default stacked)
    #[arg(long = "input-form", value_enum)]
    pub input_form: Option<InputFormArg>,
    /// Distance circuit (default stacked)
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyArg>,
    /// Sample the swap test instead of computing it exactly.
    #[arg(long)]
    pub shots: Option<usize>,
    /// Seed for every random draw
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Steps to forecast
    #[arg(long)]
    pub horizon: Option<usize>,
    /// Optimizer iteration budget (default 200)
    #[arg(long = "max-iters")]
    pub max_iters: Option<usize>,
    /// Variational optimizer (default spsa)
    #[arg(long, value_enum)]
    pub optimizer: Option<OptimizerArg>,
    /// Indent the JSON report.
    #[arg(long)]
    pub pretty: bool,
}

impl Cli {
    pub fn into_config(self) -> PipelineConfig {
        let (command, f) = match self.command {
            Sub::Encode(f) => (Command::Encode, f),
            Sub::Smooth(f) => (Command::Smooth, f),
            Sub::Bin(f) => (Command::Bin, f),
            Sub::Haar(f) => (Command::Haar, f),
            Sub::QftDist(f) => (Command::QftDist, f),
            Sub::Diff(f) => (Command::Diff, f),
            Sub::Stationarity(f) => (Command::Stationarity, f),
            Sub::Fit(f) => (Command::Fit, f),
            Sub::Forecast(f) => (Command::Forecast, f),
        };
        PipelineConfig {
            command,
            input_path: f.input,
            output_path: f.output,
            time_column: f.time_col,
            value_columns: f.value_cols,
            alpha: f.alpha,
            k: f.k,
            s: f.s,
            keep: f.keep,
            p: f.p,
            d: f.d,
            q: f.q,
            layers: f.layers,
            input_form: f.input_form,
            strategy: f.strategy,
            shots: f.shots,
            seed: f.seed,
            horizon: f.horizon,
            max_iters: f.max_iters,
            optimizer: f.optimizer,
            pretty: f.pretty,
        }
    }
}
