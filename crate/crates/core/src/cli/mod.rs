//! Command-line front end: CSV ingestion, flag validation, stage dispatch
//! and JSON reports. The `qts` binary is a thin wrapper over [`main_with`].

mod args;
mod ingest;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use args::{Cli, Flags, Sub};
pub use ingest::ingest_csv;
pub use report::{
    amplitudes, emit_report, parse_report, Amplitude, InputSummary, PipelineReport, StageReport,
};

use crate::encoding::{
    encode_stacked, encode_superposed, encode_tensor, encode_values, TimeSeries,
};
use crate::error::Error;
use crate::forecast::{self, InputForm, ModelParams, Optimizer, VariationalConfig};
use crate::preprocess::{self, DiffOrder};
use crate::spectral::{self, DistanceStrategy};
use crate::statevec::{log2_exact, StateVector, MAX_QUBITS};

pub const TOOL_NAME: &str = "qts";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Encode,
    Smooth,
    Bin,
    Haar,
    QftDist,
    Diff,
    Stationarity,
    Fit,
    Forecast,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Encode => "encode",
            Command::Smooth => "smooth",
            Command::Bin => "bin",
            Command::Haar => "haar",
            Command::QftDist => "qft-dist",
            Command::Diff => "diff",
            Command::Stationarity => "stationarity",
            Command::Fit => "fit",
            Command::Forecast => "forecast",
        }
    }

    /// Stage flags the command accepts besides the common ones.
    fn accepts(self) -> &'static [&'static str] {
        match self {
            Command::Encode => &[],
            Command::Smooth => &["alpha"],
            Command::Bin => &["k"],
            Command::Haar => &["keep"],
            Command::QftDist => &["strategy", "shots"],
            Command::Diff | Command::Stationarity => &["d", "s"],
            Command::Fit => &[
                "p",
                "d",
                "q",
                "layers",
                "input-form",
                "optimizer",
                "max-iters",
            ],
            Command::Forecast => &["p", "d", "q", "horizon"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum InputFormArg {
    TwoRegister,
    WeightedSum,
    Stacked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum StrategyArg {
    Stacked,
    Superposed,
    TwoRegister,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OptimizerArg {
    Spsa,
    NelderMead,
}

/// Everything one invocation needs. Stage parameters a command does not use
/// must be `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub command: Command,
    pub input_path: PathBuf,
    pub output_path: Option<PathBuf>,
    pub time_column: Option<String>,
    pub value_columns: Vec<String>,
    pub alpha: Option<f64>,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub keep: Option<usize>,
    pub p: Option<usize>,
    pub d: Option<usize>,
    pub q: Option<usize>,
    pub layers: Option<usize>,
    pub input_form: Option<InputFormArg>,
    pub strategy: Option<StrategyArg>,
    pub shots: Option<usize>,
    pub seed: u64,
    pub horizon: Option<usize>,
    pub max_iters: Option<usize>,
    pub optimizer: Option<OptimizerArg>,
    pub pretty: bool,
}

pub const DEFAULT_MAX_ITERS: usize = 200;

/// Failure classes, one per process exit status.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn hint(err: &Error) -> &'static str {
    match err {
        Error::DegenerateInput(_) => {
            "the selected values (or an intermediate state) vanish or are constant"
        }
        Error::ImpossibleOutcome(_) => {
            "the postselected branch has zero probability for this input"
        }
        Error::RankDeficient(_) => "lower --p/--q or supply a longer, non-constant series",
        Error::NotUnitary { .. } => "internal operator lost unitarity; report this input",
        Error::Capacity { .. } => "the series is too long for the simulator; select fewer rows",
        _ => "check the selected columns and the stage flags",
    }
}

/// Wraps a library error with the stage that raised it.
fn at(stage: &'static str) -> impl Fn(Error) -> CliError {
    move |err| {
        let msg = format!("stage {stage}: {err} (hint: {})", hint(&err));
        if err.is_numerical() {
            CliError::Numerical(msg)
        } else {
            CliError::Data(msg)
        }
    }
}

impl PipelineConfig {
    fn given(&self) -> Vec<&'static str> {
        [
            ("alpha", self.alpha.is_some()),
            ("k", self.k.is_some()),
            ("s", self.s.is_some()),
            ("keep", self.keep.is_some()),
            ("p", self.p.is_some()),
            ("d", self.d.is_some()),
            ("q", self.q.is_some()),
            ("layers", self.layers.is_some()),
            ("input-form", self.input_form.is_some()),
            ("strategy", self.strategy.is_some()),
            ("shots", self.shots.is_some()),
            ("horizon", self.horizon.is_some()),
            ("max-iters", self.max_iters.is_some()),
            ("optimizer", self.optimizer.is_some()),
        ]
        .into_iter()
        .filter_map(|(name, set)| set.then_some(name))
        .collect()
    }

    /// Checks that need no data: flag relevance and value ranges.
    pub fn validate(&self) -> Result<(), CliError> {
        let cmd = self.command;
        for flag in self.given() {
            if !cmd.accepts().contains(&flag) {
                return Err(usage(format!(
                    "--{flag} does not apply to `{}`",
                    cmd.name()
                )));
            }
        }
        if let Some(alpha) = self.alpha {
            if !(alpha > 0.0 && alpha < 1.0) {
                return Err(usage(format!(
                    "--alpha must lie strictly between 0 and 1, got {alpha}"
                )));
            }
        }
        if cmd == Command::Smooth && self.alpha.is_none() {
            return Err(usage("`smooth` needs --alpha"));
        }
        match self.k {
            Some(k) if log2_exact(k).is_none() => {
                return Err(usage(format!("--k must be a power of two, got {k}")))
            }
            None if cmd == Command::Bin => return Err(usage("`bin` needs --k")),
            _ => {}
        }
        if self.keep == Some(0) {
            return Err(usage("--keep must be at least 1"));
        }
        if matches!(cmd, Command::Diff | Command::Stationarity) {
            if self.d.is_some() && self.s.is_some() {
                return Err(usage("give either --d or --s, not both"));
            }
            if let Some(d) = self.d {
                if d != 1 && d != 2 {
                    return Err(usage(format!(
                        "--d must be 1 or 2 for `{}`, got {d}",
                        cmd.name()
                    )));
                }
            }
            if self.s == Some(0) {
                return Err(usage("--s must be at least 1"));
            }
        }
        if let Some(shots) = self.shots {
            if shots == 0 {
                return Err(usage("--shots must be at least 1"));
            }
            if self.strategy != Some(StrategyArg::TwoRegister) {
                return Err(usage("--shots needs --strategy two-register"));
            }
        }
        if cmd == Command::Fit {
            if self.layers == Some(0) {
                return Err(usage("--layers must be at least 1"));
            }
            if self.layers.is_none() {
                for flag in ["input-form", "optimizer", "max-iters"] {
                    if self.given().contains(&flag) {
                        return Err(usage(format!("--{flag} needs --layers")));
                    }
                }
            }
            if self.max_iters == Some(0) {
                return Err(usage("--max-iters must be at least 1"));
            }
        }
        if cmd == Command::Forecast {
            match self.horizon {
                None => return Err(usage("`forecast` needs --horizon")),
                Some(0) => return Err(usage("--horizon must be at least 1")),
                _ => {}
            }
        }
        Ok(())
    }

    fn orders(&self) -> (usize, usize, usize) {
        (
            self.p.unwrap_or(1),
            self.d.unwrap_or(0),
            self.q.unwrap_or(0),
        )
    }

    fn diff_order(&self) -> DiffOrder {
        match (self.s, self.d) {
            (Some(s), _) => DiffOrder::Seasonal(s),
            (None, Some(2)) => DiffOrder::Second,
            _ => DiffOrder::First,
        }
    }

    fn input_form(&self) -> InputForm {
        match self.input_form.unwrap_or(InputFormArg::Stacked) {
            InputFormArg::Stacked => InputForm::Stacked,
            InputFormArg::TwoRegister => InputForm::TwoRegister,
            InputFormArg::WeightedSum => InputForm::WeightedSum {
                theta_y: std::f64::consts::FRAC_1_SQRT_2,
                theta_eps: std::f64::consts::FRAC_1_SQRT_2,
            },
        }
    }

    /// Checks that depend on the ingested series.
    fn validate_against(&self, series: &TimeSeries) -> Result<(), CliError> {
        let cmd = self.command;
        let n = series.len();
        let want = match cmd {
            Command::Encode | Command::Smooth => None,
            Command::QftDist => Some(2),
            _ => Some(1),
        };
        if let Some(want) = want {
            if series.dim() != want {
                return Err(usage(format!(
                    "--value-cols: `{}` needs exactly {want} value column(s), got {}",
                    cmd.name(),
                    series.dim()
                )));
            }
        }
        let padded = n.next_power_of_two().max(2);
        if log2_exact(padded).is_some_and(|m| m > MAX_QUBITS) {
            return Err(CliError::Data(format!(
                "{n} rows exceed the {MAX_QUBITS}-qubit limit"
            )));
        }
        if let Some(k) = self.k {
            if k > padded {
                return Err(usage(format!(
                    "--k = {k} exceeds the padded length {padded}"
                )));
            }
        }
        if let Some(keep) = self.keep {
            if keep > padded {
                return Err(usage(format!(
                    "--keep = {keep} exceeds the padded length {padded}"
                )));
            }
        }
        if let Some(s) = self.s {
            if cmd == Command::Stationarity && s >= n {
                return Err(usage(format!(
                    "--s = {s} must be below the series length {n}"
                )));
            }
            if s >= padded {
                return Err(usage(format!(
                    "--s = {s} must be below the padded length {padded}"
                )));
            }
        }
        if cmd == Command::QftDist && self.strategy == Some(StrategyArg::TwoRegister) {
            let needed = 2 * log2_exact(padded).expect("power of two") + 1;
            if needed > MAX_QUBITS {
                return Err(usage(format!(
                    "--strategy two-register needs {needed} qubits for {n} rows (limit {MAX_QUBITS})"
                )));
            }
        }
        if matches!(cmd, Command::Fit | Command::Forecast) {
            let (p, d, q) = self.orders();
            if n <= p + d + q + 2 {
                return Err(usage(format!(
                    "--p/--d/--q: {n} values are too few for p={p}, d={d}, q={q} (need more than {})",
                    p + d + q + 2
                )));
            }
            if self.layers.is_some() {
                let needed = forecast::required_qubits(p, q, self.input_form());
                if needed > MAX_QUBITS {
                    return Err(usage(format!(
                        "--p/--q need {needed} qubits (limit {MAX_QUBITS})"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn reals(state: &StateVector) -> Vec<f64> {
    state.real_parts()
}

fn encode_stage(series: &TimeSeries) -> Result<Vec<StageReport>, CliError> {
    let mut stages = Vec::new();
    for (name, result) in [
        ("encode_superposed", encode_superposed(series)),
        ("encode_stacked", encode_stacked(series)),
        ("encode_tensor", encode_tensor(series)),
    ] {
        let output = match result {
            Ok((state, record)) => json!({ "record": record, "amplitudes": amplitudes(&state) }),
            Err(e @ Error::Capacity { .. }) => json!({ "skipped": e.to_string() }),
            Err(e) => return Err(at("encode")(e)),
        };
        stages.push(StageReport {
            name: name.into(),
            output,
        });
    }
    Ok(stages)
}

fn smooth_stage(series: &TimeSeries, alpha: f64) -> Result<Vec<StageReport>, CliError> {
    let coeffs = preprocess::smoothing_coefficients(alpha).map_err(at("smooth"))?;
    let mut history = Vec::with_capacity(series.len());
    let mut row_norms = Vec::with_capacity(series.len());
    for row in series.rows() {
        let (padded, _) = crate::encoding::pad_to_power_of_two(row).map_err(at("smooth"))?;
        let (state, norm) = StateVector::from_real(&padded).map_err(at("smooth"))?;
        history.push(state);
        row_norms.push(norm);
    }
    let smoothed = preprocess::quantum_exp_smooth(&history, alpha).map_err(at("smooth"))?;
    let mut recurrence = reals(&history[0]);
    for y in &history[1..] {
        for (v, yi) in recurrence.iter_mut().zip(y.real_parts()) {
            *v = coeffs.a * yi + coeffs.b * *v;
        }
    }
    let unnormalized: Vec<Amplitude> = smoothed
        .unnormalized()
        .into_iter()
        .map(Amplitude::from)
        .collect();
    Ok(vec![StageReport {
        name: "smooth".into(),
        output: json!({
            "coefficients": coeffs,
            "state": amplitudes(&smoothed.state),
            "unnormalized": unnormalized,
            "classical_recurrence": recurrence,
            "norm_trace": smoothed.norm_trace,
            "postselect_probs": smoothed.postselect_probs,
            "row_norms": row_norms,
        }),
    }])
}

fn bin_stage(values: &[f64], k: usize) -> Result<Vec<StageReport>, CliError> {
    let (state, record) = encode_values(values).map_err(at("bin"))?;
    let (binned, prob) = preprocess::quantum_bin_average(&state, k).map_err(at("bin"))?;
    let sums_norm = (prob * k as f64).sqrt() * record.global_norm;
    let means: Vec<f64> = binned
        .real_parts()
        .iter()
        .map(|a| a * sums_norm / k as f64)
        .collect();
    let padded: Vec<f64> = reals(&state)
        .iter()
        .map(|a| a * record.global_norm)
        .collect();
    let classical = preprocess::classical_bin_means(&padded, k).map_err(at("bin"))?;
    Ok(vec![StageReport {
        name: "bin".into(),
        output: json!({
            "k": k,
            "state": amplitudes(&binned),
            "postselect_prob": prob,
            "bin_means": means,
            "classical_bin_means": classical,
        }),
    }])
}

fn haar_stage(values: &[f64], keep: Option<usize>) -> Result<Vec<StageReport>, CliError> {
    let (state, record) = encode_values(values).map_err(at("haar"))?;
    let coeffs = preprocess::quantum_haar_transform(&state).map_err(at("haar"))?;
    let scale = record.global_norm;
    let mut stages = vec![StageReport {
        name: "haar".into(),
        output: json!({
            "state": amplitudes(&coeffs),
            "coefficients": coeffs.real_parts().iter().map(|c| c * scale).collect::<Vec<_>>(),
        }),
    }];
    if let Some(keep) = keep {
        let compressed = preprocess::wavelet_compress(&state, keep).map_err(at("haar_compress"))?;
        let approx = compressed.reconstruct().map_err(at("haar_compress"))?;
        stages.push(StageReport {
            name: "haar_compress".into(),
            output: json!({
                "keep": keep,
                "kept_indices": compressed.kept.iter().map(|(i, _)| *i).collect::<Vec<_>>(),
                "kept_coefficients": compressed.kept.iter().map(|(_, v)| v * scale).collect::<Vec<_>>(),
                "dropped_energy_fraction": compressed.dropped_energy,
                "reconstruction": approx.iter().map(|v| v * scale).collect::<Vec<_>>(),
            }),
        });
    }
    Ok(stages)
}

fn qft_dist_stage(
    series: &TimeSeries,
    strategy: StrategyArg,
    shots: Option<usize>,
    seed: u64,
) -> Result<Vec<StageReport>, CliError> {
    let pad = |v: Vec<f64>| crate::encoding::pad_to_power_of_two(&v).map(|(p, _)| p);
    let mut y1 = pad(series.column(0)).map_err(at("qft-dist"))?;
    let mut y2 = pad(series.column(1)).map_err(at("qft-dist"))?;
    if y1.len() == 1 {
        y1.push(0.0);
        y2.push(0.0);
    }
    let strategy = match strategy {
        StrategyArg::Stacked => DistanceStrategy::Stacked,
        StrategyArg::Superposed => DistanceStrategy::Superposed,
        StrategyArg::TwoRegister => DistanceStrategy::TwoRegister,
    };
    let report = spectral::qft_distance(strategy, &y1, &y2, shots, seed).map_err(at("qft-dist"))?;
    let reference = if strategy == DistanceStrategy::Stacked {
        l2_diff(&y1, &y2)
    } else {
        let unit = |v: &[f64]| {
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            v.iter().map(|x| x / n).collect::<Vec<_>>()
        };
        l2_diff(&unit(&y1), &unit(&y2))
    };
    Ok(vec![StageReport {
        name: "qft-dist".into(),
        output: json!({ "result": report, "classical_distance": reference }),
    }])
}

fn l2_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).powi(2))
        .sum::<f64>()
        .sqrt()
}

fn diff_stage(values: &[f64], order: DiffOrder) -> Result<Vec<StageReport>, CliError> {
    let (state, record) = encode_values(values).map_err(at("diff"))?;
    let result = preprocess::quantum_difference(&state, order).map_err(at("diff"))?;
    let padded: Vec<f64> = reals(&state)
        .iter()
        .map(|a| a * record.global_norm)
        .collect();
    let classical = preprocess::classical_difference(&padded, order, true).map_err(at("diff"))?;
    Ok(vec![StageReport {
        name: "diff".into(),
        output: json!({
            "order": order,
            "full_state": amplitudes(&result.full_state),
            "difference_part": amplitudes(&result.difference_part),
            "postselect_prob": result.postselect_prob,
            "classical_cyclic_difference": classical,
        }),
    }])
}

/// Scores the raw series, its ordinary (non-cyclic) difference and the
/// circuit's cyclic difference part. The latter always sums to zero, so its
/// overlap with the equal superposition vanishes.
fn stationarity_stage(values: &[f64], order: DiffOrder) -> Result<Vec<StageReport>, CliError> {
    let stage = at("stationarity");
    let (state, _) = encode_values(values).map_err(&stage)?;
    let raw = preprocess::stationarity_score(&state).map_err(&stage)?;
    let diffs = preprocess::classical_difference(values, order, false).map_err(&stage)?;
    let (diff_state, _) = encode_values(&diffs).map_err(&stage)?;
    let differenced = preprocess::stationarity_score(&diff_state).map_err(&stage)?;
    let circuit = preprocess::quantum_difference(&state, order).map_err(&stage)?;
    let cyclic = preprocess::stationarity_score(&circuit.difference_part).map_err(&stage)?;
    Ok(vec![StageReport {
        name: "stationarity".into(),
        output: json!({
            "order": order,
            "score_raw": raw,
            "score_differenced": differenced,
            "score_cyclic_circuit": cyclic,
        }),
    }])
}

fn fit_json(fit: &forecast::FitResult) -> Value {
    json!({
        "params": fit.params,
        "residuals": fit.residuals,
        "loss_trace": fit.loss_trace,
        "mse": fit.mse,
        "converged": fit.converged,
    })
}

fn fit_stage(values: &[f64], config: &PipelineConfig) -> Result<Vec<StageReport>, CliError> {
    let (p, d, q) = config.orders();
    let classical = forecast::classical_fit(values, p, d, q).map_err(at("classical_fit"))?;
    let mut stages = vec![StageReport {
        name: "classical_fit".into(),
        output: fit_json(&classical),
    }];
    if let Some(layers) = config.layers {
        let form = config.input_form();
        let vconfig = VariationalConfig {
            p,
            d,
            q,
            n_qubits: forecast::required_qubits(p, q, form),
            layers,
            input_form: form,
            optimizer: match config.optimizer.unwrap_or(OptimizerArg::Spsa) {
                OptimizerArg::Spsa => Optimizer::Spsa,
                OptimizerArg::NelderMead => Optimizer::NelderMead,
            },
            max_iters: config.max_iters.unwrap_or(DEFAULT_MAX_ITERS),
            seed: config.seed,
        };
        let fit = forecast::variational_fit(values, &vconfig).map_err(at("variational_fit"))?;
        let mut output = fit_json(&fit);
        output["classical_mse"] = json!(classical.mse);
        stages.push(StageReport {
            name: "variational_fit".into(),
            output,
        });
    }
    Ok(stages)
}

fn forecast_stage(values: &[f64], config: &PipelineConfig) -> Result<Vec<StageReport>, CliError> {
    let (p, d, q) = config.orders();
    let horizon = config.horizon.expect("validated");
    let fit = forecast::classical_fit(values, p, d, q).map_err(at("classical_fit"))?;
    let ModelParams::Arima(params) = &fit.params else {
        unreachable!("classical fits return ARIMA parameters")
    };
    let forecasts = forecast::predict(params, values, horizon).map_err(at("forecast"))?;
    Ok(vec![
        StageReport {
            name: "classical_fit".into(),
            output: json!({ "params": fit.params, "mse": fit.mse, "converged": fit.converged }),
        },
        StageReport {
            name: "forecast".into(),
            output: json!({ "horizon": horizon, "values": forecasts }),
        },
    ])
}

/// Validates, ingests, executes and times one command.
pub fn run(config: &PipelineConfig) -> Result<PipelineReport, CliError> {
    let start = Instant::now();
    config.validate()?;
    let (series, columns) = ingest_csv(
        &config.input_path,
        config.time_column.as_deref(),
        &config.value_columns,
    )?;
    config.validate_against(&series)?;

    let values = series.column(0);
    let stages = match config.command {
        Command::Encode => encode_stage(&series)?,
        Command::Smooth => smooth_stage(&series, config.alpha.expect("validated"))?,
        Command::Bin => bin_stage(&values, config.k.expect("validated"))?,
        Command::Haar => haar_stage(&values, config.keep)?,
        Command::QftDist => qft_dist_stage(
            &series,
            config.strategy.unwrap_or(StrategyArg::Stacked),
            config.shots,
            config.seed,
        )?,
        Command::Diff => diff_stage(&values, config.diff_order())?,
        Command::Stationarity => stationarity_stage(&values, config.diff_order())?,
        Command::Fit => fit_stage(&values, config)?,
        Command::Forecast => forecast_stage(&values, config)?,
    };

    let used = series.len() * series.dim();
    let padded = used.next_power_of_two().max(2);
    Ok(PipelineReport {
        tool: TOOL_NAME.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: config.command.name().into(),
        seed: config.seed,
        config: serde_json::to_value(config).expect("config serializes"),
        input: InputSummary {
            path: config.input_path.display().to_string(),
            columns,
            n: series.len(),
            d: series.dim(),
            pad_len: padded - used,
        },
        stages,
        wall_clock_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Runs `config` and writes the report to its output path or standard output.
pub fn execute(config: &PipelineConfig) -> Result<(), CliError> {
    let report = run(config)?;
    let mut text = emit_report(&report, config.pretty);
    text.push('\n');
    match &config.output_path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Data(format!("cannot write report: {e}")))
        }
    }
}

/// Entry point for the binary; returns the process exit status.
pub fn main_with(cli: Cli) -> i32 {
    match execute(&cli.into_config()) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("{TOOL_NAME}: {err}");
            err.exit_code()
        }
    }
}
