use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::optimize::{nelder_mead, spsa, Optimizer, SpsaGains};
use super::{classical_fit, FitResult, ModelParams};
use crate::error::{Error, Result};
use crate::preprocess::difference_n;
use crate::statevec::{log2_exact, Axis, Gate, Matrix, StateVector, MAX_QUBITS};

/// Starting angle for every rotation.
pub const THETA0: f64 = 0.1;
const WEIGHT_TOL: f64 = 1e-10;
const GRAM_SCHMIDT_TOL: f64 = 1e-12;
/// Initial simplex edge for Nelder–Mead, in radians.
const SIMPLEX_STEP: f64 = 0.25;

/// How the lag window `y` and the shock window `ε` enter the circuit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InputForm {
    /// `|y⟩ ⊗ |ε⟩`.
    TwoRegister,
    /// `θ_y |y⟩ + θ_ε |ε⟩` with `θ_y² + θ_ε² = 1`.
    WeightedSum { theta_y: f64, theta_eps: f64 },
    /// `(|y⟩; |ε⟩)/√2` on one extra qubit.
    Stacked,
}

impl InputForm {
    pub fn weighted_sum(theta_y: f64, theta_eps: f64) -> Result<Self> {
        if !theta_y.is_finite()
            || !theta_eps.is_finite()
            || (theta_y * theta_y + theta_eps * theta_eps - 1.0).abs() > WEIGHT_TOL
        {
            return Err(Error::domain(format!(
                "weights ({theta_y}, {theta_eps}) must satisfy θ_y² + θ_ε² = 1"
            )));
        }
        Ok(Self::WeightedSum { theta_y, theta_eps })
    }
}

/// Trained circuit and the data layout it was trained with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariationalModel {
    pub n_qubits: usize,
    pub layers: usize,
    pub thetas: Vec<f64>,
    pub input_form: InputForm,
    /// Output amplitude read as the prediction.
    pub readout: usize,
    pub p: usize,
    pub d: usize,
    pub q: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VariationalConfig {
    pub p: usize,
    pub d: usize,
    pub q: usize,
    pub n_qubits: usize,
    pub layers: usize,
    pub input_form: InputForm,
    pub optimizer: Optimizer,
    pub max_iters: usize,
    pub seed: u64,
}

/// Layers of `R_y` on every qubit followed by a CX ring `i → i+1 mod n`.
pub fn build_ansatz(n_qubits: usize, layers: usize, thetas: &[f64]) -> Result<Vec<Gate>> {
    if n_qubits == 0 {
        return Err(Error::shape("ansatz needs at least one qubit"));
    }
    if thetas.len() != n_qubits * layers {
        return Err(Error::shape(format!(
            "{} angles for {layers} layers on {n_qubits} qubits (need {})",
            thetas.len(),
            n_qubits * layers
        )));
    }
    let mut gates = Vec::with_capacity(layers * 2 * n_qubits);
    for layer in thetas.chunks(n_qubits) {
        for (q, &theta) in layer.iter().enumerate() {
            gates.push(Gate::rotation(Axis::Y, theta, q)?);
        }
        if n_qubits > 1 {
            for i in 0..n_qubits {
                gates.push(Gate::cx(i, (i + 1) % n_qubits)?);
            }
        }
    }
    Ok(gates)
}

/// Combines the lag-window and shock-window states into the circuit input.
pub fn prepare_model_input(
    y_state: &StateVector,
    eps_state: &StateVector,
    form: InputForm,
) -> Result<StateVector> {
    if y_state.dim() != eps_state.dim() {
        return Err(Error::shape(format!(
            "y has dimension {}, ε has {}",
            y_state.dim(),
            eps_state.dim()
        )));
    }
    match form {
        InputForm::TwoRegister => y_state.tensor(eps_state),
        InputForm::WeightedSum { theta_y, theta_eps } => {
            InputForm::weighted_sum(theta_y, theta_eps)?;
            let mixed: Vec<Complex64> = y_state
                .amplitudes()
                .iter()
                .zip(eps_state.amplitudes())
                .map(|(y, e)| y * theta_y + e * theta_eps)
                .collect();
            let (state, norm) = StateVector::from_amplitudes(mixed)
                .map_err(|_| Error::degenerate("weighted sum of y and ε cancels"))?;
            if norm < 1e-12 {
                return Err(Error::degenerate("weighted sum of y and ε cancels"));
            }
            Ok(state)
        }
        InputForm::Stacked => {
            let stacked: Vec<Complex64> = y_state
                .amplitudes()
                .iter()
                .chain(eps_state.amplitudes())
                .copied()
                .collect();
            Ok(StateVector::from_amplitudes(stacked)?.0)
        }
    }
}

/// Orthogonal matrix whose first row is the normalized `(a, b)`, zero-padded
/// to a power of two; further rows come from Gram–Schmidt over `e_0, e_1, …`.
pub fn parameter_row_unitary(a: &[f64], b: &[f64]) -> Result<Matrix> {
    let mut row: Vec<f64> = a.iter().chain(b).copied().collect();
    if row.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("parameters must be finite"));
    }
    let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::degenerate("parameter vector is zero"));
    }
    let dim = row.len().max(2).next_power_of_two();
    row.resize(dim, 0.0);
    row.iter_mut().for_each(|v| *v /= norm);

    let mut rows = vec![row];
    for k in 0..dim {
        if rows.len() == dim {
            break;
        }
        let mut v = vec![0.0; dim];
        v[k] = 1.0;
        // Two passes keep the completion orthogonal to working precision.
        for _ in 0..2 {
            for r in &rows {
                let dot: f64 = r.iter().zip(&v).map(|(x, y)| x * y).sum();
                v.iter_mut().zip(r).for_each(|(x, y)| *x -= dot * y);
            }
        }
        let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if len > GRAM_SCHMIDT_TOL {
            v.iter_mut().for_each(|x| *x /= len);
            rows.push(v);
        }
    }
    Matrix::from_real_rows(&rows)
}

/// Raw (unnormalized) circuit inputs and targets over the fitted range.
struct Design {
    inputs: Vec<Vec<f64>>,
    targets: Vec<f64>,
}

/// Qubits the chosen form needs for lag order `p` and shock order `q`.
pub fn required_qubits(p: usize, q: usize, form: InputForm) -> usize {
    let window = (p + 1).max(q + 1).max(2).next_power_of_two();
    let m = log2_exact(window).expect("power of two");
    match form {
        InputForm::TwoRegister => 2 * m,
        InputForm::WeightedSum { .. } => m,
        InputForm::Stacked => m + 1,
    }
}

fn design(
    series: &[f64],
    p: usize,
    d: usize,
    q: usize,
    form: InputForm,
    n_qubits: usize,
) -> Result<Design> {
    if series.len() <= p + q + d + 2 {
        return Err(Error::shape(format!(
            "{} values are too few for p={p}, d={d}, q={q}",
            series.len()
        )));
    }
    let needed = required_qubits(p, q, form);
    if n_qubits < needed || n_qubits > MAX_QUBITS {
        return Err(Error::shape(format!(
            "p={p}, q={q} with this input form needs {needed}..={MAX_QUBITS} qubits, got {n_qubits}"
        )));
    }
    let w = difference_n(series, d)?;
    let (lo, hi) = w
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    if hi - lo <= 1e-12 * hi.abs().max(lo.abs()).max(1.0) {
        return Err(Error::degenerate("series is constant after differencing"));
    }
    let mut eps = vec![0.0; w.len()];
    if q > 0 {
        let prelim = classical_fit(series, p, d, q)?;
        eps[p..].copy_from_slice(&prelim.residuals);
    }
    let window = (p + 1).max(q + 1).max(2).next_power_of_two();
    let dim = 1usize << n_qubits;
    let mut inputs = Vec::with_capacity(w.len() - p);
    for t in p..w.len() {
        let mut y = vec![0.0; window];
        for i in 0..p {
            y[i] = w[t - 1 - i];
        }
        y[p] = 1.0;
        let lag = |j: usize| if t > j { eps[t - 1 - j] } else { 0.0 };
        let mut x = match form {
            InputForm::Stacked => {
                let mut x = y;
                x.extend((0..window).map(|j| if j < q { lag(j) } else { 0.0 }));
                x
            }
            InputForm::WeightedSum { theta_y, theta_eps } => (0..window)
                .map(|j| theta_y * y[j] + theta_eps * if j < q { lag(j) } else { 0.0 })
                .collect(),
            InputForm::TwoRegister => {
                let e: Vec<f64> = (0..window)
                    .map(|j| match j {
                        0 => 1.0,
                        j if j <= q => lag(j - 1),
                        _ => 0.0,
                    })
                    .collect();
                y.iter()
                    .flat_map(|yi| e.iter().map(move |ej| yi * ej))
                    .collect()
            }
        };
        x.resize(dim, 0.0);
        inputs.push(x);
    }
    Ok(Design {
        inputs,
        targets: w[p..].to_vec(),
    })
}

/// Row `readout` of the ansatz unitary, obtained by running the adjoint
/// circuit on a basis state.
fn readout_row(n_qubits: usize, layers: usize, thetas: &[f64], readout: usize) -> Result<Vec<f64>> {
    let gates = build_ansatz(n_qubits, layers, thetas)?;
    let mut state = StateVector::basis(n_qubits, readout)?;
    for g in gates.iter().rev() {
        state.apply(&g.adjoint())?;
    }
    Ok(state.amplitudes().iter().map(|z| z.re).collect())
}

fn predictions(row: &[f64], design: &Design) -> Vec<f64> {
    design
        .inputs
        .iter()
        .map(|x| x.iter().zip(row).map(|(a, b)| a * b).sum())
        .collect()
}

fn mse(pred: &[f64], targets: &[f64]) -> f64 {
    pred.iter()
        .zip(targets)
        .map(|(p, t)| (p - t).powi(2))
        .sum::<f64>()
        / targets.len() as f64
}

impl VariationalModel {
    /// Runs the circuit on one raw input vector: `‖x‖ · Re⟨readout|U|x̂⟩`.
    pub fn predict_window(&self, x: &[f64]) -> Result<f64> {
        let (state, norm) = StateVector::from_real(x)?;
        let mut state = state;
        state.apply_all(&build_ansatz(self.n_qubits, self.layers, &self.thetas)?)?;
        Ok(norm * state.amplitudes()[self.readout].re)
    }
}

/// Raw circuit inputs the model sees for `series`, one per fitted target.
pub fn model_inputs(model: &VariationalModel, series: &[f64]) -> Result<Vec<Vec<f64>>> {
    Ok(design(
        series,
        model.p,
        model.d,
        model.q,
        model.input_form,
        model.n_qubits,
    )?
    .inputs)
}

/// One-step prediction errors of a trained model over its fitted range.
pub fn variational_residuals(model: &VariationalModel, series: &[f64]) -> Result<Vec<f64>> {
    let design = design(
        series,
        model.p,
        model.d,
        model.q,
        model.input_form,
        model.n_qubits,
    )?;
    let row = readout_row(model.n_qubits, model.layers, &model.thetas, model.readout)?;
    Ok(predictions(&row, &design)
        .iter()
        .zip(&design.targets)
        .map(|(p, t)| t - p)
        .collect())
}

/// Fits the ansatz angles to one-step predictions on the differenced series.
///
/// The optimizer works on the mean squared error divided by the mean squared
/// target; the reported trace and `mse` are on the data scale.
pub fn variational_fit(series: &[f64], config: &VariationalConfig) -> Result<FitResult> {
    if config.max_iters == 0 {
        return Err(Error::shape("max_iters must be at least 1"));
    }
    if config.layers == 0 {
        return Err(Error::shape("ansatz needs at least one layer"));
    }
    if let InputForm::WeightedSum { theta_y, theta_eps } = config.input_form {
        InputForm::weighted_sum(theta_y, theta_eps)?;
    }
    let design = design(
        series,
        config.p,
        config.d,
        config.q,
        config.input_form,
        config.n_qubits,
    )?;
    let scale = (design.targets.iter().map(|t| t * t).sum::<f64>() / design.targets.len() as f64)
        .max(f64::MIN_POSITIVE);
    let (n, layers) = (config.n_qubits, config.layers);
    let loss = |theta: &[f64]| -> f64 {
        let row = readout_row(n, layers, theta, 0).expect("ansatz shape checked");
        mse(&predictions(&row, &design), &design.targets) / scale
    };
    let theta0 = vec![THETA0; n * layers];
    let outcome = match config.optimizer {
        Optimizer::Spsa => spsa(
            loss,
            &theta0,
            config.max_iters,
            SpsaGains::default(),
            config.seed,
        ),
        Optimizer::NelderMead => nelder_mead(loss, &theta0, SIMPLEX_STEP, config.max_iters),
    };
    let model = VariationalModel {
        n_qubits: n,
        layers,
        thetas: outcome.best,
        input_form: config.input_form,
        readout: 0,
        p: config.p,
        d: config.d,
        q: config.q,
    };
    let row = readout_row(n, layers, &model.thetas, 0)?;
    let residuals: Vec<f64> = predictions(&row, &design)
        .iter()
        .zip(&design.targets)
        .map(|(p, t)| t - p)
        .collect();
    Ok(FitResult {
        mse: residuals.iter().map(|r| r * r).sum::<f64>() / residuals.len() as f64,
        params: ModelParams::Variational(model),
        residuals,
        loss_trace: outcome.trace.iter().map(|l| l * scale).collect(),
        converged: outcome.converged,
    })
}
