//! Exponential smoothing.
//!
//! The quantum step stacks the new observation over the running smoothed state
//! on one control qubit, rotates the control so that its `|0⟩` branch holds
//! `a·y_{i+1} + b·v_i`, and postselects that branch.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevec::{Axis, Gate, StateVector};

/// `a = √α + √(1−α)`, `b = √α − √(1−α)`; `b` is the decay factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoothingCoefficients {
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
}

pub fn smoothing_coefficients(alpha: f64) -> Result<SmoothingCoefficients> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let (s, r) = (alpha.sqrt(), (1.0 - alpha).sqrt());
    Ok(SmoothingCoefficients {
        alpha,
        a: s + r,
        b: s - r,
    })
}

/// Output of [`quantum_exp_smooth`].
#[derive(Debug, Clone, PartialEq)]
pub struct SmoothedState {
    /// Unit-norm smoothed state after the last observation.
    pub state: StateVector,
    /// Norm of the unnormalized recurrence after each step (`norm_trace[0] = 1`).
    pub norm_trace: Vec<f64>,
    /// Postselection probability of each combining step.
    pub postselect_probs: Vec<f64>,
}

impl SmoothedState {
    /// The unnormalized recurrence value `v'_i = a y_i + b v'_{i−1}` after the last step.
    pub fn unnormalized(&self) -> Vec<Complex64> {
        let scale = *self.norm_trace.last().expect("non-empty trace");
        self.state.amplitudes().iter().map(|a| a * scale).collect()
    }
}

/// Runs `v'_0 = y_0`, `v'_{i+1} = a·y_{i+1} + b·v'_i` over unit-norm states.
///
/// Each step is one circuit: the stacked state `(y_{i+1}; s_i v̂_i) / Z` on an
/// extra most-significant qubit, a `R_y` rotation whose first row is `(a, b)/√2`,
/// and postselection of the control on `|0⟩`. The recorded norms `s_i` make the
/// unnormalized recurrence recoverable.
pub fn quantum_exp_smooth(history: &[StateVector], alpha: f64) -> Result<SmoothedState> {
    let coeffs = smoothing_coefficients(alpha)?;
    let first = history
        .first()
        .ok_or_else(|| Error::shape("smoothing history is empty"))?;
    let dim = first.dim();
    if history.iter().any(|s| s.dim() != dim) {
        return Err(Error::shape("history states differ in dimension"));
    }
    let first = StateVector::from_amplitudes(first.amplitudes().to_vec())?.0;

    // R_y(2t) with cos t = a/√2, sin t = −b/√2, so row 0 is (a, b)/√2.
    let theta = 2.0 * (-coeffs.b).atan2(coeffs.a);
    let combine = Gate::rotation(Axis::Y, theta, 0)?;

    let mut current = first;
    let mut scale = 1.0;
    let mut norm_trace = vec![1.0];
    let mut postselect_probs = Vec::new();
    for (i, y) in history.iter().enumerate().skip(1) {
        let mut stacked: Vec<Complex64> = y.amplitudes().to_vec();
        stacked.extend(current.amplitudes().iter().map(|v| v * scale));
        let (mut state, z) = StateVector::from_amplitudes(stacked)?;
        state.apply(&combine)?;
        let outcome = state.postselect(0, 0).map_err(|_| {
            Error::degenerate(format!("smoothing step {i} cancels to the zero vector"))
        })?;
        scale = (2.0 * outcome.probability).sqrt() * z;
        current = outcome.collapsed;
        norm_trace.push(scale);
        postselect_probs.push(outcome.probability);
    }
    Ok(SmoothedState {
        state: current,
        norm_trace,
        postselect_probs,
    })
}

/// `y'_0 = y_0`, `y'_i = α y_i + (1−α) y'_{i−1}`.
pub fn classical_exp_smooth(values: &[f64], alpha: f64) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::shape("cannot smooth an empty series"));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "alpha must lie in (0, 1), got {alpha}"
        )));
    }
    let mut out = Vec::with_capacity(values.len());
    let mut prev = values[0];
    out.push(prev);
    for &v in &values[1..] {
        prev = alpha * v + (1.0 - alpha) * prev;
        out.push(prev);
    }
    Ok(out)
}
