//! Distances between Fourier coefficient vectors, three ways.
//!
//! - `Stacked`: `(y1; y2)` on `1 + log2 n` qubits, `I ⊗ QFT`, then a Hadamard on
//!   the top qubit; the `|1⟩` branch holds `(F y1 − F y2)/√2`.
//! - `Superposed`: the difference `(ŷ1 − ŷ2)` prepared directly on `log2 n` qubits.
//! - `TwoRegister`: `F ŷ1 ⊗ F ŷ2` on `2 log2 n` qubits compared by the swap test.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::qft::{apply_qft, qft_full};
use super::swap::{swap_test, swap_test_circuit};
use crate::error::{Error, Result};
use crate::statevec::{log2_exact, Gate, StateVector};

/// Overlaps with real part below this (or imaginary part above it) are
/// flagged as ambiguous for the swap-test route.
const OVERLAP_SIGN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistanceStrategy {
    Stacked,
    Superposed,
    TwoRegister,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QftDistanceReport {
    pub strategy: DistanceStrategy,
    /// Probability of the difference branch.
    pub p_minus: f64,
    pub distance_estimate: f64,
    pub qubits_used: usize,
    pub shots: Option<usize>,
    /// Set when the swap-test route cannot recover the distance because the
    /// overlap is negative or complex (the swap test only sees `|⟨u|v⟩|²`).
    pub overlap_phase_ambiguous: bool,
}

fn check_pair(y1: &[f64], y2: &[f64]) -> Result<usize> {
    if y1.len() != y2.len() {
        return Err(Error::shape(format!(
            "vectors of length {} and {}",
            y1.len(),
            y2.len()
        )));
    }
    if y1.len() < 2 {
        return Err(Error::shape("vectors need at least two entries"));
    }
    log2_exact(y1.len())
        .ok_or_else(|| Error::shape(format!("length {} is not a power of two", y1.len())))
}

fn unit(values: &[f64], name: &str) -> Result<StateVector> {
    StateVector::from_real(values)
        .map(|(s, _)| s)
        .map_err(|_| Error::degenerate(format!("{name} is the zero vector")))
}

/// Stacked strategy; distance is `‖F y1 − F y2‖` on the raw (unnormalized) inputs.
pub fn qft_distance_stacked(y1: &[f64], y2: &[f64]) -> Result<QftDistanceReport> {
    let m = check_pair(y1, y2)?;
    let stacked: Vec<f64> = y1.iter().chain(y2).copied().collect();
    let (state, norm) = StateVector::from_real(&stacked)?;
    let targets: Vec<usize> = (1..=m).collect();
    let mut state = apply_qft(&state, &targets)?;
    state.apply(&Gate::hadamard(0))?;
    let p_minus = state.probability_one(0)?;
    Ok(QftDistanceReport {
        strategy: DistanceStrategy::Stacked,
        p_minus,
        distance_estimate: (2.0 * p_minus).sqrt() * norm,
        qubits_used: m + 1,
        shots: None,
        overlap_phase_ambiguous: false,
    })
}

/// Superposed strategy on unit-normalized inputs.
///
/// `p_minus` is `‖ŷ1 − ŷ2‖² / 4`, the success probability of preparing the
/// difference state from `(ŷ1; ŷ2)/√2` with one ancilla Hadamard.
pub fn qft_distance_superposed(y1: &[f64], y2: &[f64]) -> Result<QftDistanceReport> {
    let m = check_pair(y1, y2)?;
    let (u, v) = (unit(y1, "y1")?, unit(y2, "y2")?);
    let diff: Vec<Complex64> = u
        .amplitudes()
        .iter()
        .zip(v.amplitudes())
        .map(|(a, b)| a - b)
        .collect();
    let raw: f64 = diff.iter().map(|d| d.norm_sqr()).sum::<f64>().sqrt();
    if raw < 1e-12 {
        return Err(Error::degenerate(
            "inputs are the same state; their difference vanishes",
        ));
    }
    let (state, norm) = StateVector::from_amplitudes(diff)?;
    let transformed = qft_full(&state)?;
    let distance_estimate = norm * transformed.norm_sqr().sqrt();
    Ok(QftDistanceReport {
        strategy: DistanceStrategy::Superposed,
        p_minus: norm * norm / 4.0,
        distance_estimate,
        qubits_used: m,
        shots: None,
        overlap_phase_ambiguous: false,
    })
}

/// Two-register strategy on unit-normalized inputs.
///
/// Exact mode uses `√(2 − 2 Re⟨Fŷ1|Fŷ2⟩)`. Shot mode estimates `|⟨·⟩|²` from
/// sampled swap-test ancilla statistics and assumes a real nonnegative overlap.
pub fn qft_distance_two_register(
    y1: &[f64],
    y2: &[f64],
    shots: Option<usize>,
    seed: u64,
) -> Result<QftDistanceReport> {
    let m = check_pair(y1, y2)?;
    let fu = qft_full(&unit(y1, "y1")?)?;
    let fv = qft_full(&unit(y2, "y2")?)?;
    let overlap = fu.inner(&fv)?;
    let ambiguous = overlap.re < -OVERLAP_SIGN_TOL || overlap.im.abs() > OVERLAP_SIGN_TOL;
    let (p_minus, distance_estimate) = match shots {
        None => {
            let p_zero = swap_test_circuit(&fu, &fv)?
                .probability_one(0)
                .map(|p1| 1.0 - p1)?;
            let d = (2.0 - 2.0 * overlap.re).max(0.0).sqrt();
            (1.0 - p_zero, d)
        }
        Some(_) => {
            let r = swap_test(&fu, &fv, shots, seed)?;
            let d = (2.0 - 2.0 * r.overlap_sq.sqrt()).max(0.0).sqrt();
            (1.0 - r.p_zero, d)
        }
    };
    Ok(QftDistanceReport {
        strategy: DistanceStrategy::TwoRegister,
        p_minus,
        distance_estimate,
        qubits_used: 2 * m + 1,
        shots,
        overlap_phase_ambiguous: ambiguous,
    })
}

/// Dispatches on `strategy`.
pub fn qft_distance(
    strategy: DistanceStrategy,
    y1: &[f64],
    y2: &[f64],
    shots: Option<usize>,
    seed: u64,
) -> Result<QftDistanceReport> {
    match strategy {
        DistanceStrategy::Stacked => qft_distance_stacked(y1, y2),
        DistanceStrategy::Superposed => qft_distance_superposed(y1, y2),
        DistanceStrategy::TwoRegister => qft_distance_two_register(y1, y2, shots, seed),
    }
}
