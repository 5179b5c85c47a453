//! Differencing circuits.
//!
//! An ancilla prepared in `H|1⟩` splits the register into `(y; −y)/√2`; a
//! controlled cyclic shift turns the lower half into `−shift(y)`, and a second
//! Hadamard on the ancilla leaves `½(y − shift(y); y + shift(y))`. The upper
//! half (ancilla `|0⟩`) holds the cyclic differences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevec::{Gate, StateVector};

/// Differencing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiffOrder {
    First,
    Second,
    /// Lag-`s` seasonal difference `y_i − y_{i−s}`.
    Seasonal(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DifferenceResult {
    /// State after the final ancilla Hadamard (of the last stage for `Second`).
    pub full_state: StateVector,
    /// Renormalized ancilla-`|0⟩` half.
    pub difference_part: StateVector,
    /// Probability of the difference branch; for `Second` the product of both stages.
    pub postselect_prob: f64,
    pub order: DiffOrder,
}

/// Incrementer `|j⟩ → |j + 1 mod 2^n⟩` on `qubits` (most significant first),
/// as a ladder of multi-controlled X gates.
fn incrementer(qubits: &[usize], extra_controls: &[usize]) -> Result<Vec<Gate>> {
    let n = qubits.len();
    let mut gates = Vec::with_capacity(n);
    // Flip each bit when every less significant bit is 1, most significant first.
    for i in 0..n {
        let mut controls: Vec<usize> = qubits[i + 1..].to_vec();
        controls.extend_from_slice(extra_controls);
        gates.push(Gate::mcx(&controls, qubits[i])?);
    }
    Ok(gates)
}

/// Gates realizing `|j⟩ → |j + 1 mod 2^n⟩` on an `n_qubits` register.
///
/// Applied to amplitudes `(y_0, …, y_{N−1})` this yields `(y_{N−1}, y_0, …, y_{N−2})`.
pub fn cyclic_shift_operator(n_qubits: usize) -> Result<Vec<Gate>> {
    if n_qubits == 0 {
        return Err(Error::shape("shift register needs at least one qubit"));
    }
    let qubits: Vec<usize> = (0..n_qubits).collect();
    incrementer(&qubits, &[])
}

/// Shift by `s` on `register` (most significant first), optionally controlled.
/// A shift by `2^m` is an incrementer on the top `n − m` qubits; general `s`
/// composes one such block per set bit.
fn shift_by(register: &[usize], s: usize, controls: &[usize]) -> Result<Vec<Gate>> {
    let n = register.len();
    let dim = 1usize << n;
    let s = s % dim;
    let mut gates = Vec::new();
    for m in 0..n {
        if s & (1 << m) != 0 {
            gates.extend(incrementer(&register[..n - m], controls)?);
        }
    }
    Ok(gates)
}

/// One differencing stage at lag `lag`.
fn difference_stage(state: &StateVector, lag: usize) -> Result<(StateVector, StateVector, f64)> {
    let n = state.n_qubits();
    if n == 0 {
        return Err(Error::shape("differencing needs at least two amplitudes"));
    }
    // ancilla in |1⟩ as most significant qubit: (0; y)
    let ancilla = StateVector::basis(1, 1)?;
    let mut full = ancilla.tensor(state)?;
    full.apply(&Gate::hadamard(0))?;
    let register: Vec<usize> = (1..=n).collect();
    full.apply_all(&shift_by(&register, lag, &[0])?)?;
    full.apply(&Gate::hadamard(0))?;
    let outcome = full.postselect(0, 0).map_err(|_| {
        Error::ImpossibleOutcome("all differences vanish (input is constant at this lag)".into())
    })?;
    Ok((full, outcome.collapsed, outcome.probability))
}

/// Builds the differencing state of the requested order.
pub fn quantum_difference(state: &StateVector, order: DiffOrder) -> Result<DifferenceResult> {
    match order {
        DiffOrder::First => {
            let (full_state, difference_part, p) = difference_stage(state, 1)?;
            Ok(DifferenceResult {
                full_state,
                difference_part,
                postselect_prob: p,
                order,
            })
        }
        DiffOrder::Second => {
            let (_, first, p1) = difference_stage(state, 1)?;
            let (full_state, difference_part, p2) = difference_stage(&first, 1)?;
            Ok(DifferenceResult {
                full_state,
                difference_part,
                postselect_prob: p1 * p2,
                order,
            })
        }
        DiffOrder::Seasonal(s) => {
            if s == 0 || s >= state.dim() {
                return Err(Error::shape(format!(
                    "seasonal lag {s} must lie in 1..{}",
                    state.dim()
                )));
            }
            let (full_state, difference_part, p) = difference_stage(state, s)?;
            Ok(DifferenceResult {
                full_state,
                difference_part,
                postselect_prob: p,
                order,
            })
        }
    }
}

/// Classical differences. With `cyclic = false` the usual shortened series;
/// with `cyclic = true` the full-length wrap-around version the circuit produces.
pub fn classical_difference(values: &[f64], order: DiffOrder, cyclic: bool) -> Result<Vec<f64>> {
    let n = values.len();
    let lagged = |v: &[f64], lag: usize| -> Vec<f64> {
        let n = v.len();
        if cyclic {
            (0..n).map(|i| v[i] - v[(i + n - lag % n) % n]).collect()
        } else {
            (lag..n).map(|i| v[i] - v[i - lag]).collect()
        }
    };
    match order {
        DiffOrder::First => {
            if n < 2 {
                return Err(Error::shape("first difference needs at least 2 values"));
            }
            Ok(lagged(values, 1))
        }
        DiffOrder::Second => {
            if n < 3 {
                return Err(Error::shape("second difference needs at least 3 values"));
            }
            Ok(lagged(&lagged(values, 1), 1))
        }
        DiffOrder::Seasonal(s) => {
            if s == 0 || n <= s {
                return Err(Error::shape(format!(
                    "seasonal lag {s} needs more than {s} values, got {n}"
                )));
            }
            Ok(lagged(values, s))
        }
    }
}

/// Non-cyclic differencing applied `d` times.
pub fn difference_n(values: &[f64], d: usize) -> Result<Vec<f64>> {
    let mut out = values.to_vec();
    for _ in 0..d {
        out = classical_difference(&out, DiffOrder::First, false)?;
    }
    Ok(out)
}
