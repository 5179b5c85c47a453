use rand::Rng;

use crate::error::{Error, Result};
use crate::statevec::{inner_product, seeded_rng, Gate, StateVector};

/// Swap-test statistics: `p_zero = (1 + |⟨a|b⟩|²) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwapTestResult {
    pub p_zero: f64,
    /// `2 p_zero − 1`, clamped to `[0, 1]`.
    pub overlap_sq: f64,
    pub shots: Option<usize>,
}

/// Ancilla + controlled-SWAP + Hadamard circuit on `|0⟩|a⟩|b⟩`.
/// Qubit 0 is the ancilla, `a` occupies the next `n` qubits, `b` the last `n`.
pub fn swap_test_circuit(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    if a.n_qubits() != b.n_qubits() {
        return Err(Error::shape(format!(
            "swap test of {}-qubit and {}-qubit states",
            a.n_qubits(),
            b.n_qubits()
        )));
    }
    let n = a.n_qubits();
    let mut state = StateVector::zero(1)?.tensor(a)?.tensor(b)?;
    state.apply(&Gate::hadamard(0))?;
    for i in 0..n {
        state.apply(&Gate::swap(1 + i, 1 + n + i)?.controlled_by(&[0])?)?;
    }
    state.apply(&Gate::hadamard(0))?;
    Ok(state)
}

/// Exact when `shots` is `None`; otherwise samples the explicit circuit.
pub fn swap_test(
    a: &StateVector,
    b: &StateVector,
    shots: Option<usize>,
    seed: u64,
) -> Result<SwapTestResult> {
    swap_test_with(a, b, shots, &mut seeded_rng(seed))
}

pub fn swap_test_with<R: Rng + ?Sized>(
    a: &StateVector,
    b: &StateVector,
    shots: Option<usize>,
    rng: &mut R,
) -> Result<SwapTestResult> {
    let p_zero = match shots {
        None => (1.0 + inner_product(a, b)?.norm_sqr()) / 2.0,
        Some(shots) => {
            let state = swap_test_circuit(a, b)?;
            let histogram = state.sample_with(shots, rng)?;
            let half = state.dim() / 2;
            let zeros: usize = histogram
                .iter()
                .filter(|(idx, _)| **idx < half)
                .map(|(_, count)| count)
                .sum();
            zeros as f64 / shots as f64
        }
    };
    Ok(SwapTestResult {
        p_zero,
        overlap_sq: (2.0 * p_zero - 1.0).clamp(0.0, 1.0),
        shots,
    })
}
