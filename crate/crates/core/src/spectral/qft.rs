use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statevec::{log2_exact, Matrix, StateVector};

/// Dense Fourier matrix `F_{jk} = ω^{jk} / √N` with `ω = e^{±2πi/N}`.
fn fourier_matrix(dim: usize, inverse: bool) -> Matrix {
    let sign = if inverse { -1.0 } else { 1.0 };
    let scale = 1.0 / (dim as f64).sqrt();
    // Roots of unity indexed by (j k mod N) keep large exponents accurate.
    let roots: Vec<Complex64> = (0..dim)
        .map(|m| Complex64::from_polar(scale, sign * 2.0 * PI * m as f64 / dim as f64))
        .collect();
    let mut data = Vec::with_capacity(dim * dim);
    for j in 0..dim {
        for k in 0..dim {
            data.push(roots[(j * k) % dim]);
        }
    }
    Matrix::from_row_major(data).expect("square")
}

/// The QFT as a dense unitary on `n_qubits` qubits.
pub fn qft_matrix(n_qubits: usize) -> Matrix {
    fourier_matrix(1 << n_qubits, false)
}

fn check_targets(state: &StateVector, targets: &[usize]) -> Result<()> {
    if targets.is_empty() {
        return Err(Error::shape("QFT needs at least one target qubit"));
    }
    if let Some(&q) = targets.iter().find(|&&q| q >= state.n_qubits()) {
        return Err(Error::shape(format!(
            "qubit {q} out of range for a {}-qubit state",
            state.n_qubits()
        )));
    }
    Ok(())
}

/// Applies the QFT on `targets` (first target most significant), natural output order.
pub fn apply_qft(state: &StateVector, targets: &[usize]) -> Result<StateVector> {
    check_targets(state, targets)?;
    state.apply_block_trusted(&fourier_matrix(1 << targets.len(), false), targets)
}

/// Inverse QFT (`ω = e^{−2πi/N}`).
pub fn apply_inverse_qft(state: &StateVector, targets: &[usize]) -> Result<StateVector> {
    check_targets(state, targets)?;
    state.apply_block_trusted(&fourier_matrix(1 << targets.len(), true), targets)
}

/// QFT on every qubit of the register.
pub fn qft_full(state: &StateVector) -> Result<StateVector> {
    let targets: Vec<usize> = (0..state.n_qubits()).collect();
    apply_qft(state, &targets)
}

pub fn inverse_qft_full(state: &StateVector) -> Result<StateVector> {
    let targets: Vec<usize> = (0..state.n_qubits()).collect();
    apply_inverse_qft(state, &targets)
}

/// Direct `O(N²)` DFT with the same convention as [`apply_qft`].
pub fn classical_dft(values: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = values.len();
    if n == 0 || log2_exact(n).is_none() {
        return Err(Error::shape(format!(
            "DFT length {n} is not a power of two"
        )));
    }
    let scale = 1.0 / (n as f64).sqrt();
    Ok((0..n)
        .map(|j| {
            values
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let angle = 2.0 * PI * ((j * k) % n) as f64 / n as f64;
                    v * Complex64::from_polar(scale, angle)
                })
                .sum()
        })
        .collect())
}
