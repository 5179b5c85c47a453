//! Haar wavelet transform and coefficient truncation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statevec::{log2_exact, Matrix, StateVector};

/// Haar matrix of size `n` built by `H_{2N} = [H_N ⊗ [1, 1]; I_N ⊗ [1, −1]]`
/// from `H_1 = [1]`. Entries of the unnormalized matrix are 0 or ±1; the
/// normalized variant scales each row to unit length.
pub fn haar_matrix(n: usize, normalized: bool) -> Result<Vec<Vec<f64>>> {
    if n == 0 || log2_exact(n).is_none() {
        return Err(Error::shape(format!("Haar size {n} is not a power of two")));
    }
    let mut h: Vec<Vec<f64>> = vec![vec![1.0]];
    while h.len() < n {
        let size = h.len();
        let mut next = Vec::with_capacity(2 * size);
        for row in &h {
            next.push(row.iter().flat_map(|&v| [v, v]).collect());
        }
        for i in 0..size {
            let mut row = vec![0.0; 2 * size];
            row[2 * i] = 1.0;
            row[2 * i + 1] = -1.0;
            next.push(row);
        }
        h = next;
    }
    if normalized {
        for row in &mut h {
            // support size is a power of two, so 1/support is exact
            let support = row.iter().filter(|v| **v != 0.0).count() as f64;
            let scale = (1.0 / support).sqrt();
            row.iter_mut().for_each(|v| *v *= scale);
        }
    }
    Ok(h)
}

fn haar_unitary(n: usize) -> Result<Matrix> {
    Matrix::from_real_rows(&haar_matrix(n, true)?)
}

/// Applies the normalized Haar matrix to the full register.
pub fn quantum_haar_transform(state: &StateVector) -> Result<StateVector> {
    let targets: Vec<usize> = (0..state.n_qubits()).collect();
    if targets.is_empty() {
        return Ok(state.clone());
    }
    state.apply_block_trusted(&haar_unitary(state.dim())?, &targets)
}

/// Inverse (transpose) of [`quantum_haar_transform`].
pub fn inverse_haar_transform(state: &StateVector) -> Result<StateVector> {
    let targets: Vec<usize> = (0..state.n_qubits()).collect();
    if targets.is_empty() {
        return Ok(state.clone());
    }
    state.apply_block_trusted(&haar_unitary(state.dim())?.adjoint(), &targets)
}

/// Kept Haar coefficients after truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct CompressedWavelet {
    /// `(index, coefficient)` pairs in ascending index order.
    pub kept: Vec<(usize, f64)>,
    pub dropped_energy: f64,
    pub dim: usize,
}

impl CompressedWavelet {
    /// Dense coefficient vector with the dropped entries zeroed.
    pub fn dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for &(i, v) in &self.kept {
            out[i] = v;
        }
        out
    }

    /// Synthesizes the (subnormalized) approximation from the kept coefficients.
    pub fn reconstruct(&self) -> Result<Vec<f64>> {
        let h = haar_matrix(self.dim, true)?;
        let mut out = vec![0.0; self.dim];
        for &(i, v) in &self.kept {
            for (o, w) in out.iter_mut().zip(&h[i]) {
                *o += v * w;
            }
        }
        Ok(out)
    }
}

/// Keeps the `keep` largest-magnitude Haar coefficients (lower index wins ties).
pub fn wavelet_compress(state: &StateVector, keep: usize) -> Result<CompressedWavelet> {
    if keep == 0 || keep > state.dim() {
        return Err(Error::domain(format!(
            "keep must lie in 1..={}, got {keep}",
            state.dim()
        )));
    }
    let coeffs = quantum_haar_transform(state)?;
    if coeffs.amplitudes().iter().any(|a| a.im.abs() > 1e-12) {
        return Err(Error::domain("wavelet compression needs real amplitudes"));
    }
    let values: Vec<f64> = coeffs
        .amplitudes()
        .iter()
        .map(|a: &Complex64| a.re)
        .collect();
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| {
        values[j]
            .abs()
            .partial_cmp(&values[i].abs())
            .expect("finite")
            .then(i.cmp(&j))
    });
    let mut kept_idx: Vec<usize> = order[..keep].to_vec();
    kept_idx.sort_unstable();
    let dropped_energy = order[keep..].iter().map(|&i| values[i] * values[i]).sum();
    Ok(CompressedWavelet {
        kept: kept_idx.into_iter().map(|i| (i, values[i])).collect(),
        dropped_energy,
        dim: values.len(),
    })
}
