use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::ArimaParams;
use crate::error::{Error, Result};
use crate::spectral::{apply_inverse_qft, apply_qft};
use crate::statevec::{log2_exact, StateVector};

/// Circulant `C_{jk} = c_{(j−k) mod n}` stored by its first column and spectrum.
///
/// With `F` the QFT matrix, `C = F† diag(λ) F`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CirculantOperator {
    pub n: usize,
    pub first_column: Vec<Complex64>,
    pub eigenvalues: Vec<Complex64>,
}

impl CirculantOperator {
    /// Spectrum `λ = √n · F c`, evaluated on the QFT circuit.
    pub fn from_column(first_column: Vec<Complex64>) -> Result<Self> {
        let n = first_column.len();
        let n_qubits = log2_exact(n).filter(|&m| m > 0).ok_or_else(|| {
            Error::shape(format!("circulant size {n} is not a power of two >= 2"))
        })?;
        let eigenvalues = match StateVector::from_amplitudes(first_column.clone()) {
            Ok((state, norm)) => {
                let targets: Vec<usize> = (0..n_qubits).collect();
                let scale = norm * (n as f64).sqrt();
                apply_qft(&state, &targets)?
                    .amplitudes()
                    .iter()
                    .map(|z| z * scale)
                    .collect()
            }
            Err(Error::DegenerateInput(_)) => vec![Complex64::new(0.0, 0.0); n],
            Err(e) => return Err(e),
        };
        Ok(Self {
            n,
            first_column,
            eigenvalues,
        })
    }

    /// Dense `n × n` matrix, row-major.
    pub fn dense(&self) -> Vec<Vec<Complex64>> {
        (0..self.n)
            .map(|j| {
                (0..self.n)
                    .map(|k| self.first_column[(j + self.n - k) % self.n])
                    .collect()
            })
            .collect()
    }
}

/// AR stencil `(1, −a_1, …, −a_p, 0, …)`; `C y` stacks the AR residuals
/// (plus `c`), wrapping at the first `p` rows.
pub fn circulant_from_params(params: &ArimaParams, n: usize) -> Result<CirculantOperator> {
    if log2_exact(n).is_none_or(|m| m == 0) {
        return Err(Error::shape(format!(
            "circulant size {n} is not a power of two >= 2"
        )));
    }
    if n <= params.a.len() {
        return Err(Error::shape(format!(
            "circulant size {n} must exceed p = {}",
            params.a.len()
        )));
    }
    let mut column = vec![Complex64::new(0.0, 0.0); n];
    column[0] = Complex64::new(1.0, 0.0);
    for (i, a) in params.a.iter().enumerate() {
        column[i + 1] = Complex64::new(-a, 0.0);
    }
    CirculantOperator::from_column(column)
}

/// `C v` via QFT, a diagonal multiply and the inverse QFT; the result is
/// renormalized and its norm returned.
pub fn apply_circulant(op: &CirculantOperator, state: &StateVector) -> Result<(StateVector, f64)> {
    if state.dim() != op.n {
        return Err(Error::shape(format!(
            "circulant of size {} applied to a {}-dimensional state",
            op.n,
            state.dim()
        )));
    }
    let targets: Vec<usize> = (0..state.n_qubits()).collect();
    let spectrum = apply_qft(state, &targets)?;
    let scaled: Vec<Complex64> = spectrum
        .amplitudes()
        .iter()
        .zip(&op.eigenvalues)
        .map(|(a, l)| a * l)
        .collect();
    let (scaled, norm) = StateVector::from_amplitudes(scaled)
        .map_err(|_| Error::degenerate("circulant maps the state to zero"))?;
    if norm < 1e-12 {
        return Err(Error::degenerate("circulant maps the state to zero"));
    }
    Ok((apply_inverse_qft(&scaled, &targets)?, norm))
}
