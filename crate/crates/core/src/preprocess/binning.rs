//! Binning and moving averages via Hadamards and postselection.

use crate::error::{Error, Result};
use crate::statevec::{log2_exact, Gate, StateVector};

fn bin_qubits(state: &StateVector, k: usize) -> Result<usize> {
    let m =
        log2_exact(k).ok_or_else(|| Error::shape(format!("bin size {k} is not a power of two")))?;
    if k < 2 {
        return Err(Error::shape("bin size must be at least 2"));
    }
    if m > state.n_qubits() {
        return Err(Error::shape(format!(
            "bin size {k} does not divide dimension {}",
            state.dim()
        )));
    }
    Ok(m)
}

fn hadamard_and_select(state: &StateVector, qubits: &[usize]) -> Result<(StateVector, f64)> {
    let mut work = state.clone();
    for &q in qubits {
        work.apply(&Gate::hadamard(q))?;
    }
    let selections: Vec<(usize, u8)> = qubits.iter().map(|&q| (q, 0)).collect();
    work.postselect_many(&selections)
        .map_err(|_| Error::ImpossibleOutcome(format!("all bin sums vanish on qubits {qubits:?}")))
}

/// `I^{⊗log2(d/k)} ⊗ H^{⊗log2 k}` followed by postselecting the Hadamard
/// qubits (the least significant ones) on `|0…0⟩`.
///
/// The reduced state is proportional to the sums over consecutive blocks of `k`
/// amplitudes; the returned probability is `‖bin sums‖² / k`.
pub fn quantum_bin_average(state: &StateVector, k: usize) -> Result<(StateVector, f64)> {
    let m = bin_qubits(state, k)?;
    let n = state.n_qubits();
    let qubits: Vec<usize> = (n - m..n).collect();
    hadamard_and_select(state, &qubits)
}

/// `H^{⊗log2 k} ⊗ I^{⊗log2(d/k)}`: Hadamards on the most significant qubits,
/// which sum amplitudes with stride `d/k`.
pub fn moving_average_operator(state: &StateVector, k: usize) -> Result<(StateVector, f64)> {
    let m = bin_qubits(state, k)?;
    let qubits: Vec<usize> = (0..m).collect();
    hadamard_and_select(state, &qubits)
}

/// Means of consecutive, non-overlapping bins of size `k`.
pub fn classical_bin_means(values: &[f64], k: usize) -> Result<Vec<f64>> {
    if k == 0 || values.is_empty() || !values.len().is_multiple_of(k) {
        return Err(Error::shape(format!(
            "bin size {k} does not divide length {}",
            values.len()
        )));
    }
    Ok(values
        .chunks_exact(k)
        .map(|c| c.iter().sum::<f64>() / k as f64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn bin_average_example() {
        let (s, _) = StateVector::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let (reduced, p) = quantum_bin_average(&s, 2).unwrap();
        let n = 58f64.sqrt();
        assert_close(&reduced.real_parts(), &[3.0 / n, 7.0 / n], 1e-12);
        assert!((p - 29.0 / 30.0).abs() < 1e-12);
    }

    #[test]
    fn moving_average_example() {
        let (s, _) = StateVector::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let (reduced, p) = moving_average_operator(&s, 2).unwrap();
        let n = 52f64.sqrt();
        assert_close(&reduced.real_parts(), &[4.0 / n, 6.0 / n], 1e-12);
        assert!((p - 26.0 / 30.0).abs() < 1e-12);
    }

    #[test]
    fn uniform_states_pass_unchanged() {
        let s = StateVector::uniform(3).unwrap();
        for k in [2, 4, 8] {
            let (reduced, p) = quantum_bin_average(&s, k).unwrap();
            assert!((p - 1.0).abs() < 1e-12);
            let u = StateVector::uniform(reduced.n_qubits().max(1)).unwrap();
            if reduced.n_qubits() > 0 {
                assert!((reduced.inner(&u).unwrap().norm() - 1.0).abs() < 1e-12);
            }
            let (_, p) = moving_average_operator(&s, k).unwrap();
            assert!((p - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn vanishing_sums() {
        let (s, _) = StateVector::from_real(&[1.0, -1.0]).unwrap();
        assert!(matches!(
            quantum_bin_average(&s, 2),
            Err(Error::ImpossibleOutcome(_))
        ));
        let (s, _) = StateVector::from_real(&[1.0, 0.0, -1.0, 0.0]).unwrap();
        assert!(matches!(
            moving_average_operator(&s, 2),
            Err(Error::ImpossibleOutcome(_))
        ));
    }

    #[test]
    fn bad_bin_sizes() {
        let s = StateVector::uniform(2).unwrap();
        assert!(matches!(quantum_bin_average(&s, 3), Err(Error::Shape(_))));
        assert!(matches!(quantum_bin_average(&s, 8), Err(Error::Shape(_))));
        assert!(matches!(quantum_bin_average(&s, 1), Err(Error::Shape(_))));
    }

    #[test]
    fn classical_means() {
        assert_eq!(
            classical_bin_means(&[1.0, 2.0, 3.0, 4.0], 2).unwrap(),
            vec![1.5, 3.5]
        );
        assert_eq!(classical_bin_means(&[7.0; 6], 3).unwrap(), vec![7.0, 7.0]);
        assert!(classical_bin_means(&[1.0, 2.0, 3.0], 2).is_err());
    }
}
