use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Unitarity tolerance for user-supplied matrices.
pub const INPUT_UNITARITY_TOL: f64 = 1e-8;

/// Rotation axis of a single-qubit rotation gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// A (possibly controlled) unitary acting on an ordered list of target qubits.
///
/// The first target is the most significant bit of the matrix index. The gate
/// acts only on basis states whose control qubits are all `|1⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    matrix: Matrix,
    targets: Vec<usize>,
    controls: Vec<usize>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Gate {
    pub fn new(matrix: Matrix, targets: Vec<usize>, controls: Vec<usize>) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::shape("gate needs at least one target"));
        }
        if matrix.dim() != 1 << targets.len() {
            return Err(Error::shape(format!(
                "{} targets need a {}x{} matrix, got {}x{}",
                targets.len(),
                1usize << targets.len(),
                1usize << targets.len(),
                matrix.dim(),
                matrix.dim()
            )));
        }
        let mut seen = targets.clone();
        seen.extend(&controls);
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::shape("targets and controls must be distinct qubits"));
        }
        matrix.check_unitary(INPUT_UNITARITY_TOL)?;
        Ok(Self {
            matrix,
            targets,
            controls,
        })
    }

    /// Same as [`Gate::new`] for matrices known to be unitary by construction.
    pub(crate) fn trusted(matrix: Matrix, targets: Vec<usize>, controls: Vec<usize>) -> Self {
        debug_assert_eq!(matrix.dim(), 1 << targets.len());
        Self {
            matrix,
            targets,
            controls,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn controls(&self) -> &[usize] {
        &self.controls
    }

    /// Adds control qubits to this gate.
    pub fn controlled_by(mut self, controls: &[usize]) -> Result<Self> {
        for &q in controls {
            if self.targets.contains(&q) || self.controls.contains(&q) {
                return Err(Error::shape(format!("qubit {q} already used by gate")));
            }
            self.controls.push(q);
        }
        Ok(self)
    }

    /// The inverse gate (adjoint matrix, same wiring).
    pub fn adjoint(&self) -> Self {
        Self::trusted(
            self.matrix.adjoint(),
            self.targets.clone(),
            self.controls.clone(),
        )
    }

    /// Largest qubit index referenced by the gate.
    pub fn max_qubit(&self) -> usize {
        self.targets
            .iter()
            .chain(&self.controls)
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn hadamard(target: usize) -> Self {
        let h = FRAC_1_SQRT_2;
        let m =
            Matrix::from_row_major(vec![c(h, 0.0), c(h, 0.0), c(h, 0.0), c(-h, 0.0)]).expect("2x2");
        Self::trusted(m, vec![target], vec![])
    }

    pub fn x(target: usize) -> Self {
        Self::trusted(pauli_x(), vec![target], vec![])
    }

    pub fn cx(control: usize, target: usize) -> Result<Self> {
        Self::mcx(&[control], target)
    }

    /// Multi-controlled X (Toffoli for two controls).
    pub fn mcx(controls: &[usize], target: usize) -> Result<Self> {
        if controls.contains(&target) {
            return Err(Error::shape("control and target coincide"));
        }
        Ok(Self::trusted(pauli_x(), vec![target], controls.to_vec()))
    }

    pub fn swap(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::shape("swap needs two distinct qubits"));
        }
        let one = c(1.0, 0.0);
        let mut m = Matrix::zeros(4);
        m.set(0, 0, one);
        m.set(1, 2, one);
        m.set(2, 1, one);
        m.set(3, 3, one);
        Ok(Self::trusted(m, vec![a, b], vec![]))
    }

    /// Rotation `R_axis(theta)` on `target`.
    pub fn rotation(axis: Axis, theta: f64, target: usize) -> Result<Self> {
        Ok(Self::trusted(
            rotation_matrix(axis, theta)?,
            vec![target],
            vec![],
        ))
    }
}

fn pauli_x() -> Matrix {
    Matrix::from_row_major(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).expect("2x2")
}

/// Single-qubit rotation matrix with the half-angle convention:
/// `R_x(2t) = [[cos t, -i sin t], [-i sin t, cos t]]`,
/// `R_y(2t) = [[cos t, -sin t], [sin t, cos t]]`,
/// `R_z(2t) = diag(e^{-it}, e^{it})`.
pub fn rotation_matrix(axis: Axis, theta: f64) -> Result<Matrix> {
    if !theta.is_finite() {
        return Err(Error::domain(format!(
            "rotation angle {theta} is not finite"
        )));
    }
    let half = theta / 2.0;
    let (s, co) = half.sin_cos();
    let entries = match axis {
        Axis::X => vec![c(co, 0.0), c(0.0, -s), c(0.0, -s), c(co, 0.0)],
        Axis::Y => vec![c(co, 0.0), c(-s, 0.0), c(s, 0.0), c(co, 0.0)],
        Axis::Z => vec![c(co, -s), c(0.0, 0.0), c(0.0, 0.0), c(co, s)],
    };
    Matrix::from_row_major(entries)
}

/// Builds `R_axis(theta)` acting on `target`.
pub fn rotation_gate(axis: Axis, theta: f64, target: usize) -> Result<Gate> {
    Gate::rotation(axis, theta, target)
}
