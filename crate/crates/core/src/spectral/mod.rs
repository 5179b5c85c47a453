//! Quantum Fourier transform, Fourier-coefficient distances and the swap test.
//!
//! Convention: `F_{jk} = ω^{jk}/√N` with `ω = e^{2πi/N}`, applied as a dense
//! block in natural output order (no bit reversal).

mod distance;
mod qft;
mod swap;

pub use distance::{
    qft_distance, qft_distance_stacked, qft_distance_superposed, qft_distance_two_register,
    DistanceStrategy, QftDistanceReport,
};
pub use qft::{
    apply_inverse_qft, apply_qft, classical_dft, inverse_qft_full, qft_full, qft_matrix,
};
pub use swap::{swap_test, swap_test_circuit, swap_test_with, SwapTestResult};
