//! Quantum preprocessing of time series, each paired with a classical twin.

mod binning;
mod difference;
mod haar;
mod smoothing;
mod stationarity;

pub use binning::{classical_bin_means, moving_average_operator, quantum_bin_average};
pub use difference::{
    classical_difference, cyclic_shift_operator, difference_n, quantum_difference, DiffOrder,
    DifferenceResult,
};
pub use haar::{
    haar_matrix, inverse_haar_transform, quantum_haar_transform, wavelet_compress,
    CompressedWavelet,
};
pub use smoothing::{
    classical_exp_smooth, quantum_exp_smooth, smoothing_coefficients, SmoothedState,
    SmoothingCoefficients,
};
pub use stationarity::stationarity_score;
