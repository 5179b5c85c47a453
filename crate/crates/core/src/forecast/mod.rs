//! Classical ARIMA-family fits and the variational circuit forecaster.

mod circulant;
mod classical;
pub mod optimize;
mod variational;

use serde::{Deserialize, Serialize};

pub use circulant::{apply_circulant, circulant_from_params, CirculantOperator};
pub use classical::{
    classical_fit, drift_fit, one_step_residuals, predict, seasonality_scan, ArimaParams,
};
pub use optimize::Optimizer;
pub use variational::{
    build_ansatz, model_inputs, parameter_row_unitary, prepare_model_input, required_qubits,
    variational_fit, variational_residuals, InputForm, VariationalConfig, VariationalModel, THETA0,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ModelParams {
    Arima(ArimaParams),
    Variational(VariationalModel),
}

/// Output of a fit. `mse` is the mean of `residuals²` over the fitted range;
/// `loss_trace` has one best-so-far entry per iteration or sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub params: ModelParams,
    pub residuals: Vec<f64>,
    pub loss_trace: Vec<f64>,
    pub mse: f64,
    pub converged: bool,
}
