//! Quantum time-series analysis on a dense statevector simulator.
//!
//! The crate is organised bottom-up:
//!
//! - [`statevec`]: states, gates, dense block application, measurement and sampling.
//! - [`encoding`]: amplitude encodings of a [`TimeSeries`] (superposed, stacked, tensor product).
//! - [`preprocess`]: exponential smoothing, binning and moving averages, the Haar
//!   transform with coefficient truncation, differencing and a stationarity score.
//! - [`spectral`]: the quantum Fourier transform, Fourier-coefficient distances and the swap test.
//! - [`forecast`]: classical drift/ARIMA fitting, the circulant formulation and the
//!   variational forecaster.
//! - [`cli`]: CSV ingestion, the pipeline runner behind the `qts` binary and JSON reports.
//!
//! Every quantum construction has a classical twin so the two can be compared directly.
//! See the crate's `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod encoding;
mod error;
pub mod forecast;
pub mod preprocess;
pub mod spectral;
pub mod statevec;

pub use encoding::{EncodingRecord, Layout, TimeSeries};
pub use error::{Error, Result};
pub use statevec::{Axis, Gate, Matrix, MeasurementOutcome, StateVector};

pub use num_complex::Complex64;
