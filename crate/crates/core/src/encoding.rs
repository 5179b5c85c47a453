//! Amplitude encodings of classical time series.
//!
//! Three layouts are supported:
//!
//! - **Superposed**: the rows are summed into one `d`-dimensional state.
//! - **Stacked**: the rows are concatenated, `log2(n d)` qubits.
//! - **TensorProduct**: one register per row, `n log2(d)` qubits.
//!
//! Normalization constants are always recorded so the classical values can be
//! recovered exactly.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevec::{log2_exact, StateVector, MAX_QUBITS};

/// Timestamps plus an `n × d` matrix of observations.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    timestamps: Vec<f64>,
    rows: Vec<Vec<f64>>,
}

impl TimeSeries {
    pub fn new(timestamps: Vec<f64>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if timestamps.len() != rows.len() {
            return Err(Error::shape(format!(
                "{} timestamps for {} rows",
                timestamps.len(),
                rows.len()
            )));
        }
        if rows.is_empty() {
            return Err(Error::shape("time series is empty"));
        }
        let d = rows[0].len();
        if d == 0 || rows.iter().any(|r| r.len() != d) {
            return Err(Error::shape("rows must share a nonzero dimension"));
        }
        if timestamps
            .windows(2)
            .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
        {
            return Err(Error::domain("timestamps must be strictly increasing"));
        }
        if rows
            .iter()
            .flatten()
            .chain(&timestamps)
            .any(|v| !v.is_finite())
        {
            return Err(Error::domain("time series contains non-finite values"));
        }
        Ok(Self { timestamps, rows })
    }

    /// Rows with implicit timestamps `0..n`.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let timestamps = (0..rows.len()).map(|i| i as f64).collect();
        Self::new(timestamps, rows)
    }

    /// Univariate series with implicit timestamps.
    pub fn univariate(values: &[f64]) -> Result<Self> {
        Self::from_rows(values.iter().map(|&v| vec![v]).collect())
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.rows[0].len()
    }

    pub fn timestamps(&self) -> &[f64] {
        &self.timestamps
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// Column `j` as a univariate series.
    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// Row-major concatenation `(y_1, …, y_n)`.
    pub fn flatten(&self) -> Vec<f64> {
        self.rows.iter().flatten().copied().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Layout {
    Superposed,
    Stacked,
    TensorProduct,
}

/// How a series was mapped onto a state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodingRecord {
    pub layout: Layout,
    pub pad_len: usize,
    pub global_norm: f64,
    /// Per-row norms, TensorProduct only.
    pub per_block_norms: Vec<f64>,
    pub n_qubits: usize,
    pub n_rows: usize,
    pub row_dim: usize,
}

/// Zero-pads to the next power of two.
pub fn pad_to_power_of_two(values: &[f64]) -> Result<(Vec<f64>, usize)> {
    if values.is_empty() {
        return Err(Error::shape("cannot pad an empty array"));
    }
    let target = values.len().next_power_of_two();
    let mut out = values.to_vec();
    out.resize(target, 0.0);
    Ok((out, target - values.len()))
}

/// Zero-pads to at least two entries (one qubit) and a power of two.
fn pad_register(values: &[f64]) -> Result<(Vec<f64>, usize)> {
    let (mut padded, mut pad) = pad_to_power_of_two(values)?;
    if padded.len() == 1 {
        padded.push(0.0);
        pad += 1;
    }
    Ok((padded, pad))
}

fn to_complex(values: &[f64]) -> Vec<Complex64> {
    values.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// Sum of the rows, normalized: one `log2 d`-qubit state.
pub fn encode_superposed(series: &TimeSeries) -> Result<(StateVector, EncodingRecord)> {
    if series.rows.iter().flatten().all(|&v| v == 0.0) {
        return Err(Error::degenerate("all-zero data"));
    }
    let d = series.dim();
    let mut sum = vec![0.0; d];
    for row in &series.rows {
        for (s, v) in sum.iter_mut().zip(row) {
            *s += v;
        }
    }
    if sum.iter().all(|&v| v == 0.0) {
        return Err(Error::degenerate("rows cancel to the zero vector"));
    }
    let (padded, pad_len) = pad_register(&sum)?;
    let (state, global_norm) = StateVector::from_amplitudes(to_complex(&padded))?;
    let record = EncodingRecord {
        layout: Layout::Superposed,
        pad_len,
        global_norm,
        per_block_norms: Vec::new(),
        n_qubits: state.n_qubits(),
        n_rows: series.len(),
        row_dim: d,
    };
    Ok((state, record))
}

/// Row-major concatenation of all rows, zero-padded and normalized.
pub fn encode_stacked(series: &TimeSeries) -> Result<(StateVector, EncodingRecord)> {
    let flat = series.flatten();
    if flat.iter().all(|&v| v == 0.0) {
        return Err(Error::degenerate("all-zero data"));
    }
    let (padded, pad_len) = pad_register(&flat)?;
    let (state, global_norm) = StateVector::from_amplitudes(to_complex(&padded))?;
    let record = EncodingRecord {
        layout: Layout::Stacked,
        pad_len,
        global_norm,
        per_block_norms: Vec::new(),
        n_qubits: state.n_qubits(),
        n_rows: series.len(),
        row_dim: series.dim(),
    };
    Ok((state, record))
}

/// Shorthand for a univariate stacked encoding.
pub fn encode_values(values: &[f64]) -> Result<(StateVector, EncodingRecord)> {
    encode_stacked(&TimeSeries::univariate(values)?)
}

/// One normalized register per row, combined by tensor product.
pub fn encode_tensor(series: &TimeSeries) -> Result<(StateVector, EncodingRecord)> {
    let d = series.dim();
    let (_, row_pad) = pad_register(&vec![0.0; d])?;
    let qubits_per_row = log2_exact(d + row_pad).expect("padded to a power of two");
    let needed = series.len() * qubits_per_row;
    if needed > MAX_QUBITS {
        return Err(Error::Capacity {
            needed,
            limit: MAX_QUBITS,
        });
    }
    let mut per_block_norms = Vec::with_capacity(series.len());
    let mut state: Option<StateVector> = None;
    for (i, row) in series.rows.iter().enumerate() {
        let (padded, _) = pad_register(row)?;
        let (block, norm) = StateVector::from_amplitudes(to_complex(&padded))
            .map_err(|_| Error::degenerate(format!("row {i} is zero")))?;
        per_block_norms.push(norm);
        state = Some(match state {
            None => block,
            Some(s) => s.tensor(&block)?,
        });
    }
    let state = state.expect("non-empty series");
    let record = EncodingRecord {
        layout: Layout::TensorProduct,
        pad_len: row_pad,
        global_norm: per_block_norms.iter().product(),
        per_block_norms,
        n_qubits: state.n_qubits(),
        n_rows: series.len(),
        row_dim: d,
    };
    Ok((state, record))
}

/// Reads classical values back: the `n × d` rows (Stacked) or the single
/// summed row (Superposed).
pub fn decode(state: &StateVector, record: &EncodingRecord) -> Result<Vec<Vec<f64>>> {
    let scaled: Vec<f64> = state
        .amplitudes()
        .iter()
        .map(|a| a.re * record.global_norm)
        .collect();
    match record.layout {
        Layout::Stacked => {
            let used = record.n_rows * record.row_dim;
            if scaled.len() < used {
                return Err(Error::shape("state too small for the recorded series"));
            }
            Ok(scaled[..used]
                .chunks(record.row_dim)
                .map(|c| c.to_vec())
                .collect())
        }
        Layout::Superposed => {
            if scaled.len() < record.row_dim {
                return Err(Error::shape("state too small for the recorded series"));
            }
            Ok(vec![scaled[..record.row_dim].to_vec()])
        }
        Layout::TensorProduct => Err(Error::Unsupported(
            "tensor-product states have no global read-back; use per-block norms".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn reals(s: &StateVector) -> Vec<f64> {
        s.real_parts()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len(), "{a:?} vs {b:?}");
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn padding() {
        assert_eq!(
            pad_to_power_of_two(&[1.0, 2.0, 3.0, 4.0]).unwrap(),
            (vec![1.0, 2.0, 3.0, 4.0], 0)
        );
        assert_eq!(
            pad_to_power_of_two(&[1.0, 2.0, 3.0]).unwrap(),
            (vec![1.0, 2.0, 3.0, 0.0], 1)
        );
        assert_eq!(pad_to_power_of_two(&[5.0]).unwrap(), (vec![5.0], 0));
        assert!(pad_to_power_of_two(&[]).is_err());
    }

    #[test]
    fn superposed() {
        let s = TimeSeries::from_rows(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let (state, rec) = encode_superposed(&s).unwrap();
        assert_close(&reals(&state), &[FRAC_1_SQRT_2, FRAC_1_SQRT_2], 1e-15);
        assert_close(&decode(&state, &rec).unwrap()[0], &[1.0, 1.0], 1e-12);

        let s = TimeSeries::from_rows(vec![vec![0.6, 0.8]]).unwrap();
        let (state, _) = encode_superposed(&s).unwrap();
        assert_close(&reals(&state), &[0.6, 0.8], 1e-15);

        let s = TimeSeries::from_rows(vec![vec![1.0, 0.0], vec![-1.0, 0.0]]).unwrap();
        assert!(matches!(
            encode_superposed(&s),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn stacked() {
        let s = TimeSeries::from_rows(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let (state, _) = encode_stacked(&s).unwrap();
        assert_close(
            &reals(&state),
            &[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2],
            1e-15,
        );

        let s = TimeSeries::from_rows(vec![vec![3.0, 4.0, 0.0, 0.0]]).unwrap();
        let (state, rec) = encode_stacked(&s).unwrap();
        assert_close(&reals(&state), &[0.6, 0.8, 0.0, 0.0], 1e-15);
        assert_eq!(rec.global_norm, 5.0);

        let (state, rec) = encode_values(&[1.0, 1.0, 1.0]).unwrap();
        let k = 1.0 / 3f64.sqrt();
        assert_close(&reals(&state), &[k, k, k, 0.0], 1e-15);
        assert_eq!(rec.pad_len, 1);
        assert_eq!(rec.n_qubits, 2);

        assert!(matches!(
            encode_values(&[0.0, 0.0]),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn tensor() {
        let s = TimeSeries::from_rows(vec![vec![1.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let (state, _) = encode_tensor(&s).unwrap();
        assert_close(&reals(&state), &[1.0, 0.0, 0.0, 0.0], 0.0);

        let s = TimeSeries::from_rows(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let (state, rec) = encode_tensor(&s).unwrap();
        assert_close(&reals(&state), &[0.0, 1.0, 0.0, 0.0], 0.0);
        assert_eq!(rec.n_qubits, 2);
        assert_eq!(rec.per_block_norms, vec![1.0, 1.0]);

        let big = TimeSeries::from_rows(vec![vec![1.0, 2.0, 3.0, 4.0]; 30]).unwrap();
        assert!(matches!(
            encode_tensor(&big),
            Err(Error::Capacity { needed: 60, .. })
        ));

        let zero_row = TimeSeries::from_rows(vec![vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            encode_tensor(&zero_row),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn decode_round_trip() {
        let s = TimeSeries::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let (state, rec) = encode_stacked(&s).unwrap();
        let back = decode(&state, &rec).unwrap();
        assert_close(&back[0], &[1.0, 2.0], 1e-10);
        assert_close(&back[1], &[3.0, 4.0], 1e-10);

        let (state, rec) = encode_tensor(&s).unwrap();
        assert!(matches!(decode(&state, &rec), Err(Error::Unsupported(_))));
    }

    #[test]
    fn series_validation() {
        assert!(TimeSeries::new(vec![0.0, 0.0], vec![vec![1.0], vec![2.0]]).is_err());
        assert!(TimeSeries::new(vec![0.0], vec![vec![f64::NAN]]).is_err());
        assert!(TimeSeries::from_rows(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
        assert!(TimeSeries::from_rows(vec![]).is_err());
    }
}
