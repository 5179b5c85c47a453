use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::{FitResult, ModelParams};
use crate::error::{Error, Result};
use crate::preprocess::difference_n;

/// Parameter change below which the alternating MA fit stops.
const SWEEP_TOL: f64 = 1e-8;
const MAX_SWEEPS: usize = 200;
/// Relative singular-value cutoff for the least-squares design.
const RANK_TOL: f64 = 1e-10;

/// `w_t = c + Σ a_i w_{t−i} + ε_t + Σ b_j ε_{t−j}` on the `d`-times differenced series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArimaParams {
    pub p: usize,
    pub d: usize,
    pub q: usize,
    pub c: f64,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

impl ArimaParams {
    pub fn new(c: f64, a: Vec<f64>, d: usize, b: Vec<f64>) -> Self {
        Self {
            p: a.len(),
            d,
            q: b.len(),
            c,
            a,
            b,
        }
    }

    fn check(&self) -> Result<()> {
        if self.a.len() != self.p || self.b.len() != self.q {
            return Err(Error::shape(format!(
                "p={}, q={} but {} AR and {} MA coefficients",
                self.p,
                self.q,
                self.a.len(),
                self.b.len()
            )));
        }
        Ok(())
    }
}

/// Time drift `c` and the spread of what it leaves unexplained.
pub fn drift_fit(values: &[f64]) -> Result<(f64, f64)> {
    if values.len() < 2 {
        return Err(Error::shape("drift fit needs at least two values"));
    }
    let steps: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    let n = steps.len() as f64;
    let c = steps.iter().sum::<f64>() / n;
    let var = steps.iter().map(|s| (s - c).powi(2)).sum::<f64>() / n;
    Ok((c, var.sqrt()))
}

/// Residual recursion over a differenced series. Entries before index `p`
/// are not fitted and stay zero.
fn residuals_on(w: &[f64], params: &ArimaParams) -> Vec<f64> {
    let mut eps = vec![0.0; w.len()];
    for t in params.p..w.len() {
        let mut fitted = params.c;
        for (i, a) in params.a.iter().enumerate() {
            fitted += a * w[t - 1 - i];
        }
        for (j, b) in params.b.iter().enumerate() {
            if t > j {
                fitted += b * eps[t - 1 - j];
            }
        }
        eps[t] = w[t] - fitted;
    }
    eps
}

/// One-step-ahead prediction errors of `params` over the fitted range.
pub fn one_step_residuals(params: &ArimaParams, values: &[f64]) -> Result<Vec<f64>> {
    params.check()?;
    let w = difference_n(values, params.d)?;
    if w.len() <= params.p {
        return Err(Error::shape(format!(
            "{} values leave nothing to fit for p={}, d={}",
            values.len(),
            params.p,
            params.d
        )));
    }
    Ok(residuals_on(&w, params)[params.p..].to_vec())
}

fn mean_sq(values: &[f64]) -> f64 {
    values.iter().map(|v| v * v).sum::<f64>() / values.len() as f64
}

/// Least squares with an explicit rank check.
fn solve(rows: &[Vec<f64>], target: &[f64]) -> Result<Vec<f64>> {
    let cols = rows[0].len();
    let x = DMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j]);
    let y = DVector::from_column_slice(target);
    let svd = x.svd(true, true);
    let s_max = svd.singular_values.max();
    let cutoff = RANK_TOL * s_max.max(f64::MIN_POSITIVE);
    if svd.singular_values.iter().any(|&s| s <= cutoff) {
        return Err(Error::RankDeficient(format!(
            "{} rows, {cols} columns, condition beyond 1/{RANK_TOL:e}",
            rows.len()
        )));
    }
    let beta = svd
        .solve(&y, cutoff)
        .map_err(|e| Error::RankDeficient(e.to_string()))?;
    Ok(beta.iter().copied().collect())
}

/// Conditional least squares after `d` non-cyclic differences.
///
/// AR-only models need one solve. With `q > 0` the residual lags are
/// re-estimated and the regression repeated until the coefficients move by
/// less than `1e-8`. Residual lags that are negligible (numerically zero
/// columns) are left out and their coefficients set to zero.
pub fn classical_fit(values: &[f64], p: usize, d: usize, q: usize) -> Result<FitResult> {
    if values.len() <= p + q + d + 2 {
        return Err(Error::shape(format!(
            "{} values are too few for p={p}, d={d}, q={q}",
            values.len()
        )));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::domain("series contains non-finite values"));
    }
    let w = difference_n(values, d)?;
    let target: Vec<f64> = w[p..].to_vec();
    let scale = target.iter().map(|v| v.abs()).fold(0.0, f64::max).max(1.0);

    let mut params = ArimaParams::new(0.0, vec![0.0; p], d, vec![0.0; q]);
    let mut eps = vec![0.0; w.len()];
    let mut loss_trace: Vec<f64> = Vec::new();
    let mut best: Option<(f64, ArimaParams)> = None;
    let mut converged = q == 0;
    let sweeps = if q == 0 { 1 } else { MAX_SWEEPS };

    for sweep in 0..sweeps {
        let active: Vec<usize> = (0..q)
            .filter(|&j| {
                let col = (p..w.len()).map(|t| if t > j { eps[t - 1 - j] } else { 0.0 });
                col.map(f64::abs).fold(0.0, f64::max) > 1e-12 * scale
            })
            .collect();
        let rows: Vec<Vec<f64>> = (p..w.len())
            .map(|t| {
                let mut row: Vec<f64> = (0..p).map(|i| w[t - 1 - i]).collect();
                row.push(1.0);
                row.extend(
                    active
                        .iter()
                        .map(|&j| if t > j { eps[t - 1 - j] } else { 0.0 }),
                );
                row
            })
            .collect();
        let beta = match solve(&rows, &target) {
            Ok(beta) => beta,
            // Later sweeps can degenerate; keep the best earlier estimate.
            Err(_) if sweep > 0 => break,
            Err(e) => return Err(e),
        };
        let mut next = ArimaParams::new(beta[p], beta[..p].to_vec(), d, vec![0.0; q]);
        for (k, &j) in active.iter().enumerate() {
            next.b[j] = beta[p + 1 + k];
        }
        let change = next
            .a
            .iter()
            .chain(&next.b)
            .chain(std::iter::once(&next.c))
            .zip(
                params
                    .a
                    .iter()
                    .chain(&params.b)
                    .chain(std::iter::once(&params.c)),
            )
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        params = next;
        eps = residuals_on(&w, &params);
        let loss = mean_sq(&eps[p..]);
        if !loss.is_finite() {
            break;
        }
        if best.as_ref().is_none_or(|(b, _)| loss < *b) {
            best = Some((loss, params.clone()));
        }
        loss_trace.push(best.as_ref().map_or(loss, |(b, _)| *b));
        if q > 0 && sweep > 0 && change < SWEEP_TOL {
            converged = true;
            break;
        }
    }

    let (_, params) = best.expect("first sweep always yields an estimate");
    let eps = residuals_on(&w, &params);
    let residuals = eps[p..].to_vec();
    Ok(FitResult {
        mse: mean_sq(&residuals),
        params: ModelParams::Arima(params),
        residuals,
        loss_trace,
        converged,
    })
}

/// Forecasts `horizon` steps past `history` on the original scale.
///
/// Future shocks are zero; past shocks come from the residual recursion
/// over `history`.
pub fn predict(params: &ArimaParams, history: &[f64], horizon: usize) -> Result<Vec<f64>> {
    params.check()?;
    if history.len() < params.p + params.d || history.is_empty() {
        return Err(Error::shape(format!(
            "history of {} values, need at least p + d = {}",
            history.len(),
            params.p + params.d
        )));
    }
    // levels[k] is the series differenced k times.
    let mut levels = vec![history.to_vec()];
    for k in 0..params.d {
        levels.push(levels[k].windows(2).map(|w| w[1] - w[0]).collect());
    }
    let mut w = levels[params.d].clone();
    let mut eps = if params.q > 0 && w.len() > params.p {
        residuals_on(&w, params)
    } else {
        vec![0.0; w.len()]
    };
    let mut tails: Vec<f64> = levels[..params.d]
        .iter()
        .map(|l| *l.last().expect("non-empty level"))
        .collect();

    let mut out = Vec::with_capacity(horizon);
    for _ in 0..horizon {
        let t = w.len();
        let mut next = params.c;
        for (i, a) in params.a.iter().enumerate() {
            next += a * w[t - 1 - i];
        }
        for (j, b) in params.b.iter().enumerate() {
            if t > j {
                next += b * eps[t - 1 - j];
            }
        }
        w.push(next);
        eps.push(0.0);
        let mut value = next;
        for tail in tails.iter_mut().rev() {
            value += *tail;
            *tail = value;
        }
        out.push(value);
    }
    Ok(out)
}

/// AR order by AIC, `2p + n ln(mse)` with `n` the number of fitted points.
pub fn seasonality_scan(series: &[f64], p_max: usize) -> Result<(usize, Vec<f64>)> {
    if p_max < 1 || 3 * p_max >= series.len() {
        return Err(Error::shape(format!(
            "p_max must satisfy 1 <= p_max < len/3, got {p_max} for {} values",
            series.len()
        )));
    }
    let mut scores = Vec::with_capacity(p_max);
    for p in 1..=p_max {
        let fit = classical_fit(series, p, 0, 0)?;
        let n = fit.residuals.len() as f64;
        scores.push(2.0 * p as f64 + n * fit.mse.max(f64::MIN_POSITIVE).ln());
    }
    let best = scores
        .iter()
        .enumerate()
        .fold(0, |best, (i, s)| if *s < scores[best] { i } else { best });
    Ok((best + 1, scores))
}
