//! Derivative-free minimizers used by the variational fit.
//!
//! Both report a best-so-far trace with one entry per iteration.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::statevec::seeded_rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Optimizer {
    Spsa,
    NelderMead,
}

/// SPSA gains `a_k = a / (k+1)^alpha`, `c_k = c / (k+1)^gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpsaGains {
    pub a: f64,
    pub alpha: f64,
    pub c: f64,
    pub gamma: f64,
}

impl Default for SpsaGains {
    fn default() -> Self {
        Self {
            a: 0.1,
            alpha: 0.602,
            c: 0.1,
            gamma: 0.101,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizeOutcome {
    pub best: Vec<f64>,
    pub best_value: f64,
    pub trace: Vec<f64>,
    pub converged: bool,
}

/// Iterations without improvement after which a run counts as settled.
const STALL_WINDOW: usize = 50;
const STALL_TOL: f64 = 1e-12;

/// Two-evaluation simultaneous-perturbation gradient estimate.
pub fn spsa_gradient<F: FnMut(&[f64]) -> f64, R: Rng + ?Sized>(
    f: &mut F,
    theta: &[f64],
    c: f64,
    rng: &mut R,
) -> Vec<f64> {
    let delta: Vec<f64> = theta
        .iter()
        .map(|_| if rng.random::<bool>() { 1.0 } else { -1.0 })
        .collect();
    let plus: Vec<f64> = theta.iter().zip(&delta).map(|(t, d)| t + c * d).collect();
    let minus: Vec<f64> = theta.iter().zip(&delta).map(|(t, d)| t - c * d).collect();
    let slope = (f(&plus) - f(&minus)) / (2.0 * c);
    delta.iter().map(|d| slope / d).collect()
}

fn stalled(trace: &[f64]) -> bool {
    trace.len() > STALL_WINDOW
        && trace[trace.len() - 1 - STALL_WINDOW] - trace[trace.len() - 1] < STALL_TOL
}

pub fn spsa<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    theta0: &[f64],
    max_iters: usize,
    gains: SpsaGains,
    seed: u64,
) -> OptimizeOutcome {
    let mut rng: ChaCha8Rng = seeded_rng(seed);
    let mut theta = theta0.to_vec();
    let mut best = theta.clone();
    let mut best_value = f(&theta);
    let mut trace = Vec::with_capacity(max_iters);
    let mut converged = false;
    for k in 0..max_iters {
        let kk = (k + 1) as f64;
        let a_k = gains.a / kk.powf(gains.alpha);
        let c_k = gains.c / kk.powf(gains.gamma);
        let g = spsa_gradient(&mut f, &theta, c_k, &mut rng);
        theta.iter_mut().zip(&g).for_each(|(t, g)| *t -= a_k * g);
        let value = f(&theta);
        if value < best_value {
            best_value = value;
            best.clone_from(&theta);
        }
        trace.push(best_value);
        if best_value == 0.0 || stalled(&trace) {
            converged = true;
            break;
        }
    }
    OptimizeOutcome {
        best,
        best_value,
        trace,
        converged,
    }
}

/// Nelder–Mead with the usual coefficients (1, 2, 0.5, 0.5).
pub fn nelder_mead<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    theta0: &[f64],
    step: f64,
    max_iters: usize,
) -> OptimizeOutcome {
    let n = theta0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(n + 1);
    simplex.push((theta0.to_vec(), f(theta0)));
    for i in 0..n {
        let mut v = theta0.to_vec();
        v[i] += step;
        let fv = f(&v);
        simplex.push((v, fv));
    }
    let by_value = |a: &(Vec<f64>, f64), b: &(Vec<f64>, f64)| a.1.total_cmp(&b.1);
    let mut trace = Vec::with_capacity(max_iters);
    let mut converged = false;
    for _ in 0..max_iters {
        simplex.sort_by(by_value);
        let centroid: Vec<f64> = (0..n)
            .map(|j| simplex[..n].iter().map(|(v, _)| v[j]).sum::<f64>() / n as f64)
            .collect();
        let along = |t: f64, worst: &[f64]| -> Vec<f64> {
            centroid
                .iter()
                .zip(worst)
                .map(|(c, w)| c + t * (w - c))
                .collect()
        };
        let worst = simplex[n].0.clone();
        let reflected = along(-1.0, &worst);
        let fr = f(&reflected);
        if fr < simplex[0].1 {
            let expanded = along(-2.0, &worst);
            let fe = f(&expanded);
            simplex[n] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            let (t, bound) = if fr < simplex[n].1 {
                (-0.5, fr)
            } else {
                (0.5, simplex[n].1)
            };
            let contracted = along(t, &worst);
            let fc = f(&contracted);
            if fc < bound {
                simplex[n] = (contracted, fc);
            } else {
                let best = simplex[0].0.clone();
                for vertex in simplex.iter_mut().skip(1) {
                    let v: Vec<f64> = best
                        .iter()
                        .zip(&vertex.0)
                        .map(|(b, x)| b + 0.5 * (x - b))
                        .collect();
                    let fv = f(&v);
                    *vertex = (v, fv);
                }
            }
        }
        simplex.sort_by(by_value);
        trace.push(simplex[0].1);
        let spread = simplex[n].1 - simplex[0].1;
        if spread <= STALL_TOL * simplex[0].1.abs() + f64::MIN_POSITIVE {
            converged = true;
            break;
        }
    }
    simplex.sort_by(by_value);
    let (best, best_value) = simplex.swap_remove(0);
    OptimizeOutcome {
        best,
        best_value,
        trace,
        converged,
    }
}
