use num_complex::Complex64;

use crate::error::Result;
use crate::statevec::StateVector;

/// Pairwise summation; exact for `2^m` identical terms.
fn pairwise<T: Copy + std::ops::Add<Output = T>>(values: &[T]) -> T {
    match values.len() {
        1 => values[0],
        n => pairwise(&values[..n / 2]) + pairwise(&values[n / 2..]),
    }
}

/// Squared overlap `|⟨H|ψ⟩|²` with the equal superposition `|H⟩ = H^{⊗n}|0⟩`.
///
/// A state closer to `|H⟩` is read as more stationary. Evaluated as
/// `|Σ ψ_j|² / (N Σ |ψ_j|²)` so the uniform state scores exactly 1.
pub fn stationarity_score(state: &StateVector) -> Result<f64> {
    let amps = state.amplitudes();
    let sum: Complex64 = pairwise(amps);
    let norms: Vec<f64> = amps.iter().map(|a| a.norm_sqr()).collect();
    let energy = pairwise(&norms);
    Ok((sum.norm_sqr() / (amps.len() as f64 * energy)).clamp(0.0, 1.0))
}
