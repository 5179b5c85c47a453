//! Exponential smoothing of a stream of two-qubit states.

use qtseries::preprocess::{quantum_exp_smooth, smoothing_coefficients};
use qtseries::StateVector;

fn main() -> qtseries::Result<()> {
    let points = [
        [1.0, 0.0, 0.0, 0.0],
        [0.8, 0.6, 0.0, 0.0],
        [0.6, 0.6, 0.4, 0.35],
        [0.5, 0.5, 0.5, 0.5],
    ];
    let history: Vec<StateVector> = points
        .iter()
        .map(|p| StateVector::from_real(p).map(|(s, _)| s))
        .collect::<Result<_, _>>()?;
    for alpha in [0.25, 0.5, 0.75] {
        let c = smoothing_coefficients(alpha)?;
        let out = quantum_exp_smooth(&history, alpha)?;
        println!("alpha {alpha}: a = {:.4}, b = {:.4}", c.a, c.b);
        println!("  state {:.4?}", out.state.real_parts());
        println!("  postselection {:.4?}", out.postselect_probs);
    }
    Ok(())
}
