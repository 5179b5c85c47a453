//! Bin averages by Hadamards and postselection, next to the classical means.

use qtseries::preprocess::{classical_bin_means, moving_average_operator, quantum_bin_average};
use qtseries::StateVector;

fn main() -> qtseries::Result<()> {
    let y = [1.0, 3.0, 2.0, 4.0, 6.0, 8.0, 5.0, 7.0];
    let (state, _) = StateVector::from_real(&y)?;
    for k in [2, 4] {
        let (bins, p) = quantum_bin_average(&state, k)?;
        println!("k = {k}: state {:.4?} (p = {p:.4})", bins.real_parts());
        println!("  classical means {:?}", classical_bin_means(&y, k)?);
    }
    let (strided, p) = moving_average_operator(&state, 2)?;
    println!("strided sums {:.4?} (p = {p:.4})", strided.real_parts());
    Ok(())
}
