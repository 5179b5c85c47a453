//! First, second and seasonal differences prepared by a controlled shift.

use qtseries::preprocess::{classical_difference, quantum_difference, DiffOrder};
use qtseries::StateVector;

fn main() -> qtseries::Result<()> {
    let y = [1.0, 2.0, 3.0, 4.0];
    let (state, _) = StateVector::from_real(&y)?;
    let first = quantum_difference(&state, DiffOrder::First)?;
    println!("full state {:.4?}", first.full_state.real_parts());
    for order in [DiffOrder::First, DiffOrder::Second, DiffOrder::Seasonal(2)] {
        let r = quantum_difference(&state, order)?;
        println!(
            "{order:?}: {:.4?} (p = {:.4}), cyclic oracle {:?}",
            r.difference_part.real_parts(),
            r.postselect_prob,
            classical_difference(&y, order, true)?
        );
    }
    Ok(())
}
