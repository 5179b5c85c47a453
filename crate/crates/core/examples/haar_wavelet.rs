//! Haar transform of a short signal, then truncation to its largest coefficients.

use qtseries::preprocess::{haar_matrix, quantum_haar_transform, wavelet_compress};
use qtseries::StateVector;

fn main() -> qtseries::Result<()> {
    for row in haar_matrix(4, true)? {
        println!("{row:.4?}");
    }
    let (state, _) = StateVector::from_real(&[4.0, 4.0, 5.0, 5.0, 1.0, 2.0, 8.0, 8.0])?;
    println!(
        "coefficients {:.4?}",
        quantum_haar_transform(&state)?.real_parts()
    );
    for keep in [2, 4] {
        let c = wavelet_compress(&state, keep)?;
        println!(
            "keep {keep}: dropped energy {:.4}, approximation {:.4?}",
            c.dropped_energy,
            c.reconstruct()?
        );
    }
    Ok(())
}
