//! An AR stencil as a circulant operator applied through the QFT.

use qtseries::forecast::{apply_circulant, circulant_from_params, ArimaParams};
use qtseries::StateVector;

fn main() -> qtseries::Result<()> {
    let params = ArimaParams::new(0.0, vec![0.5], 0, vec![]);
    let op = circulant_from_params(&params, 8)?;
    println!(
        "first column {:?}",
        op.first_column.iter().map(|z| z.re).collect::<Vec<_>>()
    );
    for l in &op.eigenvalues {
        println!("  lambda {:+.4} {:+.4}i", l.re, l.im);
    }
    let y: Vec<f64> = (0..8).map(|t| 0.5f64.powi(t)).collect();
    let (state, _) = StateVector::from_real(&y)?;
    let (out, norm) = apply_circulant(&op, &state)?;
    // Rows 1.. are the AR(1) residuals of y, all zero; row 0 wraps around.
    println!("C y / |C y| = {:.4?}, |C y| = {norm:.4}", out.real_parts());
    Ok(())
}
