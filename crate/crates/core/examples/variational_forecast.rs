//! Variational AR fit with both optimizers, compared to the least-squares fit.

use qtseries::forecast::{classical_fit, variational_fit, InputForm, Optimizer, VariationalConfig};

fn main() -> qtseries::Result<()> {
    let mut y = vec![1.0];
    while y.len() < 32 {
        y.push(0.5 * y.last().unwrap() + 0.05 * (y.len() as f64).sin());
    }
    let classical = classical_fit(&y, 1, 0, 0)?;
    println!("least squares mse {:.3e}", classical.mse);
    for optimizer in [Optimizer::Spsa, Optimizer::NelderMead] {
        let config = VariationalConfig {
            p: 1,
            d: 0,
            q: 0,
            n_qubits: 2,
            layers: 2,
            input_form: InputForm::Stacked,
            optimizer,
            max_iters: 500,
            seed: 42,
        };
        let fit = variational_fit(&y, &config)?;
        println!(
            "{optimizer:?}: mse {:.3e} after {} iterations (converged: {})",
            fit.mse,
            fit.loss_trace.len(),
            fit.converged
        );
    }
    Ok(())
}
