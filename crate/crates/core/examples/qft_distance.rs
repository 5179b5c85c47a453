//! Fourier-coefficient distance between two series with each strategy.
//!
//! Stacked works on the raw scale; the other two normalize their inputs, so
//! the three agree once the inputs are unit vectors.

use qtseries::spectral::{qft_distance, DistanceStrategy};

const STRATEGIES: [DistanceStrategy; 3] = [
    DistanceStrategy::Stacked,
    DistanceStrategy::Superposed,
    DistanceStrategy::TwoRegister,
];

fn unit(v: &[f64]) -> Vec<f64> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter().map(|x| x / n).collect()
}

fn main() -> qtseries::Result<()> {
    let y1 = [1.0, 2.0, 3.0, 4.0, 3.0, 2.0, 1.0, 0.5];
    let y2 = [1.2, 2.1, 2.8, 4.1, 3.3, 1.9, 0.8, 0.6];
    for (label, a, b) in [
        ("raw", y1.to_vec(), y2.to_vec()),
        ("unit", unit(&y1), unit(&y2)),
    ] {
        println!("{label} inputs");
        for strategy in STRATEGIES {
            let r = qft_distance(strategy, &a, &b, None, 0)?;
            println!(
                "  {strategy:?}: distance {:.6}, p_minus {:.6}, {} qubits",
                r.distance_estimate, r.p_minus, r.qubits_used
            );
        }
    }
    let sampled = qft_distance(DistanceStrategy::TwoRegister, &y1, &y2, Some(20_000), 7)?;
    println!(
        "two-register, 20000 shots: {:.6}",
        sampled.distance_estimate
    );
    Ok(())
}
