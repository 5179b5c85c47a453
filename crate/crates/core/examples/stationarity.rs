//! Stationarity score before and after differencing a trending series.

use qtseries::encoding::encode_values;
use qtseries::preprocess::{classical_difference, stationarity_score, DiffOrder};
use qtseries::StateVector;

fn main() -> qtseries::Result<()> {
    let trend: Vec<f64> = (0..16).map(|t| 1.0 + 0.5 * t as f64).collect();
    let diffs = classical_difference(&trend, DiffOrder::First, false)?;
    println!(
        "uniform   {:.4}",
        stationarity_score(&StateVector::uniform(4)?)?
    );
    println!(
        "basis     {:.4}",
        stationarity_score(&StateVector::basis(4, 0)?)?
    );
    println!(
        "trend     {:.4}",
        stationarity_score(&encode_values(&trend)?.0)?
    );
    println!(
        "differenced {:.4}",
        stationarity_score(&encode_values(&diffs)?.0)?
    );
    Ok(())
}
