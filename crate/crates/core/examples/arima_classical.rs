//! Least-squares ARIMA fit, a forecast and an AIC order scan.

use qtseries::forecast::{classical_fit, predict, seasonality_scan, ModelParams};
use qtseries::statevec::seeded_rng;
use rand_distr::{Distribution, Normal};

fn main() -> qtseries::Result<()> {
    let mut rng = seeded_rng(9);
    let noise = Normal::new(0.0, 0.1).unwrap();
    let mut y = vec![0.0, 0.0];
    for _ in 0..200 {
        let t = y.len();
        y.push(0.6 * y[t - 1] - 0.3 * y[t - 2] + noise.sample(&mut rng));
    }
    let fit = classical_fit(&y, 2, 0, 0)?;
    let ModelParams::Arima(params) = &fit.params else {
        unreachable!()
    };
    println!(
        "a = {:.4?}, c = {:.4}, mse = {:.5}",
        params.a, params.c, fit.mse
    );
    println!("forecast {:.4?}", predict(params, &y, 5)?);

    let ramp: Vec<f64> = (0..30).map(|t| 2.0 * t as f64 + 1.0).collect();
    let drift = classical_fit(&ramp, 0, 1, 0)?;
    if let ModelParams::Arima(p) = &drift.params {
        println!("drift c = {:.4}, next {:?}", p.c, predict(p, &ramp, 3)?);
    }
    let scan = seasonality_scan(&y, 4)?;
    println!("order scan: {scan:?}");
    Ok(())
}
