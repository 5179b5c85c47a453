//! Encodes a small bivariate series in each layout and decodes it back.

use qtseries::encoding::{decode, encode_stacked, encode_superposed, encode_tensor};
use qtseries::TimeSeries;

fn main() -> qtseries::Result<()> {
    let series = TimeSeries::from_rows(vec![vec![1.0, 0.5], vec![2.0, 0.4], vec![3.0, 0.6]])?;
    for (name, encoded) in [
        ("stacked", encode_stacked(&series)?),
        ("superposed", encode_superposed(&series)?),
        ("tensor", encode_tensor(&series)?),
    ] {
        let (state, record) = encoded;
        println!(
            "{name}: {} qubits, norm {:.6}",
            state.n_qubits(),
            record.global_norm
        );
        if let Ok(rows) = decode(&state, &record) {
            println!("  decoded {rows:?}");
        }
    }
    Ok(())
}
