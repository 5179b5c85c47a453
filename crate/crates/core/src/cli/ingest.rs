use std::path::Path;

use super::CliError;
use crate::encoding::TimeSeries;

/// Reads a header-led CSV into a series.
///
/// Without `time_column` the row index is the timestamp. An empty
/// `value_columns` selects every column except the time column.
pub fn ingest_csv(
    path: &Path,
    time_column: Option<&str>,
    value_columns: &[String],
) -> Result<(TimeSeries, Vec<String>), CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| CliError::Data(format!("{}: bad header row: {e}", path.display())))?
        .iter()
        .map(str::to_owned)
        .collect();
    let find = |name: &str| {
        headers.iter().position(|h| h == name).ok_or_else(|| {
            CliError::Data(format!(
                "{}: no column named {name:?} (found {})",
                path.display(),
                headers.join(", ")
            ))
        })
    };
    let time_idx = time_column.map(find).transpose()?;
    let names: Vec<String> = if value_columns.is_empty() {
        headers
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != time_idx)
            .map(|(_, h)| h.clone())
            .collect()
    } else {
        value_columns.to_vec()
    };
    if names.is_empty() {
        return Err(CliError::Data(format!(
            "{}: no value columns",
            path.display()
        )));
    }
    let value_idx: Vec<usize> = names.iter().map(|n| find(n)).collect::<Result<_, _>>()?;

    let parse = |field: Option<&str>, row: usize, column: &str| -> Result<f64, CliError> {
        let raw = field.unwrap_or("");
        raw.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| {
                CliError::Data(format!(
                    "{}: row {row}, column {column:?}: {raw:?} is not a finite number",
                    path.display()
                ))
            })
    };
    let mut timestamps = Vec::new();
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        // The header is row 1.
        let row = i + 2;
        let record =
            record.map_err(|e| CliError::Data(format!("{}: row {row}: {e}", path.display())))?;
        let t = match time_idx {
            Some(j) => parse(record.get(j), row, &headers[j])?,
            None => i as f64,
        };
        let values = value_idx
            .iter()
            .map(|&j| parse(record.get(j), row, &headers[j]))
            .collect::<Result<Vec<f64>, _>>()?;
        if let Some(&prev) = timestamps.last() {
            if t <= prev {
                return Err(CliError::Data(format!(
                    "{}: row {row}: timestamp {t} does not increase (previous {prev})",
                    path.display()
                )));
            }
        }
        timestamps.push(t);
        rows.push(values);
    }
    if rows.is_empty() {
        return Err(CliError::Data(format!("{}: no data rows", path.display())));
    }
    let series = TimeSeries::new(timestamps, rows)
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok((series, names))
}
