use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::statevec::StateVector;

/// Complex amplitude as written to reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Amplitude {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Amplitude {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

pub fn amplitudes(state: &StateVector) -> Vec<Amplitude> {
    state
        .amplitudes()
        .iter()
        .copied()
        .map(Amplitude::from)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputSummary {
    pub path: String,
    pub columns: Vec<String>,
    pub n: usize,
    pub d: usize,
    /// Power-of-two length the selected values are padded to.
    pub pad_len: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageReport {
    pub name: String,
    pub output: Value,
}

/// JSON document produced by every command. Only `wall_clock_ms` varies
/// between identical runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: u64,
    pub config: Value,
    pub input: InputSummary,
    pub stages: Vec<StageReport>,
    pub wall_clock_ms: f64,
}

/// Serializes `report`; floats use the shortest text that parses back to
/// the same double.
pub fn emit_report(report: &PipelineReport, pretty: bool) -> String {
    let text = if pretty {
        serde_json::to_string_pretty(report)
    } else {
        serde_json::to_string(report)
    };
    text.expect("report values are finite and keys are strings")
}

pub fn parse_report(text: &str) -> serde_json::Result<PipelineReport> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn empty() -> PipelineReport {
        PipelineReport {
            tool: "qts".into(),
            version: "0".into(),
            command: "encode".into(),
            seed: 0,
            config: json!({}),
            input: InputSummary {
                path: "x.csv".into(),
                columns: vec!["v".into()],
                n: 2,
                d: 1,
                pad_len: 2,
            },
            stages: vec![],
            wall_clock_ms: 0.5,
        }
    }

    #[test]
    fn empty_stage_list_round_trips() {
        let r = empty();
        for pretty in [false, true] {
            assert_eq!(parse_report(&emit_report(&r, pretty)).unwrap(), r);
        }
    }

    #[test]
    fn amplitudes_keep_full_precision() {
        let mut r = empty();
        let s = StateVector::uniform(1).unwrap();
        r.stages.push(StageReport {
            name: "state".into(),
            output: json!({ "amplitudes": amplitudes(&s) }),
        });
        let text = emit_report(&r, false);
        assert!(
            text.contains(r#"{"re":0.7071067811865476,"im":0.0}"#),
            "{text}"
        );
        assert_eq!(parse_report(&text).unwrap(), r);
    }

    #[test]
    fn keys_are_ordered() {
        let mut r = empty();
        r.config = json!({ "zeta": 1, "alpha": 2 });
        let text = emit_report(&r, false);
        assert!(text.find("\"zeta\"").unwrap() < text.find("\"alpha\"").unwrap());
        assert!(text.find("\"tool\"").unwrap() < text.find("\"wall_clock_ms\"").unwrap());
        assert_eq!(emit_report(&parse_report(&text).unwrap(), false), text);
    }
}
