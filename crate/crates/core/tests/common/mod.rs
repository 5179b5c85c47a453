#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Documented example invocations and the golden file each must reproduce.
pub const GOLDEN_CASES: [(&str, &[&str]); 3] = [
    (
        "diff",
        &[
            "diff",
            "--input",
            "tests/data/ramp.csv",
            "--time-col",
            "t",
            "--pretty",
        ],
    ),
    (
        "fit",
        &[
            "fit",
            "--input",
            "tests/data/ar1.csv",
            "--time-col",
            "t",
            "--p",
            "1",
            "--d",
            "0",
            "--q",
            "0",
            "--pretty",
        ],
    ),
    (
        "qft_dist",
        &[
            "qft-dist",
            "--input",
            "tests/data/pair.csv",
            "--time-col",
            "t",
            "--strategy",
            "stacked",
            "--pretty",
        ],
    ),
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn run_qts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qts"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("qts binary runs")
}

/// Blanks the timing field so reports can be compared byte for byte.
pub fn mask_timing(text: &str) -> String {
    text.lines()
        .map(|line| {
            if line.trim_start().starts_with("\"wall_clock_ms\"") {
                "  \"wall_clock_ms\": <masked>"
            } else {
                line
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Compares a fresh run against its golden file; `UPDATE_GOLDEN=1` rewrites it.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let out = run_qts(args);
    if !out.status.success() {
        return Err(format!(
            "{name}: exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let fresh = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let path = manifest_dir()
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &fresh).map_err(|e| e.to_string())?;
    }
    let stored = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: {e} (run with UPDATE_GOLDEN=1)", path.display()))?;
    if mask_timing(&fresh) == mask_timing(&stored) {
        Ok(())
    } else {
        Err(format!("{name}: output differs from {}", path.display()))
    }
}
