//! Key/value run reports. Field order is the struct order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Both classification errors for one evaluation run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub format_version: u32,
    pub dataset: String,
    pub alphabet_size: usize,
    pub segment_count: usize,
    pub original_length: usize,
    pub truncated_points: usize,
    pub mode: String,
    pub error_mindist: f64,
    pub error_wmd: f64,
    pub seed: u64,
    pub generator: String,
    pub wall_clock_seconds: f64,
}

/// MINDIST-only report from `baseline`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineReport {
    pub format_version: u32,
    pub dataset: String,
    pub alphabet_size: usize,
    pub segment_count: usize,
    pub original_length: usize,
    pub truncated_points: usize,
    pub mode: String,
    pub error_mindist: f64,
    pub wall_clock_seconds: f64,
}

/// Summary printed by `train` next to the model file it writes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainReport {
    pub format_version: u32,
    pub dataset: String,
    pub alphabet_size: usize,
    pub segment_count: usize,
    pub original_length: usize,
    pub truncated_points: usize,
    pub train_error_mindist: f64,
    pub train_error_wmd: f64,
    pub evaluations: usize,
    pub seed: u64,
    pub generator: String,
    pub model: String,
    pub wall_clock_seconds: f64,
}

pub fn to_text<T: Serialize>(report: &T) -> Result<String> {
    toml::to_string(report).map_err(|e| Error::Serialize {
        what: "report",
        message: e.to_string(),
    })
}

pub fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    toml::from_str(text).map_err(|e| Error::Format {
        what: "report",
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_report_round_trip() {
        let r = RunReport {
            format_version: REPORT_FORMAT_VERSION,
            dataset: "cbf".into(),
            alphabet_size: 3,
            segment_count: 32,
            original_length: 128,
            truncated_points: 0,
            mode: "loo".into(),
            error_mindist: 0.1,
            error_wmd: 1.0 / 30.0,
            seed: 4,
            generator: "g".into(),
            wall_clock_seconds: 0.5,
        };
        let text = to_text(&r).unwrap();
        assert!(text.starts_with("format_version = 1\ndataset = \"cbf\"\n"));
        assert_eq!(from_text::<RunReport>(&text).unwrap(), r);
    }
}
