//! Stable dataset and report formats.
//!
//! Datasets are CSV with a leading `# format_version=1` comment, the pinned
//! header `state,regime,lambda,mean,variance,shots,seed` and one row per
//! estimate; floats use the shortest round-trip rendering, so identical
//! runs serialize to identical bytes. Analysis reports are JSON documents
//! carrying the same `format_version` field.

use serde::{Deserialize, Serialize};

use crate::aggregate::AggregateSummary;
use crate::error::{HarnessError, Result};
use crate::records::{EstimateRecord, ExtrapolationReport};

pub const DATASET_FORMAT_VERSION: u32 = 1;
pub const REPORT_FORMAT_VERSION: u32 = 1;
pub const DATASET_HEADER: &str = "state,regime,lambda,mean,variance,shots,seed";

/// Serialize a dataset to CSV.
pub fn dataset_to_csv(records: &[EstimateRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 64);
    out.push_str(&format!("# format_version={DATASET_FORMAT_VERSION}\n"));
    out.push_str(DATASET_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.state, r.regime, r.lambda, r.mean, r.variance, r.shots, r.seed
        ));
    }
    out
}

/// Parse a dataset serialized by [`dataset_to_csv`]. Errors carry the
/// 1-based physical line number.
pub fn parse_dataset_csv(text: &str) -> Result<Vec<EstimateRecord>> {
    let mut records = Vec::new();
    let mut header_seen = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(version) = comment.trim().strip_prefix("format_version=") {
                let v: u32 = version.trim().parse().map_err(|_| HarnessError::DatasetParse {
                    line: line_no,
                    message: format!("bad format_version {version:?}"),
                })?;
                if v != DATASET_FORMAT_VERSION {
                    return Err(HarnessError::UnsupportedFormatVersion(v));
                }
            }
            continue;
        }
        if !header_seen {
            if line != DATASET_HEADER {
                return Err(HarnessError::DatasetParse {
                    line: line_no,
                    message: format!("expected header {DATASET_HEADER:?}, got {line:?}"),
                });
            }
            header_seen = true;
            continue;
        }
        records.push(parse_row(line, line_no)?);
    }
    if !header_seen {
        return Err(HarnessError::DatasetParse {
            line: 1,
            message: "missing header row".into(),
        });
    }
    Ok(records)
}

fn parse_row(line: &str, line_no: usize) -> Result<EstimateRecord> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 7 {
        return Err(HarnessError::DatasetParse {
            line: line_no,
            message: format!("expected 7 fields, got {}", fields.len()),
        });
    }
    fn field<T: std::str::FromStr>(s: &str, name: &str, line: usize) -> Result<T> {
        s.trim().parse().map_err(|_| HarnessError::DatasetParse {
            line,
            message: format!("bad {name} value {s:?}"),
        })
    }
    Ok(EstimateRecord {
        state: field(fields[0], "state", line_no)?,
        regime: field(fields[1], "regime", line_no)?,
        lambda: field(fields[2], "lambda", line_no)?,
        mean: field(fields[3], "mean", line_no)?,
        variance: field(fields[4], "variance", line_no)?,
        shots: field(fields[5], "shots", line_no)?,
        seed: field(fields[6], "seed", line_no)?,
    })
}

/// Per-subset extrapolation results with their summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsetAnalysis {
    pub subset: Vec<u8>,
    pub summary: AggregateSummary,
    pub reports: Vec<ExtrapolationReport>,
}

/// Top-level analysis report document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    pub format_version: u32,
    pub order: usize,
    pub subsets: Vec<SubsetAnalysis>,
}

impl AnalysisDocument {
    pub fn new(order: usize, subsets: Vec<SubsetAnalysis>) -> Self {
        Self {
            format_version: REPORT_FORMAT_VERSION,
            order,
            subsets,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
