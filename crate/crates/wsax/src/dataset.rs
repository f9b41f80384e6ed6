//! Label-first delimited datasets, one series per line.
//!
//! ```text
//! 1,0.5,0.7,0.9
//! 2 0.1 0.2 0.3
//! ```
//!
//! The delimiter is a comma if the first non-blank line contains one,
//! otherwise any run of whitespace. Labels written as reals (`1.0000`) are
//! truncated toward zero.

use std::path::Path;

use wsax_core::{LabeledDataset, LabeledSeries, TimeSeries};

use crate::error::{Error, Result};
use crate::fsutil;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delimiter {
    Comma,
    Whitespace,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Drop trailing points so the series length becomes a multiple of this.
    pub truncate_to_multiple_of: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedDataset {
    pub dataset: LabeledDataset,
    pub delimiter: Delimiter,
    /// Points dropped from the end of every series.
    pub truncated_points: usize,
    /// Rows whose label had to be truncated to an integer.
    pub truncated_labels: usize,
}

pub fn parse_dataset(path: &Path, opts: &ParseOptions) -> Result<ParsedDataset> {
    let text = fsutil::read_to_string(path)?;
    parse_dataset_str(&text, opts)
}

fn parse_label(token: &str, line: usize) -> Result<(i64, bool)> {
    if let Ok(l) = token.parse::<i64>() {
        return Ok((l, false));
    }
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() && v.trunc().abs() < i64::MAX as f64 => Ok((v.trunc() as i64, true)),
        _ => Err(Error::Field {
            line,
            column: 1,
            token: token.to_string(),
            what: "an integer label",
        }),
    }
}

pub fn parse_dataset_str(text: &str, opts: &ParseOptions) -> Result<ParsedDataset> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    let delimiter = match rows.peek() {
        None => return Err(Error::EmptyDataset),
        Some((_, first)) if first.contains(',') => Delimiter::Comma,
        Some(_) => Delimiter::Whitespace,
    };

    let mut expected = None;
    let mut truncated_labels = 0;
    let mut parsed = Vec::new();
    for (line, row) in rows {
        let fields: Vec<&str> = match delimiter {
            Delimiter::Comma => row.split(',').map(str::trim).collect(),
            Delimiter::Whitespace => row.split_whitespace().collect(),
        };
        let (label, truncated) = parse_label(fields[0], line)?;
        if truncated {
            log::warn!("line {line}: label {:?} truncated to {label}", fields[0]);
            truncated_labels += 1;
        }
        let values = fields[1..]
            .iter()
            .enumerate()
            .map(|(i, tok)| match tok.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok(v),
                _ => Err(Error::Field {
                    line,
                    column: i + 2,
                    token: tok.to_string(),
                    what: "a finite real",
                }),
            })
            .collect::<Result<Vec<f64>>>()?;
        let expected = *expected.get_or_insert(values.len());
        if values.len() != expected {
            return Err(Error::RaggedRow {
                line,
                expected,
                found: values.len(),
            });
        }
        parsed.push((line, label, values));
    }

    let length = expected.unwrap_or(0);
    let truncated_points = match opts.truncate_to_multiple_of {
        Some(m) if m > 0 && m <= length => length % m,
        _ => 0,
    };
    let mut items = Vec::with_capacity(parsed.len());
    for (line, label, mut values) in parsed {
        values.truncate(length - truncated_points);
        let series = TimeSeries::new(values).map_err(|e| Error::Format {
            what: "dataset",
            message: format!("line {line}: {e}"),
        })?;
        items.push(LabeledSeries { label, series });
    }
    Ok(ParsedDataset {
        dataset: LabeledDataset::new(items)?,
        delimiter,
        truncated_points,
        truncated_labels,
    })
}
