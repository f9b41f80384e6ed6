//! Raw and normalized series, PAA reduction and the L2-family distances on
//! them.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Population standard deviations below this are treated as a constant
/// series.
pub const DEGENERATE_STD: f64 = 1e-12;

/// A non-empty sequence of finite samples.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySeries);
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

impl AsRef<[f64]> for TimeSeries {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

/// A z-normalized series: zero mean and unit population standard deviation,
/// or all zeros when the source was constant.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedSeries {
    series: TimeSeries,
}

impl NormalizedSeries {
    pub fn values(&self) -> &[f64] {
        self.series.values()
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The normalized values viewed as an ordinary series, e.g. to feed
    /// [`euclidean`].
    pub fn as_series(&self) -> &TimeSeries {
        &self.series
    }
}

pub fn znormalize(ts: &TimeSeries) -> NormalizedSeries {
    let values = ts.values();
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    let std = libm::sqrt(var);
    let normalized = if std < DEGENERATE_STD {
        alloc::vec![0.0; values.len()]
    } else {
        values.iter().map(|v| (v - mean) / std).collect()
    };
    NormalizedSeries {
        series: TimeSeries { values: normalized },
    }
}

/// Segment means of a series whose length is an exact multiple of the
/// segment count.
#[derive(Debug, Clone, PartialEq)]
pub struct PaaVector {
    means: Vec<f64>,
    original_length: usize,
}

impl PaaVector {
    /// Builds a PAA vector from precomputed means.
    pub fn new(means: Vec<f64>, original_length: usize) -> Result<Self> {
        check_segments(original_length, means.len())?;
        if let Some((index, &value)) = means.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(Self {
            means,
            original_length,
        })
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn segment_count(&self) -> usize {
        self.means.len()
    }

    pub fn original_length(&self) -> usize {
        self.original_length
    }
}

pub(crate) fn check_segments(length: usize, segments: usize) -> Result<()> {
    if segments == 0 || segments > length {
        return Err(Error::InvalidSegmentCount { length, segments });
    }
    if !length.is_multiple_of(segments) {
        return Err(Error::NonDivisibleLength { length, segments });
    }
    Ok(())
}

pub fn paa(ns: &NormalizedSeries, segments: usize) -> Result<PaaVector> {
    let values = ns.values();
    check_segments(values.len(), segments)?;
    let width = values.len() / segments;
    let means = values
        .chunks_exact(width)
        .map(|block| block.iter().sum::<f64>() / width as f64)
        .collect();
    Ok(PaaVector {
        means,
        original_length: values.len(),
    })
}

fn check_same_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch {
            what,
            expected,
            found,
        });
    }
    Ok(())
}

pub fn euclidean(a: &TimeSeries, b: &TimeSeries) -> Result<f64> {
    check_same_len("euclidean distance", a.len(), b.len())?;
    let sum = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>();
    Ok(libm::sqrt(sum))
}

/// `sqrt(sum w_i (a_i - b_i)^2)` over the raw samples.
pub fn weighted_euclidean(a: &TimeSeries, b: &TimeSeries, weights: &[f64]) -> Result<f64> {
    check_same_len("weighted euclidean distance", a.len(), b.len())?;
    check_same_len("weight vector", a.len(), weights.len())?;
    for (index, &value) in weights.iter().enumerate() {
        if value.is_nan() || value < 0.0 {
            return Err(Error::NegativeWeight { index, value });
        }
    }
    let sum = a
        .values()
        .iter()
        .zip(b.values())
        .zip(weights)
        .map(|((x, y), w)| w * ((x - y) * (x - y)))
        .sum::<f64>();
    Ok(libm::sqrt(sum))
}

/// PAA distance, `sqrt(n/N) * sqrt(sum (p_i - q_i)^2)`. Lower-bounds the
/// Euclidean distance of the source series.
pub fn paa_distance(p: &PaaVector, q: &PaaVector) -> Result<f64> {
    check_same_len("PAA segment count", p.segment_count(), q.segment_count())?;
    check_same_len(
        "PAA original length",
        p.original_length(),
        q.original_length(),
    )?;
    let scale = libm::sqrt(p.original_length as f64 / p.segment_count() as f64);
    let sum = p
        .means
        .iter()
        .zip(&q.means)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>();
    Ok(scale * libm::sqrt(sum))
}
