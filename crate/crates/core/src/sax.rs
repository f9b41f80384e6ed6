//! Gaussian breakpoints, SAX words, the MINDIST lookup table and the two
//! symbolic distances built on it.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::normal;
use crate::series::{check_segments, PaaVector};

pub const MIN_ALPHABET: usize = 2;
pub const MAX_ALPHABET: usize = 26;

/// Cut points splitting the standard normal into `a` equiprobable regions.
#[derive(Debug, Clone, PartialEq)]
pub struct Breakpoints {
    cuts: Vec<f64>,
}

impl Breakpoints {
    pub fn alphabet_size(&self) -> usize {
        self.cuts.len() + 1
    }

    pub fn cuts(&self) -> &[f64] {
        &self.cuts
    }

    /// Symbol index for a PAA value: the number of cuts that are `<= value`.
    /// A value sitting exactly on a cut maps to the higher symbol.
    pub fn symbol_for(&self, value: f64) -> u8 {
        self.cuts.partition_point(|&c| c <= value) as u8
    }
}

fn check_alphabet(a: usize) -> Result<()> {
    if !(MIN_ALPHABET..=MAX_ALPHABET).contains(&a) {
        return Err(Error::InvalidAlphabet(a));
    }
    Ok(())
}

/// `cuts[i] = quantile((i + 1) / a)`. The upper half is mirrored from the
/// lower half so the cuts are exactly antisymmetric.
pub fn compute_breakpoints(a: usize) -> Result<Breakpoints> {
    check_alphabet(a)?;
    let count = a - 1;
    let mut cuts = alloc::vec![0.0; count];
    for i in 0..count / 2 {
        let q = normal::quantile((i + 1) as f64 / a as f64);
        cuts[i] = q;
        cuts[count - 1 - i] = -q;
    }
    Ok(Breakpoints { cuts })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SaxWord {
    symbols: Vec<u8>,
    alphabet_size: usize,
    original_length: usize,
}

impl SaxWord {
    pub fn new(symbols: Vec<u8>, alphabet_size: usize, original_length: usize) -> Result<Self> {
        check_alphabet(alphabet_size)?;
        check_segments(original_length, symbols.len())?;
        if let Some((index, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s as usize >= alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                index,
                symbol,
                alphabet: alphabet_size,
            });
        }
        Ok(Self {
            symbols,
            alphabet_size,
            original_length,
        })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn segment_count(&self) -> usize {
        self.symbols.len()
    }

    pub fn original_length(&self) -> usize {
        self.original_length
    }

    /// `sqrt(n / N)`, the factor shared by MINDIST and WMD.
    pub(crate) fn scale(&self) -> f64 {
        libm::sqrt(self.original_length as f64 / self.symbols.len() as f64)
    }
}

pub fn discretize(p: &PaaVector, bp: &Breakpoints) -> SaxWord {
    SaxWord {
        symbols: p.means().iter().map(|&m| bp.symbol_for(m)).collect(),
        alphabet_size: bp.alphabet_size(),
        original_length: p.original_length(),
    }
}

/// Pairwise symbol distances. Adjacent and equal symbols are at distance
/// zero; otherwise the distance is the gap between the cuts that separate
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct DistLookupTable {
    alphabet_size: usize,
    cells: Vec<f64>,
    squared: Vec<f64>,
}

impl DistLookupTable {
    pub fn new(bp: &Breakpoints) -> Self {
        let a = bp.alphabet_size();
        let cuts = bp.cuts();
        let mut cells = alloc::vec![0.0; a * a];
        for r in 0..a {
            for c in 0..a {
                if r.abs_diff(c) > 1 {
                    cells[r * a + c] = cuts[r.max(c) - 1] - cuts[r.min(c)];
                }
            }
        }
        let squared = cells.iter().map(|d| d * d).collect();
        Self {
            alphabet_size: a,
            cells,
            squared,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn cell(&self, r: u8, c: u8) -> f64 {
        self.cells[r as usize * self.alphabet_size + c as usize]
    }

    pub(crate) fn squared(&self, r: u8, c: u8) -> f64 {
        self.squared[r as usize * self.alphabet_size + c as usize]
    }

    /// Row-major view of the full `a x a` matrix.
    pub fn cells(&self) -> &[f64] {
        &self.cells
    }
}

pub fn build_lookup_table(bp: &Breakpoints) -> DistLookupTable {
    DistLookupTable::new(bp)
}

/// Per-segment weights in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(0.0..=1.0).contains(*w))
        {
            return Err(Error::WeightOutOfRange { index, value });
        }
        Ok(Self { weights })
    }

    pub fn ones(len: usize) -> Self {
        Self {
            weights: alloc::vec![1.0; len],
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.weights
    }
}

pub(crate) fn check_compatible(x: &SaxWord, y: &SaxWord, t: &DistLookupTable) -> Result<()> {
    if x.alphabet_size != y.alphabet_size || x.alphabet_size != t.alphabet_size {
        return Err(Error::ParameterMismatch("alphabet size"));
    }
    if x.symbols.len() != y.symbols.len() {
        return Err(Error::DimensionMismatch {
            what: "word length",
            expected: x.symbols.len(),
            found: y.symbols.len(),
        });
    }
    if x.original_length != y.original_length {
        return Err(Error::ParameterMismatch("original series length"));
    }
    Ok(())
}

// Both symbolic distances go through these so that unit weights reproduce
// MINDIST bit for bit.
#[inline]
pub(crate) fn mindist_raw(x: &[u8], y: &[u8], t: &DistLookupTable, scale: f64) -> f64 {
    let sum = x.iter().zip(y).map(|(&a, &b)| t.squared(a, b)).sum::<f64>();
    scale * libm::sqrt(sum)
}

#[inline]
pub(crate) fn wmd_raw(x: &[u8], y: &[u8], t: &DistLookupTable, w: &[f64], scale: f64) -> f64 {
    let sum = x
        .iter()
        .zip(y)
        .zip(w)
        .map(|((&a, &b), &w)| w * t.squared(a, b))
        .sum::<f64>();
    scale * libm::sqrt(sum)
}

/// `sqrt(n/N) * sqrt(sum dist(x_i, y_i)^2)`.
pub fn mindist(x: &SaxWord, y: &SaxWord, t: &DistLookupTable) -> Result<f64> {
    check_compatible(x, y, t)?;
    Ok(mindist_raw(&x.symbols, &y.symbols, t, x.scale()))
}

/// Weighted MINDIST, `sqrt(n/N) * sqrt(sum w_i dist(x_i, y_i)^2)`. Never
/// exceeds [`mindist`] and equals it for unit weights.
pub fn wmd(x: &SaxWord, y: &SaxWord, t: &DistLookupTable, w: &WeightVector) -> Result<f64> {
    check_compatible(x, y, t)?;
    if w.len() != x.symbols.len() {
        return Err(Error::DimensionMismatch {
            what: "weight vector",
            expected: x.symbols.len(),
            found: w.len(),
        });
    }
    Ok(wmd_raw(&x.symbols, &y.symbols, t, &w.weights, x.scale()))
}
