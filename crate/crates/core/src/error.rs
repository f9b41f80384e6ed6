use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A series with no values.
    EmptySeries,
    /// NaN or infinity at `index`.
    NonFinite {
        index: usize,
        value: f64,
    },
    /// `length` is not a multiple of `segments`.
    NonDivisibleLength {
        length: usize,
        segments: usize,
    },
    /// Segment count of zero or larger than the series.
    InvalidSegmentCount {
        length: usize,
        segments: usize,
    },
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    NegativeWeight {
        index: usize,
        value: f64,
    },
    WeightOutOfRange {
        index: usize,
        value: f64,
    },
    InvalidAlphabet(usize),
    SymbolOutOfRange {
        index: usize,
        symbol: u8,
        alphabet: usize,
    },
    InvalidConfig(&'static str),
    /// The fitness function returned NaN at `position`.
    OptimizationFailure {
        position: Vec<f64>,
    },
    EmptyDataset,
    TooFewItems {
        found: usize,
        required: usize,
    },
    TooFewClasses,
    /// Series `index` of a dataset has a different length than the first one.
    RaggedDataset {
        index: usize,
        expected: usize,
        found: usize,
    },
    /// Two symbolic datasets, a model and a dataset, or a table and a word
    /// disagree on representation parameters.
    ParameterMismatch(&'static str),
    MissingTrainingSet,
    /// Failure while processing dataset item `index`.
    Item {
        index: usize,
        source: Box<Error>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySeries => write!(f, "time series must contain at least one value"),
            Error::NonFinite { index, value } => {
                write!(
                    f,
                    "invalid input: value {value} at position {index} is not finite"
                )
            }
            Error::NonDivisibleLength { length, segments } => write!(
                f,
                "series length n={length} is not divisible by segment count N={segments}"
            ),
            Error::InvalidSegmentCount { length, segments } => write!(
                f,
                "segment count N={segments} must be between 1 and the series length n={length}"
            ),
            Error::DimensionMismatch {
                what,
                expected,
                found,
            } => write!(f, "{what}: expected length {expected}, found {found}"),
            Error::NegativeWeight { index, value } => {
                write!(f, "weight {index} is negative ({value})")
            }
            Error::WeightOutOfRange { index, value } => {
                write!(f, "weight {index} = {value} is outside [0, 1]")
            }
            Error::InvalidAlphabet(a) => {
                write!(f, "alphabet size {a} is outside the supported range 2..=26")
            }
            Error::SymbolOutOfRange {
                index,
                symbol,
                alphabet,
            } => write!(
                f,
                "symbol {symbol} at position {index} is not valid for alphabet size {alphabet}"
            ),
            Error::InvalidConfig(msg) => write!(f, "invalid swarm configuration: {msg}"),
            Error::OptimizationFailure { position } => {
                write!(f, "fitness returned NaN at position {position:?}")
            }
            Error::EmptyDataset => write!(f, "dataset is empty"),
            Error::TooFewItems { found, required } => {
                write!(f, "need at least {required} items, found {found}")
            }
            Error::TooFewClasses => write!(f, "training needs at least 2 distinct labels"),
            Error::RaggedDataset {
                index,
                expected,
                found,
            } => write!(
                f,
                "series {index} has length {found}, expected {expected} like the first series"
            ),
            Error::ParameterMismatch(what) => write!(f, "representation mismatch: {what}"),
            Error::MissingTrainingSet => {
                write!(f, "train/test evaluation requires a training set")
            }
            Error::Item { index, source } => write!(f, "item {index}: {source}"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::Item { source, .. } => Some(source.as_ref()),
            _ => None,
        }
    }
}
