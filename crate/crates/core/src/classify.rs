//! 1-NN classification error under MINDIST or WMD, and weight training.
//!
//! Nearest-neighbor ties go to the smallest index. Errors are always an
//! integer mismatch count divided by the number of classified items.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::pso::{self, SwarmConfig};
use crate::sax::{self, compute_breakpoints, discretize, DistLookupTable, SaxWord, WeightVector};
use crate::series::{check_segments, paa, znormalize, TimeSeries};

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSeries {
    pub label: i64,
    pub series: TimeSeries,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    items: Vec<LabeledSeries>,
    length: usize,
}

impl LabeledDataset {
    pub fn new(items: Vec<LabeledSeries>) -> Result<Self> {
        let length = items.first().ok_or(Error::EmptyDataset)?.series.len();
        if let Some((index, item)) = items
            .iter()
            .enumerate()
            .find(|(_, it)| it.series.len() != length)
        {
            return Err(Error::RaggedDataset {
                index,
                expected: length,
                found: item.series.len(),
            });
        }
        Ok(Self { items, length })
    }

    pub fn items(&self) -> &[LabeledSeries] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Common length of every series.
    pub fn series_length(&self) -> usize {
        self.length
    }
}

/// SAX words sharing one alphabet, word length and source length, plus the
/// lookup table for that alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicDataset {
    items: Vec<(i64, SaxWord)>,
    table: DistLookupTable,
}

impl SymbolicDataset {
    pub fn new(items: Vec<(i64, SaxWord)>, table: DistLookupTable) -> Result<Self> {
        let first = &items.first().ok_or(Error::EmptyDataset)?.1;
        if first.alphabet_size() != table.alphabet_size() {
            return Err(Error::ParameterMismatch("lookup table alphabet size"));
        }
        for (index, (_, w)) in items.iter().enumerate() {
            if w.alphabet_size() != first.alphabet_size()
                || w.segment_count() != first.segment_count()
                || w.original_length() != first.original_length()
            {
                return Err(Error::Item {
                    index,
                    source: Box::new(Error::ParameterMismatch("word parameters differ")),
                });
            }
        }
        Ok(Self { items, table })
    }

    pub fn items(&self) -> &[(i64, SaxWord)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn table(&self) -> &DistLookupTable {
        &self.table
    }

    pub fn alphabet_size(&self) -> usize {
        self.table.alphabet_size()
    }

    pub fn segment_count(&self) -> usize {
        self.items[0].1.segment_count()
    }

    pub fn original_length(&self) -> usize {
        self.items[0].1.original_length()
    }

    fn same_representation(&self, other: &SymbolicDataset) -> bool {
        self.alphabet_size() == other.alphabet_size()
            && self.segment_count() == other.segment_count()
            && self.original_length() == other.original_length()
    }

    fn scale(&self) -> f64 {
        self.items[0].1.scale()
    }
}

/// z-normalize, PAA-reduce and discretize every series.
pub fn symbolize(ds: &LabeledDataset, alphabet: usize, segments: usize) -> Result<SymbolicDataset> {
    let bp = compute_breakpoints(alphabet)?;
    check_segments(ds.series_length(), segments)?;
    let items = ds
        .items()
        .iter()
        .enumerate()
        .map(|(index, it)| {
            let reduced = paa(&znormalize(&it.series), segments).map_err(|e| Error::Item {
                index,
                source: Box::new(e),
            })?;
            Ok((it.label, discretize(&reduced, &bp)))
        })
        .collect::<Result<Vec<_>>>()?;
    SymbolicDataset::new(items, DistLookupTable::new(&bp))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymbolicDistance<'a> {
    Mindist,
    Wmd(&'a WeightVector),
}

impl SymbolicDistance<'_> {
    pub fn distance(&self, x: &SaxWord, y: &SaxWord, t: &DistLookupTable) -> Result<f64> {
        match self {
            SymbolicDistance::Mindist => sax::mindist(x, y, t),
            SymbolicDistance::Wmd(w) => sax::wmd(x, y, t, w),
        }
    }

    fn weights(&self, segments: usize) -> Result<Option<&[f64]>> {
        match self {
            SymbolicDistance::Mindist => Ok(None),
            SymbolicDistance::Wmd(w) if w.len() == segments => Ok(Some(w.as_slice())),
            SymbolicDistance::Wmd(w) => Err(Error::DimensionMismatch {
                what: "weight vector",
                expected: segments,
                found: w.len(),
            }),
        }
    }
}

#[inline]
fn pair_distance(x: &[u8], y: &[u8], t: &DistLookupTable, w: Option<&[f64]>, scale: f64) -> f64 {
    match w {
        None => sax::mindist_raw(x, y, t, scale),
        Some(w) => sax::wmd_raw(x, y, t, w, scale),
    }
}

/// Label of the nearest candidate, smallest index on ties. `skip` excludes
/// one candidate (the query itself under leave-one-out).
fn nearest_label(
    query: &[u8],
    candidates: &[(i64, SaxWord)],
    skip: Option<usize>,
    t: &DistLookupTable,
    w: Option<&[f64]>,
    scale: f64,
) -> i64 {
    let mut best = f64::INFINITY;
    let mut label = None;
    for (j, (l, word)) in candidates.iter().enumerate() {
        if Some(j) == skip {
            continue;
        }
        let d = pair_distance(query, word.symbols(), t, w, scale);
        if label.is_none() || d < best {
            best = d;
            label = Some(*l);
        }
    }
    label.expect("at least one candidate")
}

fn loo_mismatches(sd: &SymbolicDataset, w: Option<&[f64]>) -> usize {
    let t = sd.table();
    let scale = sd.scale();
    sd.items
        .iter()
        .enumerate()
        .filter(|(i, (label, word))| {
            nearest_label(word.symbols(), &sd.items, Some(*i), t, w, scale) != *label
        })
        .count()
}

/// Leave-one-out 1-NN error rate.
pub fn loo_error(sd: &SymbolicDataset, dist: &SymbolicDistance<'_>) -> Result<f64> {
    if sd.len() < 2 {
        return Err(Error::TooFewItems {
            found: sd.len(),
            required: 2,
        });
    }
    let w = dist.weights(sd.segment_count())?;
    Ok(loo_mismatches(sd, w) as f64 / sd.len() as f64)
}

/// Error rate of classifying each test word by its nearest training word.
pub fn train_test_error(
    train: &SymbolicDataset,
    test: &SymbolicDataset,
    dist: &SymbolicDistance<'_>,
) -> Result<f64> {
    if !train.same_representation(test) {
        return Err(Error::ParameterMismatch(
            "training and test sets use different representations",
        ));
    }
    let w = dist.weights(train.segment_count())?;
    let t = train.table();
    let scale = train.scale();
    let mismatches = test
        .items
        .iter()
        .filter(|(label, word)| {
            nearest_label(word.symbols(), &train.items, None, t, w, scale) != *label
        })
        .count();
    Ok(mismatches as f64 / test.len() as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrainedModel {
    pub weights: WeightVector,
    pub alphabet_size: usize,
    pub segment_count: usize,
    pub original_length: usize,
    /// Leave-one-out WMD error on the training set with `weights`.
    pub train_error: f64,
    pub config: SwarmConfig,
    pub evaluations: usize,
}

/// Learns WMD weights minimizing the leave-one-out error on `train`.
///
/// With `cfg.seed_corner` the all-ones vector (plain MINDIST) is part of the
/// initial swarm, so the returned error never exceeds the MINDIST error.
pub fn train_weights(train: &SymbolicDataset, cfg: &SwarmConfig) -> Result<TrainedModel> {
    if cfg.dimension != train.segment_count() {
        return Err(Error::InvalidConfig(
            "swarm dimension must equal the segment count",
        ));
    }
    if cfg.lower_bound != 0.0 || cfg.upper_bound != 1.0 {
        return Err(Error::InvalidConfig("weight training uses the unit box"));
    }
    if train.len() < 2 {
        return Err(Error::TooFewItems {
            found: train.len(),
            required: 2,
        });
    }
    let first = train.items[0].0;
    if train.items.iter().all(|(l, _)| *l == first) {
        return Err(Error::TooFewClasses);
    }
    let n = train.len() as f64;
    let result = pso::optimize(|w| loo_mismatches(train, Some(w)) as f64 / n, cfg)?;
    Ok(TrainedModel {
        weights: WeightVector::new(result.global_best_position)?,
        alphabet_size: train.alphabet_size(),
        segment_count: train.segment_count(),
        original_length: train.original_length(),
        train_error: result.global_best_fitness,
        config: cfg.clone(),
        evaluations: result.evaluations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Protocol {
    /// Leave-one-out within the evaluated set.
    LeaveOneOut,
    /// Classify the evaluated set against a separate training set.
    TrainTest,
}

impl Protocol {
    pub fn as_str(&self) -> &'static str {
        match self {
            Protocol::LeaveOneOut => "loo",
            Protocol::TrainTest => "traintest",
        }
    }
}

impl FromStr for Protocol {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "loo" => Ok(Protocol::LeaveOneOut),
            "traintest" => Ok(Protocol::TrainTest),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub error_wmd: f64,
    pub error_mindist: f64,
}

pub fn evaluate(
    model: &TrainedModel,
    sd: &SymbolicDataset,
    mode: Protocol,
    train: Option<&SymbolicDataset>,
) -> Result<Evaluation> {
    if model.alphabet_size != sd.alphabet_size()
        || model.segment_count != sd.segment_count()
        || model.original_length != sd.original_length()
    {
        return Err(Error::ParameterMismatch(
            "model and dataset use different representations",
        ));
    }
    let weighted = SymbolicDistance::Wmd(&model.weights);
    let plain = SymbolicDistance::Mindist;
    match mode {
        Protocol::LeaveOneOut => Ok(Evaluation {
            error_wmd: loo_error(sd, &weighted)?,
            error_mindist: loo_error(sd, &plain)?,
        }),
        Protocol::TrainTest => {
            let train = train.ok_or(Error::MissingTrainingSet)?;
            Ok(Evaluation {
                error_wmd: train_test_error(train, sd, &weighted)?,
                error_mindist: train_test_error(train, sd, &plain)?,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn table(a: usize) -> DistLookupTable {
        DistLookupTable::new(&compute_breakpoints(a).unwrap())
    }

    fn sd(words: &[(i64, &[u8])], a: usize, n: usize) -> SymbolicDataset {
        let items = words
            .iter()
            .map(|(l, w)| (*l, SaxWord::new(w.to_vec(), a, n).unwrap()))
            .collect();
        SymbolicDataset::new(items, table(a)).unwrap()
    }

    fn series(v: &[f64]) -> TimeSeries {
        TimeSeries::new(v.to_vec()).unwrap()
    }

    #[test]
    fn symbolize_examples() {
        let s = series(&[1.0, 3.0, -2.0, 0.5, 8.0, 1.0, 1.0, 0.0]);
        let ds = LabeledDataset::new(vec![
            LabeledSeries {
                label: 1,
                series: s.clone(),
            },
            LabeledSeries {
                label: 2,
                series: s,
            },
        ])
        .unwrap();
        let out = symbolize(&ds, 5, 4).unwrap();
        assert_eq!(out.items()[0].1, out.items()[1].1);
        assert_eq!(out.segment_count(), 4);
        assert_eq!(out.original_length(), 8);

        let wave: Vec<f64> = (0..128).map(|i| libm::sin(i as f64 / 9.0)).collect();
        let ds = LabeledDataset::new(vec![LabeledSeries {
            label: 0,
            series: series(&wave),
        }])
        .unwrap();
        let out = symbolize(&ds, 3, 32).unwrap();
        assert_eq!(out.items()[0].1.symbols().len(), 32);
        assert!(out.items()[0].1.symbols().iter().all(|&s| s < 3));

        let ds = LabeledDataset::new(vec![LabeledSeries {
            label: 0,
            series: series(&[0.0; 100]),
        }])
        .unwrap();
        assert_eq!(
            symbolize(&ds, 3, 32).unwrap_err(),
            Error::NonDivisibleLength {
                length: 100,
                segments: 32
            }
        );
    }

    #[test]
    fn ragged_and_empty_datasets() {
        assert_eq!(LabeledDataset::new(vec![]), Err(Error::EmptyDataset));
        let err = LabeledDataset::new(vec![
            LabeledSeries {
                label: 0,
                series: series(&[1.0, 2.0]),
            },
            LabeledSeries {
                label: 0,
                series: series(&[1.0]),
            },
        ])
        .unwrap_err();
        assert!(matches!(err, Error::RaggedDataset { index: 1, .. }));
        let w3 = SaxWord::new(vec![0, 1], 3, 4).unwrap();
        let w4 = SaxWord::new(vec![0, 1], 4, 4).unwrap();
        assert!(SymbolicDataset::new(vec![(0, w3.clone()), (1, w4)], table(3)).is_err());
        assert!(SymbolicDataset::new(vec![(0, w3)], table(4)).is_err());
    }

    #[test]
    fn loo_examples() {
        let same = sd(&[(1, &[0, 1, 2]), (1, &[0, 1, 2]), (1, &[0, 1, 2])], 3, 6);
        assert_eq!(loo_error(&same, &SymbolicDistance::Mindist).unwrap(), 0.0);
        let pair = sd(&[(1, &[0, 0, 0]), (2, &[2, 2, 2])], 3, 6);
        assert_eq!(loo_error(&pair, &SymbolicDistance::Mindist).unwrap(), 1.0);
        let single = sd(&[(1, &[0, 0, 0])], 3, 6);
        assert!(matches!(
            loo_error(&single, &SymbolicDistance::Mindist),
            Err(Error::TooFewItems { .. })
        ));
        let w = WeightVector::ones(2);
        assert!(loo_error(&pair, &SymbolicDistance::Wmd(&w)).is_err());
    }

    #[test]
    fn loo_tie_goes_to_smallest_index() {
        // Items 1 and 2 are both at distance 0 from item 0; item 1 wins.
        let ds = sd(&[(1, &[0, 0]), (2, &[0, 0]), (1, &[0, 0])], 3, 4);
        // 0 -> 1 (mismatch), 1 -> 0 (mismatch), 2 -> 0 (match)
        assert_eq!(
            loo_error(&ds, &SymbolicDistance::Mindist).unwrap(),
            2.0 / 3.0
        );
    }

    #[test]
    fn loo_six_items_by_hand() {
        // a=4, two classes, low and high words with one outlier in class 2.
        let ds = sd(
            &[
                (1, &[0, 0, 0, 0]),
                (1, &[0, 1, 0, 0]),
                (1, &[0, 0, 1, 1]),
                (2, &[3, 3, 3, 3]),
                (2, &[3, 2, 3, 3]),
                (2, &[0, 0, 0, 1]),
            ],
            4,
            8,
        );
        // Only the outlier (item 5) is misclassified: its nearest neighbor at
        // distance 0 is item 0 (class 1).
        assert_eq!(
            loo_error(&ds, &SymbolicDistance::Mindist).unwrap(),
            1.0 / 6.0
        );
    }

    #[test]
    fn train_test_examples() {
        let train = sd(&[(1, &[0, 0, 0]), (2, &[2, 2, 2]), (3, &[0, 2, 0])], 3, 6);
        assert_eq!(
            train_test_error(&train, &train.clone(), &SymbolicDistance::Mindist).unwrap(),
            0.0
        );
        let one = sd(&[(1, &[1, 1, 1])], 3, 6);
        let test = sd(
            &[
                (1, &[0, 0, 0]),
                (2, &[2, 2, 2]),
                (1, &[0, 2, 0]),
                (3, &[1, 1, 1]),
            ],
            3,
            6,
        );
        assert_eq!(
            train_test_error(&one, &test, &SymbolicDistance::Mindist).unwrap(),
            0.5
        );
        let other = sd(&[(1, &[0, 0, 0])], 4, 6);
        assert!(train_test_error(&one, &other, &SymbolicDistance::Mindist).is_err());
    }

    #[test]
    fn train_weights_checks_inputs() {
        let ds = sd(&[(1, &[0, 0]), (2, &[2, 2])], 3, 4);
        assert!(train_weights(&ds, &SwarmConfig::new(3)).is_err());
        let mut cfg = SwarmConfig::new(2);
        cfg.upper_bound = 2.0;
        assert!(train_weights(&ds, &cfg).is_err());
        let mono = sd(&[(1, &[0, 0]), (1, &[2, 2])], 3, 4);
        assert_eq!(
            train_weights(&mono, &SwarmConfig::new(2)),
            Err(Error::TooFewClasses)
        );
    }

    #[test]
    fn train_weights_zero_error_dataset() {
        let ds = sd(
            &[
                (1, &[0, 0, 0]),
                (1, &[0, 0, 1]),
                (2, &[2, 2, 2]),
                (2, &[2, 2, 1]),
            ],
            3,
            6,
        );
        assert_eq!(loo_error(&ds, &SymbolicDistance::Mindist).unwrap(), 0.0);
        let mut cfg = SwarmConfig::new(3);
        cfg.seed_corner = true;
        let model = train_weights(&ds, &cfg).unwrap();
        assert_eq!(model.train_error, 0.0);
        assert_eq!(model.weights.len(), 3);
        assert_eq!(model.evaluations, 16 * 21);
    }

    #[test]
    fn evaluate_with_unit_weights_matches_mindist() {
        let ds = sd(
            &[
                (1, &[0, 1, 0]),
                (2, &[2, 1, 2]),
                (1, &[1, 0, 0]),
                (2, &[2, 2, 0]),
                (1, &[2, 0, 0]),
            ],
            3,
            6,
        );
        let model = TrainedModel {
            weights: WeightVector::ones(3),
            alphabet_size: 3,
            segment_count: 3,
            original_length: 6,
            train_error: 0.0,
            config: SwarmConfig::new(3),
            evaluations: 0,
        };
        let e = evaluate(&model, &ds, Protocol::LeaveOneOut, None).unwrap();
        assert_eq!(e.error_wmd, e.error_mindist);
        let e = evaluate(&model, &ds, Protocol::TrainTest, Some(&ds)).unwrap();
        assert_eq!(e.error_wmd, e.error_mindist);
        assert_eq!(
            evaluate(&model, &ds, Protocol::TrainTest, None),
            Err(Error::MissingTrainingSet)
        );
        let other = sd(&[(1, &[0, 1]), (2, &[2, 2])], 3, 6);
        assert!(evaluate(&model, &other, Protocol::LeaveOneOut, None).is_err());
    }

    #[test]
    fn protocol_parsing() {
        assert_eq!("loo".parse(), Ok(Protocol::LeaveOneOut));
        assert_eq!("traintest".parse(), Ok(Protocol::TrainTest));
        assert!("kfold".parse::<Protocol>().is_err());
    }
}
