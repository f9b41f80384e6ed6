//! Symbolic aggregate approximation (SAX) with a learned, per-segment
//! weighted MINDIST.
//!
//! The pipeline is the classic one: z-normalize, reduce with PAA, discretize
//! against equiprobable Gaussian breakpoints, then compare words through a
//! lookup table. On top of that, [`pso`] provides a plain particle swarm
//! minimizer and [`classify`] uses it to learn segment weights that minimize
//! the 1-NN leave-one-out error of the weighted distance.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod normal;
pub mod pso;
pub mod sax;
pub mod series;

pub use classify::{
    evaluate, loo_error, symbolize, train_test_error, train_weights, Evaluation, LabeledDataset,
    LabeledSeries, Protocol, SymbolicDataset, SymbolicDistance, TrainedModel,
};
pub use error::{Error, Result};
pub use pso::{optimize, SwarmConfig, SwarmResult};
pub use sax::{
    build_lookup_table, compute_breakpoints, discretize, mindist, wmd, Breakpoints,
    DistLookupTable, SaxWord, WeightVector,
};
pub use series::{
    euclidean, paa, paa_distance, weighted_euclidean, znormalize, NormalizedSeries, PaaVector,
    TimeSeries,
};
