//! File formats and the `wsax` command line on top of [`wsax_core`].

pub mod cli;
pub mod dataset;
pub mod error;
pub mod fsutil;
pub mod model;
pub mod report;
pub mod symbolic;
pub mod weights;

pub use error::{Error, Result};
