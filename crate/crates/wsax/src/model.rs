//! Trained model files (TOML, fixed field order).

use std::path::Path;

use serde::{Deserialize, Serialize};
use wsax_core::pso::{SwarmConfig, GENERATOR};
use wsax_core::sax::{MAX_ALPHABET, MIN_ALPHABET};
use wsax_core::{TrainedModel, WeightVector};

use crate::error::{Error, Result};
use crate::fsutil;

pub const MODEL_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsoSection {
    pub swarm_size: usize,
    pub iterations: usize,
    pub local_acceleration: f64,
    pub global_acceleration: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub seed_corner: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_fitness: Option<f64>,
    pub evaluations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub format_version: u32,
    pub alphabet_size: usize,
    pub segment_count: usize,
    pub original_length: usize,
    pub rng_seed: u64,
    pub generator: String,
    pub train_error: f64,
    pub weights: Vec<f64>,
    pub pso: PsoSection,
}

impl ModelFile {
    pub fn from_model(m: &TrainedModel) -> Self {
        let c = &m.config;
        Self {
            format_version: MODEL_FORMAT_VERSION,
            alphabet_size: m.alphabet_size,
            segment_count: m.segment_count,
            original_length: m.original_length,
            rng_seed: c.seed,
            generator: GENERATOR.to_string(),
            train_error: m.train_error,
            weights: m.weights.as_slice().to_vec(),
            pso: PsoSection {
                swarm_size: c.swarm_size,
                iterations: c.iterations,
                local_acceleration: c.local_acceleration,
                global_acceleration: c.global_acceleration,
                lower_bound: c.lower_bound,
                upper_bound: c.upper_bound,
                seed_corner: c.seed_corner,
                target_fitness: c.target_fitness,
                evaluations: m.evaluations,
            },
        }
    }

    pub fn to_model(&self) -> Result<TrainedModel> {
        let bad = |message: String| Error::Format {
            what: "model",
            message,
        };
        if self.format_version != MODEL_FORMAT_VERSION {
            return Err(bad(format!(
                "unsupported format_version {}",
                self.format_version
            )));
        }
        if !(MIN_ALPHABET..=MAX_ALPHABET).contains(&self.alphabet_size) {
            return Err(wsax_core::Error::InvalidAlphabet(self.alphabet_size).into());
        }
        if self.weights.len() != self.segment_count {
            return Err(bad(format!(
                "{} weights for {} segments",
                self.weights.len(),
                self.segment_count
            )));
        }
        if self.segment_count == 0 || !self.original_length.is_multiple_of(self.segment_count) {
            return Err(bad(format!(
                "original_length {} is not a multiple of segment_count {}",
                self.original_length, self.segment_count
            )));
        }
        if !(0.0..=1.0).contains(&self.train_error) {
            return Err(bad(format!(
                "train_error {} outside [0, 1]",
                self.train_error
            )));
        }
        let p = &self.pso;
        Ok(TrainedModel {
            weights: WeightVector::new(self.weights.clone())?,
            alphabet_size: self.alphabet_size,
            segment_count: self.segment_count,
            original_length: self.original_length,
            train_error: self.train_error,
            config: SwarmConfig {
                swarm_size: p.swarm_size,
                iterations: p.iterations,
                local_acceleration: p.local_acceleration,
                global_acceleration: p.global_acceleration,
                dimension: self.segment_count,
                lower_bound: p.lower_bound,
                upper_bound: p.upper_bound,
                seed: self.rng_seed,
                seed_corner: p.seed_corner,
                target_fitness: p.target_fitness,
            },
            evaluations: p.evaluations,
        })
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Serialize {
            what: "model",
            message: e.to_string(),
        })
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Format {
            what: "model",
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&fsutil::read_to_string(path)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        fsutil::write_atomic(path, &self.to_toml()?)
    }
}
