//! A standard global-best particle swarm minimizer over a box.
//!
//! Velocities start at zero and positions uniformly in the box. Within an
//! iteration particles are visited in index order: each one updates its
//! velocity, moves, is evaluated, and updates its personal best and the
//! global best before the next particle moves. Only strict improvements
//! replace a best, so ties keep the incumbent.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Name of the random generator, for run reports.
pub const GENERATOR: &str = "ChaCha8Rng/seed_from_u64 (rand_chacha 0.9)";

pub const DEFAULT_SWARM_SIZE: usize = 16;
pub const DEFAULT_ITERATIONS: usize = 20;
pub const DEFAULT_LOCAL_ACCELERATION: f64 = 2.0;
pub const DEFAULT_GLOBAL_ACCELERATION: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmConfig {
    pub swarm_size: usize,
    pub iterations: usize,
    pub local_acceleration: f64,
    pub global_acceleration: f64,
    pub dimension: usize,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub seed: u64,
    /// Start particle 0 at the all-`upper_bound` corner.
    pub seed_corner: bool,
    /// Stop after the first iteration whose global best is `<=` this.
    pub target_fitness: Option<f64>,
}

impl SwarmConfig {
    /// Default hyperparameters (16 particles, 20 iterations, both
    /// accelerations 2) on the unit box, seed 0, no corner seed.
    pub fn new(dimension: usize) -> Self {
        Self {
            swarm_size: DEFAULT_SWARM_SIZE,
            iterations: DEFAULT_ITERATIONS,
            local_acceleration: DEFAULT_LOCAL_ACCELERATION,
            global_acceleration: DEFAULT_GLOBAL_ACCELERATION,
            dimension,
            lower_bound: 0.0,
            upper_bound: 1.0,
            seed: 0,
            seed_corner: false,
            target_fitness: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.swarm_size == 0 {
            return Err(Error::InvalidConfig("swarm size must be at least 1"));
        }
        if self.iterations == 0 {
            return Err(Error::InvalidConfig("iteration count must be at least 1"));
        }
        if self.dimension == 0 {
            return Err(Error::InvalidConfig("dimension must be at least 1"));
        }
        if !(self.lower_bound.is_finite() && self.upper_bound.is_finite())
            || self.lower_bound >= self.upper_bound
        {
            return Err(Error::InvalidConfig(
                "bounds must be finite with lower < upper",
            ));
        }
        if !(self.local_acceleration.is_finite() && self.global_acceleration.is_finite()) {
            return Err(Error::InvalidConfig("accelerations must be finite"));
        }
        if self.target_fitness.is_some_and(f64::is_nan) {
            return Err(Error::InvalidConfig("target fitness is NaN"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Particle {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmResult {
    pub global_best_position: Vec<f64>,
    pub global_best_fitness: f64,
    /// Global best after each completed iteration.
    pub fitness_history: Vec<f64>,
    pub evaluations: usize,
}

/// Linearly decaying inertia, `(total - itr) / total`.
pub fn inertia_at(itr: usize, total: usize) -> f64 {
    (total as f64 - itr as f64) / total as f64
}

/// `w V + r_g a_g (G - X) + r_l a_l (L - X)`.
pub fn step_velocity(
    p: &Particle,
    global_best: &[f64],
    inertia: f64,
    cfg: &SwarmConfig,
    r_global: f64,
    r_local: f64,
) -> Result<Vec<f64>> {
    let n = p.position.len();
    for (what, len) in [
        ("velocity", p.velocity.len()),
        ("personal best", p.best_position.len()),
        ("global best", global_best.len()),
    ] {
        if len != n {
            return Err(Error::DimensionMismatch {
                what,
                expected: n,
                found: len,
            });
        }
    }
    let phi_g = r_global * cfg.global_acceleration;
    let phi_l = r_local * cfg.local_acceleration;
    Ok((0..n)
        .map(|i| {
            let x = p.position[i];
            inertia * p.velocity[i]
                + phi_g * (global_best[i] - x)
                + phi_l * (p.best_position[i] - x)
        })
        .collect())
}

/// Moves `position` by `velocity` and clamps to the box. Components that hit
/// a bound have their velocity zeroed.
pub fn step_position(position: &[f64], velocity: &mut [f64], cfg: &SwarmConfig) -> Vec<f64> {
    position
        .iter()
        .zip(velocity.iter_mut())
        .map(|(&x, v)| {
            let moved = x + *v;
            if moved < cfg.lower_bound {
                *v = 0.0;
                cfg.lower_bound
            } else if moved > cfg.upper_bound {
                *v = 0.0;
                cfg.upper_bound
            } else {
                moved
            }
        })
        .collect()
}

fn evaluate<F: FnMut(&[f64]) -> f64>(fitness: &mut F, position: &[f64]) -> Result<f64> {
    let f = fitness(position);
    if f.is_nan() {
        return Err(Error::OptimizationFailure {
            position: position.to_vec(),
        });
    }
    Ok(f)
}

/// Minimizes `fitness` over `[lower_bound, upper_bound]^dimension`.
///
/// Deterministic for a given configuration: the generator is seeded from
/// `cfg.seed`, positions draw `dimension` uniforms per particle in particle
/// order, and each iteration draws `r_local` then `r_global` once per
/// particle.
pub fn optimize<F>(mut fitness: F, cfg: &SwarmConfig) -> Result<SwarmResult>
where
    F: FnMut(&[f64]) -> f64,
{
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let span = cfg.upper_bound - cfg.lower_bound;

    let mut particles = Vec::with_capacity(cfg.swarm_size);
    for i in 0..cfg.swarm_size {
        let position: Vec<f64> = if cfg.seed_corner && i == 0 {
            alloc::vec![cfg.upper_bound; cfg.dimension]
        } else {
            (0..cfg.dimension)
                .map(|_| cfg.lower_bound + span * rng.random::<f64>())
                .collect()
        };
        let f = evaluate(&mut fitness, &position)?;
        particles.push(Particle {
            velocity: alloc::vec![0.0; cfg.dimension],
            best_position: position.clone(),
            position,
            best_fitness: f,
        });
    }
    let mut evaluations = cfg.swarm_size;

    let mut best_index = 0;
    for (i, p) in particles.iter().enumerate() {
        if p.best_fitness < particles[best_index].best_fitness {
            best_index = i;
        }
    }
    let mut global_position = particles[best_index].best_position.clone();
    let mut global_fitness = particles[best_index].best_fitness;

    let mut history = Vec::with_capacity(cfg.iterations);
    for itr in 1..=cfg.iterations {
        let inertia = inertia_at(itr - 1, cfg.iterations);
        for p in particles.iter_mut() {
            let r_local = rng.random::<f64>();
            let r_global = rng.random::<f64>();
            let mut velocity = step_velocity(p, &global_position, inertia, cfg, r_global, r_local)?;
            p.position = step_position(&p.position, &mut velocity, cfg);
            p.velocity = velocity;
            let f = evaluate(&mut fitness, &p.position)?;
            evaluations += 1;
            if f < p.best_fitness {
                p.best_fitness = f;
                p.best_position.clone_from(&p.position);
                if f < global_fitness {
                    global_fitness = f;
                    global_position.clone_from(&p.position);
                }
            }
        }
        history.push(global_fitness);
        if cfg.target_fitness.is_some_and(|t| global_fitness <= t) {
            break;
        }
    }

    Ok(SwarmResult {
        global_best_position: global_position,
        global_best_fitness: global_fitness,
        fitness_history: history,
        evaluations,
    })
}
