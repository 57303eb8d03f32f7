//! Floating-point state evolution `phi_(t+1) = U phi_t`.
//!
//! Used for demonstrations and as a numerical cross-check; periodicity
//! decisions always come from the exact modules.

use std::io::{self, Write};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::exec::{par_map, Execution};
use crate::graph::Graph;
use crate::grover::GroverOperator;

pub const INITIAL_NORM_TOLERANCE: f64 = 1e-12;
pub const NORM_DRIFT_LIMIT: f64 = 1e-9;
pub const RETURN_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WalkError {
    #[error("initial state has norm {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("state has {got} amplitudes, operator acts on {expected} arcs")]
    Dimension { got: usize, expected: usize },
    #[error("norm drifted to {norm} at step {step}")]
    NormDrift { step: usize, norm: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub t: usize,
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// The basis state concentrated on one arc.
    pub fn basis(arcs: usize, arc: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); arcs];
        amplitudes[arc] = Complex64::new(1.0, 0.0);
        StateVector { t: 0, amplitudes }
    }

    /// Normalized complex Gaussian vector.
    pub fn random(arcs: usize, rng: &mut impl Rng) -> Self {
        let mut amplitudes: Vec<Complex64> = (0..arcs)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm = amplitudes
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt();
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        StateVector { t: 0, amplitudes }
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// Finding probability `|alpha_e|^2` per arc.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(Complex64::norm_sqr).collect()
    }

    pub fn max_distance(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `U` converted to `f64` once, stored by column.
#[derive(Debug, Clone)]
pub struct FloatOperator {
    columns: Vec<Vec<(usize, f64)>>,
}

impl FloatOperator {
    pub fn new(op: &GroverOperator) -> Self {
        use num_traits::ToPrimitive;
        let columns = (0..op.graph().arc_count())
            .map(|f| {
                op.column(f)
                    .map(|(e, w)| (e, w.to_f64().expect("finite weight")))
                    .collect()
            })
            .collect();
        FloatOperator { columns }
    }

    pub fn dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn apply(&self, state: &StateVector) -> StateVector {
        let mut out = vec![Complex64::new(0.0, 0.0); self.dimension()];
        for (f, column) in self.columns.iter().enumerate() {
            let a = state.amplitudes[f];
            for &(e, w) in column {
                out[e] += a * w;
            }
        }
        StateVector {
            t: state.t + 1,
            amplitudes: out,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evolution {
    /// `phi_0, ..., phi_steps`.
    pub states: Vec<StateVector>,
}

impl Evolution {
    pub fn probability_rows(&self) -> impl Iterator<Item = (usize, Vec<f64>)> + '_ {
        self.states.iter().map(|s| (s.t, s.probabilities()))
    }

    /// Largest `| ||phi_t|| - 1 |` over the run.
    pub fn max_norm_drift(&self) -> f64 {
        self.states
            .iter()
            .map(|s| (s.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Writes `t,arc_origin,arc_terminus,prob`, one row per step and arc.
    pub fn write_csv(&self, graph: &Graph, mut out: impl Write) -> io::Result<()> {
        writeln!(out, "t,arc_origin,arc_terminus,prob")?;
        for (t, probs) in self.probability_rows() {
            for (arc, p) in graph.arcs().iter().zip(probs) {
                writeln!(out, "{t},{},{},{p:.17e}", arc.origin, arc.terminus)?;
            }
        }
        Ok(())
    }
}

pub fn evolve(
    op: &GroverOperator,
    initial: StateVector,
    steps: usize,
) -> Result<Evolution, WalkError> {
    evolve_with(&FloatOperator::new(op), initial, steps)
}

pub fn evolve_with(
    op: &FloatOperator,
    initial: StateVector,
    steps: usize,
) -> Result<Evolution, WalkError> {
    if initial.amplitudes.len() != op.dimension() {
        return Err(WalkError::Dimension {
            got: initial.amplitudes.len(),
            expected: op.dimension(),
        });
    }
    let norm = initial.norm();
    if (norm - 1.0).abs() > INITIAL_NORM_TOLERANCE {
        return Err(WalkError::NotNormalized { norm });
    }
    let mut states = Vec::with_capacity(steps + 1);
    states.push(initial);
    for step in 1..=steps {
        let next = op.apply(states.last().expect("non-empty"));
        let norm = next.norm();
        if (norm - 1.0).abs() > NORM_DRIFT_LIMIT {
            return Err(WalkError::NormDrift { step, norm });
        }
        states.push(next);
    }
    Ok(Evolution { states })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmpiricalOutcome {
    Periodic(u64),
    Unknown,
}

/// Smallest `k <= k_max` at which every random trial state returns to its
/// start within [`RETURN_TOLERANCE`]. Trials are seeded `seed, seed + 1, ...`.
pub fn empirical_period(
    op: &GroverOperator,
    trials: usize,
    k_max: u64,
    seed: u64,
    exec: Execution,
) -> EmpiricalOutcome {
    assert!(trials >= 1, "at least one trial is required");
    let float = FloatOperator::new(op);
    let seeds: Vec<u64> = (0..trials as u64).map(|i| seed.wrapping_add(i)).collect();
    // Each trial reports every step at which it returned.
    let returns: Vec<Vec<bool>> = par_map(exec, &seeds, |&s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let start = StateVector::random(float.dimension(), &mut rng);
        let mut state = start.clone();
        (1..=k_max)
            .map(|_| {
                state = float.apply(&state);
                state.max_distance(&start) < RETURN_TOLERANCE
            })
            .collect()
    });
    (0..k_max as usize)
        .find(|&i| returns.iter().all(|r| r[i]))
        .map_or(EmpiricalOutcome::Unknown, |i| {
            EmpiricalOutcome::Periodic(i as u64 + 1)
        })
}
