//! Exact period detection.
//!
//! The walk is `k`-periodic exactly when every eigenvalue of `U` is a `k`-th
//! root of unity and `k` is minimal with that property. Since `det(xI - U)`
//! has rational coefficients, its roots of unity come in full cyclotomic
//! factors: stripping every `Phi_d` either exhausts the polynomial (period =
//! lcm of the stripped orders) or leaves a residue with no root of unity,
//! which certifies aperiodicity.

use std::collections::BTreeMap;

use num_integer::Integer;
use thiserror::Error;

use crate::graph::{Graph, StructureKind};
use crate::grover::{GroverError, GroverOperator};
use crate::linalg::{
    cyclotomic, totient, totient_candidates, ExactMatrix, IntPolynomial, RatPolynomial,
};

pub const DEFAULT_ORACLE_CAP: u64 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PeriodicityError {
    #[error("expected a unicyclic graph, found {0}")]
    Class(&'static str),
    #[error("expected an odd period of at least 3, got {0}")]
    InvalidPeriod(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodOutcome {
    Periodic {
        period: u64,
        /// Multiplicity of `Phi_d` in the characteristic polynomial, by order `d`.
        orders: BTreeMap<u64, usize>,
    },
    Aperiodic {
        /// Monic residue after every cyclotomic factor is removed.
        certificate: RatPolynomial,
        /// Cyclotomic factors that were removed before the residue.
        orders: BTreeMap<u64, usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodResult {
    pub outcome: PeriodOutcome,
    /// Monic `det(xI - U)`.
    pub charpoly: RatPolynomial,
}

impl PeriodResult {
    pub fn period(&self) -> Option<u64> {
        match self.outcome {
            PeriodOutcome::Periodic { period, .. } => Some(period),
            PeriodOutcome::Aperiodic { .. } => None,
        }
    }

    pub fn orders(&self) -> &BTreeMap<u64, usize> {
        match &self.outcome {
            PeriodOutcome::Periodic { orders, .. } | PeriodOutcome::Aperiodic { orders, .. } => {
                orders
            }
        }
    }
}

/// Removes every cyclotomic factor from an integer polynomial; returns the
/// multiplicities and the remaining factor.
pub fn strip_cyclotomic_factors(poly: &IntPolynomial) -> (BTreeMap<u64, usize>, IntPolynomial) {
    let mut residue = poly.clone();
    let mut orders = BTreeMap::new();
    let degree = poly.degree().unwrap_or(0) as u64;
    if degree == 0 {
        return (orders, residue);
    }
    for d in totient_candidates(degree) {
        let phi = totient(d) as usize;
        let mut count = 0;
        while residue.degree().is_some_and(|r| r >= phi) {
            let (quotient, exact) = residue.divide_exact(&cyclotomic(d));
            if !exact {
                break;
            }
            residue = quotient;
            count += 1;
        }
        if count > 0 {
            orders.insert(d, count);
        }
        if residue.degree() == Some(0) {
            break;
        }
    }
    (orders, residue)
}

/// Exact period from the cyclotomic factorization of `det(xI - U)`.
pub fn detect_period(op: &GroverOperator) -> Result<PeriodResult, GroverError> {
    let charpoly = op.charpoly()?;
    let (orders, residue) = strip_cyclotomic_factors(&charpoly.scaled);
    let outcome = if residue.degree() == Some(0) {
        let period = orders.keys().fold(1u64, |acc, d| acc.lcm(d));
        PeriodOutcome::Periodic { period, orders }
    } else {
        PeriodOutcome::Aperiodic {
            certificate: residue.to_rational().to_monic(),
            orders,
        }
    };
    Ok(PeriodResult {
        outcome,
        charpoly: charpoly.monic,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleOutcome {
    Periodic(u64),
    Unknown,
}

const ORACLE_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % ORACLE_PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut k: u64) -> u64 {
    let mut acc = 1;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        k >>= 1;
    }
    acc
}

/// First `k <= k_max` with `U^k = I`, found by powering `U` directly.
///
/// Powers are scanned in the image of `U` over `GF(p)`, `p = 2^61 - 1` (the
/// entries of `U` have denominators dividing the degree lcm, which is
/// invertible mod `p`). `U^j = I` over the rationals forces `U^j = I` mod `p`,
/// so every rejected `j` is certified exactly; each modular hit is confirmed
/// by an exact rational power before it is reported.
pub fn oracle_period(op: &GroverOperator, k_max: u64) -> OracleOutcome {
    let arcs = op.graph().arc_count();
    let lcm = op.degree_lcm();
    let inv_lcm = pow_mod(lcm % ORACLE_PRIME, ORACLE_PRIME - 2);
    let to_mod = |x: &num_rational::BigRational| -> u64 {
        let scaled = x * num_rational::BigRational::from_integer(lcm.into());
        debug_assert!(scaled.is_integer());
        let value = scaled.to_integer().mod_floor(&ORACLE_PRIME.into());
        let value: u64 = value.try_into().expect("reduced residue fits in u64");
        mul_mod(value, inv_lcm)
    };
    // columns[f] lists (e, U[e][f] mod p).
    let columns: Vec<Vec<(usize, u64)>> = (0..arcs)
        .map(|f| op.column(f).map(|(e, w)| (e, to_mod(w))).collect())
        .collect();

    // power[e * arcs + f] holds (U^k)[e][f]; U^(k+1) = U^k * U column by column.
    let mut power = vec![0u64; arcs * arcs];
    for (f, column) in columns.iter().enumerate() {
        for &(e, w) in column {
            power[e * arcs + f] = w;
        }
    }
    let mut next = vec![0u64; arcs * arcs];
    for k in 1..=k_max {
        let identity =
            (0..arcs).all(|i| (0..arcs).all(|j| power[i * arcs + j] == u64::from(i == j)));
        if identity && op.u().pow(k).is_ok_and(|p| p.is_identity()) {
            return OracleOutcome::Periodic(k);
        }
        if k == k_max {
            break;
        }
        next.iter_mut().for_each(|x| *x = 0);
        for (f, column) in columns.iter().enumerate() {
            for &(h, w) in column {
                for e in 0..arcs {
                    let a = power[e * arcs + h];
                    if a != 0 {
                        let slot = &mut next[e * arcs + f];
                        *slot = (*slot + mul_mod(a, w)) % ORACLE_PRIME;
                    }
                }
            }
        }
        std::mem::swap(&mut power, &mut next);
    }
    OracleOutcome::Unknown
}

/// Reference oracle: exact rational powers `U, U^2, ...` with no modular
/// shortcut. Intended for small graphs and small caps.
pub fn oracle_period_exact(op: &GroverOperator, k_max: u64) -> OracleOutcome {
    let u = op.u();
    let mut power: ExactMatrix = u.clone();
    for k in 1..=k_max {
        if power.is_identity() {
            return OracleOutcome::Periodic(k);
        }
        power = power.matmul(u).expect("square");
    }
    OracleOutcome::Unknown
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExclusionReason {
    /// `m > n` puts `-1` in the spectrum of `U`.
    MinusOneEigenvalue,
    Tree,
    Bipartite,
    /// Unicyclic with girth above `k - 4`.
    GirthTooLarge,
}

impl ExclusionReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ExclusionReason::MinusOneEigenvalue => "minus-one-eigenvalue",
            ExclusionReason::Tree => "tree",
            ExclusionReason::Bipartite => "bipartite",
            ExclusionReason::GirthTooLarge => "girth-too-large",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prefilter {
    Possible,
    Excluded(ExclusionReason),
}

fn check_odd(k: u64) -> Result<(), PeriodicityError> {
    if k < 3 || k.is_multiple_of(2) {
        Err(PeriodicityError::InvalidPeriod(k))
    } else {
        Ok(())
    }
}

/// Structural necessary condition for an odd period: only odd cycles and odd
/// unicyclic graphs survive.
pub fn odd_period_prefilter(g: &Graph, k: u64) -> Result<Prefilter, PeriodicityError> {
    check_odd(k)?;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let class = g.classify();
    Ok(if m > n {
        Prefilter::Excluded(ExclusionReason::MinusOneEigenvalue)
    } else if class.is_tree() {
        Prefilter::Excluded(ExclusionReason::Tree)
    } else if class.bipartite {
        Prefilter::Excluded(ExclusionReason::Bipartite)
    } else {
        Prefilter::Possible
    })
}

/// An odd unicyclic graph can only be `k`-periodic if its girth is at most `k - 4`.
pub fn girth_bound_check(g: &Graph, k: u64) -> Result<Prefilter, PeriodicityError> {
    check_odd(k)?;
    let class = g.classify();
    let StructureKind::Unicyclic(girth) = class.kind else {
        return Err(PeriodicityError::Class(class.name()));
    };
    Ok(if girth as i64 > k as i64 - 4 {
        Prefilter::Excluded(ExclusionReason::GirthTooLarge)
    } else {
        Prefilter::Possible
    })
}
