#![allow(dead_code)]

use std::sync::OnceLock;

use grover_core::census::{enumerate_connected, run_census, CensusOptions, CensusReport};
use grover_core::graph::Graph;
use grover_core::linalg::IntPolynomial;

/// Every connected graph on 2..=7 vertices, one per isomorphism class.
pub fn census_graphs() -> &'static [Graph] {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| {
        (2..=7)
            .flat_map(|n| enumerate_connected(n).unwrap())
            .collect()
    })
}

pub fn census_report() -> &'static CensusReport {
    static REPORT: OnceLock<CensusReport> = OnceLock::new();
    REPORT.get_or_init(|| run_census(7, &CensusOptions::default()).unwrap())
}

/// How many times `x - root` divides `p` exactly.
pub fn root_multiplicity(p: &IntPolynomial, root: i64) -> usize {
    let divisor = IntPolynomial::from_i64s(&[-root, 1]);
    let mut current = p.clone();
    let mut count = 0;
    loop {
        let (q, exact) = current.divide_exact(&divisor);
        if !exact || current.is_zero() {
            return count;
        }
        current = q;
        count += 1;
    }
}
