//! JSON documents emitted by the CLI. Exact values are rendered as `p/q`
//! strings; object keys come out sorted.

use std::collections::BTreeMap;

use grover_core::graph::{encode_graph6, Graph, Parity, StructureKind};
use grover_core::grover::GroverOperator;
use grover_core::linalg::{fraction_string, ExactMatrix, RatPolynomial};
use grover_core::periodicity::{OracleOutcome, PeriodOutcome, PeriodResult};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub structure: &'static str,
    pub cycle_length: Option<usize>,
    pub parity: Option<Parity>,
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub graph6: String,
}

impl GraphSummary {
    pub fn new(g: &Graph) -> Self {
        let class = g.classify();
        let cycle_length = match class.kind {
            StructureKind::Cycle(l) | StructureKind::Unicyclic(l) => Some(l),
            _ => None,
        };
        GraphSummary {
            n: g.vertex_count(),
            m: g.edge_count(),
            degrees: g.degrees(),
            structure: class.name(),
            cycle_length,
            parity: class.parity,
            girth: class.girth,
            bipartite: class.bipartite,
            graph6: encode_graph6(g),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OracleSummary {
    pub cap: u64,
    pub period: Option<u64>,
    pub agrees: bool,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub charpoly_ms: f64,
    pub oracle_ms: f64,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub periodic: bool,
    pub period: Option<u64>,
    pub orders: BTreeMap<String, usize>,
    pub certificate: Option<Vec<String>>,
    /// Monic `det(xI - U)`, lowest degree first.
    pub charpoly: Vec<String>,
    pub oracle: Option<OracleSummary>,
    pub timing: Option<Timing>,
}

pub fn poly_strings(p: &RatPolynomial) -> Vec<String> {
    p.coeffs().iter().map(fraction_string).collect()
}

impl AnalysisReport {
    pub fn new(
        op: &GroverOperator,
        result: &PeriodResult,
        oracle: Option<(u64, OracleOutcome)>,
    ) -> Self {
        let period = result.period();
        let certificate = match &result.outcome {
            PeriodOutcome::Aperiodic { certificate, .. } => Some(poly_strings(certificate)),
            PeriodOutcome::Periodic { .. } => None,
        };
        let oracle = oracle.map(|(cap, outcome)| {
            let found = match outcome {
                OracleOutcome::Periodic(k) => Some(k),
                OracleOutcome::Unknown => None,
            };
            let agrees = match (period, found) {
                (Some(k), Some(j)) => k == j,
                (Some(k), None) => k > cap,
                (None, None) => true,
                (None, Some(_)) => false,
            };
            OracleSummary {
                cap,
                period: found,
                agrees,
            }
        });
        AnalysisReport {
            graph: GraphSummary::new(op.graph()),
            periodic: period.is_some(),
            period,
            orders: result
                .orders()
                .iter()
                .map(|(d, k)| (d.to_string(), *k))
                .collect(),
            certificate,
            charpoly: poly_strings(&result.charpoly),
            oracle,
            timing: None,
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline; `None` fields are omitted.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report serializes");
    strip_nulls_at_top(&mut v, &["timing", "oracle"]);
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn strip_nulls_at_top(v: &mut Value, keys: &[&str]) {
    if let Value::Object(map) = v {
        for key in keys {
            if map.get(*key).is_some_and(Value::is_null) {
                map.remove(*key);
            }
        }
    }
}

pub fn arc_labels(g: &Graph) -> Vec<String> {
    g.arcs()
        .iter()
        .map(|a| format!("{}->{}", a.origin, a.terminus))
        .collect()
}

pub fn matrix_csv(m: &ExactMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(fraction_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct MatrixDump {
    pub which: &'static str,
    pub rows: usize,
    pub cols: usize,
    /// Row and column labels: arcs `o->t` for U, vertices for T.
    pub labels: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDump {
    pub fn new(which: &'static str, m: &ExactMatrix, labels: Vec<String>) -> Self {
        MatrixDump {
            which,
            rows: m.rows(),
            cols: m.cols(),
            labels,
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(fraction_string).collect())
                .collect(),
        }
    }
}
