//! Exhaustive classification of small connected graphs by Grover period, and
//! machine checks of the structural classification results against it.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

use serde::Serialize;

use crate::exec::{par_map, Execution};
use crate::graph::{
    canonical_form, encode_graph6, orbit_keys, pair_count, pair_index, parse_graph6, Graph,
    GraphError, StructureKind, CANONICAL_MAX_VERTICES,
};
use crate::grover::GroverOperator;
use crate::periodicity::{
    detect_period, girth_bound_check, odd_period_prefilter, oracle_period, OracleOutcome,
    Prefilter, DEFAULT_ORACLE_CAP,
};

pub const MAX_CENSUS_VERTICES: usize = 7;

/// Largest subdivision checked by the doubling verdict, in vertices.
pub const DEFAULT_SUBDIVISION_CAP: usize = 14;

/// All connected simple graphs on exactly `n` vertices, one per isomorphism
/// class, each in its canonical labeling.
///
/// Labeled graphs are scanned as edge subsets in increasing canonical-key
/// order; the whole relabeling orbit of each new connected graph is marked as
/// seen, so the first member met is the orbit minimum.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(2..=MAX_CENSUS_VERTICES).contains(&n) {
        return Err(GraphError::Size(format!(
            "built-in enumeration covers 2..={MAX_CENSUS_VERTICES} vertices, got {n}"
        )));
    }
    let bits = pair_count(n);
    let mut pairs = vec![(0, 0); bits];
    for j in 1..n {
        for i in 0..j {
            pairs[pair_index(i, j)] = (i, j);
        }
    }
    let total = 1u64 << bits;
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut out = Vec::new();
    for key in 0..total {
        if seen[(key / 64) as usize] >> (key % 64) & 1 == 1 {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..bits)
            .filter(|&i| key >> (bits - 1 - i) & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        if !mask_connected(n, &edges) {
            continue;
        }
        for k in orbit_keys(n, &edges) {
            seen[(k / 64) as usize] |= 1 << (k % 64);
        }
        out.push(Graph::new(n, edges).expect("connected edge subset is a valid graph"));
    }
    Ok(out)
}

fn mask_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = [0u32; CANONICAL_MAX_VERTICES];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut reached = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            next |= adj[v];
            f &= f - 1;
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == (1u32 << n) - 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Ingest {
    pub graphs: Vec<Graph>,
    pub errors: Vec<LineError>,
}

/// Reads one graph6 token per line. Blank lines are skipped; bad lines are
/// recorded and the rest of the stream is still processed.
pub fn ingest_graph6_stream(reader: impl BufRead) -> io::Result<Ingest> {
    let mut ingest = Ingest::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match parse_graph6(&line) {
            Ok(g) => ingest.graphs.push(g),
            Err(e) => ingest.errors.push(LineError {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    Ok(ingest)
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub exec: Execution,
    pub oracle_cap: u64,
    pub subdivision_cap: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            exec: Execution::default(),
            oracle_cap: DEFAULT_ORACLE_CAP,
            subdivision_cap: DEFAULT_SUBDIVISION_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CensusEntry {
    pub n: usize,
    pub m: usize,
    /// Canonical form for graphs on at most eight vertices, otherwise the
    /// graph6 encoding of the input labeling.
    pub graph6: String,
    pub tags: Vec<String>,
}

impl CensusEntry {
    pub fn graph(&self) -> Graph {
        parse_graph6(&self.graph6).expect("census entries hold valid graph6")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleDisagreement {
    pub graph6: String,
    pub exact: Option<u64>,
    pub oracle: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub id: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// True when the graphs are every connected graph in the vertex range.
    pub exhaustive: bool,
    pub examined: usize,
    pub count_by_vertices: BTreeMap<usize, usize>,
    pub periodic: BTreeMap<u64, Vec<CensusEntry>>,
    pub aperiodic: Vec<CensusEntry>,
    pub aperiodic_by_vertices: BTreeMap<usize, usize>,
    pub oracle_cap: u64,
    pub oracle_confirmed: usize,
    /// Periodic results whose period exceeds the oracle cap.
    pub oracle_unresolved: usize,
    pub oracle_disagreements: Vec<OracleDisagreement>,
    pub failures: Vec<LineError>,
    pub input_errors: Vec<LineError>,
    pub verdicts: Vec<Verdict>,
}

impl CensusReport {
    pub fn period_of(&self, graph6: &str) -> Option<Option<u64>> {
        for (&k, entries) in &self.periodic {
            if entries.iter().any(|e| e.graph6 == graph6) {
                return Some(Some(k));
            }
        }
        self.aperiodic
            .iter()
            .any(|e| e.graph6 == graph6)
            .then_some(None)
    }

    pub fn bucket_total(&self) -> usize {
        self.periodic.values().map(Vec::len).sum::<usize>() + self.aperiodic.len()
    }

    pub fn all_verdicts_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    /// `period,count,representative` with an `aperiodic` row last.
    pub fn write_csv_summary(&self, mut out: impl Write) -> io::Result<()> {
        writeln!(out, "period,count,representative")?;
        for (k, entries) in &self.periodic {
            writeln!(
                out,
                "{k},{},{}",
                entries.len(),
                csv_field(&entries[0].graph6)
            )?;
        }
        if let Some(first) = self.aperiodic.first() {
            writeln!(
                out,
                "aperiodic,{},{}",
                self.aperiodic.len(),
                csv_field(&first.graph6)
            )?;
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Human-readable family tags.
pub fn family_tags(g: &Graph) -> Vec<String> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let class = g.classify();
    let mut tags = Vec::new();
    match class.kind {
        StructureKind::Tree => {
            if g.max_degree() <= 2 {
                tags.push(format!("P{n}"));
            }
            tags.push("tree".into());
        }
        StructureKind::Cycle(l) => tags.push(format!("C{l}")),
        StructureKind::Unicyclic(l) => tags.push(format!("unicyclic({l})")),
        StructureKind::Other => {}
    }
    if m == n * (n - 1) / 2 {
        tags.push(format!("K{n}"));
    }
    if let Some((r, s)) = g.complete_bipartite_sizes() {
        tags.push(format!("K{r},{s}"));
    }
    tags
}

fn entry_for(g: &Graph) -> CensusEntry {
    let graph6 = match canonical_form(g) {
        Ok(bytes) => String::from_utf8(bytes).expect("graph6 is ASCII"),
        Err(_) => encode_graph6(g),
    };
    CensusEntry {
        n: g.vertex_count(),
        m: g.edge_count(),
        graph6,
        tags: family_tags(g),
    }
}

enum Classified {
    Done {
        entry: CensusEntry,
        period: Option<u64>,
        oracle: OracleOutcome,
    },
    Failed(LineError),
}

fn classify_one(index: usize, g: &Graph, oracle_cap: u64) -> Classified {
    let entry = entry_for(g);
    let op = GroverOperator::new(g.clone());
    match detect_period(&op) {
        Ok(result) => Classified::Done {
            entry,
            period: result.period(),
            oracle: oracle_period(&op, oracle_cap),
        },
        Err(e) => Classified::Failed(LineError {
            line: index + 1,
            message: format!("{}: {e}", entry.graph6),
        }),
    }
}

/// Classifies every graph by exact period and cross-checks each result with
/// the matrix-power oracle. Per-graph failures are recorded, not raised.
pub fn classify_all(graphs: &[Graph], options: &CensusOptions) -> CensusReport {
    let indexed: Vec<(usize, &Graph)> = graphs.iter().enumerate().collect();
    let results = par_map(options.exec, &indexed, |&(i, g)| {
        classify_one(i, g, options.oracle_cap)
    });

    let mut report = CensusReport {
        min_vertices: graphs.iter().map(Graph::vertex_count).min().unwrap_or(0),
        max_vertices: graphs.iter().map(Graph::vertex_count).max().unwrap_or(0),
        examined: graphs.len(),
        oracle_cap: options.oracle_cap,
        ..CensusReport::default()
    };
    for result in results {
        let (entry, period, oracle) = match result {
            Classified::Done {
                entry,
                period,
                oracle,
            } => (entry, period, oracle),
            Classified::Failed(error) => {
                report.failures.push(error);
                continue;
            }
        };
        *report.count_by_vertices.entry(entry.n).or_default() += 1;
        let oracle_period = match oracle {
            OracleOutcome::Periodic(k) => Some(k),
            OracleOutcome::Unknown => None,
        };
        match (period, oracle_period) {
            (Some(k), Some(j)) if k == j => report.oracle_confirmed += 1,
            (Some(k), None) if k > options.oracle_cap => report.oracle_unresolved += 1,
            (None, None) => report.oracle_confirmed += 1,
            _ => report.oracle_disagreements.push(OracleDisagreement {
                graph6: entry.graph6.clone(),
                exact: period,
                oracle: oracle_period,
            }),
        }
        match period {
            Some(k) => report.periodic.entry(k).or_default().push(entry),
            None => {
                *report.aperiodic_by_vertices.entry(entry.n).or_default() += 1;
                report.aperiodic.push(entry);
            }
        }
    }
    for entries in report.periodic.values_mut() {
        entries.sort();
    }
    report.aperiodic.sort();
    report
}

/// Enumerates every connected graph on `2..=max_n` vertices, classifies them
/// and attaches the theorem verdicts.
pub fn run_census(max_n: usize, options: &CensusOptions) -> Result<CensusReport, GraphError> {
    if !(2..=MAX_CENSUS_VERTICES).contains(&max_n) {
        return Err(GraphError::Size(format!(
            "census covers at most {MAX_CENSUS_VERTICES} vertices, got {max_n}"
        )));
    }
    let mut graphs = Vec::new();
    for n in 2..=max_n {
        graphs.extend(enumerate_connected(n)?);
    }
    let mut report = classify_all(&graphs, options);
    report.exhaustive = true;
    report.min_vertices = 2;
    report.max_vertices = max_n;
    report.verdicts = verify_theorems(&report, options);
    Ok(report)
}

struct Check {
    id: &'static str,
    checked: usize,
    counterexample: Option<String>,
}

impl Check {
    fn new(id: &'static str) -> Self {
        Check {
            id,
            checked: 0,
            counterexample: None,
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn finish(self) -> Verdict {
        Verdict {
            id: self.id,
            passed: self.counterexample.is_none(),
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

/// Checks the classification results against the report.
///
/// Every verdict checks that the buckets contain only what the statement
/// allows. When the report is exhaustive it also checks that every family
/// member in the vertex range is present with its predicted period.
pub fn verify_theorems(report: &CensusReport, options: &CensusOptions) -> Vec<Verdict> {
    let (lo, hi) = (report.min_vertices, report.max_vertices);
    let in_range = |n: usize| lo <= n && n <= hi;
    let periodic: Vec<(u64, &CensusEntry, Graph)> = report
        .periodic
        .iter()
        .flat_map(|(&k, entries)| entries.iter().map(move |e| (k, e, e.graph())))
        .collect();
    let describe =
        |e: &CensusEntry, k: u64| format!("{} (n={}, m={}) has period {k}", e.graph6, e.n, e.m);
    let mut verdicts = Vec::new();

    // Unique graphs of period 2, 3 and 5.
    for (id, k, expected_n, is_expected) in [
        (
            "period-2-is-only-p2",
            2u64,
            2usize,
            (|g: &Graph| g.vertex_count() == 2) as fn(&Graph) -> bool,
        ),
        ("period-3-is-only-c3", 3, 3, |g: &Graph| {
            g.classify().kind == StructureKind::Cycle(3)
        }),
        ("period-5-is-only-c5", 5, 5, |g: &Graph| {
            g.classify().kind == StructureKind::Cycle(5)
        }),
    ] {
        let mut check = Check::new(id);
        let bucket = report.periodic.get(&k).map(Vec::as_slice).unwrap_or(&[]);
        for (entry, g) in bucket.iter().map(|e| (e, e.graph())) {
            check.expect(is_expected(&g), || describe(entry, k));
        }
        if report.exhaustive && in_range(expected_n) {
            check.expect(bucket.len() == 1, || {
                format!("period-{k} bucket has {} members", bucket.len())
            });
        }
        verdicts.push(check.finish());
    }

    let mut check = Check::new("period-4-is-complete-bipartite");
    let four = report.periodic.get(&4).map(Vec::as_slice).unwrap_or(&[]);
    for entry in four {
        let ok = entry
            .graph()
            .complete_bipartite_sizes()
            .is_some_and(|(r, s)| r + s >= 3);
        check.expect(ok, || describe(entry, 4));
    }
    if report.exhaustive {
        let mut expected = 0;
        for total in 3.max(lo)..=hi {
            for r in 1..=total / 2 {
                expected += 1;
                let tag = format!("K{r},{}", total - r);
                check.expect(four.iter().any(|e| e.tags.contains(&tag)), || {
                    format!("{tag} missing from period 4")
                });
            }
        }
        check.expect(four.len() == expected, || {
            format!(
                "period-4 bucket has {} members, expected {expected}",
                four.len()
            )
        });
    }
    verdicts.push(check.finish());

    let odd: Vec<&(u64, &CensusEntry, Graph)> =
        periodic.iter().filter(|(k, _, _)| k % 2 == 1).collect();

    let mut check = Check::new("odd-period-is-odd-cycle-or-odd-unicyclic");
    for (k, e, g) in &odd {
        let class = g.classify();
        check.expect(class.is_odd_cycle() || class.is_odd_unicyclic(), || {
            describe(e, *k)
        });
    }
    verdicts.push(check.finish());

    let mut check = Check::new("odd-period-is-odd-cycle");
    for (k, e, g) in &odd {
        check.expect(g.classify().is_odd_cycle(), || describe(e, *k));
    }
    verdicts.push(check.finish());

    let mut check = Check::new("odd-unicyclic-girth-at-most-period-minus-4");
    for (k, e, g) in &odd {
        if let Ok(result) = girth_bound_check(g, *k) {
            check.expect(result == Prefilter::Possible, || describe(e, *k));
        }
    }
    verdicts.push(check.finish());

    let mut check = Check::new("odd-period-prefilter-is-sound");
    for (k, e, g) in &odd {
        let ok = *k >= 3 && odd_period_prefilter(g, *k) == Ok(Prefilter::Possible);
        check.expect(ok, || describe(e, *k));
    }
    verdicts.push(check.finish());

    // Cycles C_l have period l, paths P_l have period 2(l - 1).
    for (id, family_tag, predicted, min_len) in [
        (
            "cycle-period-equals-length",
            'C',
            (|l: u64| l) as fn(u64) -> u64,
            3usize,
        ),
        (
            "path-period-is-twice-length-minus-one",
            'P',
            |l: u64| 2 * (l - 1),
            2,
        ),
    ] {
        let mut check = Check::new(id);
        let mut found = vec![false; hi + 1];
        for (k, e, _) in &periodic {
            for tag in &e.tags {
                if let Some(l) = tag
                    .strip_prefix(family_tag)
                    .and_then(|s| s.parse::<usize>().ok())
                {
                    found[l] = true;
                    check.expect(*k == predicted(l as u64), || describe(e, *k));
                }
            }
        }
        for e in &report.aperiodic {
            let member = e.tags.iter().any(|t| {
                t.strip_prefix(family_tag)
                    .is_some_and(|s| s.parse::<usize>().is_ok())
            });
            check.expect(!member, || format!("{} is aperiodic", e.graph6));
        }
        if report.exhaustive {
            for (l, &present) in found.iter().enumerate().take(hi + 1).skip(min_len.max(lo)) {
                check.expect(present, || {
                    format!("{family_tag}{l} missing from the periodic buckets")
                });
            }
        }
        verdicts.push(check.finish());
    }

    let mut check = Check::new("subdivision-doubles-period");
    let subdivided: Vec<(u64, &CensusEntry, Option<u64>)> = par_map(
        options.exec,
        &periodic
            .iter()
            .filter(|(_, e, _)| e.n + e.m <= options.subdivision_cap)
            .collect::<Vec<_>>(),
        |(k, e, g)| {
            let s = GroverOperator::new(g.subdivide());
            (*k, *e, detect_period(&s).ok().and_then(|r| r.period()))
        },
    );
    for (k, e, sk) in subdivided {
        check.expect(sk == Some(2 * k), || {
            format!("{} has period {k} but its subdivision has {sk:?}", e.graph6)
        });
    }
    verdicts.push(check.finish());

    let mut check = Check::new("oracle-concordance");
    check.checked = report.oracle_confirmed + report.oracle_disagreements.len();
    if let Some(d) = report.oracle_disagreements.first() {
        check.counterexample = Some(format!(
            "{}: exact {:?}, oracle {:?}",
            d.graph6, d.exact, d.oracle
        ));
    }
    verdicts.push(check.finish());

    verdicts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn options() -> CensusOptions {
        CensusOptions {
            exec: Execution::Sequential,
            ..CensusOptions::default()
        }
    }

    #[test]
    fn small_enumeration_counts() {
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
        assert!(enumerate_connected(1).is_err());
        assert!(enumerate_connected(8).is_err());
    }

    #[test]
    fn four_vertex_graphs_match_hand_list() {
        // P4, K1,3, C4, paw, diamond, K4.
        let mut expected: Vec<Vec<u8>> = [
            "0 1\n1 2\n2 3",
            "0 1\n0 2\n0 3",
            "0 1\n1 2\n2 3\n3 0",
            "0 1\n1 2\n2 0\n0 3",
            "0 1\n1 2\n2 3\n3 0\n0 2",
            "0 1\n0 2\n0 3\n1 2\n1 3\n2 3",
        ]
        .iter()
        .map(|s| canonical_form(&crate::graph::from_edge_list(s).unwrap()).unwrap())
        .collect();
        expected.sort();
        let mut got: Vec<Vec<u8>> = enumerate_connected(4)
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerated_graphs_are_in_canonical_labeling() {
        for g in enumerate_connected(5).unwrap() {
            assert_eq!(canonical_form(&g).unwrap(), encode_graph6(&g).into_bytes());
        }
    }

    #[test]
    fn mask_connectivity() {
        assert!(mask_connected(3, &[(0, 1), (1, 2)]));
        assert!(!mask_connected(3, &[(0, 1)]));
        assert!(!mask_connected(4, &[(0, 1), (2, 3)]));
    }

    fn graphs(families: &[Family]) -> Vec<Graph> {
        families.iter().map(|f| f.build().unwrap()).collect()
    }

    #[test]
    fn classify_small_set() {
        let report = classify_all(
            &graphs(&[Family::Path(2), Family::Path(3), Family::Cycle(3)]),
            &options(),
        );
        let periods: BTreeMap<u64, Vec<Vec<String>>> = report
            .periodic
            .iter()
            .map(|(&k, es)| (k, es.iter().map(|e| e.tags.clone()).collect()))
            .collect();
        assert_eq!(
            periods[&2],
            vec![vec![
                "P2".to_string(),
                "tree".into(),
                "K2".into(),
                "K1,1".into()
            ]]
        );
        assert_eq!(periods[&3][0][0], "C3");
        assert_eq!(periods[&4][0][0], "P3");
        assert!(report.aperiodic.is_empty());
        assert_eq!(report.oracle_confirmed, 3);
    }

    #[test]
    fn c4_and_k4_buckets() {
        let report = classify_all(
            &graphs(&[Family::Cycle(4), Family::Complete(4)]),
            &options(),
        );
        assert!(report.periodic[&4][0].tags.contains(&"K2,2".to_string()));
        assert_eq!(report.aperiodic.len(), 1);
        assert!(report.aperiodic[0].tags.contains(&"K4".to_string()));
        assert!(report.oracle_disagreements.is_empty());
    }

    #[test]
    fn injected_bucket_fails_period_three_verdict() {
        let mut report = classify_all(&graphs(&[Family::Path(3), Family::Cycle(3)]), &options());
        let p3 = report.periodic.remove(&4).unwrap().remove(0);
        let p3_code = p3.graph6.clone();
        report.periodic.get_mut(&3).unwrap().push(p3);
        let verdicts = verify_theorems(&report, &options());
        let v = verdicts
            .iter()
            .find(|v| v.id == "period-3-is-only-c3")
            .unwrap();
        assert!(!v.passed);
        assert!(v.counterexample.as_ref().unwrap().starts_with(&p3_code));
    }

    #[test]
    fn subdivision_verdict_on_small_set() {
        let report = classify_all(
            &graphs(&[
                Family::Path(2),
                Family::Cycle(3),
                Family::CompleteBipartite(1, 3),
            ]),
            &options(),
        );
        let periods: Vec<u64> = report.periodic.keys().copied().collect();
        assert_eq!(periods, vec![2, 3, 4]);
        let verdicts = verify_theorems(&report, &options());
        let v = verdicts
            .iter()
            .find(|v| v.id == "subdivision-doubles-period")
            .unwrap();
        assert!(v.passed);
        assert_eq!(v.checked, 3);
        assert!(verdicts.iter().all(|v| v.passed), "{verdicts:?}");
    }

    #[test]
    fn ingest_examples() {
        let ingest = ingest_graph6_stream("A_\nBw\n".as_bytes()).unwrap();
        assert_eq!(ingest.graphs.len(), 2);
        assert!(ingest.errors.is_empty());

        let empty = ingest_graph6_stream("".as_bytes()).unwrap();
        assert!(empty.graphs.is_empty());
        let report = classify_all(&empty.graphs, &options());
        assert_eq!(report.examined, 0);

        let mixed = ingest_graph6_stream("A_\nnot graph6!\n\nA?\nBw".as_bytes()).unwrap();
        assert_eq!(mixed.graphs.len(), 2);
        assert_eq!(
            mixed.errors.iter().map(|e| e.line).collect::<Vec<_>>(),
            vec![2, 4]
        );
    }

    #[test]
    fn csv_summary() {
        let report = classify_all(
            &graphs(&[Family::Path(2), Family::Cycle(3), Family::Complete(4)]),
            &options(),
        );
        let mut buf = Vec::new();
        report.write_csv_summary(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines,
            vec![
                "period,count,representative",
                "2,1,A_",
                "3,1,Bw",
                "aperiodic,1,C~"
            ]
        );
    }

    #[test]
    fn census_up_to_five() {
        let report = run_census(5, &options()).unwrap();
        assert_eq!(report.examined, 30);
        assert_eq!(report.bucket_total(), 30);
        assert!(report.all_verdicts_pass(), "{:?}", report.verdicts);
        let four: Vec<String> = report.periodic[&4]
            .iter()
            .flat_map(|e| {
                e.tags
                    .iter()
                    .filter(|t| t.starts_with('K') && t.contains(','))
                    .cloned()
            })
            .collect();
        assert_eq!(four, vec!["K1,2", "K1,3", "K2,2", "K1,4", "K2,3"]);
    }
}
