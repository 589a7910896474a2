//! Batch classification of regular even graphs, and the report formats
//! behind the command line.
//!
//! Input files carry one graph per line, graph6 or bracket adjacency format;
//! `#` starts a comment line. Rows come back in input order regardless of how
//! many worker threads run, and parse errors are collected per line while the
//! scan continues.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{self, SignSumResult};
use crate::graph::{parse_adjacency, parse_graph6, Edge, Graph, GraphError};
use crate::oracle;

/// What the signed sum certifies for one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    /// No 1-factorization at all.
    Class2,
    /// Factorable, but the signs cancel: the certificate is silent.
    ZeroSum,
    /// Nonzero signed sum: the graph is k-list edge colorable and edge
    /// k-paintable, with k its degree.
    NonzeroCertified,
    /// Factorable; signs were not computed (count-only mode).
    Factorable,
}

impl Verdict {
    fn from_result(r: &SignSumResult) -> Verdict {
        if r.factorization_count.is_zero() {
            Verdict::Class2
        } else if r.signed_sum.is_zero() {
            Verdict::ZeroSum
        } else {
            Verdict::NonzeroCertified
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Class2 => "Class2",
            Verdict::ZeroSum => "ZeroSum",
            Verdict::NonzeroCertified => "NonzeroCertified",
            Verdict::Factorable => "Factorable",
        }
    }
}

/// Classification of a single graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub id: String,
    pub n: usize,
    pub k: usize,
    pub count: BigUint,
    /// Absent in count-only mode.
    pub sum: Option<BigInt>,
    pub verdict: Verdict,
}

/// Classifies one graph: verdict is Class2 when the count is zero, ZeroSum
/// when factorizations exist but their signs cancel, NonzeroCertified
/// otherwise.
pub fn classify(g: &Graph, id: impl Into<String>) -> Result<Classification, GraphError> {
    let k = g.validate_regular_even()?;
    let r = engine::weighted_sum_auto(g)?;
    Ok(Classification {
        id: id.into(),
        n: g.n_vertices(),
        k,
        verdict: Verdict::from_result(&r),
        count: r.factorization_count,
        sum: Some(r.signed_sum),
    })
}

/// Count-only classification: distinguishes Class2 from Factorable without
/// sign bookkeeping.
pub fn classify_count_only(g: &Graph, id: impl Into<String>) -> Result<Classification, GraphError> {
    let k = g.validate_regular_even()?;
    let count = engine::count_factorizations(g)?;
    let verdict = if count.is_zero() { Verdict::Class2 } else { Verdict::Factorable };
    Ok(Classification { id: id.into(), n: g.n_vertices(), k, count, sum: None, verdict })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    pub count_only: bool,
    /// Drop graphs that are not connected instead of classifying them.
    pub require_connected: bool,
    /// Classify graphs in parallel on the current rayon pool.
    pub parallel: bool,
}

/// One input line that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub rows: Vec<Classification>,
    pub errors: Vec<LineError>,
    /// Graphs dropped by the connectivity filter.
    pub skipped: usize,
}

impl Report {
    /// Row counts grouped by `(n, k, verdict)`.
    pub fn aggregates(&self) -> BTreeMap<(usize, usize, Verdict), usize> {
        let mut map = BTreeMap::new();
        for row in &self.rows {
            *map.entry((row.n, row.k, row.verdict)).or_insert(0) += 1;
        }
        map
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,n,k,count,sum,verdict\n");
        for row in &self.rows {
            let sum = row.sum.as_ref().map(BigInt::to_string).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                csv_field(&row.id),
                row.n,
                row.k,
                row.count,
                sum,
                row.verdict.as_str()
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonRow<'a> {
            id: &'a str,
            n: usize,
            k: usize,
            count: String,
            sum: Option<String>,
            verdict: &'a str,
        }
        let rows: Vec<JsonRow> = self
            .rows
            .iter()
            .map(|row| JsonRow {
                id: &row.id,
                n: row.n,
                k: row.k,
                count: row.count.to_string(),
                sum: row.sum.as_ref().map(BigInt::to_string),
                verdict: row.verdict.as_str(),
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("rows serialize")
    }

    /// Human-readable listing plus aggregate counts.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let sum = row.sum.as_ref().map(BigInt::to_string).unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "{:<24} n={:<3} k={:<2} count={:<12} sum={:<12} {}",
                row.id,
                row.n,
                row.k,
                row.count.to_string(),
                sum,
                row.verdict.as_str()
            );
        }
        let _ = writeln!(out, "-- {} graphs", self.rows.len());
        for ((n, k, verdict), count) in self.aggregates() {
            let _ = writeln!(out, "-- n={n} k={k} {}: {count}", verdict.as_str());
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Parses one input line; `None` for blanks and `#` comments.
pub fn parse_line(line: &str) -> Option<Result<Graph, GraphError>> {
    let t = line.trim();
    if t.is_empty() || t.starts_with('#') {
        return None;
    }
    Some(if t.starts_with('[') { parse_adjacency(t) } else { parse_graph6(t) })
}

/// Classifies every graph in a line stream. Rows keep input order; errors
/// carry 1-based line numbers.
pub fn scan<I, S>(lines: I, options: ScanOptions) -> Report
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    // parse first so classification can fan out
    let mut parsed: Vec<(usize, String, Graph)> = Vec::new();
    let mut report = Report::default();
    for (idx, line) in lines.into_iter().enumerate() {
        let line_no = idx + 1;
        match parse_line(line.as_ref()) {
            None => {}
            Some(Err(e)) => report.errors.push(LineError { line: line_no, message: e.to_string() }),
            Some(Ok(g)) => {
                if options.require_connected && !g.is_connected() {
                    report.skipped += 1;
                } else {
                    parsed.push((line_no, line.as_ref().trim().to_string(), g));
                }
            }
        }
    }
    let classify_one = |(line_no, id, g): &(usize, String, Graph)| match if options.count_only {
        classify_count_only(g, id.clone())
    } else {
        classify(g, id.clone())
    } {
        Ok(c) => Ok(c),
        Err(e) => Err(LineError { line: *line_no, message: e.to_string() }),
    };
    let results: Vec<Result<Classification, LineError>> = if options.parallel {
        parsed.par_iter().map(classify_one).collect()
    } else {
        parsed.iter().map(classify_one).collect()
    };
    for r in results {
        match r {
            Ok(c) => report.rows.push(c),
            Err(e) => report.errors.push(e),
        }
    }
    report.errors.sort_by_key(|e| e.line);
    report
}

/// Outcome of trying every perfect matching of the complement as an extra
/// factor.
#[derive(Clone, Debug)]
pub struct ExtensionReport {
    /// Perfect matchings of the complement that were tried.
    pub attempts: usize,
    pub class2: usize,
    pub zero_sum: usize,
    pub certified: usize,
    /// First extension whose signed sum is nonzero: the added matching and
    /// its classification.
    pub witness: Option<(Vec<Edge>, Classification)>,
}

/// For a regular graph of even order, adds every perfect matching of the
/// complement in turn, classifies the extended (k+1)-regular graph, and
/// reports whether some extension carries a nonzero signed sum.
pub fn extend_and_classify(g: &Graph) -> Result<ExtensionReport, GraphError> {
    g.validate_regular_even()?;
    let complement = g.complement();
    let matchings = oracle::perfect_matchings(&complement);
    let mut report = ExtensionReport {
        attempts: 0,
        class2: 0,
        zero_sum: 0,
        certified: 0,
        witness: None,
    };
    for m in matchings {
        let mut edges: Vec<Edge> = g.edges().to_vec();
        edges.extend(&m);
        let extended = Graph::from_edges(g.n_vertices(), edges)?;
        let c = classify(&extended, format!("+{m:?}"))?;
        report.attempts += 1;
        match c.verdict {
            Verdict::Class2 => report.class2 += 1,
            Verdict::ZeroSum => report.zero_sum += 1,
            Verdict::NonzeroCertified | Verdict::Factorable => {
                report.certified += 1;
                if report.witness.is_none() {
                    report.witness = Some((m, c));
                }
            }
        }
    }
    Ok(report)
}
