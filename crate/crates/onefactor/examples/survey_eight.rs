//! Classify every connected regular graph on 8 vertices and report the
//! three whose signed sums vanish.
//!
//! ```bash
//! cargo run --release --example survey_eight
//! ```

use onefactor::generate::connected_regular_graphs;
use onefactor::survey::{scan, ScanOptions, Verdict};

fn main() {
    let lines: Vec<String> = (2..8)
        .flat_map(|k| connected_regular_graphs(8, k))
        .map(|g| g.to_graph6().unwrap())
        .collect();
    let report = scan(&lines, ScanOptions { parallel: true, ..Default::default() });
    print!("{}", report.to_table());
    println!();
    println!("zero-sum graphs:");
    for row in report.rows.iter().filter(|r| r.verdict == Verdict::ZeroSum) {
        println!("  {} (degree {}, {} factorizations)", row.id, row.k, row.count);
    }
}
