//! Signed sums over all 1-factorizations of a few named graphs.
//!
//! ```bash
//! cargo run --release --example signsum
//! ```

use onefactor::graph::Graph;
use onefactor::weighted_sum;

fn main() {
    let graphs = [
        ("K2", Graph::from_edges(2, [(0, 1)]).unwrap()),
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
        ("C6", Graph::cycle(6)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("K6", Graph::complete(6)),
        ("Petersen", Graph::petersen()),
        ("K8", Graph::complete(8)),
    ];
    println!("{:<10} {:>6} {:>14} {:>12}", "graph", "degree", "factorizations", "signed sum");
    for (name, g) in graphs {
        let k = g.validate_regular_even().unwrap();
        let r = weighted_sum(&g).unwrap();
        println!(
            "{:<10} {:>6} {:>14} {:>12}",
            name,
            k,
            r.factorization_count.to_string(),
            r.signed_sum.to_string()
        );
    }
    println!();
    println!("a nonzero signed sum certifies k-list edge colorability;");
    println!("K3,3 is the smallest graph where the certificate is silent.");
}
