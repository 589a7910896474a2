//! Reading and writing the two supported graph formats.
//!
//! ```bash
//! cargo run --example graph_formats
//! ```

use onefactor::graph::{parse_adjacency, parse_graph6, Graph};

fn main() {
    // graph6: the interchange format of the regular-graph collections
    let k4 = parse_graph6("C~").unwrap();
    println!("C~ decodes to K4 with edges {:?}", k4.edges());
    println!("K6 encodes to {}", Graph::complete(6).to_graph6().unwrap());
    println!("Petersen encodes to {}", Graph::petersen().to_graph6().unwrap());

    // bracket adjacency: per vertex, the neighbors with larger index
    let k6 = parse_adjacency("[[1,2,3,4,5],[2,3,4,5],[3,4,5],[4,5],[5],[]]").unwrap();
    assert_eq!(k6, Graph::complete(6));
    println!("bracket form of the Petersen graph: {}", Graph::petersen().to_successor());

    // the vertex order matters: individual signs depend on it, so parsers
    // never renumber; relabel explicitly when you want a different order
    let relabeled = Graph::complete(6).relabel(&[3, 1, 4, 0, 5, 2]).unwrap();
    let a = onefactor::weighted_sum(&Graph::complete(6)).unwrap();
    let b = onefactor::weighted_sum(&relabeled).unwrap();
    println!(
        "counts and |sum| are order-independent: ({}, {}) vs ({}, {})",
        a.factorization_count, a.signed_sum, b.factorization_count, b.signed_sum
    );
}
