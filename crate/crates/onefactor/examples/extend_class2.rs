//! The signed-sum certificate says nothing about class-2 graphs, but adding
//! a suitable 1-factor can produce a certified class-1 extension. Try every
//! perfect matching of the Petersen graph's complement.
//!
//! ```bash
//! cargo run --release --example extend_class2
//! ```

use onefactor::graph::Graph;
use onefactor::survey::extend_and_classify;

fn main() {
    let petersen = Graph::petersen();
    let report = extend_and_classify(&petersen).unwrap();
    println!(
        "Petersen + complement matchings: {} tried, {} certified, {} zero-sum, {} class 2",
        report.attempts, report.certified, report.zero_sum, report.class2
    );
    let (matching, c) = report.witness.expect("a certifying extension exists");
    println!("first certifying 1-factor: {matching:?}");
    println!(
        "extended graph: degree {}, {} factorizations, signed sum {}",
        c.k,
        c.count,
        c.sum.unwrap()
    );
}
