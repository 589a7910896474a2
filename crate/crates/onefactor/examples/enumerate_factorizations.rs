//! Walk the 1-factorizations of K6 one by one, with their factors and signs.
//!
//! ```bash
//! cargo run --example enumerate_factorizations
//! ```

use onefactor::engine::enumerate_factorizations;
use onefactor::graph::Graph;

fn main() {
    let g = Graph::complete(6);
    let mut index = 0;
    enumerate_factorizations(&g, |factors, sign| {
        index += 1;
        println!("factorization {index} (sign {sign:+}):");
        for factor in factors {
            println!("  {factor:?}");
        }
    })
    .unwrap();
    println!("K6 has {index} 1-factorizations; all carry the same sign.");
}
