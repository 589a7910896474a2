use onefactor::{generate, engine};
use std::io::Write;
use std::time::Instant;
fn main() {
    for k in [7usize, 8, 9] {
        let graphs = generate::connected_regular_graphs(10, k);
        for (i, g) in graphs.iter().enumerate() {
            let t = Instant::now();
            let r = engine::weighted_sum_parallel(g).unwrap();
            println!("k={k} #{i}: count {} sum {} in {:?}", r.factorization_count, r.signed_sum, t.elapsed());
            std::io::stdout().flush().unwrap();
        }
    }
}
