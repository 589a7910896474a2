//! Cross-checking the engine against the brute-force oracle, and both sign
//! definitions against each other, on desk-scale graphs.
//!
//! ```bash
//! cargo run --release --example oracle_check
//! ```

use num_bigint::BigInt;
use onefactor::graph::Graph;
use onefactor::{oracle, weighted_sum};

fn main() {
    for (name, g) in [
        ("K4", Graph::complete(4)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("K6", Graph::complete(6)),
        ("Petersen", Graph::petersen()),
    ] {
        let k = g.validate_regular_even().unwrap();
        let engine = weighted_sum(&g).unwrap();
        let brute = oracle::brute_signsum(&g).unwrap();
        assert_eq!(engine, brute);

        // every proper coloring satisfies
        //   sgn(c, c0) * (-1)^intt(c0) = (-1)^intt(c)
        // and the coloring totals are k! times the factorization totals
        let check = oracle::validate_sign_theorem(&g, false).unwrap();
        assert_eq!(check.mismatches, 0);
        let fact: BigInt = (1..=k as i64).map(BigInt::from).product();
        assert_eq!(BigInt::from(check.colorings), fact.clone() * BigInt::from(engine.factorization_count.clone()));
        assert_eq!(BigInt::from(check.sign_sum), fact * engine.signed_sum.clone());

        println!(
            "{name}: engine = brute force = ({}, {}); {} colorings, 0 sign mismatches",
            engine.factorization_count, engine.signed_sum, check.colorings
        );
    }
}
