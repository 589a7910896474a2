//! The crossing parity of single 1-factors, computed three ways: pair by
//! pair, in a fixed order against subsequent edges, and incrementally from
//! the number of bridged unmatched vertices.
//!
//! ```bash
//! cargo run --example factor_signs
//! ```

use onefactor::matching::{
    edge_crossing, factor_sign, parity_static_check, OrderedFactor, UnmatchedList,
};

fn main() {
    // chords (0,3), (1,4), (2,5) on a 6-cycle: every pair crosses
    let factor = [(0, 3), (1, 4), (2, 5)];
    let (intt, sign) = factor_sign(&factor, 6).unwrap();
    println!("factor {factor:?}");
    println!("  crossings = {intt}, sign = {sign:+}");
    println!("  via subsequent-edge counts: {}", parity_static_check(&factor, 6).unwrap());

    for (e, f) in [((0, 2), (1, 3)), ((0, 1), (2, 3)), ((0, 3), (1, 2))] {
        println!("  {e:?} x {f:?} -> {}", edge_crossing(e, f).unwrap());
    }

    // incremental: sign of each new edge is (-1)^(unmatched vertices bridged)
    let mut unmatched = UnmatchedList::new(6);
    let mut product = 1;
    let mut ordered = OrderedFactor::new(6);
    for (i, j) in factor {
        let s = unmatched.incremental_edge_sign(i, j).unwrap();
        println!("  adding ({i},{j}): bridged sign {s:+}");
        product *= s;
        unmatched.remove_pair(i, j).unwrap();
        ordered.push((i, j)).unwrap();
    }
    println!("  product of incremental signs = {product:+}");
    assert_eq!(product, sign);
    assert_eq!(ordered.sign(), sign);
    assert_eq!(ordered.intt(), intt);
}
