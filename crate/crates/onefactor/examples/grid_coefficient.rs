//! Coefficient extraction from grid evaluations, exactly, over the
//! rationals.
//!
//! ```bash
//! cargo run --example grid_coefficient
//! ```

use onefactor::graph::Graph;
use onefactor::nullstellensatz::{
    edge_distance_polynomial, equal_leading_transfer, find_list_coloring, graph_polynomial,
    grid_coefficient, int, symbolic_coefficient, FactoredPolynomial, LinearForm, ListSystem,
};

fn main() {
    // coefficient of x1*x2 in (x1 - x2)^2 read off the grid {0,1}^2
    let square = FactoredPolynomial::new(
        2,
        vec![
            LinearForm::difference(0, 1, int(0)).unwrap(),
            LinearForm::difference(0, 1, int(0)).unwrap(),
        ],
    )
    .unwrap();
    let grid = ListSystem::from_ints(&[&[0, 1], &[0, 1]]).unwrap();
    println!("[x1*x2] (x1-x2)^2 = {}", grid_coefficient(&square, &grid).unwrap());
    println!("   by expansion:   {}", symbolic_coefficient(&square, &[1, 1]).unwrap());

    // the same coefficient from any grid of the same shape
    let moved = ListSystem::from_ints(&[&[3, 7], &[-1, 2]]).unwrap();
    let (a, b, equal) = equal_leading_transfer(&square, &grid, &square, &moved).unwrap();
    println!("grid independence: {a} = {b} ({equal})");

    // edge labels shift the factors: x0 - x1 - 1 for a labeled K2
    let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
    let labeled = edge_distance_polynomial(&k2, &[int(1)]).unwrap();
    let lists = ListSystem::from_ints(&[&[0, 1], &[0]]).unwrap();
    println!("[x1] (x1 - x2 - 1) = {}", grid_coefficient(&labeled, &lists).unwrap());

    // a nonzero grid sum of the graph polynomial certifies list coloring;
    // C4 with arbitrary 2-lists always colors (even cycles are 2-choosable)
    let c4 = Graph::cycle(4);
    let p = graph_polynomial(&c4);
    let lists = ListSystem::from_ints(&[&[1, 5], &[2, 5], &[1, 2], &[3, 4]]).unwrap();
    let coeff = grid_coefficient(&p, &lists).unwrap();
    println!("C4 over {:?}: sum {coeff}", [[1, 5], [2, 5], [1, 2], [3, 4]]);
    let coloring = find_list_coloring(&c4, &lists).unwrap();
    let rendered: Vec<String> = coloring.iter().map(|x| x.to_string()).collect();
    println!("   witness coloring: {rendered:?}");
}
