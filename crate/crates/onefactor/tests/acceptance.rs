//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`).
//!
//! The slow full ten-vertex census (signed sums of the 8- and 9-regular
//! graphs take minutes) is `#[ignore]`d; run it with
//! `cargo test --release -p onefactor --test acceptance -- --ignored --nocapture`.

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use onefactor::engine::{self, weighted_sum};
use onefactor::generate::{connected_regular_graphs, random_cubic};
use onefactor::graph::Graph;
use onefactor::iso::{are_isomorphic, canonical_form};
use onefactor::nullstellensatz::{
    equal_leading_transfer, grid_coefficient, int, rat, symbolic_coefficient, FactoredPolynomial,
    LinearForm, ListSystem, Rat,
};
use onefactor::oracle::{self, TheoremCheck};
use onefactor::survey::{self, ScanOptions, Verdict};

fn criterion(number: u32, name: &str, f: impl FnOnce() + std::panic::UnwindSafe) {
    let result = std::panic::catch_unwind(f);
    match &result {
        Ok(()) => println!("criterion {number} ({name}): PASS"),
        Err(_) => println!("criterion {number} ({name}): FAIL"),
    }
    if let Err(e) = result {
        std::panic::resume_unwind(e);
    }
}

/// All connected regular graphs of even order up to 8 vertices.
fn corpus_8() -> &'static [Graph] {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut graphs = Vec::new();
        for n in [2usize, 4, 6, 8] {
            for k in 1..n {
                graphs.extend(connected_regular_graphs(n, k));
            }
        }
        graphs
    })
}

/// Theorem checks over the whole 8-vertex corpus, shared between criteria.
fn theorem_checks_8() -> &'static [(Graph, TheoremCheck)] {
    static CHECKS: OnceLock<Vec<(Graph, TheoremCheck)>> = OnceLock::new();
    CHECKS.get_or_init(|| {
        corpus_8()
            .par_iter()
            .map(|g| {
                let check = oracle::validate_sign_theorem(g, false).expect("corpus is desk scale");
                (g.clone(), check)
            })
            .collect()
    })
}

/// Fifty seeded random simple cubic graphs on 10 vertices.
fn cubic_10() -> &'static [Graph] {
    static CUBIC: OnceLock<Vec<Graph>> = OnceLock::new();
    CUBIC.get_or_init(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1fac);
        (0..50).map(|_| random_cubic(10, &mut rng)).collect()
    })
}

/// All connected regular graphs on 10 vertices, grouped by degree.
fn corpus_10() -> &'static BTreeMap<usize, Vec<Graph>> {
    static CORPUS: OnceLock<BTreeMap<usize, Vec<Graph>>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (2..=9).map(|k| (k, connected_regular_graphs(10, k))).collect()
    })
}

/// The smaller of the two class-2 graphs on 10 vertices: two near-`K5`
/// blocks joined by the bridge (4, 5).
fn bridged_cubic() -> Graph {
    Graph::from_edges(
        10,
        [
            (0, 1),
            (0, 4),
            (0, 2),
            (1, 2),
            (1, 3),
            (3, 4),
            (4, 5),
            (2, 3),
            (6, 7),
            (5, 6),
            (6, 8),
            (7, 8),
            (7, 9),
            (5, 9),
            (8, 9),
        ],
    )
    .unwrap()
}

/// The 4-regular class-2 graph on 10 vertices: two `K5`s, one edge moved to
/// join them.
fn two_blocks_quartic() -> Graph {
    Graph::from_edges(
        10,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 9),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (5, 6),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 8),
            (6, 9),
            (7, 8),
            (7, 9),
            (8, 9),
        ],
    )
    .unwrap()
}

/// The cubic zero-sum graph on 8 vertices, edges read off its drawing.
fn displayed_eight() -> Graph {
    Graph::from_edges(
        8,
        [
            (5, 6),
            (1, 2),
            (4, 7),
            (0, 3),
            (5, 7),
            (3, 6),
            (1, 4),
            (0, 2),
            (2, 5),
            (4, 6),
            (0, 1),
            (3, 7),
        ],
    )
    .unwrap()
}

/// Complement of the disjoint union of a triangle and a 5-cycle.
fn c3_c5_complement() -> Graph {
    let c3_c5 = Graph::from_edges(
        8,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
    )
    .unwrap();
    c3_c5.complement()
}

fn factorial(k: usize) -> BigInt {
    (1..=k as i64).map(BigInt::from).product()
}

#[test]
fn criterion_1_smallest_zero_sum() {
    criterion(1, "K3,3 signed sum", || {
        let start = Instant::now();
        let r = weighted_sum(&Graph::complete_bipartite(3, 3)).unwrap();
        assert_eq!(r.factorization_count, BigUint::from(2u32));
        assert_eq!(r.signed_sum, BigInt::from(0));
        assert!(start.elapsed().as_secs() < 1, "took {:?}", start.elapsed());
    });
}

#[test]
fn criterion_2_eight_vertex_zero_sum_census() {
    criterion(2, "8-vertex zero-sum census", || {
        let start = Instant::now();
        let lines: Vec<String> = (1..8)
            .flat_map(|k| connected_regular_graphs(8, k))
            .map(|g| g.to_graph6().unwrap())
            .collect();
        assert_eq!(lines.len(), 17);
        let report = survey::scan(&lines, ScanOptions { parallel: true, ..Default::default() });
        assert!(report.errors.is_empty());
        let zero_sum: Vec<Graph> = report
            .rows
            .iter()
            .filter(|row| row.verdict == Verdict::ZeroSum)
            .map(|row| onefactor::graph::parse_graph6(&row.id).unwrap())
            .collect();
        assert_eq!(zero_sum.len(), 3, "exactly three zero-sum graphs on 8 vertices");
        let targets = [c3_c5_complement(), displayed_eight(), displayed_eight().complement()];
        for target in &targets {
            assert!(
                zero_sum.iter().any(|g| are_isomorphic(g, target)),
                "missing zero-sum graph of degree {}",
                target.degree(0)
            );
        }
        assert!(start.elapsed().as_secs() < 60, "took {:?}", start.elapsed());
    });
}

/// Factorable and zero-sum counts for one degree of the 10-vertex corpus.
fn ten_vertex_degree_tally(k: usize) -> (usize, usize) {
    let graphs = &corpus_10()[&k];
    let results: Vec<_> = graphs
        .par_iter()
        .map(|g| engine::weighted_sum_auto(g).unwrap())
        .collect();
    let factorable = results.iter().filter(|r| !r.factorization_count.is_zero()).count();
    let zero_sum = results.iter().filter(|r| r.is_zero_sum()).count();
    (factorable, zero_sum)
}

#[test]
fn criterion_3_ten_vertex_census_through_degree_seven() {
    criterion(3, "10-vertex census, degrees 2-7", || {
        // all zero-sum graphs on 10 vertices have degree at most 7, so the
        // degree breakdown is fully decided here; the 8- and 9-regular
        // graphs are certified factorable by explicit factorizations, and
        // their (slow) signed sums run in the ignored full census
        let expected: BTreeMap<usize, (usize, usize)> = [
            (2, (1, 0)),
            (3, (17, 5)),
            (4, (58, 17)),
            (5, (60, 18)),
            (6, (21, 8)),
            (7, (5, 3)),
        ]
        .into();
        let mut factorable_total = 0;
        let mut zero_sum_total = 0;
        for (&k, &(want_factorable, want_zero)) in &expected {
            let (factorable, zero_sum) = ten_vertex_degree_tally(k);
            assert_eq!(
                (factorable, zero_sum),
                (want_factorable, want_zero),
                "degree {k} census"
            );
            factorable_total += factorable;
            zero_sum_total += zero_sum;
        }
        for k in [8, 9] {
            for g in &corpus_10()[&k] {
                assert!(engine::is_factorable(g).unwrap());
                factorable_total += 1;
            }
        }
        assert_eq!(factorable_total, 164, "factorable graphs on 10 vertices");
        assert_eq!(zero_sum_total, 51, "zero-sum graphs on 10 vertices");
    });
}

#[test]
#[ignore = "signed sums of the 8- and 9-regular graphs take minutes; run with --ignored"]
fn criterion_3_ten_vertex_census_full() {
    criterion(3, "10-vertex census, all degrees", || {
        let expected: BTreeMap<usize, (usize, usize)> = [
            (2, (1, 0)),
            (3, (17, 5)),
            (4, (58, 17)),
            (5, (60, 18)),
            (6, (21, 8)),
            (7, (5, 3)),
            (8, (1, 0)),
            (9, (1, 0)),
        ]
        .into();
        let mut factorable_total = 0;
        let mut zero_sum_total = 0;
        for (&k, &(want_factorable, want_zero)) in &expected {
            let start = Instant::now();
            let (factorable, zero_sum) = ten_vertex_degree_tally(k);
            println!(
                "degree {k}: {factorable} factorable, {zero_sum} zero-sum ({:?})",
                start.elapsed()
            );
            assert_eq!(
                (factorable, zero_sum),
                (want_factorable, want_zero),
                "degree {k} census"
            );
            factorable_total += factorable;
            zero_sum_total += zero_sum;
        }
        assert_eq!(factorable_total, 164, "factorable graphs on 10 vertices");
        assert_eq!(zero_sum_total, 51, "zero-sum graphs on 10 vertices");
    });
}

#[test]
fn criterion_4_class_2_detection() {
    criterion(4, "class-2 detection", || {
        let class2 = [Graph::petersen(), two_blocks_quartic(), bridged_cubic()];
        for g in &class2 {
            let r = weighted_sum(g).unwrap();
            assert!(r.factorization_count.is_zero(), "class-2 graph has no factorization");
        }
        let class2_forms: Vec<_> = class2.iter().map(canonical_form).collect();
        let mut found = 0;
        for n in [2usize, 4, 6, 8, 10] {
            for k in 1..n {
                for g in connected_regular_graphs(n, k) {
                    if n == 10 && class2_forms.contains(&canonical_form(&g)) {
                        found += 1;
                        assert!(!engine::is_factorable(&g).unwrap());
                    } else {
                        assert!(
                            engine::is_factorable(&g).unwrap(),
                            "unexpected class-2 graph: n={n} k={k}"
                        );
                    }
                }
            }
        }
        assert_eq!(found, 3, "the three class-2 graphs all occur in the corpus");
    });
}

#[test]
fn criterion_5_sign_theorem_cross_validation() {
    criterion(5, "permutation sign vs crossing parity", || {
        let mut colorings_checked = 0u64;
        for (g, check) in theorem_checks_8() {
            assert_eq!(
                check.mismatches,
                0,
                "sign identity broken on {}",
                g.to_graph6().unwrap()
            );
            colorings_checked += check.colorings;
        }
        // every connected regular even graph on <= 8 vertices, every
        // coloring; the total is pinned by the per-graph k!-relation of
        // criterion 7 (K8 alone contributes 6240 * 7! = 31449600)
        assert_eq!(colorings_checked, 31_767_031, "colorings checked");
    });
}

#[test]
fn criterion_6_engine_vs_oracle() {
    criterion(6, "engine vs brute force", || {
        for g in corpus_8() {
            let engine_result = weighted_sum(g).unwrap();
            let brute = oracle::brute_signsum(g).unwrap();
            assert_eq!(engine_result, brute, "mismatch on {}", g.to_graph6().unwrap());
        }
        for g in cubic_10() {
            let engine_result = weighted_sum(g).unwrap();
            let brute = oracle::brute_signsum(g).unwrap();
            assert_eq!(engine_result, brute, "mismatch on {}", g.to_graph6().unwrap());
        }
    });
}

#[test]
fn criterion_7_factorial_relation() {
    criterion(7, "k-factorial relation", || {
        for (g, check) in theorem_checks_8() {
            let k = g.validate_regular_even().unwrap();
            let r = weighted_sum(g).unwrap();
            let fact = factorial(k);
            assert_eq!(
                BigInt::from(check.colorings),
                fact.clone() * BigInt::from(r.factorization_count.clone())
            );
            assert_eq!(BigInt::from(check.sign_sum), fact * r.signed_sum);
        }
        for g in cubic_10() {
            let check = oracle::validate_sign_theorem(g, false).unwrap();
            let r = weighted_sum(g).unwrap();
            assert_eq!(
                BigInt::from(check.colorings),
                BigInt::from(6) * BigInt::from(r.factorization_count.clone())
            );
            assert_eq!(BigInt::from(check.sign_sum), BigInt::from(6) * r.signed_sum);
        }
    });
}

/// Random factored polynomial with at most `max_vars` variables and
/// `max_factors` factors.
fn random_polynomial(rng: &mut ChaCha8Rng, max_vars: usize, max_factors: usize) -> FactoredPolynomial {
    let n_vars = rng.random_range(1..=max_vars);
    let n_factors = rng.random_range(1..=max_factors);
    let factors: Vec<LinearForm> = (0..n_factors)
        .map(|_| loop {
            let terms: Vec<(usize, Rat)> =
                (0..n_vars).map(|v| (v, int(rng.random_range(-3..=3)))).collect();
            let constant = int(rng.random_range(-3..=3));
            if let Ok(f) = LinearForm::new(terms, constant) {
                break f;
            }
        })
        .collect();
    FactoredPolynomial::new(n_vars, factors).unwrap()
}

/// Random list system meeting the degree bound for `p`.
fn random_lists(rng: &mut ChaCha8Rng, p: &FactoredPolynomial) -> ListSystem {
    let n_vars = p.n_vars();
    let mut sizes = vec![1usize; n_vars];
    let mut total = 0;
    while total < p.degree() {
        sizes[rng.random_range(0..n_vars)] += 1;
        total += 1;
    }
    for _ in 0..rng.random_range(0..=2) {
        sizes[rng.random_range(0..n_vars)] += 1;
    }
    let lists = sizes
        .iter()
        .map(|&sz| {
            let mut vals: Vec<Rat> = Vec::new();
            while vals.len() < sz {
                let v = rat(rng.random_range(-6..=6), rng.random_range(1..=3));
                if !vals.contains(&v) {
                    vals.push(v);
                }
            }
            vals
        })
        .collect();
    ListSystem::new(lists).unwrap()
}

#[test]
fn criterion_8_nullstellensatz() {
    criterion(8, "grid sums vs expansion", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0ef);
        for case in 0..1000 {
            let p = random_polynomial(&mut rng, 5, 6);
            let ls = random_lists(&mut rng, &p);
            let grid = grid_coefficient(&p, &ls).unwrap();
            let symbolic = symbolic_coefficient(&p, &ls.degrees()).unwrap();
            assert_eq!(grid, symbolic, "case {case}");
        }
        // transfer: same variable parts, fresh constants and fresh lists of
        // the same sizes must give the same sum
        for case in 0..100 {
            let p = random_polynomial(&mut rng, 4, 5);
            let ls = random_lists(&mut rng, &p);
            let shifted_factors: Vec<LinearForm> = p
                .factors()
                .iter()
                .map(|f| {
                    LinearForm::new(
                        f.coeffs().iter().cloned(),
                        int(rng.random_range(-5..=5)),
                    )
                    .unwrap()
                })
                .collect();
            let p_tilde = FactoredPolynomial::new(p.n_vars(), shifted_factors).unwrap();
            let fresh_lists = ListSystem::new(
                ls.lists()
                    .iter()
                    .map(|l| {
                        let mut vals: Vec<Rat> = Vec::new();
                        while vals.len() < l.len() {
                            let v = rat(rng.random_range(-9..=9), rng.random_range(1..=2));
                            if !vals.contains(&v) {
                                vals.push(v);
                            }
                        }
                        vals
                    })
                    .collect(),
            )
            .unwrap();
            let (a, b, equal) = equal_leading_transfer(&p, &ls, &p_tilde, &fresh_lists).unwrap();
            assert!(equal, "case {case}: {a} vs {b}");
        }
    });
}

#[test]
fn criterion_9_relabeling_invariance() {
    criterion(9, "relabeling invariance", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9e1a);
        let corpus = corpus_8();
        for _ in 0..100 {
            let g = &corpus[rng.random_range(0..corpus.len())];
            let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
            perm.shuffle(&mut rng);
            let relabeled = g.relabel(&perm).unwrap();
            let base = weighted_sum(g).unwrap();
            let moved = weighted_sum(&relabeled).unwrap();
            assert_eq!(base.factorization_count, moved.factorization_count);
            assert_eq!(base.signed_sum.abs(), moved.signed_sum.abs());
        }
    });
}

/// The verdicts the three class-2 graphs get once a suitable 1-factor is
/// added: the extension can always be chosen with a nonzero signed sum.
#[test]
fn class_2_graphs_extend_to_certified() {
    for g in [Graph::petersen(), two_blocks_quartic(), bridged_cubic()] {
        let report = survey::extend_and_classify(&g).unwrap();
        assert!(
            report.certified > 0,
            "no certifying extension for a class-2 graph with {} attempts",
            report.attempts
        );
    }
}

/// The three 8-vertex zero-sum graphs have vanishing sums directly.
#[test]
fn eight_vertex_zero_sum_graphs_directly() {
    for (name, g) in [
        ("complement of C3+C5", c3_c5_complement()),
        ("displayed graph", displayed_eight()),
        ("its complement", displayed_eight().complement()),
    ] {
        let r = weighted_sum(&g).unwrap();
        assert!(!r.factorization_count.is_zero(), "{name} is factorable");
        assert!(r.signed_sum.is_zero(), "{name} has zero sum");
    }
}

/// Edge parity: `(0,5)` bridges four unmatched vertices, and friends.
#[test]
fn cubic_10_graphs_match_count_only_mode() {
    for g in cubic_10().iter().take(10) {
        let full = weighted_sum(g).unwrap();
        let count = engine::count_factorizations(g).unwrap();
        assert_eq!(full.factorization_count, count);
    }
}
