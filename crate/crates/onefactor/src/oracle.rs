//! Brute-force reference implementations used to cross-check the enumeration
//! engine on small graphs.
//!
//! Everything here is deliberately naive and kept independent of the
//! incremental machinery in [`crate::matching`] and [`crate::engine`]: the
//! chord-crossing test is re-implemented privately, matchings are enumerated
//! over plain `used` flags, and signs of colorings are computed two ways —
//! as a product of permutation signs relative to a reference coloring, and
//! as the crossing parity of the color classes. The two must agree; that is
//! the identity the whole engine rests on.
//!
//! The enumerations are exponential. Calls are guarded to desk scale
//! (at most 8 vertices, or degree at most 3 on 10 vertices); the `_unguarded`
//! variants opt out.

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::engine::SignSumResult;
use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("instance too large for the brute-force oracle (n = {n}, k = {k}); pass force to override")]
    ScaleGuard { n: usize, k: usize },
    #[error("coloring has {got} entries for {expected} edges")]
    WrongEdgeCount { expected: usize, got: usize },
    #[error("improper coloring: edges ({0}, {1}) and ({2}, {3}) share a vertex and a color")]
    Improper(usize, usize, usize, usize),
    #[error("color {color} out of range 1..={k}")]
    ColorRange { color: u8, k: usize },
    #[error("colorings use different numbers of colors: {0} vs {1}")]
    ColorCountMismatch(usize, usize),
}

/// A proper edge coloring with colors `1..=k`, indexed by edge position in
/// [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    /// Wraps a color vector after checking range and properness on `g`.
    pub fn new(g: &Graph, k: usize, colors: Vec<u8>) -> Result<Self, OracleError> {
        if colors.len() != g.n_edges() {
            return Err(OracleError::WrongEdgeCount { expected: g.n_edges(), got: colors.len() });
        }
        for &c in &colors {
            if c == 0 || c as usize > k {
                return Err(OracleError::ColorRange { color: c, k });
            }
        }
        let c = EdgeColoring { k, colors };
        c.check_proper(g)?;
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Color of the edge with index `e`.
    pub fn color(&self, e: usize) -> u8 {
        self.colors[e]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    fn check_proper(&self, g: &Graph) -> Result<(), OracleError> {
        let edges = g.edges();
        for a in 0..edges.len() {
            for b in a + 1..edges.len() {
                let (i, j) = edges[a];
                let (p, q) = edges[b];
                if (i == p || i == q || j == p || j == q) && self.colors[a] == self.colors[b] {
                    return Err(OracleError::Improper(i, j, p, q));
                }
            }
        }
        Ok(())
    }
}

fn check_scale(n: usize, k: usize, force: bool) -> Result<(), OracleError> {
    if force || n <= 8 || (n <= 10 && k <= 3) {
        Ok(())
    } else {
        Err(OracleError::ScaleGuard { n, k })
    }
}

/// The oracle's own chord-interleaving test; deliberately not shared with
/// `matching::edge_crossing`.
fn interleaves(e: Edge, f: Edge) -> bool {
    let (i, j) = e;
    let (p, q) = f;
    i < p && p < j && j < q || p < i && i < q && q < j
}

/// Visits every proper edge coloring `E -> {1..k}` of the `k`-regular graph
/// `g` exactly once, in lexicographic color-vector order, and returns how
/// many there were.
pub fn enumerate_colorings(
    g: &Graph,
    k: usize,
    visit: impl FnMut(&EdgeColoring),
) -> Result<u64, OracleError> {
    check_scale(g.n_vertices(), k, false)?;
    enumerate_colorings_unguarded(g, k, visit)
}

/// [`enumerate_colorings`] without the scale guard.
pub fn enumerate_colorings_unguarded(
    g: &Graph,
    k: usize,
    mut visit: impl FnMut(&EdgeColoring),
) -> Result<u64, OracleError> {
    let deg = g.validate_regular_even()?;
    if deg != k {
        return Err(GraphError::NotRegular { u: 0, du: deg, v: 0, dv: k }.into());
    }
    if k > 15 {
        return Err(OracleError::ScaleGuard { n: g.n_vertices(), k });
    }
    let edges = g.edges();
    let mut used = vec![0u16; g.n_vertices()]; // color bitmask per vertex
    let mut scratch = EdgeColoring { k, colors: vec![0; edges.len()] };
    let mut count = 0u64;
    fn rec(
        e: usize,
        edges: &[Edge],
        k: usize,
        used: &mut [u16],
        scratch: &mut EdgeColoring,
        count: &mut u64,
        visit: &mut impl FnMut(&EdgeColoring),
    ) {
        if e == edges.len() {
            *count += 1;
            visit(scratch);
            return;
        }
        let (u, v) = edges[e];
        let taken = used[u] | used[v];
        for c in 1..=k as u8 {
            let bit = 1u16 << c;
            if taken & bit == 0 {
                used[u] |= bit;
                used[v] |= bit;
                scratch.colors[e] = c;
                rec(e + 1, edges, k, used, scratch, count, visit);
                used[u] &= !bit;
                used[v] &= !bit;
            }
        }
    }
    rec(0, edges, k, &mut used, &mut scratch, &mut count, &mut visit);
    Ok(count)
}

/// Collects all proper edge colorings; convenience for small cases.
pub fn collect_colorings(g: &Graph, k: usize) -> Result<Vec<EdgeColoring>, OracleError> {
    let mut out = Vec::new();
    enumerate_colorings(g, k, |c| out.push(c.clone()))?;
    Ok(out)
}

/// Incident edge indices per vertex, in edge-index order.
fn incidence(g: &Graph) -> Vec<Vec<usize>> {
    let mut inc = vec![Vec::new(); g.n_vertices()];
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        inc[i].push(e);
        inc[j].push(e);
    }
    inc
}

/// Number of inversions of a permutation given as images.
fn inversions(perm: &[usize]) -> u64 {
    let mut inv = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    inv
}

/// Sign of `c` relative to the reference coloring `c0`: at every vertex the
/// two colorings induce bijections from the incident edges onto the colors;
/// compose one with the inverse of the other and multiply the permutation
/// signs over all vertices.
pub fn sign_vs_reference(g: &Graph, c: &EdgeColoring, c0: &EdgeColoring) -> Result<i32, OracleError> {
    if c.k != c0.k {
        return Err(OracleError::ColorCountMismatch(c.k, c0.k));
    }
    c.check_proper(g)?;
    c0.check_proper(g)?;
    if c.colors.len() != g.n_edges() || c0.colors.len() != g.n_edges() {
        return Err(OracleError::WrongEdgeCount { expected: g.n_edges(), got: c.colors.len() });
    }
    let inc = incidence(g);
    let mut sign = 1;
    let mut pos0 = vec![usize::MAX; c.k + 1];
    let mut perm = Vec::with_capacity(c.k);
    for v in 0..g.n_vertices() {
        for (slot, &e) in inc[v].iter().enumerate() {
            pos0[c0.colors[e] as usize] = slot;
        }
        perm.clear();
        perm.extend(inc[v].iter().map(|&e| pos0[c.colors[e] as usize]));
        if inversions(&perm) % 2 == 1 {
            sign = -sign;
        }
    }
    Ok(sign)
}

/// Total number of crossings between same-colored edges, vertices on a cycle.
pub fn crossing_count(g: &Graph, c: &EdgeColoring) -> Result<u64, OracleError> {
    c.check_proper(g)?;
    let edges = g.edges();
    let mut total = 0u64;
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if c.colors[a] == c.colors[b] && interleaves(edges[a], edges[b]) {
                total += 1;
            }
        }
    }
    Ok(total)
}

/// `(-1)` to the number of monochromatic crossings; the absolute sign of a
/// coloring once the reference coloring is pinned to its own crossing parity.
pub fn crossing_sign(g: &Graph, c: &EdgeColoring) -> Result<i32, OracleError> {
    Ok(if crossing_count(g, c)? % 2 == 0 { 1 } else { -1 })
}

/// All perfect matchings of `g`, each sorted by smaller endpoint; the list is
/// ordered lexicographically.
pub fn perfect_matchings(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    if n % 2 != 0 {
        return out;
    }
    let mut used = vec![false; n];
    let mut current = Vec::with_capacity(n / 2);
    fn rec(g: &Graph, used: &mut [bool], current: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        let Some(v) = used.iter().position(|&u| !u) else {
            out.push(current.clone());
            return;
        };
        used[v] = true;
        for &w in g.neighbors(v) {
            if w > v && !used[w] {
                used[w] = true;
                current.push((v, w));
                rec(g, used, current, out);
                current.pop();
                used[w] = false;
            }
        }
        used[v] = false;
    }
    rec(g, &mut used, &mut current, &mut out);
    out
}

/// Exhaustive signed sum over all 1-factorizations, assembled as unordered
/// sets of perfect matchings; each factorization's sign is recomputed from
/// scratch as the crossing parity of its factors.
pub fn brute_signsum(g: &Graph) -> Result<SignSumResult, OracleError> {
    let k = g.validate_regular_even()?;
    check_scale(g.n_vertices(), k, false)?;
    brute_signsum_unguarded(g)
}

/// [`brute_signsum`] without the scale guard.
pub fn brute_signsum_unguarded(g: &Graph) -> Result<SignSumResult, OracleError> {
    g.validate_regular_even()?;
    let m = g.n_edges();
    assert!(m <= 64, "edge bitmask limited to 64 edges");
    let matchings = perfect_matchings(g);
    // edge-index bitmask and crossing parity per matching
    let edge_index = |e: Edge| g.edges().binary_search(&e).expect("matching edge in graph");
    let masks: Vec<u64> = matchings
        .iter()
        .map(|f| f.iter().fold(0u64, |acc, &e| acc | 1 << edge_index(e)))
        .collect();
    let parities: Vec<u8> = matchings
        .iter()
        .map(|f| {
            let mut intt = 0u64;
            for a in 0..f.len() {
                for b in a + 1..f.len() {
                    intt += u64::from(interleaves(f[a], f[b]));
                }
            }
            (intt % 2) as u8
        })
        .collect();
    let full: u64 = if m == 64 { u64::MAX } else { (1 << m) - 1 };
    let mut count: u128 = 0;
    let mut sum: i128 = 0;
    // choose factors with strictly increasing list index; each unordered set
    // appears once. The next factor must cover the lowest uncovered edge.
    fn rec(
        start: usize,
        covered: u64,
        parity: u8,
        full: u64,
        masks: &[u64],
        parities: &[u8],
        count: &mut u128,
        sum: &mut i128,
    ) {
        if covered == full {
            *count += 1;
            *sum += if parity == 0 { 1 } else { -1 };
            return;
        }
        let lowest = (!covered & full).trailing_zeros();
        for idx in start..masks.len() {
            let mask = masks[idx];
            if mask & covered == 0 && mask >> lowest & 1 == 1 {
                rec(idx + 1, covered | mask, parity ^ parities[idx], full, masks, parities, count, sum);
            }
        }
    }
    rec(0, 0, 0, full, &masks, &parities, &mut count, &mut sum);
    Ok(SignSumResult {
        factorization_count: BigUint::from(count),
        signed_sum: BigInt::from(sum),
    })
}

/// Outcome of streaming every proper coloring through both sign definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    /// Number of proper edge colorings.
    pub colorings: u64,
    /// Colorings where the permutation-product sign disagreed with the
    /// crossing parity. Zero unless something is broken.
    pub mismatches: u64,
    /// Sum of the crossing signs over all colorings.
    pub sign_sum: i128,
    /// Crossing sign of the reference coloring (the first one enumerated).
    pub reference_sign: i32,
}

/// For every proper coloring `c`, checks that the sign relative to the first
/// coloring `c0`, times the crossing sign of `c0`, equals the crossing sign
/// of `c`; also accumulates the total signed count used by the `k!` identity.
///
/// The per-coloring work is the naive recomputation; only the enumeration is
/// fanned out over subtrees of fixed color prefixes, since the tallies are
/// order-independent.
pub fn validate_sign_theorem(g: &Graph, force: bool) -> Result<TheoremCheck, OracleError> {
    use rayon::prelude::*;

    let k = g.validate_regular_even()?;
    check_scale(g.n_vertices(), k, force)?;
    if k > 15 {
        return Err(OracleError::ScaleGuard { n: g.n_vertices(), k });
    }
    let n = g.n_vertices();
    let edges = g.edges();
    let m = edges.len();
    let inc = incidence(g);
    // crossing pair list, precomputed once: pairs of edge indices that
    // interleave (sign of c = parity of those with equal colors)
    let mut crossing_pairs = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if interleaves(edges[a], edges[b]) {
                crossing_pairs.push((a, b));
            }
        }
    }
    // reference coloring: the first leaf of the enumeration
    let mut c0: Option<EdgeColoring> = None;
    enumerate_first(edges, k, &mut c0);
    let Some(c0) = c0 else {
        return Ok(TheoremCheck { colorings: 0, mismatches: 0, sign_sum: 0, reference_sign: 1 });
    };
    // position of each color within each vertex's incident edges under c0,
    // flattened with stride k + 1
    let mut pos0 = vec![0u8; n * (k + 1)];
    for v in 0..n {
        for (slot, &e) in inc[v].iter().enumerate() {
            pos0[v * (k + 1) + c0.colors[e] as usize] = slot as u8;
        }
    }
    let c0_cross = {
        let mut cross = 0u64;
        for &(a, b) in &crossing_pairs {
            cross += u64::from(c0.colors[a] == c0.colors[b]);
        }
        cross
    };
    let c0_sign: i32 = if c0_cross % 2 == 0 { 1 } else { -1 };

    // fan out over fixed prefixes of the first few edges
    let prefix_len = m.min(if m > 12 { 3 } else { 0 });
    let mut prefixes: Vec<(Vec<u16>, Vec<u8>)> = Vec::new();
    collect_prefixes(edges, k, prefix_len, &mut vec![0u16; n], &mut vec![0u8; m], &mut prefixes);
    let check_subtree = |(used, colors): &(Vec<u16>, Vec<u8>)| -> TheoremCheck {
        let mut check =
            TheoremCheck { colorings: 0, mismatches: 0, sign_sum: 0, reference_sign: c0_sign };
        let mut used = used.clone();
        let mut scratch = EdgeColoring { k, colors: colors.clone() };
        let mut perm = vec![0u8; k];
        enumerate_from(edges, k, prefix_len, &mut used, &mut scratch, &mut |c: &EdgeColoring| {
            let mut cross = 0u64;
            for &(a, b) in &crossing_pairs {
                cross += u64::from(c.colors[a] == c.colors[b]);
            }
            let cross_sign: i32 = if cross % 2 == 0 { 1 } else { -1 };
            let mut rel_sign = 1;
            for v in 0..n {
                for (slot, &e) in inc[v].iter().enumerate() {
                    perm[slot] = pos0[v * (k + 1) + c.colors[e] as usize];
                }
                let mut inv = 0u32;
                for a in 0..k {
                    for b in a + 1..k {
                        inv += u32::from(perm[a] > perm[b]);
                    }
                }
                if inv % 2 == 1 {
                    rel_sign = -rel_sign;
                }
            }
            if rel_sign * c0_sign != cross_sign {
                check.mismatches += 1;
            }
            check.sign_sum += cross_sign as i128;
            check.colorings += 1;
        });
        check
    };
    let check = prefixes
        .par_iter()
        .map(check_subtree)
        .reduce(
            || TheoremCheck { colorings: 0, mismatches: 0, sign_sum: 0, reference_sign: c0_sign },
            |a, b| TheoremCheck {
                colorings: a.colorings + b.colorings,
                mismatches: a.mismatches + b.mismatches,
                sign_sum: a.sign_sum + b.sign_sum,
                reference_sign: c0_sign,
            },
        );
    Ok(check)
}

/// Proper color assignments for `edges[from..]`, all earlier edges fixed.
fn enumerate_from(
    edges: &[Edge],
    k: usize,
    from: usize,
    used: &mut [u16],
    scratch: &mut EdgeColoring,
    visit: &mut impl FnMut(&EdgeColoring),
) {
    if from == edges.len() {
        visit(scratch);
        return;
    }
    let (u, v) = edges[from];
    let taken = used[u] | used[v];
    for c in 1..=k as u8 {
        let bit = 1u16 << c;
        if taken & bit == 0 {
            used[u] |= bit;
            used[v] |= bit;
            scratch.colors[from] = c;
            enumerate_from(edges, k, from + 1, used, scratch, visit);
            used[u] &= !bit;
            used[v] &= !bit;
        }
    }
}

/// First proper coloring in lexicographic order, if any.
fn enumerate_first(edges: &[Edge], k: usize, out: &mut Option<EdgeColoring>) {
    let n = edges.iter().map(|&(_, j)| j + 1).max().unwrap_or(0);
    let mut used = vec![0u16; n];
    let mut scratch = EdgeColoring { k, colors: vec![0; edges.len()] };
    fn rec(
        e: usize,
        edges: &[Edge],
        k: usize,
        used: &mut [u16],
        scratch: &mut EdgeColoring,
        out: &mut Option<EdgeColoring>,
    ) -> bool {
        if e == edges.len() {
            *out = Some(scratch.clone());
            return true;
        }
        let (u, v) = edges[e];
        let taken = used[u] | used[v];
        for c in 1..=k as u8 {
            let bit = 1u16 << c;
            if taken & bit == 0 {
                used[u] |= bit;
                used[v] |= bit;
                scratch.colors[e] = c;
                if rec(e + 1, edges, k, used, scratch, out) {
                    return true;
                }
                used[u] &= !bit;
                used[v] &= !bit;
            }
        }
        false
    }
    if edges.is_empty() {
        *out = Some(scratch);
        return;
    }
    rec(0, edges, k, &mut used, &mut scratch, out);
}

/// All proper prefixes on `edges[..len]`, as `(used-masks, colors)` pairs.
fn collect_prefixes(
    edges: &[Edge],
    k: usize,
    len: usize,
    used: &mut Vec<u16>,
    colors: &mut Vec<u8>,
    out: &mut Vec<(Vec<u16>, Vec<u8>)>,
) {
    fn rec(
        e: usize,
        len: usize,
        edges: &[Edge],
        k: usize,
        used: &mut Vec<u16>,
        colors: &mut Vec<u8>,
        out: &mut Vec<(Vec<u16>, Vec<u8>)>,
    ) {
        if e == len {
            out.push((used.clone(), colors.clone()));
            return;
        }
        let (u, v) = edges[e];
        let taken = used[u] | used[v];
        for c in 1..=k as u8 {
            let bit = 1u16 << c;
            if taken & bit == 0 {
                used[u] |= bit;
                used[v] |= bit;
                colors[e] = c;
                rec(e + 1, len, edges, k, used, colors, out);
                used[u] &= !bit;
                used[v] &= !bit;
            }
        }
    }
    rec(0, len, edges, k, used, colors, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn coloring_counts() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(enumerate_colorings(&k2, 1, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_colorings(&Graph::complete(4), 3, |_| {}).unwrap(), 6);
        assert_eq!(enumerate_colorings(&Graph::petersen(), 3, |_| {}).unwrap(), 0);
    }

    #[test]
    fn scale_guard() {
        // 4-regular on 10 vertices is past the guard
        let g = Graph::cycle(10).complement().complement(); // placeholder to own a graph
        drop(g);
        let mut edges = Vec::new();
        for i in 0..10 {
            edges.push((i, (i + 1) % 10));
            edges.push((i, (i + 2) % 10));
        }
        let g = Graph::from_edges(10, edges.into_iter().map(|(a, b)| (a.min(b), a.max(b)))).unwrap();
        assert!(g.is_regular(4));
        assert!(matches!(
            enumerate_colorings(&g, 4, |_| {}),
            Err(OracleError::ScaleGuard { n: 10, k: 4 })
        ));
        assert!(enumerate_colorings_unguarded(&g, 4, |_| {}).is_ok());
        assert!(matches!(brute_signsum(&g), Err(OracleError::ScaleGuard { .. })));
    }

    #[test]
    fn sign_vs_reference_basics() {
        let g = Graph::complete(4);
        let cs = collect_colorings(&g, 3).unwrap();
        assert_eq!(cs.len(), 6);
        let c0 = &cs[0];
        assert_eq!(sign_vs_reference(&g, c0, c0).unwrap(), 1);
        // swapping two colors globally keeps the sign
        for c in &cs {
            let swapped: Vec<u8> = c.colors().iter().map(|&x| match x {
                1 => 2,
                2 => 1,
                other => other,
            }).collect();
            let swapped = EdgeColoring::new(&g, 3, swapped).unwrap();
            assert_eq!(
                sign_vs_reference(&g, &swapped, c0).unwrap(),
                sign_vs_reference(&g, c, c0).unwrap()
            );
        }
        // symmetry
        for c in &cs {
            assert_eq!(
                sign_vs_reference(&g, c, c0).unwrap(),
                sign_vs_reference(&g, c0, c).unwrap()
            );
        }
        // improper map rejected
        assert!(matches!(
            EdgeColoring::new(&g, 3, vec![1, 1, 2, 2, 3, 3]),
            Err(OracleError::Improper(..))
        ));
    }

    #[test]
    fn crossing_sign_basics() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let c = EdgeColoring::new(&k2, 1, vec![1]).unwrap();
        assert_eq!(crossing_sign(&k2, &c).unwrap(), 1);

        // K4 with fibers {01,23}, {02,13}, {03,12}: one monochromatic crossing
        let g = Graph::complete(4);
        // edges() order: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
        let c = EdgeColoring::new(&g, 3, vec![1, 2, 3, 3, 2, 1]).unwrap();
        assert_eq!(crossing_count(&g, &c).unwrap(), 1);
        assert_eq!(crossing_sign(&g, &c).unwrap(), -1);
        // color swap: fibers unchanged
        let c2 = EdgeColoring::new(&g, 3, vec![2, 1, 3, 3, 1, 2]).unwrap();
        assert_eq!(crossing_sign(&g, &c2).unwrap(), -1);
    }

    #[test]
    fn matchings_of_small_graphs() {
        assert_eq!(perfect_matchings(&Graph::complete(4)).len(), 3);
        assert_eq!(perfect_matchings(&Graph::complete(6)).len(), 15);
        assert_eq!(perfect_matchings(&Graph::petersen()).len(), 6);
        assert_eq!(perfect_matchings(&Graph::cycle(6)).len(), 2);
        assert_eq!(perfect_matchings(&Graph::complete(3)).len(), 0);
    }

    #[test]
    fn brute_examples() {
        let r = brute_signsum(&Graph::complete(4)).unwrap();
        assert_eq!((r.factorization_count.to_string(), r.signed_sum.to_string()), ("1".into(), "-1".into()));
        let r = brute_signsum(&Graph::complete_bipartite(3, 3)).unwrap();
        assert_eq!((r.factorization_count.to_string(), r.signed_sum.to_string()), ("2".into(), "0".into()));
        let r = brute_signsum(&Graph::complete(6)).unwrap();
        assert_eq!(r.factorization_count, BigUint::from(6u32));
        assert_eq!(r.signed_sum.abs(), BigInt::from(6));
        let r = brute_signsum(&Graph::petersen()).unwrap();
        assert_eq!(r.factorization_count, BigUint::from(0u32));
    }

    #[test]
    fn theorem_on_small_graphs() {
        for g in [
            Graph::complete(4),
            Graph::cycle(6),
            Graph::complete_bipartite(3, 3),
            Graph::complete(6),
        ] {
            let check = validate_sign_theorem(&g, false).unwrap();
            assert_eq!(check.mismatches, 0, "sign theorem failed on {:?}", g);
        }
    }

    #[test]
    fn k_factorial_relation_small() {
        // |C(G)| = k! * count and sum over colorings = k! * signed sum
        for g in [Graph::complete(4), Graph::cycle(6), Graph::complete_bipartite(3, 3)] {
            let k = g.validate_regular_even().unwrap();
            let fact: u128 = (1..=k as u128).product();
            let check = validate_sign_theorem(&g, false).unwrap();
            let brute = brute_signsum(&g).unwrap();
            let colorings = enumerate_colorings(&g, k, |_| {}).unwrap();
            assert_eq!(BigUint::from(colorings as u128), brute.factorization_count.clone() * BigUint::from(fact));
            assert_eq!(BigInt::from(check.sign_sum), brute.signed_sum * BigInt::from(fact));
        }
    }

    /// The permutation sign matches the sign of the complete-graph distance
    /// product evaluated at the permutation, relatively between permutations.
    #[test]
    fn permutation_sign_vs_distance_product() {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 1 {
                return vec![vec![1]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for slot in 0..k {
                    let mut q = p.clone();
                    q.insert(slot, k);
                    out.push(q);
                }
            }
            out
        }
        fn product(p: &[usize]) -> i64 {
            let mut prod = 1i64;
            for a in 0..p.len() {
                for b in a + 1..p.len() {
                    prod *= p[a] as i64 - p[b] as i64;
                }
            }
            prod
        }
        fn sgn(p: &[usize]) -> i64 {
            let inv = super::inversions(&p.iter().map(|&x| x - 1).collect::<Vec<_>>());
            if inv % 2 == 0 {
                1
            } else {
                -1
            }
        }
        for k in 2..=4 {
            let all = perms(k);
            for a in &all {
                for b in &all {
                    let lhs = (product(a) * product(b)).signum();
                    assert_eq!(lhs, sgn(a) * sgn(b));
                }
            }
        }
        // the absolute form is only true up to a factor depending on k:
        // at the identity the distance product is negative for k = 3
        assert!(product(&[1, 2, 3]) < 0);
    }
}
