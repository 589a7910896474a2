//! Exhaustive enumeration of small regular graphs up to isomorphism, plus
//! random regular graph sampling. This supplies the survey corpora; it is
//! sized for graphs on at most ~12 vertices.

use rand::Rng;

use crate::graph::{Edge, Graph};
use crate::iso::{canonical_form, CanonicalForm};

/// All `k`-regular graphs on `n` vertices up to isomorphism, connected or
/// not, sorted by canonical form.
pub fn regular_graphs(n: usize, k: usize) -> Vec<Graph> {
    if n == 0 || k >= n {
        return Vec::new();
    }
    if k == 0 {
        return vec![Graph::empty(n)];
    }
    // dense degrees via the complement: far fewer labeled candidates
    if n - 1 - k < k {
        let mut out: Vec<(CanonicalForm, Graph)> = regular_graphs(n, n - 1 - k)
            .into_iter()
            .map(|g| g.complement())
            .map(|g| (canonical_form(&g), g))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        return out.into_iter().map(|(_, g)| g).collect();
    }
    let mut seen = std::collections::HashSet::new();
    let mut out: Vec<(CanonicalForm, Graph)> = Vec::new();
    for g in labeled_candidates(n, k) {
        let form = canonical_form(&g);
        if seen.insert(form.clone()) {
            out.push((form, g));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

/// All connected `k`-regular graphs on `n` vertices up to isomorphism.
pub fn connected_regular_graphs(n: usize, k: usize) -> Vec<Graph> {
    regular_graphs(n, k).into_iter().filter(Graph::is_connected).collect()
}

/// All connected regular graphs on `n` vertices, any degree, up to
/// isomorphism; ordered by degree.
pub fn connected_regular_graphs_all_degrees(n: usize) -> Vec<Graph> {
    (0..n).flat_map(|k| connected_regular_graphs(n, k)).collect()
}

/// Labeled enumeration of `k`-regular graphs with two symmetry cuts that keep
/// at least one representative per isomorphism class: vertex 0 is adjacent to
/// exactly `1..=k`, and the remaining vertices take their labels in order of
/// first mention (whether as a scanned vertex or as a chosen successor).
fn labeled_candidates(n: usize, k: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n * k % 2 != 0 || k >= n {
        return out;
    }
    let mut residual = vec![k; n];
    let mut edges: Vec<Edge> = Vec::with_capacity(n * k / 2);
    for j in 1..=k {
        edges.push((0, j));
        residual[j] -= 1;
    }
    residual[0] = 0;
    extend_vertex(1, k + 1, n, &mut residual, &mut edges, &mut out);
    out
}

/// Chooses the successor set of vertex `v`; `fresh` is the smallest label not
/// mentioned yet.
fn extend_vertex(
    v: usize,
    fresh: usize,
    n: usize,
    residual: &mut Vec<usize>,
    edges: &mut Vec<Edge>,
    out: &mut Vec<Graph>,
) {
    if v == n {
        if residual.iter().all(|&r| r == 0) {
            out.push(Graph::from_edges(n, edges.iter().copied()).expect("candidate is simple"));
        }
        return;
    }
    // scanning v mentions it
    let fresh = fresh.max(v + 1);
    choose_successors(v, v + 1, fresh, residual[v], n, residual, edges, out);
}

#[allow(clippy::too_many_arguments)]
fn choose_successors(
    v: usize,
    from: usize,
    fresh: usize,
    need: usize,
    n: usize,
    residual: &mut Vec<usize>,
    edges: &mut Vec<Edge>,
    out: &mut Vec<Graph>,
) {
    if need == 0 {
        // all remaining stubs must pair up among vertices after v
        let rest = &residual[v + 1..];
        let stubs: usize = rest.iter().sum();
        if stubs % 2 != 0 {
            return;
        }
        let positive = rest.iter().filter(|&&r| r > 0).count();
        if let Some(&max) = rest.iter().max() {
            if max > 0 && max > positive - 1 {
                return;
            }
        }
        extend_vertex(v + 1, fresh, n, residual, edges, out);
        return;
    }
    if from >= n || n - from < need {
        return;
    }
    for w in from..n {
        if w > fresh {
            break; // would skip the label `fresh`: first-mention order broken
        }
        if residual[w] == 0 {
            continue;
        }
        residual[w] -= 1;
        residual[v] -= 1;
        edges.push((v, w));
        let next_fresh = if w == fresh { fresh + 1 } else { fresh };
        choose_successors(v, w + 1, next_fresh, need - 1, n, residual, edges, out);
        edges.pop();
        residual[v] += 1;
        residual[w] += 1;
    }
}

/// A random simple cubic graph on `n` vertices via the pairing model with
/// rejection; `n` must be even and at least 4.
pub fn random_cubic(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 4 && n % 2 == 0);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        for i in (1..stubs.len()).rev() {
            stubs.swap(i, rng.random_range(0..=i));
        }
        let mut edges: Vec<Edge> = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b {
                ok = false;
                break;
            }
            edges.push((a.min(b), a.max(b)));
        }
        if !ok {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        return Graph::from_edges(n, edges).expect("pairing produced a simple graph");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn tiny_counts() {
        assert_eq!(connected_regular_graphs(2, 1).len(), 1);
        assert_eq!(connected_regular_graphs(4, 2).len(), 1); // C4
        assert_eq!(connected_regular_graphs(4, 3).len(), 1); // K4
        assert_eq!(connected_regular_graphs(6, 2).len(), 1); // C6
        assert_eq!(connected_regular_graphs(6, 3).len(), 2); // K33, prism
        assert_eq!(connected_regular_graphs(6, 4).len(), 1); // octahedron
        assert_eq!(connected_regular_graphs(6, 5).len(), 1); // K6
        assert_eq!(connected_regular_graphs(5, 2).len(), 1); // C5
        assert_eq!(connected_regular_graphs(5, 4).len(), 1); // K5
        assert_eq!(connected_regular_graphs(4, 1).len(), 0); // disconnected
    }

    #[test]
    fn eight_vertex_counts() {
        let by_degree: Vec<usize> = (2..=7).map(|k| connected_regular_graphs(8, k).len()).collect();
        assert_eq!(by_degree, [1, 5, 6, 3, 1, 1]);
        // 2-regular graphs allowing disconnected: C8, C3+C5, C4+C4
        assert_eq!(regular_graphs(8, 2).len(), 3);
        // cubic graphs allowing disconnected: 5 connected + K4+K4
        assert_eq!(regular_graphs(8, 3).len(), 6);
    }

    #[test]
    fn ten_vertex_cubic_count() {
        let all = regular_graphs(10, 3);
        assert_eq!(all.len(), 21);
        assert_eq!(all.iter().filter(|g| g.is_connected()).count(), 19);
        assert!(all.iter().any(|g| crate::iso::are_isomorphic(g, &Graph::petersen())));
    }

    #[test]
    fn generated_graphs_are_regular_and_distinct() {
        for (n, k) in [(6, 3), (8, 3), (8, 4), (8, 5)] {
            let graphs = regular_graphs(n, k);
            let mut forms = std::collections::HashSet::new();
            for g in &graphs {
                assert!(g.is_regular(k));
                assert_eq!(g.n_vertices(), n);
                assert!(forms.insert(canonical_form(g)), "duplicate class in ({n}, {k})");
            }
        }
    }

    #[test]
    fn random_cubic_is_cubic_and_seeded() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g = random_cubic(10, &mut rng);
        assert!(g.is_regular(3));
        assert_eq!(g.n_vertices(), 10);
        let mut rng2 = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_cubic(10, &mut rng2), g);
    }
}
