//! Canonical forms and isomorphism tests for small graphs (at most 64
//! vertices, intended for at most ~16).
//!
//! Individualization–refinement: color classes are refined by neighbor-color
//! multisets until stable; if cells remain, one vertex of the first
//! non-singleton cell is individualized per branch and the canonical form is
//! the maximal adjacency bit string over all leaves. Branches on vertices
//! that are twins (equal rows off the pair) are collapsed — swapping twins is
//! an automorphism — which keeps highly symmetric graphs like complete graphs
//! or unions of cliques from exploding into factorially many branches.

use crate::graph::Graph;

/// Canonical adjacency matrix rows; equal iff the graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u64>);

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n_vertices();
    assert!(n <= 64, "canonical forms limited to 64 vertices");
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    if n == 0 {
        return CanonicalForm(Vec::new());
    }
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    normalize(&mut colors);
    refine(&adj, &mut colors);
    let mut best: Option<Vec<u64>> = None;
    search(&adj, &colors, &mut best);
    CanonicalForm(best.expect("search visits at least one leaf"))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n_vertices() == b.n_vertices()
        && a.n_edges() == b.n_edges()
        && canonical_form(a) == canonical_form(b)
}

/// Renumbers colors to ranks `0..` preserving order.
fn normalize(colors: &mut [u32]) {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for c in colors.iter_mut() {
        *c = sorted.binary_search(c).unwrap() as u32;
    }
}

/// Stable 1-dimensional refinement: color by (old color, sorted multiset of
/// neighbor colors) until the partition stops splitting.
fn refine(adj: &[u64], colors: &mut Vec<u32>) {
    let n = adj.len();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<u32> = bits(adj[v]).map(|w| colors[w]).collect();
            neigh.sort_unstable();
            sigs.push((colors[v], neigh));
        }
        let mut order: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        order.sort();
        order.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| order.binary_search(&s).unwrap() as u32)
            .collect();
        if next == *colors {
            return;
        }
        *colors = next;
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

fn search(adj: &[u64], colors: &[u32], best: &mut Option<Vec<u64>>) {
    let n = adj.len();
    // first non-singleton cell, by color
    let mut cell_color = None;
    for c in 0.. {
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
        if members.is_empty() {
            break;
        }
        if members.len() > 1 {
            cell_color = Some((c, members));
            break;
        }
    }
    let Some((c, members)) = cell_color else {
        // discrete: vertex with color i goes to position i
        let mut perm = vec![0usize; n];
        for v in 0..n {
            perm[colors[v] as usize] = v;
        }
        let mut rows = vec![0u64; n];
        for (i, &v) in perm.iter().enumerate() {
            for (j, &w) in perm.iter().enumerate() {
                if adj[v] >> w & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        if best.as_ref().is_none_or(|b| rows > *b) {
            *best = Some(rows);
        }
        return;
    };
    // one branch per twin class: swapping vertices with equal rows off the
    // pair is an automorphism, so their branches give the same leaf
    let mut reps: Vec<usize> = Vec::new();
    'member: for &v in &members {
        for &r in &reps {
            let off = !(1u64 << v | 1u64 << r);
            if adj[v] & off == adj[r] & off {
                continue 'member;
            }
        }
        reps.push(v);
    }
    for v in reps {
        let mut child: Vec<u32> = colors
            .iter()
            .map(|&x| if x > c { x + 1 } else { x })
            .collect();
        for (w, x) in child.iter_mut().enumerate() {
            if colors[w] == c && w != v {
                *x = c + 1;
            }
        }
        refine(adj, &mut child);
        search(adj, &child, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_graphs_share_forms() {
        let g = Graph::petersen();
        let perm = [7, 2, 9, 0, 4, 1, 8, 3, 6, 5];
        assert!(are_isomorphic(&g, &g.relabel(&perm).unwrap()));
        let h = Graph::complete_bipartite(3, 3);
        assert!(are_isomorphic(&h, &h.relabel(&[5, 3, 1, 4, 2, 0]).unwrap()));
    }

    #[test]
    fn distinguishes_cospectral_mates() {
        // K3,3 and the prism are both 3-regular on 6 vertices
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!are_isomorphic(&Graph::complete_bipartite(3, 3), &prism));
        // C6 and two triangles are both 2-regular on 6 vertices
        let two_triangles = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(!are_isomorphic(&Graph::cycle(6), &two_triangles));
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        // these all have huge automorphism groups; twin pruning keeps the
        // search linear instead of factorial
        for g in [
            Graph::complete(10),
            Graph::empty(10),
            Graph::complete(10).complement(),
            Graph::complete_bipartite(5, 5),
            Graph::from_edges(10, (0..5).map(|i| (2 * i, 2 * i + 1))).unwrap(),
        ] {
            let f = canonical_form(&g);
            assert_eq!(f, canonical_form(&g.relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap()));
        }
    }

    #[test]
    fn empty_and_tiny() {
        assert_eq!(canonical_form(&Graph::empty(0)), CanonicalForm(Vec::new()));
        assert!(are_isomorphic(&Graph::empty(1), &Graph::empty(1)));
        assert!(!are_isomorphic(&Graph::empty(2), &Graph::from_edges(2, [(0, 1)]).unwrap()));
    }
}
