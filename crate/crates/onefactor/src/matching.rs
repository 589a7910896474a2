//! Crossing parity of 1-factors.
//!
//! Place the vertices `0..2n` consecutively on a cycle and draw the edges of
//! a perfect matching as chords. Two edges `(i, j)` and `(p, q)` cross when
//! their endpoint intervals interleave, `i < p < j < q` or `p < i < q < j`.
//! The sign of a 1-factor is `(-1)` to the number of crossing pairs.
//!
//! Besides the static definition, this module provides the incremental rule
//! used while a matching is built edge by edge: the number of crossings an
//! edge will pick up with edges added later has the same parity as the number
//! of still-unmatched vertices strictly between its endpoints at insertion
//! time. The [`UnmatchedList`] tracks those vertices in a doubly linked list
//! so the count costs one pointer walk, and removal/restore cost O(1) splices.

use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("edges ({0}, {1}) and ({2}, {3}) share an endpoint")]
    SharedEndpoint(usize, usize, usize, usize),
    #[error("edge ({0}, {1}) is not ordered with smaller endpoint first")]
    UnorderedEdge(usize, usize),
    #[error("vertex {0} is covered more than once")]
    RepeatedVertex(usize),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexRange { v: usize, n: usize },
    #[error("not a perfect matching: vertex {0} is uncovered")]
    Uncovered(usize),
    #[error("vertex {0} is already matched")]
    AlreadyMatched(usize),
    #[error("vertex {0} is not matched")]
    NotMatched(usize),
}

/// 1 when the chords interleave, 0 otherwise. The edges must be disjoint and
/// ordered with the smaller endpoint first.
pub fn edge_crossing(e: Edge, f: Edge) -> Result<u32, MatchingError> {
    let (i, j) = e;
    let (p, q) = f;
    if i >= j {
        return Err(MatchingError::UnorderedEdge(i, j));
    }
    if p >= q {
        return Err(MatchingError::UnorderedEdge(p, q));
    }
    if i == p || i == q || j == p || j == q {
        return Err(MatchingError::SharedEndpoint(i, j, p, q));
    }
    Ok(u32::from(i < p && p < j && j < q || p < i && i < q && q < j))
}

fn check_perfect_matching(factor: &[Edge], n_vertices: usize) -> Result<(), MatchingError> {
    let mut covered = vec![false; n_vertices];
    for &(i, j) in factor {
        if i >= j {
            return Err(MatchingError::UnorderedEdge(i, j));
        }
        for v in [i, j] {
            if v >= n_vertices {
                return Err(MatchingError::VertexRange { v, n: n_vertices });
            }
            if covered[v] {
                return Err(MatchingError::RepeatedVertex(v));
            }
            covered[v] = true;
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(v) => Err(MatchingError::Uncovered(v)),
        None => Ok(()),
    }
}

/// Total crossing count and sign of a perfect matching on `0..n_vertices`,
/// by the static definition (all unordered pairs of edges).
pub fn factor_sign(factor: &[Edge], n_vertices: usize) -> Result<(u64, i32), MatchingError> {
    check_perfect_matching(factor, n_vertices)?;
    let mut intt = 0u64;
    for (t, &e) in factor.iter().enumerate() {
        for &f in &factor[t + 1..] {
            intt += u64::from(edge_crossing(e, f)?);
        }
    }
    Ok((intt, if intt % 2 == 0 { 1 } else { -1 }))
}

/// Total crossing count computed the other way round: for each edge, count
/// only its crossings with the edges that come later in the given order, and
/// sum. Must agree with [`factor_sign`] for every ordering.
pub fn parity_static_check(factor: &[Edge], n_vertices: usize) -> Result<u64, MatchingError> {
    check_perfect_matching(factor, n_vertices)?;
    let mut total = 0u64;
    for (t, &e) in factor.iter().enumerate() {
        let mut with_subsequent = 0u64;
        for &f in &factor[t + 1..] {
            with_subsequent += u64::from(edge_crossing(e, f)?);
        }
        total += with_subsequent;
    }
    Ok(total)
}

/// An ordered partial matching accumulating its crossing count as edges are
/// appended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedFactor {
    n_vertices: usize,
    edges: Vec<Edge>,
    crossings: u64,
}

impl OrderedFactor {
    pub fn new(n_vertices: usize) -> Self {
        OrderedFactor { n_vertices, edges: Vec::new(), crossings: 0 }
    }

    /// Appends an edge disjoint from the ones already present.
    pub fn push(&mut self, edge: Edge) -> Result<(), MatchingError> {
        let (i, j) = edge;
        if i >= j {
            return Err(MatchingError::UnorderedEdge(i, j));
        }
        if j >= self.n_vertices {
            return Err(MatchingError::VertexRange { v: j, n: self.n_vertices });
        }
        let mut added = 0u64;
        for &e in &self.edges {
            added += u64::from(edge_crossing(e, edge)?);
        }
        self.edges.push(edge);
        self.crossings += added;
        Ok(())
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn intt(&self) -> u64 {
        self.crossings
    }

    /// Crossing count mod 2.
    pub fn parity(&self) -> u8 {
        (self.crossings % 2) as u8
    }

    pub fn sign(&self) -> i32 {
        if self.crossings % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Doubly linked list over `0..n` tracking the vertices not yet matched, in
/// increasing order, with a sentinel at index `n`.
///
/// Splicing a vertex out leaves its own links intact, so splicing back in —
/// in exactly the reverse order of removal — restores the list, dancing-links
/// style. That is what the enumeration engine uses to backtrack without
/// copying.
#[derive(Clone, Debug)]
pub struct UnmatchedList {
    next: Vec<usize>,
    prev: Vec<usize>,
    linked: Vec<bool>,
    n: usize,
}

impl UnmatchedList {
    /// A full list: every vertex of `0..n` unmatched.
    pub fn new(n: usize) -> Self {
        let mut list = UnmatchedList {
            next: vec![0; n + 1],
            prev: vec![0; n + 1],
            linked: vec![true; n + 1],
            n,
        };
        list.reset_full();
        list
    }

    pub(crate) fn reset_full(&mut self) {
        let n = self.n;
        for v in 0..=n {
            self.next[v] = if v == n { 0 } else { v + 1 };
            self.prev[v] = if v == 0 { n } else { v - 1 };
            self.linked[v] = true;
        }
        if n == 0 {
            self.next[0] = 0;
            self.prev[0] = 0;
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// The least unmatched vertex, if any.
    pub fn first_unmatched(&self) -> Option<usize> {
        let f = self.next[self.n];
        (f != self.n).then_some(f)
    }

    pub fn is_unmatched(&self, v: usize) -> bool {
        v < self.n && self.linked[v]
    }

    /// The unmatched vertices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(self.first_unmatched(), move |&v| {
            let w = self.next[v];
            (w != self.n).then_some(w)
        })
    }

    #[inline]
    pub(crate) fn next_of(&self, v: usize) -> usize {
        self.next[v]
    }

    /// Splices `v` out; `v` keeps its own links for the matching re-attach.
    #[inline]
    pub(crate) fn detach(&mut self, v: usize) {
        debug_assert!(self.linked[v]);
        let (p, nx) = (self.prev[v], self.next[v]);
        self.next[p] = nx;
        self.prev[nx] = p;
        self.linked[v] = false;
    }

    /// Undoes the matching [`detach`](Self::detach); detaches must be undone
    /// in reverse order.
    #[inline]
    pub(crate) fn attach(&mut self, v: usize) {
        debug_assert!(!self.linked[v]);
        let (p, nx) = (self.prev[v], self.next[v]);
        debug_assert_eq!(self.next[p], nx);
        debug_assert_eq!(self.prev[nx], p);
        self.next[p] = v;
        self.prev[nx] = v;
        self.linked[v] = true;
    }

    /// `(-1)` to the number of unmatched vertices strictly between `i` and
    /// `j`. Read-only; both endpoints must currently be unmatched.
    pub fn incremental_edge_sign(&self, i: usize, j: usize) -> Result<i32, MatchingError> {
        if i >= j {
            return Err(MatchingError::UnorderedEdge(i, j));
        }
        for v in [i, j] {
            if v >= self.n {
                return Err(MatchingError::VertexRange { v, n: self.n });
            }
            if !self.linked[v] {
                return Err(MatchingError::AlreadyMatched(v));
            }
        }
        let mut sign = 1;
        let mut v = self.next[i];
        while v < j {
            sign = -sign;
            v = self.next[v];
        }
        Ok(sign)
    }

    /// Splices both endpoints of a new matching edge out of the list.
    pub fn remove_pair(&mut self, i: usize, j: usize) -> Result<(), MatchingError> {
        for v in [i, j] {
            if v >= self.n {
                return Err(MatchingError::VertexRange { v, n: self.n });
            }
            if !self.linked[v] {
                return Err(MatchingError::AlreadyMatched(v));
            }
        }
        if i == j {
            return Err(MatchingError::RepeatedVertex(i));
        }
        self.detach(i);
        self.detach(j);
        Ok(())
    }

    /// Undoes the matching [`remove_pair`]; pairs must be restored in reverse
    /// removal order.
    pub fn restore_pair(&mut self, i: usize, j: usize) -> Result<(), MatchingError> {
        for v in [i, j] {
            if v >= self.n {
                return Err(MatchingError::VertexRange { v, n: self.n });
            }
            if self.linked[v] {
                return Err(MatchingError::NotMatched(v));
            }
        }
        self.attach(j);
        self.attach(i);
        Ok(())
    }
}
