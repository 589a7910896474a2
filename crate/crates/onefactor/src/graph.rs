//! Graph representation, input formats, validation and relabeling.
//!
//! Vertices are `0..n` and the vertex order is significant throughout the
//! crate: crossing counts, and therefore every sign computed downstream,
//! depend on the order in which vertices sit on the cycle. Parsers keep the
//! input order and nothing renumbers vertices behind the caller's back; only
//! [`Graph::relabel`] moves labels, explicitly.
//!
//! Two textual formats are supported: standard graph6 (the interchange format
//! of the usual regular-graph collections) and a bracket adjacency format
//! listing, for each vertex, its neighbors with larger index in strictly
//! increasing order, e.g. `[[1,2,3],[2,3],[3],[]]` for `K4`.

use std::fmt;

use thiserror::Error;

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty input")]
    EmptyInput,
    #[error("graph6: byte {byte:#04x} at position {pos} outside 63..=126")]
    BadChar { pos: usize, byte: u8 },
    #[error("graph6: long form (more than 62 vertices) is not supported")]
    TooLarge,
    #[error("graph6: body has {got} data bytes, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("graph6: trailing padding bits are not zero")]
    TrailingBits,
    #[error("bracket adjacency: {0}")]
    BadBracket(String),
    #[error("vertex {vertex}: successor list not strictly increasing")]
    SuccessorOrder { vertex: usize },
    #[error("vertex {vertex}: successor {neighbor} must be greater than the vertex and smaller than {n}")]
    SuccessorRange { vertex: usize, neighbor: usize, n: usize },
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexRange { v: usize, n: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("graph is not regular: deg({u}) = {du} but deg({v}) = {dv}")]
    NotRegular { u: usize, du: usize, v: usize, dv: usize },
    #[error("graph has odd order {0}")]
    OddOrder(usize),
}

/// A simple undirected graph on vertices `0..n` with a fixed vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted list of edges `(i, j)` with `i < j`.
    edges: Vec<Edge>,
    /// Sorted neighbor list per vertex.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may come in any order and
    /// orientation; loops and duplicates are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut list: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if e.1 >= n {
                return Err(GraphError::VertexRange { v: e.1, n });
            }
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(i, j) in &list {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    /// The cycle `C_n` with edges `(0,1), (1,2), …, (0,n-1)`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Graph::from_edges(n, edges).expect("cycle is simple")
    }

    /// The complete bipartite graph with parts `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Graph::from_edges(a + b, edges).expect("bipartite graph is simple")
    }

    /// The Petersen graph: outer cycle `0..5`, inner pentagram `5..10`,
    /// spokes `i — i+5`.
    pub fn petersen() -> Self {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        edges.extend([(5, 7), (7, 9), (6, 9), (6, 8), (5, 8)]);
        edges.extend((0..5).map(|i| (i, i + 5)));
        Graph::from_edges(10, edges).expect("petersen is simple")
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// All edges, sorted, smaller endpoint first. The position of an edge in
    /// this slice is its edge index wherever the crate refers to one.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == k)
    }

    /// Checks that the graph is regular of even order and returns the degree.
    pub fn validate_regular_even(&self) -> Result<usize, GraphError> {
        if self.n % 2 != 0 {
            return Err(GraphError::OddOrder(self.n));
        }
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        for v in 1..self.n {
            if self.degree(v) != k {
                return Err(GraphError::NotRegular { u: 0, du: k, v, dv: self.degree(v) });
            }
        }
        Ok(k)
    }

    /// Successor adjacency: each edge listed once, at its smaller endpoint.
    pub fn to_successor(&self) -> SuccessorAdjacency {
        let mut lists = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            lists[i].push(j);
        }
        SuccessorAdjacency { lists }
    }

    /// Applies a vertex permutation: edge `(i, j)` becomes the sorted pair
    /// `(perm[i], perm[j])`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::NotBijection(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(GraphError::NotBijection(self.n));
            }
            seen[p] = true;
        }
        let edges = self.edges.iter().map(|&(i, j)| (perm[i], perm[j]));
        Graph::from_edges(self.n, edges)
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j));
        Graph::from_edges(self.n, edges).expect("complement of a simple graph is simple")
    }

    /// The line graph: one vertex per edge (in edge-index order), adjacent
    /// when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let m = self.edges.len();
        let mut edges = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let (i, j) = self.edges[a];
                let (p, q) = self.edges[b];
                if i == p || i == q || j == p || j == q {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(m, edges).expect("line graph is simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Encodes into graph6 (short form, so at most 62 vertices).
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        if self.n > 62 {
            return Err(GraphError::TooLarge);
        }
        let nbits = self.n * self.n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        let mut bytes = vec![0u8; nbytes];
        let mut pos = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    bytes[pos / 6] |= 1 << (5 - pos % 6);
                }
                pos += 1;
            }
        }
        let mut out = String::with_capacity(1 + nbytes);
        out.push((self.n as u8 + 63) as char);
        out.extend(bytes.iter().map(|&b| (b + 63) as char));
        Ok(out)
    }
}

/// Per-vertex strictly increasing lists of the neighbors greater than the
/// vertex; each edge appears exactly once, at its smaller endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorAdjacency {
    lists: Vec<Vec<usize>>,
}

impl SuccessorAdjacency {
    pub fn lists(&self) -> &[Vec<usize>] {
        &self.lists
    }

    /// Reconstructs the graph; inverse of [`Graph::to_successor`].
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let n = self.lists.len();
        let edges = self.lists.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |&j| (i, j)));
        Graph::from_edges(n, edges)
    }
}

impl fmt::Display for SuccessorAdjacency {
    /// Renders in the bracket format accepted by [`parse_adjacency`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, list) in self.lists.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (t, v) in list.iter().enumerate() {
                if t > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Decodes a single graph6 line (standard format, at most 62 vertices).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::BadChar { pos, byte: b });
        }
    }
    if bytes[0] == 126 {
        return Err(GraphError::TooLarge);
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let got = bytes.len() - 1;
    if got != expected {
        return Err(GraphError::LengthMismatch { expected, got });
    }
    let bit = |p: usize| (bytes[1 + p / 6] - 63) >> (5 - p % 6) & 1;
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    for p in nbits..expected * 6 {
        if bit(p) == 1 {
            return Err(GraphError::TrailingBits);
        }
    }
    Graph::from_edges(n, edges)
}

/// Parses the bracket adjacency format: one inner list per vertex holding its
/// neighbors with larger index, strictly increasing, e.g.
/// `[[1,2,3,4,5],[2,3,4,5],[3,4,5],[4,5],[5],[]]` for `K6`.
pub fn parse_adjacency(text: &str) -> Result<Graph, GraphError> {
    let lists = parse_bracket_lists(text)?;
    let n = lists.len();
    let mut edges = Vec::new();
    for (i, list) in lists.iter().enumerate() {
        for (t, &j) in list.iter().enumerate() {
            if j <= i || j >= n {
                return Err(GraphError::SuccessorRange { vertex: i, neighbor: j, n });
            }
            if t > 0 && list[t - 1] >= j {
                return Err(GraphError::SuccessorOrder { vertex: i });
            }
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, edges)
}

fn parse_bracket_lists(text: &str) -> Result<Vec<Vec<usize>>, GraphError> {
    let bad = |m: &str| GraphError::BadBracket(m.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(GraphError::EmptyInput);
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| bad("expected outer [ ... ]"))?
        .trim();
    let mut lists = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        rest = rest
            .strip_prefix('[')
            .ok_or_else(|| bad("expected inner [ ... ]"))?;
        let end = rest.find(']').ok_or_else(|| bad("unclosed inner list"))?;
        let body = &rest[..end];
        let mut list = Vec::new();
        for item in body.split(',') {
            let item = item.trim();
            if item.is_empty() {
                if body.trim().is_empty() {
                    break; // empty list `[]`
                }
                return Err(bad("empty entry in list"));
            }
            let v: usize = item.parse().map_err(|_| bad(&format!("bad number {item:?}")))?;
            list.push(v);
        }
        lists.push(list);
        rest = rest[end + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        } else if !rest.is_empty() {
            return Err(bad("expected , between lists"));
        }
    }
    Ok(lists)
}
