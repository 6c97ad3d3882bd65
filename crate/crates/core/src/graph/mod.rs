//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitmasks.

mod chordal;
mod enumerate;
mod family;

pub use chordal::{is_chordal, recognize_d_tree, DTreeCertificate};
pub use enumerate::{canonical_code, canonical_form, enumerate_graphs, MAX_ENUMERATION_N};
pub use family::family;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on the number of vertices.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, one bit per vertex.
pub type VertexSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, the limit is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} is not in a graph on {n} vertices")]
    BadVertex { v: usize, n: usize },
    #[error("enumeration supports at most {max} vertices, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },
    #[error("malformed family spec {spec:?}: {reason}")]
    BadFamily { spec: String, reason: String },
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a mask in ascending order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
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

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Cycle on `n ≥ 3` vertices `0-1-…-(n-1)-0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.add_edge_unchecked(v, (v + 1) % n);
        }
        Ok(g)
    }

    /// Path with `k` edges on vertices `0..=k`.
    pub fn path(k: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(k + 1)?;
        for v in 0..k {
            g.add_edge_unchecked(v, v + 1);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        full_mask(self.n)
    }

    /// Open neighborhood of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | (1u64 << v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u].checked_shr(u as u32 + 1).unwrap_or(0)).map(move |d| (u, u + 1 + d)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::BadVertex { v, n: self.n })
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `s`, with vertices relabeled `0..|s|` in ascending
    /// order. The second component maps new labels to old ones.
    pub fn induced(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let s = s & self.vertices();
        let map: Vec<usize> = bits(s).collect();
        let adj = map
            .iter()
            .map(|&old| compress(self.adj[old] & s, s))
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `g ∖ s`: the induced subgraph on the remaining vertices.
    pub fn remove(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        self.induced(self.vertices() & !s)
    }

    /// Attach one pendant vertex to each vertex of `s`, in ascending order.
    /// New vertices are numbered from `n` upwards.
    pub fn whisker(&self, s: VertexSet) -> Result<Graph, GraphError> {
        let s = s & self.vertices();
        let total = self.n + s.count_ones() as usize;
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        let mut adj = self.adj.clone();
        adj.resize(total, 0);
        let mut g = Graph { n: total, adj };
        for (k, v) in bits(s).enumerate() {
            g.add_edge_unchecked(v, self.n + k);
        }
        Ok(g)
    }

    /// Whether the vertex set `s` spans no edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        bits(s).all(|v| self.adj[v] & s == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        bits(s).all(|v| s & !self.adj[v] == 1u64 << v)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertices()
    }

    /// Edge-list text: `n m` header followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (u, v) in self.edges() {
            write!(f, " {u}-{v}")?;
        }
        Ok(())
    }
}

/// Pack the bits of `x` selected by `mask` into the low bits, preserving order.
pub fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, b) in bits(mask).enumerate() {
        out |= (x >> b & 1) << k;
    }
    out
}

/// Inverse of [`compress`]: spread the low bits of `x` onto the positions in `mask`.
pub fn expand(x: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, b) in bits(mask).enumerate() {
        out |= (x >> k & 1) << b;
    }
    out
}

/// Map a mask through a relabeling table (new label -> old label).
pub fn relabel(x: u64, map: &[usize]) -> u64 {
    bits(x).fold(0, |acc, k| acc | 1u64 << map[k])
}
