//! Isomorph-free enumeration of small graphs.
//!
//! The canonical code of a graph is the lexicographically smallest adjacency
//! bitstring over all vertex permutations, where the bitstring lists the
//! upper triangle column by column: (0,1), (0,2), (1,2), (0,3), (1,3), ...
//! Column order lets a partial permutation fix a prefix of the string, which
//! is what the branch-and-bound below prunes on.

use std::collections::BTreeSet;

use super::{bits, Graph, GraphError};

pub const MAX_ENUMERATION_N: usize = 8;

fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

struct Canon<'a> {
    g: &'a Graph,
    total: u32,
    perm: Vec<usize>,
    best: Option<u64>,
}

impl Canon<'_> {
    fn search(&mut self, used: u64, prefix: u64, len: u32) {
        let n = self.g.n();
        let k = self.perm.len();
        if k == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        for v in bits(self.g.vertices() & !used) {
            let mut p = prefix;
            for &u in &self.perm {
                p = p << 1 | self.g.has_edge(u, v) as u64;
            }
            let l = len + k as u32;
            if let Some(b) = self.best {
                let best_prefix = if l == 0 { 0 } else { b >> (self.total - l) };
                if p > best_prefix {
                    continue;
                }
            }
            self.perm.push(v);
            self.search(used | 1u64 << v, p, l);
            self.perm.pop();
        }
    }
}

/// Canonical code of a graph with at most [`MAX_ENUMERATION_N`] vertices.
pub fn canonical_code(g: &Graph) -> Result<u64, GraphError> {
    if g.n() > MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationTooLarge {
            n: g.n(),
            max: MAX_ENUMERATION_N,
        });
    }
    let mut c = Canon {
        g,
        total: pair_count(g.n()),
        perm: Vec::with_capacity(g.n()),
        best: None,
    };
    c.search(0, 0, 0);
    Ok(c.best.unwrap_or(0))
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_count(n);
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    Ok(graph_from_code(g.n(), canonical_code(g)?))
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical code.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUMERATION_N {
        return Err(GraphError::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::from_adjacency(Vec::new())];
    for k in 0..n {
        let mut codes = BTreeSet::new();
        for g in &level {
            for nb in 0..1u64 << k {
                let mut adj = g.adjacency().to_vec();
                adj.push(nb);
                for u in bits(nb) {
                    adj[u] |= 1 << k;
                }
                codes.insert(canonical_code(&Graph::from_adjacency(adj))?);
            }
        }
        level = codes.into_iter().map(|c| graph_from_code(k + 1, c)).collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}
