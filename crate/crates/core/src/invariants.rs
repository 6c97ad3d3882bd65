//! Combinatorial graph invariants that bound the regularity of `R/I(G)`:
//! induced matchings, short vertex-disjoint paths, whiskered induced
//! subgraphs and matchings.
//!
//! All searches branch on the lowest undecided vertex (unused, or the first
//! vertex of a new piece) and prune with `chosen + undecided / 2`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bits, is_chordal, Graph, GraphError, VertexSet};

/// Vertex cap for the exhaustive searches.
pub const MAX_INVARIANT_VERTICES: usize = 16;

pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edges {0:?} and {1:?} share an endpoint")]
    SharedEndpoint(Edge, Edge),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An optimum value together with a family realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnessed<W> {
    pub value: usize,
    pub witness: Vec<W>,
}

impl<W> Witnessed<W> {
    fn new(witness: Vec<W>) -> Self {
        Witnessed {
            value: witness.len(),
            witness,
        }
    }
}

/// A whiskered vertex: `core` lies in the induced subgraph `H` and `whisker`
/// is its pendant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhiskerPair {
    pub core: usize,
    pub whisker: usize,
}

fn check_size(g: &Graph) -> Result<(), InvariantError> {
    if g.n() > MAX_INVARIANT_VERTICES {
        return Err(InvariantError::TooManyVertices {
            n: g.n(),
            max: MAX_INVARIANT_VERTICES,
        });
    }
    Ok(())
}

fn pair_mask((u, v): Edge) -> VertexSet {
    1 << u | 1 << v
}

/// Open neighborhood of a vertex set.
fn neighborhood(g: &Graph, s: VertexSet) -> VertexSet {
    bits(s).fold(0, |acc, v| acc | g.neighbors(v))
}

/// Whether two disjoint edges induce exactly themselves.
pub fn three_disjoint(g: &Graph, e: Edge, f: Edge) -> Result<bool, InvariantError> {
    for (u, v) in [e, f] {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if !g.has_edge(u, v) {
            return Err(InvariantError::NotAnEdge(u, v));
        }
    }
    let (a, b) = (pair_mask(e), pair_mask(f));
    if a & b != 0 {
        return Err(InvariantError::SharedEndpoint(e, f));
    }
    Ok(neighborhood(g, a) & b == 0)
}

struct InducedMatching<'g> {
    g: &'g Graph,
    best: Vec<Edge>,
    chosen: Vec<Edge>,
}

impl InducedMatching<'_> {
    /// `open`: vertices that may still be endpoints.
    fn go(&mut self, open: VertexSet) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if open == 0 || self.chosen.len() + open.count_ones() as usize / 2 <= self.best.len() {
            return;
        }
        let v = open.trailing_zeros() as usize;
        for u in bits(self.g.neighbors(v) & open) {
            let blocked = self.g.closed_neighbors(v) | self.g.closed_neighbors(u);
            self.chosen.push((v, u));
            self.go(open & !blocked);
            self.chosen.pop();
        }
        self.go(open & !(1 << v));
    }
}

/// `a(G)`: the maximum number of pairwise 3-disjoint edges.
pub fn a_invariant(g: &Graph) -> Result<Witnessed<Edge>, InvariantError> {
    check_size(g)?;
    let mut s = InducedMatching {
        g,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    s.go(g.vertices());
    Ok(Witnessed::new(s.best))
}

struct ShortPaths<'g> {
    g: &'g Graph,
    induced: bool,
    best: Vec<Vec<usize>>,
    chosen: Vec<Vec<usize>>,
}

impl ShortPaths<'_> {
    /// `edge_ends`: endpoints of the chosen length-one paths.
    fn go(&mut self, open: VertexSet, edge_ends: VertexSet) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if open == 0 || self.chosen.len() + open.count_ones() as usize / 2 <= self.best.len() {
            return;
        }
        let g = self.g;
        let v = open.trailing_zeros() as usize;
        let rest = open & !(1 << v);
        let near_edges = neighborhood(g, edge_ends);
        for u in bits(g.neighbors(v) & rest) {
            let e = pair_mask((v, u));
            if e & near_edges == 0 {
                self.chosen.push(vec![v, u]);
                self.go(rest & !(1 << u), edge_ends | e);
                self.chosen.pop();
            }
        }
        for u in bits(rest) {
            for w in bits(rest & !((1u64 << (u + 1)) - 1)) {
                if let Some(p) = self.three_path(v, u, w) {
                    self.chosen.push(p);
                    self.go(rest & !(1 << u | 1 << w), edge_ends);
                    self.chosen.pop();
                }
            }
        }
        self.go(rest, edge_ends);
    }

    /// A path through all of `{v, u, w}`, middle vertex second.
    fn three_path(&self, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
        let g = self.g;
        let (vu, vw, uw) = (g.has_edge(v, u), g.has_edge(v, w), g.has_edge(u, w));
        if self.induced && vu && vw && uw {
            return None;
        }
        if vu && vw {
            Some(vec![u, v, w])
        } else if vu && uw {
            Some(vec![v, u, w])
        } else if vw && uw {
            Some(vec![v, w, u])
        } else {
            None
        }
    }
}

/// `a′(G)`: the maximum number of vertex-disjoint paths of length one or two
/// whose length-one members are pairwise 3-disjoint. With `induced`, the
/// length-two paths must also be induced.
pub fn a_prime_invariant(g: &Graph, induced: bool) -> Result<Witnessed<Vec<usize>>, InvariantError> {
    check_size(g)?;
    let mut s = ShortPaths {
        g,
        induced,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    s.go(g.vertices(), 0);
    Ok(Witnessed::new(s.best))
}

struct Whiskers<'g> {
    g: &'g Graph,
    best: Vec<WhiskerPair>,
    chosen: Vec<WhiskerPair>,
}

impl Whiskers<'_> {
    fn fits(&self, core: usize, whisker: usize, cores: VertexSet, whiskers: VertexSet) -> bool {
        let g = self.g;
        g.neighbors(whisker) & (cores | whiskers) == 0 && g.neighbors(core) & whiskers == 0
    }

    fn go(&mut self, open: VertexSet, cores: VertexSet, whiskers: VertexSet) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if open == 0 || self.chosen.len() + open.count_ones() as usize / 2 <= self.best.len() {
            return;
        }
        let v = open.trailing_zeros() as usize;
        let rest = open & !(1 << v);
        for u in bits(self.g.neighbors(v) & rest) {
            for (core, whisker) in [(v, u), (u, v)] {
                if self.fits(core, whisker, cores, whiskers) {
                    self.chosen.push(WhiskerPair { core, whisker });
                    self.go(rest & !(1 << u), cores | 1 << core, whiskers | 1 << whisker);
                    self.chosen.pop();
                }
            }
        }
        self.go(rest, cores, whiskers);
    }
}

/// `n(G)`: the largest induced subgraph `H` such that `H ∪ W(H)` is also
/// induced, witnessed by the core/whisker pairs.
pub fn n_invariant(g: &Graph) -> Result<Witnessed<WhiskerPair>, InvariantError> {
    check_size(g)?;
    let mut s = Whiskers {
        g,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    s.go(g.vertices(), 0, 0);
    Ok(Witnessed::new(s.best))
}

struct Matching<'g> {
    g: &'g Graph,
    best: Vec<Edge>,
    chosen: Vec<Edge>,
}

impl Matching<'_> {
    fn go(&mut self, open: VertexSet) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if open == 0 || self.chosen.len() + open.count_ones() as usize / 2 <= self.best.len() {
            return;
        }
        let v = open.trailing_zeros() as usize;
        let rest = open & !(1 << v);
        for u in bits(self.g.neighbors(v) & rest) {
            self.chosen.push((v, u));
            self.go(rest & !(1 << u));
            self.chosen.pop();
        }
        self.go(rest);
    }
}

/// `α′(G)`: the matching number.
pub fn matching_number(g: &Graph) -> Result<Witnessed<Edge>, InvariantError> {
    check_size(g)?;
    let mut s = Matching {
        g,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    s.go(g.vertices());
    Ok(Witnessed::new(s.best))
}

/// No vertex repeats and all are in range.
fn vertices_disjoint(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> bool {
    let mut used = 0u64;
    for v in vertices {
        if v >= g.n() || used >> v & 1 == 1 {
            return false;
        }
        used |= 1 << v;
    }
    true
}

pub fn is_matching(g: &Graph, edges: &[Edge]) -> bool {
    edges.iter().all(|&(u, v)| u < g.n() && v < g.n() && g.has_edge(u, v))
        && vertices_disjoint(g, edges.iter().flat_map(|&(u, v)| [u, v]))
}

pub fn is_three_disjoint_family(g: &Graph, edges: &[Edge]) -> bool {
    is_matching(g, edges)
        && edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| three_disjoint(g, e, f) == Ok(true)))
}

pub fn is_short_path_family(g: &Graph, paths: &[Vec<usize>], induced: bool) -> bool {
    if !vertices_disjoint(g, paths.iter().flatten().copied()) {
        return false;
    }
    let mut singles = Vec::new();
    for p in paths {
        match p[..] {
            [u, v] if g.has_edge(u, v) => singles.push((u, v)),
            [u, m, w] if g.has_edge(u, m) && g.has_edge(m, w) => {
                if induced && g.has_edge(u, w) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    is_three_disjoint_family(g, &singles)
}

pub fn is_whiskered_family(g: &Graph, pairs: &[WhiskerPair]) -> bool {
    if !vertices_disjoint(g, pairs.iter().flat_map(|p| [p.core, p.whisker])) {
        return false;
    }
    let cores: VertexSet = pairs.iter().fold(0, |m, p| m | 1 << p.core);
    let whiskers: VertexSet = pairs.iter().fold(0, |m, p| m | 1 << p.whisker);
    pairs
        .iter()
        .all(|p| g.neighbors(p.whisker) & (cores | whiskers) == 1 << p.core)
}

/// Everything the regularity bounds talk about, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub a: Witnessed<Edge>,
    pub a_prime: Witnessed<Vec<usize>>,
    pub n_inv: Witnessed<WhiskerPair>,
    pub matching: Witnessed<Edge>,
    pub max_degree: usize,
    pub chordal: bool,
    pub complement_chordal: bool,
    pub complement_triangle_free: bool,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<Self, InvariantError> {
        let co = g.complement();
        Ok(InvariantReport {
            a: a_invariant(g)?,
            a_prime: a_prime_invariant(g, false)?,
            n_inv: n_invariant(g)?,
            matching: matching_number(g)?,
            max_degree: g.max_degree(),
            chordal: is_chordal(g).is_some(),
            complement_chordal: is_chordal(&co).is_some(),
            complement_triangle_free: co.is_triangle_free(),
        })
    }

    /// Re-checks every stored witness against its definition.
    pub fn validate(&self, g: &Graph) -> bool {
        let sized = |v: usize, len: usize| v == len;
        sized(self.a.value, self.a.witness.len())
            && sized(self.a_prime.value, self.a_prime.witness.len())
            && sized(self.n_inv.value, self.n_inv.witness.len())
            && sized(self.matching.value, self.matching.witness.len())
            && is_three_disjoint_family(g, &self.a.witness)
            && is_short_path_family(g, &self.a_prime.witness, false)
            && is_whiskered_family(g, &self.n_inv.witness)
            && is_matching(g, &self.matching.witness)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, family};

    fn ex26() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    fn two_k2() -> Graph {
        Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    /// Largest subfamily of `items` satisfying `ok`, by subset enumeration.
    fn brute<T: Clone>(items: &[T], ok: impl Fn(&[T]) -> bool) -> usize {
        assert!(items.len() < 24);
        (0u32..1 << items.len())
            .filter_map(|m| {
                let pick: Vec<T> = bits(m as u64).map(|i| items[i].clone()).collect();
                ok(&pick).then_some(pick.len())
            })
            .max()
            .unwrap_or(0)
    }

    fn all_short_paths(g: &Graph) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = g.edges().map(|(u, v)| vec![u, v]).collect();
        for m in 0..g.n() {
            let nb: Vec<usize> = bits(g.neighbors(m)).collect();
            for (i, &u) in nb.iter().enumerate() {
                for &w in &nb[i + 1..] {
                    out.push(vec![u, m, w]);
                }
            }
        }
        out
    }

    #[test]
    fn three_disjoint_examples() {
        assert!(three_disjoint(&two_k2(), (0, 1), (2, 3)).unwrap());
        assert!(!three_disjoint(&Graph::cycle(4).unwrap(), (0, 1), (2, 3)).unwrap());
        assert!(three_disjoint(&Graph::path(4).unwrap(), (0, 1), (3, 4)).unwrap());
        assert_eq!(three_disjoint(&two_k2(), (0, 2), (1, 3)), Err(InvariantError::NotAnEdge(0, 2)));
        let p = Graph::path(3).unwrap();
        assert!(matches!(three_disjoint(&p, (0, 1), (1, 2)), Err(InvariantError::SharedEndpoint(..))));
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_invariant(&two_k2()).unwrap().value, 2);
        assert_eq!(a_invariant(&Graph::cycle(4).unwrap()).unwrap().value, 1);
        assert_eq!(a_invariant(&Graph::complete(6).unwrap()).unwrap().value, 1);
        assert_eq!(a_invariant(&Graph::empty(3).unwrap()).unwrap().value, 0);
    }

    #[test]
    fn a_prime_examples() {
        assert_eq!(a_prime_invariant(&family("ex2.2:1").unwrap(), false).unwrap().value, 1);
        assert_eq!(a_prime_invariant(&Graph::path(3).unwrap(), false).unwrap().value, 1);
        let k6 = a_prime_invariant(&Graph::complete(6).unwrap(), false).unwrap();
        assert_eq!(k6.value, 2);
        // K6 has no induced length-two paths and no two 3-disjoint edges
        assert_eq!(a_prime_invariant(&Graph::complete(6).unwrap(), true).unwrap().value, 1);
    }

    #[test]
    fn n_examples() {
        assert_eq!(n_invariant(&ex26()).unwrap().value, 1);
        let p4 = n_invariant(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p4.value, 2);
        assert!(is_whiskered_family(&Graph::path(3).unwrap(), &p4.witness));
        assert_eq!(n_invariant(&Graph::complete(6).unwrap()).unwrap().value, 1);
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&Graph::cycle(5).unwrap()).unwrap().value, 2);
        assert_eq!(matching_number(&family("ex2.2:1").unwrap()).unwrap().value, 2);
        assert_eq!(matching_number(&ex26()).unwrap().value, 2);
    }

    #[test]
    fn example_families() {
        for n in 1..=3 {
            let g = family(&format!("ex2.2:{n}")).unwrap();
            assert_eq!(a_prime_invariant(&g, false).unwrap().value, n);
            assert_eq!(matching_number(&g).unwrap().value, n + 1);
            let g = family(&format!("ex2.7:{n}")).unwrap();
            assert!(n_invariant(&g).unwrap().value < matching_number(&g).unwrap().value);
        }
    }

    #[test]
    fn size_cap() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(a_invariant(&g), Err(InvariantError::TooManyVertices { .. })));
        assert!(matching_number(&Graph::complete(16).unwrap()).is_ok());
    }

    #[test]
    fn searches_match_subset_enumeration() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let edges: Vec<Edge> = g.edges().collect();
                let r = InvariantReport::compute(&g).unwrap();
                assert!(r.validate(&g), "{g}");
                assert_eq!(r.matching.value, brute(&edges, |f| is_matching(&g, f)), "{g}");
                assert_eq!(r.a.value, brute(&edges, |f| is_three_disjoint_family(&g, f)), "{g}");
                let paths = all_short_paths(&g);
                if paths.len() <= 16 {
                    let best = brute(&paths, |f| is_short_path_family(&g, f, false));
                    assert_eq!(r.a_prime.value, best, "{g}");
                }
                let pairs: Vec<WhiskerPair> = g
                    .edges()
                    .flat_map(|(u, v)| {
                        [WhiskerPair { core: u, whisker: v }, WhiskerPair { core: v, whisker: u }]
                    })
                    .collect();
                if pairs.len() <= 16 {
                    assert_eq!(r.n_inv.value, brute(&pairs, |f| is_whiskered_family(&g, f)), "{g}");
                }
                assert!(r.a.value <= r.a_prime.value && r.a_prime.value <= r.matching.value);
                assert!(r.n_inv.value <= n / 2);
            }
        }
    }

    #[test]
    fn validators_reject_tampering() {
        let g = Graph::path(3).unwrap();
        assert!(!is_matching(&g, &[(0, 1), (1, 2)]));
        assert!(!is_three_disjoint_family(&g, &[(0, 1), (2, 3)]));
        assert!(!is_short_path_family(&g, &[vec![0, 2]], false));
        assert!(!is_whiskered_family(&g, &[WhiskerPair { core: 0, whisker: 2 }]));
    }
}
