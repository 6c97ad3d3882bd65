use serde::{Deserialize, Serialize};

use super::{bits, Graph, VertexSet};

/// Perfect elimination ordering of `g`, if `g` is chordal.
///
/// Maximum cardinality search numbers the vertices; the reverse of the visit
/// order is then checked directly, so a returned ordering is always valid.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut visit = Vec::with_capacity(n);
    while unvisited != 0 {
        let v = bits(unvisited)
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("nonempty");
        unvisited &= !(1u64 << v);
        for w in bits(g.neighbors(v) & unvisited) {
            weight[w] += 1;
        }
        visit.push(v);
    }
    visit.reverse();
    is_perfect_elimination(g, &visit).then_some(visit)
}

/// Each vertex's neighbors that come later in `order` form a clique.
pub fn is_perfect_elimination(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        if later >> v & 1 == 0 {
            return false;
        }
        later &= !(1u64 << v);
        if !g.is_clique(g.neighbors(v) & later) {
            return false;
        }
    }
    true
}

/// One peeling step: `vertex` was attached to the `d`-clique `clique`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub vertex: usize,
    pub clique: VertexSet,
}

/// Witness that a graph is a `d`-tree: peeling `elimination` in order leaves
/// the clique `base` on `d + 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTreeCertificate {
    pub d: usize,
    pub base: VertexSet,
    pub elimination: Vec<Attachment>,
}

impl DTreeCertificate {
    /// Rebuild the graph from the base clique by replaying the attachments in
    /// reverse, checking each attachment set is a `d`-clique at that time.
    pub fn replay(&self, n: usize) -> Option<Graph> {
        if self.base.count_ones() as usize != self.d + 1 {
            return None;
        }
        let mut g = Graph::empty(n).ok()?;
        if bits(self.base).any(|v| v >= n) {
            return None;
        }
        for u in bits(self.base) {
            for v in bits(self.base) {
                if u < v {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        let mut present = self.base;
        for step in self.elimination.iter().rev() {
            let v = step.vertex;
            if v >= n
                || present >> v & 1 == 1
                || step.clique & !present != 0
                || step.clique.count_ones() as usize != self.d
                || !g.is_clique(step.clique)
            {
                return None;
            }
            for u in bits(step.clique) {
                g.add_edge_unchecked(u, v);
            }
            present |= 1u64 << v;
        }
        (present == g.vertices()).then_some(g)
    }
}

/// Recognize `g` as a `d`-tree with `d` equal to the minimum degree.
///
/// Repeatedly removes the lowest-index vertex of degree exactly `d` whose
/// neighborhood is a clique, until `d + 1` vertices remain, which must then
/// form a clique.
pub fn recognize_d_tree(g: &Graph) -> Option<DTreeCertificate> {
    if g.n() == 0 {
        return None;
    }
    let d = g.min_degree();
    let mut alive = g.vertices();
    let mut elimination = Vec::new();
    while alive.count_ones() as usize > d + 1 {
        let v = bits(alive).find(|&v| {
            let nb = g.neighbors(v) & alive;
            nb.count_ones() as usize == d && g.is_clique(nb)
        })?;
        elimination.push(Attachment {
            vertex: v,
            clique: g.neighbors(v) & alive,
        });
        alive &= !(1u64 << v);
    }
    g.is_clique(alive).then_some(DTreeCertificate {
        d,
        base: alive,
        elimination,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&Graph::cycle(4).unwrap()).is_none());
        let k4 = Graph::complete(4).unwrap();
        let peo = is_chordal(&k4).unwrap();
        assert!(is_perfect_elimination(&k4, &peo));
        let c4c = Graph::cycle(4).unwrap().complement();
        assert!(is_chordal(&c4c).is_some());
        assert!(is_chordal(&Graph::cycle(5).unwrap()).is_none());
        assert!(is_chordal(&Graph::empty(0).unwrap()).is_some());
    }

    #[test]
    fn d_tree_examples() {
        let k3 = Graph::complete(3).unwrap();
        let cert = recognize_d_tree(&k3).unwrap();
        assert_eq!(cert.d, 2);
        assert!(cert.elimination.is_empty());
        assert_eq!(cert.replay(3).unwrap(), k3);

        let p4 = Graph::path(3).unwrap();
        let cert = recognize_d_tree(&p4).unwrap();
        assert_eq!(cert.d, 1);
        assert_eq!(cert.elimination.len(), 2);
        assert_eq!(cert.replay(4).unwrap(), p4);

        assert!(recognize_d_tree(&Graph::cycle(4).unwrap()).is_none());
        assert!(recognize_d_tree(&Graph::cycle(4).unwrap().complement()).is_none());
    }

    #[test]
    fn d_tree_rejects_chordal_non_trees() {
        // Two triangles sharing a vertex: chordal, min degree 2, but no K_2 gluing.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(is_chordal(&g).is_some());
        assert!(recognize_d_tree(&g).is_none());
    }

    #[test]
    fn replay_rejects_tampered_certificates() {
        let p4 = Graph::path(3).unwrap();
        let mut cert = recognize_d_tree(&p4).unwrap();
        cert.elimination[0].clique = 0;
        assert!(cert.replay(4).is_none());
    }
}
