//! Vertex decomposability and shellability of independence complexes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bits, full_mask, relabel, Graph, GraphError};
use crate::homology::{reg_pd, FieldChoice, HomologyError};
use crate::ideal::{IdealError, SquarefreeIdeal, MAX_ORDER_GENERATORS};
use crate::simplicial::{independence_complex, SimplicialComplex};

/// Vertex cap for the subset-memoized decomposition search.
pub const MAX_VD_VERTICES: usize = 16;
/// Facet cap for the direct shelling search.
pub const MAX_BRUTEFORCE_FACETS: usize = 12;
/// Facet cap for shellability through linear quotients.
pub const MAX_SHELLABLE_FACETS: usize = MAX_ORDER_GENERATORS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("{count} facets exceeds the limit of {max}")]
    TooManyFacets { count: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Which base case of the recursive definition ended a branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseCase {
    /// No vertices left: the complex `{∅}`.
    EmptyGround,
    /// The whole remaining vertex set is the only facet.
    Simplex,
}

/// Decomposition tree. Vertex sets are in the labels of the original graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexDecomposition {
    Leaf {
        vertices: u64,
        base: BaseCase,
    },
    Node {
        vertices: u64,
        shedding: usize,
        deletion: Box<VertexDecomposition>,
        link: Box<VertexDecomposition>,
    },
}

impl VertexDecomposition {
    pub fn vertices(&self) -> u64 {
        match self {
            VertexDecomposition::Leaf { vertices, .. } | VertexDecomposition::Node { vertices, .. } => *vertices,
        }
    }

    /// Shedding vertex at the root, if the root is not a leaf.
    pub fn root_shedding_vertex(&self) -> Option<usize> {
        match self {
            VertexDecomposition::Node { shedding, .. } => Some(*shedding),
            VertexDecomposition::Leaf { .. } => None,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            VertexDecomposition::Leaf { .. } => 0,
            VertexDecomposition::Node { deletion, link, .. } => 1 + deletion.depth().max(link.depth()),
        }
    }

    /// Replay the tree against `Δ_g` using complex-level link and deletion,
    /// independently of the graph-level search that built it.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.vertices() != g.vertices() {
            return false;
        }
        let labels: Vec<usize> = (0..g.n()).collect();
        validate_node(self, &independence_complex(g), &labels)
    }
}

fn validate_node(node: &VertexDecomposition, delta: &SimplicialComplex, labels: &[usize]) -> bool {
    let ground = full_mask(delta.ground());
    if relabel(ground, labels) != node.vertices() {
        return false;
    }
    match node {
        VertexDecomposition::Leaf { base, .. } => match base {
            BaseCase::EmptyGround => delta.ground() == 0 && !delta.is_void(),
            BaseCase::Simplex => delta.maximal_faces() == [ground],
        },
        VertexDecomposition::Node {
            shedding,
            deletion,
            link,
            ..
        } => {
            let Some(local) = labels.iter().position(|&l| l == *shedding) else {
                return false;
            };
            let x = 1u64 << local;
            let Ok((del, del_map)) = delta.deletion(x) else {
                return false;
            };
            let Ok((lk, lk_map)) = delta.link(x) else {
                return false;
            };
            let facets = delta.maximal_faces();
            let sheds = del
                .maximal_faces()
                .iter()
                .all(|&f| facets.contains(&crate::graph::expand(f, ground & !x)));
            // the link sits on V ∖ {x} but never uses N(x); the graph-level
            // child lives on V ∖ N[x]
            let del_labels: Vec<usize> = del_map.iter().map(|&k| labels[k]).collect();
            let lk_labels: Vec<usize> = lk_map.iter().map(|&k| labels[k]).collect();
            let (lk, lk_labels) = restrict_to_used(&lk, &lk_labels, link.vertices());
            sheds
                && validate_node(deletion, &del, &del_labels)
                && lk.is_some_and(|lk| validate_node(link, &lk, &lk_labels))
        }
    }
}

/// Restrict `complex` to the labels in `keep`, provided every dropped vertex
/// lies in no face, so only the ground set changes.
fn restrict_to_used(
    complex: &SimplicialComplex,
    labels: &[usize],
    keep: u64,
) -> (Option<SimplicialComplex>, Vec<usize>) {
    let local_keep: u64 = labels
        .iter()
        .enumerate()
        .filter(|(_, &l)| keep >> l & 1 == 1)
        .fold(0, |acc, (k, _)| acc | 1 << k);
    let used = complex.maximal_faces().iter().fold(0, |acc, &f| acc | f);
    let new_labels = bits(local_keep).map(|k| labels[k]).collect();
    if used & !local_keep != 0 || relabel(local_keep, labels) != keep {
        return (None, new_labels);
    }
    (Some(complex.restrict(local_keep)), new_labels)
}

/// Whether `x` is a shedding vertex of `Δ_g`: every facet of `del(x)` is a
/// facet of `Δ_g`.
pub fn is_shedding_vertex(g: &Graph, x: usize) -> Result<bool, GraphError> {
    g.check_vertex(x)?;
    let facets = independence_complex(g).maximal_faces();
    let (h, map) = g.remove(1 << x);
    Ok(independence_complex(&h)
        .maximal_faces()
        .iter()
        .all(|&f| facets.contains(&relabel(f, &map))))
}

fn sheds_within(g: &Graph, s: u64, x: usize) -> bool {
    // A facet F of del(x) fails to be a facet of Δ exactly when F ∪ {x} is
    // independent. Such F are the maximal independent sets of g[S ∖ N[x]]
    // that dominate N(x) ∩ S, so x sheds iff each of those misses some
    // neighbor of x entirely.
    let nb = g.neighbors(x) & s;
    let (h, map) = g.induced(s & !g.closed_neighbors(x));
    independence_complex(&h).maximal_faces().iter().all(|&f| {
        let f = relabel(f, &map);
        bits(nb).any(|y| g.neighbors(y) & f == 0)
    })
}

struct VdSearch<'a> {
    g: &'a Graph,
    memo: HashMap<u64, bool>,
}

impl VdSearch<'_> {
    fn decomposable(&mut self, s: u64) -> bool {
        if self.is_base(s).is_some() {
            return true;
        }
        if let Some(&r) = self.memo.get(&s) {
            return r;
        }
        let r = self.pick(s).is_some();
        self.memo.insert(s, r);
        r
    }

    fn is_base(&self, s: u64) -> Option<BaseCase> {
        if s == 0 {
            Some(BaseCase::EmptyGround)
        } else if self.g.induced(s).0.edge_count() == 0 {
            Some(BaseCase::Simplex)
        } else {
            None
        }
    }

    fn pick(&mut self, s: u64) -> Option<usize> {
        bits(s).find(|&x| {
            sheds_within(self.g, s, x)
                && self.decomposable(s & !(1 << x))
                && self.decomposable(s & !self.g.closed_neighbors(x))
        })
    }

    fn build(&mut self, s: u64) -> VertexDecomposition {
        if let Some(base) = self.is_base(s) {
            return VertexDecomposition::Leaf { vertices: s, base };
        }
        let x = self.pick(s).expect("built only for decomposable sets");
        VertexDecomposition::Node {
            vertices: s,
            shedding: x,
            deletion: Box::new(self.build(s & !(1 << x))),
            link: Box::new(self.build(s & !self.g.closed_neighbors(x))),
        }
    }
}

/// A vertex decomposition of `Δ_g`, if one exists.
///
/// Recurses on graphs (`g ∖ x` for the deletion, `g ∖ N[x]` for the link),
/// memoized on the vertex subset, trying shedding vertices in ascending order.
pub fn vertex_decomposable(g: &Graph) -> Result<Option<VertexDecomposition>, StructureError> {
    if g.n() > MAX_VD_VERTICES {
        return Err(StructureError::TooManyVertices {
            n: g.n(),
            max: MAX_VD_VERTICES,
        });
    }
    let mut search = VdSearch {
        g,
        memo: HashMap::new(),
    };
    let all = g.vertices();
    Ok(search.decomposable(all).then(|| search.build(all)))
}

/// Facet order satisfying the shelling condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCertificate {
    pub order: Vec<u64>,
}

impl ShellingCertificate {
    /// Check the order against the definition directly: for all `i < j` there
    /// are `v ∈ F_j ∖ F_i` and `l < j` with `F_j ∖ F_l = {v}`; and the order
    /// lists exactly the facets of `complex`.
    pub fn validate(&self, complex: &SimplicialComplex) -> bool {
        let mut facets = complex.maximal_faces();
        let mut listed = self.order.clone();
        facets.sort_unstable();
        listed.sort_unstable();
        facets == listed && is_shelling_order(&self.order)
    }
}

/// The shelling condition on an ordered facet list.
pub fn is_shelling_order(order: &[u64]) -> bool {
    (1..order.len()).all(|j| {
        let fj = order[j];
        (0..j).all(|i| {
            bits(fj & !order[i]).any(|v| (0..j).any(|l| fj & !order[l] == 1 << v))
        })
    })
}

/// Shellability through linear quotients of the dual of the Stanley–Reisner
/// ideal: the generator `x^{X∖F}` corresponds to the facet `F`, and a
/// linear-quotient order on the generators is a shelling order on the facets.
pub fn shellable(complex: &SimplicialComplex) -> Result<Option<ShellingCertificate>, StructureError> {
    let facets = complex.maximal_faces();
    if facets.len() > MAX_SHELLABLE_FACETS {
        return Err(StructureError::TooManyFacets {
            count: facets.len(),
            max: MAX_SHELLABLE_FACETS,
        });
    }
    if facets.len() <= 1 {
        return Ok(Some(ShellingCertificate { order: facets }));
    }
    let all = full_mask(complex.ground());
    let dual: SquarefreeIdeal = complex.minimal_nonfaces().dual();
    let Some(cert) = dual.linear_quotient_search(false)? else {
        return Ok(None);
    };
    let order = cert.order.iter().map(|&k| all & !dual.gens()[k]).collect();
    Ok(Some(ShellingCertificate { order }))
}

/// Shellability of `Δ_g`.
pub fn shellable_graph(g: &Graph) -> Result<Option<ShellingCertificate>, StructureError> {
    shellable(&independence_complex(g))
}

/// Direct backtracking on the shelling condition, memoizing dead-end prefix sets.
pub fn shelling_bruteforce(complex: &SimplicialComplex) -> Result<Option<ShellingCertificate>, StructureError> {
    let facets = complex.maximal_faces();
    let s = facets.len();
    if s > MAX_BRUTEFORCE_FACETS {
        return Err(StructureError::TooManyFacets {
            count: s,
            max: MAX_BRUTEFORCE_FACETS,
        });
    }
    fn extends(facets: &[u64], placed: u32, j: usize) -> bool {
        let fj = facets[j];
        let mut unit = 0u64;
        for l in bits(placed as u64) {
            let d = fj & !facets[l];
            if d.count_ones() == 1 {
                unit |= d;
            }
        }
        bits(placed as u64).all(|i| fj & !facets[i] & unit != 0)
    }
    fn go(facets: &[u64], placed: u32, order: &mut Vec<usize>, failed: &mut std::collections::HashSet<u32>) -> bool {
        let all = (1u32 << facets.len()) - 1;
        if placed == all {
            return true;
        }
        if failed.contains(&placed) {
            return false;
        }
        for j in bits((all & !placed) as u64) {
            if extends(facets, placed, j) {
                order.push(j);
                if go(facets, placed | 1 << j, order, failed) {
                    return true;
                }
                order.pop();
            }
        }
        failed.insert(placed);
        false
    }
    let mut order = Vec::with_capacity(s);
    let found = go(&facets, 0, &mut order, &mut Default::default());
    Ok(found.then(|| ShellingCertificate {
        order: order.iter().map(|&k| facets[k]).collect(),
    }))
}

/// Witness that `reg(R/I(g)) ≤ reg(R/I(g ∖ N[x])) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducingVertex {
    pub vertex: usize,
    pub reg: usize,
    pub reg_remainder: usize,
}

/// Lowest-index vertex `x` with `reg(R/I(g)) ≤ reg(R/I(g ∖ N[x])) + 1`.
pub fn reducing_vertex(g: &Graph, field: FieldChoice) -> Result<Option<ReducingVertex>, StructureError> {
    let (reg, _) = reg_pd(g, field)?;
    for x in 0..g.n() {
        let (h, _) = g.remove(g.closed_neighbors(x));
        let (reg_h, _) = reg_pd(&h, field)?;
        if reg <= reg_h + 1 {
            return Ok(Some(ReducingVertex {
                vertex: x,
                reg,
                reg_remainder: reg_h,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, family};

    fn ex26() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn shedding_examples() {
        let p4 = Graph::path(3).unwrap();
        assert!(is_shedding_vertex(&p4, 1).unwrap());
        assert!(!is_shedding_vertex(&p4, 0).unwrap());
        assert!(is_shedding_vertex(&Graph::complete(2).unwrap(), 0).unwrap());
        assert!(is_shedding_vertex(&p4, 7).is_err());
    }

    #[test]
    fn fast_shedding_test_matches_definition() {
        for g in enumerate_graphs(6, false).unwrap() {
            for x in 0..g.n() {
                assert_eq!(
                    sheds_within(&g, g.vertices(), x),
                    is_shedding_vertex(&g, x).unwrap(),
                    "{g:?} x={x}"
                );
            }
        }
    }

    #[test]
    fn vd_examples() {
        let p4 = Graph::path(3).unwrap();
        let cert = vertex_decomposable(&p4).unwrap().unwrap();
        assert_eq!(cert.root_shedding_vertex(), Some(1));
        assert!(cert.validate(&p4));

        assert!(vertex_decomposable(&Graph::cycle(4).unwrap()).unwrap().is_none());

        let ex27 = family("ex2.7:1").unwrap();
        let cert = vertex_decomposable(&ex27).unwrap().unwrap();
        assert!(cert.validate(&ex27));

        let e0 = Graph::empty(0).unwrap();
        assert_eq!(
            vertex_decomposable(&e0).unwrap(),
            Some(VertexDecomposition::Leaf { vertices: 0, base: BaseCase::EmptyGround })
        );
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            vertex_decomposable(&e3).unwrap(),
            Some(VertexDecomposition::Leaf { vertices: 0b111, base: BaseCase::Simplex })
        );
        assert!(vertex_decomposable(&Graph::empty(17).unwrap()).is_err());
    }

    #[test]
    fn vd_validation_rejects_bad_trees() {
        let p4 = Graph::path(3).unwrap();
        let bad = VertexDecomposition::Node {
            vertices: 0b1111,
            shedding: 0,
            deletion: Box::new(VertexDecomposition::Leaf { vertices: 0b1110, base: BaseCase::Simplex }),
            link: Box::new(VertexDecomposition::Leaf { vertices: 0b1100, base: BaseCase::Simplex }),
        };
        assert!(!bad.validate(&p4));
    }

    #[test]
    fn shellable_examples() {
        let cert = shellable_graph(&ex26()).unwrap().unwrap();
        assert!(cert.validate(&independence_complex(&ex26())));
        assert!(shellable_graph(&Graph::cycle(4).unwrap()).unwrap().is_none());
        let c5 = independence_complex(&Graph::cycle(5).unwrap());
        assert!(shellable(&c5).unwrap().unwrap().validate(&c5));
        assert!(shelling_bruteforce(&c5).unwrap().is_some());
    }

    #[test]
    fn shellable_degenerate_complexes() {
        let e = SimplicialComplex::empty_face(0);
        assert_eq!(shellable(&e).unwrap().unwrap().order, vec![0]);
        assert_eq!(shellable(&SimplicialComplex::void(2)).unwrap().unwrap().order, Vec::<u64>::new());
        let s = SimplicialComplex::simplex(3);
        assert_eq!(shelling_bruteforce(&s).unwrap().unwrap().order, vec![0b111]);
    }

    #[test]
    fn bruteforce_examples() {
        let c4 = independence_complex(&Graph::cycle(4).unwrap());
        assert!(shelling_bruteforce(&c4).unwrap().is_none());
        let d = independence_complex(&ex26());
        let cert = shelling_bruteforce(&d).unwrap().unwrap();
        assert!(cert.validate(&d));
        let many = SimplicialComplex::from_faces(13, (0..13).map(|v| 1u64 << v)).unwrap();
        assert!(shelling_bruteforce(&many).is_err());
    }

    #[test]
    fn shelling_condition() {
        // two edges sharing a vertex, then a disjoint edge: not a shelling
        assert!(is_shelling_order(&[0b0011, 0b0110]));
        assert!(!is_shelling_order(&[0b0011, 0b1100]));
        assert!(is_shelling_order(&[0b0011]));
        assert!(is_shelling_order(&[]));
    }

    #[test]
    fn reducing_vertex_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = reducing_vertex(&c5, FieldChoice::Gf2).unwrap().unwrap();
        assert_eq!((r.vertex, r.reg, r.reg_remainder), (0, 2, 1));
        let k2 = Graph::complete(2).unwrap();
        let r = reducing_vertex(&k2, FieldChoice::Gf2).unwrap().unwrap();
        assert_eq!((r.vertex, r.reg, r.reg_remainder), (0, 1, 0));
        let r = reducing_vertex(&ex26(), FieldChoice::Gf2).unwrap().unwrap();
        assert!(r.reg <= r.reg_remainder + 1);
    }
}
