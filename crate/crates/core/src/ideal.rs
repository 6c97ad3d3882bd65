//! Squarefree monomial ideals, with each monomial `x^C` stored as the bitmask of `C`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::{BettiSource, BettiTable};
use crate::graph::{bits, full_mask, relabel, Graph, GraphError};
use crate::simplicial::{independence_complex, lex_cmp, minimal_elements};

/// Most generators a linear-quotient search accepts (one bit per generator).
pub const MAX_ORDER_GENERATORS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generator {gen:#b} uses a variable outside 0..{vars}")]
    OutOfRange { gen: u64, vars: usize },
    #[error("the zero ideal has no generators to order")]
    ZeroIdeal,
    #[error("the unit ideal has no linear quotients")]
    UnitIdeal,
    #[error("{0} generators exceeds the order-search limit of {MAX_ORDER_GENERATORS}")]
    TooManyGenerators(usize),
    #[error("Betti numbers from linear quotients need a degree-nondecreasing order")]
    NotDegreeMonotone,
    #[error("expected {expected} generator degrees, got {got}")]
    DegreeCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquarefreeIdeal {
    vars: usize,
    gens: Vec<u64>,
}

impl SquarefreeIdeal {
    /// The ideal generated by `gens`; redundant generators are dropped and the
    /// rest sorted lexicographically by their variable lists.
    pub fn new(vars: usize, gens: impl IntoIterator<Item = u64>) -> Result<Self, IdealError> {
        let gens: Vec<u64> = gens.into_iter().collect();
        let all = full_mask(vars);
        if let Some(&gen) = gens.iter().find(|&&g| g & !all != 0) {
            return Err(IdealError::OutOfRange { gen, vars });
        }
        Ok(Self::from_minimal(vars, gens))
    }

    pub(crate) fn from_minimal(vars: usize, gens: Vec<u64>) -> Self {
        SquarefreeIdeal {
            vars,
            gens: minimal_elements(gens),
        }
    }

    pub fn zero(vars: usize) -> Self {
        SquarefreeIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: usize) -> Self {
        SquarefreeIdeal { vars, gens: vec![0] }
    }

    /// `I(G) = (x_i x_j : {i, j} ∈ E(G))`.
    pub fn edge_ideal(g: &Graph) -> Self {
        let mut gens: Vec<u64> = g.edges().map(|(u, v)| 1 << u | 1 << v).collect();
        gens.sort_unstable_by(|&a, &b| lex_cmp(a, b));
        SquarefreeIdeal { vars: g.n(), gens }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.gens.iter().map(|g| g.count_ones() as usize).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [0]
    }

    /// Whether the squarefree monomial `x^m` lies in the ideal.
    pub fn contains(&self, m: u64) -> bool {
        self.gens.iter().any(|&g| g & !m == 0)
    }

    /// Alexander dual: generated by the minimal sets meeting every generator.
    /// The dual of the zero ideal is the unit ideal and vice versa.
    pub fn dual(&self) -> SquarefreeIdeal {
        SquarefreeIdeal {
            vars: self.vars,
            gens: minimal_transversals(&self.gens),
        }
    }

    pub fn sum(&self, other: &SquarefreeIdeal) -> SquarefreeIdeal {
        let vars = self.vars.max(other.vars);
        Self::from_minimal(vars, self.gens.iter().chain(&other.gens).copied().collect())
    }

    /// Intersection; for squarefree ideals it is generated by pairwise lcms.
    pub fn intersection(&self, other: &SquarefreeIdeal) -> SquarefreeIdeal {
        let vars = self.vars.max(other.vars);
        let lcms = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a | b))
            .collect();
        Self::from_minimal(vars, lcms)
    }

    /// `x^m · I`. Exact when `m` is disjoint from every generator's support;
    /// otherwise this is the radical of the product.
    pub fn times(&self, m: u64) -> SquarefreeIdeal {
        Self::from_minimal(self.vars, self.gens.iter().map(|&g| g | m).collect())
    }

    /// Rename variables through `map` (old index → new index) into a ring with
    /// `vars` variables.
    pub fn lift(&self, vars: usize, map: &[usize]) -> SquarefreeIdeal {
        Self::from_minimal(vars, self.gens.iter().map(|&g| relabel(g, map)).collect())
    }

    /// Variables `x_k` in the colon `(gens[j] : j ∈ placed) : gens[u]`, or `None`
    /// when that colon is not generated by variables.
    ///
    /// The colon is generated by `gens[j] / gcd(gens[j], gens[u])`, so it is
    /// variable-generated iff every such quotient is divisible by one of the
    /// degree-one quotients.
    pub fn colon_variables(&self, placed: u64, u: usize) -> Option<u64> {
        let target = self.gens[u];
        let mut vars = 0u64;
        for j in bits(placed) {
            let q = self.gens[j] & !target;
            if q.count_ones() == 1 {
                vars |= q;
            }
        }
        bits(placed)
            .all(|j| self.gens[j] & !target & vars != 0)
            .then_some(vars)
    }

    /// Search for a linear-quotient order on the minimal generators.
    ///
    /// Generators are tried in ascending index order, so the first order found
    /// is the lexicographically smallest valid one. With `degree_monotone`,
    /// only degree-nondecreasing orders are considered.
    pub fn linear_quotient_search(
        &self,
        degree_monotone: bool,
    ) -> Result<Option<LinearQuotientCertificate>, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        let m = self.gens.len();
        if m > MAX_ORDER_GENERATORS {
            return Err(IdealError::TooManyGenerators(m));
        }
        let mut search = OrderSearch {
            ideal: self,
            all: full_mask(m),
            degrees: self.degrees(),
            monotone: degree_monotone,
            failed: HashSet::new(),
            order: Vec::with_capacity(m),
            sets: Vec::with_capacity(m),
        };
        Ok(search.run(0).then_some(LinearQuotientCertificate {
            order: search.order,
            sets: search.sets,
            degree_monotone,
        }))
    }

    /// Check a proposed order directly against the definition.
    pub fn check_linear_quotients(&self, order: &[usize]) -> Option<Vec<u64>> {
        let m = self.gens.len();
        let mut seen = 0u64;
        if order.len() != m || m > MAX_ORDER_GENERATORS {
            return None;
        }
        let mut sets = Vec::with_capacity(m);
        for &u in order {
            if u >= m || seen >> u & 1 == 1 {
                return None;
            }
            sets.push(self.colon_variables(seen, u)?);
            seen |= 1 << u;
        }
        Some(sets)
    }
}

struct OrderSearch<'a> {
    ideal: &'a SquarefreeIdeal,
    all: u64,
    degrees: Vec<usize>,
    monotone: bool,
    failed: HashSet<u64>,
    order: Vec<usize>,
    sets: Vec<u64>,
}

impl OrderSearch<'_> {
    // Whether a placed set can be completed depends on the set alone, so
    // dead ends are memoized by set.
    fn run(&mut self, placed: u64) -> bool {
        if placed == self.all {
            return true;
        }
        if self.failed.contains(&placed) {
            return false;
        }
        let remaining = self.all & !placed;
        let min_degree = if self.monotone {
            bits(remaining).map(|k| self.degrees[k]).min()
        } else {
            None
        };
        for u in bits(remaining) {
            if min_degree.is_some_and(|d| self.degrees[u] != d) {
                continue;
            }
            if let Some(vars) = self.ideal.colon_variables(placed, u) {
                self.order.push(u);
                self.sets.push(vars);
                if self.run(placed | 1 << u) {
                    return true;
                }
                self.order.pop();
                self.sets.pop();
            }
        }
        self.failed.insert(placed);
        false
    }
}

/// A linear-quotient order together with `set_I(u)` for each generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearQuotientCertificate {
    /// Generator indices in order.
    pub order: Vec<usize>,
    /// `sets[p]` is the variable set of the colon at position `p`.
    pub sets: Vec<u64>,
    pub degree_monotone: bool,
}

impl LinearQuotientCertificate {
    /// `max |set_I(u)|`, which is `pd(I)` for a degree-ordered certificate.
    pub fn max_set_size(&self) -> usize {
        self.sets.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Betti table of `R/I` from a degree-ordered linear-quotient certificate.
///
/// Each generator `u` with `s = |set_I(u)|` contributes `C(s, i)` basis
/// elements of degree `deg(u) + i` in homological degree `i` of the
/// resolution of `I`, which is degree `i + 1` for `R/I`. `degrees[k]` is the
/// degree of generator `k`.
pub fn betti_from_certificate(
    cert: &LinearQuotientCertificate,
    degrees: &[usize],
) -> Result<BettiTable, IdealError> {
    if !cert.degree_monotone {
        return Err(IdealError::NotDegreeMonotone);
    }
    if degrees.len() != cert.order.len() {
        return Err(IdealError::DegreeCount {
            expected: cert.order.len(),
            got: degrees.len(),
        });
    }
    if cert.order.windows(2).any(|w| degrees[w[0]] > degrees[w[1]]) {
        return Err(IdealError::NotDegreeMonotone);
    }
    let mut table = BettiTable::new(BettiSource::LinearQuotients);
    table.add(0, 0, 1);
    for (&u, &set) in cert.order.iter().zip(&cert.sets) {
        let s = set.count_ones() as u64;
        for i in 0..=s {
            table.add(i as usize + 1, i as usize + degrees[u], binomial(s, i));
        }
    }
    Ok(table)
}

/// Minimal vertex covers of `g`: complements of the maximal independent sets.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<u64> {
    let all = g.vertices();
    let mut covers: Vec<u64> = independence_complex(g)
        .maximal_faces()
        .iter()
        .map(|&f| all & !f)
        .collect();
    covers.sort_unstable_by(|&a, &b| lex_cmp(a, b));
    covers
}

/// Inclusion-minimal sets meeting every member of `sets`.
///
/// Berge's incremental algorithm. An empty member makes the family
/// unhittable and gives no transversals; an empty family gives `{∅}`.
pub fn minimal_transversals(sets: &[u64]) -> Vec<u64> {
    let mut current = vec![0u64];
    for &e in sets {
        if e == 0 {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(current.len() * 2);
        for &t in &current {
            if t & e != 0 {
                next.push(t);
            } else {
                next.extend(bits(e).map(|v| t | 1 << v));
            }
        }
        current = minimal_elements(next);
    }
    current.sort_unstable_by(|&a, &b| lex_cmp(a, b));
    current
}

/// Outcome of checking the two ideal identities behind the short exact
/// sequence for a vertex `x` with neighbors `y₁…y_t`:
///
/// * `I(G)^∨ = x·I(H₁)^∨ + y₁⋯y_t·I(H₂)^∨`
/// * `x·I(H₁)^∨ ∩ y₁⋯y_t·I(H₂)^∨ = x·y₁⋯y_t·I(H₂)^∨`
///
/// where `H₁ = G ∖ x` and `H₂ = G ∖ N[x]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SesReport {
    pub vertex: usize,
    pub sum_identity: bool,
    pub intersection_identity: bool,
}

impl SesReport {
    pub fn holds(&self) -> bool {
        self.sum_identity && self.intersection_identity
    }
}

pub fn verify_ses_decomposition(g: &Graph, x: usize) -> Result<SesReport, IdealError> {
    g.check_vertex(x)?;
    let n = g.n();
    let dual_of = |removed: u64| {
        let (h, map) = g.remove(removed);
        SquarefreeIdeal::edge_ideal(&h).dual().lift(n, &map)
    };
    let d1 = dual_of(1 << x);
    let d2 = dual_of(g.closed_neighbors(x));
    let xm = 1u64 << x;
    let ym = g.neighbors(x);

    let whole = SquarefreeIdeal::edge_ideal(g).dual();
    let left = d1.times(xm);
    let right = d2.times(ym);
    Ok(SesReport {
        vertex: x,
        sum_identity: whole == left.sum(&right),
        intersection_identity: left.intersection(&right) == d2.times(xm | ym),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex26() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    fn brute_minimal_covers(g: &Graph) -> Vec<u64> {
        let all = g.vertices();
        let covers: Vec<u64> = (0..=all)
            .filter(|&c| g.edges().all(|(u, v)| c >> u & 1 == 1 || c >> v & 1 == 1))
            .collect();
        let mut out: Vec<u64> = covers
            .iter()
            .copied()
            .filter(|&c| !covers.iter().any(|&d| d != c && d & !c == 0))
            .collect();
        out.sort_unstable_by(|&a, &b| lex_cmp(a, b));
        out
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(SquarefreeIdeal::edge_ideal(&Graph::complete(2).unwrap()).gens(), &[0b11]);
        assert_eq!(
            SquarefreeIdeal::edge_ideal(&Graph::cycle(3).unwrap()).gens(),
            &[0b011, 0b101, 0b110]
        );
        assert!(SquarefreeIdeal::edge_ideal(&Graph::empty(3).unwrap()).is_zero());
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(minimal_vertex_covers(&Graph::complete(2).unwrap()), vec![0b01, 0b10]);
        assert_eq!(minimal_vertex_covers(&Graph::cycle(4).unwrap()), vec![0b0101, 0b1010]);
        assert_eq!(minimal_vertex_covers(&ex26()), vec![0b0011, 0b0101, 0b1110]);
        assert_eq!(minimal_vertex_covers(&Graph::empty(3).unwrap()), vec![0]);
    }

    #[test]
    fn covers_match_brute_force() {
        for g in crate::graph::enumerate_graphs(6, false).unwrap() {
            let covers = minimal_vertex_covers(&g);
            assert_eq!(covers, brute_minimal_covers(&g), "{g:?}");
            assert_eq!(SquarefreeIdeal::edge_ideal(&g).dual().gens(), covers.as_slice());
        }
    }

    #[test]
    fn dual_examples() {
        let c4 = SquarefreeIdeal::edge_ideal(&Graph::cycle(4).unwrap());
        assert_eq!(c4.dual().gens(), &[0b0101, 0b1010]);
        assert_eq!(
            SquarefreeIdeal::edge_ideal(&ex26()).dual().gens(),
            &[0b0011, 0b0101, 0b1110]
        );
        let k2 = SquarefreeIdeal::edge_ideal(&Graph::complete(2).unwrap());
        assert_eq!(k2.dual().dual(), k2);
        assert!(SquarefreeIdeal::zero(3).dual().is_unit());
        assert!(SquarefreeIdeal::unit(3).dual().is_zero());
    }

    #[test]
    fn new_normalizes_and_validates() {
        let i = SquarefreeIdeal::new(3, [0b111, 0b011, 0b011, 0b100]).unwrap();
        assert_eq!(i.gens(), &[0b011, 0b100]);
        assert!(SquarefreeIdeal::new(2, [0b100]).is_err());
        assert!(i.contains(0b111));
        assert!(!i.contains(0b001));
    }

    #[test]
    fn linear_quotient_examples() {
        let i = SquarefreeIdeal::new(4, [0b0011, 0b0101, 0b1110]).unwrap();
        let cert = i.linear_quotient_search(true).unwrap().unwrap();
        assert_eq!(cert.order, vec![0, 1, 2]);
        assert_eq!(cert.sets, vec![0, 0b0010, 0b0001]);
        let sizes: Vec<u32> = cert.sets.iter().map(|s| s.count_ones()).collect();
        assert_eq!(sizes, vec![0, 1, 1]);

        let c4dual = SquarefreeIdeal::new(4, [0b0101, 0b1010]).unwrap();
        assert_eq!(c4dual.linear_quotient_search(false).unwrap(), None);
        assert_eq!(c4dual.linear_quotient_search(true).unwrap(), None);

        let single = SquarefreeIdeal::new(3, [0b011]).unwrap();
        let cert = single.linear_quotient_search(true).unwrap().unwrap();
        assert_eq!(cert.sets, vec![0]);

        assert_eq!(SquarefreeIdeal::zero(2).linear_quotient_search(false), Err(IdealError::ZeroIdeal));
        assert_eq!(SquarefreeIdeal::unit(2).linear_quotient_search(false), Err(IdealError::UnitIdeal));
    }

    #[test]
    fn search_returns_lexicographically_first_order() {
        // co-P4 edges {0,2},{0,3},{1,3}; the identity order already works
        let g = Graph::path(3).unwrap().complement();
        let i = SquarefreeIdeal::edge_ideal(&g);
        assert_eq!(i.gens(), &[0b0101, 0b1001, 0b1010]);
        let cert = i.linear_quotient_search(true).unwrap().unwrap();
        assert_eq!(cert.order, vec![0, 1, 2]);
        assert_eq!(cert.sets, vec![0, 0b0100, 0b0001]);
    }

    #[test]
    fn certificate_betti_examples() {
        let cert = LinearQuotientCertificate {
            order: vec![0, 1, 2],
            sets: vec![0, 0b0010, 0b0001],
            degree_monotone: true,
        };
        let t = betti_from_certificate(&cert, &[2, 2, 3]).unwrap();
        // β_i(I) = β_{i+1}(R/I)
        assert_eq!(t.total(1), 3);
        assert_eq!(t.total(2), 2);
        assert_eq!(t.pd() - 1, 1);
        assert_eq!(t.reg(), 2);

        let one = LinearQuotientCertificate {
            order: vec![0],
            sets: vec![0],
            degree_monotone: true,
        };
        let t = betti_from_certificate(&one, &[2]).unwrap();
        assert_eq!(t.get(1, 2), 1);
        assert_eq!(t.pd() - 1, 0);

        let g = Graph::path(3).unwrap().complement();
        let i = SquarefreeIdeal::edge_ideal(&g);
        let cert = i.linear_quotient_search(true).unwrap().unwrap();
        let t = betti_from_certificate(&cert, &i.degrees()).unwrap();
        assert_eq!((t.total(1), t.total(2)), (3, 2));
        assert_eq!(t.pd(), 2);
    }

    #[test]
    fn certificate_betti_rejects_unordered() {
        let cert = LinearQuotientCertificate {
            order: vec![0, 1],
            sets: vec![0, 0],
            degree_monotone: false,
        };
        assert_eq!(betti_from_certificate(&cert, &[2, 2]), Err(IdealError::NotDegreeMonotone));
        let cert = LinearQuotientCertificate {
            degree_monotone: true,
            ..cert
        };
        assert_eq!(betti_from_certificate(&cert, &[3, 2]), Err(IdealError::NotDegreeMonotone));
        assert!(betti_from_certificate(&cert, &[2]).is_err());
    }

    #[test]
    fn check_order_against_definition() {
        let i = SquarefreeIdeal::new(4, [0b0011, 0b0101, 0b1110]).unwrap();
        assert_eq!(i.check_linear_quotients(&[0, 1, 2]), Some(vec![0, 0b0010, 0b0001]));
        // (x1x2x3) : (x0x1) = (x2x3) is not linear
        assert_eq!(i.check_linear_quotients(&[2, 0, 1]), None);
        assert_eq!(i.check_linear_quotients(&[0, 0, 1]), None);
    }

    #[test]
    fn ses_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert!(verify_ses_decomposition(&k2, 0).unwrap().holds());
        let p4 = Graph::path(3).unwrap();
        assert!(verify_ses_decomposition(&p4, 1).unwrap().holds());
        assert!(verify_ses_decomposition(&ex26(), 3).unwrap().holds());
        assert!(verify_ses_decomposition(&ex26(), 9).is_err());
    }

    #[test]
    fn transversal_edge_cases() {
        assert_eq!(minimal_transversals(&[]), vec![0]);
        assert!(minimal_transversals(&[0b1, 0]).is_empty());
        assert_eq!(minimal_transversals(&[0b011, 0b110]), vec![0b101, 0b010]);
    }
}
