//! Simplicial complexes given by their facets, and the dictionary between
//! complexes and squarefree monomial ideals.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bits, compress, full_mask, Graph};
use crate::ideal::{minimal_transversals, SquarefreeIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face {face:#b} has a vertex outside the ground set of size {ground}")]
    OutOfRange { face: u64, ground: usize },
    #[error("{face:#b} is not a face of the complex")]
    NotAFace { face: u64 },
    #[error("ground set of size {0} exceeds 64")]
    GroundTooLarge(usize),
}

/// Compare two sets by their ascending element lists, lexicographically.
pub fn lex_cmp(mut a: u64, mut b: u64) -> Ordering {
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {
                let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                if x != y {
                    return x.cmp(&y);
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

/// Inclusion-maximal members of `sets`, deduplicated, in [`lex_cmp`] order.
pub fn maximal_elements(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by(|&a, &b| lex_cmp(a, b));
    kept
}

/// Inclusion-minimal members of `sets`, deduplicated, in [`lex_cmp`] order.
pub fn minimal_elements(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| s.count_ones());
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by(|&a, &b| lex_cmp(a, b));
    kept
}

/// A simplicial complex on the ground set `0..ground`.
///
/// The facet list is an antichain. An empty facet list denotes `{∅}` unless
/// `void` is set, in which case the complex has no faces at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground: usize,
    facets: Vec<u64>,
    void: bool,
}

impl SimplicialComplex {
    /// The complex generated by `faces`. Non-maximal inputs are discarded.
    pub fn from_faces(ground: usize, faces: impl IntoIterator<Item = u64>) -> Result<Self, ComplexError> {
        if ground > 64 {
            return Err(ComplexError::GroundTooLarge(ground));
        }
        let all = full_mask(ground);
        let faces: Vec<u64> = faces.into_iter().collect();
        if let Some(&face) = faces.iter().find(|&&f| f & !all != 0) {
            return Err(ComplexError::OutOfRange { face, ground });
        }
        if faces.is_empty() {
            return Ok(Self::void(ground));
        }
        Ok(Self::normalized(ground, faces))
    }

    fn normalized(ground: usize, faces: Vec<u64>) -> Self {
        let mut facets = maximal_elements(faces);
        if facets == [0] {
            facets.clear();
        }
        SimplicialComplex {
            ground,
            facets,
            void: false,
        }
    }

    /// The complex with no faces.
    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
            void: true,
        }
    }

    /// `{∅}`: only the empty face.
    pub fn empty_face(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
            void: false,
        }
    }

    /// The full simplex on the ground set.
    pub fn simplex(ground: usize) -> Self {
        Self::normalized(ground, vec![full_mask(ground)])
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    /// Stored facets; empty for both `{∅}` and the void complex.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Maximal faces, with `{∅}` reporting the single facet `∅`.
    pub fn maximal_faces(&self) -> Vec<u64> {
        if self.void {
            Vec::new()
        } else if self.facets.is_empty() {
            vec![0]
        } else {
            self.facets.clone()
        }
    }

    pub fn is_face(&self, f: u64) -> bool {
        !self.void && (f == 0 || self.facets.iter().any(|&x| f & !x == 0))
    }

    /// Dimension, with `{∅}` at −1 and the void complex at −2.
    pub fn dim(&self) -> isize {
        if self.void {
            -2
        } else {
            self.facets
                .iter()
                .map(|f| f.count_ones() as isize - 1)
                .max()
                .unwrap_or(-1)
        }
    }

    /// All faces grouped by cardinality: `out[k]` holds the faces of size `k`,
    /// sorted by bitmask.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        if self.void {
            return Vec::new();
        }
        let mut seen = HashSet::new();
        for f in self.maximal_faces() {
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let top = self.dim() + 1;
        let mut out = vec![Vec::new(); top.max(0) as usize + 1];
        for f in seen {
            out[f.count_ones() as usize].push(f);
        }
        for layer in &mut out {
            layer.sort_unstable();
        }
        out
    }

    /// Number of faces of each size, `f_{-1}, f_0, …`.
    pub fn face_counts(&self) -> Vec<u64> {
        self.faces_by_size().iter().map(|l| l.len() as u64).collect()
    }

    /// Link of `f`, on the ground set with `f` removed. The second component
    /// maps new vertex labels to old ones.
    pub fn link(&self, f: u64) -> Result<(SimplicialComplex, Vec<usize>), ComplexError> {
        self.check(f)?;
        if !self.is_face(f) {
            return Err(ComplexError::NotAFace { face: f });
        }
        let rest = full_mask(self.ground) & !f;
        let faces = self
            .maximal_faces()
            .into_iter()
            .filter(|&x| f & !x == 0)
            .map(|x| compress(x & !f, rest))
            .collect();
        Ok((Self::normalized(rest.count_ones() as usize, faces), bits(rest).collect()))
    }

    /// Deletion of `f`: faces disjoint from `f`, on the ground set without `f`.
    pub fn deletion(&self, f: u64) -> Result<(SimplicialComplex, Vec<usize>), ComplexError> {
        self.check(f)?;
        let rest = full_mask(self.ground) & !f;
        let map = bits(rest).collect();
        let ground = rest.count_ones() as usize;
        if self.void {
            return Ok((Self::void(ground), map));
        }
        let faces = self
            .maximal_faces()
            .into_iter()
            .map(|x| compress(x & !f, rest))
            .collect();
        Ok((Self::normalized(ground, faces), map))
    }

    /// Induced subcomplex on `s`, relabeled onto `0..|s|`.
    pub fn restrict(&self, s: u64) -> SimplicialComplex {
        let s = s & full_mask(self.ground);
        let ground = s.count_ones() as usize;
        if self.void {
            return Self::void(ground);
        }
        let faces = self
            .maximal_faces()
            .into_iter()
            .map(|x| compress(x & s, s))
            .collect();
        Self::normalized(ground, faces)
    }

    fn check(&self, f: u64) -> Result<(), ComplexError> {
        if f & !full_mask(self.ground) != 0 {
            Err(ComplexError::OutOfRange {
                face: f,
                ground: self.ground,
            })
        } else {
            Ok(())
        }
    }

    /// Minimal non-faces, as the generators of the Stanley–Reisner ideal.
    pub fn minimal_nonfaces(&self) -> SquarefreeIdeal {
        let all = full_mask(self.ground);
        let complements: Vec<u64> = self.maximal_faces().iter().map(|&f| all & !f).collect();
        SquarefreeIdeal::from_minimal(self.ground, minimal_transversals(&complements))
    }

    /// `Δ^∨ = {F : X ∖ F ∉ Δ}`; its facets are the complements of the minimal
    /// non-faces of `Δ`.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let all = full_mask(self.ground);
        let nonfaces = self.minimal_nonfaces();
        if nonfaces.is_zero() {
            return Self::void(self.ground);
        }
        Self::normalized(
            self.ground,
            nonfaces.gens().iter().map(|&n| all & !n).collect(),
        )
    }

    /// The complex whose faces are the sets containing no generator of `ideal`.
    /// The unit ideal gives the void complex.
    pub fn from_ideal(ideal: &SquarefreeIdeal) -> SimplicialComplex {
        let all = full_mask(ideal.vars());
        let transversals = minimal_transversals(ideal.gens());
        if transversals.is_empty() {
            return Self::void(ideal.vars());
        }
        Self::normalized(ideal.vars(), transversals.iter().map(|&t| all & !t).collect())
    }

    /// `Δ_G`: facets are the maximal independent sets of `g`.
    pub fn independence(g: &Graph) -> SimplicialComplex {
        Self::normalized(g.n(), maximal_independent_sets(g))
    }
}

/// Maximal independent sets of `g`, via Bron–Kerbosch with pivoting on the
/// complement. The 0-vertex graph has the single set `∅`.
pub fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    let co = g.complement();
    let mut out = Vec::new();
    bron_kerbosch(&co, 0, g.vertices(), 0, &mut out);
    out.sort_unstable_by(|&a, &b| lex_cmp(a, b));
    out
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (g.neighbors(u) & p).count_ones())
        .expect("p nonempty");
    for v in bits(p & !g.neighbors(pivot)) {
        let nb = g.neighbors(v);
        bron_kerbosch(g, r | 1 << v, p & nb, x & nb, out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Convenience wrapper for [`SimplicialComplex::independence`].
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::independence(g)
}
