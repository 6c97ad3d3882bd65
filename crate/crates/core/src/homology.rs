//! Reduced simplicial homology over exact fields and Hochster's formula for
//! the graded Betti numbers of `R/I`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::{BettiSource, BettiTable};
use crate::graph::{full_mask, Graph};
use crate::ideal::SquarefreeIdeal;
use crate::linalg::{rank_bareiss, rank_gf2, rank_mod_p, SparseColumn};
use crate::simplicial::SimplicialComplex;

/// Largest ground set for which faces are enumerated.
pub const MAX_HOMOLOGY_GROUND: usize = 24;
/// Largest variable count for the `2^n` subset sum in Hochster's formula.
pub const MAX_HOCHSTER_VARS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("ground set of size {0} is too large for homology (limit {MAX_HOMOLOGY_GROUND})")]
    GroundTooLarge(usize),
    #[error("{0} variables is too many for Hochster's formula (limit {MAX_HOCHSTER_VARS})")]
    TooManyVariables(usize),
    #[error("{0} is not a prime below 2^31")]
    BadPrime(u64),
    #[error("unknown field {0:?}; expected gf2, gf<p> or q")]
    UnknownField(String),
}

/// Coefficient field for homology.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldChoice {
    #[default]
    Gf2,
    /// GF(p) for a prime `p < 2^31`.
    Gfp(u32),
    Rational,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FieldChoice {
    pub fn gfp(p: u64) -> Result<Self, HomologyError> {
        if p < 1 << 31 && is_prime(p) {
            Ok(if p == 2 { FieldChoice::Gf2 } else { FieldChoice::Gfp(p as u32) })
        } else {
            Err(HomologyError::BadPrime(p))
        }
    }

    fn rank(self, nrows: usize, columns: &[SparseColumn]) -> usize {
        match self {
            FieldChoice::Gf2 => rank_gf2(nrows, columns),
            FieldChoice::Gfp(p) => rank_mod_p(nrows, columns, p as u64),
            FieldChoice::Rational => rank_bareiss(nrows, columns),
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldChoice::Gf2 => write!(f, "gf2"),
            FieldChoice::Gfp(p) => write!(f, "gf{p}"),
            FieldChoice::Rational => write!(f, "q"),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "q" | "qq" | "rational" | "rationals" => Ok(FieldChoice::Rational),
            _ => match t.strip_prefix("gf").map(str::parse::<u64>) {
                Some(Ok(p)) => FieldChoice::gfp(p),
                _ => Err(HomologyError::UnknownField(s.to_string())),
            },
        }
    }
}

/// Ranks of reduced homology `H̃_d` for `d = −1, 0, …, dim Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRanks {
    ranks: Vec<u64>,
}

impl HomologyRanks {
    /// Rank in dimension `d`; zero outside the stored range.
    pub fn rank(&self, d: isize) -> u64 {
        usize::try_from(d + 1)
            .ok()
            .and_then(|k| self.ranks.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `(d, rank)` for every nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as isize - 1, r))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.ranks
    }
}

/// Boundary map from size-`s` faces to size-`(s−1)` faces, as sparse columns.
/// Signs alternate with the position of the removed vertex.
fn boundary(upper: &[u64], lower_index: &HashMap<u64, usize>) -> Vec<SparseColumn> {
    upper
        .iter()
        .map(|&face| {
            let mut col = Vec::with_capacity(face.count_ones() as usize);
            let mut rest = face;
            let mut pos = 0;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                col.push((lower_index[&(face & !b)], sign));
                rest &= rest - 1;
                pos += 1;
            }
            col
        })
        .collect()
}

/// Reduced homology ranks of `Δ` with coefficients in `field`.
///
/// `{∅}` has rank 1 in dimension −1; the void complex has no homology.
pub fn reduced_homology_ranks(
    complex: &SimplicialComplex,
    field: FieldChoice,
) -> Result<HomologyRanks, HomologyError> {
    if complex.ground() > MAX_HOMOLOGY_GROUND {
        return Err(HomologyError::GroundTooLarge(complex.ground()));
    }
    if complex.is_void() {
        return Ok(HomologyRanks { ranks: vec![0] });
    }
    // a cone over any vertex is acyclic
    let facets = complex.maximal_faces();
    if facets.iter().fold(full_mask(complex.ground()), |acc, &f| acc & f) != 0 {
        return Ok(HomologyRanks {
            ranks: vec![0; facets[0].count_ones() as usize + 1],
        });
    }
    let layers = complex.faces_by_size();
    // ranks[s] = rank of the boundary from size s to size s − 1; none for s = 0
    let mut boundary_ranks = vec![0usize; layers.len() + 1];
    for s in 1..layers.len() {
        let index: HashMap<u64, usize> = layers[s - 1]
            .iter()
            .enumerate()
            .map(|(k, &f)| (f, k))
            .collect();
        let cols = boundary(&layers[s], &index);
        boundary_ranks[s] = field.rank(layers[s - 1].len(), &cols);
    }
    let ranks = (0..layers.len())
        .map(|s| (layers[s].len() - boundary_ranks[s] - boundary_ranks[s + 1]) as u64)
        .collect();
    Ok(HomologyRanks { ranks })
}

/// `β_{i,j}(R/I) = Σ_{|S| = j} dim H̃_{j−i−1}(Δ_S)`, where `Δ` is the complex
/// whose Stanley–Reisner ideal is `I` and `Δ_S` its restriction to `S`.
pub fn hochster_betti(ideal: &SquarefreeIdeal, field: FieldChoice) -> Result<BettiTable, HomologyError> {
    let n = ideal.vars();
    if n > MAX_HOCHSTER_VARS {
        return Err(HomologyError::TooManyVariables(n));
    }
    let delta = SimplicialComplex::from_ideal(ideal);
    let contributions: Vec<(usize, usize, u64)> = (0..1u64 << n)
        .into_par_iter()
        .flat_map_iter(|s| {
            let j = s.count_ones() as usize;
            let ranks = reduced_homology_ranks(&delta.restrict(s), field)
                .expect("ground bounded by MAX_HOCHSTER_VARS");
            ranks
                .nonzero()
                .map(|(d, r)| ((j as isize - d - 1) as usize, j, r))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut table = BettiTable::new(BettiSource::Homology(field));
    for (i, j, r) in contributions {
        table.add(i, j, r);
    }
    Ok(table)
}

/// `(reg, pd)` of `R/I(g)`.
pub fn reg_pd(g: &Graph, field: FieldChoice) -> Result<(usize, usize), HomologyError> {
    let t = hochster_betti(&SquarefreeIdeal::edge_ideal(g), field)?;
    Ok((t.reg(), t.pd()))
}
