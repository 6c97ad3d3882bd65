//! One-shot report on a graph: invariants, Betti numbers and certificates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::{BettiSource, BettiTable};
use crate::graph::{canonical_code, recognize_d_tree, DTreeCertificate, Graph, MAX_ENUMERATION_N};
use crate::homology::{hochster_betti, FieldChoice, HomologyError, MAX_HOCHSTER_VARS};
use crate::ideal::{betti_from_certificate, IdealError, LinearQuotientCertificate, SquarefreeIdeal};
use crate::invariants::{InvariantError, InvariantReport, MAX_INVARIANT_VERTICES};
use crate::structure::{
    reducing_vertex, shellable_graph, vertex_decomposable, ReducingVertex, ShellingCertificate, StructureError,
    VertexDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{n} vertices exceeds the analysis limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// Outcome of a decision procedure that may produce a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict<T> {
    Yes(T),
    No,
    Skipped(String),
}

impl<T> Verdict<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No)
    }

    pub fn certificate(&self) -> Option<&T> {
        match self {
            Verdict::Yes(c) => Some(c),
            _ => None,
        }
    }

    fn from_search<E: std::fmt::Display>(r: Result<Option<T>, E>) -> Self {
        match r {
            Ok(Some(c)) => Verdict::Yes(c),
            Ok(None) => Verdict::No,
            Err(e) => Verdict::Skipped(e.to_string()),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No => "no",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Canonical labeling code, for graphs small enough to canonicalize.
    pub canonical_code: Option<u64>,
    pub field: FieldChoice,
    pub invariants: InvariantReport,
    /// Nonzero `β_{i,j}(R/I(G))` as `(i, j, rank)`.
    pub betti: Vec<(usize, usize, u64)>,
    pub betti_source: Option<String>,
    pub reg: Option<usize>,
    pub pd: Option<usize>,
    pub linear_quotients: Verdict<LinearQuotientCertificate>,
    pub shellable: Verdict<ShellingCertificate>,
    pub vertex_decomposable: Verdict<VertexDecomposition>,
    pub complement_d_tree: Verdict<DTreeCertificate>,
    pub reducing_vertex: Verdict<ReducingVertex>,
}

/// Betti table of `R/I(g)`: Hochster's formula when small enough, otherwise
/// the linear-quotient count when a certificate is available.
pub fn betti_table(
    g: &Graph,
    field: FieldChoice,
    lq: Option<&LinearQuotientCertificate>,
) -> Result<Option<BettiTable>, AnalysisError> {
    let ideal = SquarefreeIdeal::edge_ideal(g);
    if g.n() <= MAX_HOCHSTER_VARS {
        return Ok(Some(hochster_betti(&ideal, field)?));
    }
    if ideal.is_zero() {
        let mut t = BettiTable::new(BettiSource::LinearQuotients);
        t.add(0, 0, 1);
        return Ok(Some(t));
    }
    match lq {
        Some(cert) => Ok(Some(betti_from_certificate(cert, &ideal.degrees())?)),
        None => Ok(None),
    }
}

pub fn analyze(g: &Graph, field: FieldChoice) -> Result<AnalysisReport, AnalysisError> {
    if g.n() > MAX_INVARIANT_VERTICES {
        return Err(AnalysisError::TooManyVertices {
            n: g.n(),
            max: MAX_INVARIANT_VERTICES,
        });
    }
    let invariants = InvariantReport::compute(g)?;
    let ideal = SquarefreeIdeal::edge_ideal(g);
    let linear_quotients = if ideal.is_zero() {
        Verdict::Skipped("zero ideal".to_string())
    } else {
        Verdict::from_search(ideal.linear_quotient_search(true))
    };
    let table = betti_table(g, field, linear_quotients.certificate())?;
    let reducing = if g.n() <= MAX_HOCHSTER_VARS {
        Verdict::from_search(reducing_vertex(g, field))
    } else {
        Verdict::Skipped(format!("more than {MAX_HOCHSTER_VARS} vertices"))
    };
    Ok(AnalysisReport {
        n: g.n(),
        edges: g.edges().collect(),
        canonical_code: (g.n() <= MAX_ENUMERATION_N).then(|| canonical_code(g).ok()).flatten(),
        field,
        invariants,
        betti: table.iter().flat_map(BettiTable::entries).collect(),
        betti_source: table.as_ref().map(|t| match t.source {
            BettiSource::Homology(f) => format!("hochster:{f}"),
            BettiSource::LinearQuotients => "linear_quotients".to_string(),
        }),
        reg: table.as_ref().map(BettiTable::reg),
        pd: table.as_ref().map(BettiTable::pd),
        linear_quotients,
        shellable: Verdict::from_search(shellable_graph(g)),
        vertex_decomposable: Verdict::from_search(vertex_decomposable(g)),
        complement_d_tree: match recognize_d_tree(&g.complement()) {
            Some(c) => Verdict::Yes(c),
            None => Verdict::No,
        },
        reducing_vertex: reducing,
    })
}
