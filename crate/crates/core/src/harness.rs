//! Theorem verification over enumerated graphs and generated d-trees.
//!
//! Hypotheses are computed on each graph, never assumed. A check whose
//! hypothesis fails is reported as skipped, so vacuous cases never count as
//! passes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::betti::BettiTable;
use crate::graph::{canonical_code, enumerate_graphs, family, is_chordal, recognize_d_tree, Graph, GraphError};
use crate::homology::{hochster_betti, FieldChoice, HomologyError, MAX_HOCHSTER_VARS};
use crate::ideal::{betti_from_certificate, verify_ses_decomposition, IdealError, SquarefreeIdeal};
use crate::invariants::{InvariantError, InvariantReport};
use crate::simplicial::independence_complex;
use crate::structure::{
    reducing_vertex, shellable, shelling_bruteforce, vertex_decomposable, StructureError, VertexDecomposition,
};

/// Largest enumeration size for homology-backed checks.
pub const MAX_HARNESS_N: usize = 7;
/// Largest generated d-tree.
pub const MAX_GENERATED_VERTICES: usize = 10;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("max_n = {0} exceeds the limit of {MAX_HARNESS_N}")]
    TooLarge(usize),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Vertex decomposable ⟹ `reg ≤ a′`.
    #[serde(rename = "2.1")]
    T2_1,
    /// Shellable ⟹ some `x` with `reg(G) ≤ reg(G ∖ N[x]) + 1`.
    #[serde(rename = "2.4")]
    T2_4,
    /// Shellable ⟹ `reg ≤ n(G)`.
    #[serde(rename = "2.5")]
    T2_5,
    /// Vertex decomposable ⟹ `reg ≤ min{a′, n}`.
    #[serde(rename = "2.9")]
    C2_9,
    /// Triangle-free complement ⟹ `reg ≤ 2`, with equality when the
    /// complement is not chordal.
    #[serde(rename = "2.10")]
    T2_10,
    /// Every vertex of a d-tree has degree at least `d`.
    #[serde(rename = "2.12")]
    L2_12,
    /// Complement a d-tree ⟹ `pd = max degree` and `I(G)` has linear quotients.
    #[serde(rename = "2.13")]
    T2_13,
    /// Linear quotients of the dual ⟺ a shelling exists.
    #[serde(rename = "A")]
    A,
    /// `pd(I^∨) = reg(R/I)`.
    #[serde(rename = "B")]
    B,
    /// `reg ≥ a(G)`.
    #[serde(rename = "katzman")]
    Katzman,
    /// `reg ≤ α′(G)`.
    #[serde(rename = "havantuyl")]
    HaVanTuyl,
    /// `reg = 1 ⟺` chordal complement.
    #[serde(rename = "froberg")]
    Froberg,
    /// Both ideal identities behind the deletion/link exact sequence.
    #[serde(rename = "ses")]
    Ses,
    /// Betti tables agree over GF(2), GF(3) and the rationals.
    #[serde(rename = "fields")]
    Fields,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::T2_1,
        TheoremId::T2_4,
        TheoremId::T2_5,
        TheoremId::C2_9,
        TheoremId::T2_10,
        TheoremId::L2_12,
        TheoremId::T2_13,
        TheoremId::A,
        TheoremId::B,
        TheoremId::Katzman,
        TheoremId::HaVanTuyl,
        TheoremId::Froberg,
        TheoremId::Ses,
        TheoremId::Fields,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T2_1 => "2.1",
            TheoremId::T2_4 => "2.4",
            TheoremId::T2_5 => "2.5",
            TheoremId::C2_9 => "2.9",
            TheoremId::T2_10 => "2.10",
            TheoremId::L2_12 => "2.12",
            TheoremId::T2_13 => "2.13",
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::Katzman => "katzman",
            TheoremId::HaVanTuyl => "havantuyl",
            TheoremId::Froberg => "froberg",
            TheoremId::Ses => "ses",
            TheoremId::Fields => "fields",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(t))
            .ok_or_else(|| HarnessError::UnknownTheorem(t.to_string()))
    }
}

/// Parses a comma-separated list; `all` selects everything.
pub fn parse_theorem_list(s: &str) -> Result<BTreeSet<TheoremId>, HarnessError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.into_iter().collect());
    }
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

/// One side of a checked relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantity {
    pub name: String,
    pub value: i64,
}

fn q(name: &str, value: impl TryInto<i64>) -> Quantity {
    Quantity {
        name: name.to_string(),
        value: value.try_into().unwrap_or(i64::MAX),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum CheckStatus {
    Pass,
    Fail {
        lhs: Quantity,
        rhs: Quantity,
        detail: String,
    },
    Skipped {
        reason: String,
    },
}

impl CheckStatus {
    fn skip(reason: impl Into<String>) -> Self {
        CheckStatus::Skipped { reason: reason.into() }
    }

    fn holds(ok: bool, lhs: Quantity, rhs: Quantity, detail: &str) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail {
                lhs,
                rhs,
                detail: detail.to_string(),
            }
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail { .. } => "fail",
            CheckStatus::Skipped { .. } => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    #[serde(flatten)]
    pub status: CheckStatus,
}

/// Invariants summarized for the record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordInvariants {
    pub a: usize,
    pub a_prime: usize,
    pub n_inv: usize,
    pub matching: usize,
    pub max_degree: usize,
    pub complement_chordal: bool,
    pub complement_triangle_free: bool,
}

/// Which certificates the searches produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordCertificates {
    pub vertex_decomposable: bool,
    pub shellable: bool,
    pub shelling_bruteforce: Option<bool>,
    pub edge_ideal_linear_quotients: Option<bool>,
    pub d_tree: Option<usize>,
    pub complement_d_tree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    /// `enumeration` or the family spec the graph came from.
    pub source: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Canonical labeling code; absent above the canonicalization size cap.
    pub canonical_code: Option<u64>,
    pub reg: usize,
    pub pd: usize,
    pub betti: Vec<(usize, usize, u64)>,
    pub invariants: RecordInvariants,
    pub certificates: RecordCertificates,
    pub checks: Vec<TheoremCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessConfig {
    pub max_n: usize,
    pub connected_only: bool,
    pub theorems: BTreeSet<TheoremId>,
    pub field: FieldChoice,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    #[serde(skip)]
    pub jobs: Option<usize>,
    /// Also check generated d-trees and their complements.
    pub generated: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            max_n: 5,
            connected_only: true,
            theorems: TheoremId::ALL.into_iter().collect(),
            field: FieldChoice::Gf2,
            seed: 0,
            jobs: None,
            generated: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessReport {
    pub config: HarnessConfig,
    pub records: Vec<GraphRecord>,
    pub summary: BTreeMap<TheoremId, Tally>,
}

impl HarnessReport {
    pub fn failures(&self) -> usize {
        self.summary.values().map(|t| t.fail).sum()
    }

    /// Failing checks with their graphs.
    pub fn failing(&self) -> impl Iterator<Item = (&GraphRecord, &TheoremCheck)> {
        self.records
            .iter()
            .flat_map(|r| r.checks.iter().map(move |c| (r, c)))
            .filter(|(_, c)| matches!(c.status, CheckStatus::Fail { .. }))
    }

    /// One row per (graph, check).
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("source\tcanonical_code\tn\tedges\treg\tpd\ttheorem\tstatus\tlhs\trhs\tnote\n");
        for r in &self.records {
            let edges = r
                .edges
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(",");
            for c in &r.checks {
                let (lhs, rhs, note) = match &c.status {
                    CheckStatus::Pass => (String::new(), String::new(), String::new()),
                    CheckStatus::Fail { lhs, rhs, detail } => (
                        format!("{}={}", lhs.name, lhs.value),
                        format!("{}={}", rhs.name, rhs.value),
                        detail.clone(),
                    ),
                    CheckStatus::Skipped { reason } => (String::new(), String::new(), reason.clone()),
                };
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.source,
                    r.canonical_code.map_or(String::new(), |c| c.to_string()),
                    r.n,
                    edges,
                    r.reg,
                    r.pd,
                    c.theorem,
                    c.status.label(),
                    lhs,
                    rhs,
                    note
                ));
            }
        }
        out
    }

    pub fn summary_text(&self) -> String {
        let mut out = String::new();
        for (id, t) in &self.summary {
            out.push_str(&format!(
                "{:<10} pass {:>6}  fail {:>4}  skipped {:>6}\n",
                id.as_str(),
                t.pass,
                t.fail,
                t.skipped
            ));
        }
        out.push_str(&format!("graphs {}  failures {}\n", self.records.len(), self.failures()));
        out
    }
}

/// Everything the checks need, computed once per graph.
struct Facts {
    table: BettiTable,
    reg: usize,
    pd: usize,
    inv: InvariantReport,
    vd: Option<VertexDecomposition>,
    shellable: bool,
    bruteforce: Option<bool>,
    shell_certs_valid: bool,
    d_tree: Option<usize>,
    co_d_tree: Option<usize>,
}

fn facts(g: &Graph, field: FieldChoice) -> Result<Facts, HarnessError> {
    let table = hochster_betti(&SquarefreeIdeal::edge_ideal(g), field)?;
    let delta = independence_complex(g);
    let lq_shelling = shellable(&delta)?;
    let brute = match shelling_bruteforce(&delta) {
        Ok(c) => Some(c),
        Err(StructureError::TooManyFacets { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let shell_certs_valid = lq_shelling.iter().chain(brute.iter().flatten()).all(|c| c.validate(&delta));
    let vd = vertex_decomposable(g)?;
    Ok(Facts {
        reg: table.reg(),
        pd: table.pd(),
        table,
        inv: InvariantReport::compute(g)?,
        shellable: lq_shelling.is_some(),
        bruteforce: brute.map(|c| c.is_some()),
        shell_certs_valid,
        vd,
        d_tree: recognize_d_tree(g).map(|c| c.d),
        co_d_tree: recognize_d_tree(&g.complement()).map(|c| c.d),
    })
}

fn check(id: TheoremId, g: &Graph, f: &Facts, field: FieldChoice) -> Result<CheckStatus, HarnessError> {
    let reg = f.reg;
    let inv = &f.inv;
    let status = match id {
        TheoremId::T2_1 => match &f.vd {
            None => CheckStatus::skip("not vertex decomposable"),
            Some(_) => CheckStatus::holds(
                reg <= inv.a_prime.value,
                q("reg", reg),
                q("a_prime", inv.a_prime.value),
                "reg exceeds a'",
            ),
        },
        TheoremId::T2_4 => {
            if !f.shellable {
                CheckStatus::skip("not shellable")
            } else {
                match reducing_vertex(g, field)? {
                    Some(_) => CheckStatus::Pass,
                    None => {
                        let best = (0..g.n())
                            .map(|x| hochster_reg(&g.remove(g.closed_neighbors(x)).0, field))
                            .collect::<Result<Vec<_>, _>>()?
                            .into_iter()
                            .max()
                            .unwrap_or(0);
                        CheckStatus::holds(
                            false,
                            q("reg", reg),
                            q("max_x reg(G - N[x]) + 1", best + 1),
                            "no vertex reduces the regularity by at most one",
                        )
                    }
                }
            }
        }
        TheoremId::T2_5 => {
            if !f.shellable {
                CheckStatus::skip("not shellable")
            } else {
                CheckStatus::holds(reg <= inv.n_inv.value, q("reg", reg), q("n", inv.n_inv.value), "reg exceeds n(G)")
            }
        }
        TheoremId::C2_9 => match &f.vd {
            None => CheckStatus::skip("not vertex decomposable"),
            Some(_) => {
                let bound = inv.a_prime.value.min(inv.n_inv.value);
                CheckStatus::holds(reg <= bound, q("reg", reg), q("min(a_prime, n)", bound), "reg exceeds min{a', n}")
            }
        },
        TheoremId::T2_10 => {
            if !inv.complement_triangle_free {
                CheckStatus::skip("complement has a triangle")
            } else if reg > 2 {
                CheckStatus::holds(false, q("reg", reg), q("bound", 2), "reg exceeds 2")
            } else if !inv.complement_chordal {
                CheckStatus::holds(
                    reg == 2,
                    q("reg", reg),
                    q("expected", 2),
                    "complement not chordal but reg differs from 2",
                )
            } else {
                CheckStatus::Pass
            }
        }
        TheoremId::L2_12 => match f.d_tree {
            None => CheckStatus::skip("not a d-tree"),
            Some(d) => CheckStatus::holds(
                g.min_degree() >= d,
                q("min_degree", g.min_degree()),
                q("d", d),
                "a vertex of degree below d",
            ),
        },
        TheoremId::T2_13 => theorem_2_13(g, f.co_d_tree, Some(&f.table), f.inv.complement_chordal)?,
        TheoremId::A => match f.bruteforce {
            None => CheckStatus::skip("too many facets for the direct search"),
            Some(brute) => {
                if !f.shell_certs_valid {
                    CheckStatus::holds(false, q("certificates_valid", 0), q("expected", 1), "a shelling certificate failed replay")
                } else {
                    CheckStatus::holds(
                        brute == f.shellable,
                        q("linear_quotients", f.shellable as i64),
                        q("bruteforce", brute as i64),
                        "linear quotients and direct shelling search disagree",
                    )
                }
            }
        },
        TheoremId::B => {
            let ideal = SquarefreeIdeal::edge_ideal(g);
            if ideal.is_zero() {
                CheckStatus::skip("no edges")
            } else {
                // pd(J) = pd(R/J) − 1 for a proper nonzero ideal J
                let dual = hochster_betti(&ideal.dual(), field)?;
                let pd_dual = dual.pd() - 1;
                CheckStatus::holds(pd_dual == reg, q("pd(I^dual)", pd_dual), q("reg", reg), "duality identity fails")
            }
        }
        TheoremId::Katzman => CheckStatus::holds(reg >= inv.a.value, q("reg", reg), q("a", inv.a.value), "reg below a(G)"),
        TheoremId::HaVanTuyl => CheckStatus::holds(
            reg <= inv.matching.value,
            q("reg", reg),
            q("matching", inv.matching.value),
            "reg exceeds the matching number",
        ),
        TheoremId::Froberg => {
            if g.edge_count() == 0 {
                CheckStatus::skip("no edges")
            } else {
                CheckStatus::holds(
                    (reg == 1) == inv.complement_chordal,
                    q("reg_is_one", (reg == 1) as i64),
                    q("complement_chordal", inv.complement_chordal as i64),
                    "linear resolution and chordal complement disagree",
                )
            }
        }
        TheoremId::Ses => match f.vd.as_ref().map(VertexDecomposition::root_shedding_vertex) {
            None => CheckStatus::skip("not vertex decomposable"),
            Some(None) => CheckStatus::skip("decomposition is a single base case"),
            Some(Some(x)) => {
                let r = verify_ses_decomposition(g, x)?;
                CheckStatus::holds(
                    r.holds(),
                    q("sum_identity", r.sum_identity as i64),
                    q("intersection_identity", r.intersection_identity as i64),
                    &format!("identity fails at shedding vertex {x}"),
                )
            }
        },
        TheoremId::Fields => {
            let ideal = SquarefreeIdeal::edge_ideal(g);
            let mut mismatch = None;
            for other in [FieldChoice::Gf2, FieldChoice::Gfp(3), FieldChoice::Rational] {
                let t = hochster_betti(&ideal, other)?;
                if !t.same_entries(&f.table) {
                    mismatch = Some((other, t));
                    break;
                }
            }
            match mismatch {
                None => CheckStatus::Pass,
                Some((other, t)) => CheckStatus::holds(
                    false,
                    q(&format!("total_betti_{field}"), f.table.totals().iter().sum::<u64>()),
                    q(&format!("total_betti_{other}"), t.totals().iter().sum::<u64>()),
                    "Betti tables differ between fields",
                ),
            }
        }
    };
    Ok(status)
}

fn hochster_reg(g: &Graph, field: FieldChoice) -> Result<usize, HomologyError> {
    Ok(hochster_betti(&SquarefreeIdeal::edge_ideal(g), field)?.reg())
}

/// `pd(R/I(G)) = max degree` when the complement is a d-tree, through the
/// linear-quotient pipeline and, when supplied, the homology table.
fn theorem_2_13(
    g: &Graph,
    co_d_tree: Option<usize>,
    homology: Option<&BettiTable>,
    co_chordal: bool,
) -> Result<CheckStatus, HarnessError> {
    let maxdeg = g.max_degree();
    if co_d_tree.is_none() {
        if let (true, Some(t)) = (co_chordal, homology) {
            if t.pd() != maxdeg {
                return Ok(CheckStatus::skip(format!(
                    "expected non-theorem case: complement chordal but not a d-tree, pd {} != max degree {maxdeg}",
                    t.pd()
                )));
            }
        }
        return Ok(CheckStatus::skip("complement is not a d-tree"));
    }
    let ideal = SquarefreeIdeal::edge_ideal(g);
    if ideal.is_zero() {
        // complement is K_n; R/I(G) = R and every degree is 0
        return Ok(CheckStatus::holds(maxdeg == 0, q("pd", 0), q("max_degree", maxdeg), "pd differs from max degree"));
    }
    let Some(cert) = ideal.linear_quotient_search(true)? else {
        return Ok(CheckStatus::holds(
            false,
            q("linear_quotients", 0),
            q("expected", 1),
            "edge ideal has no linear-quotient order",
        ));
    };
    let lq = betti_from_certificate(&cert, &ideal.degrees())?;
    if lq.pd() != maxdeg {
        return Ok(CheckStatus::holds(
            false,
            q("pd_linear_quotients", lq.pd()),
            q("max_degree", maxdeg),
            "pd from linear quotients differs from max degree",
        ));
    }
    if let Some(t) = homology {
        if t.pd() != maxdeg {
            return Ok(CheckStatus::holds(
                false,
                q("pd_hochster", t.pd()),
                q("max_degree", maxdeg),
                "pd from homology differs from max degree",
            ));
        }
        if !t.same_entries(&lq) {
            return Ok(CheckStatus::holds(
                false,
                q("pd_hochster", t.pd()),
                q("pd_linear_quotients", lq.pd()),
                "Betti tables from homology and linear quotients differ",
            ));
        }
    }
    Ok(CheckStatus::Pass)
}

/// All requested checks on one graph.
pub fn check_graph(
    g: &Graph,
    source: &str,
    theorems: &BTreeSet<TheoremId>,
    field: FieldChoice,
) -> Result<GraphRecord, HarnessError> {
    let f = facts(g, field)?;
    let checks = theorems
        .iter()
        .map(|&id| Ok(TheoremCheck { theorem: id, status: check(id, g, &f, field)? }))
        .collect::<Result<Vec<_>, HarnessError>>()?;
    Ok(GraphRecord {
        source: source.to_string(),
        n: g.n(),
        edges: g.edges().collect(),
        canonical_code: Some(canonical_code(g)?),
        reg: f.reg,
        pd: f.pd,
        betti: f.table.entries().collect(),
        invariants: RecordInvariants {
            a: f.inv.a.value,
            a_prime: f.inv.a_prime.value,
            n_inv: f.inv.n_inv.value,
            matching: f.inv.matching.value,
            max_degree: f.inv.max_degree,
            complement_chordal: f.inv.complement_chordal,
            complement_triangle_free: f.inv.complement_triangle_free,
        },
        certificates: RecordCertificates {
            vertex_decomposable: f.vd.is_some(),
            shellable: f.shellable,
            shelling_bruteforce: f.bruteforce,
            edge_ideal_linear_quotients: None,
            d_tree: f.d_tree,
            complement_d_tree: f.co_d_tree,
        },
        checks,
    })
}

/// Family specs for the generated d-tree cases: `d ∈ {1, 2, 3}`, at most
/// [`MAX_GENERATED_VERTICES`] vertices, three seeds per shape.
pub fn generated_d_tree_specs(seed: u64) -> Vec<String> {
    let mut specs = Vec::new();
    for d in 1..=3usize {
        for steps in 1..=MAX_GENERATED_VERTICES - d - 1 {
            for k in 0..3u64 {
                specs.push(format!("dtree:{d},{steps},{}", seed.wrapping_add(k)));
            }
        }
    }
    specs
}

/// Checks on a generated d-tree `T`: the degree bound on `T` itself and the
/// projective dimension of `R/I(T^c)`.
pub fn check_generated(spec: &str, theorems: &BTreeSet<TheoremId>, field: FieldChoice) -> Result<Vec<GraphRecord>, HarnessError> {
    let tree = family(spec)?;
    let g = tree.complement();
    let d = recognize_d_tree(&tree).map(|c| c.d);
    let mut out = Vec::new();
    if theorems.contains(&TheoremId::L2_12) {
        let status = match d {
            None => CheckStatus::holds(false, q("d_tree", 0), q("expected", 1), "generator produced a non-d-tree"),
            Some(d) => CheckStatus::holds(
                tree.min_degree() >= d,
                q("min_degree", tree.min_degree()),
                q("d", d),
                "a vertex of degree below d",
            ),
        };
        out.push(generated_record(&tree, spec, d, None, TheoremCheck { theorem: TheoremId::L2_12, status }, field)?);
    }
    if theorems.contains(&TheoremId::T2_13) {
        let homology = if g.n() <= MAX_HOCHSTER_VARS {
            Some(hochster_betti(&SquarefreeIdeal::edge_ideal(&g), field)?)
        } else {
            None
        };
        let status = theorem_2_13(&g, d, homology.as_ref(), true)?;
        let co_spec = format!("complement:{spec}");
        out.push(generated_record(&g, &co_spec, None, d, TheoremCheck { theorem: TheoremId::T2_13, status }, field)?);
    }
    Ok(out)
}

fn generated_record(
    g: &Graph,
    source: &str,
    d_tree: Option<usize>,
    co_d_tree: Option<usize>,
    check: TheoremCheck,
    field: FieldChoice,
) -> Result<GraphRecord, HarnessError> {
    let ideal = SquarefreeIdeal::edge_ideal(g);
    // only complements of d-trees are expected to have linear quotients
    let lq = match co_d_tree {
        Some(_) if !ideal.is_zero() => ideal.linear_quotient_search(true)?,
        _ => None,
    };
    let table = match &lq {
        Some(cert) if g.n() > MAX_HOCHSTER_VARS => betti_from_certificate(cert, &ideal.degrees())?,
        _ => hochster_betti(&ideal, field)?,
    };
    let inv = InvariantReport::compute(g)?;
    Ok(GraphRecord {
        source: source.to_string(),
        n: g.n(),
        edges: g.edges().collect(),
        canonical_code: canonical_code(g).ok(),
        reg: table.reg(),
        pd: table.pd(),
        betti: table.entries().collect(),
        invariants: RecordInvariants {
            a: inv.a.value,
            a_prime: inv.a_prime.value,
            n_inv: inv.n_inv.value,
            matching: inv.matching.value,
            max_degree: inv.max_degree,
            complement_chordal: is_chordal(&g.complement()).is_some(),
            complement_triangle_free: inv.complement_triangle_free,
        },
        certificates: RecordCertificates {
            vertex_decomposable: false,
            shellable: false,
            shelling_bruteforce: None,
            edge_ideal_linear_quotients: co_d_tree.map(|_| lq.is_some()),
            d_tree,
            complement_d_tree: co_d_tree,
        },
        checks: vec![check],
    })
}

/// Runs every requested check over the enumeration (and generated d-trees).
/// Records come back in enumeration order whatever the worker count.
pub fn verify_theorems(config: &HarnessConfig) -> Result<HarnessReport, HarnessError> {
    if config.max_n > MAX_HARNESS_N {
        return Err(HarnessError::TooLarge(config.max_n));
    }
    let run = || -> Result<Vec<GraphRecord>, HarnessError> {
        let mut graphs = Vec::new();
        for n in 1..=config.max_n {
            graphs.extend(enumerate_graphs(n, config.connected_only)?);
        }
        let mut records = graphs
            .par_iter()
            .map(|g| check_graph(g, "enumeration", &config.theorems, config.field))
            .collect::<Result<Vec<_>, _>>()?;
        if config.generated {
            let generated = generated_d_tree_specs(config.seed)
                .par_iter()
                .map(|spec| check_generated(spec, &config.theorems, config.field))
                .collect::<Result<Vec<_>, _>>()?;
            records.extend(generated.into_iter().flatten());
        }
        Ok(records)
    };
    let records = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| HarnessError::Pool(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let mut summary: BTreeMap<TheoremId, Tally> = config.theorems.iter().map(|&t| (t, Tally::default())).collect();
    for c in records.iter().flat_map(|r| &r.checks) {
        let t = summary.entry(c.theorem).or_default();
        match c.status {
            CheckStatus::Pass => t.pass += 1,
            CheckStatus::Fail { .. } => t.fail += 1,
            CheckStatus::Skipped { .. } => t.skipped += 1,
        }
    }
    Ok(HarnessReport {
        config: config.clone(),
        records,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> BTreeSet<TheoremId> {
        TheoremId::ALL.into_iter().collect()
    }

    #[test]
    fn theorem_ids_round_trip() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!(parse_theorem_list("2.1, B,katzman").unwrap().len(), 3);
        assert_eq!(parse_theorem_list("all").unwrap().len(), TheoremId::ALL.len());
        assert!(parse_theorem_list("2.2").is_err());
    }

    #[test]
    fn c4_is_the_expected_non_theorem_case() {
        let r = check_graph(&Graph::cycle(4).unwrap(), "c4", &all(), FieldChoice::Gf2).unwrap();
        let c = r.checks.iter().find(|c| c.theorem == TheoremId::T2_13).unwrap();
        match &c.status {
            CheckStatus::Skipped { reason } => assert!(reason.starts_with("expected non-theorem case"), "{reason}"),
            other => panic!("{other:?}"),
        }
        assert_eq!((r.reg, r.pd), (1, 3));
        assert!(r.checks.iter().all(|c| !matches!(c.status, CheckStatus::Fail { .. })));
    }

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let config = HarnessConfig {
            max_n: 4,
            ..HarnessConfig::default()
        };
        let a = verify_theorems(&config).unwrap();
        assert_eq!(a.failures(), 0, "{}", a.summary_text());
        let b = verify_theorems(&HarnessConfig { jobs: Some(1), ..config }).unwrap();
        assert_eq!(a.records, b.records);
        assert!(a.to_tsv().lines().count() > a.records.len());
        assert!(generated_d_tree_specs(0).len() >= 50);
    }

    #[test]
    fn rejects_large_runs() {
        let config = HarnessConfig {
            max_n: 8,
            ..HarnessConfig::default()
        };
        assert!(matches!(verify_theorems(&config), Err(HarnessError::TooLarge(8))));
    }
}
