//! Named graph families.
//!
//! | spec                  | graph                                                        |
//! |-----------------------|--------------------------------------------------------------|
//! | `path:k`              | path with `k` edges on `k + 1` vertices                      |
//! | `cycle:n`             | cycle `C_n`, `n ≥ 3`                                         |
//! | `complete:n`          | `K_n`                                                        |
//! | `empty:n`             | `n` isolated vertices                                        |
//! | `star:k`              | `K_{1,k}` with center 0                                      |
//! | `ex2.2:n`             | `C_{2n+1}` plus a pendant at vertex 0                        |
//! | `ex2.7:n`             | `C_{2n+1}` plus a vertex joined to vertices 0 and 1          |
//! | `dtree:d,steps,seed`  | `K_{d+1}` grown by `steps` seeded clique gluings             |
//! | `complement:<spec>`   | complement of another family member                          |
//! | `whiskered:<spec>`    | `G ∪ W(G)`                                                   |

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bits, full_mask, Graph, GraphError, VertexSet, MAX_VERTICES};

fn bad(spec: &str, reason: impl Into<String>) -> GraphError {
    GraphError::BadFamily {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_usize(spec: &str, s: &str) -> Result<usize, GraphError> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| bad(spec, format!("expected a nonnegative integer, got {:?}", s.trim())))
}

fn check_size(spec: &str, n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(bad(spec, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")))
    } else {
        Ok(())
    }
}

/// Build a graph from a family spec.
pub fn family(spec: &str) -> Result<Graph, GraphError> {
    let spec = spec.trim();
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| bad(spec, "expected <family>:<parameters>"))?;
    match name.trim() {
        "complement" => return Ok(family(args)?.complement()),
        "whiskered" => {
            let g = family(args)?;
            return g.whisker(g.vertices()).map_err(|e| bad(spec, e.to_string()));
        }
        _ => {}
    }
    let params = args
        .split(',')
        .map(|a| parse_usize(spec, a))
        .collect::<Result<Vec<_>, _>>()?;
    let one = || -> Result<usize, GraphError> {
        match params.as_slice() {
            [k] => Ok(*k),
            _ => Err(bad(spec, "expected exactly one parameter")),
        }
    };
    match name.trim() {
        "path" => {
            let k = one()?;
            check_size(spec, k.saturating_add(1))?;
            Graph::path(k)
        }
        "cycle" => {
            let n = one()?;
            if n < 3 {
                return Err(bad(spec, "a cycle needs at least 3 vertices"));
            }
            check_size(spec, n)?;
            Graph::cycle(n)
        }
        "complete" => {
            let n = one()?;
            check_size(spec, n)?;
            Graph::complete(n)
        }
        "empty" => {
            let n = one()?;
            check_size(spec, n)?;
            Graph::empty(n)
        }
        "star" => {
            let k = one()?;
            check_size(spec, k.saturating_add(1))?;
            let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        "ex2.2" | "ex2.7" => {
            let n = one()?;
            if n == 0 {
                return Err(bad(spec, "parameter must be at least 1"));
            }
            let m = n.checked_mul(2).and_then(|m| m.checked_add(1)).unwrap_or(usize::MAX);
            check_size(spec, m.saturating_add(1))?;
            let mut g = Graph::cycle(m)?.whisker(1)?;
            if name.trim() == "ex2.7" {
                g.add_edge_unchecked(1, m);
            }
            Ok(g)
        }
        "dtree" => match params.as_slice() {
            [d, steps, seed] => {
                let n = d.saturating_add(1).saturating_add(*steps);
                check_size(spec, n)?;
                Ok(random_d_tree(*d, *steps, *seed as u64))
            }
            _ => Err(bad(spec, "expected dtree:d,steps,seed")),
        },
        other => Err(bad(spec, format!("unknown family {other:?}"))),
    }
}

/// Start from `K_{d+1}` on vertices `0..=d`; each step glues a new vertex onto a
/// `d`-clique picked by dropping one vertex of a random existing `(d+1)`-clique.
fn random_d_tree(d: usize, steps: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = d + 1 + steps;
    let mut g = Graph::empty(n).expect("size checked");
    let base: VertexSet = full_mask(d + 1);
    for u in bits(base) {
        for v in bits(base) {
            if u < v {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    let mut cliques = vec![base];
    for v in d + 1..n {
        let host = *cliques.choose(&mut rng).expect("nonempty");
        let members: Vec<usize> = bits(host).collect();
        let drop = members[rng.gen_range(0..members.len())];
        let attach = host & !(1u64 << drop);
        for u in bits(attach) {
            g.add_edge_unchecked(u, v);
        }
        cliques.push(attach | 1u64 << v);
    }
    g
}
