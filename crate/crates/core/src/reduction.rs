//! Clique instances as inverse black-and-white instances on split graphs.
//!
//! For a graph `G` on `n` vertices and a size `s`, the split graph `H` has a
//! clique on `V(G)` and one independent vertex per edge `{y, z}` of `G`,
//! adjacent to every clique vertex except `y` and `z`. An inverse coloring
//! asks that every black vertex be adjacent to every white one. The targets
//! are `b = s` and `w = s + s(s-1)/2`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Coloring, Graph};
use crate::oracle::{decide_oracle, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("clique size {s} is outside 1..={n}")]
    SizeOutOfRange { s: usize, n: usize },
    #[error("vertex set is not a clique of the source graph")]
    NotAClique,
    #[error("expected {expected} vertices, got {got}")]
    WrongCliqueSize { expected: usize, got: usize },
    #[error("only {available} vertices remain outside the clique, {needed} black vertices are required")]
    SizeMismatch { needed: usize, available: usize },
    #[error("coloring has {b} black and {w} white vertices, targets are {target_b} and {target_w}")]
    WrongCounts { b: usize, w: usize, target_b: usize, target_w: usize },
    #[error("coloring is not an inverse coloring of the split graph")]
    InvalidColoring,
    #[error("target white count {target_w} does not exceed n = {n}; the coloring need not encode a clique")]
    ConditionNotMet { target_w: usize, n: usize },
    #[error("no clique of the target size is hosted by the coloring")]
    ConverseFailed,
}

/// The split graph `H` with its provenance maps and targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitInstance {
    pub h: Graph,
    /// Ids of `H` standing for the vertices of `G`; vertex `v` of `G` is `v`.
    pub clique_side: Vec<usize>,
    /// Ids of `H` standing for the edges of `G`, in edge order.
    pub independent_side: Vec<usize>,
    /// `edge_of[i]` is the edge of `G` encoded by `independent_side[i]`.
    pub edge_of: Vec<(usize, usize)>,
    pub target_b: usize,
    pub target_w: usize,
    pub s: usize,
    /// Vertex count of `G`.
    pub source_n: usize,
}

impl SplitInstance {
    /// The source edge of an id of `H`, if it lies on the independent side.
    pub fn edge_for(&self, id: usize) -> Option<(usize, usize)> {
        id.checked_sub(self.source_n).and_then(|i| self.edge_of.get(i).copied())
    }
}

fn choose2(s: usize) -> usize {
    s * s.saturating_sub(1) / 2
}

pub fn build_split_instance(g: &Graph, s: usize) -> Result<SplitInstance, ReductionError> {
    let n = g.n();
    if s == 0 || s > n {
        return Err(ReductionError::SizeOutOfRange { s, n });
    }
    let edge_of: Vec<(usize, usize)> = g.edges().to_vec();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    for (i, &(y, z)) in edge_of.iter().enumerate() {
        edges.extend((0..n).filter(|&x| x != y && x != z).map(|x| (x, n + i)));
    }
    let h = Graph::new(n + edge_of.len(), edges).expect("construction yields a simple graph");
    Ok(SplitInstance {
        h,
        clique_side: (0..n).collect(),
        independent_side: (n..n + edge_of.len()).collect(),
        edge_of,
        target_b: s,
        target_w: s + choose2(s),
        s,
        source_n: n,
    })
}

/// Every black vertex adjacent to every white one, and the classes disjoint.
pub fn is_inverse_coloring(h: &Graph, c: &Coloring) -> bool {
    c.black.iter().chain(&c.white).all(|&v| v < h.n())
        && c.black.is_disjoint(&c.white)
        && c.black.iter().all(|&x| c.white.iter().all(|&y| h.has_edge(x, y)))
}

fn is_clique(g: &Graph, k: &[usize]) -> bool {
    k.iter().enumerate().all(|(i, &u)| k[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Inverse coloring from an `s`-clique `k` of `G`: white on `k` and on the
/// edges inside it, black on the lowest `target_b` ids outside `k`.
pub fn clique_to_coloring(inst: &SplitInstance, g: &Graph, k: &[usize]) -> Result<Coloring, ReductionError> {
    let k: BTreeSet<usize> = k.iter().copied().collect();
    if k.len() != inst.s {
        return Err(ReductionError::WrongCliqueSize { expected: inst.s, got: k.len() });
    }
    let members: Vec<usize> = k.iter().copied().collect();
    if members.iter().any(|&v| v >= g.n()) || !is_clique(g, &members) {
        return Err(ReductionError::NotAClique);
    }
    let outside: Vec<usize> = inst.clique_side.iter().copied().filter(|v| !k.contains(v)).collect();
    if outside.len() < inst.target_b {
        return Err(ReductionError::SizeMismatch { needed: inst.target_b, available: outside.len() });
    }
    let inner_edges = inst
        .edge_of
        .iter()
        .zip(&inst.independent_side)
        .filter(|((y, z), _)| k.contains(y) && k.contains(z))
        .map(|(_, &id)| id);
    let white: BTreeSet<usize> = k.iter().copied().chain(inner_edges).collect();
    Ok(Coloring::new(outside.into_iter().take(inst.target_b), white))
}

/// Recovers an `s`-clique of `G` from an inverse coloring meeting the
/// targets, under `target_w > n`.
pub fn coloring_to_clique(inst: &SplitInstance, g: &Graph, c: &Coloring) -> Result<Vec<usize>, ReductionError> {
    if inst.target_w <= inst.source_n {
        return Err(ReductionError::ConditionNotMet { target_w: inst.target_w, n: inst.source_n });
    }
    if c.b() != inst.target_b || c.w() != inst.target_w {
        return Err(ReductionError::WrongCounts { b: c.b(), w: c.w(), target_b: inst.target_b, target_w: inst.target_w });
    }
    if !is_inverse_coloring(&inst.h, c) {
        return Err(ReductionError::InvalidColoring);
    }
    let unblack: Vec<usize> = inst.clique_side.iter().copied().filter(|v| !c.black.contains(v)).collect();
    let mut hosts: BTreeSet<usize> = c.white.iter().copied().filter(|&v| v < inst.source_n).collect();
    for &v in &c.white {
        if let Some((y, z)) = inst.edge_for(v) {
            hosts.insert(y);
            hosts.insert(z);
        }
    }
    let hosts: Vec<usize> = hosts.into_iter().collect();
    [unblack, hosts]
        .into_iter()
        .find(|cand| cand.len() == inst.s && is_clique(g, cand))
        .ok_or(ReductionError::ConverseFailed)
}

/// Inverse decision on `h`, by the oracle on its complement.
pub fn inverse_decide(h: &Graph, b: usize, w: usize, cap: usize) -> Result<bool, OracleError> {
    decide_oracle(&h.complement(), b, w, cap)
}

/// A clique of size `s` by exhaustive search, lowest ids first.
pub fn find_clique(g: &Graph, s: usize) -> Option<Vec<usize>> {
    fn grow(g: &Graph, s: usize, from: usize, acc: &mut Vec<usize>) -> bool {
        if acc.len() == s {
            return true;
        }
        for v in from..g.n() {
            if acc.iter().all(|&u| g.has_edge(u, v)) {
                acc.push(v);
                if grow(g, s, v + 1, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    grow(g, s, 0, &mut acc).then_some(acc)
}

/// Size of a largest clique, by exhaustive search.
pub fn clique_number(g: &Graph) -> usize {
    (1..=g.n()).rev().find(|&s| find_clique(g, s).is_some()).unwrap_or(0)
}
