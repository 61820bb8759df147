//! Threshold graphs via nested-neighborhood vertex orderings.

use super::{Forbidden, Witness};
use crate::graph::Graph;

/// Ordering `x_1..x_n` in which consecutive vertices have nested open
/// (nonadjacent pair) or closed (adjacent pair) neighborhoods.
///
/// Along such an ordering the neighbors of `x_i` that come after it form a
/// suffix, so adjacency between a vertex and any later vertex is one
/// comparison against `first_later[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdOrdering {
    order: Vec<usize>,
    first_later: Vec<usize>,
}

/// Why an ordering does not certify a threshold graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingDefect {
    NotAPermutation,
    /// Positions `i` and `i + 1` (0-based) are not nested.
    NotNested(usize),
}

impl ThresholdOrdering {
    /// Validates `order` against `g`.
    pub fn from_order(g: &Graph, order: Vec<usize>) -> Result<Self, OrderingDefect> {
        let n = g.n();
        let mut pos = vec![usize::MAX; n];
        if order.len() != n {
            return Err(OrderingDefect::NotAPermutation);
        }
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(OrderingDefect::NotAPermutation);
            }
            pos[v] = i;
        }
        for i in 1..n {
            if !nested(g, order[i - 1], order[i]) {
                return Err(OrderingDefect::NotNested(i - 1));
            }
        }
        let first_later = (0..n)
            .map(|i| {
                let v = order[i];
                let later: Vec<usize> = g.neighbors(v).iter().map(|&u| pos[u]).filter(|&p| p > i).collect();
                let first = later.iter().copied().min().unwrap_or(n);
                debug_assert_eq!(later.len(), n - first, "later neighbors form a suffix");
                first
            })
            .collect();
        Ok(ThresholdOrdering { order, first_later })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Adjacency of the vertices at 0-based positions `i` and `j`.
    pub fn adjacent_at(&self, i: usize, j: usize) -> bool {
        let (lo, hi) = (i.min(j), i.max(j));
        lo != hi && hi >= self.first_later[lo]
    }
}

/// `N(u) ⊆ N(v)` when `u ≁ v`, `N[u] ⊆ N[v]` when `u ~ v`.
fn nested(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).iter().all(|&x| x == v || g.has_edge(x, v))
}

/// Sorts by degree (ties by id) and validates; a failing consecutive pair
/// yields a P4, C4 or 2K2 directly.
pub fn recognize_threshold(g: &Graph) -> Result<ThresholdOrdering, Witness> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    match ThresholdOrdering::from_order(g, order.clone()) {
        Ok(ord) => Ok(ord),
        Err(OrderingDefect::NotNested(i)) => Err(incomparable_pair_witness(g, order[i], order[i + 1])),
        Err(OrderingDefect::NotAPermutation) => unreachable!("sorted vertex list is a permutation"),
    }
}

/// `deg(u) <= deg(v)` and the pair is not nested: pick `a ∈ N(u) ∖ N[v]`,
/// `c ∈ N(v) ∖ N[u]`; `{u, a, v, c}` induces a P4, C4 or 2K2.
fn incomparable_pair_witness(g: &Graph, u: usize, v: usize) -> Witness {
    let a = *g
        .neighbors(u)
        .iter()
        .find(|&&x| x != v && !g.has_edge(x, v))
        .expect("pair is not nested");
    let c = *g
        .neighbors(v)
        .iter()
        .find(|&&x| x != u && !g.has_edge(x, u))
        .expect("degree order leaves a private neighbor on the larger side");
    let (uv, ac) = (g.has_edge(u, v), g.has_edge(a, c));
    match (uv, ac) {
        (true, true) => Witness::new(Forbidden::C4, vec![u, a, c, v]),
        (true, false) => Witness::new(Forbidden::P4, vec![a, u, v, c]),
        (false, true) => Witness::new(Forbidden::P4, vec![u, a, c, v]),
        (false, false) => Witness::new(Forbidden::TwoK2, vec![u, a, v, c]),
    }
}
