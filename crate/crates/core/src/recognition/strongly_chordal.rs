//! Strongly chordal graphs by repeated simple-vertex elimination.

use super::{Forbidden, Witness};
use crate::bitset::Bits;
use crate::graph::Graph;

/// Elimination ordering in which every vertex is simple in the subgraph
/// induced by itself and the vertices after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleOrder(pub Vec<usize>);

impl SimpleOrder {
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        if !sorted.iter().copied().eq(0..n) {
            return false;
        }
        let mut alive = Bits::from_iter(n, 0..n);
        for &v in &self.0 {
            if !is_simple(g, &alive, v) {
                return false;
            }
            alive.remove(v);
        }
        true
    }
}

fn closed_in(g: &Graph, alive: &Bits, v: usize) -> Bits {
    let mut b = Bits::from_iter(g.n(), g.neighbors(v).iter().copied().filter(|&u| alive.contains(u)));
    b.insert(v);
    b
}

/// For all `y, z ∈ N[x]` (inside `alive`): `N[y] ⊆ N[z]` or `N[z] ⊆ N[y]`.
pub(crate) fn is_simple(g: &Graph, alive: &Bits, x: usize) -> bool {
    let members: Vec<usize> = closed_in(g, alive, x).ones().collect();
    let hoods: Vec<Bits> = members.iter().map(|&y| closed_in(g, alive, y)).collect();
    for (i, a) in hoods.iter().enumerate() {
        for b in &hoods[i + 1..] {
            if !a.is_subset(b) && !b.is_subset(a) {
                return false;
            }
        }
    }
    true
}

/// Removes the lowest-id simple vertex until none is left; returns the
/// remaining vertex set if some induced subgraph has no simple vertex.
pub fn recognize_strongly_chordal(g: &Graph) -> Result<SimpleOrder, Witness> {
    let n = g.n();
    let mut alive = Bits::from_iter(n, 0..n);
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = alive.ones().find(|&x| is_simple(g, &alive, x));
        match next {
            Some(x) => {
                alive.remove(x);
                order.push(x);
            }
            None => return Err(Witness::new(Forbidden::NoSimpleVertex, alive.ones().collect())),
        }
    }
    Ok(SimpleOrder(order))
}
