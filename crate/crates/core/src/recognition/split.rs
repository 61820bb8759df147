//! Split graphs by the degree-sorted clique prefix.

use super::{Forbidden, Witness};
use crate::graph::Graph;

/// A clique side and an independent side partitioning the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique_side: Vec<usize>,
    pub independent_side: Vec<usize>,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> bool {
        let mut all: Vec<usize> = self.clique_side.iter().chain(&self.independent_side).copied().collect();
        all.sort_unstable();
        let partition = all.iter().copied().eq(g.vertices());
        let clique = self
            .clique_side
            .iter()
            .enumerate()
            .all(|(i, &u)| self.clique_side[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        let independent = self
            .independent_side
            .iter()
            .enumerate()
            .all(|(i, &u)| self.independent_side[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        partition && clique && independent
    }
}

/// Largest clique prefix of the degree-descending order; the rest must be
/// independent. Otherwise an induced 2K2, C4 or C5 is returned.
pub fn recognize_split(g: &Graph) -> Result<SplitPartition, Witness> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut k = 0;
    while k < order.len() && order[..k].iter().all(|&u| g.has_edge(u, order[k])) {
        k += 1;
    }
    let mut clique_side = order[..k].to_vec();
    let mut independent_side = order[k..].to_vec();
    clique_side.sort_unstable();
    independent_side.sort_unstable();
    let p = SplitPartition { clique_side, independent_side };
    if p.validate(g) {
        Ok(p)
    } else {
        Err(find_obstruction(g))
    }
}

fn find_obstruction(g: &Graph) -> Witness {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (ac, ad, bc, bd) = (g.has_edge(a, c), g.has_edge(a, d), g.has_edge(b, c), g.has_edge(b, d));
            match (ac, ad, bc, bd) {
                (false, false, false, false) => return Witness::new(Forbidden::TwoK2, vec![a, b, c, d]),
                (true, false, false, true) => return Witness::new(Forbidden::C4, vec![a, b, d, c]),
                (false, true, true, false) => return Witness::new(Forbidden::C4, vec![a, b, c, d]),
                _ => {}
            }
        }
    }
    for v0 in g.vertices() {
        for &v1 in g.neighbors(v0) {
            for &v2 in g.neighbors(v1) {
                if v2 == v0 || g.has_edge(v2, v0) {
                    continue;
                }
                for &v3 in g.neighbors(v2) {
                    if v3 == v1 || g.has_edge(v3, v1) || g.has_edge(v3, v0) {
                        continue;
                    }
                    for &v4 in g.neighbors(v3) {
                        if v4 != v2 && g.has_edge(v4, v0) && !g.has_edge(v4, v1) && !g.has_edge(v4, v2) {
                            return Witness::new(Forbidden::C5, vec![v0, v1, v2, v3, v4]);
                        }
                    }
                }
            }
        }
    }
    unreachable!("a graph without induced 2K2, C4 and C5 is split")
}
