//! Difference (chain) graphs: bipartite graphs whose sides have nested
//! neighborhoods.

use std::collections::VecDeque;

use super::{Forbidden, Witness};
use crate::graph::Graph;

/// Bipartition with both sides ordered by increasing neighborhood.
///
/// `N(x_i)` is always the last `deg_x[i]` vertices of `side_y`, and
/// symmetrically for `y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceModel {
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
    pub deg_x: Vec<usize>,
    pub deg_y: Vec<usize>,
}

impl DifferenceModel {
    /// Re-checks every model invariant against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut side = vec![None; g.n()];
        for (s, list) in [(0, &self.side_x), (1, &self.side_y)] {
            for &v in list {
                if v >= g.n() || side[v].is_some() {
                    return false;
                }
                side[v] = Some(s);
            }
        }
        if side.iter().any(Option::is_none) {
            return false;
        }
        if g.edges().iter().any(|&(u, v)| side[u] == side[v]) {
            return false;
        }
        let upset = |own: &[usize], deg: &[usize], other: &[usize]| {
            own.iter().zip(deg).all(|(&v, &d)| {
                g.degree(v) == d && other[other.len() - d..].iter().all(|&u| g.has_edge(u, v))
            }) && deg.windows(2).all(|w| w[0] <= w[1])
        };
        upset(&self.side_x, &self.deg_x, &self.side_y) && upset(&self.side_y, &self.deg_y, &self.side_x)
    }
}

/// Builds a [`DifferenceModel`] or returns a triangle, 2K2 or C5.
pub fn recognize_difference(g: &Graph) -> Result<DifferenceModel, Witness> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    for start in 0..n {
        if color[start] != usize::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if color[u] == usize::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Err(odd_cycle_witness(g));
                }
            }
        }
    }
    let by_degree = |c: usize| {
        let mut side: Vec<usize> = (0..n).filter(|&v| color[v] == c).collect();
        side.sort_by_key(|&v| (g.degree(v), v));
        side
    };
    // isolated vertices get color 0 as BFS roots, so they land in side_x
    let side_x = by_degree(0);
    let side_y = by_degree(1);
    for side in [&side_x, &side_y] {
        for pair in side.windows(2) {
            let (u, v) = (pair[0], pair[1]);
            if let Some(&a) = g.neighbors(u).iter().find(|&&y| !g.has_edge(y, v)) {
                let c = *g
                    .neighbors(v)
                    .iter()
                    .find(|&&y| !g.has_edge(y, u))
                    .expect("larger neighborhood has a private neighbor");
                return Err(Witness::new(Forbidden::TwoK2, vec![u, a, v, c]));
            }
        }
    }
    let deg_x = side_x.iter().map(|&v| g.degree(v)).collect();
    let deg_y = side_y.iter().map(|&v| g.degree(v)).collect();
    let model = DifferenceModel { side_x, side_y, deg_x, deg_y };
    debug_assert!(model.validate(g));
    Ok(model)
}

/// A shortest odd cycle is induced: length 3 is a triangle, 5 a C5, and any
/// longer one contains two opposite edges forming a 2K2.
fn odd_cycle_witness(g: &Graph) -> Witness {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        for &(u, v) in g.edges() {
            if dist[u] == usize::MAX || dist[u] != dist[v] {
                continue;
            }
            let len = 2 * dist[u] + 1;
            if best.as_ref().is_some_and(|c| c.len() <= len) {
                continue;
            }
            let walk_up = |mut x: usize| {
                let mut p = vec![x];
                while x != root {
                    x = parent[x];
                    p.push(x);
                }
                p
            };
            let mut cycle = walk_up(u);
            cycle.reverse();
            let mut back = walk_up(v);
            back.pop();
            cycle.extend(back);
            best = Some(cycle);
        }
    }
    let c = best.expect("called on a non-bipartite graph");
    match c.len() {
        3 => Witness::new(Forbidden::Triangle, c),
        5 => Witness::new(Forbidden::C5, c),
        _ => Witness::new(Forbidden::TwoK2, vec![c[0], c[1], c[3], c[4]]),
    }
}
