//! Chordality: maximum cardinality search, perfect elimination orderings,
//! maximal cliques and induced-cycle witnesses.

use std::collections::VecDeque;

use crate::bitset::Bits;
use crate::graph::Graph;

/// Maximum cardinality search visit order, lowest id on ties.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !done[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        done[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Reverse MCS order; a perfect elimination ordering iff `g` is chordal.
pub fn elimination_candidate(g: &Graph) -> Vec<usize> {
    let mut o = mcs_order(g);
    o.reverse();
    o
}

/// Position of each vertex in `order`.
fn positions(n: usize, order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// First vertex whose later neighbors are not a clique, with two offending
/// nonadjacent later neighbors.
pub fn elimination_defect(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let pos = positions(g.n(), peo);
    for (i, &v) in peo.iter().enumerate() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
        for (k, &a) in later.iter().enumerate() {
            for &b in &later[k + 1..] {
                if !g.has_edge(a, b) {
                    return Some((v, a, b));
                }
            }
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> bool {
    elimination_defect(g, &elimination_candidate(g)).is_none()
}

/// Maximal cliques of a chordal graph from a perfect elimination ordering,
/// each sorted, listed in lexicographic order.
pub fn maximal_cliques(g: &Graph, peo: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let pos = positions(n, peo);
    let candidates: Vec<Bits> = peo
        .iter()
        .enumerate()
        .map(|(i, &v)| Bits::from_iter(n, std::iter::once(v).chain(g.neighbors(v).iter().copied().filter(|&u| pos[u] > i))))
        .collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, d)| j != i && c.is_subset(d) && (c != d || j < i));
        if !dominated {
            out.push(c.ones().collect());
        }
    }
    out.sort();
    out
}

/// An induced cycle of length at least 4, in cycle order, if one exists.
///
/// Every such cycle passes through some `v` whose two cycle neighbors `a`,
/// `b` are nonadjacent and joined by a path avoiding the rest of `N[v]`; a
/// shortest such path closes a chordless cycle.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let first = elimination_defect(g, &elimination_candidate(g)).map(|(v, _, _)| v);
    let order = first.into_iter().chain(0..n);
    for v in order {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let blocked = |x: usize| x == v || (x != a && x != b && g.has_edge(x, v));
                if let Some(path) = shortest_path(g, a, b, blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, from: usize, to: usize, blocked: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut y = to;
            while y != from {
                y = parent[y];
                path.push(y);
            }
            path.reverse();
            return Some(path);
        }
        for &u in g.neighbors(x) {
            if parent[u] == usize::MAX && !blocked(u) {
                parent[u] = x;
                queue.push_back(u);
            }
        }
    }
    None
}
