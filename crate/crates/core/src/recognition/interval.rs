//! Interval graphs as chordal graphs whose maximal cliques admit a
//! consecutive arrangement.

use thiserror::Error;

use super::chordal::{elimination_candidate, elimination_defect, find_hole, maximal_cliques};
use super::{Forbidden, Witness};
use crate::graph::Graph;

/// Search nodes allowed when arranging cliques.
pub const ARRANGEMENT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("not an interval graph ({0})")]
    NotInterval(Witness),
    #[error("clique arrangement search exceeded {budget} nodes")]
    BudgetExceeded { budget: usize },
}

/// Maximal cliques `C_1..C_t` in an order where each vertex occupies a
/// contiguous run `first[x]..=last[x]` (0-based clique indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOrder {
    cliques: Vec<Vec<usize>>,
    first: Vec<usize>,
    last: Vec<usize>,
    /// `xcount[p][q]` = number of vertices with `p <= first` and `last <= q`.
    xcount: Vec<Vec<usize>>,
}

impl CliqueOrder {
    /// Derives the clique ranges and `X_{p,q}` counts for an arrangement.
    pub fn new(n: usize, cliques: Vec<Vec<usize>>) -> Self {
        let t = cliques.len();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0; n];
        for (i, c) in cliques.iter().enumerate() {
            for &v in c {
                first[v] = first[v].min(i);
                last[v] = last[v].max(i);
            }
        }
        let mut xcount = vec![vec![0; t]; t];
        for v in 0..n {
            if first[v] == usize::MAX {
                continue;
            }
            for row in xcount.iter_mut().take(first[v] + 1) {
                for cell in row.iter_mut().skip(last[v]) {
                    *cell += 1;
                }
            }
        }
        CliqueOrder { cliques, first, last, xcount }
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn t(&self) -> usize {
        self.cliques.len()
    }

    pub fn first(&self, v: usize) -> usize {
        self.first[v]
    }

    pub fn last(&self, v: usize) -> usize {
        self.last[v]
    }

    /// `|X_{p,q}|` for `p <= q`.
    pub fn xcount(&self, p: usize, q: usize) -> usize {
        self.xcount[p][q]
    }

    /// Vertices whose clique run lies inside `p..=q`, ascending.
    pub fn x_set(&self, p: usize, q: usize) -> Vec<usize> {
        (0..self.first.len()).filter(|&v| p <= self.first[v] && self.last[v] <= q).collect()
    }

    /// Every clique is a maximal clique of `g`, every edge lies in one, and
    /// every vertex's cliques are consecutive.
    pub fn validate(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.first.len() != n || (0..n).any(|v| self.first[v] == usize::MAX) {
            return false;
        }
        for c in &self.cliques {
            let is_clique = c.iter().enumerate().all(|(i, &u)| c[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            let maximal = (0..n).all(|x| c.contains(&x) || c.iter().any(|&u| !g.has_edge(u, x)));
            if !is_clique || !maximal {
                return false;
            }
        }
        let consecutive = (0..n).all(|v| (self.first[v]..=self.last[v]).all(|i| self.cliques[i].contains(&v)));
        let occurrences: usize = self.cliques.iter().map(Vec::len).sum();
        let span: usize = (0..n).map(|v| self.last[v] - self.first[v] + 1).sum();
        let covered = g.edges().iter().all(|&(u, v)| self.first[u].max(self.first[v]) <= self.last[u].min(self.last[v]));
        consecutive && occurrences == span && covered
    }
}

/// Maximal cliques from an MCS elimination ordering, then a backtracking
/// search for a consecutive arrangement, component by component.
pub fn recognize_interval(g: &Graph) -> Result<CliqueOrder, IntervalError> {
    let peo = elimination_candidate(g);
    if elimination_defect(g, &peo).is_some() {
        let hole = find_hole(g).expect("non-chordal graphs have a hole");
        let kind = if hole.len() == 4 { Forbidden::C4 } else { Forbidden::Hole };
        return Err(IntervalError::NotInterval(Witness::new(kind, hole)));
    }
    let cliques = maximal_cliques(g, &peo);
    let mut arranged = Vec::with_capacity(cliques.len());
    let mut budget = ARRANGEMENT_BUDGET;
    for comp in g.components() {
        let local: Vec<Vec<usize>> = cliques.iter().filter(|c| comp.binary_search(&c[0]).is_ok()).cloned().collect();
        match arrange(g.n(), &local, &mut budget) {
            Some(order) => arranged.extend(order.into_iter().map(|i| local[i].clone())),
            None if budget == 0 => return Err(IntervalError::BudgetExceeded { budget: ARRANGEMENT_BUDGET }),
            None => {
                return Err(IntervalError::NotInterval(Witness::new(Forbidden::NoConsecutiveArrangement, comp)));
            }
        }
    }
    let order = CliqueOrder::new(g.n(), arranged);
    debug_assert!(order.validate(g));
    Ok(order)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Seen {
    Unseen,
    Open,
    Closed,
}

struct Arranger<'a> {
    cliques: &'a [Vec<usize>],
    state: Vec<Seen>,
    remaining: Vec<usize>,
    placed: Vec<bool>,
    order: Vec<usize>,
    budget: &'a mut usize,
}

impl Arranger<'_> {
    /// A clique may follow the current prefix iff it contains no closed
    /// vertex and every open vertex that still has unplaced cliques.
    fn fits(&self, c: usize) -> bool {
        let clique = &self.cliques[c];
        clique.iter().all(|&v| self.state[v] != Seen::Closed)
            && self.order.last().is_none_or(|&prev| {
                self.cliques[prev].iter().all(|&v| self.remaining[v] == 0 || clique.contains(&v))
            })
    }

    fn search(&mut self) -> bool {
        if self.order.len() == self.cliques.len() {
            return true;
        }
        for c in 0..self.cliques.len() {
            if self.placed[c] || !self.fits(c) {
                continue;
            }
            if *self.budget == 0 {
                return false;
            }
            *self.budget -= 1;
            let saved = self.state.clone();
            if let Some(&prev) = self.order.last() {
                for &v in &self.cliques[prev] {
                    if !self.cliques[c].contains(&v) {
                        self.state[v] = Seen::Closed;
                    }
                }
            }
            for &v in &self.cliques[c] {
                self.state[v] = Seen::Open;
                self.remaining[v] -= 1;
            }
            self.placed[c] = true;
            self.order.push(c);
            if self.search() {
                return true;
            }
            self.order.pop();
            self.placed[c] = false;
            for &v in &self.cliques[c] {
                self.remaining[v] += 1;
            }
            self.state = saved;
        }
        false
    }
}

fn arrange(n: usize, cliques: &[Vec<usize>], budget: &mut usize) -> Option<Vec<usize>> {
    let mut remaining = vec![0; n];
    for c in cliques {
        for &v in c {
            remaining[v] += 1;
        }
    }
    let mut a = Arranger {
        cliques,
        state: vec![Seen::Unseen; n],
        remaining,
        placed: vec![false; cliques.len()],
        order: Vec::new(),
        budget,
    };
    a.search().then_some(a.order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_cliques_in_path_order() {
        let g = Graph::path(4);
        let co = recognize_interval(&g).unwrap();
        assert!(co.validate(&g));
        let mut cl = co.cliques().to_vec();
        if cl[0] != vec![0, 1] {
            cl.reverse();
        }
        assert_eq!(cl, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn c4_reports_the_hole() {
        match recognize_interval(&Graph::cycle(4)) {
            Err(IntervalError::NotInterval(w)) => {
                assert_eq!(w.kind, Forbidden::C4);
                assert_eq!(w.vertices.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn star_cliques_share_the_center() {
        let g = Graph::star(3);
        let co = recognize_interval(&g).unwrap();
        assert_eq!(co.t(), 3);
        assert!(co.cliques().iter().all(|c| c.contains(&0)));
        assert_eq!(co.first(0), 0);
        assert_eq!(co.last(0), 2);
        assert_eq!(co.xcount(0, 2), 4);
        assert_eq!(co.xcount(1, 1), 1);
    }

    #[test]
    fn chordal_asteroidal_triple_is_not_interval() {
        // subdivided claw: center 0, arms 0-1-2, 0-3-4, 0-5-6
        let g = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        match recognize_interval(&g) {
            Err(IntervalError::NotInterval(w)) => assert_eq!(w.kind, Forbidden::NoConsecutiveArrangement),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn xcounts_follow_definition() {
        let g = Graph::path(5);
        let co = recognize_interval(&g).unwrap();
        for p in 0..co.t() {
            for q in p..co.t() {
                assert_eq!(co.xcount(p, q), co.x_set(p, q).len());
            }
        }
    }
}
