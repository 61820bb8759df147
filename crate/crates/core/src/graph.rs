//! Simple undirected graphs on dense vertex ids, colorings and profiles.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Errors raised while building a graph or checking a coloring against it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A simple undirected graph with vertices `0..n`.
///
/// The sorted edge list is authoritative. Adjacency lists and a hashed pair
/// set are derived views kept for fast neighborhood scans and O(1) tests.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    pairs: HashSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut pairs = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !pairs.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            list.push(key);
        }
        Ok(Self::from_canonical(n, list, pairs))
    }

    /// Builds a graph from pairs that may repeat; duplicates are merged.
    /// Self-loops and out-of-range ids are still rejected.
    pub fn from_edges_dedup(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let set: BTreeSet<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Self::new(n, set)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new(), HashSet::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph edges are valid")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are valid")
    }

    fn from_canonical(n: usize, mut edges: Vec<(usize, usize)>, pairs: HashSet<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.pairs.contains(&(u.min(v), u.max(v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn check_ids<'a>(&self, ids: impl IntoIterator<Item = &'a usize>) -> Result<(), GraphError> {
        for &v in ids {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(())
    }

    /// Same vertex set, with a pair adjacent iff it is not adjacent here.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::new();
        for u in 0..n {
            let mut it = self.adj[u].iter().copied().filter(|&x| x > u).peekable();
            for v in u + 1..n {
                if it.peek() == Some(&v) {
                    it.next();
                } else {
                    edges.push((u, v));
                }
            }
        }
        let pairs = edges.iter().copied().collect();
        Self::from_canonical(n, edges, pairs)
    }

    /// `s ∪ N(s)`.
    pub fn closed_neighborhood(&self, s: &BTreeSet<usize>) -> Result<BTreeSet<usize>, GraphError> {
        self.check_ids(s)?;
        let mut out = s.clone();
        for &v in s {
            out.extend(self.adj[v].iter().copied());
        }
        Ok(out)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff the color classes are disjoint and no edge joins black to white.
    pub fn verify_coloring(&self, c: &Coloring) -> Result<bool, GraphError> {
        self.check_ids(c.black.iter().chain(c.white.iter()))?;
        if !c.black.is_disjoint(&c.white) {
            return Ok(false);
        }
        Ok(c
            .black
            .iter()
            .all(|&b| self.adj[b].iter().all(|u| !c.white.contains(u))))
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("disjoint union is simple")
    }

    /// Join: disjoint union plus every edge across the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let cross = (0..self.n).flat_map(|u| (0..other.n).map(move |v| (u, v + shift)));
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .chain(cross);
        Graph::new(self.n + other.n, edges).expect("join is simple")
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges).finish()
    }
}

/// A black set `B` and a white set `W`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Coloring {
    pub black: BTreeSet<usize>,
    pub white: BTreeSet<usize>,
}

impl Coloring {
    pub fn new(black: impl IntoIterator<Item = usize>, white: impl IntoIterator<Item = usize>) -> Self {
        Coloring { black: black.into_iter().collect(), white: white.into_iter().collect() }
    }

    pub fn b(&self) -> usize {
        self.black.len()
    }

    pub fn w(&self) -> usize {
        self.white.len()
    }

    /// Exchanges the roles of the two colors.
    pub fn swapped(self) -> Self {
        Coloring { black: self.white, white: self.black }
    }
}

/// Broken [`BWProfile`] invariant, reported by [`BWProfile::check_invariants`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileViolation {
    #[error("profile has length {len}, expected {expected}")]
    Length { len: usize, expected: usize },
    #[error("f(0) = {0}, expected n")]
    Base(usize),
    #[error("f({b}) < f({next}) breaks monotonicity", next = .b + 1)]
    Monotone { b: usize },
    #[error("f({b}) = {value} exceeds n - b")]
    Budget { b: usize, value: usize },
    #[error("color swap asymmetry at b={b}, w={w}")]
    Symmetry { b: usize, w: usize },
}

/// `f[b]` = largest number of white vertices in a coloring with exactly `b`
/// black vertices, for `0 <= b <= n`.
///
/// Whites can always be uncolored, so `(b, w)` is feasible iff `w <= f[b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BWProfile(Vec<usize>);

impl BWProfile {
    pub fn new(values: Vec<usize>) -> Self {
        assert!(!values.is_empty(), "a profile has at least the entry f(0)");
        BWProfile(values)
    }

    /// Number of vertices of the underlying graph.
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `f[b]`, or `None` when `b > n`.
    pub fn get(&self, b: usize) -> Option<usize> {
        self.0.get(b).copied()
    }

    /// Decision form: is there a coloring with `b` black and `w` white?
    pub fn admits(&self, b: usize, w: usize) -> bool {
        self.get(b).is_some_and(|f| w <= f)
    }

    pub fn check_invariants(&self) -> Result<(), ProfileViolation> {
        let n = self.n();
        let f = &self.0;
        if f[0] != n {
            return Err(ProfileViolation::Base(f[0]));
        }
        for b in 0..=n {
            if f[b] > n - b {
                return Err(ProfileViolation::Budget { b, value: f[b] });
            }
            if b < n && f[b + 1] > f[b] {
                return Err(ProfileViolation::Monotone { b });
            }
        }
        for b in 0..=n {
            for w in 0..=n {
                if self.admits(b, w) != self.admits(w, b) {
                    return Err(ProfileViolation::Symmetry { b, w });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for BWProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, v) in self.0.iter().enumerate() {
            writeln!(f, "{b} {v}")?;
        }
        Ok(())
    }
}
