//! Cotrees and cograph recognition by recursive component splitting.

use std::collections::VecDeque;

use super::{Forbidden, Witness};
use crate::graph::Graph;

/// Node of a [`Cotree`]; children are arena indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    /// Every vertex on the left is adjacent to every vertex on the right.
    Join(usize, usize),
    /// No edges across.
    Union(usize, usize),
}

/// Rooted binary join/union decomposition of a cograph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    root: Option<usize>,
    n: usize,
}

/// Incremental construction of a [`Cotree`].
#[derive(Debug, Default)]
pub struct CotreeBuilder {
    nodes: Vec<CotreeNode>,
}

impl CotreeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leaf(&mut self, v: usize) -> usize {
        self.push(CotreeNode::Leaf(v))
    }

    pub fn join(&mut self, a: usize, b: usize) -> usize {
        self.push(CotreeNode::Join(a, b))
    }

    pub fn union(&mut self, a: usize, b: usize) -> usize {
        self.push(CotreeNode::Union(a, b))
    }

    fn push(&mut self, node: CotreeNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    /// Finishes the tree rooted at `root`. Panics if the leaves are not a
    /// permutation of `0..k` or if a node is reachable twice.
    pub fn finish(self, root: usize) -> Cotree {
        let tree = Cotree { n: 0, nodes: self.nodes, root: Some(root) };
        let mut leaves = tree.leaves_below(root);
        let k = leaves.len();
        leaves.sort_unstable();
        assert!(leaves.iter().copied().eq(0..k), "cotree leaves must biject with 0..n");
        Cotree { n: k, ..tree }
    }
}

impl Cotree {
    pub fn empty() -> Self {
        Cotree { nodes: Vec::new(), root: None, n: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn node(&self, id: usize) -> CotreeNode {
        self.nodes[id]
    }

    /// Node ids ordered so that children precede parents.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let Some(root) = self.root else { return out };
        let mut stack = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            match (self.nodes[id], expanded) {
                (CotreeNode::Leaf(_), _) | (_, true) => out.push(id),
                (CotreeNode::Join(a, b) | CotreeNode::Union(a, b), false) => {
                    stack.push((id, true));
                    stack.push((b, false));
                    stack.push((a, false));
                }
            }
        }
        out
    }

    pub fn leaves_below(&self, id: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            match self.nodes[x] {
                CotreeNode::Leaf(v) => out.push(v),
                CotreeNode::Join(a, b) | CotreeNode::Union(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        out
    }

    /// The graph this cotree describes.
    pub fn realize(&self) -> Graph {
        let mut edges = Vec::new();
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for id in self.postorder() {
            below[id] = match self.nodes[id] {
                CotreeNode::Leaf(v) => vec![v],
                CotreeNode::Join(a, b) | CotreeNode::Union(a, b) => {
                    if let CotreeNode::Join(..) = self.nodes[id] {
                        for &u in &below[a] {
                            for &v in &below[b] {
                                edges.push((u, v));
                            }
                        }
                    }
                    let mut all = std::mem::take(&mut below[a]);
                    all.append(&mut std::mem::take(&mut below[b]));
                    all
                }
            };
        }
        Graph::new(self.n, edges).expect("cotree leaves are distinct")
    }
}

/// Builds a cotree, or returns four vertices inducing a P4.
pub fn recognize_cograph(g: &Graph) -> Result<Cotree, Witness> {
    if g.n() == 0 {
        return Ok(Cotree::empty());
    }
    let mut builder = CotreeBuilder::new();
    let all: Vec<usize> = g.vertices().collect();
    let root = split(g, &all, &mut builder)?;
    Ok(builder.finish(root))
}

fn split(g: &Graph, set: &[usize], builder: &mut CotreeBuilder) -> Result<usize, Witness> {
    if let [v] = set {
        return Ok(builder.leaf(*v));
    }
    let parts = components_within(g, set, false);
    let (parts, join) = if parts.len() > 1 {
        (parts, false)
    } else {
        let co = components_within(g, set, true);
        if co.len() == 1 {
            return Err(find_p4(g, set));
        }
        (co, true)
    };
    let mut acc: Option<usize> = None;
    for part in parts {
        let node = split(g, &part, builder)?;
        acc = Some(match acc {
            None => node,
            Some(prev) if join => builder.join(prev, node),
            Some(prev) => builder.union(prev, node),
        });
    }
    Ok(acc.expect("a set of two or more vertices has parts"))
}

/// Components of `G[set]`, or of its complement when `complement` is set.
fn components_within(g: &Graph, set: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let mut unvisited: Vec<usize> = set.to_vec();
    let mut out = Vec::new();
    while let Some(start) = unvisited.pop() {
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let mut keep = Vec::with_capacity(unvisited.len());
            for u in unvisited.drain(..) {
                if g.has_edge(u, v) != complement {
                    comp.push(u);
                    queue.push_back(u);
                } else {
                    keep.push(u);
                }
            }
            unvisited = keep;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_unstable_by_key(|c| c[0]);
    out
}

/// `set` induces a connected, co-connected graph on `>= 2` vertices, so some
/// edge is the middle of an induced P4.
fn find_p4(g: &Graph, set: &[usize]) -> Witness {
    let inside = |x: usize| set.binary_search(&x).is_ok();
    for &u in set {
        for &v in g.neighbors(u) {
            if v < u || !inside(v) {
                continue;
            }
            for &a in g.neighbors(u) {
                if a == v || !inside(a) || g.has_edge(a, v) {
                    continue;
                }
                for &d in g.neighbors(v) {
                    if d == u || !inside(d) || g.has_edge(d, u) || g.has_edge(a, d) {
                        continue;
                    }
                    return Witness::new(Forbidden::P4, vec![a, u, v, d]);
                }
            }
        }
    }
    unreachable!("a connected and co-connected graph contains an induced P4")
}
