//! Distance-hereditary graphs: pruning sequences and twinset decomposition
//! trees.
//!
//! Every induced subgraph of a distance-hereditary graph has a pendant
//! vertex, a pair of twins or an isolated vertex, so greedy pruning never gets
//! stuck on a member graph. Replaying the pruning sequence backwards splits
//! the anchor's leaf into a two-leaf node each time, which yields a binary
//! tree whose every edge `e` has a twinset `Q_e`: the vertices below `e` with
//! a neighbor outside.

use super::cograph::recognize_cograph;
use super::{Forbidden, Witness};
use crate::bitset::Bits;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PruneKind {
    Pendant,
    TrueTwin,
    FalseTwin,
    Isolated,
}

/// `removed` was pendant to, a twin of, or isolated beside `anchor` in the
/// graph remaining at that step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneStep {
    pub removed: usize,
    pub anchor: usize,
    pub kind: PruneKind,
}

/// Relation between the twinsets of the two children of an internal node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinOp {
    Join,
    Union,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DhNode {
    Leaf(usize),
    Internal { children: [usize; 2], op: TwinOp },
}

/// How the twinset of a node's parent edge arises from its children's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Inheritance {
    Both,
    First,
    Second,
    /// The subtree is a union of components: `Q_e` is empty and the node is
    /// evaluated like the root.
    Sealed,
}

/// Twinset decomposition tree of a distance-hereditary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhTree {
    nodes: Vec<DhNode>,
    parent: Vec<Option<usize>>,
    root: Option<usize>,
    below: Vec<Vec<usize>>,
    twinset: Vec<Vec<usize>>,
    n: usize,
}

/// A structural property of a [`DhTree`] that fails against its graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DhViolation {
    #[error("leaves do not biject with the vertices")]
    Leaves,
    #[error("stored twinset of node {0} differs from the recomputed one")]
    Twinset(usize),
    #[error("twinset of node {0} does not induce a cograph")]
    NotCograph(usize),
    #[error("children of node {0} are neither joined nor unioned on their twinsets")]
    Operation(usize),
    #[error("twinset of node {0} is not inherited from its children")]
    Inheritance(usize),
}

impl DhTree {
    /// Wraps a tree shape over `g`, recomputing every twinset and reading
    /// operation tags off the graph.
    ///
    /// `children[i]` holds the two children of internal node `i` (`None` for a
    /// leaf); `leaf_vertex[i]` is the vertex at leaf `i`.
    pub fn from_shape(g: &Graph, children: Vec<Option<[usize; 2]>>, leaf_vertex: Vec<Option<usize>>, root: usize) -> Result<Self, DhViolation> {
        let k = children.len();
        let mut parent = vec![None; k];
        for (i, c) in children.iter().enumerate() {
            if let Some([a, b]) = c {
                parent[*a] = Some(i);
                parent[*b] = Some(i);
            }
        }
        let mut nodes: Vec<DhNode> = children
            .iter()
            .zip(&leaf_vertex)
            .map(|(c, v)| match (c, v) {
                (Some(ch), _) => DhNode::Internal { children: *ch, op: TwinOp::Union },
                (None, Some(v)) => DhNode::Leaf(*v),
                (None, None) => DhNode::Leaf(usize::MAX),
            })
            .collect();
        let mut tree = DhTree { nodes: nodes.clone(), parent, root: Some(root), below: vec![Vec::new(); k], twinset: vec![Vec::new(); k], n: g.n() };
        let order = tree.postorder();
        if order.len() != k {
            return Err(DhViolation::Leaves);
        }
        let mut seen = vec![false; g.n()];
        for &id in &order {
            tree.below[id] = match tree.nodes[id] {
                DhNode::Leaf(v) => {
                    if v >= g.n() || seen[v] {
                        return Err(DhViolation::Leaves);
                    }
                    seen[v] = true;
                    vec![v]
                }
                DhNode::Internal { children: [a, b], .. } => {
                    let mut all = tree.below[a].clone();
                    all.extend_from_slice(&tree.below[b]);
                    all.sort_unstable();
                    all
                }
            };
            tree.twinset[id] = compute_twinset(g, &tree.below[id]);
        }
        if seen.iter().any(|s| !s) {
            return Err(DhViolation::Leaves);
        }
        for (id, node) in nodes.iter_mut().enumerate() {
            if let DhNode::Internal { children: [a, b], .. } = *node {
                let (qa, qb) = (&tree.twinset[a], &tree.twinset[b]);
                let edges = qa.iter().flat_map(|&x| qb.iter().map(move |&y| (x, y))).filter(|&(x, y)| g.has_edge(x, y)).count();
                let op = if edges == 0 {
                    TwinOp::Union
                } else if edges == qa.len() * qb.len() {
                    TwinOp::Join
                } else {
                    return Err(DhViolation::Operation(id));
                };
                *node = DhNode::Internal { children: [a, b], op };
            }
        }
        tree.nodes = nodes;
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn node(&self, id: usize) -> DhNode {
        self.nodes[id]
    }

    pub fn parent(&self, id: usize) -> Option<usize> {
        self.parent[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `W_e` for the edge above `id` (all vertices at the root).
    pub fn below(&self, id: usize) -> &[usize] {
        &self.below[id]
    }

    /// `Q_e` for the edge above `id`; empty at the root.
    pub fn twinset(&self, id: usize) -> &[usize] {
        if Some(id) == self.root {
            &[]
        } else {
            &self.twinset[id]
        }
    }

    /// How the parent-edge twinset of internal node `id` relates to its
    /// children's. The root is reported as [`Inheritance::Sealed`].
    pub fn inheritance(&self, id: usize) -> Option<Inheritance> {
        let DhNode::Internal { children: [a, b], .. } = self.nodes[id] else { return None };
        let q = self.twinset(id);
        if q.is_empty() {
            return Some(Inheritance::Sealed);
        }
        let (qa, qb) = (&self.twinset[a], &self.twinset[b]);
        let mut both = qa.clone();
        both.extend_from_slice(qb);
        both.sort_unstable();
        if q == both.as_slice() {
            Some(Inheritance::Both)
        } else if q == qa.as_slice() {
            Some(Inheritance::First)
        } else if q == qb.as_slice() {
            Some(Inheritance::Second)
        } else {
            None
        }
    }

    /// Children before parents.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let Some(root) = self.root else { return out };
        let mut stack = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            match self.nodes[id] {
                DhNode::Internal { children: [a, b], .. } if !expanded => {
                    stack.push((id, true));
                    stack.push((b, false));
                    stack.push((a, false));
                }
                _ => out.push(id),
            }
        }
        out
    }

    /// Recomputes the twinsets from `g` and checks all three structural
    /// properties, with empty twinsets accepted on sealed subtrees.
    pub fn validate(&self, g: &Graph) -> Result<(), DhViolation> {
        if g.n() != self.n {
            return Err(DhViolation::Leaves);
        }
        let mut leaves: Vec<usize> = self.nodes.iter().filter_map(|n| match n {
            DhNode::Leaf(v) => Some(*v),
            _ => None,
        }).collect();
        leaves.sort_unstable();
        if !leaves.iter().copied().eq(0..g.n()) {
            return Err(DhViolation::Leaves);
        }
        for id in self.postorder() {
            if Some(id) != self.root && compute_twinset(g, &self.below[id]) != self.twinset[id] {
                return Err(DhViolation::Twinset(id));
            }
            if recognize_cograph(&g.induced(self.twinset(id))).is_err() {
                return Err(DhViolation::NotCograph(id));
            }
            if let DhNode::Internal { children: [a, b], op } = self.nodes[id] {
                let want = op == TwinOp::Join;
                for &x in &self.twinset[a] {
                    for &y in &self.twinset[b] {
                        if g.has_edge(x, y) != want {
                            return Err(DhViolation::Operation(id));
                        }
                    }
                }
                if self.inheritance(id).is_none() {
                    return Err(DhViolation::Inheritance(id));
                }
            }
        }
        Ok(())
    }
}

fn compute_twinset(g: &Graph, below: &[usize]) -> Vec<usize> {
    below
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).iter().any(|u| below.binary_search(u).is_err()))
        .collect()
}

/// Greedy pruning, preferring pendant, then true twin, then false twin, then
/// isolated, lowest ids first. On failure returns the remaining vertices,
/// which induce a subgraph with none of the four.
pub fn pruning_sequence(g: &Graph) -> Result<(Vec<PruneStep>, Option<usize>), Witness> {
    let n = g.n();
    let mut alive = Bits::from_iter(n, 0..n);
    let open: Vec<Bits> = g.vertices().map(|v| Bits::from_iter(n, g.neighbors(v).iter().copied())).collect();
    let closed: Vec<Bits> = g
        .vertices()
        .map(|v| {
            let mut b = open[v].clone();
            b.insert(v);
            b
        })
        .collect();
    let mut steps = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let live: Vec<usize> = alive.ones().collect();
        let nb = |v: usize| open[v].intersect(&alive);
        let cnb = |v: usize| closed[v].intersect(&alive);
        let step = live
            .iter()
            .find_map(|&x| {
                let nx = nb(x);
                (nx.count() == 1).then(|| PruneStep { removed: x, anchor: nx.ones().next().unwrap(), kind: PruneKind::Pendant })
            })
            .or_else(|| twin(&live, &cnb, PruneKind::TrueTwin))
            .or_else(|| twin(&live, &nb, PruneKind::FalseTwin))
            .or_else(|| {
                let x = *live.iter().find(|&&x| nb(x).count() == 0)?;
                let anchor = *live.iter().find(|&&y| y != x)?;
                Some(PruneStep { removed: x, anchor, kind: PruneKind::Isolated })
            });
        match step {
            Some(s) => {
                alive.remove(s.removed);
                steps.push(s);
            }
            None => return Err(Witness::new(Forbidden::NoPruningStep, live)),
        }
    }
    let survivor = alive.ones().next();
    Ok((steps, survivor))
}

fn twin(live: &[usize], hood: &impl Fn(usize) -> Bits, kind: PruneKind) -> Option<PruneStep> {
    let hoods: Vec<Bits> = live.iter().map(|&v| hood(v)).collect();
    for (i, &x) in live.iter().enumerate() {
        for (j, &y) in live.iter().enumerate() {
            if i != j && hoods[i] == hoods[j] {
                return Some(PruneStep { removed: x, anchor: y, kind });
            }
        }
    }
    None
}

/// Twinset tree for a distance-hereditary graph, or the stuck subgraph.
pub fn recognize_dh(g: &Graph) -> Result<DhTree, Witness> {
    let (steps, last) = pruning_sequence(g)?;
    let Some(last) = last else {
        return Ok(DhTree { nodes: Vec::new(), parent: Vec::new(), root: None, below: Vec::new(), twinset: Vec::new(), n: 0 });
    };
    let mut children: Vec<Option<[usize; 2]>> = vec![None];
    let mut leaf_vertex: Vec<Option<usize>> = vec![Some(last)];
    let mut leaf_of = vec![usize::MAX; g.n()];
    leaf_of[last] = 0;
    for s in steps.iter().rev() {
        let node = leaf_of[s.anchor];
        let a = children.len();
        children.extend([None, None]);
        leaf_vertex.extend([Some(s.anchor), Some(s.removed)]);
        children[node] = Some([a, a + 1]);
        leaf_vertex[node] = None;
        leaf_of[s.anchor] = a;
        leaf_of[s.removed] = a + 1;
    }
    let tree = DhTree::from_shape(g, children, leaf_vertex, 0).expect("pruning trees have rank-one cuts");
    debug_assert_eq!(tree.validate(g), Ok(()));
    Ok(tree)
}
