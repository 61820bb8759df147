//! Four-index dynamic program over a twinset decomposition tree.
//!
//! For the edge above node `e`, `γ_e(b, w, p, q)` says whether the subgraph
//! induced by `W_e` has a coloring with `b` black and `w` white vertices of
//! which `p` black and `q` white lie in the twinset `Q_e`. All edges between
//! two sibling subtrees run between their twinsets, and on a join node they
//! form a complete bipartite graph, so a join only forbids pairing a colored
//! twinset with an oppositely colored one.

use std::collections::HashSet;

use crate::graph::{BWProfile, Coloring};
use crate::recognition::dh::{DhViolation, Inheritance};
use crate::recognition::{DhNode, DhTree, TwinOp};

/// `(b, w, p, q)`.
pub type DhEntry = [usize; 4];

/// Dense boolean table `γ_e[b][w][p][q]` for one tree edge, with
/// `b + w <= |W_e|` and `p, q <= |Q_e|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhTable {
    w_size: usize,
    q_size: usize,
    cells: Vec<bool>,
}

impl DhTable {
    fn new(w_size: usize, q_size: usize) -> Self {
        let (a, c) = (w_size + 1, q_size + 1);
        DhTable { w_size, q_size, cells: vec![false; a * a * c * c] }
    }

    fn index(&self, [b, w, p, q]: DhEntry) -> usize {
        let (a, c) = (self.w_size + 1, self.q_size + 1);
        ((b * a + w) * c + p) * c + q
    }

    pub fn get(&self, e: DhEntry) -> bool {
        let [b, w, p, q] = e;
        b + w <= self.w_size && p + q <= self.q_size && self.cells[self.index(e)]
    }

    fn set(&mut self, e: DhEntry) {
        let i = self.index(e);
        self.cells[i] = true;
    }

    /// `|W_e|`.
    pub fn below_size(&self) -> usize {
        self.w_size
    }

    /// `|Q_e|`.
    pub fn twinset_size(&self) -> usize {
        self.q_size
    }

    /// True entries in lexicographic order.
    pub fn entries(&self) -> Vec<DhEntry> {
        let mut out = Vec::new();
        for b in 0..=self.w_size {
            for w in 0..=self.w_size - b {
                for p in 0..=self.q_size.min(b) {
                    for q in 0..=(self.q_size - p).min(w) {
                        if self.cells[self.index([b, w, p, q])] {
                            out.push([b, w, p, q]);
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether `(b, w)` is feasible for some twinset exposure.
    pub fn feasible(&self, b: usize, w: usize) -> bool {
        b + w <= self.w_size
            && (0..=self.q_size.min(b)).any(|p| (0..=(self.q_size - p).min(w)).any(|q| self.cells[self.index([b, w, p, q])]))
    }
}

/// Which child twinsets make up the twinset a node reports upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Keep {
    Both,
    First,
    Second,
    None,
}

/// Per-node tables retained for certificate extraction.
#[derive(Debug, Clone)]
pub struct DhTables {
    tree: DhTree,
    tables: Vec<DhTable>,
    keep: Vec<Keep>,
}

fn compatible(op: TwinOp, e1: DhEntry, e2: DhEntry) -> bool {
    op == TwinOp::Union || !((e1[2] > 0 && e2[3] > 0) || (e1[3] > 0 && e2[2] > 0))
}

fn project(keep: Keep, e1: DhEntry, e2: DhEntry) -> DhEntry {
    let (b, w) = (e1[0] + e2[0], e1[1] + e2[1]);
    match keep {
        Keep::Both => [b, w, e1[2] + e2[2], e1[3] + e2[3]],
        Keep::First => [b, w, e1[2], e1[3]],
        Keep::Second => [b, w, e2[2], e2[3]],
        Keep::None => [b, w, 0, 0],
    }
}

/// Entries of a child whose exposure is only tested for join compatibility,
/// one representative per `(b, w, p > 0, q > 0)`.
fn condensed(entries: Vec<DhEntry>, exact: bool) -> Vec<DhEntry> {
    if exact {
        return entries;
    }
    let mut seen = HashSet::new();
    entries.into_iter().filter(|e| seen.insert([e[0], e[1], e[2].min(1), e[3].min(1)])).collect()
}

impl DhTables {
    /// Fails when some node's twinset is not inherited from its children.
    pub fn new(tree: &DhTree) -> Result<Self, DhViolation> {
        let order = tree.postorder();
        let len = tree.len();
        let mut tables: Vec<DhTable> = vec![DhTable::new(0, 0); len];
        let mut keep = vec![Keep::None; len];
        for &id in &order {
            let is_root = Some(id) == tree.root();
            tables[id] = match tree.node(id) {
                DhNode::Leaf(_) => {
                    let qs = tree.twinset(id).len();
                    let mut t = DhTable::new(1, qs);
                    t.set([0, 0, 0, 0]);
                    t.set([1, 0, qs, 0]);
                    t.set([0, 1, 0, qs]);
                    t
                }
                DhNode::Internal { children: [a, b], op } => {
                    let k = if is_root {
                        Keep::Both
                    } else {
                        match tree.inheritance(id).ok_or(DhViolation::Inheritance(id))? {
                            Inheritance::Both => Keep::Both,
                            Inheritance::First => Keep::First,
                            Inheritance::Second => Keep::Second,
                            Inheritance::Sealed => Keep::None,
                        }
                    };
                    keep[id] = k;
                    let (t1, t2) = (&tables[a], &tables[b]);
                    let q_size = match k {
                        Keep::Both => t1.q_size + t2.q_size,
                        Keep::First => t1.q_size,
                        Keep::Second => t2.q_size,
                        Keep::None => 0,
                    };
                    let mut t = DhTable::new(t1.w_size + t2.w_size, q_size);
                    let l1 = condensed(t1.entries(), matches!(k, Keep::Both | Keep::First));
                    let l2 = condensed(t2.entries(), matches!(k, Keep::Both | Keep::Second));
                    for &e1 in &l1 {
                        for &e2 in &l2 {
                            if compatible(op, e1, e2) {
                                t.set(project(k, e1, e2));
                            }
                        }
                    }
                    t
                }
            };
        }
        Ok(DhTables { tree: tree.clone(), tables, keep })
    }

    pub fn table(&self, node: usize) -> &DhTable {
        &self.tables[node]
    }

    pub fn tree(&self) -> &DhTree {
        &self.tree
    }

    pub fn profile(&self) -> BWProfile {
        let Some(root) = self.tree.root() else { return BWProfile::new(vec![0]) };
        let t = &self.tables[root];
        let n = t.w_size;
        BWProfile::new((0..=n).map(|b| (0..=n - b).rev().find(|&w| t.feasible(b, w)).unwrap_or(0)).collect())
    }

    pub fn certificate(&self, b: usize, w: usize) -> Option<Coloring> {
        let Some(root) = self.tree.root() else {
            return (b == 0 && w == 0).then(Coloring::default);
        };
        let t = &self.tables[root];
        let target = t.entries().into_iter().find(|e| e[0] == b && e[1] == w)?;
        let mut c = Coloring::default();
        self.place(root, target, &mut c);
        Some(c)
    }

    fn place(&self, id: usize, target: DhEntry, c: &mut Coloring) {
        match self.tree.node(id) {
            DhNode::Leaf(v) => match target {
                [1, 0, ..] => {
                    c.black.insert(v);
                }
                [0, 1, ..] => {
                    c.white.insert(v);
                }
                _ => {}
            },
            DhNode::Internal { children: [a, b], op } => {
                let (l1, l2) = (self.tables[a].entries(), self.tables[b].entries());
                for &e1 in &l1 {
                    if e1[0] > target[0] || e1[1] > target[1] {
                        continue;
                    }
                    let hit = l2.iter().find(|&&e2| compatible(op, e1, e2) && project(self.keep[id], e1, e2) == target);
                    if let Some(&e2) = hit {
                        self.place(a, e1, c);
                        self.place(b, e2, c);
                        return;
                    }
                }
                unreachable!("every true entry has a supporting pair");
            }
        }
    }
}

pub fn dh_profile(tree: &DhTree) -> Result<BWProfile, DhViolation> {
    Ok(DhTables::new(tree)?.profile())
}
