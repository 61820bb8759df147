//! Cotree dynamic programs: the max-white profile and the boolean table.

use crate::graph::{BWProfile, Coloring};
use crate::recognition::{Cotree, CotreeNode};

/// Per-node profiles of a cotree, kept for certificate extraction.
#[derive(Debug, Clone)]
pub struct CographTables {
    tree: Cotree,
    size: Vec<usize>,
    profile: Vec<Vec<usize>>,
}

/// `f` of a node from its children's profiles.
fn combine(node: CotreeNode, size: &[usize], profile: &[Vec<usize>]) -> (usize, Vec<usize>) {
    match node {
        CotreeNode::Leaf(_) => (1, vec![1, 0]),
        CotreeNode::Join(a, b) => {
            let n = size[a] + size[b];
            let (fa, fb) = (&profile[a], &profile[b]);
            let mut f: Vec<usize> = (0..=n)
                .map(|k| fa.get(k).copied().unwrap_or(0).max(fb.get(k).copied().unwrap_or(0)))
                .collect();
            f[0] = n;
            (n, f)
        }
        CotreeNode::Union(a, b) => {
            let (na, nb) = (size[a], size[b]);
            let (fa, fb) = (&profile[a], &profile[b]);
            let mut f = vec![0; na + nb + 1];
            for (i, &x) in fa.iter().enumerate() {
                for (j, &y) in fb.iter().enumerate() {
                    f[i + j] = f[i + j].max(x + y);
                }
            }
            (na + nb, f)
        }
    }
}

impl CographTables {
    pub fn new(tree: &Cotree) -> Self {
        let order = tree.postorder();
        let len = order.iter().max().map_or(0, |&m| m + 1);
        let mut size = vec![0; len];
        let mut profile = vec![Vec::new(); len];
        for id in order {
            let (s, f) = combine(tree.node(id), &size, &profile);
            size[id] = s;
            profile[id] = f;
        }
        CographTables { tree: tree.clone(), size, profile }
    }

    pub fn profile(&self) -> BWProfile {
        match self.tree.root() {
            Some(r) => BWProfile::new(self.profile[r].clone()),
            None => BWProfile::new(vec![0]),
        }
    }

    /// Coloring with exactly `b` black and `w` white, if the profile admits
    /// one. Lowest split index first.
    pub fn certificate(&self, b: usize, w: usize) -> Option<Coloring> {
        if !self.profile().admits(b, w) {
            return None;
        }
        let mut c = Coloring::default();
        if let Some(r) = self.tree.root() {
            self.place(r, b, w, &mut c);
        }
        Some(c)
    }

    fn place(&self, id: usize, b: usize, w: usize, c: &mut Coloring) {
        match self.tree.node(id) {
            CotreeNode::Leaf(v) => {
                if b == 1 {
                    c.black.insert(v);
                } else if w == 1 {
                    c.white.insert(v);
                }
            }
            CotreeNode::Join(x, y) => {
                if b == 0 || w == 0 {
                    let leaves = self.tree.leaves_below(id);
                    let mut leaves = leaves.into_iter();
                    c.black.extend(leaves.by_ref().take(b));
                    c.white.extend(leaves.take(w));
                } else if self.profile[x].get(b).is_some_and(|&f| f >= w) {
                    self.place(x, b, w, c);
                } else {
                    self.place(y, b, w, c);
                }
            }
            CotreeNode::Union(x, y) => {
                let (fx, fy) = (&self.profile[x], &self.profile[y]);
                let k = (0..=b.min(self.size[x]))
                    .find(|&k| b - k <= self.size[y] && fx[k] + fy[b - k] >= w)
                    .expect("profile admits the request");
                let wx = w.min(fx[k]);
                self.place(x, k, wx, c);
                self.place(y, b - k, w - wx, c);
            }
        }
    }
}

/// Max-white profile of the cograph described by `tree`.
pub fn cograph_profile(tree: &Cotree) -> BWProfile {
    CographTables::new(tree).profile()
}

/// `γ[b][w]` for `0 <= b, w <= n`: is there a coloring with `b` black and
/// `w` white?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTable {
    n: usize,
    cells: Vec<bool>,
}

impl GammaTable {
    fn new(n: usize) -> Self {
        GammaTable { n, cells: vec![false; (n + 1) * (n + 1)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// False outside `0..=n`.
    pub fn get(&self, b: usize, w: usize) -> bool {
        b <= self.n && w <= self.n && self.cells[b * (self.n + 1) + w]
    }

    fn set(&mut self, b: usize, w: usize) {
        self.cells[b * (self.n + 1) + w] = true;
    }

    pub fn is_downward_closed(&self) -> bool {
        (0..=self.n).all(|b| {
            (0..=self.n).all(|w| !self.get(b, w) || ((b == 0 || self.get(b - 1, w)) && (w == 0 || self.get(b, w - 1))))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..=self.n).all(|b| (0..=self.n).all(|w| self.get(b, w) == self.get(w, b)))
    }

    /// `γ[b][w] ⟺ w <= f[b]` everywhere.
    pub fn agrees_with(&self, f: &BWProfile) -> bool {
        f.n() == self.n && (0..=self.n).all(|b| (0..=self.n).all(|w| self.get(b, w) == f.admits(b, w)))
    }
}

/// Boolean table recursion over the cotree, independent of the profile
/// recursion.
pub fn cograph_gamma(tree: &Cotree) -> GammaTable {
    let order = tree.postorder();
    let mut tables: Vec<Option<GammaTable>> = vec![None; order.iter().max().map_or(0, |&m| m + 1)];
    for &id in &order {
        let t = match tree.node(id) {
            CotreeNode::Leaf(_) => {
                let mut t = GammaTable::new(1);
                t.set(0, 0);
                t.set(1, 0);
                t.set(0, 1);
                t
            }
            CotreeNode::Join(a, b) => {
                let (ta, tb) = (tables[a].take().unwrap(), tables[b].take().unwrap());
                let n = ta.n + tb.n;
                let mut t = GammaTable::new(n);
                for x in 0..=n {
                    t.set(x, 0);
                    t.set(0, x);
                }
                for bl in 1..=n {
                    for wh in 1..=n {
                        if ta.get(bl, wh) || tb.get(bl, wh) {
                            t.set(bl, wh);
                        }
                    }
                }
                t
            }
            CotreeNode::Union(a, b) => {
                let (ta, tb) = (tables[a].take().unwrap(), tables[b].take().unwrap());
                let n = ta.n + tb.n;
                let mut t = GammaTable::new(n);
                for b1 in 0..=ta.n {
                    for w1 in 0..=ta.n {
                        if !ta.get(b1, w1) {
                            continue;
                        }
                        for b2 in 0..=tb.n {
                            for w2 in 0..=tb.n {
                                if tb.get(b2, w2) {
                                    t.set(b1 + b2, w1 + w2);
                                }
                            }
                        }
                    }
                }
                t
            }
        };
        tables[id] = Some(t);
    }
    match tree.root() {
        Some(r) => tables[r].take().unwrap(),
        None => {
            let mut t = GammaTable::new(0);
            t.set(0, 0);
            t
        }
    }
}
