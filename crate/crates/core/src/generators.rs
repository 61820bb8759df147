//! Seeded instance generators with their generating structure.
//!
//! The pseudorandom stream is xorshift64* seeded through splitmix64, so a
//! [`GenSpec`] names the same graph on every platform.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::recognition::dh::{PruneKind, PruneStep};
use crate::recognition::{Cotree, CotreeBuilder};

/// xorshift64* generator.
#[derive(Debug, Clone)]
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        Rng(if z == 0 { 0x2545_F491_4F6C_DD1D } else { z })
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Uniform in `0..=hi`.
    pub fn upto(&mut self, hi: usize) -> usize {
        self.below(hi + 1)
    }

    /// Uniform in `[0, 1)` with 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    /// Fisher-Yates permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, self.upto(i));
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenClass {
    Cograph,
    Threshold,
    Difference,
    Dh,
    Interval,
    Split,
    Arbitrary,
}

impl GenClass {
    pub const ALL: [GenClass; 7] = [
        GenClass::Cograph,
        GenClass::Threshold,
        GenClass::Difference,
        GenClass::Dh,
        GenClass::Interval,
        GenClass::Split,
        GenClass::Arbitrary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenClass::Cograph => "cograph",
            GenClass::Threshold => "threshold",
            GenClass::Difference => "difference",
            GenClass::Dh => "dh",
            GenClass::Interval => "interval",
            GenClass::Split => "split",
            GenClass::Arbitrary => "arbitrary",
        }
    }
}

impl fmt::Display for GenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenClass {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GenClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| GenError::UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("unknown generator class `{0}`")]
    UnknownClass(String),
    #[error("density {0} is outside [0, 1]")]
    Density(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub class: GenClass,
    pub n: usize,
    pub seed: u64,
    /// Edge probability where the class has one; 0.5 when absent.
    pub density: Option<f64>,
}

impl GenSpec {
    pub fn new(class: GenClass, n: usize, seed: u64) -> Self {
        GenSpec { class, n, seed, density: None }
    }

    pub fn with_density(self, density: f64) -> Self {
        GenSpec { density: Some(density), ..self }
    }
}

/// How a generated graph was built.
#[derive(Debug, Clone, PartialEq)]
pub enum Structure {
    Cotree(Cotree),
    /// `dominating[i]` tells whether vertex `i + 1` was added adjacent to all
    /// earlier vertices (in creation labels, before relabeling by `labels`).
    CreationSequence { dominating: Vec<bool>, labels: Vec<usize> },
    /// Side X ordered by increasing degree; `x_i` is adjacent to the last
    /// `degrees[i]` vertices of `side_y`.
    Staircase { side_x: Vec<usize>, side_y: Vec<usize>, degrees: Vec<usize> },
    /// Accretion steps in the order they were applied.
    Accretion(Vec<PruneStep>),
    /// Closed integer interval per vertex.
    Intervals(Vec<(usize, usize)>),
    Split { clique: Vec<usize>, independent: Vec<usize> },
    Random,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub graph: Graph,
    pub structure: Structure,
}

/// Threshold graph on labels `0..n` from a creation sequence for vertices
/// `1..n` (`true` = dominating, `false` = isolated).
pub fn threshold_from_sequence(dominating: &[bool]) -> Graph {
    let n = dominating.len() + 1;
    let mut edges = Vec::new();
    for (i, &d) in dominating.iter().enumerate() {
        if d {
            edges.extend((0..=i).map(|u| (u, i + 1)));
        }
    }
    Graph::new(n, edges).expect("creation sequences give simple graphs")
}

fn relabel(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, perm: &[usize]) -> Graph {
    Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("relabeling keeps the graph simple")
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    let density = spec.density.unwrap_or(0.5);
    if !(0.0..=1.0).contains(&density) {
        return Err(GenError::Density(density));
    }
    let mut rng = Rng::new(spec.seed);
    let n = spec.n;
    Ok(match spec.class {
        GenClass::Cograph => {
            let tree = random_cotree(&mut rng, n);
            Generated { graph: tree.realize(), structure: Structure::Cotree(tree) }
        }
        GenClass::Threshold => {
            let dominating: Vec<bool> = (1..n).map(|_| rng.chance(density)).collect();
            let labels = rng.permutation(n);
            let base = if n == 0 { Graph::empty(0) } else { threshold_from_sequence(&dominating) };
            let graph = relabel(n, base.edges().iter().copied(), &labels);
            Generated { graph, structure: Structure::CreationSequence { dominating, labels } }
        }
        GenClass::Difference => {
            let p = rng.upto(n);
            let q = n - p;
            let mut degrees: Vec<usize> = (0..p).map(|_| (0..q).filter(|_| rng.chance(density)).count()).collect();
            degrees.sort_unstable();
            let perm = rng.permutation(n);
            let (side_x, side_y) = (perm[..p].to_vec(), perm[p..].to_vec());
            let edges = degrees.iter().enumerate().flat_map(|(i, &d)| (q - d..q).map(move |j| (i, p + j)));
            let graph = relabel(n, edges, &perm);
            Generated { graph, structure: Structure::Staircase { side_x, side_y, degrees } }
        }
        GenClass::Dh => {
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
            let mut steps = Vec::new();
            for v in 1..n {
                let u = rng.below(v);
                let kind = [PruneKind::Pendant, PruneKind::TrueTwin, PruneKind::FalseTwin][rng.below(3)];
                let mut hood = match kind {
                    PruneKind::Pendant => vec![u],
                    PruneKind::TrueTwin => adj[u].iter().copied().chain([u]).collect(),
                    _ => adj[u].clone(),
                };
                hood.sort_unstable();
                for &x in &hood {
                    adj[x].push(v);
                }
                adj[v] = hood;
                steps.push(PruneStep { removed: v, anchor: u, kind });
            }
            let perm = rng.permutation(n);
            let edges: Vec<(usize, usize)> =
                adj.iter().enumerate().flat_map(|(v, h)| h.iter().filter(move |&&x| x < v).map(move |&x| (x, v))).collect();
            let graph = relabel(n, edges, &perm);
            let steps = steps
                .into_iter()
                .map(|s| PruneStep { removed: perm[s.removed], anchor: perm[s.anchor], kind: s.kind })
                .collect();
            Generated { graph, structure: Structure::Accretion(steps) }
        }
        GenClass::Interval => {
            let intervals: Vec<(usize, usize)> = (0..n)
                .map(|_| {
                    let (a, b) = (rng.upto(4 * n), rng.upto(4 * n));
                    (a.min(b), a.max(b))
                })
                .collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if intervals[u].0.max(intervals[v].0) <= intervals[u].1.min(intervals[v].1) {
                        edges.push((u, v));
                    }
                }
            }
            Generated { graph: Graph::new(n, edges).expect("pairs are distinct"), structure: Structure::Intervals(intervals) }
        }
        GenClass::Split => {
            let c = rng.upto(n);
            let perm = rng.permutation(n);
            let mut edges = Vec::new();
            for u in 0..c {
                edges.extend((u + 1..c).map(|v| (u, v)));
                for v in c..n {
                    if rng.chance(density) {
                        edges.push((u, v));
                    }
                }
            }
            let graph = relabel(n, edges, &perm);
            let (mut clique, mut independent) = (perm[..c].to_vec(), perm[c..].to_vec());
            clique.sort_unstable();
            independent.sort_unstable();
            Generated { graph, structure: Structure::Split { clique, independent } }
        }
        GenClass::Arbitrary => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.chance(density) {
                        edges.push((u, v));
                    }
                }
            }
            Generated { graph: Graph::new(n, edges).expect("pairs are distinct"), structure: Structure::Random }
        }
    })
}

/// Merges random pairs of subtrees under fair join/union labels until one
/// tree remains; leaf `i` of the pool carries vertex `perm[i]`.
fn random_cotree(rng: &mut Rng, n: usize) -> Cotree {
    if n == 0 {
        return Cotree::empty();
    }
    let mut b = CotreeBuilder::new();
    let mut pool: Vec<usize> = rng.permutation(n).into_iter().map(|v| b.leaf(v)).collect();
    while pool.len() > 1 {
        let x = pool.swap_remove(rng.below(pool.len()));
        let y = pool.swap_remove(rng.below(pool.len()));
        let z = if rng.chance(0.5) { b.join(x, y) } else { b.union(x, y) };
        pool.push(z);
    }
    b.finish(pool[0])
}
