//! Exhaustive ground truth for the black-and-white coloring problem.
//!
//! The white set may be any subset of `V ∖ N[B]`, so only black sets are
//! enumerated: `f[b] = n − min |N[B]|` over all `b`-subsets `B`.

use thiserror::Error;

use crate::graph::{BWProfile, Coloring, Graph};

/// Default vertex-count limit for exhaustive enumeration.
pub const DEFAULT_CAP: usize = 22;

/// Masks are 64-bit words, so no cap may exceed this.
pub const MAX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

fn closed_masks(g: &Graph, cap: usize) -> Result<Vec<u64>, OracleError> {
    let cap = cap.min(MAX_CAP);
    if g.n() > cap {
        return Err(OracleError::CapExceeded { n: g.n(), cap });
    }
    Ok(g.vertices()
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &u| m | (1u64 << u)))
        .collect())
}

/// Depth-first walk over increasing vertex subsets, tracking `|N[B]|`.
struct Enumerator<'a> {
    masks: &'a [u64],
    best: Vec<u32>,
}

impl Enumerator<'_> {
    fn walk(&mut self, next: usize, size: usize, covered: u64) {
        let c = covered.count_ones();
        if c < self.best[size] {
            self.best[size] = c;
        }
        for v in next..self.masks.len() {
            self.walk(v + 1, size + 1, covered | self.masks[v]);
        }
    }
}

/// Exact profile by enumerating every black set.
pub fn brute_profile(g: &Graph, cap: usize) -> Result<BWProfile, OracleError> {
    let masks = closed_masks(g, cap)?;
    let n = g.n();
    let mut e = Enumerator { masks: &masks, best: vec![u32::MAX; n + 1] };
    e.walk(0, 0, 0);
    Ok(BWProfile::new(e.best.iter().map(|&c| n - c as usize).collect()))
}

/// Finds a black set of size `b` leaving at least `w` undominated vertices.
fn search(masks: &[u64], b: usize, w: usize, n: usize) -> Option<u64> {
    fn go(masks: &[u64], next: usize, left: usize, chosen: u64, covered: u64, need: usize) -> Option<u64> {
        if left == 0 {
            return (masks.len() - covered.count_ones() as usize >= need).then_some(chosen);
        }
        if masks.len() - next < left {
            return None;
        }
        for v in next..masks.len() {
            let r = go(masks, v + 1, left - 1, chosen | (1 << v), covered | masks[v], need);
            if r.is_some() {
                return r;
            }
        }
        None
    }
    if b > n {
        return None;
    }
    go(masks, 0, b, 0, 0, w)
}

/// Decision form, enumerating only the `b`-subsets.
pub fn decide_oracle(g: &Graph, b: usize, w: usize, cap: usize) -> Result<bool, OracleError> {
    let masks = closed_masks(g, cap)?;
    Ok(search(&masks, b, w, g.n()).is_some())
}

/// A coloring with exactly `b` black and `w` white, if one exists.
pub fn oracle_certificate(g: &Graph, b: usize, w: usize, cap: usize) -> Result<Option<Coloring>, OracleError> {
    let masks = closed_masks(g, cap)?;
    let Some(black) = search(&masks, b, w, g.n()) else {
        return Ok(None);
    };
    let covered = (0..g.n()).filter(|&v| black >> v & 1 == 1).fold(0u64, |m, v| m | masks[v]);
    let whites = (0..g.n()).filter(|&v| covered >> v & 1 == 0).take(w);
    Ok(Some(Coloring::new((0..g.n()).filter(|&v| black >> v & 1 == 1), whites)))
}
