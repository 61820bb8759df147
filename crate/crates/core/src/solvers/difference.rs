//! Difference graphs over their chain model.
//!
//! Fix the black count `k` on side X and `l` on side Y, and the highest
//! positions `i` and `j` holding a black vertex. Then `N(B ∩ Y)` is the top
//! `deg_y[j]` vertices of X and `N(B ∩ X)` the top `deg_x[i]` of Y. The other
//! blacks of a side sit at positions below `i`, best placed inside the part
//! already dominated from across, so the number of dominated vertices on each
//! side has a closed form. Maximizing over `k`, `i`, `j` gives `f[b]` in
//! `O(n^3)` per entry.

use crate::graph::{BWProfile, Coloring};
use crate::recognition::DifferenceModel;

/// Best choice for one profile entry: black counts and top black positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Choice {
    k: usize,
    i: Option<usize>,
    l: usize,
    j: Option<usize>,
    whites: usize,
}

/// Vertices of a side of length `len` dominated when its top `top` are
/// dominated from across and `count` blacks occupy positions `<= pos`,
/// including `pos`.
fn dominated(len: usize, top: usize, count: usize, pos: Option<usize>) -> usize {
    match pos {
        None => top,
        Some(pos) => {
            let inside = (pos + 1 + top).saturating_sub(len);
            top + count - count.min(inside)
        }
    }
}

fn tops(count: usize, len: usize) -> Box<dyn Iterator<Item = Option<usize>>> {
    if count == 0 {
        Box::new(std::iter::once(None))
    } else {
        Box::new((count - 1..len).map(Some))
    }
}

fn best(dm: &DifferenceModel, b: usize) -> Option<Choice> {
    let (p, q) = (dm.side_x.len(), dm.side_y.len());
    let mut out: Option<Choice> = None;
    for k in 0..=b.min(p) {
        let l = b - k;
        if l > q {
            continue;
        }
        for i in tops(k, p) {
            let dx = i.map_or(0, |i| dm.deg_x[i]);
            for j in tops(l, q) {
                let dy = j.map_or(0, |j| dm.deg_y[j]);
                let whites = p - dominated(p, dy, k, i) + q - dominated(q, dx, l, j);
                if out.is_none_or(|c| whites > c.whites) {
                    out = Some(Choice { k, i, l, j, whites });
                }
            }
        }
    }
    out
}

pub fn difference_profile(dm: &DifferenceModel) -> BWProfile {
    let n = dm.side_x.len() + dm.side_y.len();
    BWProfile::new((0..=n).map(|b| best(dm, b).map_or(0, |c| c.whites)).collect())
}

/// Blacks of one side: position `pos`, then downward from `pos - 1`.
fn side_blacks(side: &[usize], count: usize, pos: Option<usize>) -> Vec<usize> {
    pos.map_or(Vec::new(), |pos| (0..=pos).rev().take(count).map(|t| side[t]).collect())
}

pub fn difference_certificate(dm: &DifferenceModel, b: usize, w: usize) -> Option<Coloring> {
    let c = best(dm, b).filter(|c| c.whites >= w)?;
    let (p, q) = (dm.side_x.len(), dm.side_y.len());
    let dx = c.i.map_or(0, |i| dm.deg_x[i]);
    let dy = c.j.map_or(0, |j| dm.deg_y[j]);
    let bx = side_blacks(&dm.side_x, c.k, c.i);
    let by = side_blacks(&dm.side_y, c.l, c.j);
    let free_x = dm.side_x[..p - dy].iter().filter(|v| !bx.contains(v));
    let free_y = dm.side_y[..q - dx].iter().filter(|v| !by.contains(v));
    let white: Vec<usize> = free_x.chain(free_y).copied().take(w).collect();
    Some(Coloring::new(bx.into_iter().chain(by), white))
}
