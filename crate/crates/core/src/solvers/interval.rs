//! Clique-order dynamic program for interval graphs.
//!
//! `G_i` is the subgraph induced by the vertices whose first clique is at
//! index `i` or later. A coloring of `G_i` takes a block of cliques `i..=j`,
//! colors `k` vertices of `X_{i,j}` with one color, leaves the separator
//! `C_j ∩ C_{j+1}` uncolored and continues on `G_{j+1}`.

use crate::bitset::Bits;
use crate::graph::{BWProfile, Coloring};
use crate::recognition::CliqueOrder;

/// `γ_i[b]` as a bitset over `w`, for every suffix `i` of the clique order.
#[derive(Debug, Clone)]
pub struct IntervalTable {
    order: CliqueOrder,
    n: usize,
    rows: Vec<Vec<Bits>>,
}

impl IntervalTable {
    pub fn new(order: &CliqueOrder) -> Self {
        let t = order.t();
        let n = if t == 0 { 0 } else { order.xcount(0, t - 1) };
        let width = n + 1;
        let mut rows: Vec<Vec<Bits>> = vec![Vec::new(); t];
        for i in (0..t).rev() {
            let mut gamma = vec![Bits::new(width); width];
            for j in i..t {
                let m = order.xcount(i, j);
                if j + 1 == t {
                    for k in 0..=m {
                        gamma[k].insert(0);
                        gamma[0].insert(k);
                    }
                    continue;
                }
                let next = &rows[j + 1];
                for b in 0..width {
                    for k in 0..=m.min(b) {
                        gamma[b].union_with(&next[b - k]);
                    }
                    for k in 0..=m {
                        gamma[b].union_shifted(&next[b], k, width);
                    }
                }
            }
            rows[i] = gamma;
        }
        IntervalTable { order: order.clone(), n, rows }
    }

    /// `γ_i(b, w)` (0-based `i`).
    pub fn gamma(&self, i: usize, b: usize, w: usize) -> bool {
        b <= self.n && w <= self.n && self.rows[i][b].contains(w)
    }

    pub fn profile(&self) -> BWProfile {
        if self.rows.is_empty() {
            return BWProfile::new(vec![0]);
        }
        let f = (0..=self.n).map(|b| self.rows[0][b].ones().max().unwrap_or(0)).collect();
        BWProfile::new(f)
    }

    /// Walks the recurrence forward, taking the first block end, count and
    /// color that keep the remainder feasible.
    pub fn certificate(&self, b: usize, w: usize) -> Option<Coloring> {
        let t = self.order.t();
        if t == 0 {
            return (b == 0 && w == 0).then(Coloring::default);
        }
        if !self.gamma(0, b, w) {
            return None;
        }
        let mut c = Coloring::default();
        let (mut i, mut b, mut w) = (0, b, w);
        loop {
            let (j, k, black) = self.next_block(i, b, w).expect("γ_i(b, w) holds, so some block continues it");
            let chosen = self.order.x_set(i, j).into_iter().take(k);
            if black {
                c.black.extend(chosen);
                b -= k;
            } else {
                c.white.extend(chosen);
                w -= k;
            }
            if j + 1 == t {
                return Some(c);
            }
            i = j + 1;
        }
    }

    /// Lowest block end `j`, then count `k`, black before white, such that
    /// coloring `k` vertices of `X_{i,j}` leaves a feasible remainder.
    fn next_block(&self, i: usize, b: usize, w: usize) -> Option<(usize, usize, bool)> {
        let t = self.order.t();
        for j in i..t {
            let m = self.order.xcount(i, j);
            if j + 1 == t {
                if w == 0 && b <= m {
                    return Some((j, b, true));
                }
                if b == 0 && w <= m {
                    return Some((j, w, false));
                }
                continue;
            }
            for k in 0..=m {
                if k <= b && self.gamma(j + 1, b - k, w) {
                    return Some((j, k, true));
                }
                if k <= w && self.gamma(j + 1, b, w - k) {
                    return Some((j, k, false));
                }
            }
        }
        None
    }
}

pub fn interval_profile(order: &CliqueOrder) -> BWProfile {
    IntervalTable::new(order).profile()
}
