//! Constant-time decisions along a threshold ordering.

use crate::graph::{BWProfile, Coloring};
use crate::recognition::ThresholdOrdering;

/// With the smaller color class on `x_1..x_s` and the larger on the next
/// `l` positions, feasibility reduces to one adjacency test between `x_s` and
/// `x_{s+l}`.
pub fn threshold_decide(ord: &ThresholdOrdering, b: usize, w: usize) -> bool {
    let n = ord.n();
    if b == 0 {
        return w <= n;
    }
    if w == 0 {
        return b <= n;
    }
    let (s, l) = if b <= w { (b, w) } else { (w, b) };
    s + l <= n && !ord.adjacent_at(s - 1, s + l - 1)
}

pub fn threshold_profile(ord: &ThresholdOrdering) -> BWProfile {
    let n = ord.n();
    let f = (0..=n)
        .map(|b| (0..=n - b).rev().find(|&w| threshold_decide(ord, b, w)).unwrap_or(0))
        .collect();
    BWProfile::new(f)
}

/// The smaller class takes the first positions of the ordering and the
/// larger class the positions right after.
pub fn threshold_certificate(ord: &ThresholdOrdering, b: usize, w: usize) -> Option<Coloring> {
    if !threshold_decide(ord, b, w) {
        return None;
    }
    let order = ord.order();
    if b <= w {
        Some(Coloring::new(order[..b].iter().copied(), order[b..b + w].iter().copied()))
    } else {
        Some(Coloring::new(order[w..w + b].iter().copied(), order[..w].iter().copied()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::recognition::recognize_threshold;

    #[test]
    fn star_decisions() {
        let ord = recognize_threshold(&Graph::star(3)).unwrap();
        assert!(threshold_decide(&ord, 1, 2));
        assert!(!threshold_decide(&ord, 2, 2));
        assert!(!threshold_decide(&ord, 3, 1));
        assert_eq!(threshold_profile(&ord).values(), &[4, 2, 1, 0, 0]);
    }

    #[test]
    fn extreme_graphs() {
        let k = recognize_threshold(&Graph::complete(4)).unwrap();
        assert_eq!(threshold_profile(&k).values(), &[4, 0, 0, 0, 0]);
        let e = recognize_threshold(&Graph::empty(5)).unwrap();
        assert_eq!(threshold_profile(&e).values(), &[5, 4, 3, 2, 1, 0]);
        assert!(!threshold_decide(&e, 6, 0));
    }

    #[test]
    fn certificates_verify() {
        let g = Graph::star(4).join(&Graph::complete(2)).disjoint_union(&Graph::empty(1));
        let ord = recognize_threshold(&g).unwrap();
        let f = threshold_profile(&ord);
        for b in 0..=g.n() {
            for w in 0..=f.values()[b] {
                let c = threshold_certificate(&ord, b, w).unwrap();
                assert_eq!((c.b(), c.w()), (b, w));
                assert!(g.verify_coloring(&c).unwrap());
            }
        }
    }
}
