//! Fixed-width bitsets for vertex sets and dynamic-programming rows.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub(crate) fn new(n: usize) -> Self {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    pub(crate) fn from_iter(n: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::new(n);
        for v in ids {
            b.insert(v);
        }
        b
    }

    pub(crate) fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub(crate) fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub(crate) fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersect(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub(crate) fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// `self |= other << k`, dropping bits at positions `>= width`.
    pub(crate) fn union_shifted(&mut self, other: &Bits, k: usize, width: usize) {
        let (ws, bs) = (k / 64, k % 64);
        for i in (ws..self.words.len()).rev() {
            let src = i - ws;
            let mut v = other.words[src] << bs;
            if bs > 0 && src > 0 {
                v |= other.words[src - 1] >> (64 - bs);
            }
            self.words[i] |= v;
        }
        let tail = width % 64;
        if tail > 0 {
            if let Some(last) = self.words.get_mut(width / 64) {
                *last &= (1u64 << tail) - 1;
            }
        }
        for w in self.words.iter_mut().skip(width.div_ceil(64)) {
            *w = 0;
        }
    }

    pub(crate) fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_union_truncates() {
        let src = Bits::from_iter(130, [0, 1, 63, 100]);
        let mut dst = Bits::new(130);
        dst.union_shifted(&src, 2, 102);
        assert_eq!(dst.ones().collect::<Vec<_>>(), vec![2, 3, 65]);
        let mut far = Bits::new(130);
        far.union_shifted(&src, 65, 130);
        assert_eq!(far.ones().collect::<Vec<_>>(), vec![65, 66, 128]);
    }
}
