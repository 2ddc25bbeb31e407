//! Fixed-capacity bitsets over small local vertex ranges.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(capacity: usize) -> Self {
        BitSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    /// Bits `0..len` set.
    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let span = len.saturating_sub(lo).min(64);
            *w = if span == 64 {
                u64::MAX
            } else {
                (1u64 << span) - 1
            };
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Clears every bit `<= i`.
    pub fn clear_through(&mut self, i: usize) {
        let w = i / 64;
        let len = self.words.len();
        for word in &mut self.words[..w.min(len)] {
            *word = 0;
        }
        if let Some(word) = self.words.get_mut(w) {
            let b = i % 64;
            *word &= if b == 63 { 0 } else { !((1u64 << (b + 1)) - 1) };
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `self \ other`
    pub fn difference(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Set bits in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = BitSet::new(130);
        for i in [0, 63, 64, 129] {
            a.insert(i);
        }
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(a.len(), 4);
        let mut f = BitSet::full(130);
        f.remove(129);
        assert_eq!(f.len(), 129);
        assert_eq!(
            a.intersection(&f).iter().collect::<Vec<_>>(),
            vec![0, 63, 64]
        );
        assert_eq!(a.difference(&f).iter().collect::<Vec<_>>(), vec![129]);
        let mut c = a.clone();
        c.clear_through(63);
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![64, 129]);
        c.clear_through(64);
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![129]);
        a.remove(129);
        assert!(!a.contains(129));
        assert!(BitSet::full(0).is_empty());
        assert_eq!(BitSet::full(64).len(), 64);
    }
}
