use alloc::collections::BTreeMap;

/// Graded Betti numbers of a length-one resolution
/// `0 -> sum_i A(-i)^{b_i} -> sum_i A(-i)^{a_i} -> M -> 0`.
///
/// Both sequences are stored as degree -> count maps without zero counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BettiPair {
    a: BTreeMap<i64, u64>,
    b: BTreeMap<i64, u64>,
}

fn collect<I: IntoIterator<Item = (i64, u64)>>(it: I) -> BTreeMap<i64, u64> {
    let mut m = BTreeMap::new();
    for (d, c) in it {
        if c > 0 {
            *m.entry(d).or_insert(0) += c;
        }
    }
    m
}

impl BettiPair {
    /// Repeated degrees are summed and zero counts dropped.
    pub fn from_pairs<A, B>(a: A, b: B) -> Self
    where
        A: IntoIterator<Item = (i64, u64)>,
        B: IntoIterator<Item = (i64, u64)>,
    {
        BettiPair {
            a: collect(a),
            b: collect(b),
        }
    }

    /// Dense sequences starting at degree `start`.
    pub fn from_dense(start: i64, a: &[u64], b: &[u64]) -> Self {
        let idx = |v: &[u64]| {
            v.iter()
                .enumerate()
                .map(|(i, &c)| (start + i as i64, c))
                .collect::<alloc::vec::Vec<_>>()
        };
        Self::from_pairs(idx(a), idx(b))
    }

    pub fn a(&self) -> &BTreeMap<i64, u64> {
        &self.a
    }

    pub fn b(&self) -> &BTreeMap<i64, u64> {
        &self.b
    }

    pub fn a_at(&self, degree: i64) -> u64 {
        self.a.get(&degree).copied().unwrap_or(0)
    }

    pub fn b_at(&self, degree: i64) -> u64 {
        self.b.get(&degree).copied().unwrap_or(0)
    }

    /// Rank of the generator module, `m = sum_i a_i`.
    pub fn rank_a(&self) -> u64 {
        self.a.values().sum()
    }

    /// Rank of the relation module, `n = sum_i b_i`.
    pub fn rank_b(&self) -> u64 {
        self.b.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    /// The same resolution with every degree moved by `shift`, i.e. the
    /// Betti numbers of `M(-shift)`.
    pub fn shifted(&self, shift: i64) -> Self {
        BettiPair {
            a: self.a.iter().map(|(&d, &c)| (d + shift, c)).collect(),
            b: self.b.iter().map(|(&d, &c)| (d + shift, c)).collect(),
        }
    }

    /// Degrees carrying a nonzero `a_i` or `b_i`, ascending.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        let mut v: alloc::vec::Vec<i64> = self.a.keys().chain(self.b.keys()).copied().collect();
        v.sort_unstable();
        v.dedup();
        v.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_counts_are_dropped() {
        let p = BettiPair::from_pairs([(0, 2), (1, 0)], [(1, 0), (2, 2)]);
        assert_eq!(p.a().len(), 1);
        assert_eq!(p.b().len(), 1);
        assert_eq!((p.rank_a(), p.rank_b()), (2, 2));
        assert_eq!(p, BettiPair::from_dense(0, &[2, 0, 0], &[0, 0, 2]));
    }

    #[test]
    fn shift_moves_support() {
        let p = BettiPair::from_pairs([(0, 1)], [(3, 1)]).shifted(2);
        assert_eq!(p.a_at(2), 1);
        assert_eq!(p.b_at(5), 1);
        assert_eq!(p.support().collect::<alloc::vec::Vec<_>>(), [2, 5]);
    }
}
