//! Staircase sequences, degree matrices and ladders.
//!
//! Indices are 1-based throughout, so `S(a)_1` is the lowest generator degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::betti::BettiPair;
use crate::error::{Error, Result};

/// The non-decreasing sequence listing degree `i` exactly `c_i` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StairSeq(Vec<i64>);

impl StairSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `idx`.
    pub fn get(&self, idx: usize) -> i64 {
        assert!(idx >= 1, "staircase sequences are 1-indexed");
        self.0[idx - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

pub fn stair_sequence(c: &BTreeMap<i64, u64>) -> Result<StairSeq> {
    let mut v = Vec::new();
    for (&d, &k) in c {
        v.extend(core::iter::repeat_n(d, k as usize));
    }
    if v.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(StairSeq(v))
}

/// `S_{alpha beta} = S(b)_beta - S(a)_alpha`, an `m x n` grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl DegreeMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based `(alpha, beta)`.
    pub fn at(&self, alpha: usize, beta: usize) -> i64 {
        assert!((1..=self.rows).contains(&alpha) && (1..=self.cols).contains(&beta));
        self.entries[(alpha - 1) * self.cols + (beta - 1)]
    }

    pub fn row(&self, alpha: usize) -> &[i64] {
        let start = (alpha - 1) * self.cols;
        &self.entries[start..start + self.cols]
    }

    /// Both degree-matrix identities: monotone (down non-increasing, right
    /// non-decreasing) and constant row differences.
    pub fn is_degree_matrix(&self) -> bool {
        for alpha in 1..=self.rows {
            for beta in 1..=self.cols {
                let s = self.at(alpha, beta);
                if alpha < self.rows && self.at(alpha + 1, beta) > s {
                    return false;
                }
                if beta < self.cols && s > self.at(alpha, beta + 1) {
                    return false;
                }
                // S_{ab} - S_{ab'} = S_{1b} - S_{1b'} for all b', equivalently
                // against column 1
                if s - self.at(alpha, 1) != self.at(1, beta) - self.at(1, 1) {
                    return false;
                }
            }
        }
        true
    }

    pub fn all_equal_to(&self, value: i64) -> bool {
        self.entries.iter().all(|&e| e == value)
    }
}

pub fn degree_matrix(betti: &BettiPair) -> Result<DegreeMatrix> {
    let sa = stair_sequence(betti.a())?;
    let sb = stair_sequence(betti.b())?;
    let mut entries = Vec::with_capacity(sa.len() * sb.len());
    for &x in sa.as_slice() {
        for &y in sb.as_slice() {
            entries.push(y - x);
        }
    }
    let m = DegreeMatrix {
        rows: sa.len(),
        cols: sb.len(),
        entries,
    };
    debug_assert!(m.is_degree_matrix());
    Ok(m)
}

/// A subset of the rectangle `[1, m] x [1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ladder {
    rows: usize,
    cols: usize,
    member: Vec<bool>,
}

impl Ladder {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut member = Vec::with_capacity(rows * cols);
        for alpha in 1..=rows {
            for beta in 1..=cols {
                member.push(f(alpha, beta));
            }
        }
        Ladder { rows, cols, member }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn contains(&self, alpha: usize, beta: usize) -> bool {
        assert!((1..=self.rows).contains(&alpha) && (1..=self.cols).contains(&beta));
        self.member[(alpha - 1) * self.cols + (beta - 1)]
    }

    /// Cells not in the set, in row-major order.
    pub fn complement(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.rows)
            .flat_map(move |a| (1..=self.cols).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.contains(a, b))
    }

    /// The ladder axiom: a missing cell forces the cell below it and the cell
    /// to its left to be missing.
    pub fn is_ladder(&self) -> bool {
        self.complement().all(|(a, b)| {
            (a == self.rows || !self.contains(a + 1, b)) && (b == 1 || !self.contains(a, b - 1))
        })
    }
}

/// `L_{a,b} = {(alpha, beta) : S(a)_alpha < S(b)_beta}`.
pub fn ladder_of(betti: &BettiPair) -> Result<Ladder> {
    let s = degree_matrix(betti)?;
    let l = Ladder::from_fn(s.rows(), s.cols(), |a, b| s.at(a, b) > 0);
    debug_assert!(l.is_ladder());
    Ok(l)
}

/// Row twists `(S(a)_1, ..., S(a)_m)` applied to a presentation matrix when
/// passing to the curve: row `alpha` is twisted by `sigma^{S(a)_alpha}`.
pub fn twist_exponents(betti: &BettiPair) -> Result<Vec<i64>> {
    Ok(stair_sequence(betti.a())?.0)
}
