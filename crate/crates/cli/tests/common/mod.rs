//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! closed forms or the structured enumeration of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use curvebetti_core::conditions::{check, CheckForm};
use curvebetti_core::series::char_poly;
use curvebetti_core::{AlgebraParams, BettiPair, HilbertClass, Mode};

/// Odometer over `[0, max]^len`, first coordinate slowest.
pub fn for_each_vector(len: usize, max: u64, mut f: impl FnMut(&[u64])) {
    let mut v = vec![0u64; len];
    loop {
        f(&v);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if v[i] < max {
                v[i] += 1;
                break;
            }
            v[i] = 0;
        }
    }
}

/// Every Betti pair with support in `[0, max_deg]` and counts at most
/// `max_count` (the empty pair included).
pub fn for_each_pair(max_deg: usize, max_count: u64, mut f: impl FnMut(&BettiPair)) {
    let n = max_deg + 1;
    for_each_vector(2 * n, max_count, |v| {
        f(&BettiPair::from_dense(0, &v[..n], &v[n..]));
    });
}

/// Odometer over the box `ranges[0] x ranges[1] x ...`, last coordinate
/// fastest.
pub fn for_each_in_box(ranges: &[(u64, u64)], mut f: impl FnMut(&[u64])) {
    if ranges.iter().any(|&(lo, hi)| lo > hi) {
        return;
    }
    let mut v: Vec<u64> = ranges.iter().map(|r| r.0).collect();
    loop {
        f(&v);
        let mut i = v.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if v[i] < ranges[i].1 {
                v[i] += 1;
                break;
            }
            v[i] = ranges[i].0;
        }
    }
}

/// How much of the box `brute_force_class` sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    /// Every pair in the box.
    Full,
    /// Only pairs with `b_0 = 0` and `a_l = 0` for `l >= deg q`. Every pair
    /// accepted by a full sweep has this form (asserted there), so this
    /// loses nothing and skips the bulk of the box.
    PinnedEnds,
}

/// All Betti pairs with support in `[0, epsilon]` and counts at most
/// `epsilon` that pass the library checker for the class's mode and have
/// the class's Hilbert series. A pair has that Hilbert series exactly when
/// `a_l - b_l = q_l` for all `l`, so the sweep runs over every `a` for which
/// `b = a - q` stays in the box.
pub fn brute_force_class(hc: &HilbertClass, sweep: Sweep) -> BTreeSet<BettiPair> {
    let eps = hc.epsilon();
    let params = hc.params();
    let q = hc.char_poly();
    let n = eps as usize + 1;
    let nu = q.degree().unwrap() as usize;
    assert!(nu < n, "class does not fit the box");
    let ql: Vec<i64> = (0..n as i64)
        .map(|l| i64::try_from(q.coeff(l)).unwrap())
        .collect();
    let ranges: Vec<(u64, u64)> = ql
        .iter()
        .enumerate()
        .map(|(l, &q)| {
            let (lo, hi) = (q.max(0) as u64, (eps as i64 + q.min(0)) as u64);
            match sweep {
                Sweep::PinnedEnds if l == 0 => (q as u64, q as u64),
                Sweep::PinnedEnds if l >= nu => (lo, 0),
                _ => (lo, hi),
            }
        })
        .collect();
    let mut found = BTreeSet::new();
    let mut b = vec![0u64; n];
    for_each_in_box(&ranges, |a| {
        for l in 0..n {
            b[l] = (a[l] as i64 - ql[l]) as u64;
        }
        let pair = BettiPair::from_dense(0, a, &b);
        if check(params, &pair, CheckForm::Ladder, hc.mode()) {
            assert_eq!(char_poly(&pair), q);
            assert!(
                b[0] == 0 && a[nu..].iter().all(|&x| x == 0),
                "unpinned end in {pair:?}"
            );
            found.insert(pair);
        }
    });
    found
}

pub fn both_kinds() -> [AlgebraParams; 2] {
    [AlgebraParams::QUADRATIC, AlgebraParams::CUBIC]
}

pub fn both_modes() -> [Mode; 2] {
    [Mode::CohenMacaulay, Mode::Critical]
}
