//! Partitions into distinct parts below a bound.
//!
//! A critical `s(t)` for multiplicity `m` is the same thing as a set of
//! distinct parts below `m` (its coefficients), so summing over `n` gives
//! `2^(m-1)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `p(D, n, <m)` for every `n` in `0 ..= m(m-1)/2`, by the 0/1 knapsack
/// recurrence over the parts `1, ..., m-1`.
pub fn distinct_parts_table(m: u64) -> Vec<BigUint> {
    let top = (m * m.saturating_sub(1) / 2) as usize;
    let mut ways = vec![BigUint::zero(); top + 1];
    ways[0] = BigUint::one();
    for part in 1..m as usize {
        for n in (part..=top).rev() {
            let add = ways[n - part].clone();
            ways[n] += add;
        }
    }
    ways
}

/// Number of partitions of `n` into distinct parts, each smaller than `m`.
pub fn partition_count_distinct_bounded(n: u64, m: u64) -> BigUint {
    let table = distinct_parts_table(m);
    table.get(n as usize).cloned().unwrap_or_else(BigUint::zero)
}

/// `sum_n p(D, n, <m)`.
pub fn distinct_parts_total(m: u64) -> BigUint {
    distinct_parts_table(m).into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Subset enumeration over `{1, ..., m-1}`.
    fn brute(n: u64, m: u64) -> u64 {
        let parts = m.saturating_sub(1);
        (0u64..1 << parts)
            .filter(|mask| {
                (0..parts)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i + 1)
                    .sum::<u64>()
                    == n
            })
            .count() as u64
    }

    #[test]
    fn examples() {
        assert_eq!(partition_count_distinct_bounded(4, 4), BigUint::from(1u32));
        for m in 1..10 {
            assert_eq!(partition_count_distinct_bounded(0, m), BigUint::one());
        }
        assert_eq!(partition_count_distinct_bounded(7, 4), BigUint::zero());
    }

    #[test]
    fn matches_subset_enumeration() {
        for m in 1..=12 {
            for n in 0..=m * (m - 1) / 2 + 2 {
                assert_eq!(
                    partition_count_distinct_bounded(n, m),
                    BigUint::from(brute(n, m)),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn totals_are_powers_of_two() {
        for m in 1..=20 {
            assert_eq!(distinct_parts_total(m), BigUint::one() << (m - 1));
        }
    }
}
