//! Enumeration over all Hilbert classes of one multiplicity, spread over the
//! rayon pool. Results come back in the order of `enumerate_s`.

use num_bigint::BigUint;
use rayon::prelude::*;

use curvebetti_core::hilbert::{enumerate_s, s_to_hilbert, HilbertClass, Mode, SPoly};
use curvebetti_core::resolutions::ResolutionFamily;
use curvebetti_core::{AlgebraParams, BettiPair, IntSeries};

fn classes(params: &AlgebraParams, epsilon: u64, mode: Mode, max_len: usize) -> Vec<HilbertClass> {
    enumerate_s(params, epsilon, mode, max_len)
        .into_iter()
        .map(|s| HilbertClass::new(*params, epsilon, s, mode).expect("enumerated s is admissible"))
        .collect()
}

/// Every class with its first `n_terms` Hilbert series coefficients.
pub fn hilbert_listing(
    params: &AlgebraParams,
    epsilon: u64,
    mode: Mode,
    max_len: usize,
    n_terms: usize,
) -> Vec<(SPoly, IntSeries)> {
    classes(params, epsilon, mode, max_len)
        .into_par_iter()
        .map(|hc| {
            let h = s_to_hilbert(&hc, n_terms);
            (hc.s().clone(), h)
        })
        .collect()
}

/// Every class with all its Betti numbers.
pub fn betti_listing(
    params: &AlgebraParams,
    epsilon: u64,
    mode: Mode,
    max_len: usize,
) -> Vec<(SPoly, Vec<BettiPair>)> {
    classes(params, epsilon, mode, max_len)
        .into_par_iter()
        .map(|hc| (hc.s().clone(), ResolutionFamily::new(&hc).iter().collect()))
        .collect()
}

/// Closed-form count for the critical class whose coefficients are the set
/// bits of `mask` (bit `k` standing for the part `k + 1`), largest first.
fn critical_count_for_mask(epsilon: u64, mask: u64) -> u128 {
    let mut prev2 = epsilon;
    let mut prev: Option<u64> = None;
    let mut product: u128 = 1;
    let parts = (0..64u64)
        .rev()
        .filter(|k| mask >> k & 1 == 1)
        .map(|k| k + 1);
    for cur in parts.chain(std::iter::once(0)) {
        if let Some(p) = prev {
            product *= u128::from((prev2 - p).min(p - cur));
            prev2 = p;
        }
        prev = Some(cur);
    }
    product
}

/// Sum of the closed-form counts over every class.
///
/// Critical `s` are the subsets of `{1, ..., epsilon - 1}`, so the complete
/// critical total runs over bitmasks without building any class.
pub fn betti_total(params: &AlgebraParams, epsilon: u64, mode: Mode, max_len: usize) -> BigUint {
    if mode == Mode::Critical && max_len as u64 >= epsilon.saturating_sub(1) && epsilon <= 64 {
        let skip_zero = params.is_cubic() && epsilon > 1;
        let total: u128 = (u64::from(skip_zero)..1u64 << (epsilon - 1))
            .into_par_iter()
            .map(|mask| critical_count_for_mask(epsilon, mask))
            .sum();
        return BigUint::from(total);
    }
    classes(params, epsilon, mode, max_len)
        .into_par_iter()
        .map(|hc| ResolutionFamily::new(&hc).count())
        .reduce(BigUint::default, |a, b| a + b)
}

/// Sum of the enumeration lengths over every class.
pub fn betti_total_enumerated(
    params: &AlgebraParams,
    epsilon: u64,
    mode: Mode,
    max_len: usize,
) -> u64 {
    classes(params, epsilon, mode, max_len)
        .into_par_iter()
        .map(|hc| ResolutionFamily::new(&hc).iter().count() as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use curvebetti_core::resolutions::enumerate_betti;

    #[test]
    fn parallel_matches_sequential() {
        for params in [AlgebraParams::QUADRATIC, AlgebraParams::CUBIC] {
            for mode in [Mode::Critical, Mode::CohenMacaulay] {
                for eps in 1..=7 {
                    let max_len = eps as usize;
                    let seq: Vec<_> = enumerate_s(&params, eps, mode, max_len)
                        .into_iter()
                        .map(|s| {
                            let b = enumerate_betti(&params, eps, &s, mode).unwrap();
                            (s, b)
                        })
                        .collect();
                    assert_eq!(betti_listing(&params, eps, mode, max_len), seq);
                    let n: usize = seq.iter().map(|x| x.1.len()).sum();
                    assert_eq!(
                        betti_total_enumerated(&params, eps, mode, max_len),
                        n as u64
                    );
                    assert_eq!(betti_total(&params, eps, mode, max_len), BigUint::from(n));
                }
            }
        }
    }

    #[test]
    fn mask_totals_match_classes() {
        for params in [AlgebraParams::QUADRATIC, AlgebraParams::CUBIC] {
            for eps in 1..=12 {
                let by_class: BigUint = classes(&params, eps, Mode::Critical, eps as usize)
                    .iter()
                    .map(|hc| ResolutionFamily::new(hc).count())
                    .sum();
                assert_eq!(
                    betti_total(&params, eps, Mode::Critical, eps as usize),
                    by_class,
                    "eps={eps}"
                );
            }
        }
    }

    #[test]
    fn listing_order_is_stable() {
        let p = AlgebraParams::QUADRATIC;
        let a = hilbert_listing(&p, 6, Mode::Critical, 6, 10);
        let b = hilbert_listing(&p, 6, Mode::Critical, 6, 10);
        assert_eq!(a, b);
        assert_eq!(a.len(), 32);
    }
}
