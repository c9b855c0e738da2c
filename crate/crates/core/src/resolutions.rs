//! Betti numbers of normalized modules with a prescribed Hilbert series.
//!
//! For a class `(epsilon, s)` put `p(t) = epsilon - s(t)(1-t)` and
//! `q(t) = p(t)(1-t)`, so `mu = 0` and `nu = deg q`. The Betti numbers with
//! characteristic polynomial `q` are fixed at the ends (`a_0 = q_0`,
//! `b_nu = -q_nu`) and free in the interior `0 < l < nu`, where
//! `max(q_l, 0) <= a_l <= p_l` (Cohen-Macaulay) or `a_l <= p_l - 1`
//! (critical), with `b_l = a_l - q_l`.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::algebra::AlgebraParams;
use crate::betti::BettiPair;
use crate::conditions::{check, CheckForm, Mode};
use crate::error::Result;
use crate::hilbert::{HilbertClass, SPoly};

/// The solution set of the interior constraints for one Hilbert class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionFamily {
    params: AlgebraParams,
    mode: Mode,
    /// `q_0 ..= q_nu`.
    q: Vec<i64>,
    /// Allowed `a_l` for `l = 1 .. nu - 1`.
    ranges: Vec<RangeInclusive<u64>>,
}

fn small(c: &num_bigint::BigInt) -> i64 {
    c.to_i64().expect("coefficient exceeds i64")
}

impl ResolutionFamily {
    pub fn new(hc: &HilbertClass) -> Self {
        let p_poly = hc.p_poly();
        let q_poly = hc.char_poly();
        debug_assert_eq!(q_poly.offset(), 0);
        let q: Vec<i64> = q_poly.coeffs().iter().map(small).collect();
        let p: Vec<i64> = (0..q.len() as i64)
            .map(|l| small(&p_poly.coeff(l)))
            .collect();
        let nu = q.len() - 1;
        let strict = i64::from(hc.mode().is_critical());
        let ranges = (1..nu)
            .map(|l| {
                let lo = q[l].max(0) as u64;
                let hi = (p[l] - strict) as u64;
                lo..=hi
            })
            .collect();
        ResolutionFamily {
            params: *hc.params(),
            mode: hc.mode(),
            q,
            ranges,
        }
    }

    /// Allowed values of `a_l` for each interior degree `l = 1, 2, ...`.
    pub fn interior_ranges(&self) -> &[RangeInclusive<u64>] {
        &self.ranges
    }

    /// Number of solutions, before the cubic exclusion is applied.
    fn raw_count(&self) -> BigUint {
        self.ranges
            .iter()
            .map(|r| BigUint::from(r.end() + 1 - r.start()))
            .product()
    }

    /// Whether the cubic exclusion removes the (single) solution: critical
    /// mode over a cubic algebra with `q = n(1-t)`, `n >= 2`.
    fn excluded(&self) -> bool {
        self.mode.is_critical() && self.params.is_cubic() && self.q.len() == 2 && self.q[0] >= 2
    }

    pub fn count(&self) -> BigUint {
        if self.excluded() {
            BigUint::ZERO
        } else {
            self.raw_count()
        }
    }

    /// The Betti numbers for the interior choice `a_1, ..., a_{nu-1}`.
    pub fn pair_for(&self, interior: &[u64]) -> BettiPair {
        assert_eq!(interior.len(), self.ranges.len());
        let nu = self.q.len() - 1;
        let mut a = Vec::with_capacity(nu);
        let mut b = Vec::with_capacity(nu);
        a.push((0, self.q[0] as u64));
        for (i, &al) in interior.iter().enumerate() {
            let l = i + 1;
            debug_assert!(self.ranges[i].contains(&al));
            a.push((l as i64, al));
            b.push((l as i64, (al as i64 - self.q[l]) as u64));
        }
        b.push((nu as i64, (-self.q[nu]) as u64));
        BettiPair::from_pairs(a, b)
    }

    /// All solutions, ordered by the interior tuple ascending.
    pub fn iter(&self) -> impl Iterator<Item = BettiPair> + '_ {
        let n = if self.excluded() {
            0
        } else {
            self.raw_count().to_usize().expect("too many resolutions")
        };
        let mut cur: Vec<u64> = self.ranges.iter().map(|r| *r.start()).collect();
        (0..n).map(move |k| {
            if k > 0 {
                // odometer, last interior degree fastest
                for i in (0..cur.len()).rev() {
                    if cur[i] < *self.ranges[i].end() {
                        cur[i] += 1;
                        break;
                    }
                    cur[i] = *self.ranges[i].start();
                }
            }
            let pair = self.pair_for(&cur);
            debug_assert!(check(&self.params, &pair, CheckForm::Ladder, self.mode));
            pair
        })
    }
}

/// All normalized Betti numbers in the Hilbert class `(epsilon, s)`.
pub fn enumerate_betti(
    params: &AlgebraParams,
    epsilon: u64,
    s: &SPoly,
    mode: Mode,
) -> Result<Vec<BettiPair>> {
    let hc = HilbertClass::new(*params, epsilon, s.clone(), mode)?;
    Ok(ResolutionFamily::new(&hc).iter().collect())
}

/// Closed-form number of normalized Betti numbers in the class
/// `(epsilon, s)`: with `c = (epsilon, s_0, s_1, ..., s_d, 0)`, the product
/// over consecutive jumps of `min(c_{l-1} - c_l, c_l - c_{l+1})` (critical)
/// or `1 + min(...)` (Cohen-Macaulay), taken over interior degrees only.
pub fn count_betti_closed(
    params: &AlgebraParams,
    epsilon: u64,
    s: &SPoly,
    mode: Mode,
) -> Result<BigUint> {
    let hc = HilbertClass::new(*params, epsilon, s.clone(), mode)?;
    let c = jump_sequence(epsilon, s);
    let mut count = BigUint::one();
    // interior degrees l = 1 ..= deg s + 1 pair the jumps c_{l-1} - c_l and c_l - c_{l+1}
    for w in c.windows(3) {
        let m = (w[0] - w[1]).min(w[1] - w[2]);
        count *= match hc.mode() {
            Mode::CohenMacaulay => m + 1,
            Mode::Critical => m,
        };
    }
    Ok(count)
}

/// `(epsilon, s_0, ..., s_d, 0)`: coefficients of `epsilon t^-1 + s(t)` with
/// the final zero.
fn jump_sequence(epsilon: u64, s: &SPoly) -> Vec<u64> {
    let mut c = Vec::with_capacity(s.coeffs().len() + 2);
    c.push(epsilon);
    c.extend_from_slice(s.coeffs());
    c.push(0);
    c
}

/// Whether the class has more than one critical resolution, decided by the
/// presence of two consecutive downward jumps of length at least 2 in
/// `epsilon t^-1 + s(t)`.
pub fn two_jump_predicate(epsilon: u64, s: &SPoly) -> Result<bool> {
    HilbertClass::new(AlgebraParams::QUADRATIC, epsilon, s.clone(), Mode::Critical)?;
    let c = jump_sequence(epsilon, s);
    Ok(c.windows(3).any(|w| w[0] - w[1] >= 2 && w[1] - w[2] >= 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use alloc::vec;

    const Q: AlgebraParams = AlgebraParams::QUADRATIC;
    const C: AlgebraParams = AlgebraParams::CUBIC;

    fn s(c: &[u64]) -> SPoly {
        SPoly::new(c.to_vec())
    }

    fn pair(a: &[(i64, u64)], b: &[(i64, u64)]) -> BettiPair {
        BettiPair::from_pairs(a.iter().copied(), b.iter().copied())
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_betti(&Q, 4, &s(&[2]), Mode::Critical).unwrap(),
            vec![
                pair(&[(0, 2)], &[(2, 2)]),
                pair(&[(0, 2), (1, 1)], &[(1, 1), (2, 2)])
            ]
        );
        assert_eq!(
            enumerate_betti(&Q, 3, &s(&[2]), Mode::Critical).unwrap(),
            vec![pair(&[(0, 1), (1, 1)], &[(2, 2)])]
        );
        assert_eq!(
            enumerate_betti(&Q, 4, &s(&[2]), Mode::CohenMacaulay).unwrap(),
            vec![
                pair(&[(0, 2)], &[(2, 2)]),
                pair(&[(0, 2), (1, 1)], &[(1, 1), (2, 2)]),
                pair(&[(0, 2), (1, 2)], &[(1, 2), (2, 2)]),
            ]
        );
    }

    #[test]
    fn cubic_exclusion_in_enumeration() {
        assert!(matches!(
            enumerate_betti(&C, 2, &s(&[]), Mode::Critical),
            Err(Error::InvalidSPoly(_))
        ));
        assert_eq!(
            enumerate_betti(&C, 2, &s(&[]), Mode::CohenMacaulay).unwrap(),
            vec![pair(&[(0, 2)], &[(1, 2)])]
        );
        assert_eq!(
            enumerate_betti(&C, 1, &s(&[]), Mode::Critical).unwrap(),
            vec![pair(&[(0, 1)], &[(1, 1)])]
        );
    }

    #[test]
    fn count_examples() {
        let one = |x: u32| BigUint::from(x);
        assert_eq!(
            count_betti_closed(&Q, 4, &s(&[2]), Mode::Critical).unwrap(),
            one(2)
        );
        assert_eq!(
            count_betti_closed(&Q, 2, &s(&[1]), Mode::Critical).unwrap(),
            one(1)
        );
        assert_eq!(
            count_betti_closed(&Q, 4, &s(&[2]), Mode::CohenMacaulay).unwrap(),
            one(3)
        );
        assert_eq!(
            count_betti_closed(&Q, 5, &s(&[]), Mode::Critical).unwrap(),
            one(1)
        );
        assert!(count_betti_closed(&Q, 4, &s(&[4]), Mode::Critical).is_err());
    }

    #[test]
    fn two_jumps() {
        assert!(two_jump_predicate(4, &s(&[2])).unwrap());
        assert!(!two_jump_predicate(2, &s(&[1])).unwrap());
        assert!(!two_jump_predicate(4, &s(&[3, 1])).unwrap());
        assert!(two_jump_predicate(2, &s(&[2])).is_err());
    }

    #[test]
    fn counts_agree_with_enumeration() {
        for p in [Q, C] {
            for eps in 1..=7 {
                for mode in [Mode::CohenMacaulay, Mode::Critical] {
                    for sp in crate::hilbert::enumerate_s(&p, eps, mode, 5) {
                        let list = enumerate_betti(&p, eps, &sp, mode).unwrap();
                        let closed = count_betti_closed(&p, eps, &sp, mode).unwrap();
                        assert_eq!(
                            BigUint::from(list.len()),
                            closed,
                            "{p:?} {eps} {sp} {mode:?}"
                        );
                        let fam = ResolutionFamily::new(
                            &HilbertClass::new(p, eps, sp.clone(), mode).unwrap(),
                        );
                        assert_eq!(fam.count(), closed);
                        if mode == Mode::Critical {
                            assert_eq!(
                                two_jump_predicate(eps, &sp).unwrap(),
                                closed > BigUint::one()
                            );
                        }
                    }
                }
            }
        }
    }
}
