//! Hilbert series of normalized Cohen-Macaulay modules of GK-dimension two
//! and their `s(t)` polynomials.
//!
//! A normalized module with normalized multiplicity `epsilon` has
//! `h(t) = h_A(t) (epsilon (1-t) - s(t) (1-t)^2)` for a unique `s(t)` in
//! `Z[t]`. The admissible `s` are
//!
//! * Cohen-Macaulay: `epsilon > s_0 >= s_1 >= ... >= 0`;
//! * critical: `epsilon > s_0 > s_1 > ... >= 0`, and over a cubic algebra
//!   `s != 0` once `epsilon > 1`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::{ambient_hilbert_series, AlgebraParams};
use crate::error::{Error, Result};
use crate::series::{IntSeries, LaurentPoly};

pub use crate::conditions::Mode;

/// Coefficients `s_0, s_1, ...` of `s(t)`, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SPoly(Vec<u64>);

impl SPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        SPoly(coeffs)
    }

    pub fn zero() -> Self {
        SPoly(Vec::new())
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `s_i`, zero past the degree.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::new(0, self.0.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_admissible(&self, params: &AlgebraParams, epsilon: u64, mode: Mode) -> bool {
        if epsilon == 0 {
            return false;
        }
        let mut prev = epsilon;
        for &c in &self.0 {
            let ok = match mode {
                Mode::CohenMacaulay => c < epsilon && c <= prev,
                Mode::Critical => c < prev,
            };
            if !ok {
                return false;
            }
            prev = c;
        }
        !(mode == Mode::Critical && params.is_cubic() && epsilon > 1 && self.is_zero())
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().fmt(f)
    }
}

/// A Hilbert series class `(epsilon, s)` for a given algebra and mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertClass {
    params: AlgebraParams,
    epsilon: u64,
    s: SPoly,
    mode: Mode,
}

impl HilbertClass {
    pub fn new(params: AlgebraParams, epsilon: u64, s: SPoly, mode: Mode) -> Result<Self> {
        if epsilon == 0 {
            return Err(Error::NonPositiveEpsilon);
        }
        if !s.is_admissible(&params, epsilon, mode) {
            return Err(Error::InvalidSPoly(s.to_string()));
        }
        Ok(HilbertClass {
            params,
            epsilon,
            s,
            mode,
        })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn epsilon(&self) -> u64 {
        self.epsilon
    }

    pub fn s(&self) -> &SPoly {
        &self.s
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `p(t) = epsilon - s(t)(1 - t)`.
    pub fn p_poly(&self) -> LaurentPoly {
        &LaurentPoly::monomial(BigInt::from(self.epsilon), 0) - &self.s.to_poly().mul_one_minus_t()
    }

    /// Characteristic polynomial `q(t) = p(t)(1 - t)`.
    pub fn char_poly(&self) -> LaurentPoly {
        self.p_poly().mul_one_minus_t()
    }
}

/// The first `n_terms` coefficients of `h_A(t) (epsilon (1-t) - s(t) (1-t)^2)`.
pub fn s_to_hilbert(hc: &HilbertClass, n_terms: usize) -> IntSeries {
    ambient_hilbert_series(&hc.params, n_terms).mul_poly(&hc.char_poly())
}

/// Recovers `(epsilon, s)` from a Hilbert series of a normalized
/// Cohen-Macaulay module of GK-dimension two.
///
/// A prefix of a Hilbert series only determines `s` up to a tail of constant
/// coefficients beyond the prefix, so the answer is the unique preimage with
/// `deg s + 3` no larger than the number of known coefficients (and at least
/// eight are required).
pub fn hilbert_to_s(params: &AlgebraParams, h: &IntSeries) -> Result<(u64, SPoly)> {
    const MIN_TERMS: usize = 8;
    if h.is_zero() || h.offset() != 0 {
        return Err(Error::NotInImage);
    }
    let have = h.trunc_order() as usize;
    if have < MIN_TERMS {
        return Err(Error::InsufficientTruncation {
            needed: MIN_TERMS,
            have,
        });
    }
    // q = h / h_A on the known window
    let den = params.hilbert_denominator();
    let hk = h.known();
    let mut p = BigInt::zero();
    let mut cum = BigInt::zero();
    let mut cums = Vec::with_capacity(have);
    for l in 0..have {
        let mut q = BigInt::zero();
        for (j, d) in den.coeffs().iter().enumerate().take(l + 1) {
            q += d * &hk[l - j];
        }
        p += q;
        cum += &p;
        cums.push(cum.clone());
    }
    let epsilon = cums[have - 1].clone();
    if epsilon <= BigInt::zero() {
        return Err(Error::NotInImage);
    }
    let mut coeffs = Vec::with_capacity(have);
    for c in &cums {
        let s = &epsilon - c;
        if s < BigInt::zero() {
            return Err(Error::NotInImage);
        }
        coeffs.push(s.to_u64().ok_or(Error::NotInImage)?);
    }
    let s = SPoly::new(coeffs);
    let needed = s.degree().map_or(0, |d| d + 3).max(MIN_TERMS);
    if have < needed {
        return Err(Error::InsufficientTruncation { needed, have });
    }
    let epsilon = epsilon.to_u64().ok_or(Error::NotInImage)?;
    let hc = HilbertClass::new(*params, epsilon, s, Mode::CohenMacaulay)
        .map_err(|_| Error::NotInImage)?;
    if s_to_hilbert(&hc, have) != *h {
        return Err(Error::NotInImage);
    }
    Ok((epsilon, hc.s))
}

/// All admissible `s` with at most `max_len` coefficients, in ascending
/// lexicographic order of `(s_0, s_1, ...)`; the zero polynomial comes first.
///
/// Critical `s` never have more than `epsilon - 1` coefficients, so any
/// `max_len >= epsilon - 1` yields the complete critical list. The
/// Cohen-Macaulay family is infinite and only exists here degree-bounded.
pub fn enumerate_s(params: &AlgebraParams, epsilon: u64, mode: Mode, max_len: usize) -> Vec<SPoly> {
    let mut out = Vec::new();
    if epsilon == 0 {
        return out;
    }
    let mut prefix = Vec::new();
    enumerate_rec(&mut prefix, epsilon - 1, mode, max_len, &mut out);
    if mode == Mode::Critical && params.is_cubic() && epsilon > 1 {
        out.retain(|s| !s.is_zero());
    }
    out
}

fn enumerate_rec(
    prefix: &mut Vec<u64>,
    upper: u64,
    mode: Mode,
    max_len: usize,
    out: &mut Vec<SPoly>,
) {
    out.push(SPoly(prefix.clone()));
    if prefix.len() >= max_len {
        return;
    }
    for next in 1..=upper {
        prefix.push(next);
        let upper = match mode {
            Mode::CohenMacaulay => next,
            Mode::Critical => next - 1,
        };
        enumerate_rec(prefix, upper, mode, max_len, out);
        prefix.pop();
    }
}

/// All critical-admissible `s` for `epsilon`.
pub fn enumerate_critical_s(params: &AlgebraParams, epsilon: u64) -> Vec<SPoly> {
    enumerate_s(
        params,
        epsilon,
        Mode::Critical,
        epsilon.saturating_sub(1) as usize,
    )
}

/// Number of Hilbert series of critical normalized modules with normalized
/// multiplicity `epsilon`: `2^(epsilon-1)`, minus one over a cubic algebra
/// when `epsilon > 1`.
pub fn count_hilbert_closed(params: &AlgebraParams, epsilon: u64) -> BigUint {
    assert!(epsilon >= 1, "epsilon must be positive");
    let all = BigUint::one() << (epsilon - 1);
    if params.is_cubic() && epsilon > 1 {
        all - 1u32
    } else {
        all
    }
}

/// Human-readable `(epsilon, s)` label.
pub fn class_label(epsilon: u64, s: &SPoly) -> String {
    alloc::format!("epsilon = {epsilon}, s(t) = {s}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_rational::BigRational;

    const Q: AlgebraParams = AlgebraParams::QUADRATIC;
    const C: AlgebraParams = AlgebraParams::CUBIC;

    fn s(c: &[u64]) -> SPoly {
        SPoly::new(c.to_vec())
    }

    fn series(p: AlgebraParams, eps: u64, sp: &[u64], n: usize) -> Vec<i64> {
        let hc = HilbertClass::new(p, eps, s(sp), Mode::Critical).unwrap();
        s_to_hilbert(&hc, n).known_i64s()
    }

    #[test]
    fn s_to_hilbert_examples() {
        assert_eq!(series(Q, 2, &[1], 6), [1, 3, 5, 7, 9, 11]);
        assert_eq!(series(C, 3, &[2, 1], 6), [1, 2, 4, 5, 7, 8]);
        assert_eq!(series(Q, 1, &[], 6), [1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn invalid_classes() {
        assert!(matches!(
            HilbertClass::new(Q, 3, s(&[3]), Mode::CohenMacaulay),
            Err(Error::InvalidSPoly(_))
        ));
        assert!(HilbertClass::new(Q, 3, s(&[2, 2]), Mode::CohenMacaulay).is_ok());
        assert!(HilbertClass::new(Q, 3, s(&[2, 2]), Mode::Critical).is_err());
        assert!(HilbertClass::new(C, 2, s(&[]), Mode::Critical).is_err());
        assert!(HilbertClass::new(C, 2, s(&[]), Mode::CohenMacaulay).is_ok());
        assert!(HilbertClass::new(C, 1, s(&[]), Mode::Critical).is_ok());
        assert_eq!(
            HilbertClass::new(Q, 0, s(&[]), Mode::Critical),
            Err(Error::NonPositiveEpsilon)
        );
    }

    #[test]
    fn hilbert_to_s_examples() {
        let h = IntSeries::from_i64s(0, &[1, 3, 5, 7, 9, 11, 13, 15], 8);
        assert_eq!(hilbert_to_s(&Q, &h).unwrap(), (2, s(&[1])));
        let h = IntSeries::from_i64s(0, &[1, 1, 2, 2, 3, 3, 4, 4], 8);
        assert_eq!(hilbert_to_s(&C, &h).unwrap(), (1, s(&[])));
        let h = IntSeries::from_i64s(0, &[2, 4, 6, 8, 10, 12, 14, 16], 8);
        assert_eq!(hilbert_to_s(&Q, &h).unwrap(), (2, s(&[])));
    }

    #[test]
    fn hilbert_to_s_rejections() {
        let short = IntSeries::from_i64s(0, &[1, 3, 5, 7], 4);
        assert!(matches!(
            hilbert_to_s(&Q, &short),
            Err(Error::InsufficientTruncation { needed: 8, have: 4 })
        ));
        // the algebra itself has GK-dimension three; every prefix looks like a
        // long s(t) so the answer is "not enough terms"
        let amb = ambient_hilbert_series(&Q, 10);
        assert!(matches!(
            hilbert_to_s(&Q, &amb),
            Err(Error::InsufficientTruncation { .. })
        ));
        // negative coefficient growth
        let bad = IntSeries::from_i64s(0, &[3, 2, 1, 0, 0, 0, 0, 0], 8);
        assert_eq!(hilbert_to_s(&Q, &bad), Err(Error::NotInImage));
        let shifted = IntSeries::from_i64s(1, &[1, 3, 5, 7, 9, 11, 13], 8);
        assert_eq!(hilbert_to_s(&Q, &shifted), Err(Error::NotInImage));
        // s(t) with an increase is not Cohen-Macaulay admissible: s = 1 + 2t
        let q = (&LaurentPoly::monomial(4.into(), 0)
            - &SPoly(vec![1, 2]).to_poly().mul_one_minus_t())
            .mul_one_minus_t();
        let h = ambient_hilbert_series(&Q, 10).mul_poly(&q);
        assert_eq!(hilbert_to_s(&Q, &h), Err(Error::NotInImage));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_critical_s(&Q, 3),
            vec![s(&[]), s(&[1]), s(&[2]), s(&[2, 1])]
        );
        assert_eq!(enumerate_critical_s(&C, 2), vec![s(&[1])]);
        assert_eq!(enumerate_critical_s(&Q, 1), vec![s(&[])]);
        assert_eq!(enumerate_critical_s(&C, 1), vec![s(&[])]);
        assert_eq!(
            enumerate_critical_s(&Q, 4),
            vec![
                s(&[]),
                s(&[1]),
                s(&[2]),
                s(&[2, 1]),
                s(&[3]),
                s(&[3, 1]),
                s(&[3, 2]),
                s(&[3, 2, 1])
            ]
        );
    }

    #[test]
    fn enumerate_cm_bounded() {
        // epsilon = 3, at most two coefficients: 0, 1, 1+t, 2, 2+t, 2+2t
        assert_eq!(
            enumerate_s(&Q, 3, Mode::CohenMacaulay, 2),
            vec![s(&[]), s(&[1]), s(&[1, 1]), s(&[2]), s(&[2, 1]), s(&[2, 2])]
        );
        for sp in enumerate_s(&C, 4, Mode::CohenMacaulay, 3) {
            assert!(sp.is_admissible(&C, 4, Mode::CohenMacaulay));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_hilbert_closed(&Q, 4), BigUint::from(8u32));
        assert_eq!(count_hilbert_closed(&C, 4), BigUint::from(7u32));
        assert_eq!(count_hilbert_closed(&C, 1), BigUint::from(1u32));
        for eps in 1..=12 {
            for p in [Q, C] {
                assert_eq!(
                    BigUint::from(enumerate_critical_s(&p, eps).len()),
                    count_hilbert_closed(&p, eps)
                );
            }
        }
    }

    /// `e/(1-t)^2 - s/(1-t)` (quadratic) and `2e/((1-t)(1-t^2)) - s/(1-t^2)`
    /// (cubic), expanded independently of the `h_A q` route.
    fn display_form(p: AlgebraParams, eps: u64, sp: &SPoly, n: i64) -> IntSeries {
        let e = BigRational::new(eps.into(), p.iota.into());
        let omt = LaurentPoly::one_minus_t();
        let (d1, d2, lead) = if p.is_cubic() {
            let omt2 = LaurentPoly::from_i64s(0, &[1, 0, -1]);
            (&omt * &omt2, omt2, e * BigRational::from_integer(2.into()))
        } else {
            (omt.pow(2), omt, e)
        };
        assert!(lead.is_integer());
        let first = IntSeries::from_ratio(&LaurentPoly::monomial(lead.to_integer(), 0), &d1, n);
        let second = IntSeries::from_ratio(&sp.to_poly(), &d2, n);
        &first - &second
    }

    #[test]
    fn display_form_agrees() {
        for p in [Q, C] {
            for eps in 1..=7 {
                for sp in enumerate_s(&p, eps, Mode::CohenMacaulay, 4) {
                    let hc = HilbertClass::new(p, eps, sp.clone(), Mode::CohenMacaulay).unwrap();
                    let a = s_to_hilbert(&hc, 20);
                    let b = display_form(p, eps, &sp, 20);
                    assert_eq!(a, b, "{p:?} eps={eps} s={sp}");
                }
            }
        }
    }

    #[test]
    fn spoly_display() {
        assert_eq!(s(&[3, 2, 1]).to_string(), "3 + 2t + t^2");
        assert_eq!(s(&[]).to_string(), "0");
        assert_eq!(s(&[2, 0, 0]), s(&[2]));
    }
}
