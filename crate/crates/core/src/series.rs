//! Exact Laurent polynomials and truncated Laurent series over the integers.
//!
//! Hilbert series here are rational functions with denominators that are
//! products of cyclotomic factors, so every series is computed by exact long
//! division and carries its truncation order explicitly. Coefficients at or
//! beyond the truncation order are unknown, never zero, and reading one is
//! an error.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{ambient_hilbert_series, AlgebraParams};
use crate::betti::BettiPair;
use crate::error::{Error, Result};

/// A Laurent polynomial `sum_i c_i t^(offset + i)` with exact coefficients.
///
/// Canonical form: the first and last stored coefficients are nonzero, and the
/// zero polynomial has no coefficients and offset 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.canonicalize();
        p
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::new(lo, coeffs)
    }

    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, exponent: i64) -> Self {
        Self::new(exponent, vec![c])
    }

    pub fn one_minus_t() -> Self {
        Self::from_i64s(0, &[1, -1])
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficients from `offset()` to `degree()`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        let i = exponent - self.offset;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn mul_one_minus_t(&self) -> Self {
        self * &Self::one_minus_t()
    }

    /// Exact quotient by `1 - t`; the coefficient at `l` is `sum_{i <= l} c_i`.
    pub fn div_one_minus_t(&self) -> Result<Self> {
        if !self.eval_at_one().is_zero() {
            return Err(Error::NotDivisible);
        }
        let mut acc = BigInt::zero();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            out.push(acc.clone());
        }
        // the running sum ends at 0, so the last entry is dropped by canonicalize
        Ok(Self::new(self.offset, out))
    }

    /// Multiplicity of `t = 1` as a root, by repeated synthetic division.
    pub fn root_multiplicity_at_one(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(next) = cur.div_one_minus_t() {
            cur = next;
            k += 1;
        }
        Ok(k)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Coefficients as machine integers, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().chain(rhs.terms()).map(|(e, c)| (e, c.clone())))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.offset + rhs.offset, coeffs)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, e: i64) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let unit = abs.is_one();
    match e {
        0 => write!(f, "{abs}"),
        1 if unit => f.write_str("t"),
        1 => write!(f, "{abs}t"),
        _ if unit => write!(f, "t^{e}"),
        _ => write!(f, "{abs}t^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            write_term(f, k == 0, c, e)?;
        }
        Ok(())
    }
}

/// A Laurent series known up to (not including) exponent `trunc_order`.
///
/// Coefficients are stored densely from `offset`; every exponent in
/// `offset..trunc_order` is known. The leading stored coefficient is nonzero
/// unless the series is zero to the known precision, in which case nothing is
/// stored and `offset == trunc_order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    offset: i64,
    coeffs: Vec<BigInt>,
    trunc_order: i64,
}

impl IntSeries {
    /// `coeffs` start at `offset`; missing entries up to `trunc_order` are
    /// known zeros.
    ///
    /// Panics if `coeffs` reaches past `trunc_order`.
    pub fn new(offset: i64, mut coeffs: Vec<BigInt>, trunc_order: i64) -> Self {
        let span = (trunc_order - offset).max(0) as usize;
        assert!(
            coeffs.len() <= span,
            "series coefficients reach beyond the truncation order"
        );
        coeffs.resize(span, BigInt::zero());
        let mut s = IntSeries {
            offset,
            coeffs,
            trunc_order,
        };
        s.canonicalize();
        s
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64], trunc_order: i64) -> Self {
        Self::new(
            offset,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            trunc_order,
        )
    }

    /// The zero series known up to `trunc_order`.
    pub fn zero(trunc_order: i64) -> Self {
        IntSeries {
            offset: trunc_order,
            coeffs: Vec::new(),
            trunc_order,
        }
    }

    /// Expansion of `num / den` up to `trunc_order`. The lowest coefficient of
    /// `den` must be `1` or `-1`.
    pub fn from_ratio(num: &LaurentPoly, den: &LaurentPoly, trunc_order: i64) -> Self {
        let lead = den
            .coeffs()
            .first()
            .expect("division by the zero polynomial");
        assert!(
            lead.abs().is_one(),
            "denominator must have a unit lowest coefficient"
        );
        if num.is_zero() {
            return Self::zero(trunc_order);
        }
        let offset = num.offset() - den.offset();
        let len = (trunc_order - offset).max(0) as usize;
        let d = den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for k in 0..len {
            let mut c = num.coeff(num.offset() + k as i64);
            for j in 1..d.len().min(k + 1) {
                c -= &d[j] * &out[k - j];
            }
            out.push(c * lead);
        }
        Self::new(offset, out, trunc_order)
    }

    fn canonicalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        debug_assert_eq!(self.offset + self.coeffs.len() as i64, self.trunc_order);
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Known coefficients, from `offset()` up to `trunc_order() - 1`.
    pub fn known(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> Result<BigInt> {
        if exponent >= self.trunc_order {
            return Err(Error::BeyondTruncation {
                exponent,
                trunc_order: self.trunc_order,
            });
        }
        if exponent < self.offset {
            return Ok(BigInt::zero());
        }
        Ok(self.coeffs[(exponent - self.offset) as usize].clone())
    }

    /// `count` consecutive coefficients starting at exponent `from`.
    pub fn coeffs_from(&self, from: i64, count: usize) -> Result<Vec<BigInt>> {
        (0..count as i64).map(|i| self.coeff(from + i)).collect()
    }

    /// Known coefficients as machine integers; panics on overflow.
    pub fn known_i64s(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .map(|c| c.to_i64().expect("coefficient exceeds i64"))
            .collect()
    }

    /// Product with an exact polynomial. The result is known up to
    /// `trunc_order + p.offset()`.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let trunc = self.trunc_order + p.offset();
        if p.is_zero() || self.is_zero() {
            return Self::zero(trunc);
        }
        let offset = self.offset + p.offset();
        let len = (trunc - offset) as usize;
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in p.coeffs().iter().enumerate() {
                if i + j < len {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(offset, out, trunc)
    }

    /// Product of two truncated series.
    pub fn mul_series(&self, rhs: &IntSeries) -> Self {
        let trunc = (self.offset + rhs.trunc_order).min(rhs.offset + self.trunc_order);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(trunc);
        }
        let offset = self.offset + rhs.offset;
        let len = (trunc - offset).max(0) as usize;
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(offset, out, trunc)
    }

    fn zip_with(&self, rhs: &IntSeries, f: impl Fn(BigInt, BigInt) -> BigInt) -> Self {
        let trunc = self.trunc_order.min(rhs.trunc_order);
        let offset = self.offset.min(rhs.offset).min(trunc);
        let out = (offset..trunc)
            .map(|e| {
                f(
                    self.coeff(e).expect("below truncation"),
                    rhs.coeff(e).expect("below truncation"),
                )
            })
            .collect();
        Self::new(offset, out, trunc)
    }
}

impl Add for &IntSeries {
    type Output = IntSeries;

    fn add(self, rhs: &IntSeries) -> IntSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntSeries {
    type Output = IntSeries;

    fn sub(self, rhs: &IntSeries) -> IntSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, self.offset + i as i64)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.trunc_order)
    }
}

/// Characteristic polynomial `q(t) = sum_i (a_i - b_i) t^i`.
pub fn char_poly(betti: &BettiPair) -> LaurentPoly {
    LaurentPoly::from_terms(
        betti
            .a()
            .iter()
            .map(|(&d, &c)| (d, BigInt::from(c)))
            .chain(betti.b().iter().map(|(&d, &c)| (d, -BigInt::from(c)))),
    )
}

/// `p(t) = q(t) / (1 - t)`.
pub fn p_poly(q: &LaurentPoly) -> Result<LaurentPoly> {
    q.div_one_minus_t()
}

/// Hilbert series `h_A(t) q(t)` of a module with the given Betti numbers,
/// known for `n_terms` exponents starting at the lowest exponent of `q`.
pub fn series_from_resolution(
    params: &AlgebraParams,
    betti: &BettiPair,
    n_terms: usize,
) -> IntSeries {
    let q = char_poly(betti);
    ambient_hilbert_series(params, n_terms).mul_poly(&q)
}

/// Growth data read off the pole of the Hilbert series at `t = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Growth {
    /// Pole order at `t = 1`.
    pub gkdim: u32,
    /// Leading coefficient of the expansion in powers of `1 - t`.
    pub multiplicity: BigRational,
    /// Normalized multiplicity `iota_A * multiplicity`, always an integer.
    pub epsilon: BigInt,
}

/// GK-dimension, multiplicity and normalized multiplicity of `h_A(t) q(t)`.
///
/// With `k` the order of vanishing of `q` at 1 and `r = q / (1-t)^k`, the pole
/// order is `3 - k` and the multiplicity is `r(1) / iota_A` (the extra factor
/// `1/(1+t)` of the cubic case contributes `1/2 = 1/iota_A`). For
/// GK-dimension two `epsilon = p(1) = -q'(1)`.
pub fn gk_and_multiplicity(params: &AlgebraParams, q: &LaurentPoly) -> Result<Growth> {
    let k = q.root_multiplicity_at_one()?;
    if k > 3 {
        return Err(Error::ExcessVanishing(k));
    }
    let mut r = q.clone();
    for _ in 0..k {
        r = r.div_one_minus_t()?;
    }
    let epsilon = r.eval_at_one();
    let multiplicity = BigRational::new(epsilon.clone(), BigInt::from(params.iota));
    Ok(Growth {
        gkdim: 3 - k,
        multiplicity,
        epsilon,
    })
}

/// Rendering helper for coefficient lists: `"1 3 5 7"`.
pub fn join_coeffs(coeffs: &[BigInt]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let _ = write!(s, "{c}");
    }
    s
}
