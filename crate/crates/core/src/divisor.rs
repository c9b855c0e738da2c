//! Formal divisors on a model of the curve.
//!
//! The points of the elliptic curve are modelled by the free abelian group
//! `Z^2`, with the automorphism `sigma` acting as translation by
//! `XI = (0, 1)`. Linear equivalence is equality of degree and of the sum
//! in the group, which is all the bookkeeping below relies on.

use alloc::collections::BTreeMap;
use core::ops::{Add, Neg, Sub};

use crate::algebra::AlgebraParams;
use crate::error::{Error, Result};

/// A point of the curve, as an element of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointModel {
    pub x: i64,
    pub y: i64,
}

/// The translation vector of `sigma`.
pub const XI: PointModel = PointModel { x: 0, y: 1 };

impl PointModel {
    pub const ORIGIN: PointModel = PointModel { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        PointModel { x, y }
    }

    pub fn scale(self, k: i64) -> Self {
        PointModel::new(self.x * k, self.y * k)
    }

    /// `p^{sigma^n} = p + n * XI`.
    pub fn sigma(self, n: i64) -> Self {
        self + XI.scale(n)
    }
}

impl Add for PointModel {
    type Output = PointModel;

    fn add(self, rhs: PointModel) -> PointModel {
        PointModel::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for PointModel {
    type Output = PointModel;

    fn sub(self, rhs: PointModel) -> PointModel {
        PointModel::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for PointModel {
    type Output = PointModel;

    fn neg(self) -> PointModel {
        PointModel::new(-self.x, -self.y)
    }
}

/// A finitely supported integer combination of points. Zero multiplicities
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FormalDivisor {
    support: BTreeMap<PointModel, i64>,
}

impl FormalDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_points<I: IntoIterator<Item = (PointModel, i64)>>(it: I) -> Self {
        let mut d = Self::new();
        for (p, m) in it {
            d.add_point(p, m);
        }
        d
    }

    pub fn add_point(&mut self, p: PointModel, mult: i64) {
        let m = self.support.entry(p).or_insert(0);
        *m += mult;
        if *m == 0 {
            self.support.remove(&p);
        }
    }

    pub fn multiplicity(&self, p: &PointModel) -> i64 {
        self.support.get(p).copied().unwrap_or(0)
    }

    /// Points with multiplicities, sorted.
    pub fn iter(&self) -> impl Iterator<Item = (PointModel, i64)> + '_ {
        self.support.iter().map(|(&p, &m)| (p, m))
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.support.values().all(|&m| m > 0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.support.values().all(|&m| m == 1)
    }
}

impl Add for &FormalDivisor {
    type Output = FormalDivisor;

    fn add(self, rhs: &FormalDivisor) -> FormalDivisor {
        let mut out = self.clone();
        for (p, m) in rhs.iter() {
            out.add_point(p, m);
        }
        out
    }
}

impl Sub for &FormalDivisor {
    type Output = FormalDivisor;

    fn sub(self, rhs: &FormalDivisor) -> FormalDivisor {
        let mut out = self.clone();
        for (p, m) in rhs.iter() {
            out.add_point(p, -m);
        }
        out
    }
}

pub fn degree(d: &FormalDivisor) -> i64 {
    d.support.values().sum()
}

/// `sum_p mult(p) * p` in the group.
pub fn group_sum(d: &FormalDivisor) -> PointModel {
    d.iter()
        .fold(PointModel::ORIGIN, |acc, (p, m)| acc + p.scale(m))
}

pub fn lin_equiv(d1: &FormalDivisor, d2: &FormalDivisor) -> bool {
    degree(d1) == degree(d2) && group_sum(d1) == group_sum(d2)
}

/// `sigma^n D`: every point translated by `n * XI`.
pub fn sigma_shift(d: &FormalDivisor, n: i64) -> FormalDivisor {
    FormalDivisor {
        support: d.support.iter().map(|(&p, &m)| (p.sigma(n), m)).collect(),
    }
}

/// Divisor data of a curve module: `deg div = r_A * epsilon`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveDescriptor {
    params: AlgebraParams,
    epsilon: u64,
    div: FormalDivisor,
}

impl CurveDescriptor {
    pub fn new(params: AlgebraParams, epsilon: u64, div: FormalDivisor) -> Result<Self> {
        if epsilon == 0 {
            return Err(Error::NonPositiveEpsilon);
        }
        let expected = i64::from(params.r) * epsilon as i64;
        let deg = degree(&div);
        if deg != expected {
            return Err(Error::DescriptorDegree { deg, expected });
        }
        Ok(CurveDescriptor {
            params,
            epsilon,
            div,
        })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn epsilon(&self) -> u64 {
        self.epsilon
    }

    pub fn div(&self) -> &FormalDivisor {
        &self.div
    }
}

/// Divisor of the middle term of `0 -> M1 -> M -> M2 -> 0`.
pub fn exact_sequence_add(m1: &CurveDescriptor, m2: &CurveDescriptor) -> Result<CurveDescriptor> {
    if m1.params.kind != m2.params.kind {
        return Err(Error::KindMismatch);
    }
    let out = CurveDescriptor::new(m1.params, m1.epsilon + m2.epsilon, &m1.div + &m2.div)?;
    Ok(out)
}

/// Divisor of the kernel of a nonzero map onto the point module at `p`:
/// `(p)` is replaced by `(p^{sigma^{-central_degree}})`.
pub fn point_quotient(m: &CurveDescriptor, p: PointModel) -> Result<CurveDescriptor> {
    if m.div.multiplicity(&p) < 1 {
        return Err(Error::PointNotInSupport);
    }
    let mut div = m.div.clone();
    div.add_point(p, -1);
    div.add_point(p.sigma(-i64::from(m.params.central_degree)), 1);
    let out = CurveDescriptor::new(m.params, m.epsilon, div)?;
    Ok(out)
}

/// Dimension of the space of sections of `L_n` vanishing on a
/// multiplicity-free divisor of the given degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SectionDim {
    Exact(u64),
    AtMostOne,
}

pub fn section_space_dim(params: &AlgebraParams, n: u64, deg_d: u64) -> Result<SectionDim> {
    let bound = u64::from(params.r) * n;
    match deg_d.cmp(&bound) {
        core::cmp::Ordering::Less => Ok(SectionDim::Exact(bound - deg_d)),
        core::cmp::Ordering::Equal => Ok(SectionDim::AtMostOne),
        core::cmp::Ordering::Greater => Err(Error::DegreeTooLarge { deg: deg_d, bound }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn div(v: &[(i64, i64, i64)]) -> FormalDivisor {
        FormalDivisor::from_points(v.iter().map(|&(x, y, m)| (PointModel::new(x, y), m)))
    }

    #[test]
    fn degrees_and_sums() {
        assert_eq!(degree(&div(&[(0, 0, 1), (1, 1, 2)])), 3);
        assert_eq!(degree(&FormalDivisor::new()), 0);
        assert_eq!(degree(&div(&[(5, -2, -1), (0, 0, 1)])), 0);
        assert_eq!(
            group_sum(&div(&[(0, 0, 1), (1, 1, 1)])),
            PointModel::new(1, 1)
        );
        assert_eq!(
            group_sum(&div(&[(1, 0, 1), (0, 1, 1)])),
            PointModel::new(1, 1)
        );
        assert_eq!(group_sum(&div(&[(2, 3, 2)])), PointModel::new(4, 6));
    }

    #[test]
    fn equivalence_examples() {
        assert!(lin_equiv(
            &div(&[(0, 0, 1), (1, 1, 1)]),
            &div(&[(1, 0, 1), (0, 1, 1)])
        ));
        assert!(!lin_equiv(&div(&[(0, 0, 1)]), &div(&[(0, 0, 2)])));
        let d = div(&[(3, -1, 2), (0, 4, -1)]);
        assert!(lin_equiv(&d, &d));
    }

    #[test]
    fn shifts() {
        assert_eq!(sigma_shift(&div(&[(0, 0, 1)]), 3), div(&[(0, 3, 1)]));
        let d = div(&[(1, 2, 1), (4, 4, 3)]);
        assert_eq!(sigma_shift(&d, 0), d);
        assert_eq!(sigma_shift(&div(&[(1, 1, 2)]), -1), div(&[(1, 0, 2)]));
    }

    #[test]
    fn zero_multiplicities_vanish() {
        let mut d = div(&[(0, 0, 1)]);
        d.add_point(PointModel::ORIGIN, -1);
        assert!(d.is_zero());
        assert!(div(&[(0, 0, 1), (1, 0, 1)]).is_multiplicity_free());
        assert!(!div(&[(0, 0, 2)]).is_multiplicity_free());
        assert!(div(&[(0, 0, 2)]).is_effective());
        assert!(!div(&[(0, 0, -1)]).is_effective());
    }

    #[test]
    fn exact_sequences() {
        let q = AlgebraParams::QUADRATIC;
        let m1 = CurveDescriptor::new(q, 1, div(&[(0, 0, 1), (1, 0, 1), (2, 0, 1)])).unwrap();
        let m2 = CurveDescriptor::new(q, 2, div(&[(0, 5, 6)])).unwrap();
        let m = exact_sequence_add(&m1, &m2).unwrap();
        assert_eq!((m.epsilon(), degree(m.div())), (3, 9));

        let c = AlgebraParams::CUBIC;
        let c1 = CurveDescriptor::new(c, 1, div(&[(0, 0, 1), (0, 1, 1)])).unwrap();
        let c2 = CurveDescriptor::new(c, 1, div(&[(3, 3, 2)])).unwrap();
        let m = exact_sequence_add(&c1, &c2).unwrap();
        assert_eq!((m.epsilon(), degree(m.div())), (2, 4));

        assert_eq!(exact_sequence_add(&m1, &c1), Err(Error::KindMismatch));
        assert_eq!(
            CurveDescriptor::new(q, 0, FormalDivisor::new()),
            Err(Error::NonPositiveEpsilon)
        );
        assert!(matches!(
            CurveDescriptor::new(q, 1, div(&[(0, 0, 2)])),
            Err(Error::DescriptorDegree {
                deg: 2,
                expected: 3
            })
        ));
    }

    #[test]
    fn point_quotients() {
        let q = AlgebraParams::QUADRATIC;
        let m = CurveDescriptor::new(q, 1, div(&[(0, 0, 1), (1, 0, 1), (2, 0, 1)])).unwrap();
        let k = point_quotient(&m, PointModel::ORIGIN).unwrap();
        assert_eq!(k.div(), &div(&[(0, -3, 1), (1, 0, 1), (2, 0, 1)]));
        assert_eq!(group_sum(k.div()), group_sum(m.div()) - XI.scale(3));

        let c = AlgebraParams::CUBIC;
        let m = CurveDescriptor::new(c, 1, div(&[(5, 7, 1), (1, 1, 1)])).unwrap();
        let k = point_quotient(&m, PointModel::new(5, 7)).unwrap();
        assert_eq!(k.div().multiplicity(&PointModel::new(5, 3)), 1);

        assert_eq!(
            point_quotient(&m, PointModel::new(9, 9)),
            Err(Error::PointNotInSupport)
        );
    }

    #[test]
    fn section_dims() {
        let q = AlgebraParams::QUADRATIC;
        let c = AlgebraParams::CUBIC;
        assert_eq!(section_space_dim(&q, 2, 3), Ok(SectionDim::Exact(3)));
        assert_eq!(section_space_dim(&c, 1, 2), Ok(SectionDim::AtMostOne));
        assert_eq!(section_space_dim(&q, 1, 0), Ok(SectionDim::Exact(3)));
        assert_eq!(
            section_space_dim(&q, 1, 4),
            Err(Error::DegreeTooLarge { deg: 4, bound: 3 })
        );
    }

    #[test]
    fn sigma_has_infinite_order() {
        for n in 1..=10_000i64 {
            assert_ne!(XI.scale(n), PointModel::ORIGIN);
            assert_ne!(XI.scale(-n), PointModel::ORIGIN);
        }
    }
}
