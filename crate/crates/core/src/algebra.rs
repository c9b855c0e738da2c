//! The quadratic/cubic dichotomy and the numerical constants attached to it.

use crate::series::{IntSeries, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    /// Three generators in degree one, relations in degree two.
    Quadratic,
    /// Two generators in degree one, relations in degree three.
    Cubic,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Quadratic => "quadratic",
            AlgebraKind::Cubic => "cubic",
        }
    }
}

/// Constants of a generic three-dimensional AS-regular algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    pub kind: AlgebraKind,
    /// Number of generators.
    pub r: u32,
    /// Inverse of the multiplicity of the algebra, `4 - r`.
    pub iota: u32,
    /// Degree of the normal element `g` cutting out the curve, `iota * r`.
    pub central_degree: u32,
}

impl AlgebraParams {
    pub const QUADRATIC: AlgebraParams = AlgebraParams {
        kind: AlgebraKind::Quadratic,
        r: 3,
        iota: 1,
        central_degree: 3,
    };

    pub const CUBIC: AlgebraParams = AlgebraParams {
        kind: AlgebraKind::Cubic,
        r: 2,
        iota: 2,
        central_degree: 4,
    };

    pub const fn new(kind: AlgebraKind) -> Self {
        match kind {
            AlgebraKind::Quadratic => Self::QUADRATIC,
            AlgebraKind::Cubic => Self::CUBIC,
        }
    }

    pub fn is_cubic(&self) -> bool {
        self.kind == AlgebraKind::Cubic
    }

    /// Denominator of the Hilbert series of the algebra:
    /// `(1-t)^3` or `(1-t)^2 (1-t^2)`.
    pub fn hilbert_denominator(&self) -> LaurentPoly {
        let one_minus_t = LaurentPoly::one_minus_t();
        match self.kind {
            AlgebraKind::Quadratic => one_minus_t.pow(3),
            AlgebraKind::Cubic => {
                let one_minus_t2 = LaurentPoly::from_i64s(0, &[1, 0, -1]);
                &one_minus_t.pow(2) * &one_minus_t2
            }
        }
    }
}

/// The first `n_terms` coefficients of the Hilbert series of the algebra.
pub fn ambient_hilbert_series(params: &AlgebraParams, n_terms: usize) -> IntSeries {
    assert!(n_terms >= 1, "n_terms must be positive");
    IntSeries::from_ratio(
        &LaurentPoly::one(),
        &params.hilbert_denominator(),
        n_terms as i64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.known_i64s()
    }

    #[test]
    fn constants() {
        let q = AlgebraParams::new(AlgebraKind::Quadratic);
        assert_eq!((q.r, q.iota, q.central_degree), (3, 1, 3));
        let c = AlgebraParams::new(AlgebraKind::Cubic);
        assert_eq!((c.r, c.iota, c.central_degree), (2, 2, 4));
        for p in [q, c] {
            assert_eq!(p.iota, 4 - p.r);
            assert_eq!(p.central_degree, p.iota * p.r);
        }
    }

    #[test]
    fn ambient_series() {
        let q = ambient_hilbert_series(&AlgebraParams::QUADRATIC, 6);
        assert_eq!(ints(&q), [1, 3, 6, 10, 15, 21]);
        assert_eq!(q.trunc_order(), 6);
        let c = ambient_hilbert_series(&AlgebraParams::CUBIC, 6);
        assert_eq!(ints(&c), [1, 2, 4, 6, 9, 12]);
        assert_eq!(
            ints(&ambient_hilbert_series(&AlgebraParams::QUADRATIC, 1)),
            [1]
        );
    }

    #[test]
    fn quadratic_ambient_is_binomial() {
        let s = ambient_hilbert_series(&AlgebraParams::QUADRATIC, 40);
        for (n, c) in ints(&s).into_iter().enumerate() {
            let n = n as i64;
            assert_eq!(c, (n + 1) * (n + 2) / 2);
        }
    }

    #[test]
    fn cubic_ambient_by_counting_monomials() {
        // dim A_n = #{(i, j, k) : i + j + 2k = n}
        let s = ambient_hilbert_series(&AlgebraParams::CUBIC, 30);
        for (n, c) in ints(&s).into_iter().enumerate() {
            let n = n as i64;
            let mut count = 0;
            for k in 0..=n / 2 {
                count += n - 2 * k + 1;
            }
            assert_eq!(c, count);
        }
    }
}
