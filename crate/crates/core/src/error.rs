use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by 1 - t")]
    NotDivisible,
    #[error("the zero polynomial has no pole order")]
    ZeroPolynomial,
    #[error("characteristic polynomial vanishes to order {0} at t = 1; not a Hilbert series")]
    ExcessVanishing(u32),
    #[error("empty degree sequence")]
    EmptySequence,
    #[error("coefficient at exponent {exponent} is beyond truncation order {trunc_order}")]
    BeyondTruncation { exponent: i64, trunc_order: i64 },
    #[error("s(t) = {0} is not admissible for the requested class")]
    InvalidSPoly(alloc::string::String),
    #[error("epsilon must be positive")]
    NonPositiveEpsilon,
    #[error("series is not the Hilbert series of a normalized module of GK-dimension two")]
    NotInImage,
    #[error("series needs at least {needed} known coefficients, has {have}")]
    InsufficientTruncation { needed: usize, have: usize },
    #[error("generic shape unavailable: Betti data fails the {0} criterion")]
    ShapeUnavailable(&'static str),
    #[error("bordered shape needs a square degree matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("descriptors belong to different algebra kinds")]
    KindMismatch,
    #[error("point is not in the support of the divisor")]
    PointNotInSupport,
    #[error("divisor degree {deg} exceeds r_A * n = {bound}")]
    DegreeTooLarge { deg: u64, bound: u64 },
    #[error("curve descriptor of degree {deg} does not match r_A * epsilon = {expected}")]
    DescriptorDegree { deg: i64, expected: i64 },
}
