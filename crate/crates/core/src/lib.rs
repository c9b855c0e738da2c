//! Numerical invariants of Cohen-Macaulay curve modules over generic
//! three-dimensional Artin-Schelter regular algebras.
//!
//! The crate is `no_std` and needs only `alloc`. It covers:
//!
//! * exact truncated series arithmetic and the algebra constants
//!   ([`series`], [`algebra`]),
//! * staircase sequences, degree matrices, ladders and the Betti number
//!   criteria for Cohen-Macaulay and critical modules ([`stair`],
//!   [`conditions`], [`shape`]),
//! * the correspondence between Hilbert series and `s(t)` polynomials,
//!   enumeration and closed-form counting of Hilbert series and resolutions
//!   ([`hilbert`], [`resolutions`], [`partition`], [`tables`]),
//! * formal divisor bookkeeping on a model of the point group of the curve
//!   ([`divisor`]).

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod betti;
pub mod conditions;
pub mod divisor;
pub mod error;
pub mod hilbert;
pub mod partition;
pub mod resolutions;
pub mod series;
pub mod shape;
pub mod stair;
pub mod tables;

pub use algebra::{AlgebraKind, AlgebraParams};
pub use betti::BettiPair;
pub use conditions::{check_cm, check_critical, diagnose, CheckForm, Condition, Violation};
pub use error::{Error, Result};
pub use hilbert::{
    count_hilbert_closed, enumerate_critical_s, enumerate_s, hilbert_to_s, s_to_hilbert,
    HilbertClass, Mode, SPoly,
};
pub use series::{IntSeries, LaurentPoly};
