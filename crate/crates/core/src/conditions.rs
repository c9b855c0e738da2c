//! Decision procedures for Betti numbers of Cohen-Macaulay and critical
//! modules of GK-dimension two.
//!
//! Each criterion exists in three equivalent forms:
//!
//! * [`CheckForm::Q`]: conditions on `q_i = a_i - b_i` and its partial sums
//!   `p_l = sum_{i <= l} q_i`, with `mu`, `nu` the lowest and highest nonzero
//!   `q_i`;
//! * [`CheckForm::AB`]: partial-sum inequalities between `a` and `b`, with
//!   `mu` the lowest nonzero `a_i` and `nu` the highest nonzero `b_i`;
//! * [`CheckForm::Ladder`]: the staircase region `L_{a,b}` must contain every
//!   cell on or above the diagonal (Cohen-Macaulay) or on or above the
//!   subdiagonal (critical).
//!
//! Critical modules over a cubic algebra additionally exclude resolutions
//! `0 -> A(-d-1)^n -> A(-d)^n` with `n >= 2`.
//!
//! Empty Betti data is rejected by every form.

use alloc::collections::BTreeSet;
use core::fmt;

use crate::algebra::AlgebraParams;
use crate::betti::BettiPair;
use crate::stair::{degree_matrix, stair_sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckForm {
    Q,
    AB,
    Ladder,
}

impl CheckForm {
    pub const ALL: [CheckForm; 3] = [CheckForm::Q, CheckForm::AB, CheckForm::Ladder];
}

/// Which class of modules is asked about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Cohen-Macaulay of GK-dimension two (equivalently projective dimension one).
    CohenMacaulay,
    /// Critical Cohen-Macaulay of GK-dimension two.
    Critical,
}

impl Mode {
    pub fn is_critical(self) -> bool {
        self == Mode::Critical
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::CohenMacaulay => "cohen-macaulay",
            Mode::Critical => "critical",
        }
    }
}

pub fn check_cm(params: &AlgebraParams, betti: &BettiPair, form: CheckForm) -> bool {
    check(params, betti, form, Mode::CohenMacaulay)
}

pub fn check_critical(params: &AlgebraParams, betti: &BettiPair, form: CheckForm) -> bool {
    check(params, betti, form, Mode::Critical)
}

pub fn check(params: &AlgebraParams, betti: &BettiPair, form: CheckForm, mode: Mode) -> bool {
    match form {
        CheckForm::Q => q_form(params, betti, mode),
        CheckForm::AB => ab_form(params, betti, mode),
        CheckForm::Ladder => diagnose(params, betti, mode).is_ok(),
    }
}

fn q_form(params: &AlgebraParams, betti: &BettiPair, mode: Mode) -> bool {
    if betti.a().is_empty() || betti.b().is_empty() {
        return false;
    }
    let q = |l: i64| betti.a_at(l) as i128 - betti.b_at(l) as i128;
    let support: BTreeSet<i64> = betti.support().filter(|&l| q(l) != 0).collect();
    let (Some(&mu), Some(&nu)) = (support.first(), support.last()) else {
        return false;
    };
    // (a) a_l = 0 for l < mu and l >= nu
    if betti.a().keys().any(|&l| l < mu || l >= nu) {
        return false;
    }
    // (b) a_mu = q_mu > 0
    if betti.a_at(mu) as i128 != q(mu) || q(mu) <= 0 {
        return false;
    }
    // (c) sum q = 0
    if support.iter().map(|&l| q(l)).sum::<i128>() != 0 {
        return false;
    }
    // (d) max(q_l, 0) <= a_l <= p_l for all l (resp. a_l < p_l on mu < l < nu).
    // p_l only changes on the support, so it suffices to look at support
    // points and at the first degree of each gap.
    let candidates: BTreeSet<i64> = betti.support().flat_map(|l| [l, l + 1]).collect();
    for &l in &candidates {
        let p: i128 = support.range(..=l).map(|&x| q(x)).sum();
        let a = betti.a_at(l) as i128;
        if a < q(l).max(0) {
            return false;
        }
        let strict = mode.is_critical() && mu < l && l < nu;
        if (strict && a >= p) || a > p {
            return false;
        }
    }
    // (e) cubic exclusion
    !(mode.is_critical() && params.is_cubic() && betti.a_at(mu) >= 2 && mu == nu - 1)
}

fn ab_form(params: &AlgebraParams, betti: &BettiPair, mode: Mode) -> bool {
    let (Some(&mu), Some(&nu)) = (betti.a().keys().next(), betti.b().keys().next_back()) else {
        return false;
    };
    // (a) holds by construction: counts are unsigned.
    // (b) a_l = 0 for l >= nu, b_l = 0 for l <= mu
    if betti.a().keys().any(|&l| l >= nu) || betti.b().keys().any(|&l| l <= mu) {
        return false;
    }
    // (c) equal ranks
    let n = betti.rank_b();
    if betti.rank_a() != n {
        return false;
    }
    // (d) sum_{i <= l} b_i <= sum_{i < l} a_i (strict on mu < l < nu).
    // The left side only grows on the support of b and the right side never
    // decreases, so support points of b and the first interior degree suffice.
    let mut candidates: BTreeSet<i64> = betti.b().keys().copied().collect();
    candidates.insert(mu + 1);
    for &l in &candidates {
        let lhs: u64 = betti.b().range(..=l).map(|(_, &c)| c).sum();
        let rhs: u64 = betti.a().range(..l).map(|(_, &c)| c).sum();
        let strict = mode.is_critical() && mu < l && l < nu;
        if (strict && lhs >= rhs) || lhs > rhs {
            return false;
        }
    }
    // (e) cubic exclusion
    !(mode.is_critical() && params.is_cubic() && n >= 2 && mu == nu - 1)
}

/// The individual conditions of the ladder form, labelled `(1)(x)` for the
/// Cohen-Macaulay criterion and `(2)(x)` for the critical one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The Betti data is empty.
    Empty,
    /// (a) every `a_i`, `b_i` is non-negative.
    NonNegative,
    /// (b) `sum_i a_i = sum_i b_i`.
    EqualRanks,
    /// (c) `(alpha, beta)` with `beta >= alpha` (critical: `beta >= alpha - 1`)
    /// lies in the ladder.
    Ladder { alpha: usize, beta: usize },
    /// (d) over a cubic algebra, not (`n >= 2` and every degree-matrix entry
    /// equals 1).
    CubicExclusion,
}

impl Condition {
    pub fn letter(&self) -> Option<char> {
        match self {
            Condition::Empty => None,
            Condition::NonNegative => Some('a'),
            Condition::EqualRanks => Some('b'),
            Condition::Ladder { .. } => Some('c'),
            Condition::CubicExclusion => Some('d'),
        }
    }
}

/// The first failed condition for a given mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Violation {
    pub mode: Mode,
    pub condition: Condition,
}

impl Violation {
    /// Label such as `(1)(c)` or `(2)(d)`.
    pub fn label(&self) -> alloc::string::String {
        let part = match self.mode {
            Mode::CohenMacaulay => 1,
            Mode::Critical => 2,
        };
        match self.condition.letter() {
            Some(c) => alloc::format!("({part})({c})"),
            None => alloc::format!("({part})"),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = self.label();
        match self.condition {
            Condition::Empty => write!(f, "{label}: Betti data is empty"),
            Condition::NonNegative => write!(f, "{label}: Betti numbers must be non-negative"),
            Condition::EqualRanks => write!(f, "{label}: sum of a_i differs from sum of b_i"),
            Condition::Ladder { alpha, beta } => write!(
                f,
                "{label}: cell ({alpha},{beta}) lies outside the ladder, S(a)_{alpha} >= S(b)_{beta}"
            ),
            Condition::CubicExclusion => write!(
                f,
                "{label}: cubic algebra with n >= 2 and every degree-matrix entry equal to 1"
            ),
        }
    }
}

/// Ladder-form check returning the first violated condition.
pub fn diagnose(params: &AlgebraParams, betti: &BettiPair, mode: Mode) -> Result<(), Violation> {
    let fail = |condition| Err(Violation { mode, condition });
    if betti.a().is_empty() || betti.b().is_empty() {
        return fail(if betti.is_empty() {
            Condition::Empty
        } else {
            Condition::EqualRanks
        });
    }
    let n = betti.rank_b();
    if betti.rank_a() != n {
        return fail(Condition::EqualRanks);
    }
    let sa = stair_sequence(betti.a()).expect("nonempty");
    let sb = stair_sequence(betti.b()).expect("nonempty");
    let slack = usize::from(mode.is_critical());
    // S(b) is non-decreasing, so a row fails iff its first required cell does
    for alpha in 1..=sa.len() {
        let beta = alpha.saturating_sub(slack).max(1);
        if beta <= sb.len() && sa.get(alpha) >= sb.get(beta) {
            return fail(Condition::Ladder { alpha, beta });
        }
    }
    if mode.is_critical() && params.is_cubic() && n >= 2 {
        let s = degree_matrix(betti).expect("nonempty");
        if s.all_equal_to(1) {
            return fail(Condition::CubicExclusion);
        }
    }
    Ok(())
}
