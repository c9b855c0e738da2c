//! Shipped reference tables for epsilon <= 4 and the byte-exact comparison
//! against freshly rendered ones.
//!
//! Lines starting with `#` in a golden file are annotations and are dropped
//! before comparing.

use curvebetti_core::tables::classification_tables;
use curvebetti_core::{AlgebraKind, AlgebraParams};

use crate::render::render_tables;

pub const GOLDEN_EPS_MAX: u64 = 4;

const QUADRATIC: &str = include_str!("../golden/quadratic.txt");
const CUBIC: &str = include_str!("../golden/cubic.txt");

pub fn raw(kind: AlgebraKind) -> &'static str {
    match kind {
        AlgebraKind::Quadratic => QUADRATIC,
        AlgebraKind::Cubic => CUBIC,
    }
}

/// Golden text without annotations, cut after block `eps_max`.
pub fn expected(kind: AlgebraKind, eps_max: u64) -> String {
    let mut text: String = raw(kind)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .flat_map(|l| [l, "\n"])
        .collect();
    if let Some(cut) = text.find(&format!("\nepsilon = {}\n", eps_max + 1)) {
        text.truncate(cut + 1);
        // the blank line before the cut block belongs to it
        text.pop();
    }
    text
}

/// First differing line, 1-based, with both versions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub line: usize,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

pub fn compare(expected: &str, actual: &str) -> Result<(), Mismatch> {
    if expected == actual {
        return Ok(());
    }
    let mut e = expected.split('\n');
    let mut a = actual.split('\n');
    let mut line = 1;
    loop {
        match (e.next(), a.next()) {
            (Some(x), Some(y)) if x == y => line += 1,
            (x, y) => {
                return Err(Mismatch {
                    line,
                    expected: x.map(str::to_owned),
                    actual: y.map(str::to_owned),
                })
            }
        }
    }
}

/// Renders the tables for `kind` up to `eps_max` and compares them with the
/// golden file. `eps_max` must not exceed [`GOLDEN_EPS_MAX`].
pub fn check(kind: AlgebraKind, eps_max: u64) -> Result<(), Mismatch> {
    assert!(eps_max <= GOLDEN_EPS_MAX);
    let params = AlgebraParams::new(kind);
    let actual = render_tables(&params, &classification_tables(&params, eps_max));
    compare(&expected(kind, eps_max), &actual)
}
