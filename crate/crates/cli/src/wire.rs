//! JSON wire formats.
//!
//! Indices on the wire are plain degrees; nothing here is 1-based. Shape
//! grids are emitted row-major with `0` for a structural zero and the degree
//! of the entry otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use curvebetti_core::divisor::{FormalDivisor, PointModel};
use curvebetti_core::shape::{Cell, ShapeGrid};
use curvebetti_core::tables::{EpsilonBlock, TableRow};
use curvebetti_core::{BettiPair, IntSeries, SPoly};

use crate::error::CliError;

/// Coefficients as JSON numbers when they fit in an `i64`, strings otherwise.
pub fn bigint_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesJson {
    pub offset: i64,
    pub coeffs: Vec<Value>,
    pub trunc_order: i64,
}

impl From<&IntSeries> for SeriesJson {
    fn from(s: &IntSeries) -> Self {
        SeriesJson {
            offset: s.offset(),
            coeffs: s.known().iter().map(bigint_value).collect(),
            trunc_order: s.trunc_order(),
        }
    }
}

/// Betti numbers as read from the wire. Counts are signed so that negative
/// input can be reported as a failed condition rather than a parse error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiJson {
    pub a: Vec<(i64, i64)>,
    pub b: Vec<(i64, i64)>,
}

impl BettiJson {
    pub fn has_negative(&self) -> bool {
        self.a.iter().chain(&self.b).any(|&(_, c)| c < 0)
    }

    /// Sums repeated degrees; fails on negative totals.
    pub fn to_pair(&self) -> Result<BettiPair, CliError> {
        fn collect(v: &[(i64, i64)]) -> Result<BTreeMap<i64, u64>, CliError> {
            let mut m: BTreeMap<i64, i64> = BTreeMap::new();
            for &(d, c) in v {
                *m.entry(d).or_default() += c;
            }
            m.into_iter()
                .map(|(d, c)| {
                    u64::try_from(c)
                        .map(|c| (d, c))
                        .map_err(|_| CliError::Parse(format!("negative count {c} in degree {d}")))
                })
                .collect()
        }
        let a = collect(&self.a)?;
        let b = collect(&self.b)?;
        Ok(BettiPair::from_pairs(a, b))
    }
}

impl From<&BettiPair> for BettiJson {
    fn from(p: &BettiPair) -> Self {
        let conv = |m: &BTreeMap<i64, u64>| m.iter().map(|(&d, &c)| (d, c as i64)).collect();
        BettiJson {
            a: conv(p.a()),
            b: conv(p.b()),
        }
    }
}

pub fn parse_betti(text: &str) -> Result<BettiJson, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("betti JSON: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeJson {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<i64>>,
}

impl From<&ShapeGrid> for ShapeJson {
    fn from(g: &ShapeGrid) -> Self {
        let cells = (1..=g.rows())
            .map(|a| {
                g.row(a)
                    .iter()
                    .map(|c| match *c {
                        Cell::Zero => 0,
                        Cell::Entry(d) => d,
                    })
                    .collect()
            })
            .collect();
        ShapeJson {
            rows: g.rows(),
            cols: g.cols(),
            cells,
        }
    }
}

/// `[[x, y, mult], ...]`, sorted by point.
pub fn divisor_to_json(d: &FormalDivisor) -> Vec<[i64; 3]> {
    d.iter().map(|(p, m)| [p.x, p.y, m]).collect()
}

pub fn parse_divisor(text: &str) -> Result<FormalDivisor, CliError> {
    let v: Vec<[i64; 3]> =
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("divisor JSON: {e}")))?;
    Ok(FormalDivisor::from_points(
        v.into_iter().map(|[x, y, m]| (PointModel::new(x, y), m)),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowJson {
    pub s: Vec<u64>,
    /// Empty when no module has this `s`.
    pub series: Vec<Value>,
    pub resolutions: Vec<BettiJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportJson {
    pub kind: &'static str,
    pub epsilon: u64,
    pub rows: Vec<RowJson>,
}

impl From<&TableRow> for RowJson {
    fn from(r: &TableRow) -> Self {
        RowJson {
            s: r.s.coeffs().to_vec(),
            series: r.series.iter().flatten().map(bigint_value).collect(),
            resolutions: r.resolutions.iter().map(BettiJson::from).collect(),
        }
    }
}

impl From<&EpsilonBlock> for ReportJson {
    fn from(b: &EpsilonBlock) -> Self {
        ReportJson {
            kind: b.params.kind.name(),
            epsilon: b.epsilon,
            rows: b.rows.iter().map(RowJson::from).collect(),
        }
    }
}

/// `"3,2,1"` (or `"0"`, or the empty string) to `s(t)`.
pub fn parse_s(text: &str) -> Result<SPoly, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SPoly::zero());
    }
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<u64>()
                .map_err(|e| CliError::Parse(format!("s coefficient {c:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(SPoly::new)
}
