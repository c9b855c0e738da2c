//! Plain-text rendering.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use curvebetti_core::tables::{render_resolution, EpsilonBlock};
use curvebetti_core::AlgebraParams;

/// `1 + 2t + 3t^2 + ...` from the coefficients at `t^0, t^1, ...`.
pub fn series_expr(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        match i {
            0 => write!(out, "{c}").unwrap(),
            1 if c.is_one() => out.push('t'),
            1 => write!(out, "{c}t").unwrap(),
            _ if c.is_one() => write!(out, "t^{i}").unwrap(),
            _ => write!(out, "{c}t^{i}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(" + ...");
    out
}

/// `1 3 5 7 ...`.
pub fn series_line(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for c in coeffs {
        write!(out, "{c} ").unwrap();
    }
    out.push_str("...");
    out
}

pub fn table_header(params: &AlgebraParams) -> String {
    format!("{} (r_A = {})", params.kind.name(), params.r)
}

/// One algebra's tables: a header, then one block per epsilon with rows
/// separated by `--`.
pub fn render_tables(params: &AlgebraParams, blocks: &[EpsilonBlock]) -> String {
    let mut out = table_header(params);
    out.push('\n');
    for block in blocks {
        write!(out, "\nepsilon = {}\n", block.epsilon).unwrap();
        for (i, row) in block.rows.iter().enumerate() {
            if i > 0 {
                out.push_str("  --\n");
            }
            writeln!(out, "  s(t) = {}", row.s).unwrap();
            match &row.series {
                Some(c) => writeln!(out, "  h(t) = {}", series_expr(c)).unwrap(),
                None => out.push_str("  h(t) = ∅\n"),
            }
            for r in &row.resolutions {
                writeln!(out, "  {}", render_resolution(r)).unwrap();
            }
        }
    }
    out
}
