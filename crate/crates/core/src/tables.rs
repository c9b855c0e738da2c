//! Tables of Hilbert series and minimal resolutions of critical normalized
//! modules, one block per normalized multiplicity.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;

use crate::algebra::AlgebraParams;
use crate::betti::BettiPair;
use crate::conditions::Mode;
use crate::hilbert::{enumerate_s, s_to_hilbert, HilbertClass, SPoly};
use crate::resolutions::ResolutionFamily;

/// Coefficients shown per series.
pub const SHOWN_TERMS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub s: SPoly,
    /// First coefficients of the Hilbert series; `None` when no critical
    /// module has this `s` (the cubic `s = 0` rows with `epsilon > 1`).
    pub series: Option<Vec<BigInt>>,
    pub resolutions: Vec<BettiPair>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonBlock {
    pub params: AlgebraParams,
    pub epsilon: u64,
    pub rows: Vec<TableRow>,
}

/// One block per `epsilon <= eps_max`. Rows follow the quadratic list of
/// critical `s`, so the cubic tables keep an empty `s = 0` row.
pub fn classification_tables(params: &AlgebraParams, eps_max: u64) -> Vec<EpsilonBlock> {
    (1..=eps_max)
        .map(|epsilon| EpsilonBlock {
            params: *params,
            epsilon,
            rows: table_rows(params, epsilon),
        })
        .collect()
}

fn table_rows(params: &AlgebraParams, epsilon: u64) -> Vec<TableRow> {
    let all = enumerate_s(
        &AlgebraParams::QUADRATIC,
        epsilon,
        Mode::Critical,
        epsilon as usize,
    );
    all.into_iter()
        .map(
            |s| match HilbertClass::new(*params, epsilon, s.clone(), Mode::Critical) {
                Ok(hc) => TableRow {
                    series: Some(
                        s_to_hilbert(&hc, SHOWN_TERMS)
                            .coeffs_from(0, SHOWN_TERMS)
                            .expect("known"),
                    ),
                    resolutions: ResolutionFamily::new(&hc).iter().collect(),
                    s,
                },
                Err(_) => TableRow {
                    s,
                    series: None,
                    resolutions: Vec::new(),
                },
            },
        )
        .collect()
}

fn free_module(out: &mut String, terms: &alloc::collections::BTreeMap<i64, u64>) {
    for (k, (&d, &c)) in terms.iter().enumerate() {
        if k > 0 {
            out.push_str(" ⊕ ");
        }
        if d == 0 {
            out.push('A');
        } else {
            let _ = write!(out, "A({})", -d);
        }
        if c > 1 {
            let _ = write!(out, "^{c}");
        }
    }
}

/// `0 → A(-1) ⊕ A(-2)^2 → A^2 ⊕ A(-1) → M → 0`.
pub fn render_resolution(betti: &BettiPair) -> String {
    let mut out = String::from("0 → ");
    free_module(&mut out, betti.b());
    out.push_str(" → ");
    free_module(&mut out, betti.a());
    out.push_str(" → M → 0");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &Option<Vec<BigInt>>) -> Vec<i64> {
        v.as_ref()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn quadratic_epsilon_two() {
        let t = classification_tables(&AlgebraParams::QUADRATIC, 2);
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].rows.len(), 1);
        let rows = &t[1].rows;
        assert_eq!(rows.len(), 2);
        assert_eq!(ints(&rows[0].series), [2, 4, 6, 8, 10, 12]);
        assert_eq!(
            render_resolution(&rows[0].resolutions[0]),
            "0 → A(-1)^2 → A^2 → M → 0"
        );
        assert_eq!(ints(&rows[1].series), [1, 3, 5, 7, 9, 11]);
        assert_eq!(
            render_resolution(&rows[1].resolutions[0]),
            "0 → A(-2) → A → M → 0"
        );
    }

    #[test]
    fn cubic_epsilon_two() {
        let t = classification_tables(&AlgebraParams::CUBIC, 2);
        let rows = &t[1].rows;
        assert!(rows[0].s.is_zero());
        assert_eq!(rows[0].series, None);
        assert!(rows[0].resolutions.is_empty());
        assert_eq!(ints(&rows[1].series), [1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn epsilon_one_single_row() {
        for p in [AlgebraParams::QUADRATIC, AlgebraParams::CUBIC] {
            let t = classification_tables(&p, 1);
            assert_eq!(t[0].rows.len(), 1);
            assert!(t[0].rows[0].s.is_zero());
            assert_eq!(
                render_resolution(&t[0].rows[0].resolutions[0]),
                "0 → A(-1) → A → M → 0"
            );
        }
    }

    #[test]
    fn mixed_resolution_rendering() {
        let p = BettiPair::from_pairs([(0, 2), (1, 1)], [(1, 1), (2, 2)]);
        assert_eq!(
            render_resolution(&p),
            "0 → A(-1) ⊕ A(-2)^2 → A^2 ⊕ A(-1) → M → 0"
        );
    }
}
