//! Nonzero patterns of generic presentation matrices.

use alloc::vec::Vec;

use crate::algebra::AlgebraParams;
use crate::betti::BettiPair;
use crate::conditions::{check_cm, check_critical, CheckForm};
use crate::error::{Error, Result};
use crate::stair::degree_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeMode {
    /// Generic matrix of a Cohen-Macaulay module.
    CohenMacaulay,
    /// Generic matrix of a critical module.
    Critical,
    /// First row, subdiagonal and last column only; the matrix `[H | d]`
    /// used to realize critical Betti numbers.
    Bordered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    /// A nonzero homogeneous form of the given degree.
    Entry(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeGrid {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl ShapeGrid {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Cell at 1-based `(alpha, beta)`.
    pub fn at(&self, alpha: usize, beta: usize) -> Cell {
        self.cells[(alpha - 1) * self.cols + (beta - 1)]
    }

    pub fn row(&self, alpha: usize) -> &[Cell] {
        let start = (alpha - 1) * self.cols;
        &self.cells[start..start + self.cols]
    }

    pub fn nonzero_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.rows)
            .flat_map(move |a| (1..=self.cols).map(move |b| (a, b)))
            .filter(|&(a, b)| self.at(a, b) != Cell::Zero)
    }
}

/// Pattern of a generic map `sum A(-i)^{b_i} -> sum A(-i)^{a_i}`.
///
/// In the Cohen-Macaulay and critical modes the generic matrix has a nonzero
/// form exactly where its degree `S(b)_beta - S(a)_alpha` is positive, i.e. on
/// the ladder. The checker guarantees that this contains the upper triangle
/// (resp. the upper triangle and the subdiagonal). The bordered mode needs
/// critical data with a square degree matrix.
pub fn generic_shape(
    params: &AlgebraParams,
    betti: &BettiPair,
    mode: ShapeMode,
) -> Result<ShapeGrid> {
    let ok = match mode {
        ShapeMode::CohenMacaulay => check_cm(params, betti, CheckForm::Ladder),
        ShapeMode::Critical | ShapeMode::Bordered => {
            check_critical(params, betti, CheckForm::Ladder)
        }
    };
    if !ok {
        return Err(Error::ShapeUnavailable(match mode {
            ShapeMode::CohenMacaulay => "Cohen-Macaulay",
            _ => "critical",
        }));
    }
    let s = degree_matrix(betti)?;
    let (rows, cols) = (s.rows(), s.cols());
    if mode == ShapeMode::Bordered && rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    let mut cells = Vec::with_capacity(rows * cols);
    for alpha in 1..=rows {
        for beta in 1..=cols {
            let d = s.at(alpha, beta);
            let nonzero = match mode {
                ShapeMode::CohenMacaulay | ShapeMode::Critical => d > 0,
                ShapeMode::Bordered => alpha == 1 || alpha == beta + 1 || beta == cols,
            };
            cells.push(if nonzero { Cell::Entry(d) } else { Cell::Zero });
        }
    }
    let grid = ShapeGrid { rows, cols, cells };
    debug_assert!(grid
        .nonzero_cells()
        .all(|(a, b)| matches!(grid.at(a, b), Cell::Entry(d) if d >= 1)));
    Ok(grid)
}
