use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A standard filling of the three-part skew diagram with parameters
/// `(a, i, b)`: an upper stem of `b - 2` cells in the last column, two full
/// rows of length `i + 1`, and a lower stem of `a - 2` cells in the first
/// column. The number of cells is `a + b + 2i - 2` and the entries are a
/// bijection onto `1..=N`, increasing along rows and down columns.
///
/// Rows and columns are 1-indexed. `a, b >= 2` always; `i = 0` degenerates
/// to a single column with exactly one filling and is accepted everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    a: usize,
    i: usize,
    b: usize,
    /// Full `(a + b - 2) x (i + 1)` grid; cells outside the diagram are None.
    grid: Vec<Vec<Option<usize>>>,
}

/// The diagram cells for parameters `(a, i, b)`, 1-indexed, in row-major
/// order: upper stem, the two full rows, then the lower stem.
pub(crate) fn shape_cells(a: usize, i: usize, b: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(a + b + 2 * i - 2);
    for r in 1..=b.saturating_sub(2) {
        cells.push((r, i + 1));
    }
    for r in [b - 1, b] {
        for c in 1..=i + 1 {
            cells.push((r, c));
        }
    }
    for r in b + 1..=a + b - 2 {
        cells.push((r, 1));
    }
    cells
}

impl SkewTableau {
    /// Validates an entry assignment on exactly the diagram cells.
    pub fn new(
        a: usize,
        i: usize,
        b: usize,
        entries: &BTreeMap<(usize, usize), usize>,
    ) -> Result<Self> {
        if a < 2 || b < 2 {
            return Err(Error::ShapeMismatch(format!(
                "parameters require a >= 2 and b >= 2, got (a={a}, i={i}, b={b})"
            )));
        }
        let cells = shape_cells(a, i, b);
        let n = cells.len();
        debug_assert_eq!(n, a + b + 2 * i - 2);

        for cell in entries.keys() {
            if !cells.contains(cell) {
                return Err(Error::ShapeMismatch(format!(
                    "cell ({}, {}) is outside the (a={a}, i={i}, b={b}) diagram",
                    cell.0, cell.1
                )));
            }
        }
        for cell in &cells {
            if !entries.contains_key(cell) {
                return Err(Error::ShapeMismatch(format!(
                    "cell ({}, {}) of the (a={a}, i={i}, b={b}) diagram has no entry",
                    cell.0, cell.1
                )));
            }
        }

        let mut seen = vec![false; n + 1];
        for (&(r, c), &v) in entries {
            if v < 1 || v > n {
                return Err(Error::NotBijective {
                    n,
                    reason: format!("value {v} at ({r}, {c}) is out of range"),
                });
            }
            if seen[v] {
                return Err(Error::NotBijective {
                    n,
                    reason: format!("value {v} appears twice"),
                });
            }
            seen[v] = true;
        }

        let rows = a + b - 2;
        let cols = i + 1;
        let mut grid = vec![vec![None; cols]; rows];
        for (&(r, c), &v) in entries {
            grid[r - 1][c - 1] = Some(v);
        }

        let t = SkewTableau { a, i, b, grid };
        t.check_order()?;
        Ok(t)
    }

    /// Builds from a full grid, rows top to bottom, `None` off the diagram.
    pub fn from_rows(a: usize, i: usize, b: usize, rows: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    entries.insert((r + 1, c + 1), *v);
                }
            }
        }
        SkewTableau::new(a, i, b, &entries)
    }

    /// Builds from the values listed in row-major diagram order.
    pub fn from_row_major(a: usize, i: usize, b: usize, values: &[usize]) -> Result<Self> {
        let cells = shape_cells(a, i, b);
        if cells.len() != values.len() {
            return Err(Error::ShapeMismatch(format!(
                "(a={a}, i={i}, b={b}) has {} cells, got {} values",
                cells.len(),
                values.len()
            )));
        }
        let entries: BTreeMap<(usize, usize), usize> =
            cells.into_iter().zip(values.iter().copied()).collect();
        SkewTableau::new(a, i, b, &entries)
    }

    fn check_order(&self) -> Result<()> {
        for (r, row) in self.grid.iter().enumerate() {
            let mut prev: Option<(usize, usize)> = None; // (col, value)
            for (c, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    if let Some((_, pv)) = prev {
                        if *v <= pv {
                            return Err(Error::RowOrder {
                                row: r + 1,
                                col: c + 1,
                            });
                        }
                    }
                    prev = Some((c, *v));
                }
            }
        }
        for c in 0..self.i + 1 {
            let mut prev: Option<usize> = None;
            for (r, row) in self.grid.iter().enumerate() {
                if let Some(v) = row[c] {
                    if let Some(pv) = prev {
                        if v <= pv {
                            return Err(Error::ColOrder {
                                row: r + 1,
                                col: c + 1,
                            });
                        }
                    }
                    prev = Some(v);
                }
            }
        }
        Ok(())
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Total number of cells, `a + b + 2i - 2`.
    pub fn cell_count(&self) -> usize {
        self.a + self.b + 2 * self.i - 2
    }

    /// Entry at 1-indexed `(row, col)`, if the cell is on the diagram.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.grid
            .get(row - 1)
            .and_then(|r| r.get(col - 1))
            .copied()
            .flatten()
    }

    /// The full grid, including off-diagram cells as `None`.
    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.grid
    }

    /// Entries read in row-major diagram order.
    pub fn row_major_values(&self) -> Vec<usize> {
        shape_cells(self.a, self.i, self.b)
            .into_iter()
            .map(|(r, c)| self.entry(r, c).expect("diagram cell is filled"))
            .collect()
    }

    /// Entries of the upper stem, top to bottom (`b - 2` values).
    pub fn upper_stem(&self) -> Vec<usize> {
        (1..=self.b.saturating_sub(2))
            .map(|r| self.entry(r, self.i + 1).expect("upper stem cell"))
            .collect()
    }

    /// Entries of the lower stem, top to bottom (`a - 2` values).
    pub fn lower_stem(&self) -> Vec<usize> {
        (self.b + 1..=self.a + self.b - 2)
            .map(|r| self.entry(r, 1).expect("lower stem cell"))
            .collect()
    }
}

impl fmt::Display for SkewTableau {
    /// The compact text form: a `skyt a i b` header, then the grid rows with
    /// `.` marking cells off the diagram.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "skyt {} {} {}", self.a, self.i, self.b)?;
        for row in &self.grid {
            f.write_str("\n")?;
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                match v {
                    Some(v) => write!(f, "{v}")?,
                    None => write!(f, ".")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_has_the_advertised_cell_count() {
        for a in 2..=7 {
            for b in 2..=7 {
                for i in 0..=4 {
                    assert_eq!(shape_cells(a, i, b).len(), a + b + 2 * i - 2);
                }
            }
        }
    }

    #[test]
    fn validates_the_worked_seven_two_six_tableau() {
        // Column 1 at rows 5..=11, column 2 at rows 5..=6, column 3 at rows 1..=6.
        let mut entries = BTreeMap::new();
        for (r, v) in (5..=11).zip([2, 3, 6, 8, 9, 14, 15]) {
            entries.insert((r, 1), v);
        }
        for (r, v) in (5..=6).zip([7, 11]) {
            entries.insert((r, 2), v);
        }
        for (r, v) in (1..=6).zip([1, 4, 5, 10, 12, 13]) {
            entries.insert((r, 3), v);
        }
        let t = SkewTableau::new(7, 2, 6, &entries).unwrap();
        assert_eq!(t.cell_count(), 15);
        assert_eq!(t.upper_stem(), vec![1, 4, 5, 10]);
        assert_eq!(t.lower_stem(), vec![6, 8, 9, 14, 15]);
        assert_eq!(t.entry(5, 2), Some(7));
    }

    #[test]
    fn smallest_square_tableau_is_valid() {
        let t = SkewTableau::from_rows(
            2,
            1,
            2,
            vec![vec![Some(1), Some(2)], vec![Some(3), Some(4)]],
        )
        .unwrap();
        assert_eq!(t.cell_count(), 4);
    }

    #[test]
    fn row_order_violation_reports_the_offending_cell() {
        let err = SkewTableau::from_rows(
            2,
            1,
            2,
            vec![vec![Some(1), Some(3)], vec![Some(4), Some(2)]],
        )
        .unwrap_err();
        assert_eq!(err, Error::RowOrder { row: 2, col: 2 });
    }

    #[test]
    fn column_order_violation_reports_the_offending_cell() {
        let err = SkewTableau::from_rows(
            2,
            1,
            2,
            vec![vec![Some(1), Some(4)], vec![Some(2), Some(3)]],
        )
        .unwrap_err();
        assert_eq!(err, Error::ColOrder { row: 2, col: 2 });
    }

    #[test]
    fn missing_and_extra_cells_are_shape_mismatches() {
        let mut entries = BTreeMap::new();
        entries.insert((1, 1), 1);
        assert!(matches!(
            SkewTableau::new(2, 1, 2, &entries).unwrap_err(),
            Error::ShapeMismatch(_)
        ));
        let mut entries = BTreeMap::new();
        for ((r, c), v) in shape_cells(2, 1, 2).into_iter().zip(1..) {
            entries.insert((r, c), v);
        }
        entries.insert((3, 2), 5);
        assert!(matches!(
            SkewTableau::new(2, 1, 2, &entries).unwrap_err(),
            Error::ShapeMismatch(_)
        ));
    }

    #[test]
    fn duplicate_values_are_not_bijective() {
        let err = SkewTableau::from_rows(
            2,
            1,
            2,
            vec![vec![Some(1), Some(2)], vec![Some(2), Some(4)]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotBijective { n: 4, .. }));
    }

    #[test]
    fn single_column_extension_has_forced_filling() {
        let t = SkewTableau::from_rows(2, 0, 2, vec![vec![Some(1)], vec![Some(2)]]).unwrap();
        assert_eq!(t.cell_count(), 2);
        assert!(SkewTableau::from_rows(2, 0, 2, vec![vec![Some(2)], vec![Some(1)]]).is_err());
    }

    #[test]
    fn display_matches_the_compact_layout() {
        let t = SkewTableau::from_rows(
            3,
            1,
            2,
            vec![
                vec![Some(1), Some(3)],
                vec![Some(2), Some(4)],
                vec![Some(5), None],
            ],
        )
        .unwrap();
        assert_eq!(t.to_string(), "skyt 3 1 2\n1 3\n2 4\n5 .");
    }
}
