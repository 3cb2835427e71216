//! Character table of the binary icosahedral group.
//!
//! Values are `a + b*phi` with `phi` the golden ratio. Columns are indexed by
//! the natural character value of the class, which is distinct on each of the
//! nine classes; rows are `a1..a9` with dimensions 1, 2, 2, 3, 3, 4, 4, 5, 6.

use crate::exactnum::Cyclotomic;

pub(crate) const DIMENSIONS: [usize; 9] = [1, 2, 2, 3, 3, 4, 4, 5, 6];
pub(crate) const NATURAL_ROW: usize = 1;

/// Natural character value of each column: 2, -2, 0, 1, -1, phi, phi-1, 1-phi, -phi.
pub(crate) const COLUMN_TRACES: [(i64, i64); 9] =
    [(2, 0), (-2, 0), (0, 0), (1, 0), (-1, 0), (0, 1), (-1, 1), (1, -1), (0, -1)];

pub(crate) const TABLE: [[(i64, i64); 9]; 9] = [
    [(1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0), (1, 0)],
    [(2, 0), (-2, 0), (0, 0), (1, 0), (-1, 0), (0, 1), (-1, 1), (1, -1), (0, -1)],
    [(2, 0), (-2, 0), (0, 0), (1, 0), (-1, 0), (1, -1), (0, -1), (0, 1), (-1, 1)],
    [(3, 0), (3, 0), (-1, 0), (0, 0), (0, 0), (1, -1), (0, 1), (0, 1), (1, -1)],
    [(3, 0), (3, 0), (-1, 0), (0, 0), (0, 0), (0, 1), (1, -1), (1, -1), (0, 1)],
    [(4, 0), (4, 0), (0, 0), (1, 0), (1, 0), (-1, 0), (-1, 0), (-1, 0), (-1, 0)],
    [(4, 0), (-4, 0), (0, 0), (-1, 0), (1, 0), (1, 0), (-1, 0), (1, 0), (-1, 0)],
    [(5, 0), (5, 0), (1, 0), (-1, 0), (-1, 0), (0, 0), (0, 0), (0, 0), (0, 0)],
    [(6, 0), (-6, 0), (0, 0), (0, 0), (0, 0), (-1, 0), (1, 0), (-1, 0), (1, 0)],
];

pub(crate) fn golden(value: (i64, i64)) -> Cyclotomic {
    let phi = crate::matgroup::golden_ratio();
    Cyclotomic::from_int(value.0) + phi.scale(&crate::exactnum::int(value.1))
}
