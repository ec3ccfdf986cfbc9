//! Young diagrams of proper numerical sets.
//!
//! Walking `s = 0, 1, ..., F(S)` and stepping right for `s ∈ S`, up for a gap,
//! traces the lower-right boundary of a Young diagram with `g(S)` rows and
//! `n = |small elements|` columns. The row of the gap `a` has one box per
//! small element below `a`. Rows are stored top to bottom, so the top row
//! belongs to `F(S)`; boxes are addressed `(row, column)` from the top-left.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::numset::{GapSet, NumericalSet};

/// A partition, stored as weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::MalformedInput(
                "a Young diagram needs at least one row".into(),
            ));
        }
        if rows.contains(&0) {
            return Err(Error::MalformedInput("row lengths must be positive".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedInput(format!(
                "row lengths must be weakly decreasing: {rows:?}"
            )));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.rows[0] as usize
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(|&r| r as usize).sum()
    }

    pub fn column_length(&self, column: usize) -> usize {
        self.rows
            .iter()
            .take_while(|&&r| r as usize > column)
            .count()
    }

    pub fn contains_box(&self, row: usize, column: usize) -> bool {
        self.rows.get(row).is_some_and(|&r| (r as usize) > column)
    }

    /// Boxes to the right, boxes below, and the box itself.
    pub fn hook_length(&self, row: usize, column: usize) -> Option<u32> {
        if !self.contains_box(row, column) {
            return None;
        }
        let arm = self.rows[row] as usize - column - 1;
        let leg = self.column_length(column) - row - 1;
        Some((arm + leg + 1) as u32)
    }

    /// Coordinates of the boxes forming the hook of `(row, column)`.
    pub fn hook_boxes(&self, row: usize, column: usize) -> Result<Vec<(usize, usize)>> {
        if !self.contains_box(row, column) {
            return Err(Error::InvalidHighlight(row, column));
        }
        let right = (column..self.rows[row] as usize).map(|c| (row, c));
        let below = (row + 1..self.column_length(column)).map(|r| (r, column));
        Ok(right.chain(below).collect())
    }

    /// Conjugate partition.
    pub fn transpose(&self) -> YoungDiagram {
        let rows = (0..self.num_columns())
            .map(|c| self.column_length(c) as u32)
            .collect();
        YoungDiagram { rows }
    }

    /// Row lengths increased by `offset`; used by the glueing sums.
    pub(crate) fn shifted_rows(&self, offset: u32) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(move |&r| r + offset)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u32>) -> YoungDiagram {
        debug_assert!(YoungDiagram::new(rows.clone()).is_ok(), "{rows:?}");
        YoungDiagram { rows }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Hook lengths of every box of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookGrid {
    hooks: Vec<Vec<u32>>,
}

impl HookGrid {
    pub fn get(&self, row: usize, column: usize) -> Option<u32> {
        self.hooks.get(row)?.get(column).copied()
    }

    /// Hook lengths row by row, top to bottom.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.hooks
    }

    /// Hook lengths of one column, top to bottom.
    pub fn column(&self, column: usize) -> Vec<u32> {
        self.hooks
            .iter()
            .take_while(|row| row.len() > column)
            .map(|row| row[column])
            .collect()
    }
}

pub fn hook_grid(diagram: &YoungDiagram) -> HookGrid {
    let columns: Vec<usize> = (0..diagram.num_columns())
        .map(|c| diagram.column_length(c))
        .collect();
    let hooks = diagram
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len as usize)
                .map(|j| ((len as usize - j) + (columns[j] - i) - 1) as u32)
                .collect()
        })
        .collect();
    HookGrid { hooks }
}

/// Row `i` (from the top) belongs to the `i`-th largest gap and has one box
/// per small element below that gap.
pub fn diagram_of(set: &NumericalSet) -> YoungDiagram {
    let small = set.small_elements();
    let rows = set
        .gaps()
        .as_slice()
        .iter()
        .rev()
        .map(|&a| small.partition_point(|&s| s < a) as u32)
        .collect();
    YoungDiagram::from_rows_unchecked(rows)
}

/// The gaps are the first-column hook lengths.
pub fn numerical_set_of(diagram: &YoungDiagram) -> NumericalSet {
    let k = diagram.num_rows();
    let gaps: Vec<u32> = diagram
        .rows()
        .iter()
        .enumerate()
        .rev()
        .map(|(i, &len)| len + (k - i) as u32 - 1)
        .collect();
    NumericalSet::from_gaps(
        &GapSet::new(gaps).expect("first-column hooks strictly increase upwards"),
    )
}

/// Hook lengths of column `i`, the column attached to the small element `s_i`.
pub fn column_hook_set(set: &NumericalSet, i: usize) -> Result<BTreeSet<u32>> {
    let n = set.small_elements().len();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    Ok(hook_grid(&diagram_of(set)).column(i).into_iter().collect())
}

/// Semigroup test through hook lengths: `S` is closed under addition iff
/// every column hook set is contained in the first one (the gaps).
pub fn is_semigroup_via_hooks(set: &NumericalSet) -> bool {
    let gaps = set.gaps();
    let grid = hook_grid(&diagram_of(set));
    grid.rows().iter().flatten().all(|&h| gaps.contains(h))
}
