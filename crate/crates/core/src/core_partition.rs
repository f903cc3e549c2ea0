//! Simultaneous core partitions and the fillings that connect them to paths.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::path::{check_dims, hook_value, DyckPath};

/// The hook filling of the `a x b` grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookFilling {
    a: usize,
    b: usize,
}

impl HookFilling {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        check_dims(a, b)?;
        Ok(HookFilling { a, b })
    }

    pub fn value(&self, col: usize, row: usize) -> i64 {
        hook_value(self.a, self.b, col, row)
    }

    /// `grid[row][col]`, bottom row first.
    pub fn grid(&self) -> Vec<Vec<i64>> {
        (0..self.a)
            .map(|row| (0..self.b).map(|col| self.value(col, row)).collect())
            .collect()
    }

    /// All positive values, decreasing.
    pub fn positive_values(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.grid().into_iter().flatten().filter(|&h| h > 0).collect();
        v.sort_unstable_by(|x, y| y.cmp(x));
        v
    }
}

pub fn hook_filling(a: usize, b: usize) -> Result<HookFilling> {
    HookFilling::new(a, b)
}

/// Positive hooks of `p`, decreasing.
pub fn positive_hooks(p: &DyckPath) -> Vec<i64> {
    p.positive_hooks()
}

/// A partition with no hook of length `a` or `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CoreRecord", into = "CoreRecord")]
pub struct CorePartition {
    a: usize,
    b: usize,
    parts: Partition,
    leading_hooks: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CoreRecord {
    a: usize,
    b: usize,
    parts: Vec<usize>,
}

impl TryFrom<CoreRecord> for CorePartition {
    type Error = Error;

    fn try_from(rec: CoreRecord) -> Result<Self> {
        CorePartition::new(rec.a, rec.b, Partition::new(rec.parts)?)
    }
}

impl From<CorePartition> for CoreRecord {
    fn from(k: CorePartition) -> Self {
        CoreRecord {
            a: k.a,
            b: k.b,
            parts: k.parts.parts().to_vec(),
        }
    }
}

impl CorePartition {
    pub fn new(a: usize, b: usize, parts: Partition) -> Result<Self> {
        check_dims(a, b)?;
        let parts = parts.trimmed();
        for (i, j) in parts.boxes() {
            let h = parts.hook(i, j).expect("box is in the diagram");
            if h == a || h == b {
                return Err(Error::NotACore { hook: h });
            }
        }
        let leading_hooks = parts.leading_hooks();
        Ok(CorePartition {
            a,
            b,
            parts,
            leading_hooks,
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn parts(&self) -> &Partition {
        &self.parts
    }

    /// First-column hooks, largest first (row order).
    pub fn leading_hooks(&self) -> &[usize] {
        &self.leading_hooks
    }

    /// Number of rows.
    pub fn rank(&self) -> usize {
        self.parts.num_rows()
    }

    pub fn size(&self) -> usize {
        self.parts.size()
    }

    fn boxes_in_row_below(&self, row: usize, bound: usize) -> usize {
        (0..self.parts.part(row))
            .filter(|&j| self.parts.hook(row, j).expect("box exists") < bound)
            .count()
    }
}

/// Anderson's bijection: the core whose leading hooks are the positive hooks of `p`.
pub fn anderson(p: &DyckPath) -> CorePartition {
    let hooks: Vec<usize> = p.positive_hooks().into_iter().map(|h| h as usize).collect();
    let parts = Partition::from_leading_hooks(&hooks).expect("positive hooks are distinct");
    CorePartition::new(p.a(), p.b(), parts).expect("Anderson image is a core")
}

pub fn anderson_inverse(core: &CorePartition) -> Result<DyckPath> {
    let hooks: Vec<i64> = core.leading_hooks.iter().map(|&h| h as i64).collect();
    DyckPath::from_positive_hooks(core.a, core.b, &hooks)
}

/// Row indices of the `m`-rows: for each residue mod `m` among the leading
/// hooks, the row carrying the largest hook of that residue. Ascending.
pub fn a_rows(core: &CorePartition, m: usize) -> Vec<usize> {
    let mut best: BTreeMap<usize, usize> = BTreeMap::new();
    // leading hooks are listed largest first, so the first hit per residue wins
    for (row, &h) in core.leading_hooks.iter().enumerate() {
        best.entry(h % m).or_insert(row);
    }
    let mut rows: Vec<usize> = best.into_values().collect();
    rows.sort_unstable();
    rows
}

/// Number of boxes with hook length less than `m`.
pub fn boundary_boxes(core: &CorePartition, m: usize) -> usize {
    (0..core.rank()).map(|row| core.boxes_in_row_below(row, m)).sum()
}

/// Number of boxes lying in the `m`-rows.
pub fn boxes_in_rows(core: &CorePartition, m: usize) -> usize {
    a_rows(core, m).into_iter().map(|row| core.parts.part(row)).sum()
}

/// Boxes in the `row_mod`-rows that lie in the `boundary_mod`-boundary.
pub fn rows_in_boundary(core: &CorePartition, row_mod: usize, boundary_mod: usize) -> usize {
    a_rows(core, row_mod)
        .into_iter()
        .map(|row| core.boxes_in_row_below(row, boundary_mod))
        .sum()
}

/// Skew length: boxes in the `a`-rows and the `b`-boundary.
pub fn skew_length_core(core: &CorePartition) -> usize {
    rows_in_boundary(core, core.a, core.b)
}

/// Skew length computed with the roles of `a` and `b` exchanged.
pub fn skew_length_core_swapped(core: &CorePartition) -> usize {
    rows_in_boundary(core, core.b, core.a)
}

/// Conjugate core, built from the leading-hook rule
/// `{m - n : n in 0..=m, n not a leading hook}`.
pub fn core_conjugate(core: &CorePartition) -> CorePartition {
    let Some(&m) = core.leading_hooks.first() else {
        return core.clone();
    };
    let hooks: Vec<usize> = (0..=m)
        .filter(|n| !core.leading_hooks.contains(n))
        .map(|n| m - n)
        .filter(|&h| h > 0)
        .collect();
    let parts = Partition::from_leading_hooks(&hooks).expect("conjugate hooks are distinct");
    CorePartition::new(core.a, core.b, parts).expect("conjugate of a core is a core")
}

/// Boxes in the `a`-columns and the `b`-boundary: first-row hooks are
/// grouped by residue mod `a`, and the column of the largest in each class
/// is an `a`-column.
pub fn a_columns_skew(core: &CorePartition) -> usize {
    let p = &core.parts;
    let width = p.part(0);
    let mut best: BTreeMap<usize, usize> = BTreeMap::new();
    for col in 0..width {
        let h = p.hook(0, col).expect("first row box");
        // hooks strictly decrease along the first row
        best.entry(h % core.a).or_insert(col);
    }
    let conj = p.conjugate();
    best.into_values()
        .map(|col| {
            (0..conj.part(col))
                .filter(|&row| p.hook(row, col).expect("box exists") < core.b)
                .count()
        })
        .sum()
}

/// Row lengths of `c(P)` written into the boxes under `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowLengthFilling {
    a: usize,
    b: usize,
    /// `values[row][col]`, bottom row first.
    values: Vec<Vec<usize>>,
    row_offsets: Vec<usize>,
    column_heights: Vec<usize>,
}

impl RowLengthFilling {
    pub fn get(&self, col: usize, row: usize) -> usize {
        self.values[row][col]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.values
    }

    pub fn total(&self) -> usize {
        self.values.iter().flatten().sum()
    }

    /// Sum over the westmost box under the path in each row.
    pub fn westmost_sum(&self) -> usize {
        (0..self.a).map(|row| self.get(self.row_offsets[row], row)).sum()
    }

    /// Sum over the northmost box under the path in each column.
    pub fn northmost_sum(&self) -> usize {
        (0..self.b).map(|col| self.get(col, self.column_heights[col] - 1)).sum()
    }
}

/// `l(h) = h - #{positive hooks < h}` on each positive hook, 0 elsewhere.
pub fn row_length_filling(p: &DyckPath) -> RowLengthFilling {
    let (a, b) = (p.a(), p.b());
    let hooks = p.positive_hooks();
    let heights = p.column_heights();
    let mut values = vec![vec![0usize; b]; a];
    for (col, &height) in heights.iter().enumerate() {
        for (row, line) in values.iter_mut().enumerate().take(height) {
            let h = hook_value(a, b, col, row);
            if h > 0 {
                let smaller = hooks.iter().filter(|&&g| g < h).count() as i64;
                line[col] = (h - smaller) as usize;
            }
        }
    }
    RowLengthFilling {
        a,
        b,
        values,
        row_offsets: p.row_offsets(),
        column_heights: heights,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::enumerate_paths;

    fn running() -> DyckPath {
        DyckPath::parse(5, 8, "NNNENEEENEEEE").unwrap()
    }

    #[test]
    fn hook_filling_corners() {
        let f = hook_filling(5, 8).unwrap();
        assert_eq!(f.value(0, 4), 27);
        assert_eq!(f.value(0, 1), 3);
        assert_eq!(f.value(7, 0), -40);
        let pos = f.positive_values();
        let mut dedup = pos.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), pos.len());
        assert_eq!(pos.len(), 14);
    }

    #[test]
    fn hook_filling_matches_levels() {
        // the box northwest of each interior lattice point carries its level
        for p in enumerate_paths(4, 7).unwrap() {
            let f = hook_filling(4, 7).unwrap();
            for ((x, y), l) in p.points().into_iter().zip(p.levels()) {
                if x >= 1 && y < 4 {
                    assert_eq!(f.value(x - 1, y), l);
                }
            }
        }
    }

    #[test]
    fn anderson_running_example() {
        let k = anderson(&running());
        assert_eq!(k.parts().parts(), &[6, 4, 3, 2, 2, 1, 1, 1, 1]);
        assert_eq!(anderson_inverse(&k).unwrap(), running());
        let empty = anderson(&DyckPath::lowest(5, 8).unwrap());
        assert_eq!(empty.size(), 0);
    }

    #[test]
    fn not_a_core_is_rejected() {
        let err = CorePartition::new(2, 3, Partition::new(vec![2]).unwrap()).unwrap_err();
        assert_eq!(err, Error::NotACore { hook: 2 });
    }

    #[test]
    fn rows_and_boundaries() {
        let k = anderson(&running());
        let hooks = |rows: Vec<usize>| rows.into_iter().map(|r| k.leading_hooks()[r]).collect::<Vec<_>>();
        assert_eq!(hooks(a_rows(&k, 5)), vec![14, 11, 7, 3]);
        assert_eq!(hooks(a_rows(&k, 8)), vec![14, 11, 9, 7, 4, 2]);
        assert_eq!(boundary_boxes(&k, 5), 13);
        assert_eq!(boundary_boxes(&k, 8), 17);
        assert_eq!(boxes_in_rows(&k, 5), 13);
        assert_eq!(boxes_in_rows(&k, 8), 17);
    }

    #[test]
    fn skew_length_both_orders() {
        let k = anderson(&running());
        assert_eq!(skew_length_core(&k), 10);
        assert_eq!(skew_length_core_swapped(&k), 10);
        assert_eq!(a_columns_skew(&k), 10);
        let empty = anderson(&DyckPath::lowest(5, 8).unwrap());
        assert_eq!(skew_length_core(&empty), 0);
        assert_eq!(a_columns_skew(&empty), 0);
    }

    #[test]
    fn olsson_conjugate() {
        let k = anderson(&running());
        let c = core_conjugate(&k);
        assert_eq!(c.leading_hooks(), &[14, 9, 6, 4, 2, 1]);
        assert_eq!(c.parts(), &k.parts().conjugate());
        // staircase (2,1) is a (4,5)-core and self-conjugate
        let stair = CorePartition::new(4, 5, Partition::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(core_conjugate(&stair), stair);
    }

    #[test]
    fn row_length_filling_sums() {
        let f = row_length_filling(&running());
        assert_eq!(f.total(), 21);
        assert_eq!(f.westmost_sum(), 13);
        assert_eq!(f.northmost_sum(), 17);
        let low = row_length_filling(&DyckPath::lowest(5, 8).unwrap());
        assert_eq!(low.total(), 0);
    }

    #[test]
    fn core_json_form() {
        let json = r#"{"a":5,"b":8,"parts":[6,4,3,2,2,1,1,1,1]}"#;
        let k: CorePartition = serde_json::from_str(json).unwrap();
        assert_eq!(k, anderson(&running()));
        assert_eq!(serde_json::to_string(&k).unwrap(), json);
        assert!(serde_json::from_str::<CorePartition>(r#"{"a":2,"b":3,"parts":[2]}"#).is_err());
    }
}
