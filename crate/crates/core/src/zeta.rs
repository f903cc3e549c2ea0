//! The zeta and eta maps, each computed four ways: from the core, by sweeping
//! the reading words, from the laser filling, and from interval intersections.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::core_partition::{a_rows, anderson, CorePartition};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::path::{hook_value, DyckPath, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Cores,
    Sweep,
    Lasers,
    Intervals,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Cores, Method::Sweep, Method::Lasers, Method::Intervals];

    pub fn name(self) -> &'static str {
        match self {
            Method::Cores => "cores",
            Method::Sweep => "sweep",
            Method::Lasers => "lasers",
            Method::Intervals => "intervals",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cores" => Ok(Method::Cores),
            "sweep" => Ok(Method::Sweep),
            "laser" | "lasers" => Ok(Method::Lasers),
            "intervals" => Ok(Method::Intervals),
            other => Err(Error::Precondition(format!("unknown method {other:?}"))),
        }
    }
}

fn bounding_path(a: usize, b: usize, lambda: &Partition) -> Result<DyckPath> {
    DyckPath::from_bounded_partition(a, b, lambda)
        .map_err(|e| Error::Internal(format!("image partition {lambda} is not bounded by a Dyck path: {e}")))
}

fn eta_from_mu(a: usize, b: usize, mu: &Partition) -> Result<DyckPath> {
    bounding_path(a, b, &mu.conjugate().padded(a))
}

fn rows_within(core: &CorePartition, row_mod: usize, boundary_mod: usize, len: usize) -> Partition {
    let p = core.parts();
    let counts = a_rows(core, row_mod)
        .into_iter()
        .map(|row| {
            (0..p.part(row))
                .filter(|&j| p.hook(row, j).expect("box exists") < boundary_mod)
                .count()
        })
        .collect();
    Partition::from_unsorted(counts).padded(len)
}

/// `b`-boundary boxes in each `a`-row of the core, `a` parts.
pub fn lambda(p: &DyckPath) -> Partition {
    rows_within(&anderson(p), p.a(), p.b(), p.a())
}

/// `a`-boundary boxes in each `b`-row of the core, `b` parts.
pub fn mu(p: &DyckPath) -> Partition {
    rows_within(&anderson(p), p.b(), p.a(), p.b())
}

pub fn zeta_via_cores(p: &DyckPath) -> Result<DyckPath> {
    bounding_path(p.a(), p.b(), &lambda(p))
}

pub fn eta_via_cores(p: &DyckPath) -> Result<DyckPath> {
    eta_from_mu(p.a(), p.b(), &mu(p))
}

fn sorted_marked(mut entries: Vec<(i64, bool)>) -> Vec<bool> {
    entries.sort_unstable();
    assert!(
        entries.windows(2).all(|w| w[0].0 != w[1].0),
        "levels of a coprime path are distinct"
    );
    entries.into_iter().map(|(_, marked)| marked).collect()
}

/// Sorts `L(P)`, marking entries that start east steps; marked entries read as E.
pub fn zeta_via_sweep(p: &DyckPath) -> Result<DyckPath> {
    let entries = p
        .reading_word()
        .into_iter()
        .zip(p.steps())
        .map(|(l, &s)| (l, s == Step::E))
        .collect();
    let steps = sorted_marked(entries)
        .into_iter()
        .map(|east| if east { Step::E } else { Step::N })
        .collect();
    DyckPath::new(p.a(), p.b(), steps).map_err(|e| Error::Internal(format!("sweep left the cone: {e}")))
}

/// Sorts `M(P)`, marking entries that start west steps of the reversed
/// path, and reads the result as a south-west path from `(b, a)`.
pub fn eta_via_sweep(p: &DyckPath) -> Result<DyckPath> {
    let steps = p.steps();
    let entries = p
        .reverse_reading_word()
        .into_iter()
        .zip(steps.iter().rev())
        .map(|(l, &s)| (l, s == Step::E))
        .collect();
    let mut word: Vec<Step> = sorted_marked(entries)
        .into_iter()
        .map(|west| if west { Step::E } else { Step::N })
        .collect();
    word.reverse();
    DyckPath::new(p.a(), p.b(), word).map_err(|e| Error::Internal(format!("sweep left the cone: {e}")))
}

/// Number of path walls crossed by the line of slope `a/b` through each
/// box's southeast corner, for boxes under the path with positive hook.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaserFilling {
    a: usize,
    b: usize,
    /// `values[row][col]`, bottom row first.
    values: Vec<Vec<usize>>,
}

impl LaserFilling {
    pub fn get(&self, col: usize, row: usize) -> usize {
        self.values[row][col]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.values
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.values.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.b).map(|c| self.values.iter().map(|r| r[c]).sum()).collect()
    }

    pub fn total(&self) -> usize {
        self.values.iter().flatten().sum()
    }

    pub fn lambda(&self) -> Partition {
        Partition::from_unsorted(self.row_sums()).padded(self.a)
    }

    pub fn mu(&self) -> Partition {
        Partition::from_unsorted(self.column_sums()).padded(self.b)
    }
}

pub fn laser_filling(p: &DyckPath) -> LaserFilling {
    let (a, b) = (p.a(), p.b());
    let (ai, bi) = (a as i64, b as i64);
    let walls: Vec<(i64, i64)> = p
        .points()
        .windows(2)
        .zip(p.steps())
        .filter(|(_, &s)| s == Step::N)
        .map(|(w, _)| (w[0].0 as i64, w[0].1 as i64))
        .collect();
    let mut values = vec![vec![0; b]; a];
    for (col, &height) in p.column_heights().iter().enumerate() {
        for (row, line) in values.iter_mut().enumerate().take(height) {
            if hook_value(a, b, col, row) <= 0 {
                continue;
            }
            let (cx, cy) = (col as i64 + 1, row as i64);
            line[col] = walls
                .iter()
                .filter(|&&(x, y)| {
                    // b times the laser's height at abscissa x
                    let h = bi * cy + ai * (x - cx);
                    assert!(h != bi * y && h != bi * (y + 1), "laser meets a lattice point on a wall");
                    bi * y < h && h < bi * (y + 1)
                })
                .count();
        }
    }
    LaserFilling { a, b, values }
}

pub fn zeta_via_lasers(p: &DyckPath) -> Result<DyckPath> {
    bounding_path(p.a(), p.b(), &laser_filling(p).lambda())
}

pub fn eta_via_lasers(p: &DyckPath) -> Result<DyckPath> {
    eta_from_mu(p.a(), p.b(), &laser_filling(p).mu())
}

/// North intervals `[n, n+b]` against east intervals `[e-a, e]`; a box is
/// shaded when its row and column intervals are disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalGrid {
    a: usize,
    b: usize,
    rows: Vec<(i64, i64)>,
    columns: Vec<(i64, i64)>,
    /// `shaded[row][col]`, bottom row first.
    shaded: Vec<Vec<bool>>,
}

impl IntervalGrid {
    pub fn row_intervals(&self) -> &[(i64, i64)] {
        &self.rows
    }

    pub fn column_intervals(&self) -> &[(i64, i64)] {
        &self.columns
    }

    pub fn is_shaded(&self, col: usize, row: usize) -> bool {
        self.shaded[row][col]
    }

    fn shaded_where(&self, positive: bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for row in 0..self.a {
            for col in 0..self.b {
                if self.shaded[row][col] && (hook_value(self.a, self.b, col, row) > 0) == positive {
                    out.push((col, row));
                }
            }
        }
        out
    }

    /// Shaded boxes above the diagonal.
    pub fn upper_region(&self) -> Vec<(usize, usize)> {
        self.shaded_where(true)
    }

    /// Shaded boxes on or below the diagonal.
    pub fn lower_region(&self) -> Vec<(usize, usize)> {
        self.shaded_where(false)
    }
}

pub fn interval_grid(p: &DyckPath) -> IntervalGrid {
    let (a, b) = (p.a(), p.b());
    let (ai, bi) = (a as i64, b as i64);
    let mut rows: Vec<(i64, i64)> = p.north_levels().into_iter().map(|n| (n, n + bi)).collect();
    let mut columns: Vec<(i64, i64)> = p.east_levels().into_iter().map(|e| (e - ai, e)).collect();
    rows.sort_unstable();
    columns.sort_unstable();
    let shaded = rows
        .iter()
        .map(|&(r0, r1)| columns.iter().map(|&(c0, c1)| r1 < c0 || c1 < r0).collect())
        .collect();
    IntervalGrid {
        a,
        b,
        rows,
        columns,
        shaded,
    }
}

/// The bounded partition formed by a set of boxes, if they sit flush in
/// the top-left corner of the grid.
fn corner_partition(a: usize, b: usize, boxes: &[(usize, usize)]) -> Result<Partition> {
    let mut counts = vec![0usize; a];
    for &(_, row) in boxes {
        counts[row] += 1;
    }
    for &(col, row) in boxes {
        if col >= counts[row] {
            return Err(Error::Internal("shaded region is not left-justified".into()));
        }
    }
    counts.reverse();
    let lambda = Partition::new(counts).map_err(|_| Error::Internal("shaded region is not a partition".into()))?;
    if lambda.part(0) > b {
        return Err(Error::Internal("shaded region overflows the grid".into()));
    }
    Ok(lambda)
}

pub fn zeta_via_intervals(p: &DyckPath) -> Result<DyckPath> {
    let grid = interval_grid(p);
    let lambda = corner_partition(p.a(), p.b(), &grid.upper_region())?;
    bounding_path(p.a(), p.b(), &lambda)
}

pub fn eta_via_intervals(p: &DyckPath) -> Result<DyckPath> {
    let (a, b) = (p.a(), p.b());
    let grid = interval_grid(p);
    let rotated: Vec<(usize, usize)> = grid
        .lower_region()
        .into_iter()
        .map(|(c, r)| (b - 1 - c, a - 1 - r))
        .collect();
    let lambda = corner_partition(a, b, &rotated)?;
    bounding_path(a, b, &lambda)
}

pub fn zeta_with(p: &DyckPath, method: Method) -> Result<DyckPath> {
    match method {
        Method::Cores => zeta_via_cores(p),
        Method::Sweep => zeta_via_sweep(p),
        Method::Lasers => zeta_via_lasers(p),
        Method::Intervals => zeta_via_intervals(p),
    }
}

pub fn eta_with(p: &DyckPath, method: Method) -> Result<DyckPath> {
    match method {
        Method::Cores => eta_via_cores(p),
        Method::Sweep => eta_via_sweep(p),
        Method::Lasers => eta_via_lasers(p),
        Method::Intervals => eta_via_intervals(p),
    }
}

pub fn zeta(p: &DyckPath) -> DyckPath {
    zeta_via_cores(p).expect("zeta lands on a Dyck path")
}

pub fn eta(p: &DyckPath) -> DyckPath {
    eta_via_cores(p).expect("eta lands on a Dyck path")
}

fn cross_check(
    map: &'static str,
    p: &DyckPath,
    f: impl Fn(&DyckPath, Method) -> Result<DyckPath>,
) -> Result<DyckPath> {
    let first = f(p, Method::Cores)?;
    for method in &Method::ALL[1..] {
        let other = f(p, *method)?;
        if other != first {
            return Err(Error::MethodDisagreement {
                map,
                first: Method::Cores.name(),
                second: method.name(),
                path: p.to_string(),
                left: first.to_string(),
                right: other.to_string(),
            });
        }
    }
    Ok(first)
}

/// Zeta computed by every method, failing if any two disagree.
pub fn zeta_checked(p: &DyckPath) -> Result<DyckPath> {
    cross_check("zeta", p, zeta_with)
}

pub fn eta_checked(p: &DyckPath) -> Result<DyckPath> {
    cross_check("eta", p, eta_with)
}

/// Skew length as the total of the laser filling.
pub fn skew_length_lasers(p: &DyckPath) -> usize {
    laser_filling(p).total()
}
