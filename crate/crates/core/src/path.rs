//! The `DyckPath` type and its structural operations.
//!
//! A path lives in the `a x b` grid (height `a`, width `b`) and is stored as
//! its step word. Lattice point `(x, y)` has level `y*b - x*a`; the path is a
//! Dyck path when every visited point has non-negative level.
//!
//! Boxes are indexed by `(col, row)` with lower-left lattice point
//! `(col, row)`. The hook filling of a box is the level of its lower-right
//! corner, `row*b - (col+1)*a`, so a box lies above the diagonal exactly
//! when its hook is positive.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }

    fn swapped(self) -> Step {
        match self {
            Step::N => Step::E,
            Step::E => Step::N,
        }
    }
}

/// Parses a step word over `{N, E}`.
pub fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .enumerate()
        .map(|(offset, c)| match c {
            'N' => Ok(Step::N),
            'E' => Ok(Step::E),
            found => Err(Error::InvalidStep { offset, found }),
        })
        .collect()
}

pub(crate) fn check_dims(a: usize, b: usize) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::ZeroDimension { a, b });
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    Ok(())
}

/// Hook filling value of box `(col, row)` in the `a x b` grid.
pub fn hook_value(a: usize, b: usize, col: usize, row: usize) -> i64 {
    row as i64 * b as i64 - (col as i64 + 1) * a as i64
}

/// The lattice point `(x, y)` of the grid at the given level, if any.
pub fn point_at_level(a: usize, b: usize, level: i64) -> Option<(usize, usize)> {
    (0..=b).find_map(|x| {
        let num = level + (x * a) as i64;
        if num >= 0 && num % b as i64 == 0 {
            let y = (num / b as i64) as usize;
            (y <= a).then_some((x, y))
        } else {
            None
        }
    })
}

/// An `(a,b)`-Dyck path: `a` north steps and `b` east steps from `(0,0)` to
/// `(b,a)` staying weakly above the diagonal, with `gcd(a,b) = 1`.
///
/// Ordering is by `(a, b)` and then lexicographically on the step word with
/// `N < E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    a: usize,
    b: usize,
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(a: usize, b: usize, steps: Vec<Step>) -> Result<Self> {
        check_dims(a, b)?;
        let north = steps.iter().filter(|&&s| s == Step::N).count();
        let east = steps.len() - north;
        if north != a || east != b {
            return Err(Error::WrongStepCounts {
                expected_north: a,
                expected_east: b,
                north,
                east,
            });
        }
        let (mut x, mut y) = (0usize, 0usize);
        for &s in &steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            if a * x > b * y {
                return Err(Error::BelowDiagonal { x, y });
            }
        }
        Ok(DyckPath { a, b, steps })
    }

    pub fn parse(a: usize, b: usize, word: &str) -> Result<Self> {
        DyckPath::new(a, b, parse_steps(word)?)
    }

    /// `N^a E^b`, the path bounding no boxes.
    pub fn full(a: usize, b: usize) -> Result<Self> {
        let mut steps = vec![Step::N; a];
        steps.extend(std::iter::repeat_n(Step::E, b));
        DyckPath::new(a, b, steps)
    }

    /// The path closest to the diagonal (area zero).
    pub fn lowest(a: usize, b: usize) -> Result<Self> {
        check_dims(a, b)?;
        let mut steps = Vec::with_capacity(a + b);
        let (mut x, mut y) = (0usize, 0usize);
        while x < b || y < a {
            if x < b && a * (x + 1) <= b * y {
                steps.push(Step::E);
                x += 1;
            } else {
                steps.push(Step::N);
                y += 1;
            }
        }
        DyckPath::new(a, b, steps)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of boxes strictly above the diagonal in the grid.
    pub fn max_area(&self) -> usize {
        (self.a - 1) * (self.b - 1) / 2
    }

    /// The `a + b + 1` lattice points in path order.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for &s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    pub fn visits(&self, x: usize, y: usize) -> bool {
        self.points().contains(&(x, y))
    }

    /// Levels of all lattice points in path order; first and last are 0.
    pub fn levels(&self) -> Vec<i64> {
        self.points()
            .into_iter()
            .map(|(x, y)| y as i64 * self.b as i64 - x as i64 * self.a as i64)
            .collect()
    }

    /// `L(P)`: levels read southwest to northeast, final 0 excluded.
    pub fn reading_word(&self) -> Vec<i64> {
        let mut l = self.levels();
        l.pop();
        l
    }

    /// `M(P)`: levels read northeast to southwest, final 0 excluded.
    pub fn reverse_reading_word(&self) -> Vec<i64> {
        let mut l = self.levels();
        l.reverse();
        l.pop();
        l
    }

    /// North levels (levels of points starting north steps), decreasing.
    pub fn north_levels(&self) -> Vec<i64> {
        self.levels_starting(Step::N)
    }

    /// East levels (levels of points starting east steps), decreasing.
    pub fn east_levels(&self) -> Vec<i64> {
        self.levels_starting(Step::E)
    }

    fn levels_starting(&self, kind: Step) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .reading_word()
            .into_iter()
            .zip(&self.steps)
            .filter(|(_, &s)| s == kind)
            .map(|(l, _)| l)
            .collect();
        out.sort_unstable_by(|x, y| y.cmp(x));
        out
    }

    /// Reading permutation: standardization of `L(P)`.
    pub fn sigma(&self) -> Permutation {
        Permutation::standardize(&self.reading_word()).expect("levels of a coprime path are distinct")
    }

    /// Reverse reading permutation: standardization of `M(P)`.
    pub fn tau(&self) -> Permutation {
        Permutation::standardize(&self.reverse_reading_word())
            .expect("levels of a coprime path are distinct")
    }

    /// The cycle whose notation starting at 1 lists `sigma` in one-line order.
    pub fn gamma(&self) -> Permutation {
        Permutation::from_cycle(self.sigma().one_line()).expect("sigma is a permutation")
    }

    /// Recovers a path from its reading permutation: east steps sit at the
    /// right cyclic descents.
    pub fn from_permutation(s: &Permutation, a: usize, b: usize) -> Result<Self> {
        if s.len() != a + b {
            return Err(Error::SizeMismatch {
                expected: a + b,
                found: s.len(),
            });
        }
        let descents = s.cyclic_descents();
        if descents.len() != b {
            return Err(Error::WrongDescentCount {
                expected: b,
                found: descents.len(),
            });
        }
        let mut steps = vec![Step::N; a + b];
        for d in descents {
            steps[d - 1] = Step::E;
        }
        DyckPath::new(a, b, steps)
    }

    /// Path recovered from a single `(a+b)`-cycle `gamma`: its cycle notation
    /// from 1 is read as a one-line permutation.
    pub fn from_gamma(gamma: &Permutation, a: usize, b: usize) -> Result<Self> {
        let cycle = gamma.cycle_from_one().ok_or(Error::NotACycle {
            cycles: gamma.cycles().len(),
        })?;
        let sigma = Permutation::new(cycle)?;
        DyckPath::from_permutation(&sigma, a, b)
    }

    /// Height of the east step in each column.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.b);
        let mut y = 0;
        for &s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => out.push(y),
            }
        }
        out
    }

    /// x-coordinate of the north step in each row, bottom row first.
    pub fn row_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.a);
        let mut x = 0;
        for &s in &self.steps {
            match s {
                Step::N => out.push(x),
                Step::E => x += 1,
            }
        }
        out
    }

    /// Partition of the boxes above the path, top row first, with exactly
    /// `a` parts.
    pub fn bounded_partition(&self) -> Partition {
        let mut parts = self.row_offsets();
        parts.reverse();
        Partition::new(parts).expect("row offsets of a lattice path increase")
    }

    /// The path whose bounded partition is `lambda` (padded to `a` parts).
    pub fn from_bounded_partition(a: usize, b: usize, lambda: &Partition) -> Result<Self> {
        check_dims(a, b)?;
        let misfit = || Error::DoesNotFitAboveDiagonal {
            a,
            b,
            parts: lambda.parts().to_vec(),
        };
        if lambda.num_rows() > a || lambda.part(0) > b {
            return Err(misfit());
        }
        let mut steps = Vec::with_capacity(a + b);
        let mut x = 0;
        for row in 0..a {
            let target = lambda.part(a - 1 - row);
            steps.extend(std::iter::repeat_n(Step::E, target - x));
            steps.push(Step::N);
            x = target;
        }
        steps.extend(std::iter::repeat_n(Step::E, b - x));
        DyckPath::new(a, b, steps).map_err(|e| match e {
            Error::BelowDiagonal { .. } => misfit(),
            other => other,
        })
    }

    /// Hook-filling values of the boxes under the path and above the
    /// diagonal, decreasing.
    pub fn positive_hooks(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .column_heights()
            .into_iter()
            .enumerate()
            .flat_map(|(col, h)| (0..h).map(move |row| (col, row)))
            .map(|(col, row)| hook_value(self.a, self.b, col, row))
            .filter(|&h| h > 0)
            .collect();
        out.sort_unstable_by(|x, y| y.cmp(x));
        out
    }

    /// The path whose positive hooks are exactly `hooks`.
    pub fn from_positive_hooks(a: usize, b: usize, hooks: &[i64]) -> Result<Self> {
        check_dims(a, b)?;
        let invalid = || Error::InvalidHookSet(hooks.to_vec());
        let mut heights: Vec<usize> = (0..b).map(|col| (a * (col + 1)).div_ceil(b)).collect();
        for &h in hooks {
            if h <= 0 {
                return Err(invalid());
            }
            let col = (0..b)
                .find(|&col| (h + ((col + 1) * a) as i64) % b as i64 == 0)
                .ok_or_else(invalid)?;
            let row = ((h + ((col + 1) * a) as i64) / b as i64) as usize;
            if row >= a {
                return Err(invalid());
            }
            heights[col] = heights[col].max(row + 1);
        }
        for col in 1..b {
            heights[col] = heights[col].max(heights[col - 1]);
        }
        let mut steps = Vec::with_capacity(a + b);
        let mut y = 0;
        for &h in &heights {
            steps.extend(std::iter::repeat_n(Step::N, h - y));
            steps.push(Step::E);
            y = h;
        }
        // the last column's minimal height is already a
        debug_assert_eq!(y, a);
        let path = DyckPath::new(a, b, steps)?;
        let mut want = hooks.to_vec();
        want.sort_unstable_by(|x, y| y.cmp(x));
        if path.positive_hooks() != want {
            return Err(invalid());
        }
        Ok(path)
    }

    /// Conjugate path: positive hooks `{m - n : n in 0..=m, n not in H}`
    /// where `H` are the positive hooks of `self` and `m = max H`.
    pub fn conjugate(&self) -> DyckPath {
        let hooks = self.positive_hooks();
        let Some(&m) = hooks.first() else {
            return self.clone();
        };
        let conj: Vec<i64> = (0..=m)
            .filter(|n| !hooks.contains(n))
            .map(|n| m - n)
            .filter(|&h| h > 0)
            .collect();
        DyckPath::from_positive_hooks(self.a, self.b, &conj)
            .expect("conjugate hook set of a Dyck path is a Dyck path")
    }

    /// Reflection to a `(b,a)`-Dyck path.
    pub fn flip(&self) -> DyckPath {
        let steps = self.steps.iter().rev().map(|s| s.swapped()).collect();
        DyckPath::new(self.b, self.a, steps).expect("flip of a Dyck path is a Dyck path")
    }

    /// Square case only: the path bounding the conjugate of this path's
    /// bounded partition.
    pub fn reverse(&self) -> Result<DyckPath> {
        if self.b != self.a + 1 {
            return Err(Error::NotSquareCase { a: self.a, b: self.b });
        }
        let conj = self.bounded_partition().conjugate().padded(self.a);
        DyckPath::from_bounded_partition(self.a, self.b, &conj)
    }

    /// Index (into `points()`) of the point of maximal level.
    fn max_level_index(&self) -> Result<usize> {
        let levels = self.levels();
        let m = *levels.iter().max().expect("paths have at least one point");
        let mut hits = levels.iter().enumerate().filter(|(_, &l)| l == m).map(|(i, _)| i);
        let first = hits.next().expect("max is attained");
        if hits.next().is_some() {
            return Err(Error::AmbiguousMaxLevel);
        }
        Ok(first)
    }

    pub fn maximal_level(&self) -> i64 {
        *self.levels().iter().max().expect("paths have at least one point")
    }

    /// Infixes `inner` into `self` at the lattice point of maximal level.
    pub fn star_product(&self, inner: &DyckPath) -> Result<DyckPath> {
        let cut = self.max_level_index()?;
        let mut steps = self.steps[..cut].to_vec();
        steps.extend_from_slice(&inner.steps);
        steps.extend_from_slice(&self.steps[cut..]);
        DyckPath::new(self.a + inner.a, self.b + inner.b, steps)
    }

    /// Removes the box under the peak of maximal level.
    pub fn predecessor(&self) -> Result<DyckPath> {
        if self.positive_hooks().is_empty() {
            return Err(Error::AreaZero);
        }
        let k = self.max_level_index()?;
        if k == 0 || k == self.len() || self.steps[k - 1] != Step::N || self.steps[k] != Step::E {
            return Err(Error::Internal("maximal level is not at a peak".into()));
        }
        let mut steps = self.steps.clone();
        steps.swap(k - 1, k);
        DyckPath::new(self.a, self.b, steps)
    }
}

/// All `(a,b)`-Dyck paths in lexicographic order of their step words (`N < E`).
pub fn enumerate_paths(a: usize, b: usize) -> Result<Vec<DyckPath>> {
    check_dims(a, b)?;
    fn extend(a: usize, b: usize, x: usize, y: usize, prefix: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if x == b && y == a {
            out.push(DyckPath {
                a,
                b,
                steps: prefix.clone(),
            });
            return;
        }
        if y < a {
            prefix.push(Step::N);
            extend(a, b, x, y + 1, prefix, out);
            prefix.pop();
        }
        if x < b && a * (x + 1) <= b * y {
            prefix.push(Step::E);
            extend(a, b, x + 1, y, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(a, b, 0, 0, &mut Vec::with_capacity(a + b), &mut out);
    Ok(out)
}

/// `(1/(a+b)) * C(a+b, a)`.
pub fn rational_catalan_number(a: usize, b: usize) -> u128 {
    let n = (a + b) as u128;
    let mut c: u128 = 1;
    for i in 0..a as u128 {
        c = c * (n - i) / (i + 1);
    }
    c / n
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PathRecord {
    a: usize,
    b: usize,
    steps: String,
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PathRecord {
            a: self.a,
            b: self.b,
            steps: self.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rec = PathRecord::deserialize(deserializer)?;
        DyckPath::parse(rec.a, rec.b, &rec.steps).map_err(serde::de::Error::custom)
    }
}

/// Parses `"a b steps"` (whitespace separated), the line format of path files.
impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let bad = || Error::Precondition(format!("expected `a b steps`, got {s:?}"));
        let a = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let b = it.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
        let steps = it.next().ok_or_else(bad)?;
        if it.next().is_some() {
            return Err(bad());
        }
        DyckPath::parse(a, b, steps)
    }
}
