use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative parts.
///
/// Trailing zeros are kept: the bounded partition of an `(a,b)` path always
/// has exactly `a` parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary counts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn num_rows(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn trimmed(&self) -> Partition {
        Partition {
            parts: self.parts[..self.num_rows()].to_vec(),
        }
    }

    pub fn padded(&self, len: usize) -> Partition {
        let mut parts = self.trimmed().parts;
        if parts.len() < len {
            parts.resize(len, 0);
        }
        Partition { parts }
    }

    /// Transpose of the Young diagram, without trailing zeros.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of the box in row `i`, column `j` (both 0-based, English
    /// notation), or `None` when the box is not in the diagram.
    pub fn hook(&self, i: usize, j: usize) -> Option<usize> {
        if j >= self.part(i) {
            return None;
        }
        let arm = self.part(i) - j - 1;
        let leg = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        Some(arm + leg + 1)
    }

    /// All boxes `(row, col)` in reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook lengths of the first column, largest first.
    pub fn leading_hooks(&self) -> Vec<usize> {
        (0..self.num_rows())
            .map(|i| self.hook(i, 0).expect("row is nonempty"))
            .collect()
    }

    /// The partition whose first-column hooks are exactly `hooks`.
    pub fn from_leading_hooks(hooks: &[usize]) -> Result<Self> {
        let mut sorted = hooks.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.first() == Some(&0) {
            return Err(Error::InvalidHookSet(hooks.iter().map(|&h| h as i64).collect()));
        }
        // the i-th smallest hook h (0-based) heads a row of length h - i
        let parts: Vec<usize> = sorted.iter().enumerate().map(|(i, &h)| h - i).rev().collect();
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
