//! Permutations of `1..=n` in one-line notation, with the cycle and
//! cyclic-descent views the reading permutations need.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}` stored in one-line notation.
///
/// Composition follows the right-to-left convention:
/// `p.compose(&q)` maps `i` to `p(q(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// The single cycle `(c_1, c_2, ..., c_n)` sending `c_i` to `c_{i+1}`.
    pub fn from_cycle(cycle: &[usize]) -> Result<Self> {
        let n = cycle.len();
        Permutation::new(cycle.to_vec())?;
        let mut one_line = vec![0; n];
        for (i, &c) in cycle.iter().enumerate() {
            one_line[c - 1] = cycle[(i + 1) % n];
        }
        Ok(Permutation { one_line })
    }

    /// The rotation cycle `(i, i+1, ..., j)` inside `S_n`.
    pub fn rotation(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j || j > n {
            return Err(Error::Precondition(format!(
                "rotation ({i}..{j}) does not fit in S_{n}"
            )));
        }
        let mut one_line: Vec<usize> = (1..=n).collect();
        for k in i..j {
            one_line[k - 1] = k + 1;
        }
        one_line[j - 1] = i;
        Ok(Permutation { one_line })
    }

    /// Standardization of a sequence of distinct values: the entry of rank
    /// `r` (1-based, ascending) becomes `r`.
    pub fn standardize<T: Ord>(values: &[T]) -> Result<Self> {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&x, &y| values[x].cmp(&values[y]));
        if order.windows(2).any(|w| values[w[0]] == values[w[1]]) {
            return Err(Error::Internal("standardization of repeated values".into()));
        }
        let mut one_line = vec![0; values.len()];
        for (rank, &idx) in order.iter().enumerate() {
            one_line[idx] = rank + 1;
        }
        Ok(Permutation { one_line })
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            one_line: other.one_line.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut one_line = vec![0; self.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            one_line[v - 1] = i + 1;
        }
        Permutation { one_line }
    }

    /// `rho * self * rho^{-1}`; relabels every cycle entry `c` as `rho(c)`.
    pub fn conjugate_by(&self, rho: &Permutation) -> Permutation {
        rho.compose(self).compose(&rho.inverse())
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_single_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Cycle notation read from 1, as a sequence of length `n`; `None` if
    /// the permutation is not a single `n`-cycle.
    pub fn cycle_from_one(&self) -> Option<Vec<usize>> {
        let mut cycles = self.cycles();
        if cycles.len() == 1 {
            cycles.pop()
        } else {
            None
        }
    }

    /// Positions `i` (1-based) with `p(i) > p(i+1)`, indices taken mod `n`,
    /// so position `n` compares against position 1.
    pub fn cyclic_descents(&self) -> Vec<usize> {
        let n = self.len();
        (1..=n)
            .filter(|&i| self.apply(i) > self.apply(i % n + 1))
            .collect()
    }

    /// Positions `i` with `p(i) > i`.
    pub fn exceedances(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.apply(i) > i).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
