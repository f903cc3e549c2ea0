//! Scalar statistics of rational Dyck paths.

use serde::{Deserialize, Serialize};

use crate::core_partition::{anderson, row_length_filling, skew_length_core};
use crate::path::{DyckPath, Step};

/// Number of boxes between the path and the diagonal.
pub fn area(p: &DyckPath) -> usize {
    p.positive_hooks().len()
}

/// Number of boxes above the path.
pub fn coarea(p: &DyckPath) -> usize {
    p.bounded_partition().size()
}

/// Number of nonzero rows of the bounded partition.
pub fn path_rank(p: &DyckPath) -> usize {
    p.bounded_partition().num_rows()
}

/// Number of rows of the core; always equal to the area.
pub fn core_rank(p: &DyckPath) -> usize {
    anderson(p).rank()
}

/// Skew length through the core.
pub fn skew_length(p: &DyckPath) -> usize {
    skew_length_core(&anderson(p))
}

/// Row-length filling summed over peak boxes minus valley boxes.
///
/// At a corner point `(x, y)` the counted box is the one whose upper-left
/// corner is that point; valleys on the bottom row contribute nothing.
pub fn skew_length_peaks_valleys(p: &DyckPath) -> usize {
    let filling = row_length_filling(p);
    let pts = p.points();
    let steps = p.steps();
    let mut peaks = 0;
    let mut valleys = 0;
    for k in 1..steps.len() {
        let (x, y) = pts[k];
        if y == 0 || x >= p.b() {
            continue;
        }
        let value = filling.get(x, y - 1);
        match (steps[k - 1], steps[k]) {
            (Step::N, Step::E) => peaks += value,
            (Step::E, Step::N) => valleys += value,
            _ => {}
        }
    }
    peaks - valleys
}

/// Pairs of a north level and an east level with `n > e`.
pub fn skew_inversions(p: &DyckPath) -> usize {
    let east = p.east_levels();
    p.north_levels()
        .iter()
        .map(|&n| east.iter().filter(|&&e| n > e).count())
        .sum()
}

/// Pairs with `n + b < e - a`.
pub fn flip_skew_inversions(p: &DyckPath) -> usize {
    let (a, b) = (p.a() as i64, p.b() as i64);
    let east = p.east_levels();
    p.north_levels()
        .iter()
        .map(|&n| east.iter().filter(|&&e| n + b < e - a).count())
        .sum()
}

pub fn co_skew_length(p: &DyckPath) -> usize {
    p.max_area() - skew_length(p)
}

/// Boxes above the path with `arm/(leg+1) <= b/a < (arm+1)/leg`.
pub fn dinv(p: &DyckPath) -> usize {
    let (a, b) = (p.a(), p.b());
    let lambda = p.bounded_partition();
    lambda
        .boxes()
        .filter(|&(i, j)| {
            let arm = lambda.part(i) - j - 1;
            let leg = lambda.parts()[i + 1..].iter().take_while(|&&q| q > j).count();
            a * arm <= b * (leg + 1) && (leg == 0 || b * leg < a * (arm + 1))
        })
        .count()
}

/// Entries of the reading word below `a + b`, the initial 0 included.
pub fn delta(p: &DyckPath) -> usize {
    let bound = (p.a() + p.b()) as i64;
    p.reading_word().into_iter().filter(|&l| l < bound).count()
}

/// Every statistic at once, in the order the CLI reports them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Statistics {
    pub area: usize,
    pub coarea: usize,
    pub rank: usize,
    pub sl: usize,
    pub slp: usize,
    pub dinv: usize,
    pub delta: usize,
}

pub fn all_statistics(p: &DyckPath) -> Statistics {
    let sl = skew_length(p);
    Statistics {
        area: area(p),
        coarea: coarea(p),
        rank: path_rank(p),
        sl,
        slp: p.max_area() - sl,
        dinv: dinv(p),
        delta: delta(p),
    }
}
