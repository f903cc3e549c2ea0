//! Recovering a path from its zeta and eta images, the conjugate-area
//! involution chi, and the closed-form inverses for special families.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::bounce::{zeta_inverse_fuss, zeta_inverse_search};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::path::{check_dims, enumerate_paths, point_at_level, DyckPath, Step};
use crate::permutation::Permutation;
use crate::zeta::{eta, zeta};

fn same_dims(q: &DyckPath, r: &DyckPath) -> Result<()> {
    if (q.a(), q.b()) != (r.a(), r.b()) {
        return Err(Error::Precondition(format!(
            "paths live in different grids ({},{}) and ({},{})",
            q.a(),
            q.b(),
            r.a(),
            r.b()
        )));
    }
    Ok(())
}

/// Labels (1-based) of the east steps by column and north steps by row.
fn step_labels(steps: &[Step]) -> (Vec<usize>, Vec<usize>) {
    let mut east = Vec::new();
    let mut north = Vec::new();
    for (i, &s) in steps.iter().enumerate() {
        match s {
            Step::E => east.push(i + 1),
            Step::N => north.push(i + 1),
        }
    }
    (east, north)
}

/// The permutation pairing each step of `q` with the step of `r` (rotated
/// half a turn) in the same column or row.
pub fn pair_gamma(q: &DyckPath, r: &DyckPath) -> Result<Permutation> {
    same_dims(q, r)?;
    let rotated: Vec<Step> = r.steps().iter().rev().copied().collect();
    let (r_east, r_north) = step_labels(&rotated);
    let mut one_line = Vec::with_capacity(q.len());
    let (mut col, mut row) = (0, 0);
    for &s in q.steps() {
        match s {
            Step::E => {
                one_line.push(r_east[col]);
                col += 1;
            }
            Step::N => {
                one_line.push(r_north[row]);
                row += 1;
            }
        }
    }
    Permutation::new(one_line)
}

/// The pair inverse without the final consistency check.
pub fn iota_unchecked(q: &DyckPath, r: &DyckPath) -> Result<DyckPath> {
    let gamma = pair_gamma(q, r)?;
    let cycle = gamma.cycle_from_one().ok_or(Error::NotACycle {
        cycles: gamma.cycles().len(),
    })?;
    let sigma = Permutation::new(cycle)?;
    DyckPath::from_permutation(&sigma, q.a(), q.b()).map_err(|_| Error::NotADyckPath)
}

/// Recovers `P` from `(zeta(P), eta(P))`, checking the images.
pub fn iota(q: &DyckPath, r: &DyckPath) -> Result<DyckPath> {
    let p = iota_unchecked(q, r)?;
    if &zeta(&p) != q || &eta(&p) != r {
        return Err(Error::InconsistentPair { path: p.to_string() });
    }
    Ok(p)
}

/// Exceedance positions of the pair permutation are the north steps of `q`,
/// and their values are the north steps of `r` rotated half a turn.
pub fn exceedances_check(q: &DyckPath, r: &DyckPath) -> Result<bool> {
    let gamma = pair_gamma(q, r)?;
    let exc = gamma.exceedances();
    let (_, q_north) = step_labels(q.steps());
    let rotated: Vec<Step> = r.steps().iter().rev().copied().collect();
    let (_, r_north) = step_labels(&rotated);
    let values: BTreeSet<usize> = exc.iter().map(|&i| gamma.apply(i)).collect();
    Ok(exc == q_north && values == r_north.into_iter().collect())
}

/// The pair permutation for `(q, reverse(q))` read directly off `q` using
/// the boxes crossed by the diagonal of the `n x (n+1)` grid.
pub fn square_gamma_shaded(q: &DyckPath) -> Result<Permutation> {
    if q.b() != q.a() + 1 {
        return Err(Error::NotSquareCase { a: q.a(), b: q.b() });
    }
    let (east, north) = step_labels(q.steps());
    let mut one_line = vec![0; q.len()];
    for (row, &label) in north.iter().enumerate() {
        // east to the shaded box in column `row`, then up to the path
        one_line[label - 1] = east[row] + 1;
    }
    for (col, &label) in east.iter().enumerate() {
        one_line[label - 1] = if col == 0 { 1 } else { north[col - 1] + 1 };
    }
    Permutation::new(one_line)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Auto,
    Square,
    Level1,
    Fuss,
    Search,
    Table,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Square => "square",
            Strategy::Level1 => "level1",
            Strategy::Fuss => "fuss",
            Strategy::Search => "search",
            Strategy::Table => "table",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "square" => Ok(Strategy::Square),
            "level1" => Ok(Strategy::Level1),
            "fuss" => Ok(Strategy::Fuss),
            "search" => Ok(Strategy::Search),
            "table" => Ok(Strategy::Table),
            other => Err(Error::Precondition(format!("unknown strategy {other:?}"))),
        }
    }
}

/// A verified preimage together with how it was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inverse {
    pub path: DyckPath,
    pub strategy: Strategy,
    /// Delta sequence for the Fuss and search strategies, empty otherwise.
    pub trace: Vec<usize>,
}

type Table = Arc<HashMap<DyckPath, DyckPath>>;

fn tables() -> &'static RwLock<HashMap<(usize, usize), Table>> {
    static TABLES: OnceLock<RwLock<HashMap<(usize, usize), Table>>> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The map `zeta(P) -> P` over all paths of the grid, built once per grid.
pub fn inverse_table(a: usize, b: usize) -> Result<Table> {
    check_dims(a, b)?;
    if let Some(t) = tables().read().expect("table lock").get(&(a, b)) {
        return Ok(Arc::clone(t));
    }
    let table: HashMap<DyckPath, DyckPath> = enumerate_paths(a, b)?
        .into_iter()
        .map(|p| (zeta(&p), p))
        .collect();
    let table = Arc::new(table);
    let mut guard = tables().write().expect("table lock");
    Ok(Arc::clone(guard.entry((a, b)).or_insert(table)))
}

fn run_strategy(q: &DyckPath, strategy: Strategy) -> Result<Inverse> {
    let (path, trace) = match strategy {
        Strategy::Square => {
            let r = q.reverse()?;
            (iota_unchecked(q, &r)?, Vec::new())
        }
        Strategy::Level1 => (zeta_inverse_level1(q)?, Vec::new()),
        Strategy::Fuss => {
            let (p, trace) = zeta_inverse_fuss(q)?;
            (p, trace)
        }
        Strategy::Search => {
            let found = zeta_inverse_search(q)?;
            (found.path, found.trace)
        }
        Strategy::Table => {
            let table = inverse_table(q.a(), q.b())?;
            let p = table.get(q).cloned().ok_or_else(|| Error::NoPreimage {
                path: q.to_string(),
                detail: "not in the image of zeta".into(),
            })?;
            (p, Vec::new())
        }
        Strategy::Auto => return zeta_inverse_auto(q),
    };
    if &zeta(&path) != q {
        return Err(Error::RoundTripFailure {
            strategy: strategy.name(),
            path: q.to_string(),
            trace,
        });
    }
    Ok(Inverse { path, strategy, trace })
}

fn applicable(q: &DyckPath, strategy: Strategy) -> bool {
    let (a, b) = (q.a(), q.b());
    match strategy {
        Strategy::Square => b == a + 1,
        Strategy::Level1 => level1_point(a, b).map(|(x, y)| q.visits(x, y)).unwrap_or(false),
        Strategy::Fuss => b % a == 1 || a == 1,
        _ => true,
    }
}

fn zeta_inverse_auto(q: &DyckPath) -> Result<Inverse> {
    let mut failures = Vec::new();
    for strategy in [
        Strategy::Square,
        Strategy::Level1,
        Strategy::Fuss,
        Strategy::Search,
        Strategy::Table,
    ] {
        if !applicable(q, strategy) {
            continue;
        }
        match run_strategy(q, strategy) {
            Ok(inv) => return Ok(inv),
            Err(e) => failures.push(format!("{strategy}: {e}")),
        }
    }
    Err(Error::NoPreimage {
        path: q.to_string(),
        detail: failures.join("; "),
    })
}

/// Inverse of zeta by the chosen strategy; every result is checked by
/// applying zeta.
pub fn zeta_inverse_with(q: &DyckPath, strategy: Strategy) -> Result<Inverse> {
    run_strategy(q, strategy)
}

pub fn zeta_inverse(q: &DyckPath) -> Result<DyckPath> {
    zeta_inverse_auto(q).map(|inv| inv.path)
}

/// The conjugate-area involution: `eta` of the zeta preimage.
pub fn chi(q: &DyckPath) -> Result<DyckPath> {
    Ok(eta(&zeta_inverse(q)?))
}

/// The rectangles `(a', b')` and `(a'', b'')` with `a'b - b'a = 1` and
/// `b''a - a''b = 1`.
pub fn split_dims(a: usize, b: usize) -> Result<(usize, usize, usize, usize)> {
    check_dims(a, b)?;
    if a == 1 || b == 1 {
        return Err(Error::DimensionTooSmall { a, b });
    }
    let a1 = (1..a).find(|&x| (x * b) % a == 1).expect("b is invertible mod a");
    let b1 = (a1 * b - 1) / a;
    Ok((a1, b1, a - a1, b - b1))
}

/// The lattice point `(x, y)` of level 1 bounding the lower rectangle.
pub fn level1_point(a: usize, b: usize) -> Result<(usize, usize)> {
    let (a1, b1, _, _) = split_dims(a, b)?;
    Ok((b1, a1))
}

/// Cuts `q` at the level-1 point into its lower and upper pieces.
fn split_at_level1(q: &DyckPath) -> Result<(DyckPath, DyckPath)> {
    let (a1, b1, a2, b2) = split_dims(q.a(), q.b())?;
    if !q.visits(b1, a1) {
        return Err(Error::Level1NotVisited { x: b1, y: a1 });
    }
    let cut = a1 + b1;
    let lower = DyckPath::new(a1, b1, q.steps()[..cut].to_vec())?;
    let upper = DyckPath::new(a2, b2, q.steps()[cut..].to_vec())?;
    Ok((lower, upper))
}

fn unique_path(a: usize, b: usize) -> DyckPath {
    DyckPath::lowest(a, b).expect("single-path grid")
}

fn inverse_for_piece(q: &DyckPath) -> Result<DyckPath> {
    if q.a() == 1 || q.b() == 1 {
        return Ok(unique_path(q.a(), q.b()));
    }
    match zeta_inverse_level1(q) {
        Err(Error::Level1NotVisited { .. }) => zeta_inverse(q),
        other => other,
    }
}

/// Zeta inverse of a path through the level-1 point: the star product of
/// the inverses of its two pieces.
pub fn zeta_inverse_level1(q: &DyckPath) -> Result<DyckPath> {
    if q.a() == 1 || q.b() == 1 {
        return Ok(unique_path(q.a(), q.b()));
    }
    let (lower, upper) = split_at_level1(q)?;
    inverse_for_piece(&lower)?.star_product(&inverse_for_piece(&upper)?)
}

fn chi_for_piece(q: &DyckPath) -> Result<DyckPath> {
    if q.a() == 1 || q.b() == 1 {
        return Ok(q.clone());
    }
    match chi_level1(q) {
        Err(Error::Level1NotVisited { .. }) => chi(q),
        other => other,
    }
}

/// Chi of a path through the level-1 point, built from the chi images of
/// its two pieces. The upper piece's image sits in the top-right corner, the
/// lower piece's image in the bottom-left corner, and every box of the
/// top-left region except its lower-right corner lies above the path.
pub fn chi_level1(q: &DyckPath) -> Result<DyckPath> {
    if q.a() == 1 || q.b() == 1 {
        return Ok(q.clone());
    }
    let (lower, upper) = split_at_level1(q)?;
    let (a1, _, _, b2) = split_dims(q.a(), q.b())?;
    let top = chi_for_piece(&lower)?.bounded_partition();
    let bottom = chi_for_piece(&upper)?.bounded_partition();
    let mut parts: Vec<usize> = (0..a1).map(|i| b2 + top.part(i)).collect();
    // the first step of a Dyck path is north, so the last upper row is empty
    parts[a1 - 1] = b2 - 1;
    parts.extend_from_slice(bottom.padded(q.a() - a1).parts());
    let lambda = Partition::new(parts).map_err(|e| Error::Internal(format!("chi splice: {e}")))?;
    DyckPath::from_bounded_partition(q.a(), q.b(), &lambda)
}

/// A box `(col, row)` of the grid.
pub type GridBox = (usize, usize);

/// Boxes northwest of the lattice point `(x, y)`.
pub fn boxes_northwest(a: usize, b: usize, x: usize, y: usize) -> BTreeSet<GridBox> {
    let _ = b;
    (0..x).flat_map(|c| (y..a).map(move |r| (c, r))).collect()
}

/// Boxes southeast of the lattice point `(x, y)`.
pub fn boxes_southeast(a: usize, b: usize, x: usize, y: usize) -> BTreeSet<GridBox> {
    let _ = a;
    (x..b).flat_map(|c| (0..y).map(move |r| (c, r))).collect()
}

/// Box count southeast minus northwest of `(x, y)`.
pub fn corner_area_difference(a: usize, b: usize, x: usize, y: usize) -> i64 {
    boxes_southeast(a, b, x, y).len() as i64 - boxes_northwest(a, b, x, y).len() as i64
}

fn level_point(a: usize, b: usize, level: usize) -> Result<(usize, usize)> {
    point_at_level(a, b, level as i64)
        .ok_or_else(|| Error::Precondition(format!("no lattice point of level {level} in the ({a},{b}) grid")))
}

/// `U_l` and `\hat U_l` for the point of level `l`.
fn corner_regions(a: usize, b: usize, l: usize) -> Result<(BTreeSet<GridBox>, BTreeSet<GridBox>)> {
    let (x, y) = level_point(a, b, l)?;
    let nw = boxes_northwest(a, b, x, y);
    let mut se = boxes_southeast(a, b, x, y);
    se.remove(&(x, y - 1));
    Ok((nw, se))
}

/// `V_l` and `\hat V_l`: the regions of level `l` minus those of lower levels.
pub fn valley_regions(a: usize, b: usize, l: usize) -> Result<(BTreeSet<GridBox>, BTreeSet<GridBox>)> {
    check_dims(a, b)?;
    if l == 0 || l >= a {
        return Err(Error::Precondition(format!("level {l} outside 1..{a}")));
    }
    let (mut v, mut v_hat) = corner_regions(a, b, l)?;
    for i in 1..l {
        let (u, u_hat) = corner_regions(a, b, i)?;
        v.retain(|bx| !u.contains(bx));
        v_hat.retain(|bx| !u_hat.contains(bx));
    }
    Ok((v, v_hat))
}

/// The path whose set of boxes above it is `boxes`.
fn path_above(a: usize, b: usize, boxes: &BTreeSet<GridBox>) -> Result<DyckPath> {
    let mut parts = vec![0usize; a];
    for &(_, row) in boxes {
        parts[a - 1 - row] += 1;
    }
    let lambda = Partition::new(parts.clone()).map_err(|_| Error::Internal("region is not a partition".into()))?;
    let p = DyckPath::from_bounded_partition(a, b, &lambda)?;
    let exact = boxes.iter().all(|&(c, r)| c < parts[a - 1 - r]);
    if !exact {
        return Err(Error::Internal("region is not flush with the top-left corner".into()));
    }
    Ok(p)
}

fn check_valley_k(a: usize, b: usize, k: usize) -> Result<()> {
    check_dims(a, b)?;
    if k >= a {
        return Err(Error::Precondition(format!("k = {k} must be below a = {a}")));
    }
    Ok(())
}

/// The path with valleys at levels `0, 1, ..., k`.
pub fn kth_valley_path(a: usize, b: usize, k: usize) -> Result<DyckPath> {
    check_valley_k(a, b, k)?;
    let mut boxes = BTreeSet::new();
    for l in 1..=k {
        boxes.extend(corner_regions(a, b, l)?.0);
    }
    path_above(a, b, &boxes)
}

/// Chi of the k-th valley path: its bounded partition is the half-turn of
/// the union of the `\hat U_l`.
pub fn chi_kth_valley(a: usize, b: usize, k: usize) -> Result<DyckPath> {
    check_valley_k(a, b, k)?;
    let mut boxes = BTreeSet::new();
    for l in 1..=k {
        boxes.extend(corner_regions(a, b, l)?.1.into_iter().map(|(c, r)| (b - 1 - c, a - 1 - r)));
    }
    path_above(a, b, &boxes)
}

/// Left-justified and up-justified partitions of size `n`, and the path
/// under the `n` smallest positive hooks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Justified {
    pub left: Partition,
    pub up: Partition,
    pub path: DyckPath,
}

pub fn justified(a: usize, b: usize, n: usize) -> Result<Justified> {
    let lowest = DyckPath::lowest(a, b)?;
    if n > lowest.max_area() {
        return Err(Error::Precondition(format!(
            "n = {n} exceeds the {} boxes above the diagonal",
            lowest.max_area()
        )));
    }
    let stair = lowest.bounded_partition();
    let mut rest = n;
    let columns: Vec<usize> = stair
        .conjugate()
        .parts()
        .iter()
        .map(|&h| {
            let take = h.min(rest);
            rest -= take;
            take
        })
        .collect();
    let left = Partition::from_unsorted(columns).conjugate().padded(a);
    let mut rest = n;
    let rows: Vec<usize> = stair
        .parts()
        .iter()
        .map(|&w| {
            let take = w.min(rest);
            rest -= take;
            take
        })
        .collect();
    let up = Partition::new(rows)?.padded(a);
    let mut hooks = DyckPath::full(a, b)?.positive_hooks();
    hooks.sort_unstable();
    hooks.truncate(n);
    let path = DyckPath::from_positive_hooks(a, b, &hooks)?;
    Ok(Justified { left, up, path })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> DyckPath {
        DyckPath::parse(5, 8, "NNNENEEENEEEE").unwrap()
    }

    fn q() -> DyckPath {
        DyckPath::parse(5, 8, "NENENENENEEEE").unwrap()
    }

    fn r() -> DyckPath {
        DyckPath::parse(5, 8, "NNENEENEEENEE").unwrap()
    }

    #[test]
    fn pair_gamma_running_example() {
        let g = pair_gamma(&q(), &r()).unwrap();
        assert_eq!((g.apply(1), g.apply(2), g.apply(3)), (3, 1, 7));
        assert_eq!(g.cycle_from_one().unwrap(), vec![1, 3, 7, 12, 9, 13, 11, 8, 5, 10, 6, 4, 2]);
        assert_eq!(iota(&q(), &r()).unwrap(), running());
        assert!(exceedances_check(&q(), &r()).unwrap());
    }

    #[test]
    fn iota_trivial_pair() {
        let full = DyckPath::full(5, 8).unwrap();
        assert_eq!(iota(&full, &full).unwrap(), DyckPath::lowest(5, 8).unwrap());
    }

    #[test]
    fn iota_reports_bad_pairs() {
        let paths = enumerate_paths(3, 5).unwrap();
        let mut kinds = BTreeSet::new();
        for q in &paths {
            for r in &paths {
                match iota(q, r) {
                    Ok(p) => assert_eq!((&zeta(&p), &eta(&p)), (q, r)),
                    Err(Error::NotACycle { .. }) => {
                        kinds.insert("cycle");
                    }
                    Err(Error::NotADyckPath) => {
                        kinds.insert("dyck");
                    }
                    Err(Error::InconsistentPair { .. }) => {
                        kinds.insert("pair");
                    }
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
        assert!(kinds.contains("cycle"));
    }

    #[test]
    fn split_dimensions() {
        assert_eq!(split_dims(5, 8).unwrap(), (2, 3, 3, 5));
        assert_eq!(split_dims(2, 3).unwrap(), (1, 1, 1, 2));
        for n in 2..9 {
            assert_eq!(split_dims(n, n + 1).unwrap(), (1, 1, n - 1, n));
        }
        assert_eq!(split_dims(1, 4).unwrap_err(), Error::DimensionTooSmall { a: 1, b: 4 });
        assert_eq!(level1_point(5, 8).unwrap(), (3, 2));
    }

    #[test]
    fn star_splice_of_cycles() {
        // lower and upper inverses from the level-1 splitting of (5,8)
        let g1 = Permutation::from_cycle(&[1, 3, 5, 4, 2]).unwrap();
        let g2 = Permutation::from_cycle(&[1, 3, 7, 5, 8, 6, 4, 2]).unwrap();
        let p1 = DyckPath::from_gamma(&g1, 2, 3).unwrap();
        let p2 = DyckPath::from_gamma(&g2, 3, 5).unwrap();
        let star = p1.star_product(&p2).unwrap();
        let expected = Permutation::from_cycle(&[1, 3, 6, 8, 12, 10, 13, 11, 9, 7, 5, 4, 2]).unwrap();
        assert_eq!(star.gamma(), expected);
        let q = zeta(&star);
        assert_eq!(zeta_inverse_level1(&q).unwrap(), star);
    }

    #[test]
    fn running_example_inverse() {
        let inv = zeta_inverse_with(&q(), Strategy::Auto).unwrap();
        assert_eq!(inv.path, running());
        assert_eq!(chi(&q()).unwrap(), r());
        for s in [Strategy::Search, Strategy::Table] {
            assert_eq!(zeta_inverse_with(&q(), s).unwrap().path, running(), "{s}");
        }
    }

    #[test]
    fn square_case_shaded_boxes() {
        for n in 1..6 {
            for q in enumerate_paths(n, n + 1).unwrap() {
                let r = q.reverse().unwrap();
                assert_eq!(square_gamma_shaded(&q).unwrap(), pair_gamma(&q, &r).unwrap(), "{q}");
            }
        }
        assert!(square_gamma_shaded(&q()).is_err());
    }

    #[test]
    fn justified_partitions() {
        let j = justified(5, 8, 8).unwrap();
        assert_eq!(j.left.trimmed().parts(), &[3, 2, 2, 1]);
        assert_eq!(j.up.trimmed().parts(), &[6, 2]);
        let lam = DyckPath::from_bounded_partition(5, 8, &j.left).unwrap();
        let nu = DyckPath::from_bounded_partition(5, 8, &j.up).unwrap();
        assert_eq!(zeta(&j.path), lam);
        assert_eq!(chi(&lam).unwrap(), nu);
        assert!(justified(5, 8, 15).is_err());
    }

    #[test]
    fn kth_valley_chi() {
        for (a, b) in [(5, 8), (5, 13), (4, 7), (3, 8)] {
            for k in 0..a {
                let qk = kth_valley_path(a, b, k).unwrap();
                assert_eq!(chi_kth_valley(a, b, k).unwrap(), chi(&qk).unwrap(), "({a},{b}) k={k}");
            }
        }
    }

    #[test]
    fn valley_region_areas_match() {
        for l in 1..5 {
            let (v, v_hat) = valley_regions(5, 13, l).unwrap();
            assert_eq!(v.len(), v_hat.len(), "l={l}");
        }
    }

    #[test]
    fn corner_areas_equal_levels() {
        for x in 0..=8 {
            for y in 0..=5 {
                assert_eq!(corner_area_difference(5, 8, x, y), (y * 8) as i64 - (x * 5) as i64);
            }
        }
    }

    #[test]
    fn strategy_names_parse() {
        for s in ["auto", "square", "level1", "fuss", "search", "table"] {
            assert_eq!(s.parse::<Strategy>().unwrap().name(), s);
        }
    }
}
