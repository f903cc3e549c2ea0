//! Delta-driven predecessors, initial bounce paths, and the inverses of zeta
//! built on them.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::permutation::Permutation;
use crate::statistics::{coarea, delta};
use crate::zeta::zeta;

/// Adds the box at level 0: the conjugate of the predecessor of the conjugate.
pub fn conj_predecessor(p: &DyckPath) -> Result<DyckPath> {
    let c = p.conjugate();
    match c.predecessor() {
        Ok(pred) => Ok(pred.conjugate()),
        Err(Error::AreaZero) => Err(Error::NoBoxToAdd),
        Err(e) => Err(e),
    }
}

/// The cycle `(1, 2, ..., i)` in `S_n`.
pub fn rho(n: usize, i: usize) -> Permutation {
    Permutation::rotation(n, 1, i).expect("1 <= i <= n")
}

/// Same as [`conj_predecessor`], computed by relabelling `gamma(P)` with
/// the rotation of `1..=delta(P)`.
pub fn conj_predecessor_gamma(p: &DyckPath) -> Result<DyckPath> {
    if p.positive_hooks().is_empty() {
        return Err(Error::NoBoxToAdd);
    }
    let r = rho(p.len(), delta(p));
    let gamma = p.gamma().conjugate_by(&r.inverse());
    DyckPath::from_gamma(&gamma, p.a(), p.b())
}

/// Rewrites the first `delta` steps of `q`: first E becomes N, first N
/// becomes E, and the block is rotated left by one step.
pub fn zeta_predecessor(q: &DyckPath, delta: usize) -> Result<DyckPath> {
    if delta == 0 || delta > q.len() {
        return Err(Error::DeltaOutOfRange { delta, max: q.len() });
    }
    let mut block = q.steps()[..delta].to_vec();
    let first_e = block
        .iter()
        .position(|&s| s == Step::E)
        .ok_or(Error::NoEastInPrefix { delta })?;
    let first_n = block
        .iter()
        .position(|&s| s == Step::N)
        .ok_or(Error::NoNorthInPrefix { delta })?;
    block[first_e] = Step::N;
    block[first_n] = Step::E;
    block.rotate_left(1);
    block.extend_from_slice(&q.steps()[delta..]);
    DyckPath::new(q.a(), q.b(), block)
}

/// Writes `b = a*k + r` with `0 < r < a`.
pub fn bounce_shape(a: usize, b: usize) -> Result<(usize, usize)> {
    let (k, r) = (b / a, b % a);
    if r == 0 {
        return Err(Error::NotBounceShape { a, b });
    }
    Ok((k, r))
}

/// Alternating vertical and horizontal moves from the origin inside a path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BouncePath {
    pub k: usize,
    pub r: usize,
    /// The `k + 1` vertical moves.
    pub v: Vec<usize>,
    /// The `k` horizontal moves; `h[i]` is the sum of `v[..=i]`.
    pub h: Vec<usize>,
}

impl BouncePath {
    pub fn total(&self) -> usize {
        self.v.iter().sum::<usize>() + self.h.iter().sum::<usize>()
    }

    /// Smallest possible delta of the preimage.
    pub fn delta_lower(&self) -> usize {
        self.total() + 1
    }

    /// Largest possible delta of the preimage.
    pub fn delta_upper(&self) -> usize {
        self.total() + self.r
    }

    /// Lattice points visited, starting at the origin.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut pts = vec![(0, 0)];
        let (mut x, mut y) = (0, 0);
        for (i, &v) in self.v.iter().enumerate() {
            y += v;
            pts.push((x, y));
            if let Some(&h) = self.h.get(i) {
                x += h;
                pts.push((x, y));
            }
        }
        pts
    }
}

pub fn initial_bounce(q: &DyckPath) -> Result<BouncePath> {
    let (k, r) = bounce_shape(q.a(), q.b())?;
    let heights = q.column_heights();
    let (mut x, mut y) = (0usize, 0usize);
    let mut v = Vec::with_capacity(k + 1);
    let mut h = Vec::with_capacity(k);
    for i in 0..=k {
        let top = *heights.get(x).ok_or(Error::MalformedPath)?;
        let up = top.checked_sub(y).ok_or(Error::MalformedPath)?;
        v.push(up);
        y = top;
        if i < k {
            let run: usize = v.iter().sum();
            h.push(run);
            x += run;
        }
    }
    Ok(BouncePath { k, r, v, h })
}

/// Levels of `L(P)` at most `a(k+1)`.
pub fn delta_tilde(p: &DyckPath) -> Result<usize> {
    let (k, _) = bounce_shape(p.a(), p.b())?;
    let bound = (p.a() * (k + 1)) as i64;
    Ok(p.reading_word().into_iter().filter(|&l| l <= bound).count())
}

/// Rebuilds a path from its delta trace: `gamma = rho gamma_0 rho^-1` with
/// `rho = rho_{delta_1} ... rho_{delta_l}` and `gamma_0` the lowest path's.
pub fn path_from_trace(a: usize, b: usize, trace: &[usize]) -> Result<DyckPath> {
    let n = a + b;
    let mut gamma = DyckPath::lowest(a, b)?.gamma();
    for &d in trace.iter().rev() {
        gamma = gamma.conjugate_by(&rho(n, d));
    }
    DyckPath::from_gamma(&gamma, a, b)
}

fn single_path_grid(q: &DyckPath) -> Option<DyckPath> {
    (q.a() == 1 || q.b() == 1).then(|| q.clone())
}

/// Inverse of zeta for `b = ak + 1`, where the bounce path fixes every delta.
/// Returns the preimage and its delta trace.
pub fn zeta_inverse_fuss(q: &DyckPath) -> Result<(DyckPath, Vec<usize>)> {
    let (a, b) = (q.a(), q.b());
    if let Some(p) = single_path_grid(q) {
        return Ok((p, Vec::new()));
    }
    if b % a != 1 {
        return Err(Error::NotBounceShape { a, b });
    }
    let full = DyckPath::full(a, b)?;
    let mut trace = Vec::new();
    let mut cur = q.clone();
    while cur != full {
        if trace.len() > q.max_area() {
            return Err(Error::RoundTripFailure {
                strategy: "fuss",
                path: q.to_string(),
                trace,
            });
        }
        let d = initial_bounce(&cur)?.delta_lower();
        trace.push(d);
        cur = zeta_predecessor(&cur, d).map_err(|_| Error::RoundTripFailure {
            strategy: "fuss",
            path: q.to_string(),
            trace: trace.clone(),
        })?;
    }
    let p = path_from_trace(a, b, &trace)?;
    if &zeta(&p) != q {
        return Err(Error::RoundTripFailure {
            strategy: "fuss",
            path: q.to_string(),
            trace,
        });
    }
    Ok((p, trace))
}

/// Outcome of the delta search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub path: DyckPath,
    pub trace: Vec<usize>,
    /// Distinct verified preimages found.
    pub preimages: usize,
    /// Delta traces that led to a verified preimage.
    pub accepted_traces: usize,
}

#[derive(Clone)]
struct Found {
    path: DyckPath,
    trace: Vec<usize>,
    traces: usize,
}

struct Search {
    full: DyckPath,
    memo: HashMap<DyckPath, Vec<Found>>,
}

impl Search {
    fn solve(&mut self, q: &DyckPath) -> Vec<Found> {
        if let Some(hit) = self.memo.get(q) {
            return hit.clone();
        }
        let out = if *q == self.full {
            vec![Found {
                path: DyckPath::lowest(q.a(), q.b()).expect("valid grid"),
                trace: Vec::new(),
                traces: 1,
            }]
        } else {
            self.expand(q)
        };
        self.memo.insert(q.clone(), out.clone());
        out
    }

    fn expand(&mut self, q: &DyckPath) -> Vec<Found> {
        let Ok(bounce) = initial_bounce(q) else {
            return Vec::new();
        };
        let here = coarea(q);
        let mut out: Vec<Found> = Vec::new();
        for d in bounce.delta_lower()..=bounce.delta_upper().min(q.len()) {
            let Ok(prev) = zeta_predecessor(q, d) else {
                continue;
            };
            if coarea(&prev) >= here {
                continue;
            }
            for found in self.solve(&prev) {
                let gamma = found.path.gamma().conjugate_by(&rho(q.len(), d));
                let Ok(p) = DyckPath::from_gamma(&gamma, q.a(), q.b()) else {
                    continue;
                };
                if &zeta(&p) != q {
                    continue;
                }
                if let Some(existing) = out.iter_mut().find(|f| f.path == p) {
                    existing.traces += found.traces;
                } else {
                    let mut trace = vec![d];
                    trace.extend_from_slice(&found.trace);
                    out.push(Found {
                        path: p,
                        trace,
                        traces: found.traces,
                    });
                }
            }
        }
        out
    }
}

/// Inverse of zeta by searching the delta window at every predecessor step;
/// each candidate is accepted only if zeta maps it back to its target.
pub fn zeta_inverse_search(q: &DyckPath) -> Result<SearchResult> {
    if let Some(p) = single_path_grid(q) {
        return Ok(SearchResult {
            path: p,
            trace: Vec::new(),
            preimages: 1,
            accepted_traces: 1,
        });
    }
    let mut search = Search {
        full: DyckPath::full(q.a(), q.b())?,
        memo: HashMap::new(),
    };
    let found = search.solve(q);
    let first = found.first().ok_or_else(|| Error::NoPreimage {
        path: q.to_string(),
        detail: format!("delta search exhausted after {} states", search.memo.len()),
    })?;
    Ok(SearchResult {
        path: first.path.clone(),
        trace: first.trace.clone(),
        preimages: found.len(),
        accepted_traces: found.iter().map(|f| f.traces).sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::enumerate_paths;
    use crate::zeta::zeta;

    fn running() -> DyckPath {
        DyckPath::parse(5, 8, "NNNENEEENEEEE").unwrap()
    }

    #[test]
    fn conj_predecessor_agrees_with_gamma_formula() {
        for (a, b) in [(3, 5), (4, 5), (5, 8)] {
            for p in enumerate_paths(a, b).unwrap() {
                let geo = conj_predecessor(&p);
                let alg = conj_predecessor_gamma(&p);
                assert_eq!(geo, alg, "{p}");
            }
        }
        let low = DyckPath::lowest(5, 8).unwrap();
        assert_eq!(conj_predecessor(&low).unwrap_err(), Error::NoBoxToAdd);
    }

    #[test]
    fn running_example_predecessor_rotates_first_five_labels() {
        let p = running();
        let next = conj_predecessor(&p).unwrap();
        let expected = p.gamma().conjugate_by(&rho(13, 5).inverse());
        assert_eq!(next.gamma(), expected);
        assert_eq!(zeta_predecessor(&zeta(&p), 5).unwrap(), zeta(&next));
    }

    #[test]
    fn zeta_predecessor_errors() {
        let q = DyckPath::parse(5, 8, "NENENENENEEEE").unwrap();
        assert_eq!(zeta_predecessor(&q, 0).unwrap_err(), Error::DeltaOutOfRange { delta: 0, max: 13 });
        assert_eq!(zeta_predecessor(&q, 1).unwrap_err(), Error::NoEastInPrefix { delta: 1 });
        let full = DyckPath::full(5, 8).unwrap();
        assert_eq!(zeta_predecessor(&full, 3).unwrap_err(), Error::NoEastInPrefix { delta: 3 });
    }

    #[test]
    fn bounce_window_contains_delta() {
        for (a, b) in [(3, 7), (4, 7), (5, 8), (3, 4)] {
            for p in enumerate_paths(a, b).unwrap() {
                let bp = initial_bounce(&zeta(&p)).unwrap();
                let d = delta(&p);
                assert!(bp.delta_lower() <= d && d <= bp.delta_upper(), "{p}");
                assert_eq!(delta_tilde(&p).unwrap(), bp.delta_lower(), "{p}");
                if b % a == 1 {
                    assert_eq!(d, bp.delta_lower());
                }
            }
        }
    }

    #[test]
    fn fuss_inverse_small_grids() {
        for (a, b) in [(2, 3), (2, 5), (3, 7), (4, 9)] {
            for p in enumerate_paths(a, b).unwrap() {
                let (back, trace) = zeta_inverse_fuss(&zeta(&p)).unwrap();
                assert_eq!(back, p);
                assert_eq!(path_from_trace(a, b, &trace).unwrap(), p);
            }
        }
        assert!(zeta_inverse_fuss(&running()).is_err());
    }

    #[test]
    fn search_inverse_small_grids() {
        for (a, b) in [(3, 5), (4, 7), (5, 8)] {
            for p in enumerate_paths(a, b).unwrap() {
                let found = zeta_inverse_search(&zeta(&p)).unwrap();
                assert_eq!(found.path, p);
                assert_eq!(found.preimages, 1);
            }
        }
    }

    #[test]
    fn bounce_corners() {
        let q = DyckPath::parse(3, 7, "NNENEEEEEE").unwrap();
        let bp = initial_bounce(&q).unwrap();
        assert_eq!(bp.v.len(), 3);
        assert_eq!(bp.h.len(), 2);
        assert_eq!(bp.corners().len(), 6);
    }
}
