//! Exhaustive checks of the enumeration identities and conjectures over
//! every path of a grid.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inversion::iota;
use crate::path::{check_dims, enumerate_paths, rational_catalan_number, DyckPath};
use crate::poly::{qbinom, QPolynomial, QTPolynomial};
use crate::statistics::{area, coarea, core_rank, dinv, path_rank, skew_length};
use crate::zeta::zeta;

/// Coprime pairs `(a, b)` with `a, b >= 1` and `a + b <= max_sum`.
pub fn coprime_pairs(max_sum: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 2..=max_sum {
        for a in 1..s {
            let b = s - a;
            if a.gcd(&b) == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

/// `[a+b choose a]_q / [a+b]_q`.
pub fn rational_q_catalan(a: usize, b: usize) -> Result<QPolynomial> {
    check_dims(a, b)?;
    qbinom(a + b, a).div_exact(&QPolynomial::q_integer(a + b))
}

/// Which notion of rank enters the skew-length generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RankVariant {
    /// Rows of the core; equal to the area of the path.
    #[default]
    Core,
    /// Nonzero rows of the bounded partition.
    Path,
}

impl RankVariant {
    pub fn rank(self, p: &DyckPath) -> usize {
        match self {
            RankVariant::Core => core_rank(p),
            RankVariant::Path => path_rank(p),
        }
    }
}

impl fmt::Display for RankVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RankVariant::Core => "core",
            RankVariant::Path => "path",
        })
    }
}

impl FromStr for RankVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(RankVariant::Core),
            "path" => Ok(RankVariant::Path),
            other => Err(Error::Precondition(format!("unknown rank variant {other:?}"))),
        }
    }
}

/// `sum over paths of q^(sl + rank)`.
pub fn sl_rank_generating(a: usize, b: usize, variant: RankVariant) -> Result<QPolynomial> {
    let mut out = QPolynomial::zero();
    for p in enumerate_paths(a, b)? {
        out += &QPolynomial::monomial(skew_length(&p) + variant.rank(&p), BigInt::one());
    }
    Ok(out)
}

/// Counts, the q-Catalan polynomial, and the generating function side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QCatalanCheck {
    pub a: usize,
    pub b: usize,
    pub count: u128,
    pub enumerated: usize,
    pub f: String,
    pub g: String,
    pub equal: bool,
    pub nonnegative: bool,
}

impl QCatalanCheck {
    pub fn holds(&self) -> bool {
        self.equal && self.nonnegative && self.count == self.enumerated as u128
    }
}

pub fn qcatalan_check(a: usize, b: usize, variant: RankVariant) -> Result<QCatalanCheck> {
    let f = rational_q_catalan(a, b)?;
    let g = sl_rank_generating(a, b, variant)?;
    Ok(QCatalanCheck {
        a,
        b,
        count: rational_catalan_number(a, b),
        enumerated: enumerate_paths(a, b)?.len(),
        equal: f == g,
        nonnegative: f.has_nonnegative_coeffs(),
        f: f.to_string(),
        g: g.to_string(),
    })
}

/// `sum q^rank t^sl'` and `sum q^sl' t^rank` over all paths.
pub fn qt_catalan(a: usize, b: usize) -> Result<(QTPolynomial, QTPolynomial)> {
    let mut left = QTPolynomial::zero();
    let mut right = QTPolynomial::zero();
    for p in enumerate_paths(a, b)? {
        let rk = core_rank(&p) as u32;
        let slp = (p.max_area() - skew_length(&p)) as u32;
        left.add_term(rk, slp, BigInt::one());
        right.add_term(slp, rk, BigInt::one());
    }
    Ok((left, right))
}

pub fn qt_symmetry_check(a: usize, b: usize) -> Result<bool> {
    let (left, right) = qt_catalan(a, b)?;
    Ok(left == right)
}

/// Several paths with the same zeta image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub image: DyckPath,
    pub preimages: Vec<DyckPath>,
}

/// An image path admitting more than one partner `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub q: DyckPath,
    pub partners: Vec<DyckPath>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquePairSummary {
    /// Number of image paths by how many partners they admit.
    pub histogram: BTreeMap<usize, usize>,
    pub violations: Vec<PairWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectivityReport {
    pub a: usize,
    pub b: usize,
    pub paths: usize,
    pub images: usize,
    pub injective: bool,
    pub collisions: Vec<Collision>,
    /// Paths where `sl(P) != coarea(zeta(P))` or `dinv(P) != area(zeta(P))`.
    pub transport_failures: Vec<DyckPath>,
    pub unique_pair: Option<UniquePairSummary>,
}

impl BijectivityReport {
    pub fn holds(&self) -> bool {
        self.injective
            && self.transport_failures.is_empty()
            && self.unique_pair.as_ref().is_none_or(|u| u.violations.is_empty())
    }
}

/// Partners `R` for which `iota(q, R)` succeeds with matching images.
pub fn partners(q: &DyckPath, candidates: &[DyckPath]) -> Vec<DyckPath> {
    let target = area(q);
    candidates
        .iter()
        .filter(|r| area(r) == target && iota(q, r).is_ok())
        .cloned()
        .collect()
}

pub fn bijectivity_report(a: usize, b: usize, check_pairs: bool) -> Result<BijectivityReport> {
    let paths = enumerate_paths(a, b)?;
    let mut by_image: HashMap<DyckPath, Vec<DyckPath>> = HashMap::new();
    let mut transport_failures = Vec::new();
    for p in &paths {
        let q = zeta(p);
        if skew_length(p) != coarea(&q) || dinv(p) != area(&q) {
            transport_failures.push(p.clone());
        }
        by_image.entry(q).or_default().push(p.clone());
    }
    let mut collisions: Vec<Collision> = by_image
        .iter()
        .filter(|(_, pre)| pre.len() > 1)
        .map(|(q, pre)| Collision {
            image: q.clone(),
            preimages: pre.clone(),
        })
        .collect();
    collisions.sort_by(|x, y| x.image.cmp(&y.image));
    let unique_pair = check_pairs.then(|| {
        let mut images: Vec<&DyckPath> = by_image.keys().collect();
        images.sort();
        let mut histogram = BTreeMap::new();
        let mut violations = Vec::new();
        for q in images {
            let rs = partners(q, &paths);
            *histogram.entry(rs.len()).or_insert(0) += 1;
            if rs.len() > 1 {
                violations.push(PairWitness {
                    q: q.clone(),
                    partners: rs,
                });
            }
        }
        UniquePairSummary { histogram, violations }
    });
    Ok(BijectivityReport {
        a,
        b,
        paths: paths.len(),
        images: by_image.len(),
        injective: collisions.is_empty(),
        collisions,
        transport_failures,
        unique_pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_q_catalan() {
        assert_eq!(rational_q_catalan(2, 3).unwrap(), QPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(rational_q_catalan(1, 5).unwrap(), QPolynomial::one());
        assert!(rational_q_catalan(2, 4).is_err());
        let f = rational_q_catalan(5, 8).unwrap();
        assert_eq!(f.eval(&BigInt::one()), BigInt::from(99));
        assert_eq!(f.degree(), Some(28));
    }

    #[test]
    fn generating_function_matches() {
        for (a, b) in coprime_pairs(9) {
            let check = qcatalan_check(a, b, RankVariant::Core).unwrap();
            assert!(check.holds(), "({a},{b}): {} vs {}", check.f, check.g);
            assert!(qt_symmetry_check(a, b).unwrap(), "({a},{b})");
        }
    }

    #[test]
    fn report_on_running_grid() {
        let r = bijectivity_report(5, 8, false).unwrap();
        assert_eq!((r.paths, r.images), (99, 99));
        assert!(r.holds());
        let r = bijectivity_report(3, 5, true).unwrap();
        let u = r.unique_pair.unwrap();
        assert_eq!(u.histogram, BTreeMap::from([(1, 7)]));
    }

    #[test]
    fn coprime_pair_listing() {
        let pairs = coprime_pairs(5);
        assert!(pairs.contains(&(2, 3)) && pairs.contains(&(1, 1)) && !pairs.contains(&(2, 2)));
        assert_eq!(pairs.len(), 1 + 2 + 2 + 4);
    }
}
