use clap::ValueEnum;
use rational_dyck::bounce::{initial_bounce, zeta_inverse_fuss, zeta_inverse_search};
use rational_dyck::inversion::{
    chi_level1, exceedances_check, inverse_table, level1_point, pair_gamma, square_gamma_shaded,
    zeta_inverse_level1,
};
use rational_dyck::statistics::{delta, skew_length};
use rational_dyck::verify::{bijectivity_report, coprime_pairs, qcatalan_check, qt_symmetry_check, RankVariant};
use rational_dyck::zeta::{eta_with, zeta_with, Method};
use rational_dyck::{
    chi, enumerate_paths, eta, iota, rational_catalan_number, zeta, zeta_inverse, DyckPath, Error,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{print_json, Failure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Number of paths equals the rational Catalan number
    Count,
    /// All zeta and eta methods agree; conjugate and flip relations
    Maps,
    /// The pair map inverts (zeta, eta); exceedance property
    Pair,
    /// Zeta is injective, transports sl and dinv, and each image has one partner
    Bijective,
    /// q-Catalan generating function and q,t-symmetry
    Qcatalan,
    /// Square case: chi is reversal, inverse from (Q, reverse Q), shaded gamma
    Square,
    /// Level-1 recursion against the full inverse table
    Level1,
    /// Fuss and search inverses, bounce bounds on delta
    Bounce,
    /// Every check above
    All,
}

impl Check {
    const EACH: [Check; 8] = [
        Check::Count,
        Check::Maps,
        Check::Pair,
        Check::Bijective,
        Check::Qcatalan,
        Check::Square,
        Check::Level1,
        Check::Bounce,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::Count => "count",
            Check::Maps => "maps",
            Check::Pair => "pair",
            Check::Bijective => "bijective",
            Check::Qcatalan => "qcatalan",
            Check::Square => "square",
            Check::Level1 => "level1",
            Check::Bounce => "bounce",
            Check::All => "all",
        }
    }

    fn applies(self, a: usize, b: usize) -> bool {
        match self {
            Check::Square => b == a + 1,
            Check::Level1 => a > 1 && b > 1,
            Check::Bounce => !b.is_multiple_of(a),
            _ => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Witness,
    Disagreement,
}

#[derive(Debug, Serialize)]
struct Finding {
    kind: Kind,
    detail: Value,
}

#[derive(Debug, Serialize)]
struct GridReport {
    check: Check,
    a: usize,
    b: usize,
    checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    summary: Option<Value>,
    findings: Vec<Finding>,
}

impl GridReport {
    fn new(check: Check, a: usize, b: usize) -> Self {
        GridReport { check, a, b, checked: 0, summary: None, findings: Vec::new() }
    }

    fn witness(&mut self, detail: Value) {
        self.findings.push(Finding { kind: Kind::Witness, detail });
    }

    fn disagreement(&mut self, detail: Value) {
        self.findings.push(Finding { kind: Kind::Disagreement, detail });
    }

    /// Sorts a library error into a witness or a cross-check disagreement.
    fn error(&mut self, p: &DyckPath, e: Error) {
        let detail = json!({ "path": p, "error": e.to_string() });
        match e {
            Error::MethodDisagreement { .. } | Error::RoundTripFailure { .. } | Error::Internal(_) => {
                self.disagreement(detail)
            }
            _ => self.witness(detail),
        }
    }
}

fn count(a: usize, b: usize) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Count, a, b);
    let n = enumerate_paths(a, b)?.len();
    let expected = rational_catalan_number(a, b);
    r.checked = n;
    if n as u128 != expected {
        r.witness(json!({ "enumerated": n, "expected": expected.to_string() }));
    }
    Ok(r)
}

fn maps(a: usize, b: usize) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Maps, a, b);
    for p in enumerate_paths(a, b)? {
        r.checked += 1;
        let (q, e) = (zeta(&p), eta(&p));
        for m in Method::ALL {
            for (name, image, expected) in [("zeta", zeta_with(&p, m), &q), ("eta", eta_with(&p, m), &e)] {
                match image {
                    Ok(img) if &img == expected => {}
                    Ok(img) => r.disagreement(json!({ "path": p, "map": name, "method": m, "image": img, "cores": expected })),
                    Err(err) => r.error(&p, err),
                }
            }
        }
        if zeta(&p.conjugate()) != e {
            r.witness(json!({ "path": p, "relation": "eta(P) = zeta(P^c)" }));
        }
        if zeta(&p.flip()) != e.flip() || eta(&p.flip()) != q.flip() {
            r.witness(json!({ "path": p, "relation": "flip" }));
        }
        let sl = skew_length(&p);
        if sl != skew_length(&p.conjugate()) || sl != skew_length(&p.flip()) {
            r.witness(json!({ "path": p, "relation": "sl(P) = sl(P^c) = sl(flip P)" }));
        }
    }
    Ok(r)
}

fn pair(a: usize, b: usize) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Pair, a, b);
    for p in enumerate_paths(a, b)? {
        r.checked += 1;
        let (q, e) = (zeta(&p), eta(&p));
        match iota(&q, &e) {
            Ok(back) if back == p => {}
            Ok(back) => r.witness(json!({ "path": p, "recovered": back })),
            Err(err) => r.error(&p, err),
        }
        match exceedances_check(&q, &e) {
            Ok(true) => {}
            Ok(false) => r.witness(json!({ "path": p, "relation": "exceedances" })),
            Err(err) => r.error(&p, err),
        }
    }
    Ok(r)
}

fn bijective(a: usize, b: usize) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Bijective, a, b);
    let report = bijectivity_report(a, b, true)?;
    r.checked = report.paths;
    for c in &report.collisions {
        r.witness(json!({ "collision": c }));
    }
    for p in &report.transport_failures {
        r.witness(json!({ "path": p, "relation": "sl = coarea(zeta), dinv = area(zeta)" }));
    }
    if let Some(u) = &report.unique_pair {
        for v in &u.violations {
            r.witness(json!({ "partners": v }));
        }
        r.summary = Some(json!({ "images": report.images, "partner_histogram": u.histogram }));
    }
    Ok(r)
}

fn qcatalan(a: usize, b: usize, rank: RankVariant) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Qcatalan, a, b);
    let c = qcatalan_check(a, b, rank)?;
    r.checked = c.enumerated;
    if !c.holds() {
        r.witness(json!({ "rank": rank, "f": c.f, "g": c.g, "nonnegative": c.nonnegative }));
    }
    if !qt_symmetry_check(a, b)? {
        r.witness(json!({ "relation": "q,t-symmetry" }));
    }
    r.summary = Some(json!({ "f": c.f }));
    Ok(r)
}

fn square(a: usize, b: usize) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Square, a, b);
    for q in enumerate_paths(a, b)? {
        r.checked += 1;
        let rev = q.reverse()?;
        let outcome = (|| -> Result<Option<&'static str>, Error> {
            if chi(&q)? != rev {
                return Ok(Some("chi(Q) = reverse(Q)"));
            }
            if zeta_inverse(&q)? != iota(&q, &rev)? {
                return Ok(Some("zeta^-1(Q) = iota(Q, reverse Q)"));
            }
            if square_gamma_shaded(&q)? != pair_gamma(&q, &rev)? {
                return Ok(Some("shaded gamma = pair gamma"));
            }
            Ok(None)
        })();
        match outcome {
            Ok(None) => {}
            Ok(Some(rel)) => r.witness(json!({ "path": q, "relation": rel })),
            Err(err) => r.error(&q, err),
        }
    }
    Ok(r)
}

fn level1(a: usize, b: usize) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Level1, a, b);
    let (x, y) = level1_point(a, b)?;
    let table = inverse_table(a, b)?;
    for q in enumerate_paths(a, b)?.into_iter().filter(|q| q.visits(x, y)) {
        r.checked += 1;
        match (zeta_inverse_level1(&q), chi_level1(&q), chi(&q)) {
            (Ok(p), Ok(c1), Ok(c)) => {
                if table.get(&q) != Some(&p) {
                    r.witness(json!({ "path": q, "level1": p, "table": table.get(&q) }));
                }
                if c1 != c {
                    r.witness(json!({ "path": q, "chi_level1": c1, "chi": c }));
                }
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => r.error(&q, e),
        }
    }
    Ok(r)
}

fn bounce(a: usize, b: usize) -> Result<GridReport, Error> {
    let mut r = GridReport::new(Check::Bounce, a, b);
    let fuss = b % a == 1;
    let mut ambiguous = 0usize;
    for p in enumerate_paths(a, b)? {
        r.checked += 1;
        let q = zeta(&p);
        let d = delta(&p);
        let bp = initial_bounce(&q)?;
        if d < bp.delta_lower() || d > bp.delta_upper() || (fuss && d != bp.delta_lower()) {
            r.witness(json!({ "path": p, "delta": d, "window": [bp.delta_lower(), bp.delta_upper()] }));
        }
        let found = if fuss {
            zeta_inverse_fuss(&q).map(|(path, _)| path)
        } else {
            zeta_inverse_search(&q).map(|s| {
                if s.preimages > 1 {
                    ambiguous += 1;
                }
                s.path
            })
        };
        match found {
            Ok(back) if back == p => {}
            Ok(back) => r.disagreement(json!({ "path": p, "recovered": back })),
            Err(err) => r.error(&p, err),
        }
    }
    r.summary = Some(json!({ "fuss": fuss, "multiple_preimages": ambiguous }));
    Ok(r)
}

fn run_one(check: Check, a: usize, b: usize, rank: RankVariant) -> Result<GridReport, Error> {
    match check {
        Check::Count => count(a, b),
        Check::Maps => maps(a, b),
        Check::Pair => pair(a, b),
        Check::Bijective => bijective(a, b),
        Check::Qcatalan => qcatalan(a, b, rank),
        Check::Square => square(a, b),
        Check::Level1 => level1(a, b),
        Check::Bounce => bounce(a, b),
        Check::All => unreachable!("expanded before dispatch"),
    }
}

pub fn verify(
    check: Check,
    max_sum: usize,
    grid: Option<(usize, usize)>,
    rank: RankVariant,
    jobs: usize,
    json: bool,
) -> Result<(), Failure> {
    let checks: Vec<Check> = if check == Check::All { Check::EACH.to_vec() } else { vec![check] };
    let grids = match grid {
        Some(g) => vec![g],
        None => coprime_pairs(max_sum),
    };
    let tasks: Vec<(Check, usize, usize)> = checks
        .iter()
        .flat_map(|&c| grids.iter().filter(move |&&(a, b)| c.applies(a, b)).map(move |&(a, b)| (c, a, b)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    let reports: Vec<Result<GridReport, Error>> =
        pool.install(|| tasks.par_iter().map(|&(c, a, b)| run_one(c, a, b, rank)).collect());

    let mut witnesses = 0;
    let mut disagreements = 0;
    for report in reports {
        let report = report?;
        for f in &report.findings {
            match f.kind {
                Kind::Witness => witnesses += 1,
                Kind::Disagreement => disagreements += 1,
            }
        }
        if json {
            print_json(&report);
            continue;
        }
        let status = if report.findings.is_empty() { "ok" } else { "FAIL" };
        let mut line = format!("{status} {} ({},{}): {} checked", report.check.name(), report.a, report.b, report.checked);
        if let Some(s) = &report.summary {
            line.push_str(&format!(" {s}"));
        }
        println!("{line}");
        for f in &report.findings {
            println!("  {:?}: {}", f.kind, f.detail);
        }
    }
    if disagreements > 0 {
        Err(Failure::disagreement(format!("{disagreements} cross-check disagreement(s)")))
    } else if witnesses > 0 {
        Err(Failure::witness(format!("{witnesses} counterexample witness(es)")))
    } else {
        Ok(())
    }
}
