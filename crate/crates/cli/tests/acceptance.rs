//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::collections::HashMap;
use std::process::Command;
use std::time::{Duration, Instant};

use rational_dyck::bounce::{initial_bounce, zeta_inverse_fuss};
use rational_dyck::core_partition::{
    a_columns_skew, anderson, boundary_boxes, core_conjugate, row_length_filling, skew_length_core,
    skew_length_core_swapped,
};
use rational_dyck::inversion::{
    corner_area_difference, exceedances_check, inverse_table, level1_point, pair_gamma, square_gamma_shaded,
    zeta_inverse_level1,
};
use rational_dyck::statistics::{area, coarea, delta, dinv, skew_length, skew_length_peaks_valleys};
use rational_dyck::verify::{bijectivity_report, coprime_pairs, qcatalan_check, qt_symmetry_check, RankVariant};
use rational_dyck::zeta::{eta_with, lambda, mu, skew_length_lasers, zeta_with, Method};
use rational_dyck::{chi, enumerate_paths, eta, iota, zeta, zeta_inverse, DyckPath, Partition};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn paths(a: usize, b: usize) -> Result<Vec<DyckPath>, String> {
    enumerate_paths(a, b).map_err(|e| e.to_string())
}

fn running_example() -> Outcome {
    let p = DyckPath::parse(5, 8, "NNNENEEENEEEE").map_err(|e| e.to_string())?;
    eq("L(P)", p.reading_word(), vec![0, 8, 16, 24, 19, 27, 22, 17, 12, 20, 15, 10, 5])?;
    eq("M(P)", p.reverse_reading_word(), vec![0, 5, 10, 15, 20, 12, 17, 22, 27, 19, 24, 16, 8])?;
    eq("sigma", p.sigma().one_line().to_vec(), vec![1, 3, 7, 12, 9, 13, 11, 8, 5, 10, 6, 4, 2])?;
    eq("tau", p.tau().one_line().to_vec(), vec![1, 2, 4, 6, 10, 5, 8, 11, 13, 9, 12, 7, 3])?;
    eq("gamma", p.gamma().one_line().to_vec(), vec![3, 1, 7, 2, 10, 4, 12, 5, 13, 6, 8, 9, 11])?;
    let core = anderson(&p);
    eq("core", core.parts().parts().to_vec(), vec![6, 4, 3, 2, 2, 1, 1, 1, 1])?;
    let sl = [
        skew_length_core(&core),
        skew_length_core_swapped(&core),
        a_columns_skew(&core),
        skew_length_peaks_valleys(&p),
        skew_length_lasers(&p),
    ];
    eq("sl by five methods", sl, [10; 5])?;
    eq("row-length total", row_length_filling(&p).total(), 21)?;
    eq("boundaries", (boundary_boxes(&core, 5), boundary_boxes(&core, 8)), (13, 17))?;
    eq("lambda", lambda(&p), Partition::new(vec![4, 3, 2, 1, 0]).unwrap())?;
    eq("mu", mu(&p), Partition::new(vec![3, 2, 2, 1, 1, 1, 0, 0]).unwrap())?;
    let q = zeta(&p);
    let r = eta(&p);
    eq("zeta", q.to_string(), "NENENENENEEEE".into())?;
    eq("eta", r.to_string(), "NNENEENEEENEE".into())?;
    eq("conjugate hooks", core_conjugate(&core).leading_hooks().to_vec(), vec![14, 9, 6, 4, 2, 1])?;
    eq("iota", iota(&q, &r).map_err(|e| e.to_string())?, p.clone())?;
    eq("delta", delta(&p), 5)?;
    Ok("all running-example values reproduced".into())
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn enumeration_counts() -> Outcome {
    let mut grids = 0;
    for (a, b) in coprime_pairs(16) {
        let n = paths(a, b)?.len() as u128;
        let s = (a + b) as u128;
        eq(&format!("({a},{b})"), n, binomial(s, a as u128) / s)?;
        grids += 1;
    }
    Ok(format!("{grids} grids up to a+b=16"))
}

fn four_way_agreement() -> Outcome {
    let mut n = 0;
    for (a, b) in coprime_pairs(12) {
        for p in paths(a, b)? {
            let (q, r) = (zeta(&p), eta(&p));
            for m in Method::ALL {
                eq(&format!("zeta {m} {p}"), zeta_with(&p, m).ok(), Some(q.clone()))?;
                eq(&format!("eta {m} {p}"), eta_with(&p, m).ok(), Some(r.clone()))?;
            }
            eq(&format!("eta = zeta conj {p}"), zeta(&p.conjugate()), r.clone())?;
            eq(&format!("zeta flip {p}"), zeta(&p.flip()), r.flip())?;
            eq(&format!("eta flip {p}"), eta(&p.flip()), q.flip())?;
            n += 1;
        }
    }
    Ok(format!("{n} paths"))
}

fn pair_inverse() -> Outcome {
    let mut n = 0;
    for (a, b) in coprime_pairs(12) {
        for p in paths(a, b)? {
            let (q, r) = (zeta(&p), eta(&p));
            eq(&format!("iota {p}"), iota(&q, &r).ok(), Some(p.clone()))?;
            eq(&format!("exceedances {p}"), exceedances_check(&q, &r).ok(), Some(true))?;
            n += 1;
        }
    }
    Ok(format!("{n} pairs"))
}

fn injectivity() -> Outcome {
    let mut images = 0;
    for (a, b) in coprime_pairs(14) {
        let report = bijectivity_report(a, b, a + b <= 11).map_err(|e| e.to_string())?;
        ensure(report.injective, || format!("({a},{b}) collision {:?}", report.collisions.first()))?;
        if let Some(u) = &report.unique_pair {
            ensure(u.histogram.keys().all(|&k| k == 1), || format!("({a},{b}) partners {:?}", u.histogram))?;
        }
        images += report.images;
    }
    // the CLI reports a genuine counterexample (path rank in the q-Catalan
    // identity) with exit code 2 and a witness, and passes on injectivity
    let bin = env!("CARGO_BIN_EXE_dyck");
    let ok = Command::new(bin).args(["verify", "bijective", "--max-sum", "9"]).output().map_err(|e| e.to_string())?;
    eq("bijective exit", ok.status.code(), Some(0))?;
    let bad = Command::new(bin)
        .args(["--json", "verify", "qcatalan", "--a", "3", "--b", "4", "--rank", "path"])
        .output()
        .map_err(|e| e.to_string())?;
    eq("witness exit", bad.status.code(), Some(2))?;
    ensure(String::from_utf8_lossy(&bad.stdout).contains("\"witness\""), || "no witness printed".into())?;
    Ok(format!("{images} distinct images up to a+b=14; unique partner up to a+b=11; CLI exit 2 on witness"))
}

fn q_catalan() -> Outcome {
    let mut n = 0;
    for (a, b) in coprime_pairs(12) {
        let c = qcatalan_check(a, b, RankVariant::Core).map_err(|e| e.to_string())?;
        ensure(c.holds(), || format!("({a},{b}): f = {} but sum = {}", c.f, c.g))?;
        ensure(qt_symmetry_check(a, b).map_err(|e| e.to_string())?, || format!("({a},{b}) not q,t-symmetric"))?;
        n += 1;
    }
    Ok(format!("{n} grids, exact division throughout"))
}

fn square_case() -> Outcome {
    let mut last = 0;
    for n in 1..=7 {
        let all = paths(n, n + 1)?;
        for q in &all {
            let rev = q.reverse().map_err(|e| e.to_string())?;
            eq(&format!("chi {q}"), chi(q).ok(), Some(rev.clone()))?;
            eq(&format!("inverse {q}"), zeta_inverse(q).ok(), iota(q, &rev).ok())?;
            eq(&format!("shaded gamma {q}"), square_gamma_shaded(q).ok(), pair_gamma(q, &rev).ok())?;
        }
        last = all.len();
    }
    eq("paths at n=7", last, 429)?;
    Ok("n <= 7, 429 paths at n=7".into())
}

fn level_one() -> Outcome {
    let mut n = 0;
    for (a, b) in coprime_pairs(13) {
        let Ok((x, y)) = level1_point(a, b) else { continue };
        let table = inverse_table(a, b).map_err(|e| e.to_string())?;
        for q in paths(a, b)?.into_iter().filter(|q| q.visits(x, y)) {
            eq(&format!("level-1 {q}"), zeta_inverse_level1(&q).ok().as_ref(), table.get(&q))?;
            n += 1;
        }
    }
    for (a, b) in [(5, 8), (5, 13)] {
        for x in 0..=b {
            for y in 0..=a {
                let level = (y * b) as i64 - (x * a) as i64;
                eq(&format!("corner ({x},{y}) in ({a},{b})"), corner_area_difference(a, b, x, y), level)?;
            }
        }
    }
    Ok(format!("{n} level-1 paths; corner areas on (5,8) and (5,13)"))
}

fn fuss_and_bounce() -> Outcome {
    let mut fuss = 0;
    for a in 1..=5 {
        for k in 1.. {
            let b = a * k + 1;
            if a + b > 16 {
                break;
            }
            for p in paths(a, b)? {
                let q = zeta(&p);
                let (back, _) = zeta_inverse_fuss(&q).map_err(|e| format!("{p}: {e}"))?;
                eq(&format!("fuss {p}"), back, p.clone())?;
                if a > 1 {
                    let bp = initial_bounce(&q).map_err(|e| e.to_string())?;
                    eq(&format!("fuss delta {p}"), delta(&p), bp.delta_lower())?;
                }
                fuss += 1;
            }
        }
    }
    let mut bounded = 0;
    for (a, b) in coprime_pairs(13).into_iter().filter(|&(a, b)| b % a != 0) {
        for p in paths(a, b)? {
            let bp = initial_bounce(&zeta(&p)).map_err(|e| e.to_string())?;
            let d = delta(&p);
            ensure(bp.delta_lower() <= d && d <= bp.delta_upper(), || {
                format!("{p}: delta {d} outside {}..={}", bp.delta_lower(), bp.delta_upper())
            })?;
            bounded += 1;
        }
    }
    Ok(format!("{fuss} Fuss inverses; bounds on {bounded} paths"))
}

fn statistic_transport() -> Outcome {
    let mut n = 0;
    for (a, b) in coprime_pairs(12) {
        for p in paths(a, b)? {
            let q = zeta(&p);
            let sl = skew_length(&p);
            eq(&format!("sl = coarea {p}"), sl, coarea(&q))?;
            eq(&format!("dinv = area {p}"), dinv(&p), area(&q))?;
            eq(&format!("sl conj/flip {p}"), (skew_length(&p.conjugate()), skew_length(&p.flip())), (sl, sl))?;
            n += 1;
        }
    }
    Ok(format!("{n} paths"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("running example", running_example, Duration::from_secs(1)),
        ("enumeration counts", enumeration_counts, Duration::from_secs(30)),
        ("zeta/eta agreement and symmetries", four_way_agreement, Duration::from_secs(60)),
        ("pair map inverts zeta and eta", pair_inverse, Duration::from_secs(60)),
        ("injectivity and unique partner", injectivity, Duration::from_secs(120)),
        ("q-Catalan and q,t-symmetry", q_catalan, Duration::from_secs(120)),
        ("square case", square_case, Duration::from_secs(120)),
        ("level-1 recursion and corner areas", level_one, Duration::from_secs(120)),
        ("Fuss inverse and bounce bounds", fuss_and_bounce, Duration::from_secs(120)),
        ("statistic transport", statistic_transport, Duration::from_secs(120)),
    ];
    let mut results = HashMap::new();
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => Err(format!("{msg}, but took {took:.2?} (limit {limit:?})")),
            other => other,
        };
        let n = i + 1;
        match &outcome {
            Ok(msg) => println!("PASS criterion {n}: {name}: {msg} [{took:.2?}]"),
            Err(msg) => println!("FAIL criterion {n}: {name}: {msg} [{took:.2?}]"),
        }
        results.insert(n, outcome.is_ok());
    }
    if results.values().any(|ok| !ok) {
        std::process::exit(1);
    }
}
