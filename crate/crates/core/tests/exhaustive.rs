//! Exhaustive checks over every path of the small grids.

use rational_dyck::bounce::{
    conj_predecessor, conj_predecessor_gamma, zeta_inverse_fuss, zeta_inverse_search, zeta_predecessor,
};
use rational_dyck::core_partition::{anderson, core_conjugate, row_length_filling};
use rational_dyck::inversion::{
    chi_level1, corner_area_difference, exceedances_check, inverse_table, level1_point, split_dims,
    zeta_inverse_level1,
};
use rational_dyck::statistics::{area, delta, skew_length};
use rational_dyck::verify::{coprime_pairs, qcatalan_check, RankVariant};
use rational_dyck::zeta::laser_filling;
use rational_dyck::{chi, enumerate_paths, eta, iota, zeta, DyckPath, Partition};

fn all_paths(max_sum: usize) -> impl Iterator<Item = DyckPath> {
    coprime_pairs(max_sum)
        .into_iter()
        .flat_map(|(a, b)| enumerate_paths(a, b).unwrap())
}

#[test]
fn permutation_round_trip() {
    for p in all_paths(12) {
        assert_eq!(DyckPath::from_permutation(&p.sigma(), p.a(), p.b()).unwrap(), p);
    }
}

#[test]
fn reverse_is_an_involution_in_the_square_case() {
    for n in 1..8 {
        for p in enumerate_paths(n, n + 1).unwrap() {
            assert_eq!(p.reverse().unwrap().reverse().unwrap(), p);
        }
    }
}

#[test]
fn predecessor_steps_down() {
    for p in all_paths(12) {
        if let Ok(q) = p.predecessor() {
            assert_eq!(area(&q) + 1, area(&p), "{p}");
            assert!(skew_length(&q) < skew_length(&p), "{p}");
        }
    }
}

#[test]
fn core_side_identities() {
    for p in all_paths(12) {
        let k = anderson(&p);
        assert_eq!(anderson(&p.conjugate()), core_conjugate(&k), "{p}");
        // each box under the path carries one row length of the core
        let filling = row_length_filling(&p);
        let mut values: Vec<usize> = filling.rows().iter().flatten().copied().filter(|&v| v > 0).collect();
        values.sort_unstable_by(|x, y| y.cmp(x));
        assert_eq!(values, k.parts().trimmed().parts().to_vec(), "{p}");
        assert_eq!(filling.total(), k.size());
    }
}

#[test]
fn laser_sums_sort_to_lambda_and_mu() {
    for p in all_paths(12) {
        let f = laser_filling(&p);
        assert_eq!(f.total(), skew_length(&p));
        let by_rows = Partition::from_unsorted(f.row_sums());
        let by_cols = Partition::from_unsorted(f.column_sums());
        assert_eq!(by_rows.trimmed(), f.lambda().trimmed(), "{p}");
        assert_eq!(by_cols.trimmed(), f.mu().trimmed(), "{p}");
    }
}

#[test]
fn star_product_concatenates_zeta() {
    for (a, b) in coprime_pairs(12) {
        let Ok((a1, b1, a2, b2)) = split_dims(a, b) else { continue };
        for lower in enumerate_paths(a1, b1).unwrap() {
            for upper in enumerate_paths(a2, b2).unwrap() {
                let star = lower.star_product(&upper).unwrap();
                let mut steps = zeta(&lower).steps().to_vec();
                steps.extend_from_slice(zeta(&upper).steps());
                assert_eq!(zeta(&star).steps(), &steps[..], "{lower} * {upper}");
            }
        }
    }
}

#[test]
fn level1_recursion_matches_table() {
    for (a, b) in coprime_pairs(13) {
        let Ok((x, y)) = level1_point(a, b) else { continue };
        let table = inverse_table(a, b).unwrap();
        for q in enumerate_paths(a, b).unwrap().into_iter().filter(|q| q.visits(x, y)) {
            assert_eq!(&zeta_inverse_level1(&q).unwrap(), &table[&q], "{q}");
            assert_eq!(chi_level1(&q).unwrap(), chi(&q).unwrap(), "{q}");
        }
    }
}

#[test]
fn chi_is_an_area_preserving_involution() {
    for q in all_paths(11) {
        let c = chi(&q).unwrap();
        assert_eq!(area(&c), area(&q), "{q}");
        assert_eq!(chi(&c).unwrap(), q, "{q}");
    }
}

#[test]
fn pair_map_inverts_zeta_and_eta() {
    for p in all_paths(12) {
        let (q, r) = (zeta(&p), eta(&p));
        assert_eq!(iota(&q, &r).unwrap(), p);
        assert!(exceedances_check(&q, &r).unwrap(), "{p}");
    }
}

#[test]
fn corner_areas_equal_levels() {
    for (a, b) in coprime_pairs(13) {
        for x in 0..=b {
            for y in 0..=a {
                assert_eq!(corner_area_difference(a, b, x, y), (y * b) as i64 - (x * a) as i64);
            }
        }
    }
}

#[test]
fn zeta_predecessor_square() {
    for p in all_paths(12) {
        let Ok(pred) = conj_predecessor(&p) else {
            assert_eq!(p, DyckPath::lowest(p.a(), p.b()).unwrap());
            continue;
        };
        assert_eq!(conj_predecessor_gamma(&p).unwrap(), pred, "{p}");
        assert_eq!(zeta_predecessor(&zeta(&p), delta(&p)).unwrap(), zeta(&pred), "{p}");
    }
}

#[test]
fn fuss_inverse_recovers_every_path() {
    for (a, k) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (5, 1)] {
        for p in enumerate_paths(a, a * k + 1).unwrap() {
            assert_eq!(zeta_inverse_fuss(&zeta(&p)).unwrap().0, p);
        }
    }
}

#[test]
fn search_inverse_recovers_every_path() {
    for (a, b) in coprime_pairs(13).into_iter().filter(|&(a, b)| b % a != 0) {
        for p in enumerate_paths(a, b).unwrap() {
            let found = zeta_inverse_search(&zeta(&p)).unwrap();
            assert_eq!(found.path, p);
            assert_eq!(found.preimages, 1, "{p}");
        }
    }
}

#[test]
fn q_catalan_never_divides_inexactly() {
    for (a, b) in coprime_pairs(12) {
        assert!(qcatalan_check(a, b, RankVariant::Core).unwrap().holds(), "({a},{b})");
    }
}
