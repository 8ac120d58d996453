mod common;

use proptest::prelude::*;
use sdyb::braid::{coloring_count_closure, BraidWord};
use sdyb::corpus;
use sdyb::magma::{check_quandle, check_rack, make_alexander_quandle, make_laver_table, permutations};
use sdyb::solution::{
    check_biquandle, check_birack, check_braided, count_biquandle_maps, entwining_check, guitar_inverse, guitar_map,
    make_flip, sideways, sigma_from_monoid, sigma_from_shelf, sigma_from_shelf_mirror, structure_rack, tuple_lower,
    tuple_raise,
};
use sdyb::{tuples, OpTable, SigmaTable};

fn biracks() -> Vec<SigmaTable> {
    corpus::birack_corpus().into_iter().map(|n| n.value).collect()
}

fn is_bijection(m: usize, f: impl Fn(usize) -> usize) -> bool {
    let mut seen = vec![false; m];
    (0..m).all(|x| !std::mem::replace(&mut seen[f(x)], true))
}

/// Reads the two-crossing diagram: `x` with `x_a = b`, then `a ◁ b = (a^x)_b`.
fn structure_oracle(s: &SigmaTable) -> OpTable {
    OpTable::from_fn(s.size(), |a, b| {
        let x = common::dot(s, a, b);
        let ax = s.apply(a, x).1;
        s.apply(b, ax).0
    })
    .unwrap()
}

#[test]
fn report_flags_match_definitions() {
    for s in corpus::all_sigmas(2).chain(biracks()) {
        let m = s.size();
        let r = check_birack(&s);
        let inj = is_bijection(m * m, |p| {
            let (x, y) = s.apply(p / m, p % m);
            x * m + y
        });
        let lnd = (0..m).all(|a| is_bijection(m, |b| s.apply(a, b).0));
        let rnd = (0..m).all(|b| is_bijection(m, |a| s.apply(a, b).1));
        assert_eq!(r.is_invertible, inj);
        assert_eq!(r.is_left_nondegenerate, lnd);
        assert_eq!(r.is_right_nondegenerate, rnd);
        assert_eq!(r.is_birack, r.is_braided && inj && lnd && rnd);
        assert!(!r.is_biquandle || r.is_birack);
        assert_eq!(r.t_map.is_some(), r.is_biquandle);
        assert_eq!(r.first_violation.is_some(), !r.is_biquandle);
    }
}

#[test]
fn biquandle_maps_match_permutation_search() {
    for s in biracks() {
        let m = s.size();
        let valid: Vec<Vec<usize>> =
            permutations(m).into_iter().filter(|t| (0..m).all(|a| s.apply(t[a], a) == (t[a], a))).collect();
        assert_eq!(count_biquandle_maps(&s).unwrap(), valid.len());
        match check_biquandle(&s).unwrap() {
            Some(t) => assert!(valid.contains(&t)),
            None => assert!(valid.is_empty()),
        }
        let rack = structure_rack(&s).unwrap();
        assert_eq!(check_quandle(&rack).holds(), !valid.is_empty());
    }
    let laver = sigma_from_shelf(&make_laver_table(1).unwrap());
    assert!(check_biquandle(&laver).is_err());
    assert_eq!(check_biquandle(&make_flip(3).unwrap()).unwrap(), Some(vec![0, 1, 2]));
}

#[test]
fn structure_rack_theorems() {
    for s in biracks() {
        let rack = structure_rack(&s).unwrap();
        assert_eq!(rack, structure_oracle(&s));
        assert!(check_rack(&rack).holds());
        let involutive = tuples(s.size(), 2).all(|t| {
            let (x, y) = s.apply(t[0], t[1]);
            s.apply(x, y) == (t[0], t[1])
        });
        let trivial = (0..s.size()).all(|a| (0..s.size()).all(|b| rack.op(a, b) == a));
        assert_eq!(trivial, involutive);
    }
    for r in corpus::rack_corpus() {
        assert_eq!(structure_rack(&sigma_from_shelf(&r.value)).unwrap(), r.value, "{}", r.name);
    }
    let a3 = make_alexander_quandle(3, 2).unwrap();
    assert_eq!(sigma_from_shelf(&a3).apply(0, 1), (1, 2));
    assert!(structure_rack(&sigma_from_shelf(&make_laver_table(1).unwrap())).is_err());
}

#[test]
fn sideways_consistency() {
    for s in biracks() {
        let side = sideways(&s).unwrap();
        for a in 0..s.size() {
            for b in 0..s.size() {
                assert_eq!(side.dot(a, b), common::dot(&s, a, b));
                assert_eq!(s.apply(a, side.dot(a, b)), (b, side.wdot(a, b)));
            }
        }
    }
    let flip = sideways(&make_flip(3).unwrap()).unwrap();
    assert!((0..3).all(|a| (0..3).all(|b| flip.dot(a, b) == b && flip.wdot(a, b) == a)));
    for r in corpus::rack_corpus() {
        let side = sideways(&sigma_from_shelf(&r.value)).unwrap();
        assert_eq!(side.wdot_table(), r.value);
    }
}

#[test]
fn tuple_maps_match_recursive_definitions() {
    for s in corpus::braided_corpus().into_iter().map(|n| n.value) {
        let m = s.size();
        for k in 0..=3 {
            for t in tuples(m, k) {
                for w in 0..m {
                    assert_eq!(tuple_lower(&s, &t, w), common::lower_tuple(&s, &t, w));
                    assert_eq!(tuple_raise(&s, &t, w), common::raise_tuple(&s, &t, w));
                }
            }
        }
    }
    let flip = make_flip(3).unwrap();
    let sd = sigma_from_shelf(&make_alexander_quandle(3, 2).unwrap());
    for t in tuples(3, 3) {
        assert_eq!(tuple_lower(&flip, &t, 1), t);
        assert_eq!(tuple_raise(&flip, &t, 2), t);
        assert_eq!(tuple_lower(&sd, &t, 2), t);
    }
}

#[test]
fn guitar_examples() {
    let z2 = OpTable::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
    let ass = sigma_from_monoid(&z2, 0).unwrap();
    assert_eq!(ass.apply(1, 1), (0, 0));
    assert!(!check_birack(&ass).is_invertible);
    assert_eq!(guitar_map(&ass, &[1, 1, 1]), vec![1, 0, 1]);
    assert!(sigma_from_monoid(&z2, 1).is_err());

    let mirror = sigma_from_shelf_mirror(&make_alexander_quandle(3, 2).unwrap());
    assert_eq!(guitar_map(&mirror, &[0, 1, 2]), vec![0, 2, 0]);

    let degenerate = SigmaTable::from_fn(2, |a, _| (0, a)).unwrap();
    assert!(guitar_inverse(&degenerate, &[0, 0]).is_err());
}

#[test]
fn guitar_is_a_bijection_and_entwines() {
    for s in biracks() {
        for n in 1..=4 {
            let mut images: Vec<Vec<usize>> = tuples(s.size(), n).map(|t| guitar_map(&s, &t)).collect();
            for (t, j) in tuples(s.size(), n).zip(&images) {
                assert_eq!(guitar_inverse(&s, j).unwrap(), t);
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), s.size().pow(n as u32));
        }
        for n in 2..=3 {
            assert!(entwining_check(&s, n).unwrap().holds());
        }
    }
    assert!(entwining_check(&make_flip(2).unwrap(), 5).is_err());
}

#[test]
fn corrupted_sigma_breaks_entwining() {
    let s = sigma_from_shelf(&make_alexander_quandle(3, 2).unwrap());
    // swap two outputs in one row: rows stay bijective, the braid relation breaks
    let bad = s.with_entry(0, 1, s.apply(0, 2)).unwrap().with_entry(0, 2, s.apply(0, 1)).unwrap();
    assert!(!check_braided(&bad).holds());
    let witness = entwining_check(&bad, 3).unwrap().witness.expect("entwining must fail");
    assert_ne!(witness.lhs, witness.rhs);
}

fn birack_strategy() -> impl Strategy<Value = SigmaTable> {
    prop::sample::select(biracks())
}

fn word_strategy(strands: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec(prop_oneof![1..=g, -g..=-1], 0..=6)
        .prop_map(move |letters| BraidWord::new(strands, letters).unwrap())
}

proptest! {
    #[test]
    fn fixed_points_agree_with_structure_rack(s in birack_strategy(), beta in (2usize..=3).prop_flat_map(word_strategy)) {
        let prime = sigma_from_shelf(&structure_rack(&s).unwrap());
        prop_assert_eq!(coloring_count_closure(&s, &beta).unwrap(), coloring_count_closure(&prime, &beta).unwrap());
    }

    #[test]
    fn sigma_sd_birack_iff_rack(cells in prop::collection::vec(0usize..3, 9)) {
        let op = OpTable::new(3, cells).unwrap();
        let r = check_birack(&sigma_from_shelf(&op));
        prop_assert_eq!(r.is_birack, check_rack(&op).holds());
    }
}
