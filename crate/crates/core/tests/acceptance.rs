//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use sdyb::braid::{parse_braid, rmove_invariance_suite, standard_word_pairs, BraidWord, Colorer, RMove};
use sdyb::cohomology::{
    chain_map_defect, cup_product, pullback_guitar, select_guitar_convention, CochainComplex, ComplexKind, Subcomplex,
    GUITAR_CONVENTION,
};
use sdyb::corpus::{
    all_racks, birack_corpus, braided_corpus, braided_sets_two, convention_selection_corpus, rack_corpus, shelf_corpus,
    two_element_operations,
};
use sdyb::magma::{check_shelf, dual_rack, make_alexander_quandle, make_trivial_quandle, OpTable};
use sdyb::solution::{
    check_biquandle, check_braided, entwining_check, guitar_inverse, guitar_map, sigma_from_monoid, sigma_from_shelf,
    structure_rack,
};
use sdyb::{Cochain, GroupInvariants, SigmaTable};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn fixed_points_oracle(s: &SigmaTable, word: &[i32], strands: usize) -> u64 {
    let inv = s.inverse();
    common::all_tuples(s.size(), strands)
        .into_iter()
        .filter(|t| {
            let mut x = t.clone();
            for &g in word {
                let i = g.unsigned_abs() as usize - 1;
                let (p, q) = if g > 0 { s.apply(x[i], x[i + 1]) } else { inv.as_ref().unwrap().apply(x[i], x[i + 1]) };
                x[i] = p;
                x[i + 1] = q;
            }
            &x == t
        })
        .count() as u64
}

fn c1_fig8() -> Outcome {
    let sigma = sigma_from_shelf(&make_trivial_quandle(2).unwrap());
    let phi = Cochain::new(2, 2, 2, vec![0, 1, 0, 0]).unwrap();
    let colorer = Colorer::new(&sigma);
    let twist = parse_braid("1 1", 2).unwrap();
    let id = BraidWord::identity(2).unwrap();
    let w = colorer.weight(&phi, &twist, &[0, 1]).unwrap().weight;
    ensure!(w == 1, "weight of \"1 1\" on (0,1) is {w}, expected 1");
    let w0 = colorer.weight(&phi, &id, &[0, 1]).unwrap().weight;
    ensure!(w0 == 0, "weight of the empty braid is {w0}");
    for t in common::all_tuples(2, 2) {
        ensure!(colorer.act(&twist, &t).unwrap() == colorer.act(&id, &t).unwrap(), "actions differ on {t:?}");
    }
    Ok(())
}

fn c2_counts() -> Outcome {
    let r3 = sigma_from_shelf(&make_alexander_quandle(3, 2).unwrap());
    let t3 = sigma_from_shelf(&make_trivial_quandle(3).unwrap());
    let cases = [(&r3, "1 1 1", 2, 9u64), (&r3, "1 -2 1 -2", 3, 3), (&t3, "1 1 1", 2, 3)];
    for (s, w, n, expected) in cases {
        let beta = parse_braid(w, n).unwrap();
        let got = Colorer::new(s).coloring_count_closure(&beta).unwrap();
        let oracle = fixed_points_oracle(s, beta.letters(), n);
        ensure!(got == expected && oracle == expected, "{w:?}: library {got}, oracle {oracle}, expected {expected}");
    }
    Ok(())
}

fn dd_zero(cx: &CochainComplex, max_k: usize) -> bool {
    (0..=max_k).all(|k| cx.full_matrix(k + 1).mul(&cx.full_matrix(k)).is_zero())
}

fn rows(m: &sdyb::cohomology::IntMatrix) -> Vec<Vec<i64>> {
    (0..m.nrows()).map(|i| m.row(i).to_vec()).collect()
}

fn c3_dd_zero() -> Outcome {
    let mut magmas: Vec<_> = rack_corpus();
    magmas.extend(shelf_corpus());
    for r in &magmas {
        let cx = CochainComplex::full(ComplexKind::Rack(r.value.clone())).unwrap();
        let max_k = if r.value.size() <= 4 { 3 } else { 2 };
        ensure!(dd_zero(&cx, max_k), "rack complex of {}", r.name);
        for k in 0..=2.min(max_k) {
            ensure!(
                rows(&cx.full_matrix(k)) == common::rack_matrix(&r.value, k),
                "rack matrix of {} differs from the oracle",
                r.name
            );
        }
    }
    for s in braided_corpus() {
        let cx = CochainComplex::full(ComplexKind::Braided(s.value.clone())).unwrap();
        ensure!(dd_zero(&cx, 3), "braided complex of {}", s.name);
        ensure!(
            rows(&cx.full_matrix(2)) == common::braided_matrix(&s.value, 2),
            "braided matrix of {} differs from the oracle",
            s.name
        );
    }
    for s in birack_corpus() {
        let cx = CochainComplex::full(ComplexKind::Birack(s.value.clone())).unwrap();
        ensure!(dd_zero(&cx, 3), "birack complex of {}", s.name);
        ensure!(
            rows(&cx.full_matrix(2)) == common::birack_matrix(&s.value, 2),
            "birack matrix of {} differs from the oracle",
            s.name
        );
    }
    Ok(())
}

fn table4_identity(op: &OpTable, f: &Cochain) -> bool {
    let n = f.modulus() as i64;
    common::all_tuples(op.size(), 3).iter().all(|t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let lhs = f.at(&[a, b]) + f.at(&[op.op(a, b), c]);
        let rhs = f.at(&[a, c]) + f.at(&[op.op(a, c), op.op(b, c)]);
        (lhs - rhs).rem_euclid(n) == 0
    })
}

fn c4_table4() -> Outcome {
    let pairs = standard_word_pairs(3);
    for r in all_racks(2) {
        let cx = CochainComplex::full(ComplexKind::Rack(r.value.clone())).unwrap();
        let sigma = sigma_from_shelf(&r.value);
        for n in [2u64, 3] {
            for vals in common::all_tuples(n as usize, 4) {
                let f = Cochain::new(2, 2, n, vals.iter().map(|&x| x as i64).collect()).unwrap();
                let cocycle = cx.differential(&f).unwrap().is_zero();
                ensure!(
                    cocycle == table4_identity(&r.value, &f),
                    "{}: d²f = 0 disagrees with the identity for {vals:?}",
                    r.name
                );
                let report = rmove_invariance_suite(&sigma, &f, &pairs).unwrap();
                ensure!(!report.failed(RMove::R2), "{}: R-II failure for {vals:?}", r.name);
                if cocycle {
                    ensure!(report.passed(), "{}: cocycle {vals:?} fails {:?}", r.name, report.failures.first());
                } else {
                    ensure!(report.failed(RMove::R3), "{}: non-cocycle {vals:?} passes every R-III pair", r.name);
                }
            }
        }
    }
    Ok(())
}

fn c5_equivalences() -> Outcome {
    for op in two_element_operations() {
        ensure!(
            check_braided(&sigma_from_shelf(&op)).holds() == check_shelf(&op).holds(),
            "σ_SD equivalence fails for {:?}",
            op.rows()
        );
        for unit in 0..2 {
            if op.is_left_unit(unit) {
                let s = sigma_from_monoid(&op, unit).unwrap();
                ensure!(
                    check_braided(&s).holds() == op.is_associative(),
                    "σ_Ass equivalence fails for {:?}",
                    op.rows()
                );
            }
        }
    }
    Ok(())
}

fn words_up_to(strands: usize, len: usize) -> Vec<BraidWord> {
    (0..=len).flat_map(|l| BraidWord::all_words(strands, l)).collect()
}

fn c6_structure_rack() -> Outcome {
    for r in all_racks(2).into_iter().chain(all_racks(3)) {
        ensure!(structure_rack(&sigma_from_shelf(&r.value)).unwrap() == r.value, "retraction fails for {}", r.name);
    }
    let words: Vec<Vec<BraidWord>> = (1..=3).map(|n| words_up_to(n, 6)).collect();
    for s in birack_corpus() {
        let sigma = &s.value;
        let rack = structure_rack(sigma).unwrap();
        ensure!(sdyb::magma::check_rack(&rack).holds(), "{}: structure operation is not a rack", s.name);
        let involutive = sigma.is_involutive();
        let trivial = (0..rack.size()).all(|a| (0..rack.size()).all(|b| rack.op(a, b) == a));
        ensure!(involutive == trivial, "{}: σ² = Id is {involutive} but triviality is {trivial}", s.name);
        let quandle = sdyb::magma::check_quandle(&rack).holds();
        let biquandle = check_biquandle(sigma).unwrap().is_some();
        ensure!(quandle == biquandle, "{}: quandle {quandle}, biquandle {biquandle}", s.name);
        let prime = sigma_from_shelf(&rack);
        let (c, cp) = (Colorer::new(sigma), Colorer::new(&prime));
        for beta in words.iter().flatten() {
            let (a, b) = (c.coloring_count_closure(beta).unwrap(), cp.coloring_count_closure(beta).unwrap());
            ensure!(
                a == b,
                "{}: fixed points {a} vs {b} for {:?} on {} strands",
                s.name,
                beta.to_string(),
                beta.strands()
            );
        }
    }
    Ok(())
}

fn c7_guitar() -> Outcome {
    for s in birack_corpus() {
        for n in 1..=4 {
            let images: std::collections::HashSet<Vec<usize>> =
                common::all_tuples(s.value.size(), n).iter().map(|t| guitar_map(&s.value, t)).collect();
            ensure!(images.len() == s.value.size().pow(n as u32), "{}: J not injective on S^{n}", s.name);
            for t in common::all_tuples(s.value.size(), n) {
                ensure!(guitar_inverse(&s.value, &guitar_map(&s.value, &t)).unwrap() == t, "{}: J⁻¹J ≠ id", s.name);
            }
        }
        for n in 2..=4 {
            ensure!(entwining_check(&s.value, n).unwrap().holds(), "{}: entwining fails for n = {n}", s.name);
        }
    }
    let z2 = sdyb::magma::cyclic_group(2).unwrap();
    let ass = sigma_from_monoid(&z2, 0).unwrap();
    let j = guitar_map(&ass, &[1, 1, 1]);
    ensure!(j == vec![1, 0, 1], "J(1,1,1) = {j:?}");
    Ok(())
}

fn c8_jstar() -> Outcome {
    let selection = select_guitar_convention(&convention_selection_corpus()).unwrap();
    ensure!(selection.unique() == Some(GUITAR_CONVENTION), "selection result {:?}", selection.passing);
    for s in birack_corpus() {
        for k in 0..=2 {
            ensure!(
                chain_map_defect(&s.value, k, GUITAR_CONVENTION).unwrap().is_none(),
                "{}: defect in degree {k}",
                s.name
            );
        }
        // pointwise on random-looking cochains as well
        let f = Cochain::from_fn(s.value.size(), 2, 0, |t| (3 * t[0] + 5 * t[1] * t[1]) as i64 - 2).unwrap();
        let br = CochainComplex::full(ComplexKind::Braided(s.value.clone())).unwrap();
        let bir = CochainComplex::full(ComplexKind::Birack(s.value.clone())).unwrap();
        let lhs = br.differential(&pullback_guitar(&s.value, &f).unwrap()).unwrap();
        let rhs = pullback_guitar(&s.value, &bir.differential(&f).unwrap()).unwrap();
        ensure!(lhs == rhs, "{}: d_Br J* f ≠ J* d_Bir f", s.name);
        for p in [2u64, 3] {
            for k in 1..=2 {
                let (a, b) =
                    (br.cohomology_dimension_mod_p(k, p).unwrap(), bir.cohomology_dimension_mod_p(k, p).unwrap());
                ensure!(a == b, "{}: dim H^{k}(Z/{p}) braided {a}, birack {b}", s.name);
                ensure!(br.cohomology(k, p).unwrap() == bir.cohomology(k, p).unwrap(), "{}: H^{k} differs", s.name);
            }
        }
    }
    Ok(())
}

fn c9_cohomology_values() -> Outcome {
    for m in 1..=3 {
        let cx = CochainComplex::full(ComplexKind::Rack(make_trivial_quandle(m).unwrap())).unwrap();
        for k in 1..=3 {
            for n in [2u64, 3, 4, 6] {
                let expected = GroupInvariants::from_cyclic_orders(std::iter::repeat_n(n, m.pow(k as u32)));
                ensure!(cx.cohomology(k, n).unwrap() == expected, "trivial({m}) H^{k}(Z/{n})");
            }
        }
    }
    let r3 = make_alexander_quandle(3, 2).unwrap();
    let q = CochainComplex::new(ComplexKind::Rack(r3.clone()), Subcomplex::QuandleDegenerate).unwrap();
    let h2 = q.cohomology(2, 3).unwrap();
    let h3 = q.cohomology(3, 3).unwrap();
    ensure!(h2.is_trivial(), "H^2_Q(R3; Z/3) = {h2}");
    ensure!(h3 == GroupInvariants::from_cyclic_orders([3]), "H^3_Q(R3; Z/3) = {h3}");
    // independent oracle: restricted formula matrices and Gaussian elimination mod 3
    let dims: Vec<usize> = (1..=3)
        .map(|k| {
            let rows = common::nondegenerate(3, k + 1);
            let cols = common::nondegenerate(3, k);
            let before = common::restrict(&common::rack_matrix(&r3, k - 1), &cols, &common::nondegenerate(3, k - 1));
            let after = common::restrict(&common::rack_matrix(&r3, k), &rows, &cols);
            cols.len() - common::rank_mod_p(&after, 3) - common::rank_mod_p(&before, 3)
        })
        .collect();
    ensure!(dims[1] == 0 && dims[2] == 1, "oracle dimensions {dims:?}");
    let h2_order = common::cohomology_order_brute(
        &common::restrict(&common::rack_matrix(&r3, 1), &common::nondegenerate(3, 2), &common::nondegenerate(3, 1)),
        &common::restrict(&common::rack_matrix(&r3, 2), &common::nondegenerate(3, 3), &common::nondegenerate(3, 2)),
        3,
        6,
        3,
    );
    ensure!(h2_order == 1, "brute-force |H^2_Q| = {h2_order}");
    for r in rack_corpus() {
        let dual = dual_rack(&r.value).unwrap();
        let a = CochainComplex::full(ComplexKind::Rack(r.value.clone())).unwrap();
        let b = CochainComplex::full(ComplexKind::Rack(dual)).unwrap();
        let max_k = if r.value.size() <= 4 { 3 } else { 2 };
        for k in 1..=max_k {
            for n in [0u64, 2, 3, 4] {
                let (ha, hb) = (a.cohomology(k, n).unwrap(), b.cohomology(k, n).unwrap());
                ensure!(ha == hb, "{}: H^{k}(mod {n}) {ha} vs dual {hb}", r.name);
            }
        }
    }
    Ok(())
}

fn c10_cup() -> Outcome {
    for s in braided_sets_two() {
        let sigma = &s.value;
        let cx = CochainComplex::full(ComplexKind::Braided(sigma.clone())).unwrap();
        let d = |f: &Cochain| cx.differential(f).unwrap();
        let cup = |f: &Cochain, g: &Cochain| cup_product(sigma, f, g).unwrap();
        let deg1: Vec<Cochain> = common::all_tuples(2, 2)
            .into_iter()
            .map(|v| Cochain::new(2, 1, 2, v.into_iter().map(|x| x as i64).collect()).unwrap())
            .collect();
        let deltas: Vec<Cochain> = (0..2).map(|a| Cochain::delta(2, 0, &[a]).unwrap()).collect();
        for set in [&deg1, &deltas] {
            for f in set.iter() {
                for g in set.iter() {
                    let lhs = d(&cup(f, g));
                    let rhs = cup(&d(f), g).sub(&cup(f, &d(g))).unwrap();
                    ensure!(lhs == rhs, "{}: Leibniz fails for f={:?} g={:?}", s.name, f.values(), g.values());
                    for h in set.iter() {
                        ensure!(cup(&cup(f, g), h) == cup(f, &cup(g, h)), "{}: associativity fails", s.name);
                    }
                }
            }
        }
        for n in [2u64, 3] {
            for (k, l) in [(1usize, 1usize), (1, 2), (2, 1)] {
                let fs = cx.cocycle_basis(k, n).unwrap();
                let gs = cx.cocycle_basis(l, n).unwrap();
                for f in &fs {
                    for g in &gs {
                        let sign = if (k * l) % 2 == 0 { 1 } else { -1 };
                        let diff = cup(f, g).sub(&cup(g, f).scale(sign)).unwrap();
                        ensure!(
                            cx.is_coboundary(&diff).unwrap().is_some(),
                            "{}: graded commutator of {:?} and {:?} (mod {n}) is not a coboundary",
                            s.name,
                            f.values(),
                            g.values()
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn c11_coboundary_triviality() -> Outcome {
    let words: Vec<BraidWord> = (1..=3).flat_map(|n| words_up_to(n, 5)).collect();
    for s in birack_corpus() {
        let m = s.value.size();
        let cx = CochainComplex::full(ComplexKind::Birack(s.value.clone())).unwrap();
        let colorer = Colorer::new(&s.value);
        // integer coboundaries of the delta basis span every coboundary, and weights are linear in φ
        let basis: Vec<Cochain> =
            (0..m).map(|a| cx.differential(&Cochain::delta(m, 0, &[a]).unwrap()).unwrap()).collect();
        let mixed = cx.differential(&Cochain::from_fn(m, 1, 3, |t| 1 + 2 * t[0] as i64).unwrap()).unwrap();
        for beta in &words {
            for phi in &basis {
                for row in colorer.weight_table(phi, beta).unwrap() {
                    ensure!(
                        row.input != row.output || row.weight == 0,
                        "{}: closure coloring {:?} of {:?} has weight {}",
                        s.name,
                        row.input,
                        beta.to_string(),
                        row.weight
                    );
                }
            }
            let inv = colorer.weight_polynomial_closure(&mixed, beta).unwrap();
            let mut expected = vec![0u64; 3];
            expected[0] = inv.coloring_count;
            ensure!(inv.weight_polynomial == expected, "{}: polynomial {:?}", s.name, inv.weight_polynomial);
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("crossing weights reproduce the two-crossing example", c1_fig8),
        ("trefoil and figure-eight closure coloring counts", c2_counts),
        ("d∘d = 0 for rack, braided and birack complexes", c3_dd_zero),
        ("2-cocycle identity and R-move invariance", c4_table4),
        ("σ_SD / σ_Ass equivalence theorems", c5_equivalences),
        ("structure rack theorems", c6_structure_rack),
        ("guitar map bijectivity and entwining", c7_guitar),
        ("J* chain isomorphism", c8_jstar),
        ("cohomology values", c9_cohomology_values),
        ("cup product", c10_cup),
        ("coboundary weights are trivial", c11_coboundary_triviality),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or(e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS  criterion {:>2}: {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
