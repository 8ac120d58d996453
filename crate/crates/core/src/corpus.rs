//! Small structures used for exhaustive verification.

use std::collections::HashSet;

use crate::magma::{
    all_operations, check_rack, check_shelf, make_alexander_quandle, make_conjugation_quandle, make_laver_table,
    make_trivial_quandle, permutations, symmetric_group, OpTable,
};
use crate::solution::{check_birack, check_braided, make_flip, sigma_from_shelf, sigma_from_shelf_mirror, SigmaTable};

#[derive(Debug, Clone)]
pub struct Named<T> {
    pub name: String,
    pub value: T,
}

fn named<T>(name: impl Into<String>, value: T) -> Named<T> {
    Named { name: name.into(), value }
}

/// All 16 binary operations on two elements.
pub fn two_element_operations() -> Vec<OpTable> {
    all_operations(2).collect()
}

/// Every shelf on two elements.
pub fn two_element_shelves() -> Vec<Named<OpTable>> {
    all_operations(2)
        .enumerate()
        .filter(|(_, op)| check_shelf(op).holds())
        .map(|(i, op)| named(format!("shelf2#{i}"), op))
        .collect()
}

/// Every rack on `m ≤ 3` elements (labelled, not up to isomorphism).
pub fn all_racks(m: usize) -> Vec<Named<OpTable>> {
    assert!(m <= 3, "exhaustive rack enumeration is limited to m ≤ 3");
    all_operations(m)
        .enumerate()
        .filter(|(_, op)| check_rack(op).holds())
        .map(|(i, op)| named(format!("rack{m}#{i}"), op))
        .collect()
}

/// Racks on up to three elements plus the named families.
pub fn rack_corpus() -> Vec<Named<OpTable>> {
    let mut out = all_racks(2);
    out.extend(all_racks(3));
    out.push(named("alexander(4,3)", make_alexander_quandle(4, 3).unwrap()));
    out.push(named("alexander(5,2)", make_alexander_quandle(5, 2).unwrap()));
    out.push(named("conj(S3)", make_conjugation_quandle(&symmetric_group(3).unwrap()).unwrap()));
    out.push(named("trivial(4)", make_trivial_quandle(4).unwrap()));
    out
}

/// Shelves that are not racks: Laver tables `A₁`, `A₂` and the two-element non-rack shelves.
pub fn shelf_corpus() -> Vec<Named<OpTable>> {
    let mut out: Vec<_> = two_element_shelves().into_iter().filter(|s| !check_rack(&s.value).holds()).collect();
    for k in 0..=2 {
        out.push(named(format!("laver({k})"), make_laver_table(k).unwrap()));
    }
    out
}

/// Every braided set on two elements (all 256 tables filtered by the braid relation).
pub fn braided_sets_two() -> Vec<Named<SigmaTable>> {
    all_sigmas(2)
        .enumerate()
        .filter(|(_, s)| check_braided(s).holds())
        .map(|(i, s)| named(format!("braided2#{i}"), s))
        .collect()
}

/// Every `σ` table on `m` elements; only practical for `m = 2`.
pub fn all_sigmas(m: usize) -> impl Iterator<Item = SigmaTable> {
    let cells = m * m;
    let total = (m * m).pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut table = vec![(0, 0); cells];
        for slot in table.iter_mut().rev() {
            let v = code % (m * m);
            code /= m * m;
            *slot = (v / m, v % m);
        }
        SigmaTable::new(m, table).expect("in range")
    })
}

/// Every birack on two elements.
pub fn biracks_two() -> Vec<Named<SigmaTable>> {
    all_sigmas(2)
        .enumerate()
        .filter(|(_, s)| check_birack(s).is_birack)
        .map(|(i, s)| named(format!("birack2#{i}"), s))
        .collect()
}

/// Affine biracks `σ(a,b) = (αa+βb+γ, δa+εb+ζ)` over ℤ₃.
pub fn affine_biracks_three() -> Vec<Named<SigmaTable>> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(6) {
        let c: Vec<usize> = crate::tuple_unrank(code, 3, 6);
        let s = SigmaTable::from_fn(3, |a, b| ((c[0] * a + c[1] * b + c[2]) % 3, (c[3] * a + c[4] * b + c[5]) % 3))
            .unwrap();
        if check_birack(&s).is_birack {
            out.push(named(format!("affine3{c:?}"), s));
        }
    }
    out
}

/// `σ(a,b) = (f(b), g(a))` for commuting permutations `f`, `g` of three elements.
pub fn permutation_biracks_three() -> Vec<Named<SigmaTable>> {
    let perms = permutations(3);
    let mut out = Vec::new();
    for f in &perms {
        for g in &perms {
            if (0..3).all(|x| f[g[x]] == g[f[x]]) {
                let s = SigmaTable::from_fn(3, |a, b| (f[b], g[a])).unwrap();
                out.push(named(format!("perm3{f:?}{g:?}"), s));
            }
        }
    }
    out
}

/// Biracks of sizes 2 and 3: all of size 2, `σ_SD` and mirror solutions of
/// every 3-element rack, affine and permutation solutions over three
/// elements, and the flip. Duplicates are removed.
pub fn birack_corpus() -> Vec<Named<SigmaTable>> {
    let mut out = biracks_two();
    for r in all_racks(3) {
        out.push(named(format!("sd({})", r.name), sigma_from_shelf(&r.value)));
        out.push(named(format!("mirror({})", r.name), sigma_from_shelf_mirror(&r.value)));
    }
    out.extend(affine_biracks_three());
    out.extend(permutation_biracks_three());
    out.push(named("flip(3)", make_flip(3).unwrap()));
    dedup(out)
}

fn dedup(items: Vec<Named<SigmaTable>>) -> Vec<Named<SigmaTable>> {
    let mut seen = HashSet::new();
    items.into_iter().filter(|s| seen.insert(s.value.clone())).collect()
}

/// Braided sets for braided-complex checks: all of size 2, the birack corpus,
/// and `σ_SD` of the non-rack shelves (braided but not biracks).
pub fn braided_corpus() -> Vec<Named<SigmaTable>> {
    let mut out = braided_sets_two();
    out.extend(birack_corpus());
    for s in shelf_corpus() {
        out.push(named(format!("sd({})", s.name), sigma_from_shelf(&s.value)));
    }
    dedup(out)
}

/// Pairs `(birack, max degree)` on which the J* convention is selected:
/// size-2 biracks up to degree 3 and size-3 biracks up to degree 2.
pub fn convention_selection_corpus() -> Vec<(SigmaTable, usize)> {
    let mut out: Vec<(SigmaTable, usize)> = biracks_two().into_iter().map(|s| (s.value, 3)).collect();
    out.extend(birack_corpus().into_iter().filter(|s| s.value.size() == 3).map(|s| (s.value, 2)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(two_element_operations().len(), 16);
        assert_eq!(braided_sets_two().len(), 43);
        assert_eq!(biracks_two().len(), 4);
        assert!(birack_corpus().iter().all(|s| check_birack(&s.value).is_birack));
        assert!(braided_corpus().iter().all(|s| check_braided(&s.value).holds()));
        assert!(rack_corpus().iter().all(|r| check_rack(&r.value).holds()));
    }
}
