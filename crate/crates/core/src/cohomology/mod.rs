//! Rack, braided and birack cochain complexes over ℤ_n.
//!
//! A degree-`k` cochain is a map `S^k → ℤ_n` stored densely, indexed by the
//! lexicographic rank of the tuple. Differentials are assembled as integer
//! matrices in the delta-function basis; cohomology groups come from their
//! Smith normal forms through the universal coefficient theorem.

mod cup;
mod groups;
mod guitar;
pub mod linalg;

use std::collections::HashMap;

pub use cup::cup_product;
pub use groups::GroupInvariants;
pub use guitar::{
    chain_map_defect, guitar_permutation, pullback_guitar, pullback_guitar_with, select_guitar_convention,
    ConventionSelection, GuitarConvention, GUITAR_CONVENTION,
};
pub use linalg::IntMatrix;

use crate::error::{Error, Result};
use crate::magma::{check_quandle, check_shelf, Element, OpTable};
use crate::solution::{
    check_biquandle, check_braided, require_birack, sideways, tuple_lower, tuple_raise, SidewaysTables, SigmaTable,
};
use crate::{tuple_rank, tuple_unrank};
use linalg::{elementary_divisors, gcd_u, howell_form, rank_mod_p, SmithModN};

/// A function `S^degree → ℤ_modulus` (`modulus == 0` means integer values).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    size: usize,
    degree: usize,
    modulus: u64,
    values: Vec<i64>,
}

impl Cochain {
    pub fn new(size: usize, degree: usize, modulus: u64, values: Vec<i64>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if modulus == 1 {
            return Err(Error::Parameter("modulus must be 0 (integers) or at least 2".into()));
        }
        let expected = size.pow(degree as u32);
        if values.len() != expected {
            return Err(Error::SizeMismatch(format!(
                "degree-{degree} cochain on {size} elements needs {expected} values, got {}",
                values.len()
            )));
        }
        let mut c = Self { size, degree, modulus, values };
        c.normalize();
        Ok(c)
    }

    pub fn zero(size: usize, degree: usize, modulus: u64) -> Result<Self> {
        Self::new(size, degree, modulus, vec![0; size.pow(degree as u32)])
    }

    pub fn from_fn(size: usize, degree: usize, modulus: u64, f: impl Fn(&[Element]) -> i64) -> Result<Self> {
        let values = crate::tuples(size, degree).map(|t| f(&t)).collect();
        Self::new(size, degree, modulus, values)
    }

    /// The indicator of a single tuple.
    pub fn delta(size: usize, modulus: u64, tuple: &[Element]) -> Result<Self> {
        let mut c = Self::zero(size, tuple.len(), modulus)?;
        c.values[tuple_rank(tuple, size)] = 1;
        Ok(c)
    }

    fn normalize(&mut self) {
        if self.modulus > 0 {
            let n = self.modulus as i64;
            for v in &mut self.values {
                *v = v.rem_euclid(n);
            }
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    pub fn at(&self, tuple: &[Element]) -> i64 {
        self.values[tuple_rank(tuple, self.size)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// The same values reduced into `ℤ_modulus`.
    pub fn reduce(&self, modulus: u64) -> Result<Self> {
        Self::new(self.size, self.degree, modulus, self.values.clone())
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if self.size != other.size || self.modulus != other.modulus {
            return Err(Error::SizeMismatch(format!(
                "cochains over ({} elements, mod {}) and ({} elements, mod {})",
                self.size, self.modulus, other.size, other.modulus
            )));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Self::new(self.size, self.degree, self.modulus, values)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Self::new(self.size, self.degree, self.modulus, values)
    }

    pub fn scale(&self, c: i64) -> Cochain {
        let mut out = self.clone();
        for v in &mut out.values {
            *v *= c;
        }
        out.normalize();
        out
    }
}

/// The structure a complex is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexKind {
    Rack(OpTable),
    Braided(SigmaTable),
    Birack(SigmaTable),
}

impl ComplexKind {
    pub fn size(&self) -> usize {
        match self {
            ComplexKind::Rack(op) => op.size(),
            ComplexKind::Braided(s) | ComplexKind::Birack(s) => s.size(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ComplexKind::Rack(_) => "rack",
            ComplexKind::Braided(_) => "braided",
            ComplexKind::Birack(_) => "birack",
        }
    }
}

/// Which subspace of cochains the complex is restricted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subcomplex {
    Full,
    /// `f(…, a, a, …) = 0`: quandle (rack kind) or biquandle (birack kind) cochains.
    QuandleDegenerate,
    /// `f(t(a), a) = 0` in degree 2, braided kind over a biquandle.
    BraidedBiquandleDeg2,
}

#[derive(Debug, Clone)]
enum Ops {
    Rack(OpTable),
    Braided(SigmaTable),
    Birack(SidewaysTables),
}

/// A cochain complex with its differential and optional subcomplex restriction.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    kind: ComplexKind,
    sub: Subcomplex,
    ops: Ops,
    t_map: Option<Vec<Element>>,
}

impl CochainComplex {
    /// Validates the structure for the requested complex.
    ///
    /// Rack complexes need a shelf, braided complexes a braided set and birack
    /// complexes a birack; the subcomplex flags add the quandle / biquandle
    /// requirement.
    pub fn new(kind: ComplexKind, sub: Subcomplex) -> Result<Self> {
        let mut t_map = None;
        let ops = match &kind {
            ComplexKind::Rack(op) => {
                if let Some(v) = check_shelf(op).witness {
                    return Err(Error::NotARack(v.to_string()));
                }
                match sub {
                    Subcomplex::Full => {}
                    Subcomplex::QuandleDegenerate => {
                        if let Some(v) = check_quandle(op).witness {
                            return Err(Error::Subcomplex(format!("quandle subcomplex needs a quandle: {v}")));
                        }
                    }
                    Subcomplex::BraidedBiquandleDeg2 => {
                        return Err(Error::Subcomplex("braided biquandle subcomplex needs the braided kind".into()))
                    }
                }
                Ops::Rack(op.clone())
            }
            ComplexKind::Braided(s) => {
                if let Some(v) = check_braided(s).witness {
                    return Err(Error::Subcomplex(format!("braided complex needs a braided set: {v}")));
                }
                match sub {
                    Subcomplex::Full => {}
                    Subcomplex::QuandleDegenerate => {
                        return Err(Error::Subcomplex(
                            "the degenerate subcomplex applies to rack or birack kinds".into(),
                        ))
                    }
                    Subcomplex::BraidedBiquandleDeg2 => {
                        t_map =
                            Some(check_biquandle(s)?.ok_or_else(|| Error::NotABiquandle("no biquandle map t".into()))?);
                    }
                }
                Ops::Braided(s.clone())
            }
            ComplexKind::Birack(s) => {
                require_birack(s)?;
                match sub {
                    Subcomplex::Full => {}
                    Subcomplex::QuandleDegenerate => {
                        if check_biquandle(s)?.is_none() {
                            return Err(Error::NotABiquandle("biquandle subcomplex needs a biquandle".into()));
                        }
                    }
                    Subcomplex::BraidedBiquandleDeg2 => {
                        return Err(Error::Subcomplex("braided biquandle subcomplex needs the braided kind".into()))
                    }
                }
                Ops::Birack(sideways(s)?)
            }
        };
        Ok(Self { kind, sub, ops, t_map })
    }

    pub fn full(kind: ComplexKind) -> Result<Self> {
        Self::new(kind, Subcomplex::Full)
    }

    pub fn kind(&self) -> &ComplexKind {
        &self.kind
    }

    pub fn subcomplex(&self) -> Subcomplex {
        self.sub
    }

    pub fn size(&self) -> usize {
        self.kind.size()
    }

    /// Expands `(d f)(t)` as a signed sum of evaluations `f(t')`.
    fn for_each_term(&self, t: &[Element], mut emit: impl FnMut(i64, &[Element])) {
        let mut buf: Vec<Element> = Vec::with_capacity(t.len());
        for i in 0..t.len() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let ai = t[i];
            match &self.ops {
                Ops::Rack(op) => {
                    buf.clear();
                    buf.extend_from_slice(&t[..i]);
                    buf.extend_from_slice(&t[i + 1..]);
                    emit(sign, &buf);
                    buf.clear();
                    buf.extend(t[..i].iter().map(|&x| op.op(x, ai)));
                    buf.extend_from_slice(&t[i + 1..]);
                    emit(-sign, &buf);
                }
                Ops::Braided(s) => {
                    buf.clear();
                    buf.extend_from_slice(&t[..i]);
                    buf.extend(tuple_lower(s, &t[i + 1..], ai));
                    emit(sign, &buf);
                    buf.clear();
                    buf.extend(tuple_raise(s, &t[..i], ai));
                    buf.extend_from_slice(&t[i + 1..]);
                    emit(-sign, &buf);
                }
                Ops::Birack(side) => {
                    buf.clear();
                    buf.extend_from_slice(&t[..i]);
                    buf.extend_from_slice(&t[i + 1..]);
                    emit(sign, &buf);
                    buf.clear();
                    buf.extend(t[..i].iter().map(|&x| side.wdot(x, ai)));
                    buf.extend(t[i + 1..].iter().map(|&x| side.dot(ai, x)));
                    emit(-sign, &buf);
                }
            }
        }
    }

    /// Applies the differential pointwise (on the full cochain space).
    pub fn differential(&self, f: &Cochain) -> Result<Cochain> {
        if f.size() != self.size() {
            return Err(Error::SizeMismatch(format!("cochain on {} elements, structure on {}", f.size(), self.size())));
        }
        let values = crate::tuples(self.size(), f.degree() + 1)
            .map(|t| {
                let mut acc = 0i64;
                self.for_each_term(&t, |sign, arg| acc += sign * f.at(arg));
                acc
            })
            .collect();
        Cochain::new(self.size(), f.degree() + 1, f.modulus(), values)
    }

    /// Ranks of the tuples spanning the degree-`k` cochains of this (sub)complex.
    pub fn basis(&self, k: usize) -> Vec<usize> {
        let m = self.size();
        let total = m.pow(k as u32);
        match self.sub {
            Subcomplex::Full => (0..total).collect(),
            Subcomplex::QuandleDegenerate => (0..total)
                .filter(|&r| {
                    let t = tuple_unrank(r, m, k);
                    t.windows(2).all(|w| w[0] != w[1])
                })
                .collect(),
            Subcomplex::BraidedBiquandleDeg2 if k == 2 => {
                let t = self.t_map.as_ref().expect("biquandle map");
                let excluded: Vec<usize> = (0..m).map(|a| tuple_rank(&[t[a], a], m)).collect();
                (0..total).filter(|r| !excluded.contains(r)).collect()
            }
            Subcomplex::BraidedBiquandleDeg2 => (0..total).collect(),
        }
    }

    /// Matrix of `d^k` restricted to the subcomplex: rows index `basis(k+1)`, columns `basis(k)`.
    pub fn matrix(&self, k: usize) -> IntMatrix {
        let m = self.size();
        let cols = self.basis(k);
        let rows = self.basis(k + 1);
        let col_of: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut mat = IntMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            let t = tuple_unrank(r, m, k + 1);
            self.for_each_term(&t, |sign, arg| {
                if let Some(&j) = col_of.get(&tuple_rank(arg, m)) {
                    mat.add_to(i, j, sign);
                }
            });
        }
        mat
    }

    /// Full (unrestricted) matrix of `d^k` on all of `Map(S^k, ℤ)`.
    pub fn full_matrix(&self, k: usize) -> IntMatrix {
        let m = self.size();
        let (nr, nc) = (m.pow(k as u32 + 1), m.pow(k as u32));
        let mut mat = IntMatrix::zeros(nr, nc);
        for (i, t) in crate::tuples(m, k + 1).enumerate() {
            self.for_each_term(&t, |sign, arg| mat.add_to(i, tuple_rank(arg, m), sign));
        }
        mat
    }

    fn check_degree(&self, k: usize) -> Result<()> {
        if self.sub == Subcomplex::BraidedBiquandleDeg2 && k != 2 {
            return Err(Error::Subcomplex("the braided biquandle subcomplex is only defined in degree 2".into()));
        }
        Ok(())
    }

    fn incoming(&self, k: usize) -> IntMatrix {
        if k == 0 {
            IntMatrix::zeros(self.basis(0).len(), 0)
        } else {
            self.matrix(k - 1)
        }
    }

    /// `H^k` with coefficients in ℤ_n (`n == 0` for ℤ).
    pub fn cohomology(&self, k: usize, n: u64) -> Result<GroupInvariants> {
        self.check_degree(k)?;
        if n == 1 {
            return Err(Error::Parameter("modulus must be 0 or at least 2".into()));
        }
        let before = elementary_divisors(&self.incoming(k))?;
        let after = elementary_divisors(&self.matrix(k))?;
        let free = self.basis(k).len() - before.len() - after.len();
        let orders: Vec<u64> = if n == 0 {
            std::iter::repeat_n(0, free).chain(before.iter().copied()).collect()
        } else {
            std::iter::repeat_n(n, free).chain(before.iter().chain(&after).map(|&e| gcd_u(e, n))).collect()
        };
        Ok(GroupInvariants::from_cyclic_orders(orders))
    }

    /// `|H^k(ℤ_n)|` computed directly from Smith forms over ℤ_n (no integer lift).
    pub fn cohomology_order_mod_n(&self, k: usize, n: u64) -> Result<u128> {
        self.check_degree(k)?;
        let ker = SmithModN::compute(&self.matrix(k), n).kernel_orders();
        let im = SmithModN::compute(&self.incoming(k), n).image_orders();
        let prod = |v: Vec<u64>| v.into_iter().fold(1u128, |a, d| a * d as u128);
        Ok(prod(ker) / prod(im))
    }

    /// `dim H^k(ℤ_p)` by rank-nullity over the field ℤ_p.
    pub fn cohomology_dimension_mod_p(&self, k: usize, p: u64) -> Result<usize> {
        self.check_degree(k)?;
        Ok(self.basis(k).len() - rank_mod_p(&self.matrix(k), p) - rank_mod_p(&self.incoming(k), p))
    }

    fn embed(&self, k: usize, n: u64, coords: &[u64]) -> Cochain {
        let m = self.size();
        let mut values = vec![0i64; m.pow(k as u32)];
        for (&r, &v) in self.basis(k).iter().zip(coords) {
            values[r] = v as i64;
        }
        Cochain::new(m, k, n, values).expect("consistent shape")
    }

    /// Generating set of the degree-`k` cocycles over ℤ_n, in Howell (reduced echelon) form.
    pub fn cocycle_basis(&self, k: usize, n: u64) -> Result<Vec<Cochain>> {
        self.check_degree(k)?;
        if n < 2 {
            return Err(Error::Parameter("cocycle bases need a modulus n ≥ 2".into()));
        }
        let gens = SmithModN::compute(&self.matrix(k), n).kernel_generators();
        Ok(howell_form(gens, n).iter().map(|row| self.embed(k, n, row)).collect())
    }

    /// Finds `g` with `d g = f` over ℤ_n, if `f` is a coboundary of this (sub)complex.
    pub fn is_coboundary(&self, f: &Cochain) -> Result<Option<Cochain>> {
        let k = f.degree();
        if k == 0 {
            return Err(Error::Parameter("coboundaries start in degree 1".into()));
        }
        if f.size() != self.size() {
            return Err(Error::SizeMismatch("cochain and structure sizes differ".into()));
        }
        let n = f.modulus();
        if n < 2 {
            return Err(Error::Parameter("coboundary search needs a modulus n ≥ 2".into()));
        }
        let rows = self.basis(k);
        if rows.len() != f.values().len() {
            let inside: std::collections::HashSet<usize> = rows.iter().copied().collect();
            if f.values().iter().enumerate().any(|(r, &v)| v != 0 && !inside.contains(&r)) {
                return Ok(None);
            }
        }
        let target: Vec<u64> = rows.iter().map(|&r| f.values()[r] as u64).collect();
        let smith = SmithModN::compute(&self.matrix(k - 1), n);
        Ok(smith.solve(&target).map(|g| self.embed(k - 1, n, &g)))
    }
}

/// `(d_R f)(a₁…a_{k+1}) = Σ (−1)^{i−1} (f(…â_i…) − f(a₁◁a_i, …, a_{i−1}◁a_i, a_{i+1}, …))`.
pub fn d_rack(op: &OpTable, f: &Cochain) -> Result<Cochain> {
    CochainComplex::full(ComplexKind::Rack(op.clone()))?.differential(f)
}

/// Braided differential built from tuple lowering and raising.
pub fn d_braided(sigma: &SigmaTable, f: &Cochain) -> Result<Cochain> {
    CochainComplex::full(ComplexKind::Braided(sigma.clone()))?.differential(f)
}

/// Birack differential: `Σ (−1)^{i−1} (f(…â_i…) − f(a₁⊚a_i, …, a_{i−1}⊚a_i, a_i·a_{i+1}, …))`.
pub fn d_birack(sigma: &SigmaTable, f: &Cochain) -> Result<Cochain> {
    CochainComplex::full(ComplexKind::Birack(sigma.clone()))?.differential(f)
}

pub fn differential_matrix(kind: ComplexKind, sub: Subcomplex, k: usize) -> Result<IntMatrix> {
    Ok(CochainComplex::new(kind, sub)?.matrix(k))
}

pub fn cohomology_group(kind: ComplexKind, sub: Subcomplex, k: usize, n: u64) -> Result<GroupInvariants> {
    CochainComplex::new(kind, sub)?.cohomology(k, n)
}

pub fn cocycle_basis(kind: ComplexKind, sub: Subcomplex, k: usize, n: u64) -> Result<Vec<Cochain>> {
    CochainComplex::new(kind, sub)?.cocycle_basis(k, n)
}

pub fn is_coboundary(kind: ComplexKind, sub: Subcomplex, f: &Cochain) -> Result<Option<Cochain>> {
    CochainComplex::new(kind, sub)?.is_coboundary(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::{make_alexander_quandle, make_trivial_quandle};
    use crate::solution::{make_flip, sigma_from_shelf};

    fn r3() -> OpTable {
        make_alexander_quandle(3, 2).unwrap()
    }

    #[test]
    fn degree_one_rack_differential() {
        let op = r3();
        let f = Cochain::new(3, 1, 0, vec![5, -2, 7]).unwrap();
        let df = d_rack(&op, &f).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(df.at(&[a, b]), f.at(&[op.op(a, b)]) - f.at(&[a]));
            }
        }
    }

    #[test]
    fn degree_two_rack_differential_is_the_cocycle_identity() {
        let op = r3();
        let f = Cochain::from_fn(3, 2, 0, |t| (t[0] * 7 + t[1] * t[1] * 3) as i64 - 4).unwrap();
        let df = d_rack(&op, &f).unwrap();
        for (a, b, c) in crate::magma::triples(3) {
            let expect = f.at(&[a, b]) - f.at(&[op.op(a, c), op.op(b, c)]) - f.at(&[a, c]) + f.at(&[op.op(a, b), c]);
            assert_eq!(df.at(&[a, b, c]), expect);
        }
    }

    #[test]
    fn trivial_quandle_differentials_vanish() {
        let t = make_trivial_quandle(3).unwrap();
        let cx = CochainComplex::full(ComplexKind::Rack(t)).unwrap();
        for k in 0..4 {
            assert!(cx.matrix(k).is_zero());
        }
    }

    #[test]
    fn degree_one_braided_and_birack() {
        let s = SigmaTable::from_fn(3, |a, b| ((b + 1) % 3, (a + 2) % 3)).unwrap();
        let f = Cochain::new(3, 1, 0, vec![4, 9, -3]).unwrap();
        let br = d_braided(&s, &f).unwrap();
        let bir = d_birack(&s, &f).unwrap();
        let side = sideways(&s).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let want_br = f.at(&[s.lower(b, a)]) - f.at(&[b]) + f.at(&[s.raise(a, b)]) - f.at(&[a]);
                assert_eq!(br.at(&[a, b]), want_br);
                let want_bir = f.at(&[b]) - f.at(&[side.dot(a, b)]) - f.at(&[a]) + f.at(&[side.wdot(a, b)]);
                assert_eq!(bir.at(&[a, b]), want_bir);
            }
        }
        let flip = make_flip(3).unwrap();
        assert!(d_braided(&flip, &f).unwrap().is_zero());
        assert!(d_birack(&flip, &f).unwrap().is_zero());
    }

    #[test]
    fn birack_complex_of_sigma_sd_is_the_rack_complex() {
        let op = r3();
        let bir = CochainComplex::full(ComplexKind::Birack(sigma_from_shelf(&op))).unwrap();
        let rack = CochainComplex::full(ComplexKind::Rack(op)).unwrap();
        for k in 0..4 {
            assert_eq!(bir.matrix(k), rack.matrix(k));
        }
    }

    #[test]
    fn r3_rank_over_z3() {
        let cx = CochainComplex::full(ComplexKind::Rack(r3())).unwrap();
        assert_eq!(rank_mod_p(&cx.matrix(1), 3), 2);
    }

    #[test]
    fn subcomplex_validation() {
        let a1 = crate::magma::make_laver_table(1).unwrap();
        assert!(CochainComplex::new(ComplexKind::Rack(a1), Subcomplex::QuandleDegenerate).is_err());
        let xor = OpTable::from_fn(2, |a, b| a ^ b).unwrap();
        assert!(CochainComplex::full(ComplexKind::Rack(xor)).is_err());
        let flip = make_flip(2).unwrap();
        assert!(CochainComplex::new(ComplexKind::Braided(flip.clone()), Subcomplex::QuandleDegenerate).is_err());
        let cx = CochainComplex::new(ComplexKind::Braided(flip), Subcomplex::BraidedBiquandleDeg2).unwrap();
        assert_eq!(cx.basis(2), vec![1, 2]);
        assert!(cx.cohomology(3, 2).is_err());
    }

    #[test]
    fn cochain_validation() {
        assert!(Cochain::new(2, 2, 3, vec![1, 2, 3]).is_err());
        assert!(Cochain::new(2, 1, 1, vec![1, 2]).is_err());
        let c = Cochain::new(2, 1, 3, vec![-1, 7]).unwrap();
        assert_eq!(c.values(), &[2, 1]);
        assert_eq!(Cochain::zero(3, 0, 5).unwrap().values().len(), 1);
    }
}
