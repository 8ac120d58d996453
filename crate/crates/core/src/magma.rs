//! Finite binary operations and the shelf / rack / quandle hierarchy.
//!
//! Everything here uses the right self-distributive convention
//! `(a◁b)◁c = (a◁c)◁(b◁c)`. Elements are `0..size`.

use std::fmt;

use crate::error::{Error, Result};

pub type Element = usize;

/// A binary operation on `{0, .., size-1}`, stored row-major: entry `a*size + b` is `a ◁ b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpTable {
    size: usize,
    table: Vec<Element>,
}

impl OpTable {
    pub fn new(size: usize, table: Vec<Element>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if table.len() != size * size {
            return Err(Error::TableShape { size, expected: size * size, found: table.len() });
        }
        if let Some(pos) = table.iter().position(|&v| v >= size) {
            return Err(Error::EntryOutOfRange {
                location: format!("[{}][{}]", pos / size, pos % size),
                value: table[pos],
                size,
            });
        }
        Ok(Self { size, table })
    }

    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::TableShape { size, expected: size, found: bad.len() });
        }
        Self::new(size, rows.concat())
    }

    /// Tabulates `f` on every pair.
    pub fn from_fn(size: usize, f: impl Fn(Element, Element) -> Element) -> Result<Self> {
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                table.push(f(a, b));
            }
        }
        Self::new(size, table)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table[a * self.size + b]
    }

    pub fn entries(&self) -> &[Element] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// The isomorphic copy obtained by renaming `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[Element]) -> Result<Self> {
        check_permutation(perm, self.size)?;
        let mut inv = vec![0; self.size];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        Self::from_fn(self.size, |a, b| perm[self.op(inv[a], inv[b])])
    }

    pub fn is_associative(&self) -> bool {
        triples(self.size).all(|(a, b, c)| self.op(self.op(a, b), c) == self.op(a, self.op(b, c)))
    }

    pub fn is_left_unit(&self, e: Element) -> bool {
        e < self.size && (0..self.size).all(|a| self.op(e, a) == a)
    }

    /// Checks the group axioms, returning the identity and the inverse map.
    pub fn group_structure(&self) -> Result<GroupData> {
        let m = self.size;
        if let Some((a, b, c)) = triples(m).find(|&(a, b, c)| self.op(self.op(a, b), c) != self.op(a, self.op(b, c))) {
            return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| self.op(e, a) == a && self.op(a, e) == a))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        let mut inverse = Vec::with_capacity(m);
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| self.op(a, b) == identity && self.op(b, a) == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        Ok(GroupData { identity, inverse })
    }
}

impl fmt::Display for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.table.chunks(self.size) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupData {
    pub identity: Element,
    pub inverse: Vec<Element>,
}

pub(crate) fn check_permutation(perm: &[Element], size: usize) -> Result<()> {
    if perm.len() != size {
        return Err(Error::SizeMismatch(format!("permutation of length {} for size {size}", perm.len())));
    }
    let mut seen = vec![false; size];
    for &p in perm {
        if p >= size || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Parameter("relabeling is not a permutation".into()));
        }
    }
    Ok(())
}

/// All triples in lexicographic order.
pub(crate) fn triples(m: usize) -> impl Iterator<Item = (Element, Element, Element)> {
    (0..m * m * m).map(move |r| (r / (m * m), (r / m) % m, r % m))
}

/// Result of a single axiom check: holds iff no witness was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check<W> {
    pub witness: Option<W>,
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub(crate) fn from_witness(witness: Option<W>) -> Self {
        Self { witness }
    }
}

/// The first axiom failure found, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `(a◁b)◁c = lhs` but `(a◁c)◁(b◁c) = rhs`.
    SelfDistributivity { a: Element, b: Element, c: Element, lhs: Element, rhs: Element },
    /// `x◁b = y◁b` with `x < y`.
    ColumnNotBijective { b: Element, x: Element, y: Element },
    /// `a◁a = value ≠ a`.
    NotIdempotent { a: Element, value: Element },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::SelfDistributivity { .. } => "self-distributivity",
            Violation::ColumnNotBijective { .. } => "invertible right translations",
            Violation::NotIdempotent { .. } => "idempotence",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::SelfDistributivity { a, b, c, lhs, rhs } => {
                write!(f, "self-distributivity fails at (a,b,c)=({a},{b},{c}): (a◁b)◁c={lhs}, (a◁c)◁(b◁c)={rhs}")
            }
            Violation::ColumnNotBijective { b, x, y } => {
                write!(f, "right translation by {b} is not injective: {x}◁{b} = {y}◁{b}")
            }
            Violation::NotIdempotent { a, value } => write!(f, "{a}◁{a} = {value}"),
        }
    }
}

/// Flags for the accumulative shelf ⊂ rack ⊂ quandle hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub is_shelf: bool,
    pub is_rack: bool,
    pub is_quandle: bool,
    pub first_violation: Option<Violation>,
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "shelf: {}", self.is_shelf)?;
        writeln!(f, "rack: {}", self.is_rack)?;
        writeln!(f, "quandle: {}", self.is_quandle)?;
        if let Some(v) = &self.first_violation {
            writeln!(f, "first violation: {v}")?;
        }
        Ok(())
    }
}

pub fn check_shelf(op: &OpTable) -> Check<Violation> {
    let witness = triples(op.size()).find_map(|(a, b, c)| {
        let lhs = op.op(op.op(a, b), c);
        let rhs = op.op(op.op(a, c), op.op(b, c));
        (lhs != rhs).then_some(Violation::SelfDistributivity { a, b, c, lhs, rhs })
    });
    Check::from_witness(witness)
}

fn column_violation(op: &OpTable) -> Option<Violation> {
    let m = op.size();
    for b in 0..m {
        let mut preimage = vec![None; m];
        for x in 0..m {
            let v = op.op(x, b);
            if let Some(y) = preimage[v] {
                return Some(Violation::ColumnNotBijective { b, x: y, y: x });
            }
            preimage[v] = Some(x);
        }
    }
    None
}

pub fn check_rack(op: &OpTable) -> Check<Violation> {
    let shelf = check_shelf(op);
    if !shelf.holds() {
        return shelf;
    }
    Check::from_witness(column_violation(op))
}

pub fn check_quandle(op: &OpTable) -> Check<Violation> {
    let rack = check_rack(op);
    if !rack.holds() {
        return rack;
    }
    let witness = (0..op.size()).find_map(|a| {
        let value = op.op(a, a);
        (value != a).then_some(Violation::NotIdempotent { a, value })
    });
    Check::from_witness(witness)
}

pub fn axiom_report(op: &OpTable) -> AxiomReport {
    let shelf = check_shelf(op);
    if let Some(v) = shelf.witness {
        return AxiomReport { is_shelf: false, is_rack: false, is_quandle: false, first_violation: Some(v) };
    }
    if let Some(v) = column_violation(op) {
        return AxiomReport { is_shelf: true, is_rack: false, is_quandle: false, first_violation: Some(v) };
    }
    let quandle = check_quandle(op);
    AxiomReport { is_shelf: true, is_rack: true, is_quandle: quandle.holds(), first_violation: quandle.witness }
}

pub fn make_trivial_quandle(m: usize) -> Result<OpTable> {
    if m == 0 {
        return Err(Error::EmptyCarrier);
    }
    OpTable::from_fn(m, |a, _| a)
}

/// Conjugation `a◁b = b⁻¹·a·b` on a group table.
pub fn make_conjugation_quandle(group: &OpTable) -> Result<OpTable> {
    let g = group.group_structure()?;
    OpTable::from_fn(group.size(), |a, b| group.op(group.op(g.inverse[b], a), b))
}

/// `a◁b = t·a + (1−t)·b mod m`; requires `gcd(t, m) = 1`.
pub fn make_alexander_quandle(m: usize, t: i64) -> Result<OpTable> {
    if m == 0 {
        return Err(Error::EmptyCarrier);
    }
    let mi = m as i64;
    let t = t.rem_euclid(mi);
    if gcd(t as u64, m as u64) != 1 {
        return Err(Error::NotARack(format!("t = {t} is not invertible modulo {m}")));
    }
    let s = (1 - t).rem_euclid(mi);
    OpTable::from_fn(m, |a, b| ((t * a as i64 + s * b as i64) % mi) as usize)
}

/// The Laver table `A_k` on `2^k` elements, transposed into the right-SD convention.
///
/// The classical operation `∗` on `{1..2^k}` satisfies `a∗1 = a+1 (mod 2^k)` and
/// `a∗(b+1) = (a∗b)∗(a∗1)`; it is left self-distributive. The returned table is
/// `a◁b := b∗a` with classical `j` stored as `j-1`. For `k ≥ 1` this is a shelf,
/// not a rack.
pub fn make_laver_table(k: u32) -> Result<OpTable> {
    if k > 4 {
        return Err(Error::Parameter(format!("Laver table index {k} exceeds 4")));
    }
    let n = 1usize << k;
    // classical[a][b] for a, b in 1..=n, stored 0-based as values 1..=n
    let mut classical = vec![vec![0usize; n + 1]; n + 1];
    for b in 1..=n {
        classical[n][b] = b;
    }
    for a in (1..n).rev() {
        classical[a][1] = a + 1;
        for b in 1..n {
            let ab = classical[a][b];
            classical[a][b + 1] = classical[ab][a + 1];
        }
    }
    OpTable::from_fn(n, |a, b| classical[b + 1][a + 1] - 1)
}

/// The dual rack: `a ◁̃ b` is the unique `c` with `c◁b = a`.
pub fn dual_rack(op: &OpTable) -> Result<OpTable> {
    if let Some(v) = check_rack(op).witness {
        return Err(Error::NotARack(v.to_string()));
    }
    let m = op.size();
    let mut table = vec![0; m * m];
    for b in 0..m {
        for c in 0..m {
            table[op.op(c, b) * m + b] = c;
        }
    }
    OpTable::new(m, table)
}

/// The symmetric group on `k` letters.
///
/// Element `r` is the permutation whose one-line notation `[p(0), .., p(k-1)]`
/// has lexicographic rank `r`. The product `p·q` applies `p` first, then `q`.
pub fn symmetric_group(k: usize) -> Result<OpTable> {
    if !(1..=5).contains(&k) {
        return Err(Error::Parameter(format!("symmetric group degree {k} outside 1..=5")));
    }
    let perms = permutations(k);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation");
    OpTable::from_fn(perms.len(), |a, b| {
        let composed: Vec<usize> = (0..k).map(|i| perms[b][perms[a][i]]).collect();
        index(&composed)
    })
}

/// The cyclic group `(ℤ_m, +)`.
pub fn cyclic_group(m: usize) -> Result<OpTable> {
    OpTable::from_fn(m, |a, b| (a + b) % m.max(1))
}

/// All permutations of `0..k` in lexicographic order of one-line notation.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Every binary operation on `m` elements, in lexicographic order of the row-major table.
pub fn all_operations(m: usize) -> impl Iterator<Item = OpTable> {
    let cells = m * m;
    let total = m.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut table = vec![0; cells];
        for slot in table.iter_mut().rev() {
            *slot = code % m;
            code /= m;
        }
        OpTable { size: m, table }
    })
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
