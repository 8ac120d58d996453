//! Set-theoretic Yang–Baxter solutions on finite sets.
//!
//! A solution is stored as `σ(a,b) = (b_a, a^b)`: the first component is the
//! color leaving on the bottom strand, the second the color leaving on top.
//! `x_y` ("x lowered by y") is the first component of `σ(y,x)` and `x^y`
//! ("x raised by y") the second component of `σ(x,y)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::magma::{check_rack, triples, Check, Element, OpTable};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaTable {
    size: usize,
    table: Vec<(Element, Element)>,
}

impl SigmaTable {
    pub fn new(size: usize, table: Vec<(Element, Element)>) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if table.len() != size * size {
            return Err(Error::TableShape { size, expected: size * size, found: table.len() });
        }
        if let Some(pos) = table.iter().position(|&(x, y)| x >= size || y >= size) {
            let (x, y) = table[pos];
            return Err(Error::EntryOutOfRange {
                location: format!("[{}][{}]", pos / size, pos % size),
                value: x.max(y),
                size,
            });
        }
        Ok(Self { size, table })
    }

    pub fn from_fn(size: usize, f: impl Fn(Element, Element) -> (Element, Element)) -> Result<Self> {
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
    pub fn apply(&self, a: Element, b: Element) -> (Element, Element) {
        self.table[a * self.size + b]
    }

    /// `x_y`.
    #[inline]
    pub fn lower(&self, x: Element, y: Element) -> Element {
        self.apply(y, x).0
    }

    /// `x^y`.
    #[inline]
    pub fn raise(&self, x: Element, y: Element) -> Element {
        self.apply(x, y).1
    }

    pub fn entries(&self) -> &[(Element, Element)] {
        &self.table
    }

    /// Returns a copy with the entry at `(a, b)` replaced.
    pub fn with_entry(&self, a: Element, b: Element, value: (Element, Element)) -> Result<Self> {
        let mut table = self.table.clone();
        table[a * self.size + b] = value;
        Self::new(self.size, table)
    }

    /// Applies `σ` to positions `i, i+1` of `x` (0-based).
    #[inline]
    pub fn apply_at(&self, x: &mut [Element], i: usize) {
        let (p, q) = self.apply(x[i], x[i + 1]);
        x[i] = p;
        x[i + 1] = q;
    }

    /// The inverse map, when `σ` is a bijection of `S²`.
    pub fn inverse(&self) -> Option<SigmaTable> {
        let m = self.size;
        let mut table = vec![None; m * m];
        for a in 0..m {
            for b in 0..m {
                let (p, q) = self.apply(a, b);
                if table[p * m + q].replace((a, b)).is_some() {
                    return None;
                }
            }
        }
        Some(SigmaTable { size: m, table: table.into_iter().map(Option::unwrap).collect() })
    }

    pub fn is_involutive(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &(p, q))| self.apply(p, q) == (i / self.size, i % self.size))
    }

    /// For each `a`, the inverse of `x ↦ x_a`; `None` if some such map is not a bijection.
    pub fn lowering_inverses(&self) -> Option<Vec<Vec<Element>>> {
        let m = self.size;
        let mut inv = vec![vec![usize::MAX; m]; m];
        for a in 0..m {
            for x in 0..m {
                let y = self.lower(x, a);
                if inv[a][y] != usize::MAX {
                    return None;
                }
                inv[a][y] = x;
            }
        }
        Some(inv)
    }

    fn first_left_degenerate(&self) -> Option<(Element, Element, Element)> {
        let m = self.size;
        for a in 0..m {
            let mut seen = vec![None; m];
            for b in 0..m {
                let v = self.lower(b, a);
                if let Some(prev) = seen[v] {
                    return Some((a, prev, b));
                }
                seen[v] = Some(b);
            }
        }
        None
    }

    fn first_right_degenerate(&self) -> Option<(Element, Element, Element)> {
        let m = self.size;
        for b in 0..m {
            let mut seen = vec![None; m];
            for a in 0..m {
                let v = self.raise(a, b);
                if let Some(prev) = seen[v] {
                    return Some((b, prev, a));
                }
                seen[v] = Some(a);
            }
        }
        None
    }

    pub fn is_left_nondegenerate(&self) -> bool {
        self.first_left_degenerate().is_none()
    }
}

impl fmt::Display for SigmaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.table.chunks(self.size) {
            let cells: Vec<String> = row.iter().map(|(x, y)| format!("({x},{y})")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionViolation {
    /// `σ₁σ₂σ₁(triple) = lhs` differs from `σ₂σ₁σ₂(triple) = rhs`.
    Braid { triple: [Element; 3], lhs: [Element; 3], rhs: [Element; 3] },
    /// Two distinct pairs share an image.
    NotInvertible { first: (Element, Element), second: (Element, Element) },
    /// `b_a = b'_a` for `b < b'`.
    LeftDegenerate { a: Element, b: Element, b2: Element },
    /// `a^b = a'^b` for `a < a'`.
    RightDegenerate { b: Element, a: Element, a2: Element },
    /// No bijection `t` with `σ(t(a),a) = (t(a),a)`.
    NoBiquandleMap,
}

fn tuple(t: &[Element]) -> String {
    let cells: Vec<String> = t.iter().map(Element::to_string).collect();
    format!("({})", cells.join(","))
}

impl fmt::Display for SolutionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionViolation::Braid { triple, lhs, rhs } => write!(
                f,
                "braid relation fails at {}: σ₁σ₂σ₁ gives {}, σ₂σ₁σ₂ gives {}",
                tuple(triple),
                tuple(lhs),
                tuple(rhs)
            ),
            SolutionViolation::NotInvertible { first, second } => {
                write!(f, "σ({},{}) = σ({},{})", first.0, first.1, second.0, second.1)
            }
            SolutionViolation::LeftDegenerate { a, b, b2 } => {
                write!(f, "left degenerate: {b}_{a} = {b2}_{a}")
            }
            SolutionViolation::RightDegenerate { b, a, a2 } => {
                write!(f, "right degenerate: {a}^{b} = {a2}^{b}")
            }
            SolutionViolation::NoBiquandleMap => write!(f, "no bijection t with σ(t(a),a) = (t(a),a)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionReport {
    pub is_braided: bool,
    pub is_left_nondegenerate: bool,
    pub is_right_nondegenerate: bool,
    pub is_invertible: bool,
    pub is_birack: bool,
    pub is_biquandle: bool,
    pub t_map: Option<Vec<Element>>,
    pub first_violation: Option<SolutionViolation>,
}

impl fmt::Display for SolutionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "braided: {}", self.is_braided)?;
        writeln!(f, "invertible: {}", self.is_invertible)?;
        writeln!(f, "left non-degenerate: {}", self.is_left_nondegenerate)?;
        writeln!(f, "right non-degenerate: {}", self.is_right_nondegenerate)?;
        writeln!(f, "birack: {}", self.is_birack)?;
        writeln!(f, "biquandle: {}", self.is_biquandle)?;
        if let Some(t) = &self.t_map {
            let cells: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            writeln!(f, "t: {}", cells.join(" "))?;
        }
        if let Some(v) = &self.first_violation {
            writeln!(f, "first violation: {v}")?;
        }
        Ok(())
    }
}

pub fn check_braided(sigma: &SigmaTable) -> Check<SolutionViolation> {
    let witness = triples(sigma.size()).find_map(|(a, b, c)| {
        let mut lhs = [a, b, c];
        sigma.apply_at(&mut lhs, 0);
        sigma.apply_at(&mut lhs, 1);
        sigma.apply_at(&mut lhs, 0);
        let mut rhs = [a, b, c];
        sigma.apply_at(&mut rhs, 1);
        sigma.apply_at(&mut rhs, 0);
        sigma.apply_at(&mut rhs, 1);
        (lhs != rhs).then_some(SolutionViolation::Braid { triple: [a, b, c], lhs, rhs })
    });
    Check::from_witness(witness)
}

fn first_collision(sigma: &SigmaTable) -> Option<SolutionViolation> {
    let m = sigma.size();
    let mut seen = vec![None; m * m];
    for a in 0..m {
        for b in 0..m {
            let (p, q) = sigma.apply(a, b);
            if let Some(first) = seen[p * m + q] {
                return Some(SolutionViolation::NotInvertible { first, second: (a, b) });
            }
            seen[p * m + q] = Some((a, b));
        }
    }
    None
}

/// Fills every flag of the report; the biquandle part is only attempted for biracks.
pub fn check_birack(sigma: &SigmaTable) -> SolutionReport {
    let braided = check_braided(sigma);
    let collision = first_collision(sigma);
    let left = sigma.first_left_degenerate();
    let right = sigma.first_right_degenerate();
    let is_birack = braided.holds() && collision.is_none() && left.is_none() && right.is_none();
    let t_map = if is_birack { biquandle_map(sigma) } else { None };
    let first_violation = braided
        .witness
        .clone()
        .or(collision.clone())
        .or(left.map(|(a, b, b2)| SolutionViolation::LeftDegenerate { a, b, b2 }))
        .or(right.map(|(b, a, a2)| SolutionViolation::RightDegenerate { b, a, a2 }))
        .or((is_birack && t_map.is_none()).then_some(SolutionViolation::NoBiquandleMap));
    SolutionReport {
        is_braided: braided.holds(),
        is_left_nondegenerate: left.is_none(),
        is_right_nondegenerate: right.is_none(),
        is_invertible: collision.is_none(),
        is_birack,
        is_biquandle: t_map.is_some(),
        t_map,
        first_violation,
    }
}

pub(crate) fn require_birack(sigma: &SigmaTable) -> Result<()> {
    match check_birack(sigma) {
        r if r.is_birack => Ok(()),
        r => Err(Error::NotABirack(r.first_violation.map(|v| v.to_string()).unwrap_or_default())),
    }
}

/// Candidate fixed pairs: for each `a`, the `x` with `σ(x,a) = (x,a)`, ascending.
fn fixed_pair_candidates(sigma: &SigmaTable) -> Vec<Vec<Element>> {
    let m = sigma.size();
    (0..m).map(|a| (0..m).filter(|&x| sigma.apply(x, a) == (x, a)).collect()).collect()
}

fn augment(a: usize, adj: &[Vec<Element>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &x in &adj[a] {
        if !seen[x] {
            seen[x] = true;
            if owner[x].is_none_or(|b| augment(b, adj, owner, seen)) {
                owner[x] = Some(a);
                return true;
            }
        }
    }
    false
}

/// Whether rows `from..` can be matched into the unused targets.
fn completable(adj: &[Vec<Element>], from: usize, used: &[bool]) -> bool {
    let m = used.len();
    let mut owner: Vec<Option<usize>> = used.iter().map(|&u| u.then_some(usize::MAX)).collect();
    let restricted: Vec<Vec<Element>> =
        adj.iter().map(|xs| xs.iter().copied().filter(|&x| !used[x]).collect()).collect();
    for a in from..m {
        let mut seen = used.to_vec();
        if !augment(a, &restricted, &mut owner, &mut seen) {
            return false;
        }
    }
    true
}

fn biquandle_map(sigma: &SigmaTable) -> Option<Vec<Element>> {
    let adj = fixed_pair_candidates(sigma);
    let m = sigma.size();
    let mut used = vec![false; m];
    let mut t = Vec::with_capacity(m);
    for a in 0..m {
        let choice = adj[a].iter().copied().find(|&x| {
            if used[x] {
                return false;
            }
            used[x] = true;
            let ok = completable(&adj, a + 1, &used);
            used[x] = false;
            ok
        })?;
        used[choice] = true;
        t.push(choice);
    }
    Some(t)
}

/// The lexicographically smallest bijection `t` with `σ(t(a),a) = (t(a),a)`, if any.
pub fn check_biquandle(sigma: &SigmaTable) -> Result<Option<Vec<Element>>> {
    require_birack(sigma)?;
    Ok(biquandle_map(sigma))
}

/// The number of valid biquandle maps `t`.
pub fn count_biquandle_maps(sigma: &SigmaTable) -> Result<usize> {
    require_birack(sigma)?;
    fn go(a: usize, adj: &[Vec<Element>], used: &mut [bool]) -> usize {
        if a == adj.len() {
            return 1;
        }
        let mut total = 0;
        for &x in &adj[a] {
            if !used[x] {
                used[x] = true;
                total += go(a + 1, adj, used);
                used[x] = false;
            }
        }
        total
    }
    let adj = fixed_pair_candidates(sigma);
    Ok(go(0, &adj, &mut vec![false; sigma.size()]))
}

/// `σ_SD(a,b) = (b, a◁b)`.
pub fn sigma_from_shelf(op: &OpTable) -> SigmaTable {
    SigmaTable::from_fn(op.size(), |a, b| (b, op.op(a, b))).expect("well-formed operation")
}

/// The mirror solution `(a,b) ↦ (b◁a, a)`.
pub fn sigma_from_shelf_mirror(op: &OpTable) -> SigmaTable {
    SigmaTable::from_fn(op.size(), |a, b| (op.op(b, a), a)).expect("well-formed operation")
}

/// `σ_Ass(a,b) = (a∗b, unit)` for a left unit `unit`.
pub fn sigma_from_monoid(op: &OpTable, unit: Element) -> Result<SigmaTable> {
    if !op.is_left_unit(unit) {
        return Err(Error::NotLeftUnit(unit));
    }
    SigmaTable::from_fn(op.size(), |a, b| (op.op(a, b), unit))
}

/// `σ(a,b) = (b,a)`.
pub fn make_flip(m: usize) -> Result<SigmaTable> {
    SigmaTable::from_fn(m, |a, b| (b, a))
}

/// The sideways operations of a birack.
///
/// Reading a crossing with bottom-left color `a` and bottom-right color `b`,
/// the top-left color is `a·b` and the top-right color `a ⊚ b`, so that
/// `σ(a, a·b) = (b, a ⊚ b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SidewaysTables {
    size: usize,
    dot: Vec<Element>,
    wdot: Vec<Element>,
}

impl SidewaysTables {
    #[inline]
    pub fn dot(&self, a: Element, b: Element) -> Element {
        self.dot[a * self.size + b]
    }

    #[inline]
    pub fn wdot(&self, a: Element, b: Element) -> Element {
        self.wdot[a * self.size + b]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn dot_table(&self) -> OpTable {
        OpTable::new(self.size, self.dot.clone()).expect("valid table")
    }

    pub fn wdot_table(&self) -> OpTable {
        OpTable::new(self.size, self.wdot.clone()).expect("valid table")
    }
}

fn sideways_lnd(sigma: &SigmaTable) -> Result<SidewaysTables> {
    let m = sigma.size();
    let inv = sigma
        .lowering_inverses()
        .ok_or_else(|| Error::NotLeftNondegenerate(sigma.first_left_degenerate().map_or(0, |(a, _, _)| a)))?;
    let mut dot = Vec::with_capacity(m * m);
    let mut wdot = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let x = inv[a][b];
            dot.push(x);
            wdot.push(sigma.raise(a, x));
        }
    }
    Ok(SidewaysTables { size: m, dot, wdot })
}

pub fn sideways(sigma: &SigmaTable) -> Result<SidewaysTables> {
    require_birack(sigma)?;
    sideways_lnd(sigma)
}

/// `a ◁_σ b = (a ⊚ b)_b`, defined whenever `σ` is left non-degenerate.
pub(crate) fn structure_operation(sigma: &SigmaTable) -> Result<OpTable> {
    let side = sideways_lnd(sigma)?;
    OpTable::from_fn(sigma.size(), |a, b| sigma.lower(side.wdot(a, b), b))
}

/// The structure (associated) rack of a birack.
pub fn structure_rack(sigma: &SigmaTable) -> Result<OpTable> {
    require_birack(sigma)?;
    let rack = structure_operation(sigma)?;
    debug_assert!(check_rack(&rack).holds());
    Ok(rack)
}

/// `(a, b, …, v)_w = (a_w, (b, …, v)_{w^a})`.
pub fn tuple_lower(sigma: &SigmaTable, tuple: &[Element], w: Element) -> Vec<Element> {
    let mut w = w;
    tuple
        .iter()
        .map(|&a| {
            let (lowered, raised) = sigma.apply(w, a);
            w = raised;
            lowered
        })
        .collect()
}

/// `(a, …, u, v)^w = ((a, …, u)^{w_v}, v^w)`.
pub fn tuple_raise(sigma: &SigmaTable, tuple: &[Element], w: Element) -> Vec<Element> {
    let mut w = w;
    let mut out = vec![0; tuple.len()];
    for (slot, &v) in out.iter_mut().zip(tuple).rev() {
        let (lowered, raised) = sigma.apply(v, w);
        *slot = raised;
        w = lowered;
    }
    out
}

/// `J(a₁,…,aₙ) = (a₁, (a₂)_{a₁}, (a₃)_{a₂a₁}, …)` with `(a₃)_{a₂a₁} = ((a₃)_{a₂})_{a₁}`.
pub fn guitar_map(sigma: &SigmaTable, tuple: &[Element]) -> Vec<Element> {
    (0..tuple.len()).map(|i| tuple[..i].iter().rev().fold(tuple[i], |x, &y| sigma.lower(x, y))).collect()
}

/// Inverse of [`guitar_map`]; needs every `x ↦ x_c` to be a bijection.
pub fn guitar_inverse(sigma: &SigmaTable, image: &[Element]) -> Result<Vec<Element>> {
    let inv = sigma
        .lowering_inverses()
        .ok_or_else(|| Error::NotLeftNondegenerate(sigma.first_left_degenerate().map_or(0, |(a, _, _)| a)))?;
    let mut out: Vec<Element> = Vec::with_capacity(image.len());
    for &target in image {
        let x = out.iter().fold(target, |z, &c| inv[c][z]);
        out.push(x);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntwiningViolation {
    pub tuple: Vec<Element>,
    /// 1-based generator index.
    pub generator: usize,
    /// `J(σ_i(tuple))`.
    pub lhs: Vec<Element>,
    /// `σ'_i(J(tuple))`.
    pub rhs: Vec<Element>,
}

/// Checks `J∘σᵢ = σ'ᵢ∘J` on `Sⁿ` for all `1 ≤ i < n`, where `σ'` is `σ_SD` of the structure operation.
pub fn entwining_check(sigma: &SigmaTable, n: usize) -> Result<Check<EntwiningViolation>> {
    if !(2..=4).contains(&n) {
        return Err(Error::Parameter(format!("entwining check needs 2 ≤ n ≤ 4, got {n}")));
    }
    let rack = structure_operation(sigma)?;
    let sigma_prime = sigma_from_shelf(&rack);
    for tuple in crate::tuples(sigma.size(), n) {
        let j = guitar_map(sigma, &tuple);
        for i in 0..n - 1 {
            let mut moved = tuple.clone();
            sigma.apply_at(&mut moved, i);
            let lhs = guitar_map(sigma, &moved);
            let mut rhs = j.clone();
            sigma_prime.apply_at(&mut rhs, i);
            if lhs != rhs {
                return Ok(Check::from_witness(Some(EntwiningViolation { tuple, generator: i + 1, lhs, rhs })));
            }
        }
    }
    Ok(Check::from_witness(None))
}
