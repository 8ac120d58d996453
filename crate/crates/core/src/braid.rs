//! Braid words, their coloring action on `Sⁿ`, closure counts and cocycle weights.

use std::fmt;

use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::magma::Element;
use crate::solution::SigmaTable;

/// A word in the braid group on `strands` strands; letter `g > 0` is `σ_g`, `g < 0` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Braid("a braid needs at least one strand".into()));
        }
        for (pos, &g) in letters.iter().enumerate() {
            check_letter(g, strands, pos)?;
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.letters.iter().any(|&g| g < 0)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Braid(format!(
                "cannot compose braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|g| -g).collect() }
    }

    /// `γ⁻¹ β γ`.
    pub fn conjugate_by(&self, gamma: &BraidWord) -> Result<BraidWord> {
        gamma.inverse().concat(self)?.concat(gamma)
    }

    /// Markov stabilization `β ↦ β σ_n` in `B_{n+1}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let g = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { g } else { -g });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// All words of exactly `len` letters on `strands` strands.
    pub fn all_words(strands: usize, len: usize) -> Vec<BraidWord> {
        let alphabet: Vec<i32> = (1..strands as i32).flat_map(|g| [g, -g]).collect();
        if alphabet.is_empty() {
            return if len == 0 { vec![BraidWord { strands, letters: Vec::new() }] } else { Vec::new() };
        }
        crate::tuples(alphabet.len(), len)
            .map(|t| BraidWord { strands, letters: t.iter().map(|&i| alphabet[i]).collect() })
            .collect()
    }
}

fn check_letter(g: i32, strands: usize, pos: usize) -> Result<()> {
    if g == 0 {
        return Err(Error::Braid(format!("letter {} is 0; generators are nonzero", pos + 1)));
    }
    if g.unsigned_abs() as usize >= strands {
        return Err(Error::Braid(format!(
            "letter {} is {g}; on {strands} strands generators satisfy 1 <= |g| <= {}",
            pos + 1,
            strands - 1
        )));
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "{}", text.join(" "))
    }
}

/// Parses whitespace-separated signed generator indices.
pub fn parse_braid(text: &str, strands: usize) -> Result<BraidWord> {
    let letters = text
        .split_whitespace()
        .enumerate()
        .map(|(pos, tok)| {
            tok.parse::<i32>().map_err(|_| Error::Braid(format!("letter {} ({tok:?}) is not an integer", pos + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

/// A colored braid: input colors at the bottom, output at the top, accumulated weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedColoring {
    pub input: Vec<Element>,
    pub output: Vec<Element>,
    pub weight: i64,
}

/// Invariants of a braid closure: coloring count and the weight distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureInvariant {
    pub coloring_count: u64,
    /// Coefficient `i` counts closure colorings of weight `i` (in `ℤ[t]/(tⁿ−1)`).
    pub weight_polynomial: Vec<u64>,
}

impl ClosureInvariant {
    /// `true` when all colorings have weight 0.
    pub fn is_trivial(&self) -> bool {
        self.weight_polynomial.iter().skip(1).all(|&c| c == 0)
    }
}

/// Colors braids with a fixed solution, caching `σ⁻¹` when it exists.
#[derive(Debug, Clone)]
pub struct Colorer<'a> {
    sigma: &'a SigmaTable,
    inverse: Option<SigmaTable>,
}

impl<'a> Colorer<'a> {
    pub fn new(sigma: &'a SigmaTable) -> Self {
        Self { sigma, inverse: sigma.inverse() }
    }

    pub fn sigma(&self) -> &SigmaTable {
        self.sigma
    }

    fn inverse_for(&self, beta: &BraidWord) -> Result<Option<&SigmaTable>> {
        match (&self.inverse, beta.letters.iter().find(|&&g| g < 0)) {
            (None, Some(&g)) => Err(Error::NotInvertible(g)),
            (inv, _) => Ok(inv.as_ref()),
        }
    }

    fn check_input(&self, beta: &BraidWord, input: &[Element]) -> Result<()> {
        if input.len() != beta.strands {
            return Err(Error::SizeMismatch(format!(
                "braid on {} strands, {} colors given",
                beta.strands,
                input.len()
            )));
        }
        if let Some(&x) = input.iter().find(|&&x| x >= self.sigma.size()) {
            return Err(Error::EntryOutOfRange { location: "coloring".into(), value: x, size: self.sigma.size() });
        }
        Ok(())
    }

    fn run(&self, inv: Option<&SigmaTable>, beta: &BraidWord, colors: &mut [Element]) {
        for &g in &beta.letters {
            let i = g.unsigned_abs() as usize - 1;
            if g > 0 {
                self.sigma.apply_at(colors, i);
            } else {
                inv.expect("checked invertible").apply_at(colors, i);
            }
        }
    }

    /// Propagates colors through the word, left to right.
    pub fn act(&self, beta: &BraidWord, input: &[Element]) -> Result<Vec<Element>> {
        self.check_input(beta, input)?;
        let inv = self.inverse_for(beta)?;
        let mut colors = input.to_vec();
        self.run(inv, beta, &mut colors);
        Ok(colors)
    }

    /// Number of fixed points of the action, i.e. colorings of the closure.
    pub fn coloring_count_closure(&self, beta: &BraidWord) -> Result<u64> {
        let inv = self.inverse_for(beta)?;
        let mut count = 0;
        let mut colors = vec![0; beta.strands];
        for t in crate::tuples(self.sigma.size(), beta.strands) {
            colors.copy_from_slice(&t);
            self.run(inv, beta, &mut colors);
            if colors == t {
                count += 1;
            }
        }
        Ok(count)
    }

    fn check_cocycle(&self, phi: &Cochain) -> Result<()> {
        if phi.degree() != 2 {
            return Err(Error::DegreeMismatch { expected: 2, found: phi.degree() });
        }
        if phi.size() != self.sigma.size() {
            return Err(Error::SizeMismatch(format!(
                "cochain on {} elements, solution on {}",
                phi.size(),
                self.sigma.size()
            )));
        }
        Ok(())
    }

    fn run_weighted(&self, inv: Option<&SigmaTable>, phi: &Cochain, beta: &BraidWord, colors: &mut [Element]) -> i64 {
        let mut w = 0i64;
        for &g in &beta.letters {
            let i = g.unsigned_abs() as usize - 1;
            let (a, c) = (colors[i], colors[i + 1]);
            if g > 0 {
                let (low, high) = self.sigma.apply(a, c);
                w += phi.at(&[a, low]);
                colors[i] = low;
                colors[i + 1] = high;
            } else {
                let (p, q) = inv.expect("checked invertible").apply(a, c);
                w -= phi.at(&[p, a]);
                colors[i] = p;
                colors[i + 1] = q;
            }
        }
        if phi.modulus() > 0 {
            w.rem_euclid(phi.modulus() as i64)
        } else {
            w
        }
    }

    /// Output colors and weight `Σ ±φ` of the colored braid.
    pub fn weight(&self, phi: &Cochain, beta: &BraidWord, input: &[Element]) -> Result<WeightedColoring> {
        self.check_cocycle(phi)?;
        self.check_input(beta, input)?;
        let inv = self.inverse_for(beta)?;
        let mut colors = input.to_vec();
        let weight = self.run_weighted(inv, phi, beta, &mut colors);
        Ok(WeightedColoring { input: input.to_vec(), output: colors, weight })
    }

    /// One row per input tuple, in lexicographic order.
    pub fn weight_table(&self, phi: &Cochain, beta: &BraidWord) -> Result<Vec<WeightedColoring>> {
        self.check_cocycle(phi)?;
        let inv = self.inverse_for(beta)?;
        Ok(crate::tuples(self.sigma.size(), beta.strands)
            .map(|input| {
                let mut colors = input.clone();
                let weight = self.run_weighted(inv, phi, beta, &mut colors);
                WeightedColoring { input, output: colors, weight }
            })
            .collect())
    }

    /// Coloring count and weight distribution over the closure colorings.
    pub fn weight_polynomial_closure(&self, phi: &Cochain, beta: &BraidWord) -> Result<ClosureInvariant> {
        let n = phi.modulus();
        if n < 2 {
            return Err(Error::Parameter("weight polynomials need a cochain modulus n ≥ 2".into()));
        }
        let mut weight_polynomial = vec![0u64; n as usize];
        let mut coloring_count = 0;
        for row in self.weight_table(phi, beta)? {
            if row.input == row.output {
                coloring_count += 1;
                weight_polynomial[row.weight as usize] += 1;
            }
        }
        Ok(ClosureInvariant { coloring_count, weight_polynomial })
    }
}

pub fn act(sigma: &SigmaTable, beta: &BraidWord, input: &[Element]) -> Result<Vec<Element>> {
    Colorer::new(sigma).act(beta, input)
}

pub fn coloring_count_closure(sigma: &SigmaTable, beta: &BraidWord) -> Result<u64> {
    Colorer::new(sigma).coloring_count_closure(beta)
}

pub fn weight(sigma: &SigmaTable, phi: &Cochain, beta: &BraidWord, input: &[Element]) -> Result<i64> {
    Ok(Colorer::new(sigma).weight(phi, beta, input)?.weight)
}

pub fn weight_polynomial_closure(sigma: &SigmaTable, phi: &Cochain, beta: &BraidWord) -> Result<ClosureInvariant> {
    Colorer::new(sigma).weight_polynomial_closure(phi, beta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RMove {
    R2,
    R3,
}

impl fmt::Display for RMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RMove::R2 => "R-II",
            RMove::R3 => "R-III",
        })
    }
}

/// Two words related by a single Reidemeister rewrite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPair {
    pub kind: RMove,
    pub left: BraidWord,
    pub right: BraidWord,
}

/// R-II cancellations `g −g`, `−g g` ↔ ε and the positive, negative and
/// mixed-sign R-III relations between adjacent generators.
pub fn standard_word_pairs(strands: usize) -> Vec<WordPair> {
    let pair = |kind, l: Vec<i32>, r: Vec<i32>| WordPair {
        kind,
        left: BraidWord { strands, letters: l },
        right: BraidWord { strands, letters: r },
    };
    let mut out = Vec::new();
    for g in 1..strands as i32 {
        out.push(pair(RMove::R2, vec![g, -g], vec![]));
        out.push(pair(RMove::R2, vec![-g, g], vec![]));
    }
    for g in 1..strands as i32 - 1 {
        let h = g + 1;
        out.push(pair(RMove::R3, vec![g, h, g], vec![h, g, h]));
        out.push(pair(RMove::R3, vec![-g, -h, -g], vec![-h, -g, -h]));
        out.push(pair(RMove::R3, vec![g, h, -g], vec![-h, g, h]));
        out.push(pair(RMove::R3, vec![-g, h, g], vec![h, g, -h]));
    }
    out
}

/// A word pair whose weights (or actions) disagree on some input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMoveFailure {
    pub pair: usize,
    pub kind: RMove,
    pub input: Vec<Element>,
    pub left: WeightedColoring,
    pub right: WeightedColoring,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RMoveReport {
    pub pairs_checked: usize,
    pub failures: Vec<RMoveFailure>,
}

impl RMoveReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, kind: RMove) -> bool {
        self.failures.iter().any(|f| f.kind == kind)
    }
}

/// Compares input-by-input weights and outputs across each pair; records the first failing input per pair.
pub fn rmove_invariance_suite(sigma: &SigmaTable, phi: &Cochain, pairs: &[WordPair]) -> Result<RMoveReport> {
    let colorer = Colorer::new(sigma);
    let mut report = RMoveReport::default();
    for (idx, p) in pairs.iter().enumerate() {
        let left = colorer.weight_table(phi, &p.left)?;
        let right = colorer.weight_table(phi, &p.right)?;
        report.pairs_checked += 1;
        if let Some((l, r)) = left.into_iter().zip(right).find(|(l, r)| l != r) {
            report.failures.push(RMoveFailure { pair: idx, kind: p.kind, input: l.input.clone(), left: l, right: r });
        }
    }
    Ok(report)
}
