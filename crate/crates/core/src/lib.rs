//! Finite self-distributive structures and set-theoretic Yang–Baxter solutions.
//!
//! Elements of a carrier of size `m` are the integers `0..m`. Binary operations
//! live in [`OpTable`] (`table[a][b] = a ◁ b`, right self-distributive
//! convention) and solutions in [`SigmaTable`] (`σ(a,b) = (b_a, a^b)`).
//! On top of those sit braid coloring invariants ([`braid`]) and rack,
//! braided and birack cohomology over ℤ_n ([`cohomology`]).

pub mod braid;
pub mod cli;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod io;
pub mod magma;
pub mod solution;

pub use braid::{parse_braid, BraidWord, ClosureInvariant, Colorer};
pub use cohomology::{Cochain, CochainComplex, ComplexKind, GroupInvariants, Subcomplex};
pub use error::{Error, Result};
pub use magma::{AxiomReport, Element, OpTable};
pub use solution::{SidewaysTables, SigmaTable, SolutionReport};

/// All `m^n` tuples over `0..m` in lexicographic order (first entry most significant).
pub fn tuples(m: usize, n: usize) -> impl Iterator<Item = Vec<Element>> {
    let total = m.checked_pow(n as u32).expect("tuple space overflows usize");
    (0..total).map(move |r| tuple_unrank(r, m, n))
}

/// Lexicographic rank of a tuple over `0..m`.
#[inline]
pub fn tuple_rank(tuple: &[Element], m: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * m + x)
}

pub fn tuple_unrank(mut rank: usize, m: usize, n: usize) -> Vec<Element> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = rank % m;
        rank /= m;
    }
    out
}
