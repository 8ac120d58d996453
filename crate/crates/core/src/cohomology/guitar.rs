use std::fmt;

use super::{Cochain, CochainComplex, ComplexKind};
use crate::error::{Error, Result};
use crate::magma::Element;
use crate::solution::{guitar_inverse, guitar_map, require_birack, SigmaTable};
use crate::{tuple_rank, tuple_unrank};

/// How the guitar map is turned into a pullback `J*: C_Bir → C_Br`.
///
/// `(J*f)(ā) = f(ρ(J^{±1}(ρ(ā))))` where `ρ` reverses the tuple when
/// `reversed` is set and the exponent is `−1` when `inverse` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GuitarConvention {
    pub inverse: bool,
    pub reversed: bool,
}

impl GuitarConvention {
    pub const ALL: [GuitarConvention; 4] = [
        GuitarConvention { inverse: false, reversed: false },
        GuitarConvention { inverse: true, reversed: false },
        GuitarConvention { inverse: false, reversed: true },
        GuitarConvention { inverse: true, reversed: true },
    ];
}

impl fmt::Display for GuitarConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let map = if self.inverse { "J^-1" } else { "J" };
        if self.reversed {
            write!(f, "f(rev({map}(rev(a))))")
        } else {
            write!(f, "f({map}(a))")
        }
    }
}

/// The convention under which `J*` is a chain map; pinned by [`select_guitar_convention`].
pub const GUITAR_CONVENTION: GuitarConvention = GuitarConvention { inverse: false, reversed: false };

/// `perm[rank(ā)] = rank(π(ā))` where `(J*f)(ā) = f(π(ā))` in degree `k`.
pub fn guitar_permutation(sigma: &SigmaTable, k: usize, conv: GuitarConvention) -> Result<Vec<usize>> {
    let m = sigma.size();
    let total = m.checked_pow(k as u32).ok_or(Error::Overflow("tuple space"))?;
    (0..total)
        .map(|r| {
            let mut t = tuple_unrank(r, m, k);
            if conv.reversed {
                t.reverse();
            }
            let mut image = if conv.inverse { guitar_inverse(sigma, &t)? } else { guitar_map(sigma, &t) };
            if conv.reversed {
                image.reverse();
            }
            Ok(tuple_rank(&image, m))
        })
        .collect()
}

/// `J*f` under the pinned convention.
pub fn pullback_guitar(sigma: &SigmaTable, f: &Cochain) -> Result<Cochain> {
    pullback_guitar_with(sigma, f, GUITAR_CONVENTION)
}

pub fn pullback_guitar_with(sigma: &SigmaTable, f: &Cochain, conv: GuitarConvention) -> Result<Cochain> {
    require_birack(sigma)?;
    if f.size() != sigma.size() {
        return Err(Error::SizeMismatch(format!("cochain on {} elements, solution on {}", f.size(), sigma.size())));
    }
    let perm = guitar_permutation(sigma, f.degree(), conv)?;
    let values = perm.iter().map(|&p| f.values()[p]).collect();
    Cochain::new(f.size(), f.degree(), f.modulus(), values)
}

/// First pair `(ā, c̄)` (degrees `k+1`, `k`) where the matrices of `d_Br∘J*` and `J*∘d_Bir` differ.
///
/// `None` means `J*` commutes with the differentials from degree `k` exactly over ℤ.
pub fn chain_map_defect(
    sigma: &SigmaTable,
    k: usize,
    conv: GuitarConvention,
) -> Result<Option<(Vec<Element>, Vec<Element>)>> {
    let m = sigma.size();
    let br = CochainComplex::full(ComplexKind::Braided(sigma.clone()))?.full_matrix(k);
    let bir = CochainComplex::full(ComplexKind::Birack(sigma.clone()))?.full_matrix(k);
    let pk = guitar_permutation(sigma, k, conv)?;
    let pk1 = guitar_permutation(sigma, k + 1, conv)?;
    let mut pk_inv = vec![0; pk.len()];
    for (r, &p) in pk.iter().enumerate() {
        pk_inv[p] = r;
    }
    for row in 0..pk1.len() {
        for col in 0..pk.len() {
            if br.get(row, pk_inv[col]) != bir.get(pk1[row], col) {
                return Ok(Some((tuple_unrank(row, m, k + 1), tuple_unrank(col, m, k))));
            }
        }
    }
    Ok(None)
}

/// Outcome of testing every candidate convention on a selection corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionSelection {
    pub passing: Vec<GuitarConvention>,
}

impl ConventionSelection {
    pub fn unique(&self) -> Option<GuitarConvention> {
        match self.passing.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }
}

/// Tests the four candidate conventions on `(birack, max degree)` pairs.
pub fn select_guitar_convention(corpus: &[(SigmaTable, usize)]) -> Result<ConventionSelection> {
    let mut passing = Vec::new();
    'conv: for conv in GuitarConvention::ALL {
        for (sigma, max_degree) in corpus {
            for k in 0..=*max_degree {
                if chain_map_defect(sigma, k, conv)?.is_some() {
                    continue 'conv;
                }
            }
        }
        passing.push(conv);
    }
    Ok(ConventionSelection { passing })
}
