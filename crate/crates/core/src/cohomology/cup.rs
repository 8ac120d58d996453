use super::Cochain;
use crate::error::{Error, Result};
use crate::solution::{check_braided, SigmaTable};

/// Braided cup product `f ⌣ g` of degrees `k` and `l`.
///
/// Every `(k,l)`-shuffle marks `k` of the `k+l` input strands red. Red strands
/// slide down to the bottom `k` positions, each passage of a red strand over a
/// blue one being a crossing `σ(blue, red)`; `f` reads the bottom `k` colors,
/// `g` the top `l`, and the term carries the sign `(−1)^{#crossings}`.
pub fn cup_product(sigma: &SigmaTable, f: &Cochain, g: &Cochain) -> Result<Cochain> {
    let m = sigma.size();
    if f.size() != m || g.size() != m {
        return Err(Error::SizeMismatch(format!(
            "cochains on {} and {} elements, solution on {m}",
            f.size(),
            g.size()
        )));
    }
    if f.modulus() != g.modulus() {
        return Err(Error::SizeMismatch(format!("moduli differ: {} and {}", f.modulus(), g.modulus())));
    }
    if let Some(v) = check_braided(sigma).witness {
        return Err(Error::Parameter(format!("cup product needs a braided set: {v}")));
    }
    let (k, l) = (f.degree(), g.degree());
    let n = k + l;
    let shuffles: Vec<Vec<usize>> = subsets(n, k);
    let values = crate::tuples(m, n)
        .map(|t| {
            let mut acc = 0i64;
            for reds in &shuffles {
                let mut colors = t.clone();
                let mut crossings = 0usize;
                for (target, &start) in reds.iter().enumerate() {
                    for p in (target..start).rev() {
                        sigma.apply_at(&mut colors, p);
                        crossings += 1;
                    }
                }
                let term = f.at(&colors[..k]) * g.at(&colors[k..]);
                acc += if crossings.is_multiple_of(2) { term } else { -term };
            }
            acc
        })
        .collect();
    Cochain::new(m, n, f.modulus(), values)
}

/// Increasing `k`-element subsets of `0..n`.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
