use std::collections::BTreeMap;
use std::fmt;

/// A finitely generated abelian group `ℤ_{d₁} ⊕ ℤ_{d₂} ⊕ …` with `d₁ | d₂ | …`.
///
/// `0` stands for an infinite cyclic factor and is listed last. The empty
/// list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupInvariants {
    factors: Vec<u64>,
}

impl GroupInvariants {
    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    /// Normalizes an arbitrary direct sum of cyclic groups (orders `0` = ℤ, `1` dropped).
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        let mut free = 0usize;
        // prime -> exponents
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for d in orders {
            match d {
                0 => free += 1,
                1 => {}
                mut d => {
                    let mut p = 2;
                    while p * p <= d {
                        let mut e = 0;
                        while d % p == 0 {
                            d /= p;
                            e += 1;
                        }
                        if e > 0 {
                            primary.entry(p).or_default().push(e);
                        }
                        p += 1;
                    }
                    if d > 1 {
                        primary.entry(d).or_default().push(1);
                    }
                }
            }
        }
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            // largest exponent goes to the last factor
            for (slot, e) in factors.iter_mut().rev().zip(exps) {
                *slot *= p.pow(e);
            }
        }
        factors.extend(std::iter::repeat_n(0, free));
        Self { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of elements, `None` if infinite.
    pub fn order(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, &d| (d != 0).then(|| acc * d as u128))
    }

    /// Number of cyclic factors; the dimension when the coefficients form a field.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

impl fmt::Display for GroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<(String, usize)> = Vec::new();
        for &d in &self.factors {
            let name = if d == 0 { "Z".to_string() } else { format!("Z/{d}") };
            match parts.last_mut() {
                Some((last, count)) if *last == name => *count += 1,
                _ => parts.push((name, 1)),
            }
        }
        let text: Vec<String> = parts.into_iter().map(|(n, c)| if c == 1 { n } else { format!("({n})^{c}") }).collect();
        write!(f, "{}", text.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let g = GroupInvariants::from_cyclic_orders([6, 4, 1, 0, 2]);
        // ℤ6 ⊕ ℤ4 ⊕ ℤ2 ⊕ ℤ = ℤ2 ⊕ ℤ2 ⊕ ℤ12 ⊕ ℤ
        assert_eq!(g.factors(), &[2, 2, 12, 0]);
        assert_eq!(g.order(), None);
        assert_eq!(g.to_string(), "(Z/2)^2 + Z/12 + Z");
        assert!(GroupInvariants::from_cyclic_orders([1, 1]).is_trivial());
        assert_eq!(GroupInvariants::trivial().to_string(), "0");
        assert_eq!(GroupInvariants::from_cyclic_orders([3, 3, 3]).order(), Some(27));
    }
}
