//! Integer and ℤ_n matrix routines: Smith forms, Howell form, rank mod p.

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.data.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Entrywise reduction into `[0, n)`.
    pub fn reduce(&self, n: u64) -> IntMatrix {
        let n = n as i64;
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v.rem_euclid(n)).collect() }
    }
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

pub(crate) fn gcd_u(a: u64, b: u64) -> u64 {
    crate::magma::gcd(a, b)
}

/// Nonzero invariant factors of an integer matrix (Smith normal form over ℤ), ascending.
pub fn elementary_divisors(a: &IntMatrix) -> Result<Vec<u64>> {
    let (r, c) = (a.nrows(), a.ncols());
    let mut m: Vec<Vec<i128>> = (0..r).map(|i| a.row(i).iter().map(|&v| v as i128).collect()).collect();
    let mut out = Vec::new();
    let ovf = || Error::Overflow("integer Smith normal form");
    for t in 0..r.min(c) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(i128, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(b, _, _)| v.abs() < b) {
                    best = Some((v.abs(), i, j));
                }
            }
        }
        let Some((_, bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..r {
                if m[i][t] != 0 {
                    let q = m[i][t] / p;
                    for j in t..c {
                        let v = q.checked_mul(m[t][j]).ok_or_else(ovf)?;
                        m[i][j] = m[i][j].checked_sub(v).ok_or_else(ovf)?;
                    }
                    clean &= m[i][t] == 0;
                }
            }
            for j in t + 1..c {
                if m[t][j] != 0 {
                    let q = m[t][j] / p;
                    for row in m.iter_mut().skip(t) {
                        let v = q.checked_mul(row[t]).ok_or_else(ovf)?;
                        row[j] = row[j].checked_sub(v).ok_or_else(ovf)?;
                    }
                    clean &= m[t][j] == 0;
                }
            }
            if !clean {
                // bring the smallest remainder in row/column t to the pivot
                let mut best = (p.abs(), t, t);
                for i in t + 1..r {
                    if m[i][t] != 0 && m[i][t].abs() < best.0 {
                        best = (m[i][t].abs(), i, t);
                    }
                }
                for j in t + 1..c {
                    if m[t][j] != 0 && m[t][j].abs() < best.0 {
                        best = (m[t][j].abs(), t, j);
                    }
                }
                m.swap(t, best.1);
                for row in m.iter_mut() {
                    row.swap(t, best.2);
                }
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..c {
                        m[t][j] = m[t][j].checked_add(m[i][j]).ok_or_else(ovf)?;
                    }
                }
                None => break,
            }
        }
        out.push(m[t][t].unsigned_abs() as u64);
    }
    out.sort_unstable();
    Ok(out)
}

/// Rank over ℤ_p for a prime `p`.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    let pi = p as i64;
    let mut m: Vec<Vec<i64>> = (0..a.nrows()).map(|i| a.row(i).iter().map(|v| v.rem_euclid(pi)).collect()).collect();
    let mut rank = 0;
    for col in 0..a.ncols() {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, piv);
        let inv = mod_inverse(m[rank][col] as u64, p).expect("prime modulus") as i64;
        for v in m[rank].iter_mut() {
            *v = *v * inv % pi;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v - f * pv).rem_euclid(pi);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, n as i128);
    (g == 1).then(|| x.rem_euclid(n as i128) as u64)
}

/// A unit `u` of ℤ_n with `u·a ≡ gcd(a, n) (mod n)`.
fn normalizing_unit(a: u64, n: u64) -> u64 {
    let g = gcd_u(a, n);
    let reduced = n / g;
    if reduced == 1 {
        return 1;
    }
    let base = mod_inverse(a / g % reduced, reduced).expect("coprime after dividing out the gcd");
    (0..g).map(|k| base + k * reduced).find(|&u| gcd_u(u, n) == 1).expect("a unit lift exists")
}

/// Smith form over ℤ_n with transforms: `left · A · right ≡ diag (mod n)`.
#[derive(Debug, Clone)]
pub struct SmithModN {
    pub modulus: u64,
    /// Diagonal entries in `[0, n)`, each a divisor of `n` or zero; length `min(rows, cols)`.
    pub diag: Vec<u64>,
    pub left: Vec<Vec<u64>>,
    pub right: Vec<Vec<u64>>,
}

impl SmithModN {
    pub fn compute(a: &IntMatrix, n: u64) -> SmithModN {
        assert!(n >= 2, "modulus must be at least 2");
        let (r, c) = (a.nrows(), a.ncols());
        let ni = n as i128;
        let md = |v: i128| v.rem_euclid(ni);
        let mut m: Vec<Vec<i128>> = (0..r).map(|i| a.row(i).iter().map(|&v| md(v as i128)).collect()).collect();
        let mut left: Vec<Vec<i128>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i128).collect()).collect();
        let mut right: Vec<Vec<i128>> = (0..c).map(|i| (0..c).map(|j| (i == j) as i128).collect()).collect();

        // row op on rows i, j: (ri, rj) <- (x ri + y rj, z ri + w rj)
        let row_op = |m: &mut Vec<Vec<i128>>, i: usize, j: usize, x: i128, y: i128, z: i128, w: i128| {
            for k in 0..m[i].len() {
                let (a, b) = (m[i][k], m[j][k]);
                m[i][k] = md(x * a + y * b);
                m[j][k] = md(z * a + w * b);
            }
        };
        let col_op = |m: &mut Vec<Vec<i128>>, i: usize, j: usize, x: i128, y: i128, z: i128, w: i128| {
            for row in m.iter_mut() {
                let (a, b) = (row[i], row[j]);
                row[i] = md(x * a + y * b);
                row[j] = md(z * a + w * b);
            }
        };
        let gn = |v: i128| gcd_u(v as u64, n);

        let mut diag = Vec::with_capacity(r.min(c));
        for t in 0..r.min(c) {
            loop {
                let mut best: Option<(u64, usize, usize)> = None;
                for i in t..r {
                    for j in t..c {
                        if m[i][j] != 0 {
                            let g = gn(m[i][j]);
                            if best.is_none_or(|(b, _, _)| g < b) {
                                best = Some((g, i, j));
                            }
                        }
                    }
                }
                let Some((_, bi, bj)) = best else { break };
                if bi != t {
                    m.swap(t, bi);
                    left.swap(t, bi);
                }
                if bj != t {
                    for row in m.iter_mut() {
                        row.swap(t, bj);
                    }
                    // right acts on columns: right <- right * P, i.e. swap columns of right
                    for row in right.iter_mut() {
                        row.swap(t, bj);
                    }
                }
                let u = normalizing_unit(m[t][t] as u64, n) as i128;
                for k in 0..c {
                    m[t][k] = md(m[t][k] * u);
                }
                for k in 0..r {
                    left[t][k] = md(left[t][k] * u);
                }
                let p = m[t][t];
                let mut clean = true;
                for i in t + 1..r {
                    let v = m[i][t];
                    if v == 0 {
                        continue;
                    }
                    if v % p == 0 {
                        let q = v / p;
                        row_op(&mut m, t, i, 1, 0, -q, 1);
                        row_op(&mut left, t, i, 1, 0, -q, 1);
                    } else {
                        let (g, s, x) = egcd(p, v);
                        let (pa, vb) = (p / g, v / g);
                        row_op(&mut m, t, i, s, x, vb, -pa);
                        row_op(&mut left, t, i, s, x, vb, -pa);
                        clean = false;
                        break;
                    }
                }
                if !clean {
                    continue;
                }
                for j in t + 1..c {
                    let v = m[t][j];
                    if v == 0 {
                        continue;
                    }
                    if v % p == 0 {
                        let q = v / p;
                        col_op(&mut m, t, j, 1, 0, -q, 1);
                        col_op(&mut right, t, j, 1, 0, -q, 1);
                    } else {
                        let (g, s, x) = egcd(p, v);
                        let (pa, vb) = (p / g, v / g);
                        col_op(&mut m, t, j, s, x, vb, -pa);
                        col_op(&mut right, t, j, s, x, vb, -pa);
                        clean = false;
                        break;
                    }
                }
                if !clean {
                    continue;
                }
                // pivot must divide the trailing block
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| m[i][j] % p != 0));
                match bad {
                    Some(i) => {
                        row_op(&mut m, t, i, 1, 1, 0, 1);
                        row_op(&mut left, t, i, 1, 1, 0, 1);
                    }
                    None => break,
                }
            }
            diag.push(m[t][t] as u64);
        }
        let conv = |v: Vec<Vec<i128>>| v.into_iter().map(|r| r.into_iter().map(|x| x as u64).collect()).collect();
        SmithModN { modulus: n, diag, left: conv(left), right: conv(right) }
    }

    fn rows(&self) -> usize {
        self.left.len()
    }

    fn cols(&self) -> usize {
        self.right.len()
    }

    /// Generators of `{x : A x ≡ 0}` as vectors mod n.
    pub fn kernel_generators(&self) -> Vec<Vec<u64>> {
        let n = self.modulus;
        let mut out = Vec::new();
        for j in 0..self.cols() {
            let d = self.diag.get(j).copied().unwrap_or(0);
            let mult = n.checked_div(d).unwrap_or(1);
            if mult % n == 0 {
                continue;
            }
            out.push(self.right.iter().map(|row| row[j] * mult % n).collect());
        }
        out
    }

    /// A solution of `A x ≡ b (mod n)`, if one exists.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        let n = self.modulus as u128;
        let h: Vec<u64> = self
            .left
            .iter()
            .map(|row| (row.iter().zip(b).map(|(&u, &v)| u as u128 * v as u128 % n).sum::<u128>() % n) as u64)
            .collect();
        let mut y = vec![0u64; self.cols()];
        for i in 0..self.rows() {
            let d = self.diag.get(i).copied().unwrap_or(0);
            if d == 0 {
                if h[i] != 0 {
                    return None;
                }
            } else {
                if !h[i].is_multiple_of(d) {
                    return None;
                }
                y[i] = h[i] / d;
            }
        }
        Some(
            self.right
                .iter()
                .map(|row| (row.iter().zip(&y).map(|(&v, &w)| v as u128 * w as u128 % n).sum::<u128>() % n) as u64)
                .collect(),
        )
    }

    /// `|{x : A x ≡ 0}|` as a multiset of cyclic orders.
    pub fn kernel_orders(&self) -> Vec<u64> {
        let n = self.modulus;
        (0..self.cols()).map(|j| self.diag.get(j).map_or(n, |&d| if d == 0 { n } else { d })).collect()
    }

    /// `|image|` as a multiset of cyclic orders.
    pub fn image_orders(&self) -> Vec<u64> {
        let n = self.modulus;
        self.diag.iter().filter(|&&d| d != 0).map(|&d| n / d).collect()
    }
}

/// Howell form of the row span of `rows` over ℤ_n: the canonical echelon basis.
pub fn howell_form(rows: Vec<Vec<u64>>, n: u64) -> Vec<Vec<u64>> {
    let ni = n as i128;
    let width = rows.first().map_or(0, Vec::len);
    let mut pool: Vec<Vec<i128>> = rows.into_iter().map(|r| r.into_iter().map(|v| v as i128 % ni).collect()).collect();
    pool.retain(|r| r.iter().any(|&v| v != 0));
    let mut basis: Vec<Vec<i128>> = Vec::new();
    let combine = |a: &[i128], b: &[i128], x: i128, y: i128| -> Vec<i128> {
        a.iter().zip(b).map(|(&p, &q)| (x * p + y * q).rem_euclid(ni)).collect()
    };
    for col in 0..width {
        let (mut hits, rest): (Vec<_>, Vec<_>) = pool.into_iter().partition(|r| r[col] != 0);
        pool = rest;
        let Some(mut pivot) = hits.pop() else { continue };
        for other in hits {
            let (a, b) = (pivot[col], other[col]);
            let (g, s, x) = egcd(a, b);
            let new_pivot = combine(&pivot, &other, s, x);
            let leftover = combine(&pivot, &other, b / g, -(a / g));
            pivot = new_pivot;
            if leftover.iter().any(|&v| v != 0) {
                pool.push(leftover);
            }
        }
        let u = normalizing_unit(pivot[col] as u64, n) as i128;
        pivot = pivot.iter().map(|&v| (v * u).rem_euclid(ni)).collect();
        let g = pivot[col];
        // annihilator multiple stays in the span with a zero at this column
        let ann: Vec<i128> = pivot.iter().map(|&v| (v * (ni / g)).rem_euclid(ni)).collect();
        if ann.iter().any(|&v| v != 0) {
            pool.push(ann);
        }
        for row in basis.iter_mut() {
            let q = row[col] / g;
            if q != 0 {
                *row = combine(row, &pivot, 1, -q);
            }
        }
        basis.push(pivot);
    }
    basis.into_iter().map(|r| r.into_iter().map(|v| v as u64).collect()).collect()
}
