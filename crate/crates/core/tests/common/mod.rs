//! Brute-force reference implementations, written directly from the defining
//! formulas without going through the library's differential or linear algebra.
#![allow(dead_code)]

use sdyb::{OpTable, SigmaTable};

pub fn all_tuples(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..m).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn rank_of(t: &[usize], m: usize) -> usize {
    t.iter().fold(0, |r, &x| r * m + x)
}

/// Dense matrix as rows of i64.
pub type Mat = Vec<Vec<i64>>;

fn matrix_from_terms(m: usize, k: usize, terms: impl Fn(&[usize]) -> Vec<(i64, Vec<usize>)>) -> Mat {
    all_tuples(m, k + 1)
        .iter()
        .map(|t| {
            let mut row = vec![0i64; m.pow(k as u32)];
            for (s, arg) in terms(t) {
                row[rank_of(&arg, m)] += s;
            }
            row
        })
        .collect()
}

pub fn rack_matrix(op: &OpTable, k: usize) -> Mat {
    let m = op.size();
    matrix_from_terms(m, k, |t| {
        let mut terms = Vec::new();
        for i in 0..t.len() {
            let s = if i % 2 == 0 { 1 } else { -1 };
            let mut omit = t.to_vec();
            omit.remove(i);
            terms.push((s, omit));
            let mut act: Vec<usize> = t[..i].iter().map(|&x| op.op(x, t[i])).collect();
            act.extend_from_slice(&t[i + 1..]);
            terms.push((-s, act));
        }
        terms
    })
}

/// `(b_1,…)_w` by the recursion `(a, rest)_w = (a_w, rest_{w^a})`.
pub fn lower_tuple(s: &SigmaTable, t: &[usize], w: usize) -> Vec<usize> {
    if t.is_empty() {
        return vec![];
    }
    let (aw, wa) = s.apply(w, t[0]);
    let mut out = vec![aw];
    out.extend(lower_tuple(s, &t[1..], wa));
    out
}

/// `(rest, v)^w = (rest^{w_v}, v^w)`.
pub fn raise_tuple(s: &SigmaTable, t: &[usize], w: usize) -> Vec<usize> {
    if t.is_empty() {
        return vec![];
    }
    let v = t[t.len() - 1];
    let (wv, vw) = s.apply(v, w);
    let mut out = raise_tuple(s, &t[..t.len() - 1], wv);
    out.push(vw);
    out
}

pub fn braided_matrix(s: &SigmaTable, k: usize) -> Mat {
    let m = s.size();
    matrix_from_terms(m, k, |t| {
        let mut terms = Vec::new();
        for i in 0..t.len() {
            let sg = if i % 2 == 0 { 1 } else { -1 };
            let mut a = t[..i].to_vec();
            a.extend(lower_tuple(s, &t[i + 1..], t[i]));
            terms.push((sg, a));
            let mut b = raise_tuple(s, &t[..i], t[i]);
            b.extend_from_slice(&t[i + 1..]);
            terms.push((-sg, b));
        }
        terms
    })
}

/// `a·b`: the unique `x` with `x_a = b`, found by search.
pub fn dot(s: &SigmaTable, a: usize, b: usize) -> usize {
    let hits: Vec<usize> = (0..s.size()).filter(|&x| s.apply(a, x).0 == b).collect();
    assert_eq!(hits.len(), 1, "not left non-degenerate");
    hits[0]
}

/// `a⊚b = a^(a·b)`.
pub fn wdot(s: &SigmaTable, a: usize, b: usize) -> usize {
    s.apply(a, dot(s, a, b)).1
}

pub fn birack_matrix(s: &SigmaTable, k: usize) -> Mat {
    let m = s.size();
    matrix_from_terms(m, k, |t| {
        let mut terms = Vec::new();
        for i in 0..t.len() {
            let sg = if i % 2 == 0 { 1 } else { -1 };
            let mut omit = t.to_vec();
            omit.remove(i);
            terms.push((sg, omit));
            let mut side: Vec<usize> = t[..i].iter().map(|&x| wdot(s, x, t[i])).collect();
            side.extend(t[i + 1..].iter().map(|&x| dot(s, t[i], x)));
            terms.push((-sg, side));
        }
        terms
    })
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![0i64; cols];
            for (k, &x) in row.iter().enumerate() {
                if x != 0 {
                    for (o, &y) in out.iter_mut().zip(&b[k]) {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn is_zero(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(|&x| x == 0))
}

/// Restricts a matrix to chosen row and column index sets.
pub fn restrict(a: &Mat, rows: &[usize], cols: &[usize]) -> Mat {
    rows.iter().map(|&r| cols.iter().map(|&c| a[r][c]).collect()).collect()
}

/// Rank over the prime field `ℤ_p` by plain Gaussian elimination.
pub fn rank_mod_p(a: &Mat, p: i64) -> usize {
    let mut rows: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = (1..p).find(|&x| x * rows[rank][c] % p == 1).unwrap();
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for j in 0..ncols {
                    rows[r][j] = (rows[r][j] - f * rows[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `|ker D_k| / |im D_{k−1}|` over ℤ_n by enumerating every cochain (tiny spaces only).
pub fn cohomology_order_brute(d_prev: &Mat, d_k: &Mat, dim_prev: usize, dim_k: usize, n: i64) -> u64 {
    let apply = |d: &Mat, v: &[i64]| -> Vec<i64> {
        d.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n)).collect()
    };
    let vectors = |dim: usize| -> Vec<Vec<i64>> {
        all_tuples(n as usize, dim).into_iter().map(|t| t.into_iter().map(|x| x as i64).collect()).collect()
    };
    let kernel = vectors(dim_k).iter().filter(|v| apply(d_k, v).iter().all(|&x| x == 0)).count() as u64;
    let image: std::collections::HashSet<Vec<i64>> = if dim_prev == 0 || d_prev.is_empty() {
        std::iter::once(vec![0; dim_k]).collect()
    } else {
        vectors(dim_prev).iter().map(|v| apply(d_prev, v)).collect()
    };
    kernel / image.len() as u64
}

/// Tuples with no equal neighbours.
pub fn nondegenerate(m: usize, k: usize) -> Vec<usize> {
    all_tuples(m, k).iter().filter(|t| t.windows(2).all(|w| w[0] != w[1])).map(|t| rank_of(t, m)).collect()
}
