//! Dense linear algebra over a [`GaloisField`], with subspaces stored as
//! reduced row echelon bases.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::field::{Elem, GaloisField};
use crate::charring::combinations;
use crate::error::{Error, Result};

pub type Vector = Vec<Elem>;

/// Row-reduces in place and drops zero rows. Returns the pivot columns.
pub fn rref(f: &GaloisField, rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let t = rows[i][c];
                for j in 0..ncols {
                    let v = f.mul(t, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &GaloisField, rows: &[Vector]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Basis of `{y : M y = 0}` for an `ncols`-column matrix `M`.
pub fn kernel(f: &GaloisField, m: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut a = m.to_vec();
    let pivots = rref(f, &mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut out: Vec<Vector> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect();
    rref(f, &mut out);
    out
}

/// Whether the span of `sub` lies in the span of `sup`.
pub fn contains(f: &GaloisField, sup: &[Vector], sub: &[Vector]) -> bool {
    let base = rank(f, sup);
    let mut all = sup.to_vec();
    all.extend_from_slice(sub);
    rank(f, &all) == base
}

/// Dimension of the intersection of two subspaces.
pub fn intersection_dim(f: &GaloisField, a: &[Vector], b: &[Vector]) -> usize {
    let mut all = a.to_vec();
    all.extend_from_slice(b);
    rank(f, a) + rank(f, b) - rank(f, &all)
}

/// `M·v` for a matrix given by rows.
pub fn mat_vec(f: &GaloisField, m: &[Vector], v: &[Elem]) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
        })
        .collect()
}

/// Number of `k`-dimensional subspaces of `F_Q^n`.
pub fn grassmann_count(big_q: u64, n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let q = BigUint::from(big_q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// Errors with [`Error::Resource`] when `candidates` exceeds `budget`.
pub fn check_budget(candidates: &BigUint, budget: u64, what: &str) -> Result<()> {
    match candidates.to_u64() {
        Some(c) if c <= budget => Ok(()),
        _ => Err(Error::Resource(format!(
            "{what}: {candidates} candidates exceed the budget of {budget}"
        ))),
    }
}

/// Depth-first enumeration of the `k`-dimensional subspaces of `F^n` in
/// RREF. `prune` sees each partial basis (rows in order) and may cut the
/// branch by returning `false`; `visit` receives every complete basis.
pub fn enumerate_subspaces(
    f: &GaloisField,
    n: usize,
    k: usize,
    prune: &mut dyn FnMut(&[Vector]) -> bool,
    visit: &mut dyn FnMut(&[Vector]),
) {
    if k > n {
        return;
    }
    for pivots in combinations(n, k) {
        let mut rows: Vec<Vector> = Vec::with_capacity(k);
        fill_rows(f, n, &pivots, &mut rows, prune, visit);
    }
}

fn fill_rows(
    f: &GaloisField,
    n: usize,
    pivots: &[usize],
    rows: &mut Vec<Vector>,
    prune: &mut dyn FnMut(&[Vector]) -> bool,
    visit: &mut dyn FnMut(&[Vector]),
) {
    let i = rows.len();
    if i == pivots.len() {
        visit(rows);
        return;
    }
    let pc = pivots[i];
    let free: Vec<usize> = (pc + 1..n).filter(|c| !pivots.contains(c)).collect();
    let q = f.order() as usize;
    let total = q.pow(free.len() as u32);
    let mut row = vec![0; n];
    row[pc] = 1;
    for code in 0..total {
        let mut c = code;
        for &fc in &free {
            row[fc] = (c % q) as Elem;
            c /= q;
        }
        rows.push(row.clone());
        if prune(rows) {
            fill_rows(f, n, pivots, rows, prune, visit);
        }
        rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        let f = GaloisField::new(2, 2).unwrap();
        for n in 0..=4 {
            for k in 0..=n {
                let mut c = 0u64;
                enumerate_subspaces(&f, n, k, &mut |_| true, &mut |_| c += 1);
                assert_eq!(BigUint::from(c), grassmann_count(4, n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = GaloisField::new(3, 2).unwrap();
        let m = vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]];
        let k = kernel(&f, &m, 4);
        assert_eq!(k.len(), 4 - rank(&f, &m));
        for v in &k {
            assert!(mat_vec(&f, &m, v).iter().all(|&x| x == 0));
        }
    }
}
