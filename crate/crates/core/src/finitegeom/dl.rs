//! Point counts of unitary Deligne–Lusztig varieties by exhaustive
//! enumeration over `F_{q^{2e}}`.

use std::sync::Arc;

use num_bigint::BigUint;

use super::field::{prime_power, Elem, GaloisField};
use super::linalg::{self, check_budget, enumerate_subspaces, grassmann_count, Vector};
use super::DEFAULT_BUDGET;
use crate::error::{domain, Error, Result};

/// A semilinear pairing `{x, y} = σ(x)ᵀ J′ y` on `F_{q²}^N` whose kernel has
/// dimension `d`. `J′` is the antidiagonal of `ε` on the first `N − d`
/// coordinates, with `ε^q = −ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearPair {
    q: u32,
    n: usize,
    d: usize,
}

/// The pairing realised over `F_{q^{2e}}`, with `σ` the `q`-power map.
#[derive(Clone, Debug)]
pub struct PairOver {
    pub field: Arc<GaloisField>,
    pub q: u32,
    pub n: usize,
    pub gram: Vec<Vector>,
}

impl SemilinearPair {
    pub fn new(q: u32, n: usize, d: usize) -> Result<SemilinearPair> {
        if prime_power(q).is_none() {
            return domain(format!("{q} is not a prime power"));
        }
        if d > n {
            return domain(format!("kernel dimension {d} exceeds N = {n}"));
        }
        Ok(SemilinearPair { q, n, d })
    }

    pub fn nondegenerate(q: u32, n: usize) -> Result<SemilinearPair> {
        Self::new(q, n, 0)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kernel_dim(&self) -> usize {
        self.d
    }

    /// Builds `J′` over the degree-`e` extension and asserts `σ(J′)ᵀ = −J′`.
    pub fn over(&self, e: u32) -> Result<PairOver> {
        if !(1..=2).contains(&e) {
            return domain(format!("extension degree {e} not in {{1, 2}}"));
        }
        let order = self.q.checked_pow(2 * e).filter(|&o| o <= super::field::MAX_ORDER);
        let Some(order) = order else {
            return Err(Error::Resource(format!("F_{{{}^{}}} is too large", self.q, 2 * e)));
        };
        let field = GaloisField::of_order(order)?;
        let eps = if self.q.is_multiple_of(2) {
            1
        } else {
            let units = (order - 1) as u64;
            let sub = (self.q * self.q - 1) as u64;
            let h = field.pow(field.primitive(), units / sub);
            field.pow(h, (self.q as u64).div_ceil(2))
        };
        let live = self.n - self.d;
        let gram: Vec<Vector> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if i < live && j < live && i + j + 1 == live { eps } else { 0 })
                    .collect()
            })
            .collect();
        let pair = PairOver { field, q: self.q, n: self.n, gram };
        for i in 0..self.n {
            for j in 0..self.n {
                let lhs = pair.sigma(pair.gram[j][i]);
                let rhs = pair.field.neg(pair.gram[i][j]);
                if lhs != rhs {
                    return Err(Error::Invariant("semilinear Gram is not admissible".into()));
                }
            }
        }
        Ok(pair)
    }
}

impl PairOver {
    pub fn sigma(&self, a: Elem) -> Elem {
        self.field.pow(a, self.q as u64)
    }

    pub fn pairing(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let f = &self.field;
        let sx: Vec<Elem> = x.iter().map(|&v| self.sigma(v)).collect();
        let jy = linalg::mat_vec(f, &self.gram, y);
        sx.iter().zip(&jy).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// `H^⊣ = {y : {x, y} = 0 for all x ∈ H}` as an RREF basis.
    pub fn right_orth(&self, h: &[Vector]) -> Vec<Vector> {
        let f = &self.field;
        let rows: Vec<Vector> = h
            .iter()
            .map(|b| {
                let sb: Vec<Elem> = b.iter().map(|&v| self.sigma(v)).collect();
                // Row vector σ(b)ᵀ J′.
                (0..self.n)
                    .map(|j| {
                        (0..self.n).fold(0, |acc, i| f.add(acc, f.mul(sb[i], self.gram[i][j])))
                    })
                    .collect()
            })
            .collect();
        linalg::kernel(f, &rows, self.n)
    }
}

/// Points of `DL(h)` over `F_{q^{2e}}`: rank-`h` subspaces `H` with `H^⊣ ⊆ H`.
pub fn dl_points(pair: &SemilinearPair, h: usize, e: u32) -> Result<u64> {
    dl_points_with_budget(pair, h, e, DEFAULT_BUDGET)
}

pub fn dl_points_with_budget(pair: &SemilinearPair, h: usize, e: u32, budget: u64) -> Result<u64> {
    let n = pair.n;
    if h > n {
        return Ok(0);
    }
    let over = pair.over(e)?;
    check_budget(&grassmann_count(over.field.order() as u64, n, h), budget, "DL enumeration")?;
    let mut count = 0;
    enumerate_subspaces(&over.field, n, h, &mut |_| true, &mut |rows| {
        if linalg::contains(&over.field, rows, &over.right_orth(rows)) {
            count += 1;
        }
    });
    Ok(count)
}

/// Points of `DL•` over `F_{q^{2e}}`: pairs `H₂ ⊂ H₁` of ranks `⌈N/2⌉ − 1`
/// and `⌈N/2⌉` with `V^⊣ ⊆ H₂ ⊆ H₁ ⊆ H₂^⊣` and `H₂ ⊆ H₁^⊣ ⊆ H₂^⊣`.
pub fn dl_bullet_points(pair: &SemilinearPair, e: u32) -> Result<u64> {
    dl_bullet_points_with_budget(pair, e, DEFAULT_BUDGET)
}

pub fn dl_bullet_points_with_budget(pair: &SemilinearPair, e: u32, budget: u64) -> Result<u64> {
    let n = pair.n;
    let h1 = n.div_ceil(2);
    if h1 == 0 {
        return Ok(0);
    }
    let h2 = h1 - 1;
    let over = pair.over(e)?;
    let f = over.field.clone();
    let big_q = f.order() as u64;
    let bound: BigUint = grassmann_count(big_q, n, h2) * grassmann_count(big_q, n, 1);
    check_budget(&bound, budget, "DL• enumeration")?;
    let v_perp = over.right_orth(&identity(n));
    let mut count = 0;
    enumerate_subspaces(&f, n, h2, &mut |_| true, &mut |h2_rows| {
        if !linalg::contains(&f, h2_rows, &v_perp) {
            return;
        }
        let h2_orth = over.right_orth(h2_rows);
        if !linalg::contains(&f, &h2_orth, h2_rows) {
            return;
        }
        let complement = extend_to_basis(&f, h2_rows, &h2_orth);
        enumerate_subspaces(&f, complement.len(), 1, &mut |_| true, &mut |line| {
            let mut h1_rows = h2_rows.to_vec();
            h1_rows.push(combine(&f, &line[0], &complement, n));
            let h1_orth = over.right_orth(&h1_rows);
            if linalg::contains(&f, &h1_orth, h2_rows) {
                count += 1;
            }
        });
    });
    Ok(count)
}

fn identity(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| (0..n).map(|j| Elem::from(i == j)).collect())
        .collect()
}

/// Vectors of `sup` completing a basis of `sub` to one of `sup`.
fn extend_to_basis(f: &GaloisField, sub: &[Vector], sup: &[Vector]) -> Vec<Vector> {
    let mut cur = sub.to_vec();
    let mut out = Vec::new();
    for v in sup {
        let before = linalg::rank(f, &cur);
        cur.push(v.clone());
        if linalg::rank(f, &cur) > before {
            out.push(v.clone());
        } else {
            cur.pop();
        }
    }
    out
}

fn combine(f: &GaloisField, coeffs: &[Elem], basis: &[Vector], n: usize) -> Vector {
    let mut v = vec![0; n];
    for (&c, b) in coeffs.iter().zip(basis) {
        for (x, &y) in v.iter_mut().zip(b) {
            *x = f.add(*x, f.mul(c, y));
        }
    }
    v
}

/// `dim DL(h) = (2h − N − d)(N − h)` when nonempty.
pub fn dl_expected_dimension(n: usize, d: usize, h: usize) -> Option<usize> {
    (2 * h >= n + d && h <= n).then(|| (2 * h - n - d) * (n - h))
}

/// Dimension suggested by point counts over two extension degrees, using
/// `#X(F_{Q^e}) ≈ Q^{e·dim}` with `Q = q²`. This is the one place in the
/// crate that uses floating point.
pub fn dimension_estimate(q: u32, count_e1: u64, count_e2: u64) -> Option<f64> {
    (count_e1 > 0 && count_e2 > 0)
        .then(|| ((count_e2 as f64) / (count_e1 as f64)).ln() / (2.0 * (q as f64).ln()))
}
