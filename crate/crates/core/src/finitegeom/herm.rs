//! Hermitian spaces over `F_{q²}` and their totally isotropic subspaces.

use num_bigint::BigInt;

use super::field::{Elem, Fq2};
use super::linalg::{self, check_budget, enumerate_subspaces, grassmann_count, Vector};
use super::DEFAULT_BUDGET;
use crate::error::{domain, Error, Result};
use crate::qcalc::{odd_product, q_binomial, ProductVariant, QBase};

/// `F_{q²}^N` with a hermitian Gram matrix, `(x, y) = Σ x_i G_ij σ(y_j)`.
#[derive(Clone, Debug)]
pub struct HermSpace {
    field: Fq2,
    n: usize,
    gram: Vec<Vector>,
    budget: u64,
}

impl HermSpace {
    /// The standard space with antidiagonal Gram matrix.
    pub fn new(q: u32, n: usize) -> Result<HermSpace> {
        let field = Fq2::new(q)?;
        let gram = (0..n)
            .map(|i| (0..n).map(|j| Elem::from(i + j + 1 == n)).collect())
            .collect();
        HermSpace::with_gram(field, gram)
    }

    /// Checks that `gram` is conjugate-symmetric and invertible.
    pub fn with_gram(field: Fq2, gram: Vec<Vector>) -> Result<HermSpace> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return domain("Gram matrix must be square");
        }
        for i in 0..n {
            for j in 0..n {
                if field.conj(gram[j][i]) != gram[i][j] {
                    return domain("Gram matrix is not conjugate-symmetric");
                }
            }
        }
        if linalg::rank(&field, &gram) != n {
            return domain("Gram matrix is singular");
        }
        Ok(HermSpace { field, n, gram, budget: DEFAULT_BUDGET })
    }

    /// Replaces the enumeration budget (number of candidate subspaces).
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn field(&self) -> &Fq2 {
        &self.field
    }

    pub fn form(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                let g = self.gram[i][j];
                if g != 0 && yj != 0 {
                    acc = f.add(acc, f.mul(f.mul(xi, g), f.conj(yj)));
                }
            }
        }
        acc
    }

    fn newest_row_isotropic(&self, rows: &[Vector]) -> bool {
        let last = rows.last().expect("nonempty");
        rows.iter().all(|r| self.form(r, last) == 0)
    }

    fn for_each_isotropic(&self, dim: usize, visit: &mut dyn FnMut(&[Vector])) -> Result<()> {
        let candidates = grassmann_count(self.field.order() as u64, self.n, dim);
        check_budget(&candidates, self.budget, "isotropic enumeration")?;
        enumerate_subspaces(
            &self.field,
            self.n,
            dim,
            &mut |rows| self.newest_row_isotropic(rows),
            visit,
        );
        Ok(())
    }

    /// All totally isotropic subspaces of dimension `dim`, as RREF bases.
    pub fn enumerate_isotropic(&self, dim: usize) -> Result<Vec<Vec<Vector>>> {
        let mut out = Vec::new();
        self.for_each_isotropic(dim, &mut |rows| out.push(rows.to_vec()))?;
        Ok(out)
    }

    pub fn count_isotropic(&self, dim: usize) -> Result<u64> {
        let mut c = 0;
        self.for_each_isotropic(dim, &mut |_| c += 1)?;
        Ok(c)
    }

    /// The maximal isotropic subspace spanned by the first `⌊N/2⌋` basis
    /// vectors (isotropic for the antidiagonal Gram matrix).
    pub fn standard_maximal(&self) -> Vec<Vector> {
        (0..self.n / 2)
            .map(|i| {
                let mut v = vec![0; self.n];
                v[i] = 1;
                v
            })
            .collect()
    }

    /// Histogram over `s` of maximal isotropic `Y` with
    /// `dim(Y ∩ Y₀) = ⌊N/2⌋ − s`.
    pub fn meeting_histogram(&self) -> Result<Vec<u64>> {
        let r = self.n / 2;
        let y0 = self.standard_maximal();
        if y0.iter().any(|v| self.form(v, v) != 0) {
            return Err(Error::Invariant("standard maximal subspace is not isotropic".into()));
        }
        let mut hist = vec![0u64; r + 1];
        let f = self.field.field().clone();
        self.for_each_isotropic(r, &mut |rows| {
            let meet = linalg::intersection_dim(&f, rows, &y0);
            hist[r - meet] += 1;
        })?;
        Ok(hist)
    }
}

/// Number of maximal totally isotropic subspaces of the standard space.
pub fn count_max_isotropic(q: u32, n: usize) -> Result<u64> {
    HermSpace::new(q, n)?.count_isotropic(n / 2)
}

/// Closed form `Π (q^{2i∓1}+1)` for [`count_max_isotropic`].
pub fn max_isotropic_closed_form(q: u32, n: usize) -> BigInt {
    let r = (n / 2) as u32;
    let variant = ProductVariant::for_rank(n as u32);
    odd_product(r, variant)
        .eval_integer(&BigInt::from(q))
        .expect("polynomial product")
}

/// Maximal isotropic subspaces meeting the standard one in dimension `⌊N/2⌋ − s`.
pub fn count_meeting(q: u32, n: usize, s: usize) -> Result<u64> {
    let r = n / 2;
    if s > r {
        return domain(format!("s = {s} exceeds ⌊N/2⌋ = {r}"));
    }
    Ok(HermSpace::new(q, n)?.meeting_histogram()?[s])
}

/// `q^{s(s+2)}[r choose s]_{q²}` for odd `N`, `q^{s²}[r choose s]_{q²}` for even `N`.
pub fn meeting_closed_form(q: u32, n: usize, s: usize) -> Result<BigInt> {
    let r = n / 2;
    let s32 = s as u32;
    let exp = if n % 2 == 1 { s32 * (s32 + 2) } else { s32 * s32 };
    let binom = q_binomial(r as i64, s as i64, QBase::QSquared)?;
    let qb = BigInt::from(q);
    Ok(qb.pow(exp) * binom.eval_integer(&qb).expect("polynomial"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let s = HermSpace::new(2, 2).unwrap();
        assert_eq!(s.enumerate_isotropic(1).unwrap().len(), 3);
        assert_eq!(s.enumerate_isotropic(0).unwrap(), vec![Vec::<Vector>::new()]);
        assert_eq!(count_max_isotropic(2, 2).unwrap(), 3);
        assert_eq!(count_max_isotropic(2, 3).unwrap(), 9);
        assert_eq!(count_max_isotropic(3, 2).unwrap(), 4);
        assert_eq!(count_meeting(2, 3, 1).unwrap(), 8);
        assert_eq!(count_meeting(2, 4, 1).unwrap(), 10);
        assert_eq!(count_meeting(2, 4, 0).unwrap(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let s = HermSpace::new(3, 5).unwrap().with_budget(10);
        assert!(matches!(s.count_isotropic(2), Err(Error::Resource(_))));
    }

    #[test]
    fn rejects_bad_gram() {
        let f = Fq2::new(2).unwrap();
        let g = f.primitive();
        assert!(HermSpace::with_gram(f.clone(), vec![vec![0, g], vec![g, 0]]).is_err());
        assert!(HermSpace::with_gram(f, vec![vec![1, 1], vec![1, 1]]).is_err());
    }
}
