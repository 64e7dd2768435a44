//! The truncated chain ring `R_m = F_{q²}[π]/(π^m)` and canonical forms of
//! its submodules.

use super::field::{Elem, Fq2};
use crate::error::{domain, Result};

/// Largest supported truncation exponent.
pub const MAX_M: usize = 8;

/// An element of `R_m`: coefficients of `π^0, …, π^{m−1}`; higher slots are zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CElem(pub [Elem; MAX_M]);

pub type RVec = Vec<CElem>;

#[derive(Clone, Debug)]
pub struct ChainRing {
    field: Fq2,
    m: usize,
}

impl ChainRing {
    pub fn new(q: u32, m: usize) -> Result<ChainRing> {
        if m == 0 || m > MAX_M {
            return domain(format!("truncation exponent {m} not in 1..={MAX_M}"));
        }
        Ok(ChainRing { field: Fq2::new(q)?, m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn field(&self) -> &Fq2 {
        &self.field
    }

    pub fn zero(&self) -> CElem {
        CElem::default()
    }

    pub fn from_field(&self, a: Elem) -> CElem {
        let mut c = CElem::default();
        c.0[0] = a;
        c
    }

    pub fn one(&self) -> CElem {
        self.from_field(1)
    }

    /// `π^e` (zero once `e ≥ m`).
    pub fn pi_pow(&self, e: usize) -> CElem {
        let mut c = CElem::default();
        if e < self.m {
            c.0[e] = 1;
        }
        c
    }

    pub fn add(&self, a: CElem, b: CElem) -> CElem {
        let mut c = CElem::default();
        for i in 0..self.m {
            c.0[i] = self.field.add(a.0[i], b.0[i]);
        }
        c
    }

    pub fn neg(&self, a: CElem) -> CElem {
        let mut c = CElem::default();
        for i in 0..self.m {
            c.0[i] = self.field.neg(a.0[i]);
        }
        c
    }

    pub fn sub(&self, a: CElem, b: CElem) -> CElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: CElem, b: CElem) -> CElem {
        let f = &self.field;
        let mut c = CElem::default();
        for i in 0..self.m {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.m - i {
                c.0[i + j] = f.add(c.0[i + j], f.mul(a.0[i], b.0[j]));
            }
        }
        c
    }

    /// `π`-adic valuation; `m` for zero.
    pub fn val(&self, a: CElem) -> usize {
        (0..self.m).find(|&i| a.0[i] != 0).unwrap_or(self.m)
    }

    pub fn is_zero(&self, a: CElem) -> bool {
        self.val(a) == self.m
    }

    pub fn inv(&self, u: CElem) -> Option<CElem> {
        let f = &self.field;
        let u0 = f.inv(u.0[0])?;
        let mut v = CElem::default();
        v.0[0] = u0;
        for k in 1..self.m {
            let s = (1..=k).fold(0, |acc, j| f.add(acc, f.mul(u.0[j], v.0[k - j])));
            v.0[k] = f.neg(f.mul(u0, s));
        }
        Some(v)
    }

    /// `a·π^e`.
    pub fn shift_up(&self, a: CElem, e: usize) -> CElem {
        let mut c = CElem::default();
        for i in 0..self.m.saturating_sub(e) {
            c.0[i + e] = a.0[i];
        }
        c
    }

    /// `a / π^e`, the unique representative with top `e` coefficients zero.
    /// Requires `val(a) ≥ e`.
    pub fn shift_down(&self, a: CElem, e: usize) -> CElem {
        debug_assert!(self.val(a) >= e);
        let mut c = CElem::default();
        for i in e..self.m {
            c.0[i - e] = a.0[i];
        }
        c
    }

    /// Splits `a = t·π^e + low` with `low` of degree below `e`.
    fn split(&self, a: CElem, e: usize) -> (CElem, CElem) {
        let mut low = CElem::default();
        low.0[..e.min(self.m)].copy_from_slice(&a.0[..e.min(self.m)]);
        (self.shift_down(self.sub(a, low), e), low)
    }

    pub fn conj(&self, a: CElem) -> CElem {
        let mut c = CElem::default();
        for i in 0..self.m {
            c.0[i] = self.field.conj(a.0[i]);
        }
        c
    }

    /// Reinterprets `a` in `R_{m'}` by zero-padding (the Teichmüller-style lift).
    pub fn lift_to(&self, a: CElem, target: &ChainRing) -> CElem {
        let mut c = CElem::default();
        let k = self.m.min(target.m);
        c.0[..k].copy_from_slice(&a.0[..k]);
        c
    }

    fn scale_row(&self, c: CElem, row: &[CElem]) -> RVec {
        row.iter().map(|&x| self.mul(c, x)).collect()
    }

    fn axpy(&self, dst: &mut [CElem], c: CElem, src: &[CElem]) {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, self.mul(c, s));
        }
    }

    fn is_zero_vec(&self, v: &[CElem]) -> bool {
        v.iter().all(|&x| self.is_zero(x))
    }

    /// Pivot column and valuation of a nonzero row.
    pub fn pivot(&self, row: &[CElem]) -> Option<(usize, usize)> {
        row.iter()
            .position(|&x| !self.is_zero(x))
            .map(|c| (c, self.val(row[c])))
    }

    /// Howell normal form of the submodule of `R_m^n` spanned by `gens`.
    ///
    /// Rows have strictly increasing pivot columns, each pivot is exactly a
    /// power of `π`, entries above a pivot `π^e` have degree below `e`, and
    /// every element whose first `c` entries vanish lies in the span of the
    /// rows with pivot column at least `c`. The form is unique.
    pub fn howell(&self, gens: &[RVec], n: usize) -> Vec<RVec> {
        let mut work: Vec<RVec> = gens
            .iter()
            .filter(|g| !self.is_zero_vec(g))
            .cloned()
            .collect();
        let mut out: Vec<RVec> = Vec::new();
        for col in 0..n {
            let best = work
                .iter()
                .enumerate()
                .filter(|(_, r)| !self.is_zero(r[col]))
                .min_by_key(|(_, r)| self.val(r[col]))
                .map(|(i, _)| i);
            let Some(bi) = best else { continue };
            let mut piv = work.swap_remove(bi);
            let e = self.val(piv[col]);
            let unit = self.inv(self.shift_down(piv[col], e)).expect("unit part");
            piv = self.scale_row(unit, &piv);
            for w in work.iter_mut() {
                if !self.is_zero(w[col]) {
                    let t = self.neg(self.shift_down(w[col], e));
                    self.axpy(w, t, &piv);
                }
            }
            let ann = self.scale_row(self.pi_pow(self.m - e), &piv);
            work.push(ann);
            work.retain(|w| !self.is_zero_vec(w));
            out.push(piv);
        }
        for i in 0..out.len() {
            let (c, e) = self.pivot(&out[i]).expect("nonzero row");
            for j in 0..i {
                let (t, _) = self.split(out[j][c], e);
                if !self.is_zero(t) {
                    let src = out[i].clone();
                    self.axpy(&mut out[j], self.neg(t), &src);
                }
            }
        }
        out
    }

    /// Reduces `v` against a Howell form; the result is zero iff `v` is in the module.
    pub fn reduce(&self, h: &[RVec], v: &[CElem]) -> RVec {
        let mut v = v.to_vec();
        for row in h {
            let (c, e) = self.pivot(row).expect("nonzero row");
            let (t, _) = self.split(v[c], e);
            if !self.is_zero(t) {
                self.axpy(&mut v, self.neg(t), row);
            }
        }
        v
    }

    pub fn member(&self, h: &[RVec], v: &[CElem]) -> bool {
        self.is_zero_vec(&self.reduce(h, v))
    }

    /// Whether every row of `sub` lies in the module with Howell form `sup`.
    pub fn contains(&self, sup: &[RVec], sub: &[RVec]) -> bool {
        sub.iter().all(|v| self.member(sup, v))
    }

    /// Length (composition length over the residue field) of a module in Howell form.
    pub fn length(&self, h: &[RVec]) -> usize {
        h.iter()
            .map(|r| self.m - self.pivot(r).expect("nonzero row").1)
            .sum()
    }

    /// `{c ∈ R^n : Σ_j a_{ij} c_j = 0 for every row i}`, in Howell form.
    pub fn kernel(&self, a: &[RVec], n: usize) -> Vec<RVec> {
        let t = a.len();
        let aug: Vec<RVec> = (0..n)
            .map(|j| {
                let mut row: RVec = a.iter().map(|r| r[j]).collect();
                row.extend((0..n).map(|i| if i == j { self.one() } else { self.zero() }));
                row
            })
            .collect();
        let h = self.howell(&aug, t + n);
        let gens: Vec<RVec> = h
            .into_iter()
            .filter(|r| self.pivot(r).expect("nonzero row").0 >= t)
            .map(|r| r[t..].to_vec())
            .collect();
        self.howell(&gens, n)
    }

    /// Length of the module spanned by `gens`, via a Smith normal form.
    pub fn snf_length(&self, gens: &[RVec], n: usize) -> usize {
        let mut a: Vec<RVec> = gens.to_vec();
        let mut len = 0;
        let mut top = 0;
        for col in 0..n {
            // Full pivoting: smallest valuation in the remaining block.
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(top) {
                for (j, &x) in row.iter().enumerate().skip(col) {
                    let v = self.val(x);
                    if v < self.m && best.is_none_or(|b| v < b.2) {
                        best = Some((i, j, v));
                    }
                }
            }
            let Some((bi, bj, e)) = best else { break };
            a.swap(top, bi);
            for row in a.iter_mut() {
                row.swap(col, bj);
            }
            let unit = self.inv(self.shift_down(a[top][col], e)).expect("unit part");
            a[top] = self.scale_row(unit, &a[top]);
            let prow = a[top].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i != top && !self.is_zero(row[col]) {
                    let t = self.neg(self.shift_down(row[col], e));
                    self.axpy(row, t, &prow);
                }
            }
            // Column operations clear the rest of the pivot row.
            for j in col + 1..n {
                let x = a[top][j];
                if !self.is_zero(x) {
                    let t = self.neg(self.shift_down(x, e));
                    for row in a.iter_mut() {
                        let add = self.mul(t, row[col]);
                        row[j] = self.add(row[j], add);
                    }
                }
            }
            len += self.m - e;
            top += 1;
        }
        len
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_elem(r: &ChainRing, rng: &mut ChaCha8Rng) -> CElem {
        let mut c = CElem::default();
        let order = r.field().order();
        for i in 0..r.m() {
            c.0[i] = rng.gen_range(0..order) as Elem;
        }
        // Bias towards non-units so pivots with positive valuation occur.
        let e = rng.gen_range(0..=r.m());
        r.shift_up(c, e.min(r.m()))
    }

    #[test]
    fn units_invert() {
        let r = ChainRing::new(3, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let mut a = random_elem(&r, &mut rng);
            a.0[0] = a.0[0].max(1);
            assert_eq!(r.mul(a, r.inv(a).unwrap()), r.one());
        }
        assert!(r.inv(r.pi_pow(1)).is_none());
    }

    #[test]
    fn howell_is_canonical_and_lengths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (q, m, n) in [(2, 2, 3), (3, 2, 3), (2, 4, 3), (2, 3, 4)] {
            let r = ChainRing::new(q, m).unwrap();
            for _ in 0..150 {
                let k = rng.gen_range(0..5);
                let gens: Vec<RVec> = (0..k)
                    .map(|_| (0..n).map(|_| random_elem(&r, &mut rng)).collect())
                    .collect();
                let h = r.howell(&gens, n);
                assert_eq!(r.length(&h), r.snf_length(&gens, n));
                for g in &gens {
                    assert!(r.member(&h, g));
                }
                // Random recombination spans the same module.
                let mut mixed = gens.clone();
                for i in 0..mixed.len() {
                    for j in 0..gens.len() {
                        let c = random_elem(&r, &mut rng);
                        if j < i {
                            r.axpy(&mut mixed[i], c, &gens[j]);
                        }
                    }
                }
                mixed.push(vec![r.zero(); n]);
                mixed.reverse();
                assert_eq!(r.howell(&mixed, n), h);
            }
        }
    }

    #[test]
    fn kernel_annihilates() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = ChainRing::new(2, 3).unwrap();
        for _ in 0..100 {
            let a: Vec<RVec> = (0..2)
                .map(|_| (0..3).map(|_| random_elem(&r, &mut rng)).collect())
                .collect();
            let k = r.kernel(&a, 3);
            for v in &k {
                for row in &a {
                    let s = row.iter().zip(v).fold(r.zero(), |acc, (&x, &y)| r.add(acc, r.mul(x, y)));
                    assert!(r.is_zero(s));
                }
            }
        }
    }
}
