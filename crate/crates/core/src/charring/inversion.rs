use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::{SymLaurent, SymMono};
use crate::error::{Error, Result};
use crate::qcalc::LaurentPoly;
use crate::scalar::Scalar;

/// A Laurent polynomial in `y_1..y_r` with coefficients in `Z[q, q^{-1}]`.
///
/// Elements invariant under each inversion `y_i ↦ y_i^{-1}` rewrite uniquely
/// into polynomials in `m_i = y_i + y_i^{-1}` (see [`InversionLaurent::to_sym`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InversionLaurent {
    rank: usize,
    terms: BTreeMap<Vec<i64>, LaurentPoly>,
}

/// Coefficients of `P_k` with `y^k + y^{-k} = P_k(y + y^{-1})`, lowest degree
/// first. `P_0 = 2`, `P_1 = m`, `P_k = m·P_{k−1} − P_{k−2}`.
pub fn chebyshev(k: u32) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![2.into()];
    if k == 0 {
        return prev;
    }
    let mut cur: Vec<BigInt> = vec![0.into(), 1.into()];
    for _ in 1..k {
        let mut next: Vec<BigInt> = vec![0.into(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

impl InversionLaurent {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], LaurentPoly::one())
    }

    pub fn monomial(exps: Vec<i64>, c: LaurentPoly) -> Self {
        let mut out = Self::zero(exps.len());
        out.add_term(exps, c);
        out
    }

    /// The variable `y_i`, counted from 1.
    pub fn y(rank: usize, i: usize) -> Self {
        let mut e = vec![0; rank];
        e[i - 1] = 1;
        Self::monomial(e, LaurentPoly::one())
    }

    pub fn constant(rank: usize, c: LaurentPoly) -> Self {
        Self::monomial(vec![0; rank], c)
    }

    fn add_term(&mut self, exps: Vec<i64>, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> LaurentPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// Substitutes `m_i = y_i + y_i^{-1}` into a λ-free element.
    pub fn from_sym(s: &SymLaurent) -> Result<Self> {
        if s.has_lambda() {
            return Err(Error::Domain("cannot expand an element involving λ".into()));
        }
        let r = s.rank();
        let mut out = Self::zero(r);
        let ms: Vec<Self> = (1..=r)
            .map(|i| {
                let mut e = vec![0; r];
                e[i - 1] = -1;
                &Self::y(r, i) + &Self::monomial(e, LaurentPoly::one())
            })
            .collect();
        for (mono, c) in s.terms() {
            let mut t = Self::constant(r, c.clone());
            for (x, &a) in ms.iter().zip(&mono.m) {
                for _ in 0..a {
                    t = &t * x;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Rewrites into the `m`-variables, one variable at a time. Fails if the
    /// element is not invariant under some `y_i ↦ y_i^{-1}`.
    pub fn to_sym(&self) -> Result<SymLaurent> {
        let r = self.rank;
        // Mixed keys: first the m-exponents already produced, then the
        // remaining y-exponents.
        let mut cur: BTreeMap<(Vec<u32>, Vec<i64>), LaurentPoly> = self
            .terms
            .iter()
            .map(|(k, v)| ((vec![0; r], k.clone()), v.clone()))
            .collect();
        for i in 0..r {
            let mut next: BTreeMap<(Vec<u32>, Vec<i64>), LaurentPoly> = BTreeMap::new();
            for ((mexp, yexp), c) in &cur {
                let k = yexp[i];
                if k < 0 {
                    let mut partner = yexp.clone();
                    partner[i] = -k;
                    if cur.get(&(mexp.clone(), partner)) != Some(c) {
                        return Err(Error::Invariant(format!(
                            "not invariant under y{} -> 1/y{}",
                            i + 1,
                            i + 1
                        )));
                    }
                    continue;
                }
                let mut rest = yexp.clone();
                rest[i] = 0;
                let mut push = |deg: u32, coef: &LaurentPoly| {
                    let mut me = mexp.clone();
                    me[i] += deg;
                    let slot = next.entry((me.clone(), rest.clone())).or_default();
                    *slot += coef;
                    if slot.is_zero() {
                        next.remove(&(me, rest.clone()));
                    }
                };
                if k == 0 {
                    push(0, c);
                } else {
                    let mut partner = yexp.clone();
                    partner[i] = -k;
                    if !cur.contains_key(&(mexp.clone(), partner)) {
                        return Err(Error::Invariant(format!(
                            "not invariant under y{} -> 1/y{}",
                            i + 1,
                            i + 1
                        )));
                    }
                    for (deg, pc) in chebyshev(k as u32).iter().enumerate() {
                        if !num_traits::Zero::is_zero(pc) {
                            push(deg as u32, &c.scale(pc));
                        }
                    }
                }
            }
            cur = next;
        }
        let mut out = SymLaurent::zero(r);
        for ((mexp, _), c) in cur {
            out.add_term(SymMono { m: mexp, lambda: 0 }, c);
        }
        Ok(out)
    }

    /// Substitutes `y_i ↦ ys[i]` and `q ↦ q`.
    pub fn eval<S: Scalar>(&self, ys: &[S], q: &S) -> Option<S> {
        let mut acc = q.zero_like();
        for (k, c) in &self.terms {
            let mut t = crate::scalar::eval_laurent(c, q)?;
            for (y, &a) in ys.iter().zip(k) {
                t = t.mul(&y.pow_i(a)?);
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }
}

impl std::ops::Add<&InversionLaurent> for &InversionLaurent {
    type Output = InversionLaurent;
    fn add(self, rhs: &InversionLaurent) -> InversionLaurent {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl std::ops::Mul<&InversionLaurent> for &InversionLaurent {
    type Output = InversionLaurent;
    // Monomials multiply by adding exponent vectors.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &InversionLaurent) -> InversionLaurent {
        let mut out = InversionLaurent::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for InversionLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| {
                let mono: Vec<String> = k
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(i, &a)| if a == 1 { format!("y{}", i + 1) } else { format!("y{}^{a}", i + 1) })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("({c})*{}", mono.join("*")),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for InversionLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InversionLaurent[r={}]({self})", self.rank)
    }
}

/// The symbolic ring: `inv` succeeds on monomials whose coefficient is `±q^k`.
impl Scalar for InversionLaurent {
    fn zero_like(&self) -> Self {
        Self::zero(self.rank)
    }
    fn one_like(&self) -> Self {
        Self::one(self.rank)
    }
    fn int_like(&self, n: i64) -> Self {
        Self::constant(self.rank, LaurentPoly::constant(n))
    }
    fn bigint_like(&self, n: &BigInt) -> Self {
        Self::constant(self.rank, LaurentPoly::constant(n.clone()))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self + &o.neg()
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        self.scale(&LaurentPoly::constant(-1))
    }
    fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        if c.num_terms() != 1 {
            return None;
        }
        let (e, v) = c.terms().next()?;
        let unit: BigInt = v.clone();
        if unit != BigInt::from(1) && unit != BigInt::from(-1) {
            return None;
        }
        Some(Self::monomial(
            k.iter().map(|a| -a).collect(),
            LaurentPoly::monomial(-e, unit),
        ))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_small() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(chebyshev(0), b(&[2]));
        assert_eq!(chebyshev(1), b(&[0, 1]));
        assert_eq!(chebyshev(2), b(&[-2, 0, 1]));
        assert_eq!(chebyshev(3), b(&[0, -3, 0, 1]));
    }

    #[test]
    fn round_trip() {
        let s = &(&SymLaurent::m(2, 1) * &SymLaurent::m(2, 1)) + &SymLaurent::m(2, 2).scale(&LaurentPoly::q());
        let inv = InversionLaurent::from_sym(&s).unwrap();
        assert_eq!(inv.to_sym().unwrap(), s);
    }

    #[test]
    fn asymmetric_rejected() {
        let y = InversionLaurent::y(1, 1);
        assert!(y.to_sym().is_err());
    }

    #[test]
    fn monomial_inverse() {
        let y = InversionLaurent::y(2, 1).scale(&LaurentPoly::monomial(2, -1));
        let yi = y.inv().unwrap();
        assert_eq!(y.mul(&yi), InversionLaurent::one(2));
        assert!((&y + &InversionLaurent::one(2)).inv().is_none());
    }
}
