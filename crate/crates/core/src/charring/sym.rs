use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::qcalc::LaurentPoly;
use crate::scalar::{eval_laurent, Scalar};

/// Exponent vector of a monomial `m_1^{a_1}⋯m_r^{a_r} λ^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymMono {
    pub m: Vec<u32>,
    pub lambda: i64,
}

impl SymMono {
    fn degree(&self) -> u32 {
        self.m.iter().sum()
    }
}

/// A polynomial in `m_1..m_r` (optionally with a Laurent variable `λ`) whose
/// coefficients are Laurent polynomials in `q`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymLaurent {
    rank: usize,
    terms: BTreeMap<SymMono, LaurentPoly>,
}

impl SymLaurent {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, LaurentPoly::one())
    }

    pub fn constant(rank: usize, c: LaurentPoly) -> Self {
        Self::monomial(rank, vec![0; rank], 0, c)
    }

    /// `c · m^exps · λ^lambda`.
    pub fn monomial(rank: usize, exps: Vec<u32>, lambda: i64, c: LaurentPoly) -> Self {
        assert_eq!(exps.len(), rank, "exponent vector length must equal rank");
        let mut out = Self::zero(rank);
        out.add_term(SymMono { m: exps, lambda }, c);
        out
    }

    /// The generator `m_i`, with `i` counted from 1.
    pub fn m(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "m_{i} outside rank {rank}");
        let mut e = vec![0; rank];
        e[i - 1] = 1;
        Self::monomial(rank, e, 0, LaurentPoly::one())
    }

    pub fn lambda_pow(rank: usize, k: i64) -> Self {
        Self::monomial(rank, vec![0; rank], k, LaurentPoly::one())
    }

    pub(crate) fn add_term(&mut self, mono: SymMono, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SymMono, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32], lambda: i64) -> LaurentPoly {
        self.terms
            .get(&SymMono { m: exps.to_vec(), lambda })
            .cloned()
            .unwrap_or_default()
    }

    pub fn has_lambda(&self) -> bool {
        self.terms.keys().any(|k| k.lambda != 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(SymMono::degree).max()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.rank);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.rank), |acc, _| &acc * self)
    }

    fn check_rank(&self, other: &Self) {
        assert_eq!(self.rank, other.rank, "rank mismatch in SymLaurent arithmetic");
    }

    /// Applies a permutation of the variables: `m_i ↦ m_{perm[i]}` (0-based).
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.rank);
        for (k, v) in &self.terms {
            let mut e = vec![0; self.rank];
            for (i, &a) in k.m.iter().enumerate() {
                e[perm[i]] = a;
            }
            out.add_term(SymMono { m: e, lambda: k.lambda }, v.clone());
        }
        out
    }

    /// Invariance under every transposition of `m_1..m_r`.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let mut perm: Vec<usize> = (0..self.rank).collect();
                perm.swap(i, j);
                if self.permute(&perm) != *self {
                    return false;
                }
            }
        }
        true
    }

    /// Splits off the coefficient of `λ^k` (as a λ-free element).
    pub fn lambda_coeff(&self, k: i64) -> Self {
        let mut out = Self::zero(self.rank);
        for (mono, v) in &self.terms {
            if mono.lambda == k {
                out.add_term(SymMono { m: mono.m.clone(), lambda: 0 }, v.clone());
            }
        }
        out
    }

    fn lambda_span(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|k| k.lambda).min()?;
        let hi = self.terms.keys().map(|k| k.lambda).max()?;
        Some((lo, hi))
    }

    fn shift_lambda(&self, k: i64) -> Self {
        let mut out = Self::zero(self.rank);
        for (mono, v) in &self.terms {
            out.add_term(SymMono { m: mono.m.clone(), lambda: mono.lambda + k }, v.clone());
        }
        out
    }

    /// Exact division by a Laurent polynomial in `λ` alone whose leading
    /// coefficient is `1`. A nonzero remainder is an invariant violation.
    pub fn div_exact_lambda(&self, divisor: &SymLaurent) -> Result<Self> {
        if divisor.terms.keys().any(|k| k.m.iter().any(|&a| a != 0)) {
            return domain("λ-division needs a divisor free of m-variables");
        }
        let (dlo, dhi) = divisor
            .lambda_span()
            .ok_or_else(|| Error::Domain("division by zero".into()))?;
        if !divisor.lambda_coeff(dhi).is_one_const() {
            return domain("λ-divisor must have leading coefficient 1");
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        while let Some((lo, hi)) = rem.lambda_span() {
            if hi - lo < dhi - dlo {
                break;
            }
            let lead = rem.lambda_coeff(hi).shift_lambda(hi - dhi);
            rem = &rem - &(&lead * divisor);
            quot = &quot + &lead;
        }
        if !rem.is_zero() {
            return Err(Error::Invariant(format!(
                "λ-division leaves a remainder with {} terms",
                rem.num_terms()
            )));
        }
        Ok(quot)
    }

    fn is_one_const(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(k, v)| k.lambda == 0 && k.m.iter().all(|&a| a == 0) && v.is_one())
    }

    /// Substitutes `m_i ↦ ms[i]`, `q ↦ q` and `λ ↦ lambda` in any ring.
    /// Returns `None` if a negative power of a non-unit is required.
    pub fn eval<S: Scalar>(&self, ms: &[S], q: &S, lambda: Option<&S>) -> Option<S> {
        assert_eq!(ms.len(), self.rank, "wrong number of m-values");
        let mut acc = q.zero_like();
        for (k, c) in &self.terms {
            let mut t = eval_laurent(c, q)?;
            for (x, &a) in ms.iter().zip(&k.m) {
                t = t.mul(&x.pow_i(a as i64)?);
            }
            if k.lambda != 0 {
                t = t.mul(&lambda?.pow_i(k.lambda)?);
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }

    fn render(&self, unicode: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &a) in k.m.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&format!("m{}", i + 1));
                if a > 1 {
                    mono.push_str(&format!("^{a}"));
                }
            }
            if k.lambda != 0 {
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(if unicode { "λ" } else { "L" });
                if k.lambda != 1 {
                    mono.push_str(&format!("^{}", k.lambda));
                }
            }
            let cs = if unicode { c.to_unicode() } else { c.to_string() };
            parts.push(if mono.is_empty() {
                if c.num_terms() > 1 && self.terms.len() > 1 {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if c.is_one() {
                mono
            } else if c.num_terms() == 1 {
                format!("{cs}*{mono}")
            } else {
                format!("({cs})*{mono}")
            });
        }
        parts.join(" + ")
    }

    pub fn to_unicode(&self) -> String {
        self.render(true)
    }
}

impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymLaurent[r={}]({})", self.rank, self)
    }
}

impl Add<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn add(self, rhs: &SymLaurent) -> SymLaurent {
        self.check_rank(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn sub(self, rhs: &SymLaurent) -> SymLaurent {
        self + &(-rhs)
    }
}

impl Neg for &SymLaurent {
    type Output = SymLaurent;
    fn neg(self) -> SymLaurent {
        SymLaurent {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Mul<&SymLaurent> for &SymLaurent {
    type Output = SymLaurent;
    fn mul(self, rhs: &SymLaurent) -> SymLaurent {
        self.check_rank(rhs);
        let mut out = SymLaurent::zero(self.rank);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let m = a.m.iter().zip(&b.m).map(|(x, y)| x + y).collect();
                out.add_term(SymMono { m, lambda: a.lambda + b.lambda }, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<SymLaurent> for SymLaurent {
            type Output = SymLaurent;
            fn $m(self, rhs: SymLaurent) -> SymLaurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SymLaurent> for SymLaurent {
            type Output = SymLaurent;
            fn $m(self, rhs: &SymLaurent) -> SymLaurent {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SymLaurent {
    type Output = SymLaurent;
    fn neg(self) -> SymLaurent {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    #[test]
    fn arithmetic_and_symmetry() {
        let a = SymLaurent::m(2, 1) + SymLaurent::m(2, 2);
        assert!(a.is_symmetric());
        assert!(!SymLaurent::m(2, 1).is_symmetric());
        let sq = &a * &a;
        assert_eq!(sq.coeff(&[1, 1], 0), LaurentPoly::constant(2));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn lambda_division() {
        // (λ² − 1) / (λ + 1) = λ − 1
        let l2 = SymLaurent::lambda_pow(1, 2) - SymLaurent::one(1);
        let d = SymLaurent::lambda_pow(1, 1) + SymLaurent::one(1);
        let qt = l2.div_exact_lambda(&d).unwrap();
        assert_eq!(qt, SymLaurent::lambda_pow(1, 1) - SymLaurent::one(1));
        let bad = SymLaurent::lambda_pow(1, 2) + SymLaurent::one(1);
        assert!(matches!(bad.div_exact_lambda(&d), Err(Error::Invariant(_))));
    }

    #[test]
    fn evaluation() {
        let p = SymLaurent::m(1, 1).scale(&LaurentPoly::q()) + SymLaurent::constant(1, LaurentPoly::from_terms([(1, 1), (0, -1)]));
        let v = p.eval(&[Fp::new(3, 11)], &Fp::new(2, 11), None).unwrap();
        // 2*3 + 2 - 1 = 7
        assert_eq!(v.value(), 7);
        assert_eq!(p.to_string(), "q*m1 + (q-1)");
    }
}
