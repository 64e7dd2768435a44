use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact Laurent polynomial in one indeterminate `q` with
/// arbitrary-precision integer coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent and never store a zero
/// coefficient, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c·q^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `(−q)^k` for any integer `k`.
    pub fn neg_q_pow(k: i64) -> Self {
        Self::monomial(k, if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The constant term when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `q ↦ −q`.
    pub fn negate_q(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e, if e.rem_euclid(2) == 0 { v.clone() } else { -v }))
                .collect(),
        }
    }

    /// Exact division; fails with [`Error::Invariant`] on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (quot, rem) = self.div_rem(divisor)?;
        if !rem.is_zero() {
            return Err(Error::Invariant(format!(
                "division of {self} by {divisor} leaves remainder {rem}"
            )));
        }
        Ok(quot)
    }

    /// Long division from the top degree. The quotient is built only while
    /// leading coefficients divide exactly over the integers; whatever is
    /// left is returned as the remainder.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let (dmin, dmax) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Domain("division by the zero polynomial".into())),
        };
        let lead = divisor.terms[&dmax].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        loop {
            let (rmin, rmax) = match (rem.min_exp(), rem.max_exp()) {
                (Some(a), Some(b)) => (a, b),
                _ => break,
            };
            // Stop once the remainder is too short to contain a multiple of
            // the divisor's span.
            if rmax - rmin < dmax - dmin {
                break;
            }
            let c = &rem.terms[&rmax];
            let (qc, r) = c.div_rem(&lead);
            if !r.is_zero() {
                break;
            }
            let t = Self::monomial(rmax - dmax, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok((quot, rem))
    }

    /// Evaluates at an integer. Returns `None` if negative powers make the
    /// value non-integral (or `q = 0` meets a negative power).
    pub fn eval_integer(&self, q: &BigInt) -> Option<BigInt> {
        let Some(low) = self.min_exp() else { return Some(BigInt::zero()) };
        let min = low.min(0);
        if min < 0 && q.is_zero() {
            return None;
        }
        let mut num = BigInt::zero();
        for (e, c) in self.terms() {
            num += c * num_traits::pow(q.clone(), (e - min) as usize);
        }
        let den = num_traits::pow(q.clone(), (-min) as usize);
        let (quo, rem) = num.div_rem(&den);
        rem.is_zero().then_some(quo)
    }

    /// Evaluates modulo a prime `p`; `None` if `q ≡ 0` meets a negative power.
    pub fn eval_mod(&self, q: u64, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let qm = q % p;
        let qinv = if qm == 0 { None } else { Some(mod_pow(qm, p - 2, p)) };
        let mut acc = 0u64;
        for (e, c) in self.terms() {
            let base = if e >= 0 { qm } else { qinv? };
            let pw = mod_pow(base, e.unsigned_abs(), p);
            let cm = c.mod_floor(&pb).to_u64().unwrap_or(0);
            acc = (acc + mul_mod(cm, pw, p)) % p;
        }
        Some(acc)
    }

    /// Sorted `(exponent, coefficient)` pairs.
    pub fn to_term_list(&self) -> Vec<(i64, BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    /// Pretty form with Unicode superscripts and minus sign, e.g. `−2q²−q+1`.
    pub fn to_unicode(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let minus = if unicode { "−" } else { "-" };
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push_str(minus);
            } else if i > 0 {
                out.push('+');
            }
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if e != 0 {
                out.push('q');
                if e != 1 {
                    if unicode {
                        out.push_str(&superscript(e));
                    } else {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }
}

fn superscript(e: i64) -> String {
    e.to_string()
        .chars()
        .map(|c| match c {
            '-' => '⁻',
            '0' => '⁰',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '4' => '⁴',
            '5' => '⁵',
            '6' => '⁶',
            '7' => '⁷',
            '8' => '⁸',
            _ => '⁹',
        })
        .collect()
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| &acc * &x)
    }
}

// Serialized as sorted `[exponent, coefficient]` pairs; coefficients that do
// not fit in an i64 are written as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&(e, v))?,
                None => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TermsVisitor;
        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut out = LaurentPoly::zero();
                while let Some((e, c)) = seq.next_element::<(i64, CoeffRepr)>()? {
                    let c = match c {
                        CoeffRepr::Int(v) => BigInt::from(v),
                        CoeffRepr::Text(s) => s.parse::<BigInt>().map_err(de::Error::custom)?,
                    };
                    out.add_term(e, c);
                }
                Ok(out)
            }
        }
        deserializer.deserialize_seq(TermsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let a = lp(&[(1, 1), (0, 2)]);
        let b = lp(&[(1, -1), (0, -2)]);
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).num_terms(), 0);
    }

    #[test]
    fn exact_division_and_remainder() {
        // (q^3 + 1) / (q + 1) = q^2 - q + 1
        let n = lp(&[(3, 1), (0, 1)]);
        let d = lp(&[(1, 1), (0, 1)]);
        assert_eq!(n.div_exact(&d).unwrap(), lp(&[(2, 1), (1, -1), (0, 1)]));
        let n2 = lp(&[(2, 1), (0, 1)]);
        assert!(matches!(n2.div_exact(&d), Err(Error::Invariant(_))));
    }

    #[test]
    fn laurent_division_with_negative_exponents() {
        // (q - q^{-1}) / (1 - q^{-2}) = q
        let n = lp(&[(1, 1), (-1, -1)]);
        let d = lp(&[(0, 1), (-2, -1)]);
        assert_eq!(n.div_exact(&d).unwrap(), LaurentPoly::q());
    }

    #[test]
    fn evaluation() {
        let p = lp(&[(2, -2), (1, -1), (0, 1)]);
        assert_eq!(p.eval_integer(&BigInt::from(2)), Some(BigInt::from(-9)));
        let r = lp(&[(-1, 1)]);
        assert_eq!(r.eval_integer(&BigInt::from(2)), None);
        assert_eq!(LaurentPoly::zero().eval_integer(&BigInt::from(3)), Some(BigInt::zero()));
        assert_eq!(r.eval_mod(2, 7), Some(4));
        assert_eq!(p.eval_mod(2, 7), Some(5));
    }

    #[test]
    fn rendering() {
        let p = lp(&[(2, -2), (1, -1), (0, 1)]);
        assert_eq!(p.to_unicode(), "−2q²−q+1");
        assert_eq!(p.to_string(), "-2q^2-q+1");
        assert_eq!(lp(&[(-1, 1), (1, 1)]).to_string(), "q+q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn serde_term_list() {
        let p = lp(&[(-1, 1), (1, 1)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[[-1,1],[1,1]]");
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let big = LaurentPoly::constant(BigInt::from(10).pow(30u32));
        let s = serde_json::to_string(&big).unwrap();
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, big);
    }
}
