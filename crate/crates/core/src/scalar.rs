//! A minimal commutative-ring interface used for evaluating symbolic objects
//! at concrete values, plus the prime field `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::qcalc::{mod_pow, mul_mod, LaurentPoly};

/// Ring elements that carry enough context (e.g. a modulus) to build
/// constants of their own ring.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, n: i64) -> Self;
    fn bigint_like(&self, n: &BigInt) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, if it exists.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    /// Integer power; negative exponents need an inverse.
    fn pow_i(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.one_like();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }
}

/// Evaluates a Laurent polynomial at `q`; `None` if `q` is needed inverted
/// but is not a unit.
pub fn eval_laurent<S: Scalar>(p: &LaurentPoly, q: &S) -> Option<S> {
    let mut acc = q.zero_like();
    for (e, c) in p.terms() {
        acc = acc.add(&q.bigint_like(c).mul(&q.pow_i(e)?));
    }
    Some(acc)
}

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    /// `p` must be prime and below `2^62`; primality is checked by trial
    /// division, which is fine for the moduli used here.
    pub fn modulus(p: u64) -> Result<Fp> {
        if !is_prime(p) {
            return domain(format!("{p} is not a prime"));
        }
        Ok(Fp { v: 0, p })
    }

    pub fn new(v: i64, p: u64) -> Fp {
        Fp {
            v: v.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: i64) -> Fp {
        Fp::new(v, self.p)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Scalar for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
    fn int_like(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }
    fn bigint_like(&self, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(self.p));
        Fp { v: r.to_u64().expect("residue fits"), p: self.p }
    }
    fn add(&self, o: &Self) -> Self {
        Fp { v: ((self.v as u128 + o.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: ((self.v as u128 + self.p as u128 - o.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: mul_mod(self.v, o.v, self.p), p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: (self.p - self.v) % self.p, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        (self.v != 0).then(|| Fp { v: mod_pow(self.v, self.p - 2, self.p), p: self.p })
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}
