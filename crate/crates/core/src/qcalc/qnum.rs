use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::LaurentPoly;
use crate::error::{domain, Error, Result};

/// Base of a q-analogue: `q`, `−q`, `q²`, or an integer specialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QBase {
    Q,
    NegQ,
    QSquared,
    /// A fixed integer `b` with `|b| ≥ 2`.
    Int(i64),
}

impl QBase {
    pub fn integer(b: i64) -> Result<Self> {
        if b.abs() < 2 {
            return domain(format!("integer base {b} must satisfy |b| >= 2"));
        }
        Ok(QBase::Int(b))
    }

    pub fn as_poly(&self) -> LaurentPoly {
        match *self {
            QBase::Q => LaurentPoly::q(),
            QBase::NegQ => LaurentPoly::monomial(1, -1),
            QBase::QSquared => LaurentPoly::monomial(2, 1),
            QBase::Int(b) => LaurentPoly::constant(b),
        }
    }
}

impl fmt::Display for QBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QBase::Q => f.write_str("q"),
            QBase::NegQ => f.write_str("-q"),
            QBase::QSquared => f.write_str("q^2"),
            QBase::Int(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for QBase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" => Ok(QBase::Q),
            "-q" | "−q" => Ok(QBase::NegQ),
            "q^2" | "q2" | "q²" => Ok(QBase::QSquared),
            other => match other.parse::<i64>() {
                Ok(b) => QBase::integer(b),
                Err(_) => domain(format!("unknown q-base '{other}'")),
            },
        }
    }
}

/// `[n]_b = 1 + b + … + b^{n−1}`, with the convention `[0]_b = 1`.
///
/// The value at `n = 0` only ever enters through empty factorials, where
/// either convention gives the same q-binomials.
pub fn q_integer(n: u32, b: QBase) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let base = b.as_poly();
    let mut acc = LaurentPoly::zero();
    let mut pw = LaurentPoly::one();
    for _ in 0..n {
        acc += &pw;
        pw = &pw * &base;
    }
    acc
}

/// `[n]_b! = [1]_b [2]_b ⋯ [n]_b`.
pub fn q_factorial(n: u32, b: QBase) -> LaurentPoly {
    (1..=n).map(|i| q_integer(i, b)).product()
}

type BinomKey = (i64, i64, QBase);

fn binom_cache() -> &'static Mutex<HashMap<BinomKey, LaurentPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<BinomKey, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Gaussian binomial `[n choose m]_b`, by exact division of q-factorials.
pub fn q_binomial(n: i64, m: i64, b: QBase) -> Result<LaurentPoly> {
    if m < 0 || m > n {
        return domain(format!("q-binomial [{n} choose {m}] out of range"));
    }
    let key = (n, m, b);
    if let Some(v) = binom_cache().lock().expect("cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let num = q_factorial(n as u32, b);
    let den = &q_factorial((n - m) as u32, b) * &q_factorial(m as u32, b);
    let val = num.div_exact(&den)?;
    binom_cache()
        .lock()
        .expect("cache poisoned")
        .insert(key, val.clone());
    Ok(val)
}

/// Like [`q_binomial`] but returns zero outside `0 ≤ m ≤ n`.
pub fn q_binomial_or_zero(n: i64, m: i64, b: QBase) -> LaurentPoly {
    q_binomial(n, m, b).unwrap_or_else(|_| LaurentPoly::zero())
}

fn qb(n: i64, m: i64, b: QBase) -> LaurentPoly {
    q_binomial_or_zero(n, m, b)
}

/// Which product of `(q^{odd}+1)` factors to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductVariant {
    /// `(q+1)(q³+1)⋯(q^{2r−1}+1)`
    Even,
    /// `(q³+1)(q⁵+1)⋯(q^{2r+1}+1)`
    Odd,
}

impl ProductVariant {
    pub fn for_rank(n: u32) -> Self {
        if n.is_multiple_of(2) {
            ProductVariant::Even
        } else {
            ProductVariant::Odd
        }
    }
}

pub fn odd_product(r: u32, variant: ProductVariant) -> LaurentPoly {
    let shift = match variant {
        ProductVariant::Even => -1,
        ProductVariant::Odd => 1,
    };
    (1..=r as i64)
        .map(|i| LaurentPoly::from_terms([(2 * i + shift, 1), (0, 1)]))
        .product()
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `d_r = Σ_{δ=0}^{r} (−1)^δ (2δ+1) q^{δ(δ+1)} [2r+1 choose r−δ]_{−q}`.
pub fn d_number(r: u32) -> LaurentPoly {
    let r = r as i64;
    (0..=r)
        .map(|d| {
            qb(2 * r + 1, r - d, QBase::NegQ)
                .shift(d * (d + 1))
                .scale(&(sign(d) * (2 * d + 1)).into())
        })
        .sum()
}

/// `((−q)^{r+1} − 1)/(q+1) · (q+1)(q³+1)⋯(q^{2r−1}+1)`: the correction term
/// that separates `(q+1)·d•_r` from `d_r`.
pub fn d_bridge_term(r: u32) -> Result<LaurentPoly> {
    let qp1 = LaurentPoly::from_terms([(1, 1), (0, 1)]);
    let head = (LaurentPoly::neg_q_pow(r as i64 + 1) - LaurentPoly::one()).div_exact(&qp1)?;
    Ok(&head * &odd_product(r, ProductVariant::Even))
}

/// `d•_r = (d_r + ((−q)^{r+1}−1)/(q+1) · Π_{i≤r}(q^{2i−1}+1)) / (q+1)`.
pub fn d_bullet_number(r: u32) -> Result<LaurentPoly> {
    if r == 0 {
        return domain("d-bullet number needs r >= 1");
    }
    let qp1 = LaurentPoly::from_terms([(1, 1), (0, 1)]);
    (d_number(r) + d_bridge_term(r)?).div_exact(&qp1)
}

/// The four q-binomial identities that can be checked as `LHS − RHS = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QIdentity {
    Gauss,
    Weighted,
    Signed,
    OddChain,
}

impl QIdentity {
    pub const ALL: [QIdentity; 4] = [
        QIdentity::Gauss,
        QIdentity::Weighted,
        QIdentity::Signed,
        QIdentity::OddChain,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            QIdentity::Gauss => "gauss",
            QIdentity::Weighted => "weighted",
            QIdentity::Signed => "signed",
            QIdentity::OddChain => "odd_chain",
        }
    }
}

impl FromStr for QIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        QIdentity::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .map_or_else(|| domain(format!("unknown q-identity '{s}'")), Ok)
    }
}

/// `Σ_{δ} (−1)^δ δ q^{δ²+δ} [n choose k−δ]_{−q}` over `lo ≤ δ ≤ k`.
fn weighted_sum(n: i64, k: i64, lo: i64) -> LaurentPoly {
    (lo..=k)
        .map(|d| {
            qb(n, k - d, QBase::NegQ)
                .shift(d * d + d)
                .scale(&(sign(d) * d).into())
        })
        .sum()
}

/// Returns `LHS − RHS` of the named identity at `k`; zero when it holds.
pub fn check_q_identity(which: QIdentity, k: u32) -> Result<LaurentPoly> {
    if k == 0 {
        return domain("identity index k must be >= 1");
    }
    let ki = k as i64;
    let prod = odd_product(k, ProductVariant::Even);
    let signed_prod = &LaurentPoly::neg_q_pow(ki) * &prod;
    Ok(match which {
        QIdentity::Gauss => {
            let lhs: LaurentPoly = (-ki..=ki)
                .map(|d| qb(2 * ki, ki - d, QBase::NegQ).shift(d * d))
                .sum();
            lhs - prod
        }
        QIdentity::Weighted => {
            weighted_sum(2 * ki + 1, ki, -ki - 1) - weighted_sum(2 * ki, ki, -ki) - signed_prod
        }
        QIdentity::Signed => {
            let lhs: LaurentPoly = (-ki..=ki)
                .map(|d| {
                    qb(2 * ki, ki - d, QBase::NegQ)
                        .shift(d * d + d)
                        .scale(&sign(d).into())
                })
                .sum();
            lhs - signed_prod
        }
        QIdentity::OddChain => {
            let qp1 = LaurentPoly::from_terms([(1, 1), (0, 1)]);
            let lhs: LaurentPoly = (0..=ki)
                .map(|d| {
                    &d_number(d as u32)
                        * &qb(ki, d, QBase::QSquared).shift((ki - d) * (ki - d))
                })
                .sum();
            let mut rhs = LaurentPoly::monomial(ki * (ki + 2), 1);
            for d in 1..=ki {
                let coeff = &(&qp1 * &d_number(d as u32))
                    + &(&LaurentPoly::neg_q_pow(d + 1)
                        * &odd_product(d as u32, ProductVariant::Even));
                let e = (ki - d) * (ki - d + 2);
                rhs += &(&coeff * &qb(ki, d, QBase::QSquared).shift(e));
            }
            lhs - rhs
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(2, QBase::Q), lp(&[(0, 1), (1, 1)]));
        assert_eq!(q_integer(3, QBase::NegQ), lp(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(q_integer(1, QBase::QSquared), LaurentPoly::one());
        // Literal convention for the empty case.
        assert_eq!(q_integer(0, QBase::Q), LaurentPoly::one());
    }

    #[test]
    fn small_binomials() {
        assert_eq!(q_binomial(2, 1, QBase::NegQ).unwrap(), lp(&[(0, 1), (1, -1)]));
        assert_eq!(q_binomial(7, 0, QBase::Q).unwrap(), LaurentPoly::one());
        assert_eq!(q_binomial(2, 2, QBase::QSquared).unwrap(), LaurentPoly::one());
        assert!(matches!(q_binomial(2, 3, QBase::Q), Err(Error::Domain(_))));
        assert!(matches!(q_binomial(2, -1, QBase::Q), Err(Error::Domain(_))));
    }

    #[test]
    fn integer_base() {
        // [4 choose 2]_2 = 35
        assert_eq!(
            q_binomial(4, 2, QBase::Int(2)).unwrap(),
            LaurentPoly::constant(35)
        );
        assert!(QBase::integer(1).is_err());
    }

    #[test]
    fn d_numbers_small() {
        assert_eq!(d_number(0), LaurentPoly::one());
        assert_eq!(d_number(1), lp(&[(2, -2), (1, -1), (0, 1)]));
        assert_eq!(d_bullet_number(1).unwrap(), lp(&[(1, -1)]));
        assert!(d_bullet_number(0).is_err());
    }

    #[test]
    fn odd_products() {
        assert_eq!(odd_product(1, ProductVariant::Even), lp(&[(1, 1), (0, 1)]));
        assert_eq!(odd_product(1, ProductVariant::Odd), lp(&[(3, 1), (0, 1)]));
        assert_eq!(odd_product(0, ProductVariant::Odd), LaurentPoly::one());
    }

    #[test]
    fn identities_at_one() {
        for w in QIdentity::ALL {
            assert!(check_q_identity(w, 1).unwrap().is_zero(), "{w:?}");
        }
    }
}
