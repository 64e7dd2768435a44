use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{binomial, character, SymLaurent};
use crate::error::{domain, Error, Result};
use crate::qcalc::LaurentPoly;

/// Identities in the character ring extended by a Laurent variable `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaIdentity {
    EvenSum,
    EvenDerivative,
    Odd,
    /// The binomial identity in `λ` alone; its integer argument is `k`.
    OddBinomial,
}

impl LambdaIdentity {
    pub const ALL: [LambdaIdentity; 4] = [
        LambdaIdentity::EvenSum,
        LambdaIdentity::EvenDerivative,
        LambdaIdentity::Odd,
        LambdaIdentity::OddBinomial,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LambdaIdentity::EvenSum => "even_sum",
            LambdaIdentity::EvenDerivative => "even_derivative",
            LambdaIdentity::Odd => "odd",
            LambdaIdentity::OddBinomial => "odd_binomial",
        }
    }
}

impl FromStr for LambdaIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LambdaIdentity::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .map_or_else(|| domain(format!("unknown λ-identity '{s}'")), Ok)
    }
}

fn lam(r: usize, k: i64) -> SymLaurent {
    SymLaurent::lambda_pow(r, k)
}

/// `λ + λ^{-1} + m_i`
fn shifted_generator(r: usize, i: usize) -> SymLaurent {
    &(&lam(r, 1) + &lam(r, -1)) + &SymLaurent::m(r, i)
}

/// `(λ^{δ+1} + λ^{-δ}) / (λ + 1)`, by exact division.
fn odd_ratio(r: usize, delta: i64) -> Result<SymLaurent> {
    (&lam(r, delta + 1) + &lam(r, -delta)).div_exact_lambda(&(&lam(r, 1) + &SymLaurent::one(r)))
}

/// Returns `LHS − RHS`. For [`LambdaIdentity::OddBinomial`] the argument is
/// the exponent `k`; otherwise it is the rank `N`, whose parity must match.
pub fn check_lambda_identity(n: u32, which: LambdaIdentity) -> Result<SymLaurent> {
    let even = matches!(which, LambdaIdentity::EvenSum | LambdaIdentity::EvenDerivative);
    if which != LambdaIdentity::OddBinomial {
        if even && (n == 0 || n % 2 == 1) {
            return domain(format!("identity {} needs a positive even N, got {n}", which.name()));
        }
        if which == LambdaIdentity::Odd && n.is_multiple_of(2) {
            return domain(format!("identity odd needs an odd N, got {n}"));
        }
    }
    let r = (n / 2) as usize;
    let ri = r as i64;
    let chi = |j: i64| character(n, j as u32);
    match which {
        LambdaIdentity::EvenSum => {
            let lhs = (1..=r).fold(SymLaurent::one(r), |acc, i| &acc * &shifted_generator(r, i));
            let mut rhs = chi(ri)?;
            for d in 1..=ri {
                rhs = &rhs + &(&chi(ri - d)? * &(&lam(r, d) + &lam(r, -d)));
            }
            Ok(&lhs - &rhs)
        }
        LambdaIdentity::EvenDerivative => {
            let mut lhs = SymLaurent::zero(r);
            for j in 1..=r {
                let term = (1..=r)
                    .filter(|&i| i != j)
                    .fold(SymLaurent::one(r), |acc, i| &acc * &shifted_generator(r, i));
                lhs = &lhs + &term;
            }
            let denom = &lam(r, 1) - &lam(r, -1);
            let mut rhs = SymLaurent::zero(r);
            for d in 1..=ri {
                let ratio = (&lam(r, d) - &lam(r, -d)).div_exact_lambda(&denom)?;
                rhs = &rhs + &(&chi(ri - d)? * &ratio).scale(&LaurentPoly::constant(d));
            }
            Ok(&lhs - &rhs)
        }
        LambdaIdentity::Odd => {
            let lhs = (1..=r).fold(SymLaurent::one(r), |acc, i| &acc * &shifted_generator(r, i));
            let mut rhs = SymLaurent::zero(r);
            for d in 0..=ri {
                rhs = &rhs + &(&chi(ri - d)? * &odd_ratio(r, d)?);
            }
            Ok(&lhs - &rhs)
        }
        LambdaIdentity::OddBinomial => {
            let k = n as i64;
            let mut lhs = SymLaurent::zero(0);
            for d in 0..=k {
                let c = binomial(k, (k - d) / 2);
                lhs = &lhs + &odd_ratio(0, d)?.scale(&LaurentPoly::constant(c));
            }
            let rhs = (&lam(0, 1) + &lam(0, -1)).pow(n);
            Ok(&lhs - &rhs)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_instances() {
        assert!(check_lambda_identity(2, LambdaIdentity::EvenSum).unwrap().is_zero());
        assert!(check_lambda_identity(2, LambdaIdentity::EvenDerivative).unwrap().is_zero());
        assert!(check_lambda_identity(3, LambdaIdentity::Odd).unwrap().is_zero());
        assert!(check_lambda_identity(1, LambdaIdentity::Odd).unwrap().is_zero());
        assert!(check_lambda_identity(0, LambdaIdentity::OddBinomial).unwrap().is_zero());
        assert!(check_lambda_identity(3, LambdaIdentity::OddBinomial).unwrap().is_zero());
    }

    #[test]
    fn parity_mismatch() {
        assert!(check_lambda_identity(3, LambdaIdentity::EvenSum).is_err());
        assert!(check_lambda_identity(4, LambdaIdentity::Odd).is_err());
        assert!("bogus".parse::<LambdaIdentity>().is_err());
    }
}
