use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{named_operator, Flavor, HeckeElement, NamedOp};
use crate::charring::{character, SymLaurent};
use crate::error::{domain, Error, Result};
use crate::qcalc::{d_number, odd_product, q_binomial, LaurentPoly, ProductVariant, QBase};

/// The lower-unitriangular matrix `M[δ][i] = [N−2i choose δ−i]_{−q}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatakeMatrix {
    pub n: u32,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl SatakeMatrix {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return domain("Satake matrix needs N >= 1");
        }
        let r = (n / 2) as i64;
        let ni = n as i64;
        let entries = (0..=r)
            .map(|d| {
                (0..=r)
                    .map(|i| {
                        if i <= d {
                            q_binomial(ni - 2 * i, d - i, QBase::NegQ)
                        } else {
                            Ok(LaurentPoly::zero())
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, entries })
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(d, row)| {
            row.iter().enumerate().all(|(i, e)| match i.cmp(&d) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => e.is_one(),
                std::cmp::Ordering::Greater => e.is_zero(),
            })
        })
    }
}

fn sat_cache() -> &'static Mutex<HashMap<u32, Vec<SymLaurent>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<SymLaurent>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Sat(T_{N;δ})` for all `0 ≤ δ ≤ ⌊N/2⌋`, by forward substitution.
pub fn satake_basis(n: u32) -> Result<Vec<SymLaurent>> {
    if let Some(v) = sat_cache().lock().expect("cache poisoned").get(&n) {
        return Ok(v.clone());
    }
    let m = SatakeMatrix::new(n)?;
    let r = (n / 2) as usize;
    let mut sols: Vec<SymLaurent> = Vec::with_capacity(r + 1);
    for d in 0..=r {
        let di = d as i64;
        let mut rhs = character(n, d as u32)?.scale(&LaurentPoly::monomial(di * (n as i64 - di), 1));
        for (i, s) in sols.iter().enumerate() {
            rhs = &rhs - &s.scale(&m.entries[d][i]);
        }
        sols.push(rhs);
    }
    sat_cache().lock().expect("cache poisoned").insert(n, sols.clone());
    Ok(sols)
}

/// Image of a circ-flavored element under the Satake transform.
pub fn satake_transform(e: &HeckeElement) -> Result<SymLaurent> {
    if e.flavor() != Flavor::Circ {
        return domain("the Satake transform is implemented for the circ algebra only");
    }
    let basis = satake_basis(e.n())?;
    let mut out = SymLaurent::zero(e.rank() as usize);
    for (d, c) in e.coeffs() {
        out = &out + &basis[d as usize].scale(c);
    }
    Ok(out)
}

/// Forward check: `Σ_i M[δ][i]·Sat(T_i) − q^{δ(N−δ)}χ(ρ_{N;δ})` for each `δ`.
pub fn forward_check(n: u32) -> Result<Vec<SymLaurent>> {
    let m = SatakeMatrix::new(n)?;
    let basis = satake_basis(n)?;
    let r = (n / 2) as usize;
    (0..=r)
        .map(|d| {
            let di = d as i64;
            let mut acc = character(n, d as u32)?
                .scale(&LaurentPoly::monomial(di * (n as i64 - di), -1));
            for (i, s) in basis.iter().enumerate().take(d + 1) {
                acc = &acc + &s.scale(&m.entries[d][i]);
            }
            Ok(acc)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SatakeIdentity {
    Even1,
    Even2,
    Even4,
    Odd1,
    Odd2,
}

impl SatakeIdentity {
    pub const ALL: [SatakeIdentity; 5] = [
        SatakeIdentity::Even1,
        SatakeIdentity::Even2,
        SatakeIdentity::Even4,
        SatakeIdentity::Odd1,
        SatakeIdentity::Odd2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SatakeIdentity::Even1 => "even1",
            SatakeIdentity::Even2 => "even2",
            SatakeIdentity::Even4 => "even4",
            SatakeIdentity::Odd1 => "odd1",
            SatakeIdentity::Odd2 => "odd2",
        }
    }

    pub fn rank_n(&self, r: u32) -> u32 {
        match self {
            SatakeIdentity::Even1 | SatakeIdentity::Even2 | SatakeIdentity::Even4 => 2 * r,
            _ => 2 * r + 1,
        }
    }
}

impl FromStr for SatakeIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SatakeIdentity::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .map_or_else(|| domain(format!("unknown Satake identity '{s}'")), Ok)
    }
}

/// `Π_i (m_i + c)` in rank `r`.
pub(crate) fn shifted_product(r: usize, c: &LaurentPoly, skip: Option<usize>) -> SymLaurent {
    (1..=r)
        .filter(|&i| Some(i) != skip)
        .fold(SymLaurent::one(r), |acc, i| {
            &acc * &(&SymLaurent::m(r, i) + &SymLaurent::constant(r, c.clone()))
        })
}

/// `m_i − q − q^{-1}` shift.
pub(crate) fn minus_q_shift() -> LaurentPoly {
    LaurentPoly::from_terms([(1, -1), (-1, -1)])
}

/// `LHS − RHS` of the named identity in rank `r`, as a symmetric polynomial.
pub fn verify_satake_identity(which: SatakeIdentity, r: u32) -> Result<SymLaurent> {
    if r == 0 {
        return domain("Satake identities need r >= 1");
    }
    let n = which.rank_n(r);
    let ru = r as usize;
    let ri = r as i64;
    let sat = satake_basis(n)?;
    let sat_at = |d: u32| &sat[(r - d) as usize];
    let even_prod = |d: u32| odd_product(d, ProductVariant::Even);
    let (lhs, rhs) = match which {
        SatakeIdentity::Even1 => {
            let lhs = shifted_product(ru, &LaurentPoly::constant(2), None)
                .scale(&LaurentPoly::monomial(ri * ri, 1));
            let mut rhs = sat_at(0).clone();
            for d in 1..=r {
                rhs = &rhs + &sat_at(d).scale(&even_prod(d));
            }
            (lhs, rhs)
        }
        SatakeIdentity::Even2 => {
            let lhs = shifted_product(ru, &minus_q_shift(), None)
                .scale(&LaurentPoly::monomial(ri * ri, 1));
            let mut rhs = sat_at(0).clone();
            for d in 1..=r {
                let c = &LaurentPoly::neg_q_pow(d as i64) * &even_prod(d);
                rhs = &rhs + &sat_at(d).scale(&c);
            }
            (lhs, rhs)
        }
        SatakeIdentity::Even4 => {
            let mut sum = SymLaurent::zero(ru);
            for j in 1..=ru {
                sum = &sum + &shifted_product(ru, &minus_q_shift(), Some(j));
            }
            let factor = LaurentPoly::from_terms([(ri * ri + 1, 1), (ri * ri - 1, -1)]);
            let lhs = sum.scale(&factor);
            let mut rhs = SymLaurent::zero(ru);
            for d in 1..=r {
                let c = &(&LaurentPoly::neg_q_pow(d as i64) * &even_prod(d)) - &d_number(d);
                rhs = &rhs + &sat_at(d).scale(&c);
            }
            (lhs, rhs)
        }
        SatakeIdentity::Odd1 => {
            let shift = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
            let lhs = shifted_product(ru, &shift, None).scale(&LaurentPoly::monomial(ri * ri + ri, 1));
            let mut rhs = sat_at(0).clone();
            for d in 1..=r {
                rhs = &rhs + &sat_at(d).scale(&odd_product(d, ProductVariant::Odd));
            }
            (lhs, rhs)
        }
        SatakeIdentity::Odd2 => {
            let lhs = shifted_product(ru, &LaurentPoly::constant(-2), None)
                .scale(&LaurentPoly::monomial(ri * ri + ri, 1));
            let mut rhs = SymLaurent::zero(ru);
            for d in 0..=r {
                rhs = &rhs + &sat_at(d).scale(&d_number(d));
            }
            (lhs, rhs)
        }
    };
    Ok(&lhs - &rhs)
}

/// Convenience: the Satake image of a named circ operator.
pub fn named_satake(op: NamedOp, n: u32) -> Result<SymLaurent> {
    satake_transform(&named_operator(op, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn small_transforms() {
        let b2 = satake_basis(2).unwrap();
        assert_eq!(b2[0], SymLaurent::one(1));
        let expect = &SymLaurent::m(1, 1).scale(&LaurentPoly::q()) + &SymLaurent::constant(1, lp(&[(1, 1), (0, -1)]));
        assert_eq!(b2[1], expect);
        let b3 = satake_basis(3).unwrap();
        let expect = &SymLaurent::m(1, 1).scale(&LaurentPoly::monomial(2, 1)) + &SymLaurent::constant(1, lp(&[(1, 1), (0, -1)]));
        assert_eq!(b3[1], expect);
    }

    #[test]
    fn matrix_shape() {
        let m = SatakeMatrix::new(2).unwrap();
        assert!(m.is_lower_unitriangular());
        assert_eq!(m.entries[1][0], lp(&[(0, 1), (1, -1)]));
    }

    #[test]
    fn identities_rank_one() {
        for w in SatakeIdentity::ALL {
            assert!(verify_satake_identity(w, 1).unwrap().is_zero(), "{w:?}");
        }
    }

    #[test]
    fn bullet_rejected() {
        let e = named_operator(NamedOp::Rbullet, 2).unwrap();
        assert!(satake_transform(&e).is_err());
    }
}
