use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::qcalc::{d_bullet_number, d_number, odd_product, LaurentPoly, ProductVariant};

/// Which spherical Hecke algebra an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Circ,
    Bullet,
}

/// A finite combination `Σ_δ c_δ T_{N;δ}` with Laurent-polynomial
/// coefficients, `0 ≤ δ ≤ ⌊N/2⌋`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeElement {
    n: u32,
    flavor: Flavor,
    coeffs: BTreeMap<u32, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: u32, flavor: Flavor) -> Self {
        Self { n, flavor, coeffs: BTreeMap::new() }
    }

    /// The unit element `T_{N;0}`.
    pub fn unit(n: u32, flavor: Flavor) -> Self {
        Self::basis(n, flavor, 0).expect("δ = 0 is always in range")
    }

    pub fn basis(n: u32, flavor: Flavor, delta: u32) -> Result<Self> {
        Self::from_coeffs(n, flavor, [(delta, LaurentPoly::one())])
    }

    pub fn from_coeffs(
        n: u32,
        flavor: Flavor,
        coeffs: impl IntoIterator<Item = (u32, LaurentPoly)>,
    ) -> Result<Self> {
        if n == 0 {
            return domain("Hecke elements need N >= 1");
        }
        let mut out = Self::zero(n, flavor);
        for (d, c) in coeffs {
            if d > n / 2 {
                return domain(format!("T_{{{n};{d}}} needs delta <= {}", n / 2));
            }
            out.add_coeff(d, &c);
        }
        Ok(out)
    }

    fn add_coeff(&mut self, d: u32, c: &LaurentPoly) {
        let slot = self.coeffs.entry(d).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> u32 {
        self.n / 2
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn coeff(&self, delta: u32) -> LaurentPoly {
        self.coeffs.get(&delta).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.flavor != other.flavor {
            return domain("Hecke elements of different rank or flavor");
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (&d, c) in &other.coeffs {
            out.add_coeff(d, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n, self.flavor);
        for (&d, v) in &self.coeffs {
            out.add_coeff(d, &(v * c));
        }
        out
    }

    pub fn to_unicode(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let dot = if unicode { "·" } else { "*" };
        self.coeffs
            .iter()
            .rev()
            .map(|(d, c)| {
                let cs = if unicode { c.to_unicode() } else { c.to_string() };
                if c.is_one() {
                    format!("T{d}")
                } else if c.num_terms() == 1 {
                    format!("{cs}{dot}T{d}")
                } else {
                    format!("({cs}){dot}T{d}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement[N={}, {:?}]({self})", self.n, self.flavor)
    }
}

/// Named operators, plus the two even-rank combinations whose images have
/// closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedOp {
    /// The intertwining operator, any parity.
    Icirc,
    /// `Σ_δ d_{r−δ} T_δ`, odd rank.
    Tstar,
    /// Same element as [`NamedOp::Tstar`].
    TcircOdd,
    /// Even rank.
    Rcirc,
    /// `Σ_{δ<r} d•_{r−δ} T_δ`, even rank.
    TcircEven,
    Rbullet,
    TbulletEven,
    TbulletOdd,
    /// `(q+1)R° − I°`, even rank.
    RIcombo,
    /// `R° + (q+1)T°`, even rank.
    RTcombo,
}

impl NamedOp {
    pub const ALL: [NamedOp; 10] = [
        NamedOp::Icirc,
        NamedOp::Tstar,
        NamedOp::TcircOdd,
        NamedOp::Rcirc,
        NamedOp::TcircEven,
        NamedOp::Rbullet,
        NamedOp::TbulletEven,
        NamedOp::TbulletOdd,
        NamedOp::RIcombo,
        NamedOp::RTcombo,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            NamedOp::Icirc => "Icirc",
            NamedOp::Tstar => "Tstar",
            NamedOp::TcircOdd => "TcircOdd",
            NamedOp::Rcirc => "Rcirc",
            NamedOp::TcircEven => "TcircEven",
            NamedOp::Rbullet => "Rbullet",
            NamedOp::TbulletEven => "TbulletEven",
            NamedOp::TbulletOdd => "TbulletOdd",
            NamedOp::RIcombo => "RIcombo",
            NamedOp::RTcombo => "RTcombo",
        }
    }

    /// `Some(true)` for even-only, `Some(false)` for odd-only.
    pub fn required_parity_even(&self) -> Option<bool> {
        match self {
            NamedOp::Icirc => None,
            NamedOp::Tstar | NamedOp::TcircOdd | NamedOp::TbulletOdd => Some(false),
            _ => Some(true),
        }
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            NamedOp::Rbullet | NamedOp::TbulletEven | NamedOp::TbulletOdd => Flavor::Bullet,
            _ => Flavor::Circ,
        }
    }

    /// Operators available at rank `N`.
    pub fn for_rank(n: u32) -> Vec<NamedOp> {
        let even = n.is_multiple_of(2);
        NamedOp::ALL
            .into_iter()
            .filter(|op| op.required_parity_even().is_none_or(|e| e == even))
            .collect()
    }
}

impl fmt::Display for NamedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NamedOp::ALL
            .into_iter()
            .find(|op| op.name().eq_ignore_ascii_case(s))
            .map_or_else(|| domain(format!("unknown operator '{s}'")), Ok)
    }
}

fn q_plus_one() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (0, 1)])
}

/// `(1 − (−q)^k)/(q+1) · (q+1)(q³+1)⋯(q^{2k−1}+1)`
fn r_coefficient(k: u32) -> Result<LaurentPoly> {
    let head = (LaurentPoly::one() - LaurentPoly::neg_q_pow(k as i64)).div_exact(&q_plus_one())?;
    Ok(&head * &odd_product(k, ProductVariant::Even))
}

/// Expands a named operator in the `T_{N;δ}` basis.
pub fn named_operator(op: NamedOp, n: u32) -> Result<HeckeElement> {
    if n == 0 {
        return domain("operators need N >= 1");
    }
    let even = n.is_multiple_of(2);
    if let Some(e) = op.required_parity_even() {
        if e != even {
            return domain(format!(
                "{op} is defined only for {} N, got N = {n}",
                if e { "even" } else { "odd" }
            ));
        }
    }
    let r = n / 2;
    let flavor = op.flavor();
    let coeffs: Vec<(u32, LaurentPoly)> = match op {
        NamedOp::Icirc => (0..=r)
            .map(|d| (d, odd_product(r - d, ProductVariant::for_rank(n))))
            .collect(),
        NamedOp::Tstar | NamedOp::TcircOdd => (0..=r).map(|d| (d, d_number(r - d))).collect(),
        NamedOp::Rcirc | NamedOp::Rbullet => (0..r)
            .map(|d| Ok((d, r_coefficient(r - d)?)))
            .collect::<Result<_>>()?,
        NamedOp::TcircEven | NamedOp::TbulletEven | NamedOp::TbulletOdd => (0..r)
            .map(|d| Ok((d, d_bullet_number(r - d)?)))
            .collect::<Result<_>>()?,
        NamedOp::RIcombo => {
            let rc = named_operator(NamedOp::Rcirc, n)?;
            let ic = named_operator(NamedOp::Icirc, n)?;
            return rc.scale(&q_plus_one()).sub(&ic);
        }
        NamedOp::RTcombo => {
            let rc = named_operator(NamedOp::Rcirc, n)?;
            let tc = named_operator(NamedOp::TcircEven, n)?;
            return rc.add(&tc.scale(&q_plus_one()));
        }
    };
    HeckeElement::from_coeffs(n, flavor, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(t.iter().copied())
    }

    #[test]
    fn intertwining_small_ranks() {
        let i2 = named_operator(NamedOp::Icirc, 2).unwrap();
        assert_eq!(i2.coeff(1), LaurentPoly::one());
        assert_eq!(i2.coeff(0), lp(&[(1, 1), (0, 1)]));
        let i3 = named_operator(NamedOp::Icirc, 3).unwrap();
        assert_eq!(i3.coeff(0), lp(&[(3, 1), (0, 1)]));
        assert_eq!(i3.to_unicode(), "T1 + (q³+1)·T0");
    }

    #[test]
    fn r_operator_rank_two() {
        let r2 = named_operator(NamedOp::Rcirc, 2).unwrap();
        assert_eq!(r2.coeff(0), lp(&[(1, 1), (0, 1)]));
        assert_eq!(r2.coeff(1), LaurentPoly::zero());
    }

    #[test]
    fn parity_checked() {
        assert!(named_operator(NamedOp::Rcirc, 3).is_err());
        assert!(named_operator(NamedOp::Tstar, 4).is_err());
        assert!(named_operator(NamedOp::Icirc, 0).is_err());
    }

    #[test]
    fn rt_combo_coefficients() {
        for r in 1..=4u32 {
            let e = named_operator(NamedOp::RTcombo, 2 * r).unwrap();
            assert_eq!(e.coeff(r), LaurentPoly::zero());
            for d in 1..=r {
                let expect = d_number(d)
                    - &LaurentPoly::neg_q_pow(d as i64) * &odd_product(d, ProductVariant::Even);
                assert_eq!(e.coeff(r - d), expect);
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for op in NamedOp::ALL {
            assert_eq!(op.name().parse::<NamedOp>().unwrap(), op);
        }
    }
}
