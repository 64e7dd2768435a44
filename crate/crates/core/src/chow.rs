//! Chern classes of bundles on projective space, in the truncated ring
//! `Z[η]/(η^{m+1})`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// An element of `CH(P^m) = Z[η]/(η^{m+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass {
    coeffs: Vec<BigInt>,
}

impl ChowClass {
    pub fn zero(m: usize) -> Self {
        ChowClass { coeffs: vec![BigInt::zero(); m + 1] }
    }

    pub fn one(m: usize) -> Self {
        let mut c = Self::zero(m);
        c.coeffs[0] = BigInt::one();
        c
    }

    /// Builds from low-to-high coefficients, truncating past `η^m`.
    pub fn from_coeffs(m: usize, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let mut c = Self::zero(m);
        for (slot, v) in c.coeffs.iter_mut().zip(coeffs) {
            *slot = v;
        }
        c
    }

    /// `1 + aη`.
    pub fn linear(m: usize, a: impl Into<BigInt>) -> Self {
        let mut c = Self::one(m);
        if m >= 1 {
            c.coeffs[1] = a.into();
        }
        c
    }

    pub fn ambient_dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree of the top class `η^m`.
    pub fn integrate(&self) -> BigInt {
        self.coeffs[self.ambient_dim()].clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_space(other);
        ChowClass { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_space(other);
        let m = self.ambient_dim();
        let mut out = Self::zero(m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.ambient_dim()), |acc, _| acc.mul(self))
    }

    /// Inverse of a class with constant term `±1`.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return None;
        }
        let m = self.ambient_dim();
        let mut inv = Self::zero(m);
        inv.coeffs[0] = c0.clone();
        for k in 1..=m {
            let s: BigInt = (1..=k).map(|j| &self.coeffs[j] * &inv.coeffs[k - j]).sum();
            inv.coeffs[k] = -(c0 * s);
        }
        Some(inv)
    }

    /// Multiplies the degree-`i` part by `p^i`.
    pub fn scale_degrees(&self, p: &BigInt) -> Self {
        let mut f = BigInt::one();
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= &f;
            f *= p;
        }
        out
    }

    fn same_space(&self, other: &Self) {
        assert_eq!(self.ambient_dim(), other.ambient_dim(), "classes on different projective spaces");
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sup = |k: usize| -> String {
            const D: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
            k.to_string().chars().map(|c| D[c.to_digit(10).unwrap() as usize]).collect()
        };
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mono = match j {
                0 => String::new(),
                1 => "η".to_string(),
                _ => format!("η{}", sup(j)),
            };
            if j == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{mono}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A vector bundle on `P^m` recorded by rank and total Chern class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleClass {
    rank: usize,
    total: ChowClass,
}

impl BundleClass {
    /// Checks constant term 1 and `c_j = 0` for `j > rank`.
    pub fn new(rank: usize, total: ChowClass) -> Result<Self> {
        if !total.coeff(0).is_one() {
            return Err(Error::Invariant(format!("total Chern class {total} must start with 1")));
        }
        if let Some(j) = (rank + 1..=total.ambient_dim()).find(|&j| !total.coeff(j).is_zero()) {
            return Err(Error::Invariant(format!("c_{j} of a rank-{rank} bundle is nonzero: {total}")));
        }
        Ok(BundleClass { rank, total })
    }

    pub fn trivial(m: usize, rank: usize) -> Self {
        BundleClass { rank, total: ChowClass::one(m) }
    }

    /// `O(k)`.
    pub fn line(m: usize, k: i64) -> Self {
        BundleClass { rank: 1, total: ChowClass::linear(m, k) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn total(&self) -> &ChowClass {
        &self.total
    }

    pub fn ambient_dim(&self) -> usize {
        self.total.ambient_dim()
    }

    pub fn chern(&self, j: usize) -> BigInt {
        self.total.coeff(j)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Self::new(self.rank + other.rank, self.total.mul(&other.total))
    }

    /// The kernel `S` of a surjection `E → Q`: `c(S) = c(E)/c(Q)`.
    pub fn kernel_of(middle: &Self, quotient: &Self) -> Result<Self> {
        let Some(rank) = middle.rank.checked_sub(quotient.rank) else {
            return domain("quotient rank exceeds middle rank");
        };
        let inv = quotient.total.inverse().expect("total Chern classes are units");
        Self::new(rank, middle.total.mul(&inv))
    }

    /// `E ⊗ O(k)`.
    pub fn twist(&self, k: i64) -> Self {
        let m = self.ambient_dim();
        let kk = BigInt::from(k);
        let mut out = ChowClass::zero(m);
        for j in 0..=m {
            let mut s = BigInt::zero();
            for i in 0..=j.min(self.rank) {
                s += binomial(self.rank - i, j - i) * self.chern(i) * kk.pow((j - i) as u32);
            }
            out.coeffs[j] = s;
        }
        Self::new(self.rank, out).expect("twisting preserves the rank bound")
    }

    /// Pullback along the `p`-power Frobenius: `c_i ↦ p^i c_i`.
    pub fn frobenius(&self, p: i64) -> Self {
        Self::new(self.rank, self.total.scale_degrees(&BigInt::from(p))).expect("same rank")
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// The rank-`(n−1)` kernel of `O^n → O(1)` on `P^{n−1}`.
pub fn tautological_sub(n: usize) -> Result<BundleClass> {
    if n == 0 {
        return domain("tautological_sub needs n ≥ 1");
    }
    let m = n - 1;
    BundleClass::kernel_of(&BundleClass::trivial(m, n), &BundleClass::line(m, 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ExcessIntegral {
    /// `∫ c_{r−1}(F)` on `P^{r−1}`, `F = ker(O(1)^r → O(p+1))`.
    I1,
    /// `∫ c_{r−1}(F(−1))`.
    I2,
    /// `∫ c_d(σ*S ⊗ O(1))` on `P^d` with `S` tautological.
    I3,
}

impl ExcessIntegral {
    pub const ALL: [ExcessIntegral; 3] = [Self::I1, Self::I2, Self::I3];

    pub fn name(self) -> &'static str {
        match self {
            Self::I1 => "I1",
            Self::I2 => "I2",
            Self::I3 => "I3",
        }
    }
}

impl FromStr for ExcessIntegral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown integral {s:?}")))
    }
}

/// `(1 − (−p)^k)/(p + 1)`, exactly.
fn alternating_quotient(p: &BigInt, k: u32) -> Result<BigInt> {
    let num = BigInt::one() - (-p).pow(k);
    let den = p + 1;
    let (quo, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Invariant(format!("{num} is not divisible by {den}")));
    }
    Ok(quo)
}

/// Returns `(computed, expected)` for one of the excess integrals. The
/// parameter is `r ≥ 1` for `I1`/`I2` and `d ≥ 0` for `I3`.
pub fn check_excess_integral(which: ExcessIntegral, n: u32, p: i64) -> Result<(BigInt, BigInt)> {
    if p < 2 {
        return domain(format!("p = {p} must be at least 2"));
    }
    let pb = BigInt::from(p);
    match which {
        ExcessIntegral::I1 | ExcessIntegral::I2 => {
            if n == 0 {
                return domain("r must be at least 1");
            }
            let r = n as usize;
            let m = r - 1;
            let middle = (0..r).try_fold(BundleClass::trivial(m, 0), |acc, _| {
                acc.direct_sum(&BundleClass::line(m, 1))
            })?;
            let f = BundleClass::kernel_of(&middle, &BundleClass::line(m, p + 1))?;
            if which == ExcessIntegral::I1 {
                Ok((f.chern(r - 1), alternating_quotient(&pb, n)?))
            } else {
                Ok((f.twist(-1).chern(r - 1), (-&pb).pow(n - 1)))
            }
        }
        ExcessIntegral::I3 => {
            let d = n as usize;
            let h = tautological_sub(d + 1)?.frobenius(p).twist(1);
            Ok((h.chern(d), alternating_quotient(&pb, n + 1)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(m: usize, c: &[i64]) -> ChowClass {
        ChowClass::from_coeffs(m, c.iter().map(|&x| BigInt::from(x)))
    }

    #[test]
    fn tautological_examples() {
        let s = tautological_sub(2).unwrap();
        assert_eq!((s.rank(), s.total().clone()), (1, cls(1, &[1, -1])));
        assert_eq!(tautological_sub(3).unwrap().total(), &cls(2, &[1, -1, 1]));
        assert_eq!(tautological_sub(3).unwrap().total().to_string(), "1 - η + η²");
        assert!(tautological_sub(0).is_err());
    }

    #[test]
    fn twist_examples() {
        let t = BundleClass::trivial(3, 1).twist(4);
        assert_eq!(t.total(), &cls(3, &[1, 4]));
        let e = tautological_sub(4).unwrap();
        assert_eq!(e.twist(3).twist(-3), e);
        assert_eq!(e.twist(2).chern(1), e.chern(1) + BigInt::from(3 * 2));
    }

    #[test]
    fn frobenius_examples() {
        let s = tautological_sub(2).unwrap();
        assert_eq!(s.frobenius(5).total(), &cls(1, &[1, -5]));
        assert_eq!(BundleClass::trivial(3, 2).frobenius(3), BundleClass::trivial(3, 2));
        let e = tautological_sub(5).unwrap();
        assert_eq!(e.frobenius(2).frobenius(3), e.frobenius(6));
    }

    #[test]
    fn excess_examples() {
        for p in [2, 3, 5, 7] {
            let (c, e) = check_excess_integral(ExcessIntegral::I3, 1, p).unwrap();
            assert_eq!((c.clone(), e), (BigInt::from(1 - p), BigInt::from(1 - p)));
            assert_eq!(check_excess_integral(ExcessIntegral::I2, 2, p).unwrap().0, BigInt::from(-p));
            assert_eq!(check_excess_integral(ExcessIntegral::I1, 1, p).unwrap(), (BigInt::one(), BigInt::one()));
        }
        assert!(check_excess_integral(ExcessIntegral::I1, 0, 2).is_err());
        assert!(check_excess_integral(ExcessIntegral::I1, 2, 1).is_err());
    }

    #[test]
    fn rank_bound_is_enforced() {
        assert!(BundleClass::new(1, cls(3, &[1, 2, 1])).is_err());
        assert!(BundleClass::new(2, cls(3, &[2, 2, 1])).is_err());
    }
}
