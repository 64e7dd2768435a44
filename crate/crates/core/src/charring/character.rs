use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{InversionLaurent, SymLaurent, SymMono};
use crate::error::{domain, resource, Error, Result};
use crate::qcalc::LaurentPoly;

/// Largest `N` accepted by the subset-enumeration oracle.
pub const BRUTEFORCE_MAX_N: u32 = 12;

/// The elementary symmetric polynomial `s_δ(m_1..m_r)`.
pub fn elem_sym(r: usize, delta: usize) -> Result<SymLaurent> {
    if delta > r {
        return domain(format!("elementary symmetric s_{delta} needs delta <= rank {r}"));
    }
    let mut out = SymLaurent::zero(r);
    for subset in combinations(r, delta) {
        let mut e = vec![0; r];
        for i in subset {
            e[i] = 1;
        }
        out.add_term(SymMono { m: e, lambda: 0 }, LaurentPoly::one());
    }
    Ok(out)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

pub(crate) fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn check_char_args(n: u32, delta: u32) -> Result<usize> {
    if n == 0 {
        return domain("rank N must be >= 1");
    }
    let r = (n / 2) as usize;
    if delta as usize > r {
        return domain(format!("delta = {delta} exceeds floor(N/2) = {r}"));
    }
    Ok(r)
}

/// The character of `ρ_{N;δ}` as an integer combination of the `s_j`, keyed
/// by `j`.
pub fn character_in_s_basis(n: u32, delta: u32) -> Result<BTreeMap<usize, BigInt>> {
    let r = check_char_args(n, delta)? as i64;
    let d = delta as i64;
    let mut out = BTreeMap::new();
    if n.is_multiple_of(2) {
        for j in 0..=d / 2 {
            out.insert((d - 2 * j) as usize, binomial(r - d + 2 * j, j));
        }
    } else {
        for i in 0..=d {
            out.insert((d - i) as usize, binomial(r - d + i, i / 2));
        }
    }
    Ok(out)
}

/// Closed-form character of `ρ_{N;δ}` in the variables `m_1..m_r`.
pub fn character(n: u32, delta: u32) -> Result<SymLaurent> {
    let r = check_char_args(n, delta)?;
    let mut out = SymLaurent::zero(r);
    for (j, c) in character_in_s_basis(n, delta)? {
        out = &out + &elem_sym(r, j)?.scale(&LaurentPoly::constant(c));
    }
    Ok(out)
}

/// Sums `Π_{i∈I} μ_i μ_{N+1−i}^{-1}` over all `δ`-subsets `I` of `{1..N}`
/// and rewrites the result in the `m`-variables. Any `0 ≤ δ ≤ N` is accepted.
pub fn character_bruteforce(n: u32, delta: u32) -> Result<SymLaurent> {
    if n > BRUTEFORCE_MAX_N {
        return resource(format!("character oracle limited to N <= {BRUTEFORCE_MAX_N}, got {n}"));
    }
    if n == 0 || delta > n {
        return domain(format!("need 1 <= N and delta <= N, got N = {n}, delta = {delta}"));
    }
    let r = (n / 2) as usize;
    let nn = n as usize;
    let mut sum = InversionLaurent::zero(r);
    for subset in combinations(nn, delta as usize) {
        let mut e = vec![0i64; r];
        for i in subset {
            // 0-based index i stands for μ_{i+1}.
            if i < r {
                e[i] += 1;
            } else if i >= nn - r {
                e[nn - 1 - i] -= 1;
            }
        }
        sum = &sum + &InversionLaurent::monomial(e, LaurentPoly::one());
    }
    let out = sum.to_sym()?;
    if !out.is_symmetric() {
        return Err(Error::Invariant("brute-force character is not symmetric".into()));
    }
    Ok(out)
}

/// Expresses a symmetric λ-free element in the monomials
/// `s_1^{b_1}⋯s_r^{b_r}` by leading-monomial elimination (lex order).
/// The result is re-expanded and compared with the input.
pub fn to_elementary_basis(f: &SymLaurent) -> Result<BTreeMap<Vec<u32>, LaurentPoly>> {
    if f.has_lambda() {
        return domain("elementary-basis conversion needs a λ-free element");
    }
    let r = f.rank();
    let mut rem = f.clone();
    let mut out: BTreeMap<Vec<u32>, LaurentPoly> = BTreeMap::new();
    loop {
        let Some((lead, c)) = rem.terms().next_back().map(|(k, c)| (k.m.clone(), c.clone())) else {
            break;
        };
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "leading exponent {lead:?} is not a partition; input is not symmetric"
            )));
        }
        let b: Vec<u32> = (0..r)
            .map(|j| lead[j] - if j + 1 < r { lead[j + 1] } else { 0 })
            .collect();
        let t = from_elementary_monomial(r, &b)?.scale(&c);
        rem = &rem - &t;
        let slot = out.entry(b).or_default();
        *slot += &c;
    }
    out.retain(|_, v| !v.is_zero());
    if from_elementary_basis(r, &out)? != *f {
        return Err(Error::Invariant("elementary-basis expansion does not round-trip".into()));
    }
    Ok(out)
}

fn from_elementary_monomial(r: usize, b: &[u32]) -> Result<SymLaurent> {
    let mut t = SymLaurent::one(r);
    for (j, &bj) in b.iter().enumerate() {
        if bj > 0 {
            t = &t * &elem_sym(r, j + 1)?.pow(bj);
        }
    }
    Ok(t)
}

pub fn from_elementary_basis(r: usize, coeffs: &BTreeMap<Vec<u32>, LaurentPoly>) -> Result<SymLaurent> {
    let mut out = SymLaurent::zero(r);
    for (b, c) in coeffs {
        out = &out + &from_elementary_monomial(r, b)?.scale(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elem_sym_examples() {
        assert_eq!(elem_sym(2, 1).unwrap(), SymLaurent::m(2, 1) + SymLaurent::m(2, 2));
        assert_eq!(elem_sym(4, 0).unwrap(), SymLaurent::one(4));
        let m = |i| SymLaurent::m(3, i);
        assert_eq!(elem_sym(3, 3).unwrap(), m(1) * m(2) * m(3));
        assert!(elem_sym(2, 3).is_err());
    }

    #[test]
    fn character_examples() {
        assert_eq!(character(2, 1).unwrap(), SymLaurent::m(1, 1));
        assert_eq!(character(3, 1).unwrap(), SymLaurent::m(1, 1) + SymLaurent::one(1));
        assert_eq!(character(5, 0).unwrap(), SymLaurent::one(2));
        assert_eq!(character_bruteforce(3, 1).unwrap(), SymLaurent::m(1, 1) + SymLaurent::one(1));
        assert_eq!(character_bruteforce(2, 2).unwrap(), SymLaurent::one(1));
        assert!(character(4, 3).is_err());
        assert!(matches!(character_bruteforce(13, 1), Err(Error::Resource(_))));
    }

    #[test]
    fn elementary_round_trip() {
        let c = character(6, 2).unwrap();
        let basis = to_elementary_basis(&c).unwrap();
        // s_2 + C(3,1)·s_0
        assert_eq!(basis.get(&vec![0, 1, 0]), Some(&LaurentPoly::one()));
        assert_eq!(basis.get(&vec![0, 0, 0]), Some(&LaurentPoly::constant(3)));
        assert!(to_elementary_basis(&SymLaurent::m(2, 2)).is_err());
    }
}
