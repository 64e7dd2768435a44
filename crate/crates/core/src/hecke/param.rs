use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::scalar::{Fp, Scalar};

/// An abstract Satake parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum SatakeParam<S> {
    /// `α_1..α_N` with `α_i α_{N+1−i} = 1`.
    Inert(Vec<S>),
    /// An ordered pair of multisets of equal size.
    Split(Vec<S>, Vec<S>),
}

impl<S: Scalar> SatakeParam<S> {
    /// Validates the inversion pairing.
    pub fn inert(alphas: Vec<S>) -> Result<Self> {
        if alphas.is_empty() {
            return domain("Satake parameters need N >= 1");
        }
        let n = alphas.len();
        for i in 0..n {
            let prod = alphas[i].mul(&alphas[n - 1 - i]);
            if prod != prod.one_like() {
                return domain(format!("alpha_{} * alpha_{} != 1", i + 1, n - i));
            }
        }
        Ok(SatakeParam::Inert(alphas))
    }

    /// Completes `α_1..α_r` to rank `N` with inverses (and a middle `1`).
    /// `ctx` is any element of the target ring.
    pub fn inert_from_half(ctx: &S, half: &[S], n: usize) -> Result<Self> {
        if n == 0 || half.len() != n / 2 {
            return domain(format!("need exactly {} free entries for N = {n}", n / 2));
        }
        let one = ctx.one_like();
        let mut out: Vec<S> = half.to_vec();
        if n % 2 == 1 {
            out.push(one);
        }
        for a in half.iter().rev() {
            out.push(a.inv().ok_or_else(|| Error::Domain(format!("entry {a:?} is not invertible")))?);
        }
        Self::inert(out)
    }

    pub fn split(a: Vec<S>, b: Vec<S>) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return domain("split parameters need two nonempty multisets of equal size");
        }
        Ok(SatakeParam::Split(a, b))
    }

    pub fn rank(&self) -> usize {
        match self {
            SatakeParam::Inert(a) => a.len(),
            SatakeParam::Split(a, _) => a.len(),
        }
    }

    pub fn is_inert(&self) -> bool {
        matches!(self, SatakeParam::Inert(_))
    }

    pub fn alphas(&self) -> &[S] {
        match self {
            SatakeParam::Inert(a) => a,
            SatakeParam::Split(a, _) => a,
        }
    }

    /// Inert: the pairing holds. Split: the second multiset consists of the
    /// inverses of the first.
    pub fn is_unitary(&self) -> bool {
        match self {
            SatakeParam::Inert(a) => {
                let n = a.len();
                (0..n).all(|i| {
                    let p = a[i].mul(&a[n - 1 - i]);
                    p == p.one_like()
                })
            }
            SatakeParam::Split(a, b) => {
                let inv: Option<Vec<S>> = a.iter().map(Scalar::inv).collect();
                inv.is_some_and(|inv| same_multiset(&inv, b))
            }
        }
    }

    /// Coefficients `c_0..c_N` of `Π (T − α_i)` (monic, lowest degree first).
    pub fn char_poly(&self) -> Result<Vec<S>> {
        match self {
            SatakeParam::Inert(a) => Ok(poly_from_roots(a)),
            SatakeParam::Split(..) => domain("char_poly is defined for inert parameters"),
        }
    }

    /// The tensor product; entry `(i, j)` sits at position `i·M + j`, which
    /// keeps the inversion pairing aligned.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let prod = |a: &[S], b: &[S]| -> Vec<S> {
            a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect()
        };
        match (self, other) {
            (SatakeParam::Inert(a), SatakeParam::Inert(b)) => Ok(SatakeParam::Inert(prod(a, b))),
            (SatakeParam::Split(a0, b0), SatakeParam::Split(a1, b1)) => {
                Ok(SatakeParam::Split(prod(a0, a1), prod(b0, b1)))
            }
            _ => domain("tensor product of parameters of different kinds"),
        }
    }
}

pub fn same_multiset<S: PartialEq>(a: &[S], b: &[S]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        match (0..b.len()).find(|&j| !used[j] && b[j] == *x) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// Monic `Π (T − r)`, coefficients lowest degree first.
pub fn poly_from_roots<S: Scalar>(roots: &[S]) -> Vec<S> {
    let one = match roots.first() {
        Some(r) => r.one_like(),
        None => panic!("poly_from_roots needs at least one root for ring context"),
    };
    let mut c = vec![one];
    for r in roots {
        let mut next = vec![r.zero_like(); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] = next[i + 1].add(ci);
            next[i] = next[i].sub(&ci.mul(r));
        }
        c = next;
    }
    c
}

/// `P(T) = (−T)^N P(T^{-1})`, i.e. `c_k = (−1)^N c_{N−k}`.
pub fn satisfies_functional_equation<S: Scalar>(p: &[S]) -> bool {
    let n = p.len() - 1;
    (0..=n).all(|k| {
        let mirrored = if n.is_multiple_of(2) { p[n - k].clone() } else { p[n - k].neg() };
        p[k] == mirrored
    })
}

pub fn poly_eval<S: Scalar>(p: &[S], x: &S) -> S {
    p.iter().rev().fold(x.zero_like(), |acc, c| acc.mul(x).add(c))
}

pub fn poly_derivative<S: Scalar>(p: &[S]) -> Vec<S> {
    if p.len() <= 1 {
        return vec![p[0].zero_like()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.mul(&c.int_like(k as i64)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SatakeCondition {
    TateGeneric,
    LevelRaisingSpecial,
    IntertwiningGeneric,
}

impl SatakeCondition {
    pub const ALL: [SatakeCondition; 3] = [
        SatakeCondition::TateGeneric,
        SatakeCondition::LevelRaisingSpecial,
        SatakeCondition::IntertwiningGeneric,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SatakeCondition::TateGeneric => "tate_generic",
            SatakeCondition::LevelRaisingSpecial => "level_raising_special",
            SatakeCondition::IntertwiningGeneric => "intertwining_generic",
        }
    }

    /// Whether the condition applies to rank `N`.
    pub fn applies_to(&self, n: usize) -> bool {
        match self {
            SatakeCondition::TateGeneric => n % 2 == 1,
            SatakeCondition::LevelRaisingSpecial => n.is_multiple_of(2),
            SatakeCondition::IntertwiningGeneric => true,
        }
    }
}

impl FromStr for SatakeCondition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SatakeCondition::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .map_or_else(|| domain(format!("unknown Satake condition '{s}'")), Ok)
    }
}

/// Polynomial form of the conditions, for a monic `P` with
/// `P(T) = (−T)^N P(T^{-1})`.
pub fn satake_condition<S: Scalar>(p: &[S], qv: &S, which: SatakeCondition) -> Result<bool> {
    let n = p.len().checked_sub(1).ok_or_else(|| Error::Domain("empty polynomial".into()))?;
    if n == 0 || p[n] != p[n].one_like() {
        return domain("expected a monic polynomial of positive degree");
    }
    if !satisfies_functional_equation(p) {
        return domain("polynomial violates P(T) = (-T)^N P(1/T)");
    }
    if !which.applies_to(n) {
        return domain(format!("{} does not apply to N = {n}", which.name()));
    }
    let dp = poly_derivative(p);
    let one = qv.one_like();
    Ok(match which {
        SatakeCondition::TateGeneric => !poly_eval(&dp, &one).is_zero(),
        SatakeCondition::LevelRaisingSpecial => {
            poly_eval(p, qv).is_zero() && !poly_eval(&dp, qv).is_zero()
        }
        SatakeCondition::IntertwiningGeneric => {
            let at = if n % 2 == 1 { qv.neg() } else { one.neg() };
            !poly_eval(p, &at).is_zero()
        }
    })
}

/// Multiset form of the conditions, read on the inversion pairs
/// `(α_i, α_{N+1−i})`. Needs `qv² ≠ 1` where the pair reading would
/// otherwise be ambiguous.
pub fn semantic_condition<S: Scalar>(
    alpha: &SatakeParam<S>,
    qv: &S,
    which: SatakeCondition,
) -> Result<bool> {
    let a = match alpha {
        SatakeParam::Inert(a) => a,
        SatakeParam::Split(..) => return domain("semantic conditions need an inert parameter"),
    };
    let n = a.len();
    if !which.applies_to(n) {
        return domain(format!("{} does not apply to N = {n}", which.name()));
    }
    let one = qv.one_like();
    let qv_inv = qv.inv().ok_or_else(|| Error::Domain("qv must be invertible".into()))?;
    let degenerate = qv.mul(qv) == one;
    let pairs: Vec<(&S, &S)> = (0..n / 2).map(|i| (&a[i], &a[n - 1 - i])).collect();
    let pair_is = |x: &S, y: &S| pairs.iter().filter(|(u, v)| (*u == x && *v == y) || (*u == y && *v == x)).count();
    Ok(match which {
        SatakeCondition::TateGeneric => a.iter().filter(|x| **x == one).count() == 1,
        SatakeCondition::LevelRaisingSpecial => {
            if degenerate {
                return domain("level_raising_special pair reading needs qv^2 != 1");
            }
            pair_is(qv, &qv_inv) == 1
        }
        SatakeCondition::IntertwiningGeneric => {
            if n % 2 == 1 {
                if degenerate {
                    return domain("intertwining_generic pair reading needs qv^2 != 1 for odd N");
                }
                pair_is(&qv.neg(), &qv_inv.neg()) == 0
            } else {
                pair_is(&one.neg(), &one.neg()) == 0
            }
        }
    })
}

/// True iff no two entries (at different positions) have ratio `qv`.
pub fn decomposed_generic<S: Scalar>(roots: &[S], qv: &S) -> Result<bool> {
    if roots.iter().any(Scalar::is_zero) {
        return domain("decomposed_generic needs nonzero roots");
    }
    for (i, x) in roots.iter().enumerate() {
        for (j, y) in roots.iter().enumerate() {
            if i != j && *x == qv.mul(y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Uniformly random inert parameter over `F_p`: free entries uniform in
/// `F_p^×`, partners inverted, middle entry `1`.
pub fn random_inert<R: Rng>(n: usize, p: u64, rng: &mut R) -> SatakeParam<Fp> {
    random_inert_with_specials(n, p, rng, &[], 0.0)
}

/// Like [`random_inert`], but each free entry is drawn from `specials` with
/// probability `weight`. This makes both truth values of the Satake
/// conditions occur at realistic sample sizes.
pub fn random_inert_with_specials<R: Rng>(
    n: usize,
    p: u64,
    rng: &mut R,
    specials: &[Fp],
    weight: f64,
) -> SatakeParam<Fp> {
    let half: Vec<Fp> = (0..n / 2)
        .map(|_| {
            if !specials.is_empty() && rng.gen_bool(weight) {
                specials[rng.gen_range(0..specials.len())]
            } else {
                Fp::new(rng.gen_range(1..p) as i64, p)
            }
        })
        .collect();
    SatakeParam::inert_from_half(&Fp::new(1, p), &half, n).expect("nonzero entries are invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u64 = 10007;

    fn f(v: i64) -> Fp {
        Fp::new(v, P)
    }

    #[test]
    fn char_poly_and_unitarity() {
        let a = SatakeParam::inert(vec![f(1)]).unwrap();
        assert_eq!(a.char_poly().unwrap(), vec![f(-1), f(1)]);
        let b = SatakeParam::inert_from_half(&f(1), &[f(3)], 2).unwrap();
        let p = b.char_poly().unwrap();
        let s = f(3).add(&f(3).inv().unwrap());
        assert_eq!(p, vec![f(1), s.neg(), f(1)]);
        assert!(satisfies_functional_equation(&p));
        assert!(SatakeParam::inert(vec![f(2), f(2)]).is_err());
    }

    #[test]
    fn tensor_examples() {
        let a = SatakeParam::inert_from_half(&f(1), &[f(5)], 2).unwrap();
        let one = SatakeParam::inert(vec![f(1)]).unwrap();
        assert_eq!(a.tensor(&one).unwrap(), a);
        let b = SatakeParam::inert_from_half(&f(1), &[f(7)], 3).unwrap();
        let t = a.tensor(&b).unwrap();
        assert_eq!(t.rank(), 6);
        assert!(t.is_unitary());
        let split = SatakeParam::split(vec![f(2)], vec![f(2).inv().unwrap()]).unwrap();
        assert!(split.is_unitary());
        assert!(a.tensor(&split).is_err());
    }

    #[test]
    fn conditions_examples() {
        let a = SatakeParam::inert_from_half(&f(1), &[f(4)], 3).unwrap();
        let p = a.char_poly().unwrap();
        assert!(satake_condition(&p, &f(3), SatakeCondition::TateGeneric).unwrap());
        let twice = SatakeParam::inert_from_half(&f(1), &[f(1)], 3).unwrap();
        assert!(!satake_condition(&twice.char_poly().unwrap(), &f(3), SatakeCondition::TateGeneric).unwrap());
        let q = f(3);
        let lrs = SatakeParam::inert_from_half(&f(1), &[q], 2).unwrap();
        assert!(satake_condition(&lrs.char_poly().unwrap(), &q, SatakeCondition::LevelRaisingSpecial).unwrap());
        assert!(semantic_condition(&lrs, &q, SatakeCondition::LevelRaisingSpecial).unwrap());
        let lrs2 = SatakeParam::inert_from_half(&f(1), &[q, q], 4).unwrap();
        assert!(!semantic_condition(&lrs2, &q, SatakeCondition::LevelRaisingSpecial).unwrap());
        assert!(!satake_condition(&lrs2.char_poly().unwrap(), &q, SatakeCondition::LevelRaisingSpecial).unwrap());
        let minus = SatakeParam::inert_from_half(&f(1), &[f(-1), f(9)], 4).unwrap();
        assert!(!semantic_condition(&minus, &q, SatakeCondition::IntertwiningGeneric).unwrap());
        assert!(satake_condition(&p, &f(3), SatakeCondition::LevelRaisingSpecial).is_err());
        assert!(satake_condition(&[f(2), f(1)], &q, SatakeCondition::TateGeneric).is_err());
    }

    #[test]
    fn decomposed_examples() {
        let q = f(3);
        assert!(!decomposed_generic(&[f(2), f(6)], &q).unwrap());
        assert!(decomposed_generic(&[f(1)], &q).unwrap());
        assert!(decomposed_generic(&[f(0)], &q).is_err());
    }

    #[test]
    fn random_parameters_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..8 {
            let a = random_inert(n, P, &mut rng);
            assert!(a.is_unitary());
            assert!(satisfies_functional_equation(&a.char_poly().unwrap()));
        }
    }
}
