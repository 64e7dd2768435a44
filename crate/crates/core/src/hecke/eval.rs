use super::{satake_transform, HeckeElement, NamedOp, SatakeParam};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

fn m_values<S: Scalar>(alpha: &SatakeParam<S>, n: u32) -> Result<Vec<S>> {
    let a = match alpha {
        SatakeParam::Inert(a) => a,
        SatakeParam::Split(..) => return domain("evaluation needs an inert parameter"),
    };
    if a.len() != n as usize {
        return domain(format!("parameter has rank {}, operator has rank {n}", a.len()));
    }
    a.iter()
        .take((n / 2) as usize)
        .map(|x| {
            x.inv()
                .map(|xi| x.add(&xi))
                .ok_or_else(|| Error::Domain(format!("alpha entry {x:?} is not invertible")))
        })
        .collect()
}

/// `φ_α(e)`: the Satake image of `e` with `m_i ↦ α_i + α_i^{-1}`.
pub fn eval_phi<S: Scalar>(e: &HeckeElement, alpha: &SatakeParam<S>, q: &S) -> Result<S> {
    if q.inv().is_none() {
        return domain("q must be invertible in the evaluation ring");
    }
    let ms = m_values(alpha, e.n())?;
    satake_transform(e)?
        .eval(&ms, q, None)
        .ok_or_else(|| Error::Domain("evaluation needs an inverse that does not exist".into()))
}

/// Operators with a closed-form image at rank `N`.
pub fn closed_form_ops(n: u32) -> Vec<NamedOp> {
    if n.is_multiple_of(2) {
        vec![NamedOp::Icirc, NamedOp::RIcombo, NamedOp::RTcombo]
    } else {
        vec![NamedOp::Icirc, NamedOp::Tstar, NamedOp::TcircOdd]
    }
}

/// The closed-form value of `φ_α(op)` computed directly from `α`, or `None`
/// if the operator has no closed form at this rank.
pub fn closed_form<S: Scalar>(op: NamedOp, n: u32, alpha: &SatakeParam<S>, q: &S) -> Result<Option<S>> {
    let ms = m_values(alpha, n)?;
    let qi = q
        .inv()
        .ok_or_else(|| Error::Domain("q must be invertible in the evaluation ring".into()))?;
    let r = (n / 2) as i64;
    let pw = |e: i64| q.pow_i(e).expect("q is invertible");
    let prod = |shift: &S, skip: Option<usize>| {
        ms.iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .fold(q.one_like(), |acc, (_, m)| acc.mul(&m.add(shift)))
    };
    let q_sum = q.add(&qi);
    let even = n.is_multiple_of(2);
    Ok(match (op, even) {
        (NamedOp::Icirc, true) => Some(pw(r * r).mul(&prod(&q.int_like(2), None))),
        (NamedOp::RIcombo, true) => Some(pw(r * r).mul(&prod(&q_sum.neg(), None)).neg()),
        (NamedOp::RTcombo, true) => {
            let sum = (0..ms.len()).fold(q.zero_like(), |acc, j| acc.add(&prod(&q_sum.neg(), Some(j))));
            let factor = pw(r * r + 1).sub(&pw(r * r - 1));
            Some(factor.mul(&sum).neg())
        }
        (NamedOp::Icirc, false) => Some(pw(r * r + r).mul(&prod(&q_sum, None))),
        (NamedOp::Tstar | NamedOp::TcircOdd, false) => {
            Some(pw(r * r + r).mul(&prod(&q.int_like(-2), None)))
        }
        _ => None,
    })
}
