//! Named verification suites. Every check records a status and, on
//! failure, a witness (the nonzero discrepancy or the mismatched counts);
//! a failing check never stops the suite.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::charring::{
    character, character_bruteforce, check_lambda_identity, InversionLaurent, LambdaIdentity,
    SymLaurent,
};
use crate::chow::{check_excess_integral, ExcessIntegral};
use crate::error::{Error, Result};
use crate::finitegeom::{
    bullet_count_census, count_bullet_between_in, dl_bullet_points, dl_expected_dimension,
    dl_points, enumerate_window, gamma, max_isotropic_closed_form, meeting_closed_form,
    mixed_closed_form, mixed_counts_for, prime_power, HermSpace, SemilinearPair, Window,
};
use crate::hecke::{
    closed_form, closed_form_ops, forward_check, named_operator, random_inert,
    random_inert_with_specials, satake_condition, satake_transform, satisfies_functional_equation,
    semantic_condition, verify_satake_identity, Flavor, HeckeElement, NamedOp, SatakeCondition,
    SatakeIdentity, SatakeParam,
};
use crate::qcalc::{
    check_q_identity, d_bridge_term, d_bullet_number, d_number, LaurentPoly, QIdentity,
};
use crate::scalar::{is_prime, Fp, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Qidentities,
    Characters,
    Satake,
    Evalprops,
    Lattice,
    Geometry,
    Chow,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 7] = [
        Suite::Qidentities,
        Suite::Characters,
        Suite::Satake,
        Suite::Evalprops,
        Suite::Lattice,
        Suite::Geometry,
        Suite::Chow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qidentities => "qidentities",
            Suite::Characters => "characters",
            Suite::Satake => "satake",
            Suite::Evalprops => "evalprops",
            Suite::Lattice => "lattice",
            Suite::Geometry => "geometry",
            Suite::Chow => "chow",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Parameter ranges for the suites. Defaults cover the full acceptance ranges.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Ranges {
    /// Largest `k` for the q-binomial identities.
    pub k_max: u32,
    /// Largest rank `r` for Satake identities and symbolic evaluation.
    pub r_max: u32,
    /// Largest `r` for the λ-identities.
    pub lambda_r_max: u32,
    /// Largest `N` for the character oracle comparison.
    pub char_n_max: u32,
    /// Largest `N` for the forward Satake check.
    pub forward_n_max: u32,
    /// Largest `N` for random evaluations over `F_p`.
    pub eval_n_max: u32,
    /// Random parameters per `(N, operator)`.
    pub eval_samples: u32,
    /// Random parameters per parity for the predicate comparison.
    pub predicate_samples: u32,
    /// Random pairs for the tensor check.
    pub tensor_samples: u32,
    /// Prime for the finite-field evaluations.
    pub prime: u64,
    /// Largest residue characteristic `q` for the geometry and lattice suites.
    pub q_max: u32,
    /// Largest `N` for isotropic counts.
    pub geom_n_max: u32,
    /// Largest `N` for lattice windows.
    pub lattice_n_max: u32,
    /// Largest `r` (and `d`) for the Chow integrals.
    pub chow_max: u32,
    /// Largest `r` for the integrality of `d•`.
    pub dbullet_r_max: u32,
}

impl Default for Ranges {
    fn default() -> Self {
        Ranges {
            k_max: 10,
            r_max: 4,
            lambda_r_max: 5,
            char_n_max: 8,
            forward_n_max: 10,
            eval_n_max: 16,
            eval_samples: 100,
            predicate_samples: 500,
            tensor_samples: 100,
            prime: 10007,
            q_max: 3,
            geom_n_max: 5,
            lattice_n_max: 3,
            chow_max: 8,
            dbullet_r_max: 10,
        }
    }
}

impl Ranges {
    /// Caps every `N`-indexed range at `n`.
    pub fn cap_n(&mut self, n: u32) {
        for v in [
            &mut self.char_n_max,
            &mut self.forward_n_max,
            &mut self.eval_n_max,
            &mut self.geom_n_max,
            &mut self.lattice_n_max,
        ] {
            *v = (*v).min(n);
        }
    }

    /// Sets `r_max` and the λ-identity range together.
    pub fn set_r_max(&mut self, r: u32) {
        self.r_max = r;
        self.lambda_r_max = r;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub params: Value,
    pub status: Status,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    /// True iff no check failed (skipped checks do not fail the suite).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Outcome of one check body: `Ok(None)` passes, `Ok(Some(w))` fails with
/// witness `w`, a resource error skips and any other error fails.
type Outcome = Result<Option<String>>;

struct Recorder {
    suite: Suite,
    seed: u64,
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn check(&mut self, id: &str, params: Value, body: impl FnOnce() -> Outcome) {
        let (status, witness) = match body() {
            Ok(None) => (Status::Pass, String::new()),
            Ok(Some(w)) => (Status::Fail, w),
            Err(Error::Resource(m)) => (Status::Skipped, m),
            Err(e) => (Status::Fail, e.to_string()),
        };
        log::debug!("{}.{id} {params} {status:?}", self.suite);
        self.checks.push(CheckResult {
            id: format!("{}.{id}", self.suite),
            params,
            status,
            witness,
        });
    }

    /// A generator seeded from the run seed and the check identity only.
    fn rng(&self, id: &str, salt: u64) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in self.suite.name().bytes().chain(id.bytes()) {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

fn zero_or(p: &LaurentPoly) -> Option<String> {
    (!p.is_zero()).then(|| p.to_unicode())
}

fn sym_zero_or(s: &SymLaurent) -> Option<String> {
    (!s.is_zero()).then(|| s.to_string())
}

fn mismatch<T: PartialEq + fmt::Display>(got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("got {got}, expected {want}"))
}

/// Runs one suite (or all of them) and returns the report. The report is a
/// pure function of the suite, ranges and seed except for `elapsed_ms`,
/// which is zero unless `timing` is set.
pub fn run_suite(suite: Suite, ranges: &Ranges, seed: u64, timing: bool) -> SuiteReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::CONCRETE.to_vec() } else { vec![suite] };
    for s in suites {
        let mut rec = Recorder { suite: s, seed, checks: Vec::new() };
        log::info!("running suite {s}");
        match s {
            Suite::Qidentities => qidentities(&mut rec, ranges),
            Suite::Characters => characters(&mut rec, ranges),
            Suite::Satake => satake(&mut rec, ranges),
            Suite::Evalprops => evalprops(&mut rec, ranges),
            Suite::Lattice => lattice(&mut rec, ranges),
            Suite::Geometry => geometry(&mut rec, ranges),
            Suite::Chow => chow(&mut rec, ranges),
            Suite::All => unreachable!("expanded above"),
        }
        checks.extend(rec.checks);
    }
    SuiteReport {
        suite: suite.name().to_string(),
        seed,
        checks,
        elapsed_ms: if timing { start.elapsed().as_millis() as u64 } else { 0 },
    }
}

fn qidentities(rec: &mut Recorder, r: &Ranges) {
    for which in QIdentity::ALL {
        for k in 1..=r.k_max {
            rec.check(which.name(), json!({ "k": k }), || {
                Ok(zero_or(&check_q_identity(which, k)?))
            });
        }
    }
    rec.check("d_number", json!({ "r": 0 }), || Ok(mismatch(d_number(0), LaurentPoly::one())));
    rec.check("d_number", json!({ "r": 1 }), || {
        let want = LaurentPoly::from_terms([(2, -2), (1, -1), (0, 1)]);
        Ok(mismatch(d_number(1), want))
    });
    rec.check("d_bullet_number", json!({ "r": 1 }), || {
        Ok(mismatch(d_bullet_number(1)?, LaurentPoly::monomial(1, -1)))
    });
    for rr in 1..=r.dbullet_r_max {
        rec.check("d_bullet_integral", json!({ "r": rr }), || {
            // div_exact inside d_bullet_number errors on a remainder.
            let db = d_bullet_number(rr)?;
            let back = &(&db * &LaurentPoly::from_terms([(1, 1), (0, 1)])) - &d_number(rr);
            Ok(mismatch(back, d_bridge_term(rr)?))
        });
    }
}

fn characters(rec: &mut Recorder, r: &Ranges) {
    for n in 1..=r.char_n_max {
        for delta in 0..=n / 2 {
            rec.check("closed_vs_bruteforce", json!({ "N": n, "delta": delta }), || {
                let a = character(n, delta)?;
                let b = character_bruteforce(n, delta)?;
                Ok(sym_zero_or(&(&a - &b)))
            });
        }
    }
    for which in LambdaIdentity::ALL {
        // Arguments: N = 2r or 2r+1 for the ring identities, k ≤ 2r_max for the binomial one.
        let args: Vec<u32> = match which {
            LambdaIdentity::EvenSum | LambdaIdentity::EvenDerivative => (1..=r.lambda_r_max).map(|x| 2 * x).collect(),
            LambdaIdentity::Odd => (1..=r.lambda_r_max).map(|x| 2 * x + 1).collect(),
            LambdaIdentity::OddBinomial => (0..=2 * r.lambda_r_max).collect(),
        };
        for n in args {
            rec.check(&format!("lambda_{}", which.name()), json!({ "n": n }), || {
                Ok(sym_zero_or(&check_lambda_identity(n, which)?))
            });
        }
    }
}

fn satake(rec: &mut Recorder, r: &Ranges) {
    for which in SatakeIdentity::ALL {
        for rr in 1..=r.r_max {
            rec.check(which.name(), json!({ "r": rr }), || {
                Ok(sym_zero_or(&verify_satake_identity(which, rr)?))
            });
        }
    }
    for n in 1..=r.forward_n_max {
        rec.check("forward", json!({ "N": n }), || {
            let res = forward_check(n)?;
            Ok(res.iter().position(|s| !s.is_zero()).map(|d| format!("δ={d}: {}", res[d])))
        });
        rec.check("unit", json!({ "N": n }), || {
            let s = satake_transform(&HeckeElement::unit(n, Flavor::Circ))?;
            Ok(mismatch(s, SymLaurent::one((n / 2) as usize)))
        });
    }
}

fn m_values(alpha: &SatakeParam<Fp>) -> Vec<Fp> {
    let a = alpha.alphas();
    a.iter().take(a.len() / 2).map(|x| x.add(&x.inv().expect("nonzero"))).collect()
}

fn random_unit<R: Rng>(p: u64, rng: &mut R) -> Fp {
    Fp::new(rng.gen_range(2..p - 1) as i64, p)
}

fn evalprops(rec: &mut Recorder, r: &Ranges) {
    let p = r.prime;
    if !is_prime(p) || p < 5 {
        rec.check("prime", json!({ "p": p }), || Ok(Some(format!("{p} is not a usable prime"))));
        return;
    }
    for n in 1..=r.eval_n_max {
        for op in closed_form_ops(n) {
            let id = "closed_form_fp";
            let mut rng = rec.rng(id, (n as u64) << 8 | op as u64);
            rec.check(id, json!({ "N": n, "op": op.name(), "samples": r.eval_samples, "p": p }), || {
                let image = satake_transform(&named_operator(op, n)?)?;
                for i in 0..r.eval_samples {
                    let alpha = random_inert(n as usize, p, &mut rng);
                    let q = random_unit(p, &mut rng);
                    let lhs = image.eval(&m_values(&alpha), &q, None);
                    let rhs = closed_form(op, n, &alpha, &q)?;
                    if lhs != rhs {
                        return Ok(Some(format!(
                            "sample {i}: q={}, alpha={:?}: {lhs:?} vs {rhs:?}",
                            q.value(),
                            alpha.alphas().iter().map(Fp::value).collect::<Vec<_>>()
                        )));
                    }
                }
                Ok(None)
            });
        }
    }
    for rr in 1..=r.r_max {
        for n in [2 * rr, 2 * rr + 1] {
            for op in closed_form_ops(n) {
                rec.check("closed_form_symbolic", json!({ "N": n, "op": op.name() }), || {
                    let k = rr as usize;
                    let half: Vec<InversionLaurent> = (1..=k).map(|i| InversionLaurent::y(k, i)).collect();
                    let ctx = InversionLaurent::one(k);
                    let alpha = SatakeParam::inert_from_half(&ctx, &half, n as usize)?;
                    let q = InversionLaurent::constant(k, LaurentPoly::q());
                    let lhs = crate::hecke::eval_phi(&named_operator(op, n)?, &alpha, &q)?;
                    let rhs = closed_form(op, n, &alpha, &q)?.expect("operator has a closed form");
                    Ok(mismatch(lhs.to_sym()?, rhs.to_sym()?))
                });
            }
        }
    }
    for even in [false, true] {
        let id = "predicates";
        let mut rng = rec.rng(id, even as u64);
        let parity = if even { "even" } else { "odd" };
        rec.check(id, json!({ "parity": parity, "samples": r.predicate_samples, "p": p }), || {
            for i in 0..r.predicate_samples {
                let n = 2 * rng.gen_range(1..=3usize) - usize::from(!even);
                let qv = loop {
                    let c = random_unit(p, &mut rng);
                    if c.mul(&c) != Fp::new(1, p) {
                        break c;
                    }
                };
                let one = Fp::new(1, p);
                let qi = qv.inv().expect("unit");
                let specials = [one, one.neg(), qv, qi, qv.neg(), qi.neg()];
                let alpha = random_inert_with_specials(n, p, &mut rng, &specials, 0.4);
                let poly = alpha.char_poly()?;
                for w in SatakeCondition::ALL.into_iter().filter(|w| w.applies_to(n)) {
                    let a = satake_condition(&poly, &qv, w)?;
                    let b = semantic_condition(&alpha, &qv, w)?;
                    if a != b {
                        return Ok(Some(format!("sample {i}: {} disagrees at N={n}", w.name())));
                    }
                }
            }
            Ok(None)
        });
    }
    let id = "tensor_unitary";
    let mut rng = rec.rng(id, 0);
    rec.check(id, json!({ "samples": r.tensor_samples, "p": p }), || {
        for i in 0..r.tensor_samples {
            let a = random_inert(rng.gen_range(1..=4), p, &mut rng);
            let b = random_inert(rng.gen_range(1..=4), p, &mut rng);
            let t = a.tensor(&b)?;
            if !t.is_unitary() || !satisfies_functional_equation(&t.char_poly()?) {
                return Ok(Some(format!("pair {i} loses unitarity")));
            }
        }
        Ok(None)
    });
}

fn q_values(q_max: u32) -> Vec<u32> {
    (2..=q_max).filter(|&q| prime_power(q).is_some()).collect()
}

fn lattice(rec: &mut Recorder, r: &Ranges) {
    for q in q_values(r.q_max) {
        for n in 2..=r.lattice_n_max {
            rec.check("bullet_census", json!({ "q": q, "N": n }), || {
                let op = named_operator(NamedOp::Icirc, n)?;
                let census = bullet_count_census(q, n as usize)?;
                for (delta, count) in census {
                    let want = op.coeff(delta as u32).eval_integer(&BigInt::from(q)).expect("polynomial");
                    if BigInt::from(count) != want {
                        return Ok(Some(format!("δ={delta}: {count} bullets, expected {want}")));
                    }
                }
                Ok(None)
            });
            rec.check("duality", json!({ "q": q, "N": n }), || {
                let win = Window::new(q, n as usize, 2)?;
                for l in enumerate_window(q, n as usize)? {
                    if win.dual(&win.dual(&l)) != l {
                        return Ok(Some(format!("dual is not an involution on {:?}", l.rows())));
                    }
                }
                Ok(None)
            });
        }
        if r.lattice_n_max >= 3 {
            rec.check("mixed_counts", json!({ "q": q, "N": 3 }), || {
                let win = Window::new(q, 3, 2)?;
                for l in enumerate_window(q, 3)? {
                    if !win.is_circ(&l) {
                        continue;
                    }
                    let Some(g) = gamma(&l) else {
                        return Ok(Some("(L + Λ•)/Λ• not killed by ϖ".into()));
                    };
                    for delta in 0..=1 {
                        let (cb, cc) = mixed_counts_for(&l, delta)?;
                        let (eb, ec) = mixed_closed_form(q, 1, delta, g)?;
                        if (BigInt::from(cb), BigInt::from(cc)) != (eb.clone(), ec.clone()) {
                            return Ok(Some(format!("δ={delta} γ={g}: ({cb}, {cc}) vs ({eb}, {ec})")));
                        }
                    }
                }
                Ok(None)
            });
        }
    }
    rec.check("window_cross_check", json!({ "q": 2, "N": 2, "m": [4, 6] }), || {
        let win = Window::new(2, 2, 2)?;
        let base = win.standard_circ();
        for l in enumerate_window(2, 2)? {
            if win.is_circ(&l) {
                let a = count_bullet_between_in(&base, &l, 4)?;
                let b = count_bullet_between_in(&base, &l, 6)?;
                if a != b {
                    return Ok(Some(format!("{a} bullets at m=4, {b} at m=6")));
                }
            }
        }
        Ok(None)
    });
}

fn geometry(rec: &mut Recorder, r: &Ranges) {
    for q in q_values(r.q_max) {
        for n in 2..=r.geom_n_max as usize {
            rec.check("max_isotropic", json!({ "q": q, "N": n }), || {
                let hist = HermSpace::new(q, n)?.meeting_histogram()?;
                let total: u64 = hist.iter().sum();
                if let Some(w) = mismatch(BigInt::from(total), max_isotropic_closed_form(q, n)) {
                    return Ok(Some(w));
                }
                for (s, &c) in hist.iter().enumerate() {
                    if let Some(w) = mismatch(BigInt::from(c), meeting_closed_form(q, n, s)?) {
                        return Ok(Some(format!("s={s}: {w}")));
                    }
                }
                Ok(None)
            });
        }
        for n in 1..=3usize {
            for d in 0..=n {
                rec.check("dl_emptiness", json!({ "q": q, "N": n, "d": d }), || {
                    let pair = SemilinearPair::new(q, n, d)?;
                    for h in 0..=n {
                        let c = dl_points(&pair, h, 1)?;
                        if (c == 0) != dl_expected_dimension(n, d, h).is_none() {
                            return Ok(Some(format!("h={h}: {c} points")));
                        }
                    }
                    let b = dl_bullet_points(&pair, 1)?;
                    if d >= n.div_ceil(2) && b != 0 {
                        return Ok(Some(format!("DL• has {b} points with d={d}")));
                    }
                    Ok(None)
                });
            }
        }
    }
    rec.check("dl_bullet_baseline", json!({ "q": 2, "N": 2 }), || {
        let pair = SemilinearPair::nondegenerate(2, 2)?;
        let (e1, e2) = (dl_bullet_points(&pair, 1)?, dl_bullet_points(&pair, 2)?);
        Ok(mismatch(e1, 5).or(mismatch(e2, 17)))
    });
}

fn chow(rec: &mut Recorder, r: &Ranges) {
    for p in [2i64, 3, 5, 7] {
        for which in ExcessIntegral::ALL {
            let range = if which == ExcessIntegral::I3 { 0..=r.chow_max } else { 1..=r.chow_max };
            for n in range {
                rec.check(which.name(), json!({ "n": n, "p": p }), || {
                    let (c, e) = check_excess_integral(which, n, p)?;
                    Ok(mismatch(c, e))
                });
            }
        }
        for rr in 1..=r.chow_max {
            rec.check("bridge", json!({ "r": rr, "p": p }), || {
                let pb = BigInt::from(p);
                let (i1, _) = check_excess_integral(ExcessIntegral::I1, rr, p)?;
                let (i2, _) = check_excess_integral(ExcessIntegral::I2, rr, p)?;
                let prod: BigInt = (1..=rr).map(|i| pb.pow(2 * i - 1) + 1).product();
                let via_chow = (&pb * i2 - i1) * prod;
                let bridge = d_bridge_term(rr)?.eval_integer(&pb).expect("polynomial");
                let direct = (&(&d_bullet_number(rr)? * &LaurentPoly::from_terms([(1, 1), (0, 1)])) - &d_number(rr))
                    .eval_integer(&pb)
                    .expect("polynomial");
                Ok(mismatch(via_chow.clone(), bridge.clone()).or(mismatch(direct, bridge)))
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Ranges {
        Ranges {
            k_max: 3,
            r_max: 2,
            lambda_r_max: 2,
            char_n_max: 4,
            forward_n_max: 4,
            eval_n_max: 5,
            eval_samples: 5,
            predicate_samples: 20,
            tensor_samples: 5,
            q_max: 2,
            geom_n_max: 3,
            lattice_n_max: 2,
            chow_max: 3,
            dbullet_r_max: 3,
            ..Ranges::default()
        }
    }

    #[test]
    fn small_suites_pass_and_are_deterministic() {
        let a = run_suite(Suite::All, &small(), 42, false);
        assert!(a.passed(), "{:?}", a.failures().collect::<Vec<_>>());
        let b = run_suite(Suite::All, &small(), 42, false);
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.checks.iter().any(|c| c.id.starts_with("chow.")));
    }

    #[test]
    fn failures_are_recorded_not_raised() {
        let mut rec = Recorder { suite: Suite::Chow, seed: 0, checks: Vec::new() };
        rec.check("x", json!({}), || Ok(Some("witness".into())));
        rec.check("y", json!({}), || Err(Error::Resource("too big".into())));
        rec.check("z", json!({}), || Err(Error::Domain("bad".into())));
        let st: Vec<Status> = rec.checks.iter().map(|c| c.status).collect();
        assert_eq!(st, [Status::Fail, Status::Skipped, Status::Fail]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::CONCRETE.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
