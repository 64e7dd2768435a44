//! One line per acceptance criterion. Each criterion runs the relevant
//! verification suite with its ranges pinned below, keeps the checks it owns,
//! and compares the wall time against its bound. All comparisons are exact.

use std::time::{Duration, Instant};

use heckelab::verify::{run_suite, Ranges, Status, Suite};

const SEED: u64 = 42;
const PRIME: u64 = 10007;

struct Criterion {
    number: u32,
    name: &'static str,
    suite: Suite,
    /// Check ids (without the suite prefix) this criterion owns.
    ids: &'static [&'static str],
    /// Exact number of owned checks expected with the pinned ranges.
    expected_checks: usize,
    bound: Duration,
    ranges: fn() -> Ranges,
}

fn base() -> Ranges {
    Ranges { prime: PRIME, ..Ranges::default() }
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            name: "q-identities k ≤ 10",
            suite: Suite::Qidentities,
            ids: &["gauss", "weighted", "signed", "odd_chain"],
            expected_checks: 40,
            bound: Duration::from_secs(5),
            ranges: || Ranges { k_max: 10, dbullet_r_max: 0, ..base() },
        },
        Criterion {
            number: 2,
            name: "characters N ≤ 8, λ-identities r ≤ 5",
            suite: Suite::Characters,
            ids: &["closed_vs_bruteforce", "lambda_even_sum", "lambda_even_derivative", "lambda_odd", "lambda_odd_binomial"],
            // Σ_{N=1..8} (⌊N/2⌋+1) = 24; 5 + 5 + 5 + 11 λ-checks.
            expected_checks: 24 + 26,
            bound: Duration::from_secs(30),
            ranges: || Ranges { char_n_max: 8, lambda_r_max: 5, ..base() },
        },
        Criterion {
            number: 3,
            name: "Satake identities r ≤ 4, forward check N ≤ 10",
            suite: Suite::Satake,
            ids: &["even1", "even2", "even4", "odd1", "odd2", "forward"],
            expected_checks: 5 * 4 + 10,
            bound: Duration::from_secs(60),
            ranges: || Ranges { r_max: 4, forward_n_max: 10, ..base() },
        },
        Criterion {
            number: 4,
            name: "closed forms at 100 α over F_10007 for N ≤ 16, symbolic r ≤ 4",
            suite: Suite::Evalprops,
            ids: &["closed_form_fp", "closed_form_symbolic"],
            // Three closed-form operators per rank; symbolic at N = 2r and 2r + 1.
            expected_checks: 16 * 3 + 4 * 2 * 3,
            bound: Duration::from_secs(60),
            ranges: || Ranges {
                eval_n_max: 16,
                eval_samples: 100,
                r_max: 4,
                predicate_samples: 0,
                tensor_samples: 0,
                ..base()
            },
        },
        Criterion {
            number: 5,
            name: "bullet counts (q, N) ∈ {2,3}², mixed counts N = 3",
            suite: Suite::Lattice,
            ids: &["bullet_census", "mixed_counts", "duality", "window_cross_check"],
            expected_checks: 4 + 2 + 4 + 1,
            bound: Duration::from_secs(300),
            ranges: || Ranges { q_max: 3, lattice_n_max: 3, ..base() },
        },
        Criterion {
            number: 6,
            name: "maximal isotropic and meeting counts q ∈ {2,3}, N ≤ 5",
            suite: Suite::Geometry,
            ids: &["max_isotropic"],
            expected_checks: 2 * 4,
            bound: Duration::from_secs(300),
            ranges: || Ranges { q_max: 3, geom_n_max: 5, ..base() },
        },
        Criterion {
            number: 7,
            name: "excess integrals and bridge r, d ≤ 8, p ∈ {2,3,5,7}",
            suite: Suite::Chow,
            ids: &["I1", "I2", "I3", "bridge"],
            expected_checks: 4 * (8 + 8 + 9 + 8),
            bound: Duration::from_secs(5),
            ranges: || Ranges { chow_max: 8, ..base() },
        },
        Criterion {
            number: 8,
            name: "d-number values and d• integrality r ≤ 10",
            suite: Suite::Qidentities,
            ids: &["d_number", "d_bullet_number", "d_bullet_integral"],
            expected_checks: 2 + 1 + 10,
            bound: Duration::from_secs(1),
            ranges: || Ranges { k_max: 0, dbullet_r_max: 10, ..base() },
        },
        Criterion {
            number: 9,
            name: "predicate coherence 500 per parity, tensor unitarity 100 pairs",
            suite: Suite::Evalprops,
            ids: &["predicates", "tensor_unitary"],
            expected_checks: 3,
            bound: Duration::from_secs(5),
            ranges: || Ranges {
                eval_n_max: 0,
                r_max: 0,
                predicate_samples: 500,
                tensor_samples: 100,
                ..base()
            },
        },
    ]
}

fn run_criterion(number: u32) {
    let c = criteria().into_iter().find(|c| c.number == number).expect("known criterion");
    let ranges = (c.ranges)();
    let start = Instant::now();
    let report = run_suite(c.suite, &ranges, SEED, false);
    let elapsed = start.elapsed();
    let prefix = format!("{}.", c.suite.name());
    let owned: Vec<_> = report
        .checks
        .iter()
        .filter(|k| k.id.strip_prefix(&prefix).is_some_and(|id| c.ids.contains(&id)))
        .collect();
    let mut problems = Vec::new();
    if owned.len() != c.expected_checks {
        problems.push(format!("{} checks, expected {}", owned.len(), c.expected_checks));
    }
    for k in owned.iter().filter(|k| k.status != Status::Pass) {
        problems.push(format!("{} {} {:?}: {}", k.id, k.params, k.status, k.witness));
    }
    if elapsed > c.bound {
        problems.push(format!("took {elapsed:?}, bound {:?}", c.bound));
    }
    let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "criterion {}: {verdict} | {} | {} checks, exact equality, {} ms (bound {} ms)",
        c.number,
        c.name,
        owned.len(),
        elapsed.as_millis(),
        c.bound.as_millis()
    );
    assert!(problems.is_empty(), "criterion {number} failed:\n{}", problems.join("\n"));
}

// Test names carry the verdict line in the default harness output; run with
// `--nocapture` for timings.
#[test]
fn criterion_1_q_identities() {
    run_criterion(1);
}

#[test]
fn criterion_2_characters() {
    run_criterion(2);
}

#[test]
fn criterion_3_satake() {
    run_criterion(3);
}

#[test]
fn criterion_4_evaluation() {
    run_criterion(4);
}

#[test]
fn criterion_5_lattice_window() {
    run_criterion(5);
}

#[test]
fn criterion_6_finite_geometry() {
    run_criterion(6);
}

#[test]
fn criterion_7_chow() {
    run_criterion(7);
}

#[test]
fn criterion_8_d_numbers() {
    run_criterion(8);
}

#[test]
fn criterion_9_predicate_coherence() {
    run_criterion(9);
}

#[test]
fn criteria_are_numbered_one_to_nine() {
    let numbers: Vec<u32> = criteria().iter().map(|c| c.number).collect();
    assert_eq!(numbers, (1..=9).collect::<Vec<_>>());
}

#[test]
fn reports_are_reproducible() {
    let r = Ranges { k_max: 3, r_max: 2, eval_n_max: 4, eval_samples: 10, predicate_samples: 20, ..base() };
    for suite in [Suite::Qidentities, Suite::Evalprops] {
        assert_eq!(run_suite(suite, &r, SEED, false).to_json(), run_suite(suite, &r, SEED, false).to_json());
    }
}
