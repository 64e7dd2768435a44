use heckelab::finitegeom::*;
use heckelab::hecke::{named_operator, NamedOp};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn maximal_isotropic_counts_match_closed_form() {
    for q in [2, 3] {
        for n in 2..=5 {
            let got = count_max_isotropic(q, n).unwrap();
            assert_eq!(BigInt::from(got), max_isotropic_closed_form(q, n), "q={q} N={n}");
        }
    }
}

#[test]
fn meeting_counts_partition_and_match() {
    for q in [2, 3] {
        for n in 2..=5 {
            let space = HermSpace::new(q, n).unwrap();
            let hist = space.meeting_histogram().unwrap();
            assert_eq!(hist.iter().sum::<u64>(), count_max_isotropic(q, n).unwrap());
            for (s, &c) in hist.iter().enumerate() {
                assert_eq!(BigInt::from(c), meeting_closed_form(q, n, s).unwrap(), "q={q} N={n} s={s}");
            }
        }
    }
}

#[test]
fn isotropic_enumeration_is_canonical() {
    let space = HermSpace::new(2, 4).unwrap();
    let subs = space.enumerate_isotropic(2).unwrap();
    let mut sorted = subs.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), subs.len());
    assert_eq!(subs.len() as u64, count_max_isotropic(2, 4).unwrap());
    for s in &subs {
        for a in s {
            for b in s {
                assert_eq!(space.form(a, b), 0);
            }
        }
    }
}

#[test]
fn duality_is_an_inclusion_reversing_involution() {
    for q in [2, 3] {
        for n in 1..=3 {
            let win = Window::new(q, n, 2).unwrap();
            let all = enumerate_window(q, n).unwrap();
            for l in &all {
                let d = win.dual(l);
                assert_eq!(&win.dual(&d), l);
                assert_eq!(win.length(l) + win.length(&d), 2 * n);
                let smaller = win.pi_mul(l);
                assert!(win.contains(&win.dual(&smaller), &d));
            }
            // Pairs along a fixed stride exercise inclusion in both directions.
            for (i, a) in all.iter().enumerate().step_by(7) {
                let b = &all[(i * 31 + 5) % all.len()];
                let meet = win.intersect(a, b);
                assert!(win.contains(a, &meet) && win.contains(b, &meet));
                assert!(win.contains(&win.dual(&meet), &win.dual(a)));
                if win.contains(a, b) {
                    assert!(win.contains(&win.dual(b), &win.dual(a)));
                }
            }
        }
    }
}

#[test]
fn window_contains_standard_lattices() {
    for q in [2, 3] {
        for n in 1..=3 {
            let win = Window::new(q, n, 2).unwrap();
            let all = enumerate_window(q, n).unwrap();
            assert!(all.binary_search(&win.standard_circ()).is_ok());
            assert!(all.binary_search(&win.standard_bullet()).is_ok());
        }
    }
}

#[test]
fn lengths_agree_with_smith_form() {
    let win = Window::new(2, 3, 2).unwrap();
    for l in enumerate_window(2, 3).unwrap().iter().step_by(13) {
        assert_eq!(win.length(l), win.ring().snf_length(l.rows(), 3));
    }
}

#[test]
fn bullet_census_reproduces_identity_coefficients() {
    for q in [2, 3] {
        for n in [2usize, 3] {
            let op = named_operator(NamedOp::Icirc, n as u32).unwrap();
            let census = bullet_count_census(q, n).unwrap();
            assert!(!census.is_empty());
            for (delta, count) in census {
                let want = op.coeff(delta as u32).eval_integer(&BigInt::from(q)).unwrap();
                assert_eq!(BigInt::from(count), want, "q={q} N={n} δ={delta}");
            }
        }
    }
}

#[test]
fn wider_working_window_gives_same_counts() {
    for n in [2, 3] {
        let win = Window::new(2, n, 2).unwrap();
        let base = win.standard_circ();
        for l in enumerate_window(2, n).unwrap() {
            if win.is_circ(&l) {
                assert_eq!(
                    count_bullet_between_in(&base, &l, 4).unwrap(),
                    count_bullet_between_in(&base, &l, 6).unwrap()
                );
            }
        }
    }
}

#[test]
fn mixed_counts_match_closed_forms_on_every_circ_lattice() {
    for q in [2, 3] {
        let win = Window::new(q, 3, 2).unwrap();
        let mut seen_gamma = [false; 2];
        for l in enumerate_window(q, 3).unwrap() {
            if !win.is_circ(&l) {
                continue;
            }
            let g = gamma(&l).expect("(L + Λ•)/Λ• is killed by ϖ");
            seen_gamma[g] = true;
            for delta in 0..=1 {
                let (cb, cc) = mixed_counts_for(&l, delta).unwrap();
                let (eb, ec) = mixed_closed_form(q, 1, delta, g).unwrap();
                assert_eq!((BigInt::from(cb), BigInt::from(cc)), (eb, ec), "q={q} δ={delta} γ={g}");
            }
        }
        assert_eq!(seen_gamma, [true, true]);
    }
}

#[test]
fn dl_counts_regression_and_emptiness() {
    let p = SemilinearPair::nondegenerate(2, 3).unwrap();
    // Exhaustive baselines (not closed forms).
    assert_eq!(dl_points(&p, 2, 1).unwrap(), 9);
    assert_eq!(dl_points(&p, 3, 1).unwrap(), 1);
    for q in [2, 3] {
        for n in 1..=4 {
            for d in 0..=n {
                let p = SemilinearPair::new(q, n, d).unwrap();
                for h in 0..=n {
                    let c = dl_points(&p, h, 1).unwrap();
                    if dl_expected_dimension(n, d, h).is_none() {
                        assert_eq!(c, 0, "q={q} N={n} d={d} h={h}");
                    } else {
                        assert!(c > 0, "q={q} N={n} d={d} h={h}");
                    }
                }
                if d >= n.div_ceil(2) {
                    assert_eq!(dl_bullet_points(&p, 1).unwrap(), 0);
                }
            }
        }
    }
}

#[test]
fn dl_bullet_dimension_from_counts() {
    for n in 2..=3 {
        let d = n % 2;
        let p = SemilinearPair::new(2, n, d).unwrap();
        let c1 = dl_bullet_points(&p, 1).unwrap();
        let c2 = dl_bullet_points(&p, 2).unwrap();
        let est = dimension_estimate(2, c1, c2).unwrap();
        assert_eq!(est.round() as usize, n / 2, "N={n}: {c1} {c2} {est}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sum_and_intersection_bracket(i in 0usize..1179, j in 0usize..1179) {
        let all = enumerate_window(2, 3).unwrap();
        let win = Window::new(2, 3, 2).unwrap();
        let (a, b) = (&all[i], &all[j]);
        let s = win.sum(a, b);
        let m = win.intersect(a, b);
        prop_assert_eq!(win.length(&s) + win.length(&m), win.length(a) + win.length(b));
        prop_assert_eq!(win.dual(&s), win.intersect(&win.dual(a), &win.dual(b)));
    }
}
