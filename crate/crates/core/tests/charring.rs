use heckelab::charring::{
    character, character_bruteforce, character_in_s_basis, check_lambda_identity, to_elementary_basis,
    InversionLaurent, LambdaIdentity, SymLaurent,
};
use heckelab::qcalc::LaurentPoly;
use proptest::prelude::*;

#[test]
fn closed_form_matches_subset_oracle() {
    for n in 1..=8u32 {
        for d in 0..=n / 2 {
            assert_eq!(character(n, d).unwrap(), character_bruteforce(n, d).unwrap(), "N={n} δ={d}");
        }
    }
}

#[test]
fn characters_are_symmetric_and_in_s_span() {
    for n in 1..=8u32 {
        let r = (n / 2) as usize;
        for d in 0..=n / 2 {
            let c = character(n, d).unwrap();
            assert!(c.is_symmetric());
            let basis = to_elementary_basis(&c).unwrap();
            // Each term is linear in a single s_j, with the closed-form binomial.
            let expected = character_in_s_basis(n, d).unwrap();
            for (b, coeff) in &basis {
                let deg: u32 = b.iter().sum();
                assert!(deg <= 1);
                let j = b.iter().position(|&x| x == 1).map_or(0, |p| p + 1);
                assert_eq!(coeff.as_constant().unwrap(), expected[&j]);
            }
            assert_eq!(basis.len(), expected.values().filter(|v| **v != 0.into()).count());
            assert_eq!(c.rank(), r);
        }
    }
}

#[test]
fn lambda_identities_vanish() {
    for r in 1..=5u32 {
        for w in [LambdaIdentity::EvenSum, LambdaIdentity::EvenDerivative] {
            assert!(check_lambda_identity(2 * r, w).unwrap().is_zero(), "{w:?} r={r}");
        }
        assert!(check_lambda_identity(2 * r + 1, LambdaIdentity::Odd).unwrap().is_zero());
    }
    for k in 0..=8 {
        assert!(check_lambda_identity(k, LambdaIdentity::OddBinomial).unwrap().is_zero());
    }
}

fn arb_sym(rank: usize) -> impl Strategy<Value = SymLaurent> {
    proptest::collection::vec(
        (proptest::collection::vec(0u32..3, rank), -2i64..3, -3i64..4),
        0..6,
    )
    .prop_map(move |terms| {
        terms.into_iter().fold(SymLaurent::zero(rank), |acc, (e, qe, c)| {
            &acc + &SymLaurent::monomial(rank, e, 0, LaurentPoly::monomial(qe, c))
        })
    })
}

proptest! {
    #[test]
    fn chebyshev_rewrite_is_idempotent(s in arb_sym(3)) {
        let expanded = InversionLaurent::from_sym(&s).unwrap();
        prop_assert_eq!(expanded.to_sym().unwrap(), s);
    }

    #[test]
    fn symmetrized_elements_pass_the_orbit_check(s in arb_sym(3)) {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let sym = perms.iter().fold(SymLaurent::zero(3), |acc, p| &acc + &s.permute(p));
        prop_assert!(sym.is_symmetric());
        let back = heckelab::charring::from_elementary_basis(3, &to_elementary_basis(&sym).unwrap()).unwrap();
        prop_assert_eq!(back, sym);
    }
}
