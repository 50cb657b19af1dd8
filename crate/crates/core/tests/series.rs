use catalan_core::series::{
    catalan_gf, compare_with_sequence, expand_a_closed_form, naturals_gf, series_add, series_div, series_mul,
    series_sub, sqrt_one_minus_4x, Series,
};
use catalan_core::{SeqEngine, SeqKind};
use num_bigint::BigInt;
use proptest::prelude::*;

const K: usize = 512;

#[test]
fn sqrt_squares_back() {
    let s = sqrt_one_minus_4x(K);
    assert!(s.integer_coeffs().is_ok());
    assert_eq!(series_mul(&s, &s).unwrap(), Series::polynomial(&[1, -4], K));
}

#[test]
fn closed_form_identity_to_512() {
    let closed = expand_a_closed_form(K).unwrap();
    let identity = series_sub(
        &series_add(&catalan_gf(K), &naturals_gf(K)).unwrap(),
        &Series::polynomial(&[0, 1], K),
    )
    .unwrap();
    assert_eq!(closed, identity);
    let engine = SeqEngine::new();
    let verdicts = compare_with_sequence(&closed, SeqKind::A, &engine);
    assert_eq!(verdicts.len(), K + 1);
    assert!(verdicts.iter().all(|&(_, ok)| ok));
}

#[test]
fn sqrt_coefficients_are_minus_two_catalan() {
    // sqrt(1 - 4x) = 1 - 2 sum C_n x^n under C_1 = 1 indexing.
    let engine = SeqEngine::new();
    let s = sqrt_one_minus_4x(60).integer_coeffs().unwrap();
    for (k, c) in s.iter().enumerate().skip(1) {
        let catalan = BigInt::from(engine.catalan(k).into_inner());
        assert_eq!(*c, -2 * catalan, "k = {k}");
    }
}

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..20, 1..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_inverts_multiplication(a in small_poly(), mut b in small_poly(), order in 1usize..12) {
        if b[0] == 0 {
            b[0] = 1;
        }
        let a = Series::polynomial(&a, order);
        let b = Series::polynomial(&b, order);
        let q = series_div(&a, &b).unwrap();
        prop_assert_eq!(series_mul(&q, &b).unwrap(), a);
    }

    #[test]
    fn multiplication_commutes(a in small_poly(), b in small_poly(), order in 0usize..12) {
        let a = Series::polynomial(&a, order);
        let b = Series::polynomial(&b, order);
        prop_assert_eq!(series_mul(&a, &b).unwrap(), series_mul(&b, &a).unwrap());
        prop_assert_eq!(series_mul(&a, &b).unwrap().order(), order);
    }
}
