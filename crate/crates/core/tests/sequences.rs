use catalan_core::{BigCount, Fruit, SeqEngine, SeqKind};
use proptest::prelude::*;

fn u64s(engine: &SeqEngine, kind: SeqKind, to: usize) -> Vec<u64> {
    engine
        .table(kind, 0, to)
        .unwrap()
        .into_iter()
        .map(|(_, v)| v.to_u64().unwrap())
        .collect()
}

#[test]
fn component_table() {
    let e = SeqEngine::new();
    assert_eq!(
        u64s(&e, SeqKind::A, 10),
        vec![0, 1, 3, 5, 9, 19, 48, 139, 437, 1439, 4872]
    );
}

#[test]
fn fruitful_tables() {
    let e = SeqEngine::new();
    assert_eq!(
        u64s(&e, SeqKind::AF, 10),
        vec![0, 2, 4, 9, 28, 123, 662, 3955, 25032, 164335, 1106794]
    );
    assert_eq!(
        u64s(&e, SeqKind::AT, 10),
        vec![0, 2, 6, 17, 70, 363, 2122, 13219, 85666, 570703, 3881638]
    );
}

#[test]
fn catalan_prefix() {
    let e = SeqEngine::new();
    assert_eq!(
        u64s(&e, SeqKind::C, 10),
        vec![0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    );
}

#[test]
fn recurrence_matches_binomial_formula() {
    let e = SeqEngine::new();
    for n in 1..=2000 {
        assert_eq!(e.catalan(n), e.catalan_explicit(n).unwrap(), "n = {n}");
    }
    for n in 2..=200 {
        assert_eq!(e.a_total(n), e.a_explicit(n).unwrap(), "n = {n}");
    }
}

#[test]
fn catalan_convolution() {
    let e = SeqEngine::new();
    for n in 2..=1000 {
        let conv: BigCount = (1..n).map(|i| &e.catalan(i) * &e.catalan(n - i)).sum();
        assert_eq!(conv, e.catalan(n), "n = {n}");
    }
}

#[test]
fn false_plus_true_is_total() {
    let e = SeqEngine::new();
    for n in 1..=1000 {
        assert_eq!(e.f_false(n) + e.t_true(n), e.g_total(n), "n = {n}");
    }
}

#[test]
fn triangle_rows_to_one_thousand() {
    let e = SeqEngine::new();
    e.f_false(1000);
    for n in 2..=1000 {
        let row = e.triangle_row(n).unwrap();
        assert_eq!(row.terms.len(), n - 1);
        assert_eq!(row.sum(), e.f_false(n), "n = {n}");
        for i in 1..n {
            let term = &row.terms[i - 1];
            assert_eq!(*term, &e.t_true(i) * &e.f_false(n - i), "T({n},{i})");
            assert_eq!(term.is_odd(), row.terms[n - i - 1].is_odd(), "T({n},{i}) parity");
        }
    }
}

#[test]
fn fruitful_totals_follow_formula_above_one() {
    let e = SeqEngine::new();
    for n in 2..=300 {
        let base = e.catalan(n) + BigCount::from(n);
        assert_eq!(e.fruitful_total(n, Fruit::F), e.f_false(n) + &base);
        assert_eq!(e.fruitful_total(n, Fruit::T), e.t_true(n) + &base);
        assert_eq!(e.a_total(n), base);
    }
}

#[test]
fn large_values_stay_exact() {
    let e = SeqEngine::new();
    // Past u64 range the decimal form must still round-trip.
    let v = e.f_false(40);
    assert!(v.to_u64().is_none());
    assert_eq!(v.to_string().parse::<BigCount>().unwrap(), v);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn memo_order_does_not_matter(a in 1usize..300, b in 1usize..300) {
        let forward = SeqEngine::new();
        let fa = forward.f_false(a);
        let fb = forward.f_false(b);
        let backward = SeqEngine::new();
        prop_assert_eq!(backward.f_false(b), fb);
        prop_assert_eq!(backward.f_false(a), fa);
    }

    #[test]
    fn table_is_pointwise(kind in prop::sample::select(SeqKind::ALL.to_vec()), from in 0usize..40, len in 0usize..40) {
        let e = SeqEngine::new();
        let rows = e.table(kind, from, from + len).unwrap();
        prop_assert_eq!(rows.len(), len + 1);
        for (n, v) in rows {
            prop_assert_eq!(v, e.value(kind, n));
        }
    }
}
