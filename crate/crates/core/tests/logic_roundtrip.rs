use betweenness::logic::{parse_formula, print_formula, Formula, Fresh, Vocabulary};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn voc() -> Vocabulary {
    Vocabulary::new()
        .with_relation("beta", 3)
        .and_then(|v| v.with_relation("H", 2))
        .and_then(|v| v.with_set("P"))
        .and_then(|v| v.with_set("Q"))
        .unwrap()
}

fn var() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["x", "y", "z", "u", "v1"]).prop_map(String::from)
}

fn leaf() -> impl Strategy<Value = Formula> {
    prop_oneof![
        (var(), var(), var()).prop_map(|(a, b, c)| Formula::rel("beta", &[&a, &b, &c])),
        (var(), var()).prop_map(|(a, b)| Formula::rel("H", &[&a, &b])),
        (prop::sample::select(vec!["P", "Q"]), var()).prop_map(|(s, a)| Formula::pred(s, &a)),
        var().prop_map(|a| Formula::member("X", &a)),
        (var(), var()).prop_map(|(a, b)| Formula::eq(&a, &b)),
    ]
}

fn formula() -> impl Strategy<Value = Formula> {
    let tree = leaf().prop_recursive(6, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.or(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.implies(b)),
            (var(), inner.clone()).prop_map(|(v, f)| Formula::exists(&v, f)),
            (var(), inner.clone()).prop_map(|(v, f)| Formula::forall(&v, f)),
            (any::<bool>(), inner.clone()).prop_map(|(w, f)| Formula::exists_set("Y", w, f)),
            (any::<bool>(), inner).prop_map(|(w, f)| Formula::forall_set("X", w, f)),
        ]
    });
    (any::<bool>(), tree).prop_map(|(w, f)| Formula::exists_set("X", w, f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn parse_inverts_print(f in formula()) {
        let text = print_formula(&f);
        let back = parse_formula(&text, &voc()).map_err(|e| TestCaseError::fail(format!("{e} in {text}")))?;
        prop_assert_eq!(back, f);
    }

    #[test]
    fn renaming_to_fresh_variable_is_exact(f in formula(), from in var()) {
        let mut fresh = Fresh::avoiding([&f]);
        let target = fresh.var();
        let map = BTreeMap::from([(from.clone(), target.clone())]);
        let g = f.substitute(&map, &mut fresh);
        let mut want = f.free_variables().fo;
        if want.remove(&from) {
            want.insert(target);
        }
        prop_assert_eq!(g.free_variables().fo, want);
        prop_assert_eq!(g.free_variables().sets, f.free_variables().sets);
    }

    #[test]
    fn substitution_into_bound_names_never_captures(f in formula(), from in var(), to in var()) {
        let mut fresh = Fresh::avoiding([&f]);
        let g = f.substitute_one(&from, &to, &mut fresh);
        let mut want = f.free_variables().fo;
        if want.remove(&from) {
            want.insert(to.clone());
        }
        prop_assert_eq!(g.free_variables().fo, want);
    }
}
