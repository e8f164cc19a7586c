//! Algebraic laws of the syntax, printer, reducer and checker.

mod common;

use cdle::erasure::erase;
use cdle::reduction::{normalize, Fuel};
use cdle::surface::{parse_expr, parse_module, pretty_expr, pretty_module};
use cdle::syntax::Expr;
use cdle::PureTerm;
use common::gen::{expr, ident, pure, refresh, rename_expr, renaming, variant};
use common::{asciify, corpus_session};
use proptest::prelude::*;

/// Erased binders keep their occurrences out of the erasure.
fn erasure_is_clean(e: &Expr) -> bool {
    // Renaming the genuinely free names exposes any leaked binder.
    let renamed = e.free_vars().iter().fold(e.clone(), |acc, x| {
        acc.subst(x, &Expr::var(&format!("{x}_free")))
    });
    let fv = renamed.free_vars();
    erase(&renamed).free_vars().iter().all(|x| fv.contains(x))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, max_global_rejects: 20_000, ..ProptestConfig::default() })]

    #[test]
    fn alpha_is_reflexive(e in expr()) {
        prop_assert_eq!(&e, &e.clone());
    }

    #[test]
    fn alpha_variants_are_equal_both_ways(e in expr()) {
        let v = variant(&e);
        prop_assert_eq!(&e, &v);
        prop_assert_eq!(&v, &e);
    }

    #[test]
    fn alpha_is_transitive(e in expr()) {
        let v1 = variant(&e);
        let v2 = refresh(&v1, &mut 1000);
        prop_assert_eq!(&e, &v1);
        prop_assert_eq!(&v1, &v2);
        prop_assert_eq!(&e, &v2);
    }

    #[test]
    fn alpha_is_symmetric_on_arbitrary_pairs(a in expr(), b in expr()) {
        prop_assert_eq!(a == b, b == a);
    }

    #[test]
    fn bijective_renaming_preserves_alpha(a in expr(), b in expr(), map in renaming()) {
        prop_assert_eq!(a == b, rename_expr(&a, &map) == rename_expr(&b, &map));
        prop_assert_eq!(rename_expr(&a, &map), rename_expr(&variant(&a), &map));
    }

    #[test]
    fn pure_alpha_ignores_binder_hints(t in pure(), x in ident(), y in ident()) {
        prop_assume!(x == y || !t.free_vars().contains(y.as_str()));
        let renamed = t.substitute(&x, &PureTerm::free(&y));
        prop_assert_eq!(PureTerm::lam(&x, t.clone()), PureTerm::lam(&y, renamed));
    }

    #[test]
    fn substituting_a_variable_for_itself_is_identity(e in expr(), x in ident()) {
        prop_assert_eq!(e.subst(&x, &Expr::var(&x)), e);
    }

    #[test]
    fn substitution_for_absent_names_is_identity(e in expr(), x in ident(), v in expr()) {
        prop_assume!(!e.occurs_free(&x));
        prop_assert_eq!(e.subst(&x, &v), e);
    }

    #[test]
    fn erasure_commutes_with_substitution(e in expr(), x in ident(), v in expr()) {
        prop_assume!(erasure_is_clean(&e) && erasure_is_clean(&v));
        prop_assert_eq!(erase(&e.subst(&x, &v)), erase(&e).substitute(&x, &erase(&v)));
    }

    #[test]
    fn substitution_lemma(e in expr(), v in expr(), w in expr(), x in ident(), y in ident()) {
        prop_assume!(x != y && !w.occurs_free(&x));
        let left = e.subst(&x, &v).subst(&y, &w);
        let right = e.subst(&y, &w).subst(&x, &v.subst(&y, &w));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn pure_substitution_lemma(t in pure(), v in pure(), w in pure(), x in ident(), y in ident()) {
        prop_assume!(x != y && !w.free_vars().contains(x.as_str()));
        let left = t.substitute(&x, &v).substitute(&y, &w);
        let right = t.substitute(&y, &w).substitute(&x, &v.substitute(&y, &w));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn close_then_open_is_identity(t in pure(), x in ident()) {
        prop_assert!(t.is_locally_closed());
        let closed = t.close(&x, 0);
        prop_assert!(!closed.free_vars().contains(x.as_str()));
        prop_assert_eq!(closed.open_with(&PureTerm::free(&x), 0), t);
    }

    #[test]
    fn printing_round_trips(e in expr()) {
        let printed = pretty_expr(&e);
        let parsed = parse_expr(&printed);
        prop_assert!(parsed.is_ok(), "{} does not parse: {:?}", printed, parsed);
        prop_assert_eq!(parsed.unwrap(), e, "{}", printed);
    }

    #[test]
    fn ascii_spelling_parses_the_same(e in expr()) {
        let printed = pretty_expr(&e);
        prop_assert_eq!(parse_expr(&asciify(&printed)).unwrap(), e, "{}", asciify(&printed));
    }

    #[test]
    fn normal_forms_are_fixed_points(t in pure()) {
        let fuel = Fuel::new(10_000).unwrap();
        if let Some(nf) = normalize(&t, fuel).result {
            let again = normalize(&nf, fuel);
            prop_assert_eq!((again.beta_steps, again.eta_steps), (0, 0));
            prop_assert_eq!(again.result, Some(nf));
        }
    }
}

#[test]
fn corpus_round_trips_through_the_printer() {
    for (stem, text) in cdle::corpus::FILES {
        let m = parse_module(text).unwrap();
        let again = parse_module(&pretty_module(&m)).unwrap();
        assert_eq!(m.imports, again.imports, "{stem}");
        assert_eq!(m.defs.len(), again.defs.len(), "{stem}");
        for (a, b) in m.defs.iter().zip(&again.defs) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.classifier, b.classifier, "{stem}: {}", a.name);
            assert_eq!(a.body, b.body, "{stem}: {}", a.name);
        }
    }
}

#[test]
fn corpus_in_ascii_parses_the_same() {
    for (stem, text) in cdle::corpus::FILES {
        let m = parse_module(text).unwrap();
        let ascii = asciify(text);
        assert!(ascii.is_ascii() || ascii.contains("//"), "{stem}");
        let a = parse_module(&ascii).unwrap_or_else(|e| panic!("{stem}: {e}"));
        for (x, y) in m.defs.iter().zip(&a.defs) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.classifier, y.classifier, "{stem}: {}", x.name);
            assert_eq!(x.body, y.body, "{stem}: {}", x.name);
        }
        assert_eq!(m.defs.len(), a.defs.len());
    }
}

#[test]
fn checking_is_deterministic() {
    let render = |s: &cdle::check::Session| -> Vec<(String, String, Vec<cdle::check::DefRecord>)> {
        s.reports()
            .iter()
            .map(|r| (r.module.clone(), r.to_string(), r.records()))
            .collect()
    };
    assert_eq!(render(&corpus_session()), render(&corpus_session()));
    for (path, _, text) in common::negative_suite() {
        let label = path.display().to_string();
        let a = common::session_of(&label, &text);
        let b = common::session_of(&label, &text);
        assert_eq!(render(&a), render(&b), "{label}");
    }
}
