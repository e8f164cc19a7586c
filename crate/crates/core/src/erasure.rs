//! Erasure `|·|` from annotated terms to pure terms.
//!
//! Total and purely syntactic:
//!
//! | annotated            | erased        |
//! |----------------------|---------------|
//! | `Λ x. t`             | `|t|`         |
//! | `t -t'`              | `|t|`         |
//! | `β`                  | `λ x. x`      |
//! | `ρ q - t`            | `|t|`         |
//! | `φ q - t₁ {t₂}`      | `|t₂|`        |
//! | `ς q`                | `|q|`         |
//! | `[t₁, t₂]`           | `|t₁|`        |
//! | `t.1`, `t.2`         | `|t|`         |
//!
//! Type and kind syntax never occurs in an explicit position of a well-typed
//! term; if it does, it erases to the opaque free name `★`.

use std::sync::Arc;

use crate::pure::PureTerm;
use crate::syntax::{name, Expr, Name};

pub fn erase(t: &Expr) -> PureTerm {
    erase_in(t, &mut Vec::new())
}

/// `None` entries are erased binders: they shadow but do not count.
fn erase_in(t: &Expr, scope: &mut Vec<Option<Name>>) -> PureTerm {
    match t {
        Expr::Var(x) => {
            let mut index = 0;
            for entry in scope.iter().rev() {
                match entry {
                    Some(y) if y == x => return PureTerm::Bound(index),
                    Some(_) => index += 1,
                    None => {}
                }
            }
            PureTerm::Free(x.clone())
        }
        Expr::Lam {
            erased,
            binder,
            body,
            ..
        } => {
            if *erased {
                scope.push(None);
                // An erased binder shadows outer explicit binders of the same
                // name; occurrences then surface as free variables.
                let out = erase_shadowed(body, binder, scope);
                scope.pop();
                out
            } else {
                scope.push(Some(binder.clone()));
                let out = erase_in(body, scope);
                scope.pop();
                PureTerm::Lam(binder.clone(), Arc::new(out))
            }
        }
        Expr::App {
            erased: true, fun, ..
        } => erase_in(fun, scope),
        Expr::App { fun, arg, .. } => PureTerm::App(
            Arc::new(erase_in(fun, scope)),
            Arc::new(erase_in(arg, scope)),
        ),
        Expr::Beta => PureTerm::identity(),
        Expr::Rho { body, .. } => erase_in(body, scope),
        Expr::Phi { target, .. } => erase_in(target, scope),
        Expr::Sym(q) => erase_in(q, scope),
        Expr::Pair(first, _) => erase_in(first, scope),
        Expr::Proj(t, _) => erase_in(t, scope),
        Expr::Star | Expr::Bind { .. } | Expr::Eq(..) => PureTerm::Free(name("★")),
    }
}

fn erase_shadowed(body: &Expr, binder: &Name, scope: &mut Vec<Option<Name>>) -> PureTerm {
    // Hide outer explicit binders named like the erased one so the lookup in
    // `erase_in` falls through to `Free`.
    let hidden: Vec<usize> = scope
        .iter()
        .enumerate()
        .filter(|(_, e)| e.as_ref() == Some(binder))
        .map(|(i, _)| i)
        .collect();
    if hidden.is_empty() {
        return erase_in(body, scope);
    }
    // Shadowed outer binders keep their slot (indices must not move) but
    // receive a name no source variable can have.
    let saved: Vec<_> = hidden
        .iter()
        .map(|&i| scope[i].replace(name("\u{0}shadowed")))
        .collect();
    let out = erase_in(body, scope);
    for (&i, old) in hidden.iter().zip(saved) {
        scope[i] = old;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::parse_expr;

    fn er(src: &str) -> PureTerm {
        erase(&parse_expr(src).unwrap())
    }

    #[test]
    fn beta_erases_to_identity() {
        assert_eq!(er("β"), PureTerm::identity());
    }

    #[test]
    fn erased_binder_dropped() {
        assert_eq!(er("Λ A. λ a. a"), PureTerm::lam("a", PureTerm::free("a")));
    }

    #[test]
    fn phi_erases_to_braced_term() {
        assert_eq!(er("φ (v2lId xs) - (v2l xs) {xs}"), PureTerm::free("xs"));
    }

    #[test]
    fn intersection_and_projections() {
        assert_eq!(er("[a, b]"), PureTerm::free("a"));
        assert_eq!(er("p.1"), PureTerm::free("p"));
        assert_eq!(er("p.2"), PureTerm::free("p"));
        assert_eq!(er("ς q"), PureTerm::free("q"));
        assert_eq!(er("ρ q - t"), PureTerm::free("t"));
    }

    #[test]
    fn erased_application_dropped() {
        let t = er("λ x, xs. Λ X. λ cN, cC. cC x (xs -X cN cC)");
        let expect = PureTerm::lams(
            &["x", "xs", "cN", "cC"],
            PureTerm::apps(
                PureTerm::free("cC"),
                [
                    PureTerm::free("x"),
                    PureTerm::apps(
                        PureTerm::free("xs"),
                        [PureTerm::free("cN"), PureTerm::free("cC")],
                    ),
                ],
            ),
        );
        assert_eq!(t, expect);
    }

    #[test]
    fn erased_binder_occurrence_is_free() {
        assert!(er("Λ x. x").free_vars().contains("x"));
        assert!(er("λ x. Λ x. x").free_vars().contains("x"));
        assert!(er("Λ x. λ x. x").free_vars().is_empty());
    }
}
