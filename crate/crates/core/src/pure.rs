//! Pure untyped lambda terms, the image of erasure.
//!
//! Locally nameless: bound variables are de Bruijn indices, free variables
//! are names. Binder names survive only as printing hints, so α-equivalence
//! is structural equality.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::syntax::{fresh_name, name, Name};

#[derive(Clone, Debug)]
pub enum PureTerm {
    Free(Name),
    Bound(usize),
    Lam(Name, Arc<PureTerm>),
    App(Arc<PureTerm>, Arc<PureTerm>),
}

impl PartialEq for PureTerm {
    fn eq(&self, other: &Self) -> bool {
        alpha_eq(self, other)
    }
}

impl Eq for PureTerm {}

/// α-equivalence: identical up to the names of bound variables.
pub fn alpha_eq(a: &PureTerm, b: &PureTerm) -> bool {
    match (a, b) {
        (PureTerm::Free(x), PureTerm::Free(y)) => x == y,
        (PureTerm::Bound(i), PureTerm::Bound(j)) => i == j,
        (PureTerm::Lam(_, p), PureTerm::Lam(_, q)) => Arc::ptr_eq(p, q) || alpha_eq(p, q),
        (PureTerm::App(f, x), PureTerm::App(g, y)) => {
            (Arc::ptr_eq(f, g) || alpha_eq(f, g)) && (Arc::ptr_eq(x, y) || alpha_eq(x, y))
        }
        _ => false,
    }
}

impl PureTerm {
    pub fn free(x: &str) -> PureTerm {
        PureTerm::Free(name(x))
    }

    pub fn app(f: PureTerm, a: PureTerm) -> PureTerm {
        PureTerm::App(Arc::new(f), Arc::new(a))
    }

    pub fn apps(f: PureTerm, args: impl IntoIterator<Item = PureTerm>) -> PureTerm {
        args.into_iter().fold(f, PureTerm::app)
    }

    /// `λ x. body`, binding the free occurrences of `x` in `body`.
    pub fn lam(x: &str, body: PureTerm) -> PureTerm {
        PureTerm::Lam(name(x), Arc::new(body.close(x, 0)))
    }

    /// `λ x₁. … λ xₙ. body`
    pub fn lams(xs: &[&str], body: PureTerm) -> PureTerm {
        xs.iter().rev().fold(body, |b, x| PureTerm::lam(x, b))
    }

    /// The identity function `λ x. x`.
    pub fn identity() -> PureTerm {
        PureTerm::lam("x", PureTerm::free("x"))
    }

    /// Replaces free `x` by the bound index at `depth`.
    pub fn close(&self, x: &str, depth: usize) -> PureTerm {
        match self {
            PureTerm::Free(y) if &**y == x => PureTerm::Bound(depth),
            PureTerm::Free(_) | PureTerm::Bound(_) => self.clone(),
            PureTerm::Lam(h, b) => PureTerm::Lam(h.clone(), Arc::new(b.close(x, depth + 1))),
            PureTerm::App(f, a) => {
                PureTerm::App(Arc::new(f.close(x, depth)), Arc::new(a.close(x, depth)))
            }
        }
    }

    /// Replaces the loose index `depth` with the locally closed `v`.
    pub fn open_with(&self, v: &PureTerm, depth: usize) -> PureTerm {
        match self {
            PureTerm::Bound(i) if *i == depth => v.clone(),
            PureTerm::Free(_) | PureTerm::Bound(_) => self.clone(),
            PureTerm::Lam(h, b) => PureTerm::Lam(h.clone(), Arc::new(b.open_with(v, depth + 1))),
            PureTerm::App(f, a) => PureTerm::App(
                Arc::new(f.open_with(v, depth)),
                Arc::new(a.open_with(v, depth)),
            ),
        }
    }

    /// True when the term contains index `depth` (relative to its root).
    pub fn has_loose(&self, depth: usize) -> bool {
        match self {
            PureTerm::Bound(i) => *i == depth,
            PureTerm::Free(_) => false,
            PureTerm::Lam(_, b) => b.has_loose(depth + 1),
            PureTerm::App(f, a) => f.has_loose(depth) || a.has_loose(depth),
        }
    }

    /// Decrements every loose index above `depth`. Caller guarantees index
    /// `depth` itself does not occur.
    pub fn lower(&self, depth: usize) -> PureTerm {
        match self {
            PureTerm::Bound(i) if *i > depth => PureTerm::Bound(i - 1),
            PureTerm::Free(_) | PureTerm::Bound(_) => self.clone(),
            PureTerm::Lam(h, b) => PureTerm::Lam(h.clone(), Arc::new(b.lower(depth + 1))),
            PureTerm::App(f, a) => {
                PureTerm::App(Arc::new(f.lower(depth)), Arc::new(a.lower(depth)))
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<Name>) {
        match self {
            PureTerm::Free(x) => {
                out.insert(x.clone());
            }
            PureTerm::Bound(_) => {}
            PureTerm::Lam(_, b) => b.collect_free(out),
            PureTerm::App(f, a) => {
                f.collect_free(out);
                a.collect_free(out);
            }
        }
    }

    /// Every index refers to an enclosing binder.
    pub fn is_locally_closed(&self) -> bool {
        fn go(t: &PureTerm, depth: usize) -> bool {
            match t {
                PureTerm::Bound(i) => *i < depth,
                PureTerm::Free(_) => true,
                PureTerm::Lam(_, b) => go(b, depth + 1),
                PureTerm::App(f, a) => go(f, depth) && go(a, depth),
            }
        }
        go(self, 0)
    }

    /// Capture-avoiding substitution of `v` for free `x`. Indices make
    /// capture impossible; only printing hints may need refreshing.
    pub fn substitute(&self, x: &str, v: &PureTerm) -> PureTerm {
        match self {
            PureTerm::Free(y) if &**y == x => v.clone(),
            PureTerm::Free(_) | PureTerm::Bound(_) => self.clone(),
            PureTerm::Lam(h, b) => PureTerm::Lam(h.clone(), Arc::new(b.substitute(x, v))),
            PureTerm::App(f, a) => {
                PureTerm::App(Arc::new(f.substitute(x, v)), Arc::new(a.substitute(x, v)))
            }
        }
    }

    /// Substitutes many free names at once.
    pub fn substitute_all(&self, lookup: &impl Fn(&str) -> Option<PureTerm>) -> PureTerm {
        match self {
            PureTerm::Free(y) => lookup(y).unwrap_or_else(|| self.clone()),
            PureTerm::Bound(_) => self.clone(),
            PureTerm::Lam(h, b) => PureTerm::Lam(h.clone(), Arc::new(b.substitute_all(lookup))),
            PureTerm::App(f, a) => PureTerm::App(
                Arc::new(f.substitute_all(lookup)),
                Arc::new(a.substitute_all(lookup)),
            ),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            PureTerm::Free(_) | PureTerm::Bound(_) => 1,
            PureTerm::Lam(_, b) => 1 + b.size(),
            PureTerm::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let mut names = Vec::new();
        let free = self.free_vars();
        self.write(&mut out, &mut names, &free, Prec::Top);
        out
    }

    fn write(&self, out: &mut String, names: &mut Vec<Name>, free: &BTreeSet<Name>, prec: Prec) {
        match self {
            PureTerm::Free(x) => out.push_str(x),
            PureTerm::Bound(i) => match names.len().checked_sub(i + 1) {
                Some(k) => out.push_str(&names[k]),
                None => out.push_str(&format!("#{i}")),
            },
            PureTerm::Lam(hint, body) => {
                let paren = prec != Prec::Top;
                if paren {
                    out.push('(');
                }
                let chosen = fresh_name(hint, |c| {
                    free.iter().any(|f| &**f == c) || names.iter().any(|n| &**n == c)
                });
                out.push_str("λ ");
                out.push_str(&chosen);
                out.push_str(". ");
                names.push(chosen);
                body.write(out, names, free, Prec::Top);
                names.pop();
                if paren {
                    out.push(')');
                }
            }
            PureTerm::App(f, a) => {
                let paren = prec == Prec::Arg;
                if paren {
                    out.push('(');
                }
                f.write(out, names, free, Prec::Fun);
                out.push(' ');
                a.write(out, names, free, Prec::Arg);
                if paren {
                    out.push(')');
                }
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Prec {
    Top,
    Fun,
    Arg,
}

impl fmt::Display for PureTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &str) -> PureTerm {
        PureTerm::free(x)
    }

    #[test]
    fn renamed_identity_is_alpha_equal() {
        assert_eq!(PureTerm::lam("x", v("x")), PureTerm::lam("y", v("y")));
    }

    #[test]
    fn distinct_projections_differ() {
        let k = PureTerm::lams(&["x", "y"], v("x"));
        let ki = PureTerm::lams(&["a", "b"], v("b"));
        assert_ne!(k, ki);
    }

    #[test]
    fn substitution_examples() {
        let id = PureTerm::lam("y", v("y"));
        assert_eq!(v("x").substitute("x", &id), id);
        let xx = PureTerm::app(v("x"), v("x"));
        assert_eq!(
            xx.substitute("x", &id),
            PureTerm::app(id.clone(), id.clone())
        );
        let captured = PureTerm::lam("y", v("x")).substitute("x", &v("y"));
        assert_eq!(captured.pretty(), "λ y1. y");
        assert_eq!(
            captured.free_vars().into_iter().collect::<Vec<_>>(),
            vec![name("y")]
        );
    }

    #[test]
    fn free_variable_examples() {
        assert!(PureTerm::lam("x", v("x")).free_vars().is_empty());
        let t = PureTerm::lam("x", PureTerm::app(v("x"), v("y")));
        assert_eq!(
            t.free_vars().into_iter().collect::<Vec<_>>(),
            vec![name("y")]
        );
    }

    #[test]
    fn pretty_prints_nested_binders() {
        let nil = PureTerm::lams(&["cN", "cC"], v("cN"));
        assert_eq!(nil.pretty(), "λ cN. λ cC. cN");
        let t = PureTerm::app(PureTerm::lam("x", v("x")), PureTerm::app(v("f"), v("g")));
        assert_eq!(t.pretty(), "(λ x. x) (f g)");
    }
}
