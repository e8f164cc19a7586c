//! Random terms: a seeded generator for bulk comparisons and proptest
//! strategies for property tests.

use std::sync::Arc;

use cdle::syntax::{Expr, Guide, Half, Quant};
use cdle::PureTerm;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::naive::N;

const BINDERS: [&str; 3] = ["x", "y", "z"];
const FREE: [&str; 2] = ["a", "b"];

/// Well-scoped term of at most `size` nodes. Binder names repeat, so
/// shadowing is common; heads are often λs, so redexes are too.
fn named(rng: &mut ChaCha8Rng, size: usize, scope: &mut Vec<&'static str>) -> N {
    let leaf = |rng: &mut ChaCha8Rng, scope: &[&'static str]| {
        if !scope.is_empty() && rng.gen_bool(0.8) {
            N::V(scope[rng.gen_range(0..scope.len())].to_string())
        } else {
            N::V(FREE[rng.gen_range(0..FREE.len())].to_string())
        }
    };
    if size <= 2 {
        return leaf(rng, scope);
    }
    match rng.gen_range(0..10) {
        0..=3 => {
            let x = BINDERS[rng.gen_range(0..BINDERS.len())];
            scope.push(x);
            let b = named(rng, size - 1, scope);
            scope.pop();
            N::L(x.to_string(), Box::new(b))
        }
        4..=6 if size >= 4 => {
            // An explicit redex.
            let x = BINDERS[rng.gen_range(0..BINDERS.len())];
            let k = rng.gen_range(1..size - 2);
            scope.push(x);
            let b = named(rng, k, scope);
            scope.pop();
            let a = named(rng, size - 2 - k, scope);
            N::A(Box::new(N::L(x.to_string(), Box::new(b))), Box::new(a))
        }
        _ => {
            let k = rng.gen_range(1..size - 1);
            let f = named(rng, k, scope);
            let a = named(rng, size - 1 - k, scope);
            N::A(Box::new(f), Box::new(a))
        }
    }
}

/// `count` random pure terms of size at most `max_size`, reproducibly.
pub fn pure_terms(seed: u64, count: usize, max_size: usize) -> Vec<PureTerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            named(&mut rng, size, &mut Vec::new()).to_pure()
        })
        .collect()
}

fn arc(e: Expr) -> Arc<Expr> {
    Arc::new(e)
}

pub fn ident() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["x", "y", "z", "a", "b", "f"]).prop_map(str::to_string)
}

/// Any annotated expression; not necessarily well typed.
pub fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        4 => ident().prop_map(|x| Expr::var(&x)),
        1 => Just(Expr::Star),
        1 => Just(Expr::Beta),
    ];
    leaf.prop_recursive(5, 40, 3, |inner| {
        let quant = prop::sample::select(vec![Quant::Pi, Quant::Forall, Quant::Iota]);
        prop_oneof![
            (quant, ident(), inner.clone(), inner.clone()).prop_map(|(q, x, d, b)| Expr::Bind {
                quant: q,
                binder: x.into(),
                domain: arc(d),
                body: arc(b),
            }),
            (
                any::<bool>(),
                ident(),
                prop::option::of(inner.clone()),
                inner.clone()
            )
                .prop_map(|(erased, x, d, b)| Expr::Lam {
                    erased,
                    binder: x.into(),
                    domain: d.map(arc),
                    body: arc(b),
                }),
            (any::<bool>(), inner.clone(), inner.clone()).prop_map(|(erased, f, a)| Expr::App {
                erased,
                fun: arc(f),
                arg: arc(a),
            }),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Eq(arc(a), arc(b))),
            (
                prop::option::of((ident(), inner.clone())),
                inner.clone(),
                inner.clone()
            )
                .prop_map(|(g, q, t)| Expr::Rho {
                    guide: g.map(|(h, tpl)| Guide {
                        hole: h.into(),
                        template: arc(tpl),
                    }),
                    proof: arc(q),
                    body: arc(t),
                }),
            (inner.clone(), inner.clone(), inner.clone()).prop_map(|(q, s, t)| Expr::Phi {
                proof: arc(q),
                source: arc(s),
                target: arc(t),
            }),
            inner.clone().prop_map(|q| Expr::Sym(arc(q))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Pair(arc(a), arc(b))),
            (inner, any::<bool>()).prop_map(|(t, first)| Expr::Proj(
                arc(t),
                if first { Half::First } else { Half::Second }
            )),
        ]
    })
}

/// Pure terms built with named binders over a small alphabet.
pub fn pure() -> impl Strategy<Value = PureTerm> {
    let leaf = ident().prop_map(|x| PureTerm::free(&x));
    leaf.prop_recursive(6, 30, 2, |inner| {
        prop_oneof![
            (ident(), inner.clone()).prop_map(|(x, b)| PureTerm::lam(&x, b)),
            (inner.clone(), inner).prop_map(|(f, a)| PureTerm::app(f, a)),
        ]
    })
}

/// A bijective renaming of the identifier alphabet.
pub fn renaming() -> impl Strategy<Value = Vec<(String, String)>> {
    Just(["x", "y", "z", "a", "b", "f"].map(String::from).to_vec())
        .prop_shuffle()
        .prop_map(|targets| {
            ["x", "y", "z", "a", "b", "f"]
                .iter()
                .zip(targets)
                .map(|(s, t)| (s.to_string(), format!("{t}_")))
                .collect()
        })
}

/// Applies a renaming to every identifier, bound or free.
pub fn rename_expr(e: &Expr, map: &[(String, String)]) -> Expr {
    let r = |x: &str| -> cdle::Name {
        map.iter()
            .find(|(s, _)| s == x)
            .map_or_else(|| x.into(), |(_, t)| t.as_str().into())
    };
    let go = |e: &Arc<Expr>| arc(rename_expr(e, map));
    match e {
        Expr::Var(x) => Expr::Var(r(x)),
        Expr::Star | Expr::Beta => e.clone(),
        Expr::Bind {
            quant,
            binder,
            domain,
            body,
        } => Expr::Bind {
            quant: *quant,
            binder: r(binder),
            domain: go(domain),
            body: go(body),
        },
        Expr::Lam {
            erased,
            binder,
            domain,
            body,
        } => Expr::Lam {
            erased: *erased,
            binder: r(binder),
            domain: domain.as_ref().map(go),
            body: go(body),
        },
        Expr::App { erased, fun, arg } => Expr::App {
            erased: *erased,
            fun: go(fun),
            arg: go(arg),
        },
        Expr::Eq(a, b) => Expr::Eq(go(a), go(b)),
        Expr::Rho { guide, proof, body } => Expr::Rho {
            guide: guide.as_ref().map(|g| Guide {
                hole: r(&g.hole),
                template: go(&g.template),
            }),
            proof: go(proof),
            body: go(body),
        },
        Expr::Phi {
            proof,
            source,
            target,
        } => Expr::Phi {
            proof: go(proof),
            source: go(source),
            target: go(target),
        },
        Expr::Sym(q) => Expr::Sym(go(q)),
        Expr::Pair(a, b) => Expr::Pair(go(a), go(b)),
        Expr::Proj(t, h) => Expr::Proj(go(t), *h),
    }
}

/// Renames every binder to a globally fresh name: an α-variant.
pub fn refresh(e: &Expr, next: &mut usize) -> Expr {
    fn fresh(x: &str, next: &mut usize) -> cdle::Name {
        *next += 1;
        cdle::syntax::name(&format!("{x}_{next}"))
    }
    match e {
        Expr::Var(_) | Expr::Star | Expr::Beta => e.clone(),
        Expr::Bind {
            quant,
            binder,
            domain,
            body,
        } => {
            let b = fresh(binder, next);
            Expr::Bind {
                quant: *quant,
                binder: b.clone(),
                domain: Arc::new(refresh(domain, next)),
                body: Arc::new(refresh(&body.rename(binder, &b), next)),
            }
        }
        Expr::Lam {
            erased,
            binder,
            domain,
            body,
        } => {
            let b = fresh(binder, next);
            Expr::Lam {
                erased: *erased,
                binder: b.clone(),
                domain: domain.as_ref().map(|d| Arc::new(refresh(d, next))),
                body: Arc::new(refresh(&body.rename(binder, &b), next)),
            }
        }
        Expr::App { erased, fun, arg } => Expr::App {
            erased: *erased,
            fun: Arc::new(refresh(fun, next)),
            arg: Arc::new(refresh(arg, next)),
        },
        Expr::Eq(a, b) => Expr::Eq(Arc::new(refresh(a, next)), Arc::new(refresh(b, next))),
        Expr::Rho { guide, proof, body } => Expr::Rho {
            guide: guide.as_ref().map(|g| {
                let h = fresh(&g.hole, next);
                Guide {
                    hole: h.clone(),
                    template: Arc::new(refresh(&g.template.rename(&g.hole, &h), next)),
                }
            }),
            proof: Arc::new(refresh(proof, next)),
            body: Arc::new(refresh(body, next)),
        },
        Expr::Phi {
            proof,
            source,
            target,
        } => Expr::Phi {
            proof: Arc::new(refresh(proof, next)),
            source: Arc::new(refresh(source, next)),
            target: Arc::new(refresh(target, next)),
        },
        Expr::Sym(q) => Expr::Sym(Arc::new(refresh(q, next))),
        Expr::Pair(a, b) => Expr::Pair(Arc::new(refresh(a, next)), Arc::new(refresh(b, next))),
        Expr::Proj(t, h) => Expr::Proj(Arc::new(refresh(t, next)), *h),
    }
}

pub fn variant(e: &Expr) -> Expr {
    refresh(e, &mut 0)
}
