//! Annotated syntax shared by terms, types and kinds.
//!
//! One grammar serves all three layers. Whether a node denotes a term, a
//! type or a kind is decided by the checker from the context; the parser
//! cannot tell `List A` (type application) from `f x` (term application).

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub type Name = Arc<str>;

pub fn name(s: &str) -> Name {
    Arc::from(s)
}

/// The three binding type formers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quant {
    /// `Π x : T. T'`, explicit dependent function (also kind arrows).
    Pi,
    /// `∀ x : T. T'`, implicit (erased) product over a term or a type.
    Forall,
    /// `ι x : T. T'`, dependent intersection.
    Iota,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Half {
    First,
    Second,
}

#[derive(Clone, Debug)]
pub enum Expr {
    Var(Name),
    /// `★`
    Star,
    Bind {
        quant: Quant,
        binder: Name,
        domain: Arc<Expr>,
        body: Arc<Expr>,
    },
    /// `λ x. t` or, when `erased`, `Λ x. t`. The domain annotation is optional.
    Lam {
        erased: bool,
        binder: Name,
        domain: Option<Arc<Expr>>,
        body: Arc<Expr>,
    },
    /// `t t'` or, when `erased`, `t -t'`. The argument of an erased
    /// application may be a term or a type; the quantifier being
    /// instantiated decides which.
    App {
        erased: bool,
        fun: Arc<Expr>,
        arg: Arc<Expr>,
    },
    /// `t₁ ≃ t₂`
    Eq(Arc<Expr>, Arc<Expr>),
    Beta,
    /// `ρ q - t`, optionally guided by `<x. T>`.
    Rho {
        guide: Option<Guide>,
        proof: Arc<Expr>,
        body: Arc<Expr>,
    },
    /// `φ q - t₁ {t₂}`
    Phi {
        proof: Arc<Expr>,
        source: Arc<Expr>,
        target: Arc<Expr>,
    },
    /// `ς q`
    Sym(Arc<Expr>),
    /// `[t₁, t₂]`
    Pair(Arc<Expr>, Arc<Expr>),
    /// `t.1` / `t.2`
    Proj(Arc<Expr>, Half),
}

/// A rewrite guide `<x. T>`: `x` is the hole bound in `template`.
#[derive(Clone, Debug)]
pub struct Guide {
    pub hole: Name,
    pub template: Arc<Expr>,
}

impl Expr {
    pub fn var(s: &str) -> Expr {
        Expr::Var(name(s))
    }

    pub fn bind(quant: Quant, binder: impl Into<Name>, domain: Expr, body: Expr) -> Expr {
        Expr::Bind {
            quant,
            binder: binder.into(),
            domain: Arc::new(domain),
            body: Arc::new(body),
        }
    }

    pub fn pi(binder: &str, domain: Expr, body: Expr) -> Expr {
        Expr::bind(Quant::Pi, name(binder), domain, body)
    }

    pub fn forall(binder: &str, domain: Expr, body: Expr) -> Expr {
        Expr::bind(Quant::Forall, name(binder), domain, body)
    }

    pub fn iota(binder: &str, domain: Expr, body: Expr) -> Expr {
        Expr::bind(Quant::Iota, name(binder), domain, body)
    }

    /// Non-dependent `T ➔ T'`.
    pub fn arrow(domain: Expr, body: Expr) -> Expr {
        Expr::bind(Quant::Pi, name("_"), domain, body)
    }

    pub fn lam(binder: &str, body: Expr) -> Expr {
        Expr::Lam {
            erased: false,
            binder: name(binder),
            domain: None,
            body: Arc::new(body),
        }
    }

    pub fn big_lam(binder: &str, body: Expr) -> Expr {
        Expr::Lam {
            erased: true,
            binder: name(binder),
            domain: None,
            body: Arc::new(body),
        }
    }

    pub fn app(fun: Expr, arg: Expr) -> Expr {
        Expr::App {
            erased: false,
            fun: Arc::new(fun),
            arg: Arc::new(arg),
        }
    }

    pub fn app_erased(fun: Expr, arg: Expr) -> Expr {
        Expr::App {
            erased: true,
            fun: Arc::new(fun),
            arg: Arc::new(arg),
        }
    }

    pub fn eq(lhs: Expr, rhs: Expr) -> Expr {
        Expr::Eq(Arc::new(lhs), Arc::new(rhs))
    }

    /// True for `★` and `Π`-chains ending in `★`.
    pub fn is_kind(&self) -> bool {
        match self {
            Expr::Star => true,
            Expr::Bind {
                quant: Quant::Pi,
                body,
                ..
            } => body.is_kind(),
            _ => false,
        }
    }

    /// Splits `f a₁ … aₙ` into its head and arguments (with erasure flags).
    pub fn spine(&self) -> (&Expr, Vec<(bool, &Arc<Expr>)>) {
        let mut head = self;
        let mut args = Vec::new();
        while let Expr::App { erased, fun, arg } = head {
            args.push((*erased, arg));
            head = fun;
        }
        args.reverse();
        (head, args)
    }

    pub fn free_vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    pub fn occurs_free(&self, x: &str) -> bool {
        match self {
            Expr::Var(y) => &**y == x,
            Expr::Star | Expr::Beta => false,
            Expr::Bind {
                binder,
                domain,
                body,
                ..
            } => domain.occurs_free(x) || (&**binder != x && body.occurs_free(x)),
            Expr::Lam {
                binder,
                domain,
                body,
                ..
            } => {
                domain.as_ref().is_some_and(|d| d.occurs_free(x))
                    || (&**binder != x && body.occurs_free(x))
            }
            Expr::App { fun, arg, .. } => fun.occurs_free(x) || arg.occurs_free(x),
            Expr::Eq(a, b) | Expr::Pair(a, b) => a.occurs_free(x) || b.occurs_free(x),
            Expr::Rho { guide, proof, body } => {
                guide
                    .as_ref()
                    .is_some_and(|g| &*g.hole != x && g.template.occurs_free(x))
                    || proof.occurs_free(x)
                    || body.occurs_free(x)
            }
            Expr::Phi {
                proof,
                source,
                target,
            } => proof.occurs_free(x) || source.occurs_free(x) || target.occurs_free(x),
            Expr::Sym(q) | Expr::Proj(q, _) => q.occurs_free(x),
        }
    }

    fn collect_free(&self, bound: &mut Vec<Name>, out: &mut BTreeSet<Name>) {
        match self {
            Expr::Var(y) => {
                if !bound.contains(y) {
                    out.insert(y.clone());
                }
            }
            Expr::Star | Expr::Beta => {}
            Expr::Bind {
                binder,
                domain,
                body,
                ..
            } => {
                domain.collect_free(bound, out);
                bound.push(binder.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            Expr::Lam {
                binder,
                domain,
                body,
                ..
            } => {
                if let Some(d) = domain {
                    d.collect_free(bound, out);
                }
                bound.push(binder.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
            Expr::App { fun, arg, .. } => {
                fun.collect_free(bound, out);
                arg.collect_free(bound, out);
            }
            Expr::Eq(a, b) | Expr::Pair(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Expr::Rho { guide, proof, body } => {
                if let Some(g) = guide {
                    bound.push(g.hole.clone());
                    g.template.collect_free(bound, out);
                    bound.pop();
                }
                proof.collect_free(bound, out);
                body.collect_free(bound, out);
            }
            Expr::Phi {
                proof,
                source,
                target,
            } => {
                proof.collect_free(bound, out);
                source.collect_free(bound, out);
                target.collect_free(bound, out);
            }
            Expr::Sym(q) | Expr::Proj(q, _) => q.collect_free(bound, out),
        }
    }

    /// Capture-avoiding substitution `[v/x]self`.
    pub fn subst(&self, x: &str, v: &Expr) -> Expr {
        // Spares computing the free names of a large `v` for nothing.
        if !self.occurs_free(x) {
            return self.clone();
        }
        let fv = v.free_vars();
        self.subst_with(x, v, &fv)
    }

    fn subst_with(&self, x: &str, v: &Expr, fv: &BTreeSet<Name>) -> Expr {
        let go = |e: &Arc<Expr>| Arc::new(e.subst_with(x, v, fv));
        match self {
            Expr::Var(y) if &**y == x => v.clone(),
            Expr::Var(_) | Expr::Star | Expr::Beta => self.clone(),
            Expr::Bind {
                quant,
                binder,
                domain,
                body,
            } => {
                let (binder, body) = under_binder(binder, body, x, v, fv);
                Expr::Bind {
                    quant: *quant,
                    binder,
                    domain: go(domain),
                    body,
                }
            }
            Expr::Lam {
                erased,
                binder,
                domain,
                body,
            } => {
                let (binder, body) = under_binder(binder, body, x, v, fv);
                Expr::Lam {
                    erased: *erased,
                    binder,
                    domain: domain.as_ref().map(go),
                    body,
                }
            }
            Expr::App { erased, fun, arg } => Expr::App {
                erased: *erased,
                fun: go(fun),
                arg: go(arg),
            },
            Expr::Eq(a, b) => Expr::Eq(go(a), go(b)),
            Expr::Pair(a, b) => Expr::Pair(go(a), go(b)),
            Expr::Rho { guide, proof, body } => Expr::Rho {
                guide: guide.as_ref().map(|g| {
                    let (hole, template) = under_binder(&g.hole, &g.template, x, v, fv);
                    Guide { hole, template }
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
            Expr::Proj(q, h) => Expr::Proj(go(q), *h),
        }
    }

    /// Renames free occurrences of `from` to the variable `to`.
    pub fn rename(&self, from: &str, to: &Name) -> Expr {
        if &**to == from {
            return self.clone();
        }
        self.subst(from, &Expr::Var(to.clone()))
    }
}

fn under_binder(
    binder: &Name,
    body: &Arc<Expr>,
    x: &str,
    v: &Expr,
    fv: &BTreeSet<Name>,
) -> (Name, Arc<Expr>) {
    if &**binder == x {
        return (binder.clone(), body.clone());
    }
    if fv.contains(binder) && body.occurs_free(x) {
        let body_fv = body.free_vars();
        let fresh = fresh_name(binder, |n| fv.contains(n) || body_fv.contains(n) || n == x);
        let renamed = body.rename(binder, &fresh);
        return (fresh, Arc::new(renamed.subst_with(x, v, fv)));
    }
    (binder.clone(), Arc::new(body.subst_with(x, v, fv)))
}

/// Returns `base` with a numeric suffix chosen so that `taken` rejects it.
pub fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> Name {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let stem = if stem.is_empty() { "x" } else { stem };
    if !taken(base) {
        return name(base);
    }
    (1..)
        .map(|i| format!("{stem}{i}"))
        .find(|c| !taken(c))
        .map(|c| name(&c))
        .expect("unbounded supply of names")
}

/// α-equivalence of annotated syntax.
pub fn alpha_eq(a: &Expr, b: &Expr) -> bool {
    AlphaEnv::default().eq(a, b)
}

#[derive(Default)]
struct AlphaEnv {
    left: Vec<Name>,
    right: Vec<Name>,
}

impl AlphaEnv {
    fn lookup(stack: &[Name], x: &Name) -> Option<usize> {
        stack.iter().rposition(|y| y == x)
    }

    fn under<R>(&mut self, l: &Name, r: &Name, f: impl FnOnce(&mut Self) -> R) -> R {
        self.left.push(l.clone());
        self.right.push(r.clone());
        let out = f(self);
        self.left.pop();
        self.right.pop();
        out
    }

    fn eq(&mut self, a: &Expr, b: &Expr) -> bool {
        match (a, b) {
            (Expr::Var(x), Expr::Var(y)) => {
                match (Self::lookup(&self.left, x), Self::lookup(&self.right, y)) {
                    (Some(i), Some(j)) => i == j,
                    (None, None) => x == y,
                    _ => false,
                }
            }
            (Expr::Star, Expr::Star) | (Expr::Beta, Expr::Beta) => true,
            (
                Expr::Bind {
                    quant: q1,
                    binder: x1,
                    domain: d1,
                    body: b1,
                },
                Expr::Bind {
                    quant: q2,
                    binder: x2,
                    domain: d2,
                    body: b2,
                },
            ) => q1 == q2 && self.eq(d1, d2) && self.under(x1, x2, |s| s.eq(b1, b2)),
            (
                Expr::Lam {
                    erased: e1,
                    binder: x1,
                    domain: d1,
                    body: b1,
                },
                Expr::Lam {
                    erased: e2,
                    binder: x2,
                    domain: d2,
                    body: b2,
                },
            ) => {
                let doms = match (d1, d2) {
                    (None, None) => true,
                    (Some(d1), Some(d2)) => self.eq(d1, d2),
                    _ => false,
                };
                e1 == e2 && doms && self.under(x1, x2, |s| s.eq(b1, b2))
            }
            (
                Expr::App {
                    erased: e1,
                    fun: f1,
                    arg: a1,
                },
                Expr::App {
                    erased: e2,
                    fun: f2,
                    arg: a2,
                },
            ) => e1 == e2 && self.eq(f1, f2) && self.eq(a1, a2),
            (Expr::Eq(a1, b1), Expr::Eq(a2, b2)) | (Expr::Pair(a1, b1), Expr::Pair(a2, b2)) => {
                self.eq(a1, a2) && self.eq(b1, b2)
            }
            (
                Expr::Rho {
                    guide: g1,
                    proof: p1,
                    body: b1,
                },
                Expr::Rho {
                    guide: g2,
                    proof: p2,
                    body: b2,
                },
            ) => {
                let guides = match (g1, g2) {
                    (None, None) => true,
                    (Some(g1), Some(g2)) => {
                        self.under(&g1.hole, &g2.hole, |s| s.eq(&g1.template, &g2.template))
                    }
                    _ => false,
                };
                guides && self.eq(p1, p2) && self.eq(b1, b2)
            }
            (
                Expr::Phi {
                    proof: p1,
                    source: s1,
                    target: t1,
                },
                Expr::Phi {
                    proof: p2,
                    source: s2,
                    target: t2,
                },
            ) => self.eq(p1, p2) && self.eq(s1, s2) && self.eq(t1, t2),
            (Expr::Sym(a), Expr::Sym(b)) => self.eq(a, b),
            (Expr::Proj(a, h1), Expr::Proj(b, h2)) => h1 == h2 && self.eq(a, b),
            _ => false,
        }
    }
}

impl PartialEq for Expr {
    /// Equality is α-equivalence.
    fn eq(&self, other: &Self) -> bool {
        alpha_eq(self, other)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::surface::pretty_expr(self))
    }
}
