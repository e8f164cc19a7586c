//! Unguided `ρ`: replace embedded terms equal to `t₁` by `t₂` in a type.
//!
//! Three passes, each tried only when the previous one found nothing:
//! 1. maximal embedded subterms whose unfolded erasure is βη-equal to `t₁`;
//! 2. the same after unfolding type definitions throughout the type;
//! 3. inside the normal forms of embedded terms, replacing pure subterms
//!    α-equal to the normal form of `t₁` (the result is read back as syntax).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::pure::PureTerm;
use crate::syntax::{Expr, Name};

use super::context::{Context, Level};
use super::error::{CheckResult, ErrorCode, TypeError};

pub fn rho_rewrite(ctx: &mut Context, lhs: &Expr, rhs: &Expr, ty: &Expr) -> CheckResult<Expr> {
    let target = ctx.term_nf(lhs)?;
    let mut avoid = lhs.free_vars();
    avoid.extend(rhs.free_vars());
    let depth = ctx.local_depth();
    let mut rw = Rewriter {
        ctx,
        target,
        rhs,
        rhs_pure: None,
        avoid,
        hits: 0,
        pure_mode: false,
    };
    let result = rw.run(ty);
    rw.ctx.truncate(depth);
    match result? {
        Some(out) => Ok(out),
        None => Err(TypeError::mismatch(
            ErrorCode::RhoNoOccurrence,
            "no subterm of the type matches the left side of the equation",
            lhs,
            ty,
        )),
    }
}

struct Rewriter<'a> {
    ctx: &'a mut Context,
    target: PureTerm,
    rhs: &'a Expr,
    rhs_pure: Option<PureTerm>,
    avoid: BTreeSet<Name>,
    hits: usize,
    pure_mode: bool,
}

impl Rewriter<'_> {
    fn run(&mut self, ty: &Expr) -> CheckResult<Option<Expr>> {
        let out = self.ty(ty)?;
        if self.hits > 0 {
            return Ok(Some(out));
        }
        let unfolded = self.unfold_deep(ty)?;
        let out = self.ty(&unfolded)?;
        if self.hits > 0 {
            return Ok(Some(out));
        }
        self.pure_mode = true;
        self.rhs_pure = Some(self.ctx.term_nf(self.rhs)?);
        let out = self.ty(&unfolded)?;
        Ok((self.hits > 0).then_some(out))
    }

    /// Renames `x` apart from the equation's free variables and pushes it.
    fn enter(&mut self, x: &Name, body: &Expr, domain: Option<&Arc<Expr>>) -> (Name, Expr) {
        let (x2, body2) = if self.avoid.contains(x) || self.ctx.is_bound(x) {
            let mut avoid = self.avoid.clone();
            avoid.extend(body.free_vars());
            let fresh = self.ctx.fresh(x, &avoid);
            let renamed = body.rename(x, &fresh);
            (fresh, renamed)
        } else {
            (x.clone(), body.clone())
        };
        let level = match domain {
            Some(d) => Level::of_classified(d),
            None => Level::Term,
        };
        self.ctx
            .push(x2.clone(), domain.map(|d| (**d).clone()), level);
        (x2, body2)
    }

    fn ty(&mut self, e: &Expr) -> CheckResult<Expr> {
        Ok(match e {
            Expr::Bind {
                quant,
                binder,
                domain,
                body,
            } => {
                let d = self.ty(domain)?;
                let (x, b) = self.enter(binder, body, Some(domain));
                let b = self.ty(&b);
                self.ctx.pop();
                Expr::bind(*quant, x, d, b?)
            }
            Expr::Lam {
                erased,
                binder,
                domain,
                body,
            } => {
                let (x, b) = self.enter(binder, body, domain.as_ref());
                let b = self.ty(&b);
                self.ctx.pop();
                Expr::Lam {
                    erased: *erased,
                    binder: x,
                    domain: domain.clone(),
                    body: Arc::new(b?),
                }
            }
            Expr::Eq(a, b) => Expr::eq(self.term(a)?, self.term(b)?),
            Expr::App { .. } => {
                let (head, args) = e.spine();
                let levels = match head {
                    Expr::Var(h) => self.ctx.arg_levels(h, args.len()),
                    _ => vec![None; args.len()],
                };
                let mut out = match head {
                    Expr::Var(_) => head.clone(),
                    _ => self.ty(head)?,
                };
                for ((erased, a), l) in args.into_iter().zip(levels) {
                    let l = l.unwrap_or_else(|| self.ctx.level(a));
                    let a2 = match l {
                        Level::Term => self.term(a)?,
                        _ => self.ty(a)?,
                    };
                    out = Expr::App {
                        erased,
                        fun: Arc::new(out),
                        arg: Arc::new(a2),
                    };
                }
                out
            }
            _ => e.clone(),
        })
    }

    fn term(&mut self, e: &Expr) -> CheckResult<Expr> {
        if self.pure_mode {
            return self.term_pure(e);
        }
        if self.matches(e) {
            self.hits += 1;
            return Ok(self.rhs.clone());
        }
        Ok(match e {
            Expr::App { erased, fun, arg } => {
                let f = self.term(fun)?;
                let a = if *erased && self.ctx.level(arg) != Level::Term {
                    (**arg).clone()
                } else {
                    self.term(arg)?
                };
                Expr::App {
                    erased: *erased,
                    fun: Arc::new(f),
                    arg: Arc::new(a),
                }
            }
            Expr::Lam {
                erased,
                binder,
                domain,
                body,
            } => {
                let (x, b) = self.enter(binder, body, domain.as_ref());
                let b = self.term(&b);
                self.ctx.pop();
                Expr::Lam {
                    erased: *erased,
                    binder: x,
                    domain: domain.clone(),
                    body: Arc::new(b?),
                }
            }
            Expr::Pair(a, b) => Expr::Pair(Arc::new(self.term(a)?), Arc::new(self.term(b)?)),
            Expr::Proj(t, h) => Expr::Proj(Arc::new(self.term(t)?), *h),
            _ => e.clone(),
        })
    }

    fn matches(&self, e: &Expr) -> bool {
        if self.ctx.level(e) != Level::Term {
            return false;
        }
        // A term that does not normalize within fuel cannot be recognised.
        matches!(self.ctx.term_nf(e), Ok(nf) if nf == self.target)
    }

    fn term_pure(&mut self, e: &Expr) -> CheckResult<Expr> {
        let nf = self.ctx.term_nf(e)?;
        let before = self.hits;
        let replaced = self.replace(&nf);
        if self.hits == before {
            return Ok(e.clone());
        }
        Ok(self.reify(&replaced))
    }

    fn replace(&mut self, p: &PureTerm) -> PureTerm {
        if *p == self.target {
            self.hits += 1;
            return self.rhs_pure.clone().expect("set in pure mode");
        }
        match p {
            PureTerm::Lam(h, b) => PureTerm::Lam(h.clone(), Arc::new(self.replace(b))),
            PureTerm::App(f, a) => {
                PureTerm::App(Arc::new(self.replace(f)), Arc::new(self.replace(a)))
            }
            _ => p.clone(),
        }
    }

    fn reify(&self, p: &PureTerm) -> Expr {
        let free = p.free_vars();
        let mut names: Vec<Name> = Vec::new();
        self.reify_in(p, &free, &mut names)
    }

    fn reify_in(&self, p: &PureTerm, free: &BTreeSet<Name>, names: &mut Vec<Name>) -> Expr {
        match p {
            PureTerm::Free(x) => Expr::Var(x.clone()),
            PureTerm::Bound(i) => Expr::Var(names[names.len() - 1 - i].clone()),
            PureTerm::Lam(h, b) => {
                let x = crate::syntax::fresh_name(h, |c| {
                    free.contains(c) || names.iter().any(|n| &**n == c) || self.ctx.is_bound(c)
                });
                names.push(x.clone());
                let body = self.reify_in(b, free, names);
                names.pop();
                Expr::Lam {
                    erased: false,
                    binder: x,
                    domain: None,
                    body: Arc::new(body),
                }
            }
            PureTerm::App(f, a) => {
                Expr::app(self.reify_in(f, free, names), self.reify_in(a, free, names))
            }
        }
    }

    /// Unfolds type definitions at every type position.
    fn unfold_deep(&mut self, e: &Expr) -> CheckResult<Expr> {
        let w = self.ctx.whnf_type(e, true)?;
        Ok(match &w {
            Expr::Bind {
                quant,
                binder,
                domain,
                body,
            } => {
                let d = self.unfold_deep(domain)?;
                let (x, b) = self.enter(binder, body, Some(domain));
                let b = self.unfold_deep(&b);
                self.ctx.pop();
                Expr::bind(*quant, x, d, b?)
            }
            Expr::Lam {
                erased,
                binder,
                domain,
                body,
            } => {
                let (x, b) = self.enter(binder, body, domain.as_ref());
                let b = self.unfold_deep(&b);
                self.ctx.pop();
                Expr::Lam {
                    erased: *erased,
                    binder: x,
                    domain: domain.clone(),
                    body: Arc::new(b?),
                }
            }
            Expr::App { .. } => {
                let (head, args) = w.spine();
                let levels = match head {
                    Expr::Var(h) => self.ctx.arg_levels(h, args.len()),
                    _ => vec![None; args.len()],
                };
                let mut out = head.clone();
                for ((erased, a), l) in args.into_iter().zip(levels) {
                    let l = l.unwrap_or_else(|| self.ctx.level(a));
                    let a2 = match l {
                        Level::Term => (**a).clone(),
                        _ => self.unfold_deep(a)?,
                    };
                    out = Expr::App {
                        erased,
                        fun: Arc::new(out),
                        arg: Arc::new(a2),
                    };
                }
                out
            }
            _ => w,
        })
    }
}
