//! Definitional equality.
//!
//! Terms are equal when their unfolded erasures are βη-equal. Types are
//! compared structurally after type-level β and on-demand δ; embedded terms
//! inside types fall back to the term rule. No type-level η.

use std::sync::Arc;

use crate::pure::PureTerm;
use crate::reduction::{beta_eta_eq, normalize, FuelExhausted};
use crate::syntax::{Expr, Name};

use super::context::{Context, Level};
use super::error::CheckResult;

impl Context {
    pub fn term_eq(&self, a: &Expr, b: &Expr) -> CheckResult<bool> {
        if a == b {
            return Ok(true);
        }
        let ea = self.unfolded_erasure(a);
        let eb = self.unfolded_erasure(b);
        Ok(beta_eta_eq(&ea, &eb, self.fuel())?)
    }

    pub fn term_nf(&self, a: &Expr) -> Result<PureTerm, FuelExhausted> {
        normalize(&self.unfolded_erasure(a), self.fuel()).into_result()
    }

    /// Contracts type-level redexes at the head; with `delta`, also unfolds
    /// type definitions at the head.
    pub fn whnf_type(&self, e: &Expr, delta: bool) -> CheckResult<Expr> {
        let mut cur = e.clone();
        let mut steps = 0u64;
        loop {
            let (head, args) = cur.spine();
            let next = match head {
                Expr::Lam { binder, body, .. } if !args.is_empty() => {
                    let reduced = body.subst(binder, args[0].1);
                    rebuild(reduced, &args[1..])
                }
                Expr::Var(x) if delta && !self.is_local(x) => match self.global(x) {
                    Some(g) if g.level == Level::Type => match &g.body {
                        Some(body) => rebuild(body.clone(), &args),
                        None => return Ok(cur),
                    },
                    _ => return Ok(cur),
                },
                _ => return Ok(cur),
            };
            steps += 1;
            if steps > self.fuel().max_steps() {
                return Err(FuelExhausted { steps }.into());
            }
            cur = next;
        }
    }

    /// Definitional equality of two classifiers (or of two terms).
    pub fn conv(&mut self, a: &Expr, b: &Expr) -> CheckResult<bool> {
        if a == b {
            return Ok(true);
        }
        match (self.level(a), self.level(b)) {
            (Level::Term, Level::Term) => self.term_eq(a, b),
            (Level::Term, _) | (_, Level::Term) => Ok(false),
            _ => self.conv_type(a, b),
        }
    }

    fn conv_type(&mut self, a: &Expr, b: &Expr) -> CheckResult<bool> {
        let wa = self.whnf_type(a, false)?;
        let wb = self.whnf_type(b, false)?;
        if let Some(true) = self.same_head_args(&wa, &wb)? {
            return Ok(true);
        }
        let wa = self.whnf_type(&wa, true)?;
        let wb = self.whnf_type(&wb, true)?;
        self.conv_struct(&wa, &wb)
    }

    /// `Some(r)` when both sides are applications of the same variable with
    /// matching arity; `r` compares the arguments.
    fn same_head_args(&mut self, a: &Expr, b: &Expr) -> CheckResult<Option<bool>> {
        let (ha, xs) = a.spine();
        let (hb, ys) = b.spine();
        match (ha, hb) {
            (Expr::Var(x), Expr::Var(y)) if x == y && xs.len() == ys.len() => {
                if xs.iter().zip(&ys).any(|(p, q)| p.0 != q.0) {
                    return Ok(Some(false));
                }
                let levels = self.arg_levels(x, xs.len());
                for (i, ((_, p), (_, q))) in xs.iter().zip(&ys).enumerate() {
                    let level = levels[i].unwrap_or_else(|| self.level(p));
                    let ok = match level {
                        Level::Term => self.term_eq(p, q)?,
                        _ => self.conv(p, q)?,
                    };
                    if !ok {
                        return Ok(Some(false));
                    }
                }
                Ok(Some(true))
            }
            _ => Ok(None),
        }
    }

    /// Levels of the first `n` arguments of `head`, read off its classifier.
    pub fn arg_levels(&self, head: &str, n: usize) -> Vec<Option<Level>> {
        let mut out = Vec::with_capacity(n);
        let mut cls = self.lookup(head).and_then(|(c, _)| c.cloned());
        for _ in 0..n {
            match cls {
                Some(Expr::Bind { domain, body, .. }) => {
                    out.push(Some(Level::of_classified(&domain)));
                    cls = Some((*body).clone());
                }
                _ => {
                    out.push(None);
                    cls = None;
                }
            }
        }
        out
    }

    fn conv_struct(&mut self, a: &Expr, b: &Expr) -> CheckResult<bool> {
        match (a, b) {
            (Expr::Star, Expr::Star) => Ok(true),
            (Expr::Var(x), Expr::Var(y)) => Ok(x == y),
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
            ) => {
                if q1 != q2 || !self.conv(d1, d2)? {
                    return Ok(false);
                }
                self.under_common_binder(x1, b1, x2, b2, Some((**d1).clone()))
            }
            (
                Expr::Lam {
                    binder: x1,
                    domain: d1,
                    body: b1,
                    ..
                },
                Expr::Lam {
                    binder: x2,
                    domain: d2,
                    body: b2,
                    ..
                },
            ) => {
                let dom = d1.as_ref().or(d2.as_ref()).map(|d| (**d).clone());
                self.under_common_binder(x1, b1, x2, b2, dom)
            }
            (Expr::Eq(l1, r1), Expr::Eq(l2, r2)) => {
                Ok(self.term_eq(l1, l2)? && self.term_eq(r1, r2)?)
            }
            (Expr::App { .. }, Expr::App { .. }) => Ok(self.same_head_args(a, b)?.unwrap_or(false)),
            _ => Ok(false),
        }
    }

    fn under_common_binder(
        &mut self,
        x1: &Name,
        b1: &Arc<Expr>,
        x2: &Name,
        b2: &Arc<Expr>,
        domain: Option<Expr>,
    ) -> CheckResult<bool> {
        let mut avoid = b1.free_vars();
        avoid.extend(b2.free_vars());
        let x = self.fresh(x1, &avoid);
        let level = match &domain {
            Some(d) => Level::of_classified(d),
            None => Level::Term,
        };
        self.push(x.clone(), domain, level);
        let r = self.conv(&b1.rename(x1, &x), &b2.rename(x2, &x));
        self.pop();
        r
    }
}

pub(crate) fn rebuild(head: Expr, args: &[(bool, &Arc<Expr>)]) -> Expr {
    args.iter().fold(head, |f, (erased, a)| Expr::App {
        erased: *erased,
        fun: Arc::new(f),
        arg: Arc::clone(a),
    })
}
