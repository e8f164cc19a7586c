//! Bidirectional rules. Introductions check, eliminations infer; the mode
//! switch goes through conversion.

use std::sync::Arc;

use crate::syntax::{Expr, Guide, Half, Name, Quant};

use super::context::{Context, Level};
use super::error::{CheckResult, ErrorCode, TypeError};
use super::rewrite::rho_rewrite;

fn star() -> Expr {
    Expr::Star
}

impl Context {
    /// Checks that `k` is a well-formed kind.
    pub fn check_kind(&mut self, k: &Expr) -> CheckResult<()> {
        match k {
            Expr::Star => Ok(()),
            Expr::Bind {
                quant: Quant::Pi,
                binder,
                domain,
                body,
            } => {
                self.check_classifier(domain)?;
                self.scoped(binder, body, (**domain).clone(), |ctx, b| ctx.check_kind(b))
            }
            other => Err(TypeError::mismatch(
                ErrorCode::KindMismatch,
                "expected a kind (★ or a Π-chain ending in ★)",
                "a kind",
                other,
            )),
        }
    }

    /// A classifier is a kind or a type of kind ★.
    pub fn check_classifier(&mut self, c: &Expr) -> CheckResult<()> {
        if c.is_kind() {
            self.check_kind(c)
        } else {
            self.check(c, &star())
        }
    }

    /// Runs `f` on `body` with `binder : domain` pushed, renaming the binder
    /// apart from everything in scope.
    fn scoped<T>(
        &mut self,
        binder: &Name,
        body: &Expr,
        domain: Expr,
        f: impl FnOnce(&mut Self, &Expr) -> CheckResult<T>,
    ) -> CheckResult<T> {
        let (x, b) = self.freshen(binder, body);
        self.push_typed(x, domain);
        let r = f(self, &b);
        self.pop();
        r
    }

    fn freshen(&self, binder: &Name, body: &Expr) -> (Name, Expr) {
        if !self.is_bound(binder) {
            return (binder.clone(), body.clone());
        }
        let x = self.fresh(binder, &body.free_vars());
        let b = body.rename(binder, &x);
        (x, b)
    }

    pub fn infer(&mut self, e: &Expr) -> CheckResult<Expr> {
        match e {
            Expr::Var(x) => match self.lookup(x) {
                Some((Some(c), _)) => Ok(c.clone()),
                _ => Err(TypeError::new(
                    ErrorCode::UnboundName,
                    format!("unbound name '{x}'"),
                )),
            },
            Expr::Star => Err(TypeError::new(
                ErrorCode::KindMismatch,
                "★ has no classifier",
            )),
            Expr::Bind { .. } if e.is_kind() => Err(TypeError::new(
                ErrorCode::KindMismatch,
                format!("the kind {e} has no classifier"),
            )),
            Expr::Bind {
                quant,
                binder,
                domain,
                body,
            } => {
                if domain.is_kind() {
                    if *quant == Quant::Iota {
                        return Err(TypeError::mismatch(
                            ErrorCode::KindMismatch,
                            "the domain of an intersection must be a type",
                            "a type",
                            domain,
                        ));
                    }
                    self.check_kind(domain)?;
                } else {
                    self.check(domain, &star())?;
                }
                self.scoped(binder, body, (**domain).clone(), |ctx, b| {
                    ctx.check(b, &star())
                })?;
                Ok(star())
            }
            Expr::Eq(a, b) => {
                for side in [a, b] {
                    self.infer_side(side)?;
                }
                Ok(star())
            }
            Expr::Lam {
                erased,
                binder,
                domain: Some(domain),
                body,
            } => {
                self.check_classifier(domain)?;
                let (x, b) = self.freshen(binder, body);
                if *erased {
                    self.erased_side_condition(&x, &b)?;
                }
                self.push_typed(x.clone(), (**domain).clone());
                let cod = self.infer(&b);
                self.pop();
                let quant = if *erased { Quant::Forall } else { Quant::Pi };
                Ok(Expr::bind(quant, x, (**domain).clone(), cod?))
            }
            Expr::App { erased, fun, arg } => {
                let ft = self.infer(fun)?;
                let w = self.whnf_type(&ft, true)?;
                match &w {
                    Expr::Bind {
                        quant,
                        binder,
                        domain,
                        body,
                    } if (*quant == Quant::Pi && !erased)
                        || (*quant == Quant::Forall && *erased) =>
                    {
                        self.check(arg, domain)?;
                        Ok(body.subst(binder, arg))
                    }
                    _ => Err(TypeError::mismatch(
                        ErrorCode::NotAFunction,
                        if *erased {
                            "erased application of something that is not an implicit product"
                        } else {
                            "application of something that is not a Π"
                        },
                        if *erased {
                            "∀ x : T. T'"
                        } else {
                            "Π x : T. T'"
                        },
                        &w,
                    )),
                }
            }
            Expr::Rho { guide, proof, body } => {
                let (lhs, rhs) = self.infer_equation(proof)?;
                let s = self.infer(body)?;
                match guide {
                    Some(g) => {
                        let from = instantiate(g, &lhs);
                        self.expect_conv(&from, &s)?;
                        Ok(instantiate(g, &rhs))
                    }
                    None => rho_rewrite(self, &lhs, &rhs, &s),
                }
            }
            Expr::Phi {
                proof,
                source,
                target,
            } => {
                let t = self.infer(source)?;
                self.check_phi_parts(proof, source, target)?;
                Ok(t)
            }
            Expr::Sym(q) => {
                let (lhs, rhs) = self.infer_equation(q)?;
                Ok(Expr::eq(rhs, lhs))
            }
            Expr::Proj(t, half) => {
                let ty = self.infer(t)?;
                match self.whnf_type(&ty, true)? {
                    Expr::Bind {
                        quant: Quant::Iota,
                        binder,
                        domain,
                        body,
                    } => Ok(match half {
                        Half::First => (*domain).clone(),
                        Half::Second => body.subst(&binder, &Expr::Proj(t.clone(), Half::First)),
                    }),
                    other => Err(TypeError::mismatch(
                        ErrorCode::NotAnIntersection,
                        "projection from a term whose type is not an intersection",
                        "ι x : T. T'",
                        other,
                    )),
                }
            }
            Expr::Beta | Expr::Pair(..) | Expr::Lam { domain: None, .. } => Err(TypeError::new(
                ErrorCode::TypeMismatch,
                format!("cannot infer a type for '{e}'; add an annotation"),
            )),
        }
    }
}

fn instantiate(g: &Guide, t: &Expr) -> Expr {
    g.template.subst(&g.hole, t)
}

impl Context {
    pub fn check(&mut self, e: &Expr, expected: &Expr) -> CheckResult<()> {
        match e {
            Expr::Lam {
                erased,
                binder,
                domain,
                body,
            } => {
                let w = self.whnf_type(expected, true)?;
                let want = if *erased { Quant::Forall } else { Quant::Pi };
                let Expr::Bind {
                    quant,
                    binder: y,
                    domain: dom,
                    body: cod,
                } = &w
                else {
                    return Err(self.mismatch(e, expected, &w));
                };
                if *quant != want {
                    return Err(self.mismatch(e, expected, &w));
                }
                if let Some(d) = domain {
                    self.check_classifier(d)?;
                    if !self.conv(d, dom)? {
                        return Err(TypeError::mismatch(
                            ErrorCode::TypeMismatch,
                            format!("annotation on '{binder}' disagrees with the expected domain"),
                            dom,
                            d,
                        ));
                    }
                }
                let mut avoid = body.free_vars();
                avoid.extend(cod.free_vars());
                let x = if self.is_bound(binder) || (binder != y && cod.occurs_free(binder)) {
                    self.fresh(binder, &avoid)
                } else {
                    binder.clone()
                };
                let b = body.rename(binder, &x);
                let c = cod.rename(y, &x);
                if *erased {
                    self.erased_side_condition(&x, &b)?;
                }
                self.push_typed(x, (**dom).clone());
                let r = self.check(&b, &c);
                self.pop();
                r
            }
            Expr::Pair(first, second) => {
                let w = self.whnf_type(expected, true)?;
                let Expr::Bind {
                    quant: Quant::Iota,
                    binder,
                    domain,
                    body,
                } = &w
                else {
                    return Err(self.mismatch(e, expected, &w));
                };
                if !self.term_eq(first, second)? {
                    return Err(TypeError::mismatch(
                        ErrorCode::IntersectionErasureMismatch,
                        "the components of an intersection must have the same erasure",
                        self.unfolded_erasure(first),
                        self.unfolded_erasure(second),
                    ));
                }
                self.check(first, domain)?;
                self.check(second, &body.subst(binder, first))
            }
            Expr::Beta => {
                let w = self.whnf_type(expected, true)?;
                let Expr::Eq(lhs, rhs) = &w else {
                    return Err(self.mismatch(e, expected, &w));
                };
                for side in [lhs, rhs] {
                    self.scope_check(side)?;
                }
                if self.term_eq(lhs, rhs)? {
                    Ok(())
                } else {
                    Err(TypeError::mismatch(
                        ErrorCode::TypeMismatch,
                        "β needs both sides of the equation to be βη-equal",
                        self.term_nf(lhs)?,
                        self.term_nf(rhs)?,
                    ))
                }
            }
            Expr::Rho { guide, proof, body } => {
                let (lhs, rhs) = self.infer_equation(proof)?;
                let goal = match guide {
                    Some(g) => {
                        let from = instantiate(g, &lhs);
                        self.expect_conv(expected, &from)?;
                        instantiate(g, &rhs)
                    }
                    None => rho_rewrite(self, &lhs, &rhs, expected)?,
                };
                self.check(body, &goal)
            }
            Expr::Phi {
                proof,
                source,
                target,
            } => {
                self.check(source, expected)?;
                self.check_phi_parts(proof, source, target)
            }
            Expr::Sym(q) => {
                let w = self.whnf_type(expected, true)?;
                let Expr::Eq(lhs, rhs) = &w else {
                    return Err(self.mismatch(e, expected, &w));
                };
                self.check(q, &Expr::Eq(rhs.clone(), lhs.clone()))
            }
            _ => {
                let actual = self.infer(e)?;
                self.expect_conv(expected, &actual)
            }
        }
    }

    fn mismatch(&self, e: &Expr, expected: &Expr, actual_shape: &Expr) -> TypeError {
        TypeError::mismatch(
            ErrorCode::TypeMismatch,
            format!("'{e}' cannot have this type"),
            expected,
            actual_shape,
        )
    }

    fn expect_conv(&mut self, expected: &Expr, actual: &Expr) -> CheckResult<()> {
        if self.conv(expected, actual)? {
            return Ok(());
        }
        let code = if expected.is_kind() || actual.is_kind() {
            ErrorCode::KindMismatch
        } else {
            ErrorCode::TypeMismatch
        };
        Err(TypeError::mismatch(
            code,
            "classifiers are not convertible",
            expected,
            actual,
        ))
    }

    /// `Λ x. t` requires `x ∉ FV(|t|)`.
    fn erased_side_condition(&self, x: &Name, body: &Expr) -> CheckResult<()> {
        if crate::erasure::erase(body).free_vars().contains(x) {
            return Err(TypeError::new(
                ErrorCode::ErasedVarOccursFree,
                format!("erased variable '{x}' occurs in the erasure of the body"),
            ));
        }
        Ok(())
    }

    /// Equation sides must be typeable terms.
    fn infer_side(&mut self, side: &Expr) -> CheckResult<()> {
        if self.level(side) != Level::Term {
            return Err(TypeError::new(
                ErrorCode::EqSidesUntypeable,
                format!("'{side}' is not a term"),
            ));
        }
        match self.infer(side) {
            Ok(_) => Ok(()),
            Err(err) if matches!(err.code, ErrorCode::FuelExhausted | ErrorCode::UnboundName) => {
                Err(err)
            }
            Err(err) => Err(TypeError::new(
                ErrorCode::EqSidesUntypeable,
                format!("cannot type the equation side '{side}': {}", err.message),
            )),
        }
    }

    /// Every free name must be declared.
    fn scope_check(&self, e: &Expr) -> CheckResult<()> {
        match e.free_vars().into_iter().find(|x| !self.is_bound(x)) {
            Some(x) => Err(TypeError::new(
                ErrorCode::UnboundName,
                format!("unbound name '{x}'"),
            )),
            None => Ok(()),
        }
    }

    fn infer_equation(&mut self, q: &Expr) -> CheckResult<(Expr, Expr)> {
        let ty = self.infer(q)?;
        match self.whnf_type(&ty, true)? {
            Expr::Eq(lhs, rhs) => Ok(((*lhs).clone(), (*rhs).clone())),
            other => Err(TypeError::mismatch(
                ErrorCode::TypeMismatch,
                "expected a proof of an equation",
                "t₁ ≃ t₂",
                other,
            )),
        }
    }

    /// `q : t₁ ≃ t₂` and `t₂` typeable.
    fn check_phi_parts(&mut self, proof: &Expr, source: &Expr, target: &Expr) -> CheckResult<()> {
        let want = Expr::Eq(Arc::new(source.clone()), Arc::new(target.clone()));
        match self.check(proof, &want) {
            Ok(()) => {}
            Err(err) if err.code == ErrorCode::TypeMismatch => {
                return Err(TypeError {
                    code: ErrorCode::PhiEqMismatch,
                    message: format!("φ proof does not equate '{source}' and '{target}'"),
                    ..err
                })
            }
            Err(err) => return Err(err),
        }
        self.infer(target).map(|_| ())
    }
}
