//! Deterministic printer whose output re-parses to an α-equal value.

use crate::syntax::{Expr, Half, Quant};

use super::parser::SourceModule;

// Precedence levels, loosest first.
const BINDER: u8 = 0;
const ARROW: u8 = 1;
const EQ: u8 = 2;
const APP: u8 = 3;
const ARG: u8 = 4;
const ATOM: u8 = 5;

pub fn pretty_expr(e: &Expr) -> String {
    let mut out = String::new();
    write(e, BINDER, &mut out);
    out
}

pub fn pretty_module(m: &SourceModule) -> String {
    let mut out = String::new();
    for i in &m.imports {
        out.push_str(&format!("import {i}.\n"));
    }
    if !m.imports.is_empty() {
        out.push('\n');
    }
    for d in &m.defs {
        out.push_str(&d.name);
        out.push_str(" ◂ ");
        write(&d.classifier, BINDER, &mut out);
        if let Some(body) = &d.body {
            out.push_str("\n  = ");
            write(body, BINDER, &mut out);
        }
        out.push_str(".\n\n");
    }
    out
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Var(_) | Expr::Star | Expr::Beta | Expr::Pair(..) | Expr::Proj(..) => ATOM,
        Expr::Sym(_) => ARG,
        Expr::App { .. } => APP,
        Expr::Eq(..) => EQ,
        Expr::Bind {
            quant: Quant::Pi | Quant::Forall,
            binder,
            body,
            ..
        } if !body.occurs_free(binder) => ARROW,
        Expr::Bind { .. } | Expr::Lam { .. } | Expr::Rho { .. } | Expr::Phi { .. } => BINDER,
    }
}

fn write(e: &Expr, min: u8, out: &mut String) {
    if level(e) < min {
        out.push('(');
        write(e, BINDER, out);
        out.push(')');
        return;
    }
    match e {
        Expr::Var(x) => out.push_str(x),
        Expr::Star => out.push('★'),
        Expr::Beta => out.push('β'),
        Expr::Pair(a, b) => {
            out.push('[');
            write(a, BINDER, out);
            out.push_str(", ");
            write(b, BINDER, out);
            out.push(']');
        }
        Expr::Proj(t, h) => {
            write(t, ATOM, out);
            out.push_str(match h {
                Half::First => ".1",
                Half::Second => ".2",
            });
        }
        Expr::Sym(q) => {
            out.push_str("ς ");
            write(q, ARG, out);
        }
        Expr::App { erased, fun, arg } => {
            write(fun, APP, out);
            out.push_str(if *erased { " -" } else { " " });
            write(arg, ARG, out);
        }
        Expr::Eq(a, b) => {
            write(a, APP, out);
            out.push_str(" ≃ ");
            write(b, APP, out);
        }
        Expr::Bind {
            quant,
            binder,
            domain,
            body,
        } => {
            if level(e) == ARROW {
                write(domain, EQ, out);
                out.push_str(if *quant == Quant::Pi {
                    " ➔ "
                } else {
                    " ➾ "
                });
                write(body, BINDER, out);
            } else {
                out.push_str(match quant {
                    Quant::Pi => "Π ",
                    Quant::Forall => "∀ ",
                    Quant::Iota => "ι ",
                });
                out.push_str(binder);
                out.push_str(" : ");
                write(domain, ARROW, out);
                out.push_str(". ");
                write(body, BINDER, out);
            }
        }
        Expr::Lam {
            erased,
            binder,
            domain: Some(domain),
            body,
        } => {
            out.push_str(if *erased { "Λ " } else { "λ " });
            out.push_str(binder);
            out.push_str(" : ");
            write(domain, ARROW, out);
            out.push_str(". ");
            write(body, BINDER, out);
        }
        Expr::Lam {
            erased,
            binder,
            domain: None,
            body,
        } => {
            out.push_str(if *erased { "Λ " } else { "λ " });
            out.push_str(binder);
            let mut body = body;
            while let Expr::Lam {
                erased: e2,
                binder: b2,
                domain: None,
                body: inner,
            } = &**body
            {
                if e2 != erased {
                    break;
                }
                out.push_str(", ");
                out.push_str(b2);
                body = inner;
            }
            out.push_str(". ");
            write(body, BINDER, out);
        }
        Expr::Rho { guide, proof, body } => {
            out.push('ρ');
            if let Some(g) = guide {
                out.push('<');
                out.push_str(&g.hole);
                out.push_str(". ");
                write(&g.template, BINDER, out);
                out.push('>');
            }
            out.push(' ');
            write(proof, APP, out);
            out.push_str(" - ");
            write(body, BINDER, out);
        }
        Expr::Phi {
            proof,
            source,
            target,
        } => {
            out.push_str("φ ");
            write(proof, APP, out);
            out.push_str(" - ");
            write(source, APP, out);
            out.push_str(" {");
            write(target, BINDER, out);
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::parse_expr;
    use crate::syntax::name;

    #[test]
    fn identity_prints_plainly() {
        assert_eq!(pretty_expr(&Expr::lam("x", Expr::var("x"))), "λ x. x");
    }

    #[test]
    fn non_dependent_forall_resugars() {
        let e = Expr::bind(Quant::Forall, name("_"), Expr::var("P"), Expr::var("T"));
        assert_eq!(pretty_expr(&e), "P ➾ T");
    }

    #[test]
    fn multi_binders_grouped() {
        let e = parse_expr("Λ A, X. λ cN, cC. cN").unwrap();
        assert_eq!(pretty_expr(&e), "Λ A, X. λ cN, cC. cN");
    }

    #[test]
    fn round_trips() {
        for src in [
            "∀ A : ★. Π n : Nat. Vec A n ➔ List A",
            "(A ➔ B) ➔ C",
            "ρ<z. consC x z ≃ consC x c> ih - β",
            "φ (q -A) - v2l xs {xs}",
            "ς (f x).1 y",
            "f (λ x. x) -(g y) [a, b].2",
            "(ρ q - t) x",
            "A ➔ λ x. x",
        ] {
            let e = parse_expr(src).unwrap();
            let printed = pretty_expr(&e);
            assert_eq!(parse_expr(&printed).unwrap(), e, "{src} / {printed}");
        }
    }
}
