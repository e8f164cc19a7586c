//! Recursive-descent parser.
//!
//! ```text
//! module := ("import" ident ".")* def*
//! def    := ident ◂ expr ("=" expr)? "."
//! expr   := (λ|Λ) binders "." expr
//!         | (Π|∀|ι) ident ("," ident)* ":" expr "." expr
//!         | ρ ("<" ident "." expr ">")? app "-" expr
//!         | φ app "-" app "{" expr "}"
//!         | arrow
//! arrow  := eq ((➔|➾) arrow)?
//! eq     := app ("≃" app)?
//! app    := atom (atom | "-" atom | "·" atom)*
//! atom   := (ident | ★ | β | "(" expr ")" | "[" expr "," expr "]" | ς atom) (".1"|".2")*
//! ```

use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use crate::syntax::{name, Expr, Guide, Half, Name, Quant};

use super::lexer::{lex, Span, Tok, Token};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub span: Span,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: expected {}, found {}",
            self.span.line,
            self.span.col,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub struct Definition {
    pub name: Name,
    pub classifier: Expr,
    /// `None` for a postulated constant `name ◂ C.`
    pub body: Option<Expr>,
    pub span: Span,
}

#[derive(Clone, Debug, Default)]
pub struct SourceModule {
    pub path: Option<PathBuf>,
    pub imports: Vec<Name>,
    pub defs: Vec<Definition>,
}

pub fn parse_module(src: &str) -> Result<SourceModule, ParseError> {
    let mut p = Parser::new(src)?;
    let mut module = SourceModule::default();
    while p.at(Tok::Import) {
        p.bump();
        module.imports.push(p.ident()?);
        p.expect(Tok::Dot)?;
    }
    let mut seen = HashSet::new();
    while !p.at(Tok::Eof) {
        let start = p.peek().span;
        let def_name = p.ident()?;
        if !seen.insert(def_name.clone()) {
            return Err(ParseError {
                span: start,
                expected: vec!["a fresh definition name".into()],
                found: format!("duplicate '{def_name}'"),
            });
        }
        p.expect(Tok::Classify)?;
        let classifier = p.expr()?;
        let body = if p.eat(Tok::Assign) {
            Some(p.expr()?)
        } else {
            None
        };
        let end = p.expect_any(&[Tok::Dot], body.is_none().then_some(Tok::Assign))?;
        module.defs.push(Definition {
            name: def_name,
            classifier,
            body,
            span: Span {
                end: end.end,
                ..start
            },
        });
    }
    Ok(module)
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.expect(Tok::Eof)?;
    Ok(e)
}

struct Parser<'a> {
    toks: Vec<Token<'a>>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, ParseError> {
        let toks = lex(src).map_err(|e| ParseError {
            span: e.span,
            expected: vec!["a token".into()],
            found: format!("'{}'", e.found),
        })?;
        Ok(Parser { toks, pos: 0 })
    }

    fn peek(&self) -> &Token<'a> {
        &self.toks[self.pos]
    }

    fn at(&self, k: Tok) -> bool {
        self.peek().kind == k
    }

    fn bump(&mut self) -> Span {
        let span = self.peek().span;
        if !self.at(Tok::Eof) {
            self.pos += 1;
        }
        span
    }

    fn eat(&mut self, k: Tok) -> bool {
        let hit = self.at(k);
        if hit {
            self.bump();
        }
        hit
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = self.peek();
        ParseError {
            span: t.span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: match t.kind {
                Tok::Eof => "end of input".into(),
                _ => format!("'{}'", t.lexeme),
            },
        }
    }

    fn expect(&mut self, k: Tok) -> Result<Span, ParseError> {
        self.expect_any(&[k], None)
    }

    fn expect_any(&mut self, ks: &[Tok], also: Option<Tok>) -> Result<Span, ParseError> {
        if ks.contains(&self.peek().kind) {
            return Ok(self.bump());
        }
        let names: Vec<&str> = ks.iter().chain(also.iter()).map(|k| k.describe()).collect();
        Err(self.error(&names))
    }

    fn ident(&mut self) -> Result<Name, ParseError> {
        if self.at(Tok::Ident) {
            let n = name(self.peek().lexeme);
            self.bump();
            Ok(n)
        } else {
            Err(self.error(&[Tok::Ident.describe()]))
        }
    }

    fn idents(&mut self) -> Result<Vec<Name>, ParseError> {
        let mut xs = vec![self.ident()?];
        while self.eat(Tok::Comma) {
            xs.push(self.ident()?);
        }
        Ok(xs)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        match self.peek().kind {
            Tok::Lambda | Tok::BigLambda => {
                let erased = self.at(Tok::BigLambda);
                self.bump();
                let binders = self.idents()?;
                let domain = if self.eat(Tok::Colon) {
                    Some(Arc::new(self.expr()?))
                } else {
                    None
                };
                self.expect(Tok::Dot)?;
                let body = self.expr()?;
                Ok(binders.into_iter().rev().fold(body, |b, x| Expr::Lam {
                    erased,
                    binder: x,
                    domain: domain.clone(),
                    body: Arc::new(b),
                }))
            }
            Tok::Pi | Tok::All | Tok::Iota => {
                let quant = match self.peek().kind {
                    Tok::Pi => Quant::Pi,
                    Tok::All => Quant::Forall,
                    _ => Quant::Iota,
                };
                self.bump();
                let binders = self.idents()?;
                self.expect(Tok::Colon)?;
                let domain = self.expr()?;
                self.expect(Tok::Dot)?;
                let body = self.expr()?;
                Ok(binders
                    .into_iter()
                    .rev()
                    .fold(body, |b, x| Expr::bind(quant, x, domain.clone(), b)))
            }
            Tok::Rho => {
                self.bump();
                let guide = if self.eat(Tok::LAngle) {
                    let hole = self.ident()?;
                    self.expect(Tok::Dot)?;
                    let template = Arc::new(self.expr()?);
                    self.expect(Tok::RAngle)?;
                    Some(Guide { hole, template })
                } else {
                    None
                };
                let proof = Arc::new(self.app()?);
                self.expect(Tok::Dash)?;
                let body = Arc::new(self.expr()?);
                Ok(Expr::Rho { guide, proof, body })
            }
            Tok::Phi => {
                self.bump();
                let proof = Arc::new(self.app()?);
                self.expect(Tok::Dash)?;
                let source = Arc::new(self.app()?);
                self.expect(Tok::LBrace)?;
                let target = Arc::new(self.expr()?);
                self.expect(Tok::RBrace)?;
                Ok(Expr::Phi {
                    proof,
                    source,
                    target,
                })
            }
            _ => self.arrow(),
        }
    }

    fn arrow(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.eq()?;
        let quant = match self.peek().kind {
            Tok::Arrow => Quant::Pi,
            Tok::ErasedArrow => Quant::Forall,
            _ => return Ok(lhs),
        };
        self.bump();
        let rhs = self.arrow_rhs()?;
        Ok(Expr::bind(quant, name("_"), lhs, rhs))
    }

    /// The codomain of an arrow may itself be a binder form.
    fn arrow_rhs(&mut self) -> Result<Expr, ParseError> {
        match self.peek().kind {
            Tok::Lambda | Tok::BigLambda | Tok::Pi | Tok::All | Tok::Iota | Tok::Rho | Tok::Phi => {
                self.expr()
            }
            _ => self.arrow(),
        }
    }

    fn eq(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.app()?;
        if self.eat(Tok::Equiv) {
            let rhs = self.app()?;
            return Ok(Expr::eq(lhs, rhs));
        }
        Ok(lhs)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek().kind,
            Tok::Ident | Tok::Star | Tok::Beta | Tok::LParen | Tok::LBracket | Tok::Sym
        )
    }

    fn app(&mut self) -> Result<Expr, ParseError> {
        let mut head = self.atom()?;
        loop {
            let erased = match self.peek().kind {
                Tok::Minus => true,
                Tok::Centerdot => false,
                _ if self.starts_atom() => {
                    let arg = self.atom()?;
                    head = Expr::app(head, arg);
                    continue;
                }
                _ => return Ok(head),
            };
            self.bump();
            let arg = self.atom()?;
            head = if erased {
                Expr::app_erased(head, arg)
            } else {
                Expr::app(head, arg)
            };
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let mut e = match self.peek().kind {
            Tok::Ident => Expr::Var(self.ident()?),
            Tok::Star => {
                self.bump();
                Expr::Star
            }
            Tok::Beta => {
                self.bump();
                Expr::Beta
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                e
            }
            Tok::LBracket => {
                self.bump();
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBracket)?;
                Expr::Pair(Arc::new(a), Arc::new(b))
            }
            Tok::Sym => {
                self.bump();
                return Ok(Expr::Sym(Arc::new(self.atom()?)));
            }
            _ => return Err(self.error(&["identifier", "'★'", "'β'", "'('", "'['", "'ς'"])),
        };
        loop {
            let half = match self.peek().kind {
                Tok::Fst => Half::First,
                Tok::Snd => Half::Second,
                _ => return Ok(e),
            };
            self.bump();
            e = Expr::Proj(Arc::new(e), half);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_block_parses() {
        let src = "List ◂ ★ ➔ ★ = λ A. ∀ X : ★. X ➔ (A ➔ X ➔ X) ➔ X.\n\
                   nilL ◂ ∀ A : ★. List A = Λ A,X. λ cN,cC. cN.\n\
                   consL ◂ ∀ A : ★. A ➔ List A ➔ List A\n  = Λ A. λ x,xs. Λ X. λ cN,cC. cC x (xs -X cN cC).";
        let m = parse_module(src).unwrap();
        assert_eq!(m.defs.len(), 3);
        assert_eq!(&*m.defs[2].name, "consL");
    }

    #[test]
    fn missing_terminator_reports_end_of_input() {
        let err = parse_module("x ◂ T = λ y. y").unwrap_err();
        assert_eq!(err.found, "end of input");
        assert!(err.expected.iter().any(|e| e == "'.'"));
    }

    #[test]
    fn arrows_associate_right_and_bind_loosest() {
        let e = parse_expr("A ➔ B ➾ C").unwrap();
        let expect = Expr::arrow(
            Expr::var("A"),
            Expr::bind(Quant::Forall, name("_"), Expr::var("B"), Expr::var("C")),
        );
        assert_eq!(e, expect);
        let e = parse_expr("f x ≃ g -y").unwrap();
        assert!(matches!(e, Expr::Eq(..)));
    }

    #[test]
    fn rho_with_guide_and_phi() {
        let e = parse_expr("ρ<z. consC x z ≃ consC x c> ih - β").unwrap();
        assert!(matches!(e, Expr::Rho { guide: Some(_), .. }));
        let e = parse_expr("φ (q -A) - (v2l xs) {xs}").unwrap();
        assert!(matches!(e, Expr::Phi { .. }));
    }

    #[test]
    fn projections_and_sym() {
        let e = parse_expr("ς (reflect xs).1").unwrap();
        match e {
            Expr::Sym(inner) => assert!(matches!(*inner, Expr::Proj(_, Half::First))),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(parse_module("a ◂ ★. a ◂ ★.").is_err());
    }
}
