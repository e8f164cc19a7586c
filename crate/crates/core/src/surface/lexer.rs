//! Tokenizer. Every symbol has a Unicode spelling and one ASCII alias; both
//! lex to the same token kind.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tok {
    Ident,
    Star,
    Pi,
    All,
    Lambda,
    BigLambda,
    Iota,
    Arrow,
    ErasedArrow,
    Equiv,
    Classify,
    Rho,
    Phi,
    Beta,
    Sym,
    Dot,
    /// `.1`
    Fst,
    /// `.2`
    Snd,
    Colon,
    Comma,
    Assign,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LAngle,
    RAngle,
    /// `-` followed by whitespace: the separator in `ρ q - t` and `φ q - a {b}`.
    Dash,
    /// `-` glued to the next token: erased application.
    Minus,
    /// `·`: explicit application written with a marker.
    Centerdot,
    Import,
    Eof,
}

impl Tok {
    pub fn describe(self) -> &'static str {
        match self {
            Tok::Ident => "identifier",
            Tok::Star => "'★'",
            Tok::Pi => "'Π'",
            Tok::All => "'∀'",
            Tok::Lambda => "'λ'",
            Tok::BigLambda => "'Λ'",
            Tok::Iota => "'ι'",
            Tok::Arrow => "'➔'",
            Tok::ErasedArrow => "'➾'",
            Tok::Equiv => "'≃'",
            Tok::Classify => "'◂'",
            Tok::Rho => "'ρ'",
            Tok::Phi => "'φ'",
            Tok::Beta => "'β'",
            Tok::Sym => "'ς'",
            Tok::Dot => "'.'",
            Tok::Fst => "'.1'",
            Tok::Snd => "'.2'",
            Tok::Colon => "':'",
            Tok::Comma => "','",
            Tok::Assign => "'='",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::LBracket => "'['",
            Tok::RBracket => "']'",
            Tok::LBrace => "'{'",
            Tok::RBrace => "'}'",
            Tok::LAngle => "'<'",
            Tok::RAngle => "'>'",
            Tok::Dash => "' - '",
            Tok::Minus => "'-'",
            Tok::Centerdot => "'·'",
            Tok::Import => "'import'",
            Tok::Eof => "end of input",
        }
    }
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

/// Byte range plus the 1-based line/column of its start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: Tok,
    pub lexeme: &'a str,
    pub span: Span,
}

/// (Unicode, ASCII alias, kind). Longer aliases come first so that
/// longest-match falls out of a linear scan.
pub const SYMBOLS: &[(&str, &str, Tok)] = &[
    ("ς", "sigma-sym", Tok::Sym),
    ("★", "Star", Tok::Star),
    ("Π", "Pi", Tok::Pi),
    ("∀", "All", Tok::All),
    ("ι", "iota", Tok::Iota),
    ("ρ", "rho", Tok::Rho),
    ("φ", "phi", Tok::Phi),
    ("β", "beta", Tok::Beta),
    ("Λ", "/\\", Tok::BigLambda),
    ("λ", "\\", Tok::Lambda),
    ("➔", "->", Tok::Arrow),
    ("➾", "=>", Tok::ErasedArrow),
    ("≃", "==", Tok::Equiv),
    ("◂", "<|", Tok::Classify),
    ("·", "@", Tok::Centerdot),
];

const PUNCT: &[(char, Tok)] = &[
    (':', Tok::Colon),
    (',', Tok::Comma),
    ('=', Tok::Assign),
    ('(', Tok::LParen),
    (')', Tok::RParen),
    ('[', Tok::LBracket),
    (']', Tok::RBracket),
    ('{', Tok::LBrace),
    ('}', Tok::RBrace),
    ('<', Tok::LAngle),
    ('>', Tok::RAngle),
];

pub fn is_ident_char(c: char) -> bool {
    (c.is_alphanumeric() || matches!(c, '\'' | '!' | '_'))
        && !SYMBOLS.iter().any(|(u, _, _)| u.starts_with(c))
}

fn is_ident_start(c: char) -> bool {
    is_ident_char(c) && !c.is_ascii_digit() && c != '\'' && c != '!'
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexError {
    pub span: Span,
    pub found: char,
}

pub fn lex(src: &str) -> Result<Vec<Token<'_>>, LexError> {
    let mut out = Vec::new();
    let mut pos = 0;
    let mut line = 1;
    let mut line_start = 0;
    let span_at = |start: usize, end: usize, line: usize, line_start: usize| Span {
        start,
        end,
        line,
        col: src[line_start..start].chars().count() + 1,
    };
    while pos < src.len() {
        let rest = &src[pos..];
        let c = rest.chars().next().expect("non-empty");
        if c == '\n' {
            pos += 1;
            line += 1;
            line_start = pos;
            continue;
        }
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        if rest.starts_with("//") {
            pos += rest.find('\n').unwrap_or(rest.len());
            continue;
        }
        let mut push = |kind: Tok, len: usize, pos: &mut usize| {
            out.push(Token {
                kind,
                lexeme: &src[*pos..*pos + len],
                span: span_at(*pos, *pos + len, line, line_start),
            });
            *pos += len;
        };
        if let Some((kind, len)) = match_symbol(rest) {
            push(kind, len, &mut pos);
            continue;
        }
        if c == '-' {
            let next = rest[1..].chars().next();
            let kind = match next {
                None => Tok::Dash,
                Some(n) if n.is_whitespace() => Tok::Dash,
                Some(_) => Tok::Minus,
            };
            push(kind, 1, &mut pos);
            continue;
        }
        if c == '.' {
            let mut chars = rest[1..].chars();
            let digit = chars.next();
            let after = chars.next();
            let glued = pos > 0 && !src[..pos].ends_with(char::is_whitespace);
            match digit {
                Some(d @ ('1' | '2')) if glued && !after.is_some_and(is_ident_char) => {
                    push(if d == '1' { Tok::Fst } else { Tok::Snd }, 2, &mut pos);
                }
                _ => push(Tok::Dot, 1, &mut pos),
            }
            continue;
        }
        if let Some(&(_, kind)) = PUNCT.iter().find(|(p, _)| *p == c) {
            push(kind, 1, &mut pos);
            continue;
        }
        if is_ident_start(c) {
            let len = rest
                .char_indices()
                .find(|&(_, ch)| !is_ident_char(ch))
                .map_or(rest.len(), |(i, _)| i);
            let word = &rest[..len];
            let kind = if word == "import" {
                Tok::Import
            } else {
                Tok::Ident
            };
            push(kind, len, &mut pos);
            continue;
        }
        return Err(LexError {
            span: span_at(pos, pos + c.len_utf8(), line, line_start),
            found: c,
        });
    }
    out.push(Token {
        kind: Tok::Eof,
        lexeme: "",
        span: span_at(src.len(), src.len(), line, line_start),
    });
    Ok(out)
}

fn match_symbol(rest: &str) -> Option<(Tok, usize)> {
    for &(uni, ascii, kind) in SYMBOLS {
        if rest.starts_with(uni) {
            return Some((kind, uni.len()));
        }
        if let Some(after) = rest.strip_prefix(ascii) {
            // Word aliases must not swallow a longer identifier.
            let word = ascii.chars().next().is_some_and(char::is_alphabetic);
            let boundary = !after.starts_with(is_ident_char);
            if !word || boundary {
                return Some((kind, ascii.len()));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<Tok> {
        lex(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn aliases_lex_identically() {
        for &(uni, ascii, kind) in SYMBOLS {
            assert_eq!(kinds(uni), vec![kind, Tok::Eof], "{uni}");
            assert_eq!(kinds(ascii), vec![kind, Tok::Eof], "{ascii}");
        }
    }

    #[test]
    fn dash_versus_erased_application() {
        assert_eq!(
            kinds("ρ q - xs -A"),
            vec![
                Tok::Rho,
                Tok::Ident,
                Tok::Dash,
                Tok::Ident,
                Tok::Minus,
                Tok::Ident,
                Tok::Eof
            ]
        );
        assert_eq!(kinds("a -> b")[1], Tok::Arrow);
    }

    #[test]
    fn projections_need_glue() {
        assert_eq!(
            kinds("xs.1 xs.2"),
            vec![Tok::Ident, Tok::Fst, Tok::Ident, Tok::Snd, Tok::Eof]
        );
        assert_eq!(kinds("λ x. x")[2], Tok::Dot);
    }

    #[test]
    fn keyword_prefixes_stay_identifiers() {
        assert_eq!(
            kinds("rhoX betas Pia"),
            vec![Tok::Ident; 3]
                .into_iter()
                .chain([Tok::Eof])
                .collect::<Vec<_>>()
        );
        assert_eq!(
            kinds("appV2appL! x'"),
            vec![Tok::Ident, Tok::Ident, Tok::Eof]
        );
    }

    #[test]
    fn comments_and_positions() {
        let toks = lex("a // goal: x\n  b").unwrap();
        assert_eq!(toks.len(), 3);
        assert_eq!((toks[1].span.line, toks[1].span.col), (2, 3));
    }
}
