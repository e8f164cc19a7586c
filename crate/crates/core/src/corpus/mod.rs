//! The checked development: embedded source files and a manifest of
//! expected classifiers, golden erasures and cost classes.

mod manifest;

use std::fmt;

use serde::Serialize;

use crate::check::{Context, LoadError, Session, Source};
use crate::erasure::erase;
use crate::pure::PureTerm;
use crate::reduction::{beta_eta_eq, normalize, Fuel, FuelExhausted};
use crate::surface::{parse_expr, pretty_expr};
use crate::syntax::Expr;

/// Corpus files in dependency order.
pub const FILES: [(&str, &str); 8] = [
    ("base", include_str!("../../../../corpus/base.cdl")),
    ("list", include_str!("../../../../corpus/list.cdl")),
    ("reuse", include_str!("../../../../corpus/reuse.cdl")),
    ("identity", include_str!("../../../../corpus/identity.cdl")),
    (
        "combinators",
        include_str!("../../../../corpus/combinators.cdl"),
    ),
    ("packaged", include_str!("../../../../corpus/packaged.cdl")),
    ("examples", include_str!("../../../../corpus/examples.cdl")),
    ("schemes", include_str!("../../../../corpus/schemes.cdl")),
];

/// Definitions whose erasures coincide although their types differ.
pub const SHARED_ERASURES: [(&str, &str); 3] =
    [("nilL", "nilV"), ("consL", "consV"), ("appL", "appV")];

/// Well-typed definitions that must *not* meet the given golden.
pub const NEGATIVE_GOLDENS: [(&str, &str); 1] = [("appL2appVBad!", "λ x. x")];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CostClass {
    Constant,
    Linear,
}

impl fmt::Display for CostClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CostClass::Constant => "constant",
            CostClass::Linear => "linear",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub file: &'static str,
    pub layer: u8,
    pub expected_classifier: &'static str,
    pub golden_erasure: Option<&'static str>,
    pub cost_class: Option<CostClass>,
}

pub fn manifest() -> &'static [CorpusEntry] {
    manifest::ENTRIES
}

pub fn entry(name: &str) -> Option<&'static CorpusEntry> {
    manifest::ENTRIES.iter().find(|e| e.name == name)
}

/// Checks every corpus file into a fresh session.
pub fn load(fuel: Fuel) -> Result<Session, LoadError> {
    let mut session = Session::new(Context::new(fuel));
    let mut resolve = |_: &str, import: &str| source(import);
    for (stem, _) in FILES {
        session.load(source(stem)?, &mut resolve)?;
    }
    Ok(session)
}

fn source(stem: &str) -> Result<Source, LoadError> {
    let (_, text) = FILES
        .iter()
        .find(|(s, _)| *s == stem)
        .ok_or_else(|| LoadError::Missing(stem.to_string()))?;
    Ok(Source {
        key: format!("corpus/{stem}.cdl"),
        label: format!("{stem}.cdl"),
        text: text.to_string(),
    })
}

/// A pure term written in surface syntax; free names stay free.
pub fn parse_pure(src: &str) -> Result<PureTerm, String> {
    parse_expr(src)
        .map(|e| erase(&e))
        .map_err(|e| e.to_string())
}

/// βη-normal erasure of a global, with other globals unfolded.
pub fn erasure_nf(ctx: &Context, name: &str) -> Option<Result<PureTerm, FuelExhausted>> {
    ctx.global(name)?;
    let t = ctx.unfolded_erasure(&Expr::var(name));
    Some(normalize(&t, ctx.fuel()).into_result())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default)]
pub struct Verification {
    pub checked: usize,
    pub failures: Vec<Mismatch>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, name: &str, expected: impl Into<String>, actual: Option<String>) {
        self.checked += 1;
        if let Some(actual) = actual {
            self.failures.push(Mismatch {
                name: name.to_string(),
                expected: expected.into(),
                actual,
            });
        }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} checked, {} failed",
            self.checked,
            self.failures.len()
        )?;
        for m in &self.failures {
            writeln!(f, "  {}: expected {}, got {}", m.name, m.expected, m.actual)?;
        }
        Ok(())
    }
}

/// Every entry's pretty classifier matches, and its definition passed.
pub fn verify_classifiers(session: &Session, entries: &[CorpusEntry]) -> Verification {
    let mut v = Verification::default();
    for e in entries {
        let outcome = session
            .reports()
            .iter()
            .filter(|r| r.module.ends_with(e.file))
            .flat_map(|r| &r.outcomes)
            .find(|o| &*o.name == e.name);
        let actual = match (outcome, session.ctx.global(e.name)) {
            (Some(o), Some(g)) => match &o.error {
                Some(err) => Some(format!("failure: {err}")),
                None => {
                    let got = pretty_expr(&g.classifier);
                    (got != e.expected_classifier).then_some(got)
                }
            },
            _ => Some("missing definition".to_string()),
        };
        v.record(e.name, e.expected_classifier, actual);
    }
    v
}

/// Goldens hold up to α after βη-normalization, and shared-erasure pairs
/// are βη-equal.
pub fn verify_goldens(ctx: &Context, entries: &[CorpusEntry]) -> Verification {
    let mut v = Verification::default();
    for e in entries {
        let Some(golden) = e.golden_erasure else {
            continue;
        };
        v.record(e.name, golden, golden_mismatch(ctx, e.name, golden));
    }
    for (a, b) in SHARED_ERASURES {
        let label = format!("{a} = {b}");
        let actual = match (erasure_nf(ctx, a), erasure_nf(ctx, b)) {
            (Some(Ok(x)), Some(Ok(y))) => match beta_eta_eq(&x, &y, ctx.fuel()) {
                Ok(true) => None,
                Ok(false) => Some(format!("{} vs {}", x.pretty(), y.pretty())),
                Err(e) => Some(e.to_string()),
            },
            _ => Some("missing or divergent definition".to_string()),
        };
        v.record(&label, "equal erasures", actual);
    }
    v
}

/// `None` when the normalized erasure of `name` is α-equal to `golden`.
pub fn golden_mismatch(ctx: &Context, name: &str, golden: &str) -> Option<String> {
    let expected = match parse_pure(golden) {
        Ok(t) => t,
        Err(e) => return Some(format!("bad golden: {e}")),
    };
    match erasure_nf(ctx, name) {
        None => Some("missing definition".to_string()),
        Some(Err(e)) => Some(e.to_string()),
        Some(Ok(t)) => {
            let expected = normalize(&expected, ctx.fuel()).result.unwrap_or(expected);
            (t != expected).then(|| t.pretty())
        }
    }
}
