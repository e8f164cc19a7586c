//! Step counts of conversions on synthesized inputs of growing size.

use std::fmt;

use serde::Serialize;

use crate::check::{Context, TypeError};
use crate::corpus::{erasure_nf, CostClass};
use crate::reduction::{apply_and_count, normalize};
use crate::syntax::{Expr, Quant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Growth {
    Constant,
    Linear,
    Other,
}

impl Growth {
    pub fn matches(self, class: CostClass) -> bool {
        matches!(
            (self, class),
            (Growth::Constant, CostClass::Constant) | (Growth::Linear, CostClass::Linear)
        )
    }
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Growth::Constant => "constant",
            Growth::Linear => "linear",
            Growth::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CostRow {
    pub name: String,
    pub n: u64,
    pub beta_steps: u64,
    pub eta_steps: u64,
    pub fuel_exhausted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CostReport {
    pub rows: Vec<CostRow>,
    pub classification: Vec<(String, Growth)>,
}

impl CostReport {
    pub fn growth(&self, name: &str) -> Option<Growth> {
        self.classification
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, g)| g)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,n,beta_steps,eta_steps,fuel_exhausted\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.name, r.n, r.beta_steps, r.eta_steps, r.fuel_exhausted
            ));
        }
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CostError {
    #[error("no sizes given")]
    NoSizes,
    #[error("sizes must be positive")]
    ZeroSize,
    #[error("unknown definition '{0}'")]
    Unknown(String),
    #[error("'{0}' does not take a list or vector argument")]
    NotMeasurable(String),
    #[error("synthesized input does not check: {0}")]
    BadInput(TypeError),
}

/// The data a conversion consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    List,
    Vec,
}

/// Reads the first explicit argument's type off the classifier.
pub fn input_kind(classifier: &Expr) -> Option<InputKind> {
    let mut c = classifier;
    while let Expr::Bind {
        quant,
        domain,
        body,
        ..
    } = c
    {
        match quant {
            Quant::Forall => c = body,
            Quant::Pi => {
                return match domain.spine().0 {
                    Expr::Var(x) if &**x == "List" => Some(InputKind::List),
                    Expr::Var(x) if &**x == "Vec" => Some(InputKind::Vec),
                    _ => None,
                };
            }
            _ => return None,
        }
    }
    None
}

/// A list or vector of `n` copies of `unit`, with indices spelled out.
pub fn synthesize(kind: InputKind, n: u64) -> (Expr, Expr) {
    let unit_ty = Expr::var("Unit");
    let numeral =
        |k: u64| (0..k).fold(Expr::var("zero"), |acc, _| Expr::app(Expr::var("suc"), acc));
    let (nil, cons) = match kind {
        InputKind::List => ("nilL", "consL"),
        InputKind::Vec => ("nilV", "consV"),
    };
    let mut term = Expr::app_erased(Expr::var(nil), unit_ty.clone());
    for k in 0..n {
        let mut head = Expr::app_erased(Expr::var(cons), unit_ty.clone());
        if kind == InputKind::Vec {
            head = Expr::app_erased(head, numeral(k));
        }
        term = Expr::app(Expr::app(head, Expr::var("unit")), term);
    }
    let ty = match kind {
        InputKind::List => Expr::app(Expr::var("List"), unit_ty),
        InputKind::Vec => Expr::app(Expr::app(Expr::var("Vec"), unit_ty), numeral(n)),
    };
    (term, ty)
}

/// Stack for checking and normalizing deeply nested inputs.
const STACK_BYTES: usize = 1 << 30;

/// Runs `name`'s normalized erasure on inputs of each size.
pub fn measure(ctx: &mut Context, name: &str, sizes: &[u64]) -> Result<Vec<CostRow>, CostError> {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(STACK_BYTES)
            .spawn_scoped(s, || measure_on_stack(ctx, name, sizes))
            .expect("spawn measuring thread")
            .join()
            .expect("measuring thread panicked")
    })
}

fn measure_on_stack(
    ctx: &mut Context,
    name: &str,
    sizes: &[u64],
) -> Result<Vec<CostRow>, CostError> {
    if sizes.is_empty() {
        return Err(CostError::NoSizes);
    }
    if sizes.contains(&0) {
        return Err(CostError::ZeroSize);
    }
    let global = ctx
        .global(name)
        .ok_or_else(|| CostError::Unknown(name.into()))?
        .clone();
    let kind =
        input_kind(&global.classifier).ok_or_else(|| CostError::NotMeasurable(name.into()))?;
    let fun = match erasure_nf(ctx, name) {
        Some(Ok(f)) => Some(f),
        _ => None,
    };
    let mut rows = Vec::new();
    for &n in sizes {
        let (input, ty) = synthesize(kind, n);
        ctx.check(&input, &ty).map_err(CostError::BadInput)?;
        let arg = normalize(&ctx.unfolded_erasure(&input), ctx.fuel()).result;
        let row = match (&fun, arg) {
            (Some(f), Some(a)) => {
                let out = apply_and_count(f, &[a], ctx.fuel());
                CostRow {
                    name: name.to_string(),
                    n,
                    beta_steps: out.beta_steps,
                    eta_steps: out.eta_steps,
                    fuel_exhausted: out.exhausted(),
                }
            }
            _ => CostRow {
                name: name.to_string(),
                n,
                beta_steps: 0,
                eta_steps: 0,
                fuel_exhausted: true,
            },
        };
        rows.push(row);
    }
    Ok(rows)
}

/// Constant: all β counts equal. Linear: positive slopes Δsteps/Δn between
/// successive sizes, each within 10% of the previous one.
pub fn classify(rows: &[CostRow]) -> Growth {
    if rows.is_empty() || rows.iter().any(|r| r.fuel_exhausted) {
        return Growth::Other;
    }
    let mut pts: Vec<(u64, u64)> = rows.iter().map(|r| (r.n, r.beta_steps)).collect();
    pts.sort_unstable();
    pts.dedup_by_key(|p| p.0);
    if pts.iter().all(|p| p.1 == pts[0].1) {
        return Growth::Constant;
    }
    let slopes: Vec<f64> = pts
        .windows(2)
        .map(|w| (w[1].1 as f64 - w[0].1 as f64) / (w[1].0 - w[0].0) as f64)
        .collect();
    let steady = slopes
        .windows(2)
        .all(|s| (s[1] - s[0]).abs() <= 0.1 * s[0].abs());
    if slopes.iter().all(|&s| s > 0.0) && steady {
        Growth::Linear
    } else {
        Growth::Other
    }
}

pub fn report(ctx: &mut Context, names: &[&str], sizes: &[u64]) -> Result<CostReport, CostError> {
    let mut rows = Vec::new();
    let mut classification = Vec::new();
    for name in names {
        let mut r = measure(ctx, name, sizes)?;
        classification.push((name.to_string(), classify(&r)));
        rows.append(&mut r);
    }
    rows.sort_by(|a, b| (&a.name, a.n).cmp(&(&b.name, b.n)));
    Ok(CostReport {
        rows,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(pts: &[(u64, u64)]) -> Vec<CostRow> {
        pts.iter()
            .map(|&(n, b)| CostRow {
                name: "f".into(),
                n,
                beta_steps: b,
                eta_steps: 0,
                fuel_exhausted: false,
            })
            .collect()
    }

    #[test]
    fn classification_rule() {
        assert_eq!(
            classify(&rows(&[(8, 3), (64, 3), (512, 3)])),
            Growth::Constant
        );
        assert_eq!(
            classify(&rows(&[(8, 20), (16, 36), (32, 68)])),
            Growth::Linear
        );
        assert_eq!(
            classify(&rows(&[(8, 64), (16, 256), (32, 1024)])),
            Growth::Other
        );
        assert_eq!(classify(&rows(&[(8, 9), (16, 5)])), Growth::Other);
        let mut exhausted = rows(&[(8, 3)]);
        exhausted[0].fuel_exhausted = true;
        assert_eq!(classify(&exhausted), Growth::Other);
    }

    #[test]
    fn input_kind_skips_erased_binders() {
        let c = crate::surface::parse_expr("∀ A : ★. ∀ n : Nat. Vec A n ➔ List A").unwrap();
        assert_eq!(input_kind(&c), Some(InputKind::Vec));
        let c = crate::surface::parse_expr("∀ A : ★. Π xs : List A. Vec A (len -A xs)").unwrap();
        assert_eq!(input_kind(&c), Some(InputKind::List));
        assert_eq!(
            input_kind(&crate::surface::parse_expr("Nat ➔ Nat").unwrap()),
            None
        );
    }
}
