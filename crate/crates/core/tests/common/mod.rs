//! Shared by the integration tests: an independent reference normalizer,
//! random term generators and small helpers.

#![allow(dead_code)]

pub mod gen;
pub mod naive;

use cdle::check::{Context, Session};
use cdle::reduction::Fuel;

pub fn corpus_session() -> Session {
    cdle::corpus::load(Fuel::default()).expect("corpus loads")
}

/// A session for a self-contained source text.
pub fn session_of(label: &str, text: &str) -> Session {
    let mut s = Session::new(Context::new(Fuel::default()));
    let src = cdle::check::Source {
        key: label.to_string(),
        label: label.to_string(),
        text: text.to_string(),
    };
    let mut no_imports = |_: &str, i: &str| Err(cdle::check::LoadError::Missing(i.to_string()));
    s.load(src, &mut no_imports).expect("source parses");
    s
}

/// Directory holding the workspace-level `corpus/` and `negative/`.
pub fn workspace_root() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// Each negative file with the error code named in its `// expect:` header.
pub fn negative_suite() -> Vec<(std::path::PathBuf, String, String)> {
    let dir = workspace_root().join("negative");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .expect("negative/ exists")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "cdl"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let code = text
                .lines()
                .find_map(|l| l.strip_prefix("// expect:"))
                .unwrap_or_else(|| panic!("{} lacks an expect header", p.display()))
                .trim()
                .to_string();
            (p, code, text)
        })
        .collect()
}

/// Replaces every Unicode symbol with its ASCII spelling, spacing word
/// aliases apart from neighbouring identifiers.
pub fn asciify(src: &str) -> String {
    let ident = |c: char| c.is_alphanumeric() || c == '_' || c == '\'' || c == '!';
    let mut out = String::new();
    let mut chars = src.chars().peekable();
    while let Some(c) = chars.next() {
        let alias = cdle::surface::lexer::SYMBOLS
            .iter()
            .find(|(u, _, _)| u.chars().eq(std::iter::once(c)));
        let Some((_, ascii, _)) = alias else {
            out.push(c);
            continue;
        };
        let word = ascii.starts_with(char::is_alphabetic);
        if word && out.ends_with(ident) {
            out.push(' ');
        }
        out.push_str(ascii);
        if word && chars.peek().is_some_and(|&n| ident(n) || n == '-') {
            out.push(' ');
        }
    }
    out
}

/// Runs `f` on a thread with room for deeply nested terms.
pub fn on_big_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(1 << 30)
            .spawn_scoped(s, f)
            .expect("spawn")
            .join()
            .unwrap_or_else(|e| std::panic::resume_unwind(e))
    })
}

#[derive(Debug, Default)]
pub struct OracleSummary {
    pub both_normal: usize,
    pub both_exhausted: usize,
    /// Terms the reference normalizer could not decide within its size bound.
    pub skipped: usize,
    pub disagreements: Vec<String>,
}

impl OracleSummary {
    pub fn compared(&self) -> usize {
        self.both_normal + self.both_exhausted + self.disagreements.len()
    }
}

/// Draws random terms until `wanted` have been compared against the
/// reference normalizer: equal normal forms and step counts, or both out
/// of fuel.
pub fn oracle_run(seed: u64, wanted: usize, fuel: u64) -> OracleSummary {
    use cdle::reduction::normalize;
    use naive::Verdict;
    const SIZE_BOUND: usize = 4_000;
    let mut s = OracleSummary::default();
    let mut batch = seed;
    while s.compared() < wanted {
        for t in gen::pure_terms(batch, 100, 30) {
            if s.compared() == wanted {
                break;
            }
            let got = normalize(&t, Fuel::new(fuel).unwrap());
            match naive::normalize(&t, fuel, SIZE_BOUND) {
                Verdict::TooBig => s.skipped += 1,
                Verdict::Exhausted if got.exhausted() => s.both_exhausted += 1,
                Verdict::Normal { nf, beta, eta }
                    if got.result.as_ref() == Some(&nf)
                        && (got.beta_steps, got.eta_steps) == (beta, eta) =>
                {
                    s.both_normal += 1
                }
                v => s.disagreements.push(format!(
                    "{}: machine {:?} after {}+{}, reference {v:?}",
                    t.pretty(),
                    got.result.as_ref().map(|r| r.pretty()),
                    got.beta_steps,
                    got.eta_steps
                )),
            }
        }
        batch = batch.wrapping_add(1);
    }
    s
}
