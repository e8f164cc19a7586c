//! Checking whole modules and resolving imports.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::surface::{parse_module, ParseError, SourceModule, Span};
use crate::syntax::Name;

use super::context::Context;
use super::error::TypeError;

#[derive(Clone, Debug)]
pub struct DefOutcome {
    pub name: Name,
    pub span: Span,
    pub error: Option<TypeError>,
}

impl DefOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none()
    }
}

/// One machine-readable record per definition.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DefRecord {
    pub def: String,
    pub status: &'static str,
    #[serde(rename = "errorCode", skip_serializing_if = "Option::is_none")]
    pub error_code: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span: Option<Span>,
}

#[derive(Clone, Debug, Default)]
pub struct ModuleReport {
    pub module: String,
    pub outcomes: Vec<DefOutcome>,
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(DefOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DefOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn records(&self) -> Vec<DefRecord> {
        self.outcomes
            .iter()
            .map(|o| DefRecord {
                def: o.name.to_string(),
                status: if o.passed() { "pass" } else { "fail" },
                error_code: o.error.as_ref().map(|e| e.code.to_string()),
                span: o.error.as_ref().map(|_| o.span),
            })
            .collect()
    }
}

impl fmt::Display for ModuleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            match &o.error {
                None => writeln!(f, "ok    {}", o.name)?,
                Some(e) => {
                    writeln!(f, "FAIL  {} ({}:{}) {}", o.name, o.span.line, o.span.col, e)?;
                    if let (Some(x), Some(y)) = (&e.expected, &e.actual) {
                        writeln!(f, "        expected: {x}")?;
                        writeln!(f, "        actual:   {y}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Checks definitions in order, extending `ctx`. A failing definition is
/// still added, as a postulate with its declared classifier.
pub fn check_module(ctx: &mut Context, module: &SourceModule, label: &str) -> ModuleReport {
    let mut report = ModuleReport {
        module: label.to_string(),
        outcomes: Vec::new(),
    };
    for def in &module.defs {
        let depth = ctx.local_depth();
        let result = ctx
            .check_classifier(&def.classifier)
            .and_then(|()| match &def.body {
                Some(body) => ctx.check(body, &def.classifier),
                None => Ok(()),
            });
        ctx.truncate(depth);
        let error = result.err().map(|e| e.at(def.span));
        let body = if error.is_none() {
            def.body.clone()
        } else {
            None
        };
        ctx.define(def.name.clone(), def.classifier.clone(), body);
        report.outcomes.push(DefOutcome {
            name: def.name.clone(),
            span: def.span,
            error,
        });
    }
    report
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("import cycle through '{0}'")]
    Cycle(String),
    #[error("cannot find module '{0}'")]
    Missing(String),
}

/// A resolved module: a stable key, a display label and its source text.
pub struct Source {
    pub key: String,
    pub label: String,
    pub text: String,
}

/// Loads modules (imports first) into one shared context.
#[derive(Default)]
pub struct Session {
    pub ctx: Context,
    reports: Vec<ModuleReport>,
    done: HashMap<String, usize>,
    active: Vec<String>,
}

impl Session {
    pub fn new(ctx: Context) -> Self {
        Session {
            ctx,
            ..Session::default()
        }
    }

    pub fn reports(&self) -> &[ModuleReport] {
        &self.reports
    }

    /// Loads `src`; `resolve` maps an import name (relative to the importing
    /// module's key) to its source.
    pub fn load(
        &mut self,
        src: Source,
        resolve: &mut dyn FnMut(&str, &str) -> Result<Source, LoadError>,
    ) -> Result<usize, LoadError> {
        if let Some(&i) = self.done.get(&src.key) {
            return Ok(i);
        }
        if self.active.contains(&src.key) {
            return Err(LoadError::Cycle(src.label));
        }
        let module = parse_module(&src.text).map_err(|source| LoadError::Parse {
            path: src.label.clone(),
            source,
        })?;
        self.active.push(src.key.clone());
        for import in &module.imports {
            let dep = resolve(&src.key, import);
            let r = dep.and_then(|dep| self.load(dep, resolve));
            if let Err(e) = r {
                self.active.pop();
                return Err(e);
            }
        }
        self.active.pop();
        let report = check_module(&mut self.ctx, &module, &src.label);
        self.reports.push(report);
        let i = self.reports.len() - 1;
        self.done.insert(src.key, i);
        Ok(i)
    }

    pub fn report(&self, i: usize) -> &ModuleReport {
        &self.reports[i]
    }

    /// Loads a file; imports resolve to `<root>/<name>.cdl`, where `root`
    /// defaults to the importing file's directory.
    pub fn load_file(&mut self, path: &Path, root: Option<&Path>) -> Result<usize, LoadError> {
        let src = read_source(path)?;
        let root = root.map(Path::to_path_buf);
        let mut resolve = |from: &str, import: &str| {
            let dir = match &root {
                Some(r) => r.clone(),
                None => Path::new(from)
                    .parent()
                    .map(Path::to_path_buf)
                    .unwrap_or_default(),
            };
            read_source(&dir.join(format!("{import}.cdl")))
        };
        self.load(src, &mut resolve)
    }
}

fn read_source(path: &Path) -> Result<Source, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let key: PathBuf = path.canonicalize().unwrap_or_else(|_| path.to_path_buf());
    Ok(Source {
        key: key.display().to_string(),
        label: path.display().to_string(),
        text,
    })
}
