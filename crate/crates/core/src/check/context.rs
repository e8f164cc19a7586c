use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::erasure::erase;
use crate::pure::PureTerm;
use crate::reduction::{normalize, Fuel};
use crate::syntax::{fresh_name, Expr, Name};

/// The layer an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    Term,
    Type,
    Kind,
}

impl Level {
    /// Level of something classified by `classifier`.
    pub fn of_classified(classifier: &Expr) -> Level {
        if classifier.is_kind() {
            Level::Type
        } else {
            Level::Term
        }
    }
}

#[derive(Clone, Debug)]
pub struct Global {
    pub name: Name,
    pub classifier: Expr,
    pub body: Option<Expr>,
    pub level: Level,
    /// Closed erasure of the body with all term globals unfolded
    /// (normalized when fuel allows). Term definitions only.
    pub erasure: Option<PureTerm>,
}

#[derive(Clone, Debug)]
struct Local {
    name: Name,
    classifier: Option<Expr>,
    level: Level,
}

/// Top-level definitions plus a stack of local binders.
#[derive(Clone, Debug)]
pub struct Context {
    globals: HashMap<Name, Arc<Global>>,
    order: Vec<Name>,
    locals: Vec<Local>,
    fuel: Fuel,
}

impl Default for Context {
    fn default() -> Self {
        Context::new(Fuel::default())
    }
}

impl Context {
    pub fn new(fuel: Fuel) -> Self {
        Context {
            globals: HashMap::new(),
            order: Vec::new(),
            locals: Vec::new(),
            fuel,
        }
    }

    pub fn fuel(&self) -> Fuel {
        self.fuel
    }

    pub fn set_fuel(&mut self, fuel: Fuel) {
        self.fuel = fuel;
    }

    pub fn global(&self, x: &str) -> Option<&Arc<Global>> {
        self.globals.get(x)
    }

    /// Globals in definition order.
    pub fn globals(&self) -> impl Iterator<Item = &Arc<Global>> {
        self.order.iter().map(|n| &self.globals[n])
    }

    pub fn define(&mut self, name: Name, classifier: Expr, body: Option<Expr>) {
        let level = Level::of_classified(&classifier);
        let erasure = match (&body, level) {
            (Some(b), Level::Term) => {
                let raw = self.unfolded_erasure(b);
                Some(normalize(&raw, self.fuel).result.unwrap_or(raw))
            }
            _ => None,
        };
        if !self.globals.contains_key(&name) {
            self.order.push(name.clone());
        }
        self.globals.insert(
            name.clone(),
            Arc::new(Global {
                name,
                classifier,
                body,
                level,
                erasure,
            }),
        );
    }

    pub fn is_bound(&self, x: &str) -> bool {
        self.globals.contains_key(x) || self.locals.iter().any(|l| &*l.name == x)
    }

    pub fn is_local(&self, x: &str) -> bool {
        self.locals.iter().any(|l| &*l.name == x)
    }

    /// Classifier and level of a name; locals shadow globals.
    pub fn lookup(&self, x: &str) -> Option<(Option<&Expr>, Level)> {
        if let Some(l) = self.locals.iter().rev().find(|l| &*l.name == x) {
            return Some((l.classifier.as_ref(), l.level));
        }
        self.globals.get(x).map(|g| (Some(&g.classifier), g.level))
    }

    /// A name not bound anywhere in the context nor free in `avoid`.
    pub fn fresh(&self, base: &str, avoid: &BTreeSet<Name>) -> Name {
        fresh_name(base, |n| self.is_bound(n) || avoid.contains(n))
    }

    pub fn push(&mut self, name: Name, classifier: Option<Expr>, level: Level) {
        self.locals.push(Local {
            name,
            classifier,
            level,
        });
    }

    pub fn push_typed(&mut self, name: Name, classifier: Expr) {
        let level = Level::of_classified(&classifier);
        self.push(name, Some(classifier), level);
    }

    pub fn pop(&mut self) {
        self.locals.pop();
    }

    pub fn local_depth(&self) -> usize {
        self.locals.len()
    }

    pub fn truncate(&mut self, depth: usize) {
        self.locals.truncate(depth);
    }

    /// Syntactic layer of `e` under the current context.
    pub fn level(&self, e: &Expr) -> Level {
        self.level_in(e, &mut Vec::new())
    }

    fn level_in(&self, e: &Expr, scope: &mut Vec<(Name, Level)>) -> Level {
        match e {
            Expr::Var(x) => scope
                .iter()
                .rev()
                .find(|(n, _)| n == x)
                .map(|(_, l)| *l)
                .or_else(|| self.lookup(x).map(|(_, l)| l))
                .unwrap_or(Level::Term),
            Expr::Star => Level::Kind,
            Expr::Bind { .. } if e.is_kind() => Level::Kind,
            Expr::Bind { .. } | Expr::Eq(..) => Level::Type,
            Expr::App { .. } => self.level_in(e.spine().0, scope),
            Expr::Lam {
                binder,
                domain,
                body,
                ..
            } => {
                let l = match domain {
                    Some(d) if d.is_kind() => Level::Type,
                    _ => Level::Term,
                };
                scope.push((binder.clone(), l));
                let out = self.level_in(body, scope);
                scope.pop();
                out
            }
            _ => Level::Term,
        }
    }

    /// `|e|` with term definitions replaced by their closed erasures.
    pub fn unfolded_erasure(&self, e: &Expr) -> PureTerm {
        erase(e).substitute_all(&|x| {
            if self.is_local(x) {
                return None;
            }
            self.globals.get(x).and_then(|g| g.erasure.clone())
        })
    }
}
