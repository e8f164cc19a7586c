//! Normalization of pure terms with fuel and exact step accounting.
//!
//! β-reduction is normal order (leftmost-outermost): the head redex is
//! contracted until weak head normal form, then the body of a lambda or the
//! arguments of a neutral spine are normalized left to right. The sequence
//! of contractions is exactly the leftmost-outermost one, so `beta_steps`
//! is the normal-order step count. η-contraction runs on the β-normal form,
//! bottom up; on β-normal terms it never creates a β-redex, so the result
//! is βη-normal.

use std::sync::Arc;

use thiserror::Error;

use crate::pure::PureTerm;
use crate::syntax::{name, Name};

/// Readback names for λs under evaluation; `%` never occurs in source.
fn level_name(k: usize) -> Name {
    name(&format!("%{k}"))
}

fn level_of(x: &str) -> Option<usize> {
    x.strip_prefix('%')?.parse().ok()
}

pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fuel {
    max_steps: u64,
}

impl Fuel {
    /// Returns `None` for zero.
    pub fn new(max_steps: u64) -> Option<Fuel> {
        (max_steps > 0).then_some(Fuel { max_steps })
    }

    pub fn max_steps(self) -> u64 {
        self.max_steps
    }
}

impl Default for Fuel {
    fn default() -> Self {
        Fuel {
            max_steps: DEFAULT_MAX_STEPS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("fuel exhausted after {steps} contractions")]
pub struct FuelExhausted {
    pub steps: u64,
}

#[derive(Clone, Debug)]
pub struct NormalizeOutcome {
    /// βη-normal form, or `None` when fuel ran out.
    pub result: Option<PureTerm>,
    pub beta_steps: u64,
    pub eta_steps: u64,
}

impl NormalizeOutcome {
    pub fn exhausted(&self) -> bool {
        self.result.is_none()
    }

    pub fn into_result(self) -> Result<PureTerm, FuelExhausted> {
        let steps = self.beta_steps + self.eta_steps;
        self.result.ok_or(FuelExhausted { steps })
    }
}

pub fn normalize(t: &PureTerm, fuel: Fuel) -> NormalizeOutcome {
    let mut m = Machine::new(fuel);
    let result = m
        .nf(Arc::new(t.clone()), Env::default(), 0)
        .and_then(|b| m.eta(&b))
        .ok();
    NormalizeOutcome {
        result,
        beta_steps: m.beta,
        eta_steps: m.eta,
    }
}

/// βη-equivalence: both sides normalize within fuel to α-equal terms.
pub fn beta_eta_eq(a: &PureTerm, b: &PureTerm, fuel: Fuel) -> Result<bool, FuelExhausted> {
    if a == b {
        return Ok(true);
    }
    let na = normalize(a, fuel).into_result()?;
    let nb = normalize(b, fuel).into_result()?;
    Ok(na == nb)
}

/// Normalizes `f a₁ … aₙ`; `beta_steps` is the harness cost figure.
pub fn apply_and_count(f: &PureTerm, args: &[PureTerm], fuel: Fuel) -> NormalizeOutcome {
    normalize(&PureTerm::apps(f.clone(), args.iter().cloned()), fuel)
}

/// Call-by-name closures: a term with the environment for its loose indices.
#[derive(Clone)]
struct Thunk {
    term: Arc<PureTerm>,
    env: Env,
}

#[derive(Clone, Default)]
struct Env(Option<Arc<(Thunk, Env, usize)>>);

impl Env {
    fn len(&self) -> usize {
        self.0.as_ref().map_or(0, |n| n.2)
    }

    fn push(&self, t: Thunk) -> Env {
        let len = self.len() + 1;
        Env(Some(Arc::new((t, self.clone(), len))))
    }

    fn get(&self, mut i: usize) -> Option<&Thunk> {
        let mut cur = self;
        loop {
            let node = cur.0.as_ref()?;
            if i == 0 {
                return Some(&node.0);
            }
            i -= 1;
            cur = &node.1;
        }
    }
}

enum Head {
    Free(Name),
    /// Variable bound by a λ that readback went under, by level.
    Level(usize),
    /// Index that escapes the term, relative to its outside.
    Loose(usize),
}

enum Whnf {
    Lam(Name, Arc<PureTerm>, Env),
    Neutral(Head, Vec<Thunk>),
}

/// Reduction by an environment machine. Substitution is delayed in
/// closures, but contractions happen exactly where textual normal-order
/// reduction would perform them, so the counts coincide.
struct Machine {
    budget: u64,
    beta: u64,
    eta: u64,
}

impl Machine {
    fn new(fuel: Fuel) -> Self {
        Machine {
            budget: fuel.max_steps,
            beta: 0,
            eta: 0,
        }
    }

    fn spend(&mut self) -> Result<(), FuelExhausted> {
        if self.beta + self.eta >= self.budget {
            return Err(FuelExhausted {
                steps: self.beta + self.eta,
            });
        }
        Ok(())
    }

    fn whnf(&mut self, term: Arc<PureTerm>, env: Env) -> Result<Whnf, FuelExhausted> {
        let (mut term, mut env) = (term, env);
        // Pending arguments, innermost application last.
        let mut stack: Vec<Thunk> = Vec::new();
        loop {
            match &*term {
                PureTerm::App(f, a) => {
                    stack.push(Thunk {
                        term: a.clone(),
                        env: env.clone(),
                    });
                    term = f.clone();
                }
                PureTerm::Lam(hint, body) => match stack.pop() {
                    Some(arg) => {
                        self.spend()?;
                        self.beta += 1;
                        env = env.push(arg);
                        term = body.clone();
                    }
                    None => return Ok(Whnf::Lam(hint.clone(), body.clone(), env)),
                },
                PureTerm::Bound(i) => match env.get(*i) {
                    Some(t) => {
                        let t = t.clone();
                        term = t.term;
                        env = t.env;
                    }
                    None => {
                        stack.reverse();
                        return Ok(Whnf::Neutral(Head::Loose(i - env.len()), stack));
                    }
                },
                PureTerm::Free(x) => {
                    stack.reverse();
                    let head = match level_of(x) {
                        Some(k) => Head::Level(k),
                        None => Head::Free(x.clone()),
                    };
                    return Ok(Whnf::Neutral(head, stack));
                }
            }
        }
    }

    fn nf(
        &mut self,
        term: Arc<PureTerm>,
        env: Env,
        depth: usize,
    ) -> Result<PureTerm, FuelExhausted> {
        match self.whnf(term, env)? {
            Whnf::Lam(hint, body, env) => {
                let var = Thunk {
                    term: Arc::new(PureTerm::Free(level_name(depth))),
                    env: Env::default(),
                };
                let inner = self.nf(body, env.push(var), depth + 1)?;
                Ok(PureTerm::Lam(hint, Arc::new(inner)))
            }
            Whnf::Neutral(head, args) => {
                let mut out = match head {
                    Head::Free(x) => PureTerm::Free(x),
                    Head::Level(k) => PureTerm::Bound(depth - 1 - k),
                    Head::Loose(j) => PureTerm::Bound(j + depth),
                };
                for a in args {
                    let na = self.nf(a.term, a.env, depth)?;
                    out = PureTerm::App(Arc::new(out), Arc::new(na));
                }
                Ok(out)
            }
        }
    }

    fn eta(&mut self, t: &PureTerm) -> Result<PureTerm, FuelExhausted> {
        match t {
            PureTerm::Lam(hint, body) => {
                let body = self.eta(body)?;
                if let PureTerm::App(f, a) = &body {
                    if matches!(**a, PureTerm::Bound(0)) && !f.has_loose(0) {
                        self.spend()?;
                        self.eta += 1;
                        return Ok(f.lower(0));
                    }
                }
                Ok(PureTerm::Lam(hint.clone(), Arc::new(body)))
            }
            PureTerm::App(f, a) => Ok(PureTerm::App(
                Arc::new(self.eta(f)?),
                Arc::new(self.eta(a)?),
            )),
            _ => Ok(t.clone()),
        }
    }
}
