//! Reference normalizer: named terms, capture-avoiding substitution, one
//! leftmost-outermost contraction at a time. Slow and obviously correct.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use cdle::PureTerm;

static FRESH: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug)]
pub enum N {
    V(String),
    L(String, Box<N>),
    A(Box<N>, Box<N>),
}

impl N {
    pub fn size(&self) -> usize {
        match self {
            N::V(_) => 1,
            N::L(_, b) => 1 + b.size(),
            N::A(f, a) => 1 + f.size() + a.size(),
        }
    }

    fn fv(&self, out: &mut BTreeSet<String>) {
        match self {
            N::V(x) => {
                out.insert(x.clone());
            }
            N::L(x, b) => {
                let mut inner = BTreeSet::new();
                b.fv(&mut inner);
                inner.remove(x);
                out.extend(inner);
            }
            N::A(f, a) => {
                f.fv(out);
                a.fv(out);
            }
        }
    }

    pub fn free(&self) -> BTreeSet<String> {
        let mut s = BTreeSet::new();
        self.fv(&mut s);
        s
    }

    /// `self[v/x]`, renaming binders that would capture.
    pub fn subst(&self, x: &str, v: &N) -> N {
        self.subst_with(x, v, &v.free())
    }

    fn subst_with(&self, x: &str, v: &N, fv: &BTreeSet<String>) -> N {
        match self {
            N::V(y) if y == x => v.clone(),
            N::V(_) => self.clone(),
            N::A(f, a) => N::A(
                Box::new(f.subst_with(x, v, fv)),
                Box::new(a.subst_with(x, v, fv)),
            ),
            N::L(y, _) if y == x => self.clone(),
            N::L(y, b) if fv.contains(y) => {
                // `#` never occurs in generated names, so `z` is fresh.
                let z = format!("{y}#{}", FRESH.fetch_add(1, Ordering::Relaxed));
                let b = b.subst_with(y, &N::V(z.clone()), &BTreeSet::from([z.clone()]));
                N::L(z, Box::new(b.subst_with(x, v, fv)))
            }
            N::L(y, b) => N::L(y.clone(), Box::new(b.subst_with(x, v, fv))),
        }
    }

    /// One leftmost-outermost β-step.
    fn beta_step(&self) -> Option<N> {
        match self {
            N::V(_) => None,
            N::L(x, b) => b.beta_step().map(|b| N::L(x.clone(), Box::new(b))),
            N::A(f, a) => {
                if let N::L(x, b) = &**f {
                    return Some(b.subst(x, a));
                }
                if let Some(f) = f.beta_step() {
                    return Some(N::A(Box::new(f), a.clone()));
                }
                a.beta_step().map(|a| N::A(f.clone(), Box::new(a)))
            }
        }
    }

    /// One outermost-leftmost η-step.
    fn eta_step(&self) -> Option<N> {
        match self {
            N::V(_) => None,
            N::L(x, b) => {
                if let N::A(f, a) = &**b {
                    if matches!(&**a, N::V(y) if y == x) && !f.free().contains(x) {
                        return Some((**f).clone());
                    }
                }
                b.eta_step().map(|b| N::L(x.clone(), Box::new(b)))
            }
            N::A(f, a) => match f.eta_step() {
                Some(f) => Some(N::A(Box::new(f), a.clone())),
                None => a.eta_step().map(|a| N::A(f.clone(), Box::new(a))),
            },
        }
    }

    pub fn from_pure(t: &PureTerm) -> N {
        fn go(t: &PureTerm, scope: &mut Vec<String>, next: &mut usize) -> N {
            match t {
                PureTerm::Free(x) => N::V(x.to_string()),
                PureTerm::Bound(i) => N::V(scope[scope.len() - 1 - i].clone()),
                PureTerm::Lam(_, b) => {
                    let x = format!("v{next}");
                    *next += 1;
                    scope.push(x.clone());
                    let b = go(b, scope, next);
                    scope.pop();
                    N::L(x, Box::new(b))
                }
                PureTerm::App(f, a) => {
                    N::A(Box::new(go(f, scope, next)), Box::new(go(a, scope, next)))
                }
            }
        }
        go(t, &mut Vec::new(), &mut 0)
    }

    pub fn to_pure(&self) -> PureTerm {
        match self {
            N::V(x) => PureTerm::free(x),
            N::L(x, b) => PureTerm::lam(x, b.to_pure()),
            N::A(f, a) => PureTerm::app(f.to_pure(), a.to_pure()),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Normal {
        nf: PureTerm,
        beta: u64,
        eta: u64,
    },
    Exhausted,
    /// The term grew past the size bound; no conclusion.
    TooBig,
}

/// Same fuel discipline as the library: a contraction is attempted only
/// while fewer than `budget` have been made, β and η together.
pub fn normalize(t: &PureTerm, budget: u64, max_size: usize) -> Verdict {
    let mut cur = N::from_pure(t);
    let (mut beta, mut eta) = (0u64, 0u64);
    while let Some(next) = cur.beta_step() {
        if beta >= budget {
            return Verdict::Exhausted;
        }
        beta += 1;
        if next.size() > max_size {
            return Verdict::TooBig;
        }
        cur = next;
    }
    while let Some(next) = cur.eta_step() {
        if beta + eta >= budget {
            return Verdict::Exhausted;
        }
        eta += 1;
        cur = next;
    }
    Verdict::Normal {
        nf: cur.to_pure(),
        beta,
        eta,
    }
}
