//! C interface to the checker. Sessions are opaque handles; every call
//! returns an integer status, and strings handed out must be released
//! with `cdle_string_free`. Pointer requirements are stated per function.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use cdle::check::{Context, LoadError, Session, Source};
use cdle::reduction::{beta_eta_eq, normalize, Fuel};
use cdle::syntax::Expr;

pub const CDLE_OK: i32 = 0;
/// Some definition failed to check; see `cdle_session_last_error`.
pub const CDLE_ERR_TYPE: i32 = 1;
pub const CDLE_ERR_NULL: i32 = -1;
pub const CDLE_ERR_UTF8: i32 = -2;
pub const CDLE_ERR_IO: i32 = -3;
pub const CDLE_ERR_PARSE: i32 = -4;
pub const CDLE_ERR_UNKNOWN_NAME: i32 = -5;
pub const CDLE_ERR_FUEL: i32 = -6;
pub const CDLE_ERR_PANIC: i32 = -7;

/// A checking session: definitions loaded so far plus the last error.
pub struct CdleSession {
    session: Session,
    last_error: Option<CString>,
}

impl CdleSession {
    fn fail(&mut self, code: i32, msg: impl ToString) -> i32 {
        let msg = msg.to_string().replace('\0', " ");
        self.last_error = CString::new(msg).ok();
        code
    }

    /// Status after loading: type failures anywhere in the session count.
    fn after_load(&mut self, loaded: Result<usize, LoadError>) -> i32 {
        match loaded {
            Err(e @ LoadError::Parse { .. }) => self.fail(CDLE_ERR_PARSE, e),
            Err(e) => self.fail(CDLE_ERR_IO, e),
            Ok(_) => {
                let failure = self.session.reports().iter().find_map(|r| {
                    r.failures()
                        .next()
                        .map(|o| format!("{}: {}: {}", r.module, o.name, o.error.as_ref().unwrap()))
                });
                match failure {
                    Some(msg) => self.fail(CDLE_ERR_TYPE, msg),
                    None => {
                        self.last_error = None;
                        CDLE_OK
                    }
                }
            }
        }
    }

    fn erasure(&mut self, name: &str) -> Result<cdle::PureTerm, i32> {
        let ctx = &self.session.ctx;
        if ctx.global(name).is_none() {
            return Err(self.fail(
                CDLE_ERR_UNKNOWN_NAME,
                format!("unknown definition '{name}'"),
            ));
        }
        Ok(ctx.unfolded_erasure(&Expr::var(name)))
    }
}

fn guard(f: impl FnOnce() -> i32) -> i32 {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CDLE_ERR_PANIC)
}

/// `s` must be null or a valid NUL-terminated string.
unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, i32> {
    if s.is_null() {
        return Err(CDLE_ERR_NULL);
    }
    CStr::from_ptr(s).to_str().map_err(|_| CDLE_ERR_UTF8)
}

/// A null pointer means no path.
unsafe fn optional_path(s: *const c_char) -> Result<Option<PathBuf>, i32> {
    if s.is_null() {
        return Ok(None);
    }
    text(s).map(|p| Some(PathBuf::from(p)))
}

fn fuel(max_steps: u64) -> Fuel {
    Fuel::new(max_steps).unwrap_or_default()
}

/// Creates an empty session; `max_steps` 0 selects the default fuel.
#[no_mangle]
pub extern "C" fn cdle_session_new(max_steps: u64) -> *mut CdleSession {
    let session = Session::new(Context::new(fuel(max_steps)));
    Box::into_raw(Box::new(CdleSession {
        session,
        last_error: None,
    }))
}

/// Creates a session with the bundled corpus loaded, or null on failure.
#[no_mangle]
pub extern "C" fn cdle_corpus_session_new(max_steps: u64) -> *mut CdleSession {
    catch_unwind(|| cdle::corpus::load(fuel(max_steps)))
        .ok()
        .and_then(Result::ok)
        .map_or(ptr::null_mut(), |session| {
            Box::into_raw(Box::new(CdleSession {
                session,
                last_error: None,
            }))
        })
}

/// `session` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cdle_session_free(session: *mut CdleSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Checks a module given as text. Imports are resolved under `root`
/// (may be null, meaning imports are unavailable).
/// `session` must be a live handle; string arguments must be null or
/// NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn cdle_session_load_source(
    session: *mut CdleSession,
    label: *const c_char,
    source: *const c_char,
    root: *const c_char,
) -> i32 {
    let Some(s) = session.as_mut() else {
        return CDLE_ERR_NULL;
    };
    let (label, source) = match (text(label), text(source)) {
        (Ok(l), Ok(t)) => (l.to_string(), t.to_string()),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let root = match optional_path(root) {
        Ok(r) => r,
        Err(e) => return e,
    };
    guard(|| {
        let src = Source {
            key: format!("<source>/{label}"),
            label,
            text: source,
        };
        let mut resolve = |_: &str, import: &str| match &root {
            Some(dir) => {
                let path = dir.join(format!("{import}.cdl"));
                std::fs::read_to_string(&path)
                    .map(|text| Source {
                        key: path.display().to_string(),
                        label: path.display().to_string(),
                        text,
                    })
                    .map_err(|source| LoadError::Io {
                        path: path.display().to_string(),
                        source,
                    })
            }
            None => Err(LoadError::Missing(import.to_string())),
        };
        let loaded = s.session.load(src, &mut resolve);
        s.after_load(loaded)
    })
}

/// Checks a file; imports resolve next to it, or under `root` if non-null.
/// Pointer requirements as for `cdle_session_load_source`.
#[no_mangle]
pub unsafe extern "C" fn cdle_session_load_file(
    session: *mut CdleSession,
    path: *const c_char,
    root: *const c_char,
) -> i32 {
    let Some(s) = session.as_mut() else {
        return CDLE_ERR_NULL;
    };
    let path = match text(path) {
        Ok(p) => PathBuf::from(p),
        Err(e) => return e,
    };
    let root = match optional_path(root) {
        Ok(r) => r,
        Err(e) => return e,
    };
    guard(|| {
        let loaded = s.session.load_file(&path, root.as_deref());
        s.after_load(loaded)
    })
}

/// Number of definitions that failed to check so far.
/// `session` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cdle_session_failure_count(session: *const CdleSession) -> i64 {
    match session.as_ref() {
        None => CDLE_ERR_NULL as i64,
        Some(s) => s
            .session
            .reports()
            .iter()
            .map(|r| r.failures().count() as i64)
            .sum(),
    }
}

/// The message of the last failed call on this session, or null. Owned
/// by the session; valid until the next call on it.
/// `session` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cdle_session_last_error(session: *const CdleSession) -> *const c_char {
    session
        .as_ref()
        .and_then(|s| s.last_error.as_ref())
        .map_or(ptr::null(), |m| m.as_ptr())
}

/// Writes the βη-normal erasure of `name`, pretty-printed, to `*out`.
/// `session` must be a live handle, `name` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cdle_erase(
    session: *mut CdleSession,
    name: *const c_char,
    out: *mut *mut c_char,
) -> i32 {
    let Some(s) = session.as_mut() else {
        return CDLE_ERR_NULL;
    };
    if out.is_null() {
        return CDLE_ERR_NULL;
    }
    let name = match text(name) {
        Ok(n) => n,
        Err(e) => return e,
    };
    guard(|| {
        let term = match s.erasure(name) {
            Ok(t) => t,
            Err(code) => return code,
        };
        match normalize(&term, s.session.ctx.fuel()).into_result() {
            Ok(nf) => {
                let printed = CString::new(nf.pretty()).expect("printed terms have no NUL");
                *out = printed.into_raw();
                CDLE_OK
            }
            Err(e) => s.fail(CDLE_ERR_FUEL, e),
        }
    })
}

/// Sets `*equal` to 1 if the erasures of `a` and `b` are βη-equal, else 0.
/// `session` must be a live handle, names NUL-terminated, `equal` writable.
#[no_mangle]
pub unsafe extern "C" fn cdle_eq(
    session: *mut CdleSession,
    a: *const c_char,
    b: *const c_char,
    equal: *mut i32,
) -> i32 {
    let Some(s) = session.as_mut() else {
        return CDLE_ERR_NULL;
    };
    if equal.is_null() {
        return CDLE_ERR_NULL;
    }
    let (a, b) = match (text(a), text(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    guard(|| {
        let (ta, tb) = match (s.erasure(a), s.erasure(b)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(code), _) | (_, Err(code)) => return code,
        };
        match beta_eta_eq(&ta, &tb, s.session.ctx.fuel()) {
            Ok(eq) => {
                *equal = eq as i32;
                CDLE_OK
            }
            Err(e) => s.fail(CDLE_ERR_FUEL, e),
        }
    })
}

/// Releases a string returned by this library.
/// `s` must be null or a string from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cdle_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
