//! The `cdle` command line: check, erase, normalize, eq and cost.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::check::{Context, Session};
use crate::corpus;
use crate::cost;
use crate::reduction::{beta_eta_eq, normalize, Fuel};
use crate::syntax::Expr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cdle",
    version,
    about = "Curry-style dependent type checker with erasure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Fuel: maximum β plus η contractions per normalization.
    #[arg(long, value_name = "N", default_value_t = crate::reduction::DEFAULT_MAX_STEPS,
          value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: u64,
    /// Directory to resolve imports in (default: the importing file's).
    #[arg(long, value_name = "DIR")]
    root: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Type-check files; one report line per definition.
    Check {
        #[command(flatten)]
        common: Common,
        /// One JSON record per definition.
        #[arg(long)]
        json: bool,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Print the βη-normal erasure of a definition.
    Erase {
        #[command(flatten)]
        common: Common,
        path: PathBuf,
        name: String,
    },
    /// Print the normal form of a definition's erasure and the steps taken.
    Normalize {
        #[command(flatten)]
        common: Common,
        path: PathBuf,
        name: String,
    },
    /// Exit 0 iff two definitions have βη-equal erasures.
    Eq {
        #[command(flatten)]
        common: Common,
        path: PathBuf,
        left: String,
        right: String,
    },
    /// Step counts of corpus conversions on inputs of the given sizes.
    Cost {
        #[arg(long, value_name = "N", default_value_t = crate::reduction::DEFAULT_MAX_STEPS,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_steps: u64,
        #[arg(long, required = true, value_delimiter = ',',
              value_parser = clap::value_parser!(u64).range(1..))]
        sizes: Vec<u64>,
        /// Emit the report as CSV.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
        #[arg(required = true)]
        names: Vec<String>,
    },
}

/// Runs the CLI and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check {
            common,
            json,
            paths,
        } => check(&common, json, &paths, out),
        Command::Erase { common, path, name } => erase(&common, &path, &name, false, out),
        Command::Normalize { common, path, name } => erase(&common, &path, &name, true, out),
        Command::Eq {
            common,
            path,
            left,
            right,
        } => eq(&common, &path, &left, &right, out),
        Command::Cost {
            max_steps,
            sizes,
            csv,
            json,
            names,
        } => cost_cmd(max_steps, &sizes, csv, json, &names, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "cdle: {msg}");
            code
        }
    }
}

struct Failure(i32, String);

type CmdResult = Result<i32, Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

fn semantic(msg: impl ToString) -> Failure {
    Failure(EXIT_FAIL, msg.to_string())
}

fn fuel(max_steps: u64) -> Fuel {
    Fuel::new(max_steps).unwrap_or_default()
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(usage)
}

fn check(common: &Common, json: bool, paths: &[PathBuf], out: &mut dyn Write) -> CmdResult {
    let mut session = Session::new(Context::new(fuel(common.max_steps)));
    for p in paths {
        session
            .load_file(p, common.root.as_deref())
            .map_err(usage)?;
    }
    let mut ok = true;
    for report in session.reports() {
        ok &= report.passed();
        if json {
            for rec in report.records() {
                let line = serde_json::to_string(&rec).map_err(usage)?;
                write_out(out, &format!("{line}\n"))?;
            }
        } else {
            write_out(out, &format!("{}:\n{report}", report.module))?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

/// Loads a module whose definitions (and imports) must all check.
fn load_checked(common: &Common, path: &Path) -> Result<Session, Failure> {
    let mut session = Session::new(Context::new(fuel(common.max_steps)));
    session
        .load_file(path, common.root.as_deref())
        .map_err(usage)?;
    if let Some(bad) = session.reports().iter().find(|r| !r.passed()) {
        let first = bad.failures().next().expect("failing report has a failure");
        return Err(usage(format!(
            "{}: '{}' does not check",
            bad.module, first.name
        )));
    }
    Ok(session)
}

fn known(ctx: &Context, name: &str) -> Result<Expr, Failure> {
    ctx.global(name)
        .map(|_| Expr::var(name))
        .ok_or_else(|| semantic(format!("unknown definition '{name}'")))
}

fn erase(common: &Common, path: &Path, name: &str, steps: bool, out: &mut dyn Write) -> CmdResult {
    let session = load_checked(common, path)?;
    let ctx = &session.ctx;
    let term = ctx.unfolded_erasure(&known(ctx, name)?);
    let outcome = normalize(&term, ctx.fuel());
    let (beta, eta) = (outcome.beta_steps, outcome.eta_steps);
    let nf = outcome.into_result().map_err(semantic)?;
    write_out(out, &format!("{}\n", nf.pretty()))?;
    if steps {
        write_out(out, &format!("beta_steps {beta}\neta_steps {eta}\n"))?;
    }
    Ok(EXIT_OK)
}

fn eq(common: &Common, path: &Path, left: &str, right: &str, out: &mut dyn Write) -> CmdResult {
    let session = load_checked(common, path)?;
    let ctx = &session.ctx;
    let a = ctx.unfolded_erasure(&known(ctx, left)?);
    let b = ctx.unfolded_erasure(&known(ctx, right)?);
    let equal = beta_eta_eq(&a, &b, ctx.fuel()).map_err(semantic)?;
    write_out(out, if equal { "equal\n" } else { "not equal\n" })?;
    Ok(if equal { EXIT_OK } else { EXIT_FAIL })
}

fn cost_cmd(
    max_steps: u64,
    sizes: &[u64],
    csv: bool,
    json: bool,
    names: &[String],
    out: &mut dyn Write,
) -> CmdResult {
    let mut expected = Vec::new();
    for name in names {
        let class = corpus::entry(name)
            .and_then(|e| e.cost_class)
            .ok_or_else(|| usage(format!("'{name}' is not a measured corpus entry")))?;
        expected.push(class);
    }
    let mut session = corpus::load(fuel(max_steps)).map_err(usage)?;
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let report = cost::report(&mut session.ctx, &names, sizes).map_err(semantic)?;
    if json {
        let text = serde_json::to_string_pretty(&report).map_err(usage)?;
        write_out(out, &format!("{text}\n"))?;
    } else if csv {
        write_out(out, &report.to_csv())?;
    } else {
        for r in &report.rows {
            let note = if r.fuel_exhausted {
                "  (fuel exhausted)"
            } else {
                ""
            };
            write_out(
                out,
                &format!(
                    "{:<10} n={:<6} beta={:<8} eta={}{note}\n",
                    r.name, r.n, r.beta_steps, r.eta_steps
                ),
            )?;
        }
    }
    let mut ok = true;
    for ((name, growth), class) in report.classification.iter().zip(&expected) {
        ok &= growth.matches(*class);
        if !csv && !json {
            write_out(out, &format!("{name}: {growth} (expected {class})\n"))?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}
