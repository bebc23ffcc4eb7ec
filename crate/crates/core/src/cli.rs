//! The `cohiggs` command line: `verify`, `det`, `canon`, `integrable`, `info`.
//!
//! Exit codes: 0 success, 1 a verification failure or a non-integrable
//! field, 2 a usage or parse error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{canonicalize_pm, canonicalize_qc, image_point, ImagePoint};
use crate::cohiggs::{determinant, integrable, schwarz_info, CoHiggsField, CoHiggsError};
use crate::geometry::{Chart, Sym2Triple};
use crate::io::{parse_input, Input};
use crate::verify::{run as run_suite, RunOptions, Theorem, DEFAULT_BOUND};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cohiggs", version, about = "Determinants of co-Higgs fields on Schwarzenberger bundles")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a seeded randomized verification suite.
    Verify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
        /// Worker threads (default: all cores).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        threads: Option<u64>,
        /// Coefficient bound for random inputs.
        #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
    },
    /// Determinant, its structure and its canonical image point.
    Det {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Canonical representative of a field's image point, a (q, C) pair or a ± class.
    Canon {
        #[arg(long)]
        input: PathBuf,
    },
    /// Whether a field's component matrices commute.
    Integrable {
        #[arg(long)]
        input: PathBuf,
    },
    /// Chern classes, splitting type and h1(End0) of V_k.
    Info {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse()
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Usage {
        Usage(e.to_string())
    }
}

fn read_input(path: &PathBuf) -> Result<Input, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    Ok(parse_input(&text)?)
}

fn read_field(path: &PathBuf) -> Result<CoHiggsField, Usage> {
    match read_input(path)? {
        Input::Field(f) => Ok(f),
        _ => Err(Usage("expected a field document (k0field, k1field, k2field or kbigfield)".into())),
    }
}

fn triple_json(t: &Sym2Triple) -> Value {
    json!([t.t11.to_string(), t.t12.to_string(), t.t22.to_string()])
}

fn image_lines(p: &ImagePoint) -> Vec<String> {
    let mut out = vec![format!("image: {}", p.kind())];
    match p {
        ImagePoint::Zero => {}
        ImagePoint::QSym2 { q, c } => {
            out.push(format!("q: {q}"));
            out.push(format!("C: {c}"));
        }
        ImagePoint::SymTangent { a } => out.push(format!("A: {}", a.matrix())),
        ImagePoint::RhoSym2 { rho, c } => {
            out.push(format!("rho: {rho}"));
            out.push(format!("C: {c}"));
        }
    }
    out
}

fn image_json(p: &ImagePoint) -> Value {
    match p {
        ImagePoint::Zero => json!({ "kind": "zero" }),
        ImagePoint::QSym2 { q, c } => json!({ "kind": p.kind(), "q": q.to_string(), "c": c.to_string() }),
        ImagePoint::SymTangent { a } => json!({ "kind": p.kind(), "a": a.matrix().to_string() }),
        ImagePoint::RhoSym2 { rho, c } => json!({ "kind": p.kind(), "rho": rho.to_string(), "c": c.to_string() }),
    }
}

fn cmd_det(path: &PathBuf, as_json: bool, out: &mut dyn Write) -> Result<i32, Usage> {
    let field = read_field(path)?;
    let ok = integrable(&field, Chart::new(0))?;
    let det = determinant(&field)?;
    let image = image_point(&det);
    if as_json {
        let image = match &image {
            Ok(p) => image_json(p),
            Err(e) => json!({ "kind": "unclassifiable", "reason": e.to_string() }),
        };
        let doc = json!({
            "k": det.k,
            "triple": triple_json(&det.triple),
            "structure": det.structure.as_ref().map(|s| s.to_string()),
            "image": image,
            "integrable": ok,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        writeln!(out, "k: {}", det.k)?;
        writeln!(out, "det (chart U0): {}", det.triple)?;
        if let Some(s) = &det.structure {
            writeln!(out, "structure: {s}")?;
        }
        match &image {
            Ok(p) => {
                for l in image_lines(p) {
                    writeln!(out, "{l}")?;
                }
            }
            Err(e) => writeln!(out, "image: unclassifiable ({e})")?,
        }
        writeln!(out, "integrable: {ok}")?;
        if !ok {
            writeln!(out, "warning: the field is not integrable")?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_canon(path: &PathBuf, out: &mut dyn Write) -> Result<i32, Usage> {
    let lines = match read_input(path)? {
        Input::Field(f) => image_lines(&image_point(&determinant(&f)?)?),
        Input::Pair(q, c) => {
            let (q, c) = canonicalize_qc(&q, &c)?;
            vec!["image: q_sym2".into(), format!("q: {q}"), format!("C: {c}")]
        }
        Input::Tangent(a) => vec![format!("A: {}", canonicalize_pm(&a).matrix())],
        Input::Tm1(c) => vec![format!("C: {}", canonicalize_pm(&c))],
        Input::Line(_) => return Err(Usage("a section of O(k) has no canonical form here".into())),
    };
    for l in lines {
        writeln!(out, "{l}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_integrable(path: &PathBuf, out: &mut dyn Write) -> Result<i32, Usage> {
    let field = read_field(path)?;
    let mut all = true;
    for ch in Chart::ALL {
        let ok = integrable(&field, ch)?;
        writeln!(out, "chart {ch}: {ok}")?;
        all &= ok;
    }
    writeln!(out, "integrable: {all}")?;
    Ok(if all { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_info(k: u32, as_json: bool, out: &mut dyn Write) -> Result<i32, Usage> {
    let info = match schwarz_info(k) {
        Ok(i) => i,
        Err(CoHiggsError::ExcludedIndex) => {
            return Err(Usage("k = 3 is the excluded case: the classification leaves it out".into()))
        }
        Err(e) => return Err(e.into()),
    };
    if as_json {
        writeln!(out, "{}", serde_json::to_string_pretty(&info)?)?;
    } else {
        writeln!(out, "{info}")?;
    }
    Ok(EXIT_OK)
}

/// Runs the command line on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.cmd {
        Command::Verify { theorem, trials, seed, json, threads, bound } => {
            let opts = RunOptions { threads: threads.map(|t| t as usize), bound };
            let report = run_suite(theorem, trials, seed, opts);
            let text = if json { report.to_json() } else { report.to_string() };
            writeln!(out, "{text}")
                .map(|_| if report.ok() { EXIT_OK } else { EXIT_FAIL })
                .map_err(Usage::from)
        }
        Command::Det { input, json } => cmd_det(&input, json, out),
        Command::Canon { input } => cmd_canon(&input, out),
        Command::Integrable { input } => cmd_integrable(&input, out),
        Command::Info { k, json } => cmd_info(k, json, out),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
