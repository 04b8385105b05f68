//! The `logderiv` command-line surface.
//!
//! [`run`] takes an argument list and returns the text to print and the
//! process exit code, so the binary stays a thin wrapper and every command
//! can be driven from tests or other programs.
//!
//! Exit codes: 0 success, 1 reproduction failure, 2 parse or I/O error,
//! 3 degenerate input.

pub mod expr;
pub mod report;
pub mod reproduce;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::arrangement::{builtin_arrangement, parse_arrangement, Arrangement};
use crate::classify::{classify, invariant_lines, FieldClass, DEFAULT_GRID_CAP};
use crate::derivations::{build_matrix, is_logarithmic, kernel_basis};
use crate::error::{Error, Result};

pub use expr::{parse_field, parse_polynomial};
pub use report::{
    analyze, compare, report_arrangement, verify_report, AnalysisReport, CompareReport, TOOL,
};
pub use reproduce::{conic_check, lines_with_profile, reproduce, ziegler_conic, ReproduceReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REPRODUCE_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

/// Environment variable overriding the subspace grid cap.
pub const GRID_CAP_VAR: &str = "LOGDERIV_GRID_CAP";

pub const DEFAULT_DMAX: u32 = 7;

#[derive(Debug, Parser)]
#[command(
    name = "logderiv",
    version,
    about = "Exact logarithmic vector fields of line arrangements"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Combinatorics, filtration dimensions, kernels, d_f and bound checks.
    Analyze(Flags),
    /// Weak combinatorics, poset isomorphism and optionally d_f of two inputs.
    Compare(Flags),
    /// Classify a field given by --field "P;Q".
    Classify(Flags),
    /// Re-run the published claims on the built-in arrangements.
    Reproduce(Flags),
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Built-in arrangement: pappus, nonpappus, ziegler or ziegler2.
    #[arg(long = "builtin", value_name = "NAME")]
    pub builtin: Vec<String>,
    /// Arrangement files, one `a b c` line per line `ax + by + c = 0`.
    #[arg(value_name = "PATH")]
    pub paths: Vec<PathBuf>,
    /// Highest degree computed.
    #[arg(long, default_value_t = DEFAULT_DMAX)]
    pub dmax: u32,
    /// Also compute d_f (compare).
    #[arg(long)]
    pub df: bool,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Write constraint matrices and kernel bases for d = 0..=dmax.
    #[arg(long, value_name = "PATH")]
    pub dump_matrix: Option<PathBuf>,
    /// Vector field `P;Q`, e.g. "x^2;y^2".
    #[arg(long, value_name = "P;Q")]
    pub field: Option<String>,
    #[arg(skip)]
    pub inputs: Vec<Input>,
}

/// One arrangement source, in command-line order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Builtin(String),
    Path(PathBuf),
}

impl Input {
    pub fn label(&self) -> String {
        match self {
            Input::Builtin(n) => n.clone(),
            Input::Path(p) => p.display().to_string(),
        }
    }

    pub fn load(&self) -> Result<Arrangement> {
        match self {
            Input::Builtin(n) => builtin_arrangement(n),
            Input::Path(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                parse_arrangement(&text)
            }
        }
    }
}

fn ordered_inputs(flags: &Flags, m: &ArgMatches) -> Vec<Input> {
    let mut tagged: Vec<(usize, Input)> = Vec::new();
    if let Some(idx) = m.indices_of("builtin") {
        tagged.extend(
            idx.zip(&flags.builtin)
                .map(|(i, n)| (i, Input::Builtin(n.clone()))),
        );
    }
    if let Some(idx) = m.indices_of("paths") {
        tagged.extend(
            idx.zip(&flags.paths)
                .map(|(i, p)| (i, Input::Path(p.clone()))),
        );
    }
    tagged.sort_by_key(|t| t.0);
    tagged.into_iter().map(|t| t.1).collect()
}

/// Parses an argument list, including the program name.
pub fn parse_args<I, T>(args: I) -> std::result::Result<Cli, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = Cli::command().try_get_matches_from(args)?;
    let mut cli = Cli::from_arg_matches(&matches)?;
    if let Some((_, sub)) = matches.subcommand() {
        let flags = match &mut cli.command {
            Command::Analyze(f)
            | Command::Compare(f)
            | Command::Classify(f)
            | Command::Reproduce(f) => f,
        };
        flags.inputs = ordered_inputs(flags, sub);
    }
    Ok(cli)
}

/// Text for stdout and stderr plus the exit code.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegenerateLine { .. }
        | Error::DuplicateLine { .. }
        | Error::EmptyArrangement
        | Error::NoSingularPoint
        | Error::InfiniteType(_) => EXIT_DEGENERATE,
        _ => EXIT_PARSE,
    }
}

/// Grid cap from `LOGDERIV_GRID_CAP`, or the default when unset.
pub fn grid_cap_from_env() -> Result<usize> {
    match std::env::var(GRID_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse {
            line: 0,
            column: 0,
            message: format!("{GRID_CAP_VAR} must be a non-negative integer, got `{v}`"),
        }),
        Err(_) => Ok(DEFAULT_GRID_CAP),
    }
}

/// Parses and executes a command line.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match parse_args(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    ..Default::default()
                }
            } else {
                Outcome {
                    stderr: text,
                    code: EXIT_PARSE,
                    ..Default::default()
                }
            };
        }
    };
    let result = grid_cap_from_env().and_then(|cap| execute(&cli.command, cap));
    match result {
        Ok(out) => out,
        Err(e) => Outcome {
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
            ..Default::default()
        },
    }
}

/// Executes a parsed command with an explicit grid cap.
pub fn execute(command: &Command, grid_cap: usize) -> Result<Outcome> {
    match command {
        Command::Analyze(f) => cmd_analyze(f, grid_cap),
        Command::Compare(f) => cmd_compare(f, grid_cap),
        Command::Classify(f) => cmd_classify(f),
        Command::Reproduce(f) => Ok(cmd_reproduce(f, grid_cap)),
    }
}

fn usage(message: &str) -> Error {
    Error::Parse {
        line: 0,
        column: 0,
        message: message.to_string(),
    }
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        stdout,
        ..Default::default()
    }
}

fn one_input(f: &Flags) -> Result<&Input> {
    match f.inputs.as_slice() {
        [i] => Ok(i),
        [] => Err(usage("expected one arrangement (--builtin NAME or PATH)")),
        _ => Err(usage("expected exactly one arrangement")),
    }
}

/// Matrix and kernel dumps for `d = 0..=d_max`.
pub fn dump_matrices(a: &Arrangement, d_max: u32) -> String {
    let mut out = String::new();
    for d in 0..=d_max {
        let m = build_matrix(a, d);
        out.push_str(&m.dump());
        out.push_str(&kernel_basis(&m).dump());
    }
    out
}

pub fn cmd_analyze(f: &Flags, grid_cap: usize) -> Result<Outcome> {
    let input = one_input(f)?;
    let a = input.load()?;
    let report = analyze(&a, &input.label(), f.dmax, grid_cap);
    if let Some(path) = &f.dump_matrix {
        std::fs::write(path, dump_matrices(&a, f.dmax))
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(ok(if f.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    }))
}

pub fn cmd_compare(f: &Flags, grid_cap: usize) -> Result<Outcome> {
    let [ia, ib] = f.inputs.as_slice() else {
        return Err(usage("compare expects two arrangements"));
    };
    let (a, b) = (ia.load()?, ib.load()?);
    let (la, lb) = (ia.label(), ib.label());
    let r = compare(&a, &b, [&la, &lb], f.df.then_some((f.dmax, grid_cap)));
    Ok(ok(if f.json {
        r.to_json() + "\n"
    } else {
        r.to_text()
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantLinesRecord {
    pub lines: Vec<[String; 3]>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub tool: String,
    pub field: report::FieldRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_lines: Option<InvariantLinesRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub logarithmic: Option<bool>,
}

pub fn classify_report(
    field: &str,
    against: Option<(&Arrangement, String)>,
) -> Result<ClassifyReport> {
    let chi = parse_field(field)?;
    let class = classify(&chi);
    let lines = if class == FieldClass::Finite {
        let l = invariant_lines(&chi)?;
        Some(InvariantLinesRecord {
            lines: l.rational_lines.iter().map(report::line_record).collect(),
            complete: l.complete,
        })
    } else {
        None
    };
    Ok(ClassifyReport {
        tool: TOOL.to_string(),
        field: report::FieldRecord::new(&chi),
        invariant_lines: lines,
        logarithmic: against.as_ref().map(|(a, _)| is_logarithmic(&chi, a)),
        arrangement: against.map(|(_, s)| s),
    })
}

impl ClassifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.field.class;
        let _ = writeln!(out, "{}", self.tool);
        let _ = writeln!(out, "field: ({})dx + ({})dy", self.field.p, self.field.q);
        match (&c.center, &c.direction) {
            (Some([x, y]), _) => {
                let _ = writeln!(out, "class: central, center ({x}, {y})");
            }
            (_, Some([x, y])) => {
                let _ = writeln!(out, "class: parallel, direction ({x}, {y})");
            }
            _ => {
                let _ = writeln!(out, "class: {}", c.kind);
            }
        }
        if let Some(l) = &self.invariant_lines {
            let _ = writeln!(out, "invariant lines: {}", l.lines.len());
            for [a, b, g] in &l.lines {
                let _ = writeln!(out, "  {a} {b} {g}");
            }
            let _ = writeln!(out, "complete: {}", l.complete);
        }
        if let (Some(a), Some(b)) = (&self.arrangement, self.logarithmic) {
            let _ = writeln!(out, "logarithmic for {a}: {b}");
        }
        out
    }
}

pub fn cmd_classify(f: &Flags) -> Result<Outcome> {
    let field = f
        .field
        .as_deref()
        .ok_or_else(|| usage("classify expects --field \"P;Q\""))?;
    let against = match f.inputs.as_slice() {
        [] => None,
        [i] => Some((i.load()?, i.label())),
        _ => return Err(usage("classify accepts at most one arrangement")),
    };
    let r = classify_report(field, against.as_ref().map(|(a, s)| (a, s.clone())))?;
    Ok(ok(if f.json {
        r.to_json() + "\n"
    } else {
        r.to_text()
    }))
}

pub fn cmd_reproduce(f: &Flags, grid_cap: usize) -> Outcome {
    let r = reproduce(grid_cap);
    Outcome {
        stdout: if f.json {
            r.to_json() + "\n"
        } else {
            r.to_text()
        },
        stderr: String::new(),
        code: if r.all_pass() {
            EXIT_OK
        } else {
            EXIT_REPRODUCE_FAILURE
        },
    }
}
