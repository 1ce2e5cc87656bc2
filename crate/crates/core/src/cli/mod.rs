//! Command-line front end. The `convexfam` binary parses arguments and hands
//! them to [`main_with_args`]; everything else lives here so it can be tested.

mod classify;
mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::poset::Order;
use crate::registry::{self, AuditBounds, PROPERTIES};
use crate::{Error, Result};

pub use classify::{classify_text, ObjectKind};
pub use verify::{verify, VERIFY_BUNDLES};

/// Overrides `--jobs`.
pub const JOBS_ENV: &str = "CONVEXFAM_JOBS";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "convexfam", version, about = "Convexity and heredity audits of discrete families")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: machine parallelism). CONVEXFAM_JOBS wins over this flag.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node cap for budgeted searches (kernels, certificates).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Include long-running checks.
    #[arg(long, global = true)]
    pub slow: bool,
    /// Report wall-clock timings (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the check bundle of a named fixture.
    Verify { fixture: String },
    /// Audit a registry family on its declared universes.
    Audit(AuditArgs),
    /// Classify a family on a user-supplied object read from a JSON file.
    Classify(ClassifyArgs),
    /// List fixtures and registry families.
    List,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    pub family: String,
    /// Picks `<family>-<order>` when the family exists for several orders.
    #[arg(long)]
    pub order: Option<Order>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub max: Option<usize>,
    #[arg(long)]
    pub alphabet: Option<usize>,
    #[arg(long)]
    pub outcomes: Option<usize>,
    /// Per-ground poset size cap.
    #[arg(long)]
    pub cap: Option<u128>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub file: std::path::PathBuf,
    #[arg(long, value_enum)]
    pub kind: ObjectKind,
    #[arg(long)]
    pub order: Order,
    /// Registry family name or predicate name, e.g. `kernel-less` or `not-cis`.
    #[arg(long)]
    pub family: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "ok",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Undecided => "undecided",
        }
    }
}

/// One checked statement.
#[derive(Clone, Debug, Serialize)]
pub struct Line {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Line {
    pub fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Line { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    pub fn undecided(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Line { name: name.into(), status: Status::Undecided, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub name: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub exit_code: i32,
    pub lines: Vec<Line>,
    /// Full machine-readable payload (audit or classification report).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

impl Report {
    pub fn new(command: impl Into<String>, lines: Vec<Line>) -> Self {
        let status = if lines.iter().any(|l| l.status == Status::Fail) {
            Status::Fail
        } else if lines.iter().any(|l| l.status == Status::Undecided) {
            Status::Undecided
        } else {
            Status::Pass
        };
        let exit_code = match status {
            Status::Pass => EXIT_PASS,
            Status::Fail => EXIT_FAIL,
            Status::Undecided => EXIT_UNDECIDED,
        };
        Report { command: command.into(), status, exit_code, lines, data: None, timings: None }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("serialisable") + "\n",
            Format::Text => {
                let mut out = format!("$ {}\n", self.command);
                for l in &self.lines {
                    if l.detail.is_empty() {
                        let _ = writeln!(out, "{:<9} {}", l.status.tag(), l.name);
                    } else {
                        let _ = writeln!(out, "{:<9} {}: {}", l.status.tag(), l.name, l.detail);
                    }
                }
                for t in self.timings.iter().flatten() {
                    let _ = writeln!(out, "time      {}: {:.3}s", t.name, t.seconds);
                }
                let _ = writeln!(out, "result: {} (exit {})", self.status.word(), self.exit_code);
                out
            }
        }
    }
}

/// Runs the command and renders its report. Errors map to exit code 2.
pub fn execute(cli: &Cli) -> (String, i32) {
    let start = Instant::now();
    match dispatch(cli) {
        Ok(mut report) => {
            if cli.global.timings {
                report.timings.get_or_insert_with(Vec::new).push(Timing {
                    name: "total".into(),
                    seconds: start.elapsed().as_secs_f64(),
                });
            }
            (report.render(cli.global.format), report.exit_code)
        }
        Err(e) => {
            let msg = match cli.global.format {
                Format::Json => {
                    serde_json::to_string_pretty(&serde_json::json!({ "error": e.to_string(), "exit_code": EXIT_USAGE }))
                        .expect("serialisable")
                        + "\n"
                }
                Format::Text => format!("error: {e}\n"),
            };
            (msg, EXIT_USAGE)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    match &cli.command {
        Command::Verify { fixture } => verify(fixture, g),
        Command::Audit(a) => audit(a, g),
        Command::Classify(c) => {
            let text = std::fs::read_to_string(&c.file)
                .map_err(|e| Error::Parse(format!("{}: {e}", c.file.display())))?;
            let mut r = classify_text(&text, c.kind, c.order, &c.family)?;
            r.command = format!(
                "convexfam classify {} --kind {} --order {} --family {}",
                c.file.display(),
                c.kind.name(),
                c.order,
                c.family
            );
            Ok(r)
        }
        Command::List => Ok(list()),
    }
}

fn list() -> Report {
    let mut lines: Vec<Line> = VERIFY_BUNDLES
        .iter()
        .map(|(name, about)| Line { name: format!("fixture {name}"), status: Status::Pass, detail: about.to_string() })
        .collect();
    lines.extend(registry::list_families().into_iter().map(|e| Line {
        name: format!("family {}", e.name),
        status: Status::Pass,
        detail: format!("{}, {} order", e.family, e.order),
    }));
    Report::new("convexfam list", lines)
}

/// `connected --order vertex` resolves to the entry `connected-vertex`.
fn resolve_family(name: &str, order: Option<Order>) -> Result<registry::FamilyEntry> {
    if let Some(o) = order {
        if let Ok(e) = registry::find_family(&format!("{name}-{}", o.name())) {
            return Ok(e);
        }
        let e = registry::find_family(name)?;
        if e.order != o {
            return Err(Error::OrderMismatch { order: o.name(), kind: e.kind.name() });
        }
        return Ok(e);
    }
    registry::find_family(name)
}

fn audit(a: &AuditArgs, g: &GlobalArgs) -> Result<Report> {
    let entry = resolve_family(&a.family, a.order)?;
    let bounds = AuditBounds {
        n: a.n,
        d: a.d,
        max: a.max,
        alphabet: a.alphabet,
        outcomes: a.outcomes,
        cap: a.cap,
        budget: g.budget,
    };
    let start = Instant::now();
    let report = registry::audit_entry(&entry, &bounds)?;
    let mut lines = Vec::new();
    for (k, prop) in PROPERTIES.iter().enumerate() {
        let expected = entry.expected.as_array()[k];
        let found = report.verdicts[k];
        let show = |v: Option<bool>| v.map_or("not determined", |b| if b { "holds" } else { "fails" });
        let detail = format!("expected {}, found {}", expected_text(expected), show(found));
        match (expected.as_bool(), found) {
            (_, None) | (None, _) => lines.push(Line { name: prop.to_string(), status: Status::Pass, detail }),
            (Some(e), Some(f)) => {
                let witness = report.parts.iter().find_map(|p| p.witnesses[k].clone());
                let detail = match (&witness, e == f) {
                    (Some(w), _) if !f => format!("{detail}; witness {w}"),
                    _ => detail,
                };
                lines.push(Line::check(*prop, e == f, detail));
            }
        }
    }
    let classes = report.minima_classes();
    if entry.minima_rule.is_some() {
        let violation = report.parts.iter().find_map(|p| p.minima_violation.clone());
        let detail = match &violation {
            Some(v) => v.clone(),
            None => format!("{} ({})", entry.expected_minima, classes.iter().cloned().collect::<Vec<_>>().join(", ")),
        };
        lines.push(Line::check("minima", violation.is_none(), detail));
    }
    for p in &report.parts {
        let detail = format!("{} grounds{}", p.grounds, if p.skipped > 0 { format!(", {} skipped", p.skipped) } else { String::new() });
        if p.skipped > 0 || p.undecided {
            lines.push(Line::undecided(format!("check {}", p.check), detail));
        } else {
            lines.push(Line { name: format!("check {}", p.check), status: Status::Pass, detail });
        }
    }
    if let Some(note) = entry.note {
        lines.push(Line { name: "note".into(), status: Status::Pass, detail: note.into() });
    }
    let mut out = Report::new(format!("convexfam audit {}", entry.name), lines);
    out.data = Some(serde_json::to_value(&report).expect("serialisable"));
    if g.timings {
        out.timings = Some(vec![Timing { name: "audit".into(), seconds: start.elapsed().as_secs_f64() }]);
    }
    Ok(out)
}

fn expected_text(e: registry::Expectation) -> String {
    match e {
        registry::Expectation::Holds => "holds".into(),
        registry::Expectation::Fails => "fails".into(),
        registry::Expectation::Unverified(None) => "unverified".into(),
        registry::Expectation::Unverified(Some(b)) => format!("unverified ({})", if b { "holds" } else { "fails" }),
    }
}

/// Sets up the rayon pool from `--jobs` and `CONVEXFAM_JOBS`. Only the first
/// call in a process has an effect.
pub fn configure_jobs(flag: Option<usize>) -> Result<()> {
    let env = match std::env::var(JOBS_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("{JOBS_ENV}={v} is not a thread count")))?),
        Err(_) => None,
    };
    if let Some(n) = env.or(flag) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    Ok(())
}

/// Entry point for the binary: parse, run, print, return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = configure_jobs(cli.global.jobs) {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    let (out, code) = execute(&cli);
    if code == EXIT_USAGE {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    code
}
