//! Command-line front end.
//!
//! Exit codes: 0 success or inconclusive, 1 verification failure, 2 usage
//! or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::complex::{
    build_torus_triangulation, dual_graph, hexagon_links, load_paper_labeling_with,
    DegenerationComplex,
};
use crate::enumerate::{enumerate_cosets, Enumeration, DEFAULT_CAPACITY};
use crate::error::Error;
use crate::fixtures::{export_all, Fixtures};
use crate::presentation::{generate, hexagon_cycles, Presentation, Variant};
use crate::report::{Entry, Report};
use crate::verify::{generic_relators, run_suite, Suite};
use crate::words::Word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "coxlab",
    version,
    about = "Coxeter quotients of torus triangulations"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of a text summary.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write every bundled fixture file into DIR and exit.
    #[arg(long, value_name = "DIR")]
    pub export_fixtures: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a torus triangulation or load the bundled 3×3 labeling.
    Build(BuildArgs),
    /// Emit a presentation read off a complex.
    Present(PresentArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Coset enumeration on a presentation file.
    Enumerate(EnumerateArgs),
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["rows", "paper_fixture"])))]
pub struct BuildArgs {
    #[arg(long, requires = "cols")]
    pub rows: Option<usize>,
    #[arg(long, requires = "rows")]
    pub cols: Option<usize>,
    /// Use the bundled 3×3 labeling.
    #[arg(long)]
    pub paper_fixture: bool,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PresentArgs {
    /// Complex JSON; the bundled 3×3 labeling when omitted.
    #[arg(long, value_name = "FILE")]
    pub complex: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "quotient")]
    pub variant: VariantArg,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Plain,
    Fork,
    Quotient,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Plain => Variant::Plain,
            VariantArg::Fork => Variant::Fork,
            VariantArg::Quotient => Variant::Quotient,
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Complex JSON; the bundled 3×3 labeling when omitted.
    #[arg(long, value_name = "FILE")]
    pub complex: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["presentation", "bundled"])))]
pub struct EnumerateArgs {
    #[arg(long, value_name = "FILE")]
    pub presentation: Option<PathBuf>,
    /// Name of a bundled presentation, e.g. s4_remark.json.
    #[arg(long, value_name = "NAME")]
    pub bundled: Option<String>,
    /// Subgroup generator as comma-separated signed letters; repeatable.
    #[arg(long, value_name = "WORD", allow_hyphen_values = true)]
    pub subgroup: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_CAPACITY)]
    pub capacity: usize,
    /// Write the standardized coset table as JSON.
    #[arg(long, value_name = "FILE")]
    pub table: Option<PathBuf>,
}

/// Outcome of a command before it is printed.
struct Outcome {
    code: i32,
    text: String,
    json: serde_json::Value,
}

fn usage(msg: impl Into<String>) -> Outcome {
    let msg = msg.into();
    Outcome {
        code: EXIT_USAGE,
        text: format!("error: {msg}\n"),
        json: json!({"error": msg}),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing output to `out` and errors to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let fixtures = Fixtures::from_env();
    let outcome = dispatch(&cli, &fixtures);
    let target: &mut dyn Write = if outcome.code == EXIT_USAGE { err } else { out };
    if cli.json {
        let _ = writeln!(
            target,
            "{}",
            serde_json::to_string_pretty(&outcome.json).expect("json")
        );
    } else {
        let _ = write!(target, "{}", outcome.text);
    }
    outcome.code
}

fn dispatch(cli: &Cli, fixtures: &Fixtures) -> Outcome {
    if let Some(dir) = &cli.export_fixtures {
        return match export_all(dir) {
            Ok(paths) => {
                let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
                Outcome {
                    code: EXIT_OK,
                    text: format!("wrote {} fixture files to {}\n", names.len(), dir.display()),
                    json: json!({"written": names}),
                }
            }
            Err(e) => usage(e.to_string()),
        };
    }
    match &cli.command {
        None => usage("no command given; try --help"),
        Some(Command::Build(a)) => build(a, fixtures),
        Some(Command::Present(a)) => present(a, fixtures),
        Some(Command::Verify(a)) => verify(a, fixtures),
        Some(Command::Enumerate(a)) => enumerate(a),
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), Outcome> {
    std::fs::write(path, body).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// Errors from fixture data count as verification failures; everything
/// else is bad input.
fn input_error(e: Error) -> Outcome {
    match e {
        Error::CorruptFixture(_) => {
            let report = Report::new(
                "load",
                vec![Entry::check(
                    "fixture",
                    false,
                    e.to_string(),
                    "bundled data is self-consistent",
                )],
            );
            Outcome {
                code: EXIT_FAIL,
                text: report.to_text(),
                json: serde_json::to_value(&report).expect("json"),
            }
        }
        other => usage(other.to_string()),
    }
}

fn load_complex(path: Option<&Path>, fixtures: &Fixtures) -> Result<DegenerationComplex, Outcome> {
    match path {
        None => load_paper_labeling_with(fixtures).map_err(input_error),
        Some(p) => {
            let s = std::fs::read_to_string(p)
                .map_err(|e| usage(format!("cannot read {}: {e}", p.display())))?;
            DegenerationComplex::from_json(&s).map_err(input_error)
        }
    }
}

fn counts_json(x: &DegenerationComplex) -> serde_json::Value {
    json!({
        "rows": x.rows,
        "cols": x.cols,
        "points": x.points.len(),
        "lines": x.lines.len(),
        "planes": x.planes.len(),
        "euler_characteristic": x.euler_characteristic(),
    })
}

fn build(a: &BuildArgs, fixtures: &Fixtures) -> Outcome {
    let x = if a.paper_fixture {
        load_paper_labeling_with(fixtures).map_err(input_error)
    } else {
        let (rows, cols) = (a.rows.unwrap_or(0), a.cols.unwrap_or(0));
        build_torus_triangulation(rows, cols).map_err(input_error)
    };
    let x = match x {
        Ok(x) => x,
        Err(o) => return o,
    };
    if let Some(path) = &a.out {
        if let Err(o) = write_file(path, &x.to_json()) {
            return o;
        }
    }
    let text = format!(
        "{}x{} complex: {} points, {} lines, {} planes\n",
        x.rows,
        x.cols,
        x.points.len(),
        x.lines.len(),
        x.planes.len()
    );
    Outcome {
        code: EXIT_OK,
        text,
        json: counts_json(&x),
    }
}

fn present(a: &PresentArgs, fixtures: &Fixtures) -> Outcome {
    let x = match load_complex(a.complex.as_deref(), fixtures) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let g = dual_graph(&x);
    let links = match hexagon_links(&x) {
        Ok(l) => l,
        Err(e) => return input_error(e),
    };
    let p = match generate(&g, &hexagon_cycles(&links), a.variant.into()) {
        Ok(p) => p,
        Err(e) => return input_error(e),
    };
    let body = p.to_json();
    let c = p.counts();
    let mut text = format!(
        "{} generators, {} relators: {} squares, {} commutations, {} braids, {} forks, {} cycles\n",
        p.generator_count,
        c.total(),
        c.squares,
        c.commutations,
        c.braids,
        c.forks,
        c.cycles
    );
    match &a.out {
        Some(path) => {
            if let Err(o) = write_file(path, &body) {
                return o;
            }
        }
        None => {
            text.push_str(&body);
            text.push('\n');
        }
    }
    Outcome {
        code: EXIT_OK,
        text,
        json: json!({"generators": p.generator_count, "counts": c, "total": c.total()}),
    }
}

fn finish(report: Report) -> Outcome {
    let code = if report.failed() { EXIT_FAIL } else { EXIT_OK };
    Outcome {
        code,
        text: report.to_text(),
        json: serde_json::to_value(&report).expect("json"),
    }
}

fn verify(a: &VerifyArgs, fixtures: &Fixtures) -> Outcome {
    let suite = a.suite.to_possible_value().expect("named");
    let command = format!("verify --suite {}", suite.get_name());
    if let Some(path) = &a.complex {
        let x = match load_complex(Some(path), fixtures) {
            Ok(x) => x,
            Err(o) => return o,
        };
        let reference = match load_paper_labeling_with(fixtures) {
            Ok(r) => r,
            Err(e) => return input_error(e),
        };
        if x != reference {
            if a.suite != Suite::Relators {
                return usage(format!(
                    "suite {} needs the bundled 3x3 labeling; a generated complex supports only --suite relators",
                    suite.get_name()
                ));
            }
            return match generic_relators(&x) {
                Ok(entries) => finish(Report::new(command, entries)),
                Err(e) => input_error(e),
            };
        }
    }
    match run_suite(a.suite, fixtures) {
        Ok(entries) => finish(Report::new(command, entries)),
        Err(e) => input_error(e),
    }
}

fn parse_word(s: &str) -> Result<Word, Outcome> {
    let letters = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| usage(format!("bad letter {t:?} in subgroup word {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Word::new(letters))
}

fn enumerate(a: &EnumerateArgs) -> Outcome {
    let source = match (&a.presentation, &a.bundled) {
        (Some(p), _) => std::fs::read_to_string(p)
            .map_err(|e| usage(format!("cannot read {}: {e}", p.display()))),
        (None, Some(name)) => crate::fixtures::bundled(name)
            .map(str::to_owned)
            .ok_or_else(|| usage(format!("no bundled presentation named {name}"))),
        (None, None) => Err(usage("give --presentation or --bundled")),
    };
    let p = match source.and_then(|s| Presentation::from_json(&s).map_err(input_error)) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let subgroup = match a
        .subgroup
        .iter()
        .map(|s| parse_word(s))
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(s) => s,
        Err(o) => return o,
    };
    let result = match enumerate_cosets(&p, &subgroup, a.capacity) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    if let (Enumeration::Complete { table }, Some(path)) = (&result, &a.table) {
        let body = serde_json::to_string(table).expect("table serializes");
        if let Err(o) = write_file(path, &body) {
            return o;
        }
    }
    let (index, size, status) = match &result {
        Enumeration::Complete { table } => (Some(table.index()), table.defined, "complete"),
        Enumeration::CapacityExceeded { capacity } => (None, *capacity, "inconclusive"),
    };
    let text = match index {
        Some(i) => format!("index {i} ({size} cosets defined)\n"),
        None => format!("inconclusive: capacity {size} exceeded\n"),
    };
    Outcome {
        code: EXIT_OK,
        text,
        json: json!({"index": index, "table_size": size, "status": status}),
    }
}
