//! Command-line surface of `trisep`: graph formats, reports and subcommands.

pub mod format;
pub mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use thiserror::Error;
use trisep::connectivity::is_k_connected;
use trisep::decompose::decompose;
use trisep::generate::generate;
use trisep::graph::Graph;
use trisep::separation::{enumerate_mixed_separations, sort_separations, MixedSeparation};
use trisep::tri::compute_total_nested;
use trisep::twosep::two_sep_decomposition;
use trisep::verify::{verify_suite, Suite, SuiteOptions, DEFAULT_FAMILIES};

use crate::format::{parse_graph, to_graph6, InputFormat};
use crate::report::{OutputFormat, Report, SeparationEntry, TwoSepReport};

/// Process exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Some assertion failed; counterexamples were reported.
pub const EXIT_FAILED: i32 = 1;
/// Bad usage or input that does not meet a precondition.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) => EXIT_FAILED,
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "trisep", version, about = "Totally-nested tri-separations of 3-connected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    /// Input file, `-` for standard input.
    #[arg(short, long, default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: InputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a member of a named family.
    Gen {
        family: String,
        /// Integer parameters; `0b` and `0x` prefixes are accepted.
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Totally-nested nontrivial tri-separations, splitting stars and torso classes.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        emit: OutputFormat,
        /// Also write one DOT file per torso into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Record the running time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// List mixed-separations of one order as JSON.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Keep tri-separations only (order 3).
        #[arg(long)]
        tri: bool,
        /// Keep tri-separations nested with every tri-separation.
        #[arg(long)]
        totally_nested: bool,
        /// Keep nontrivial tri-separations.
        #[arg(long)]
        nontrivial: bool,
    },
    /// Run a verification suite over the exhaustive corpus and named families.
    Verify {
        /// angry, main, tutte, vtx or 2sep.
        suite: String,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Families as `name:p1,p2`; `none` for no families. Defaults to the built-in list for
        /// the main suite and to none otherwise.
        #[arg(long, num_args = 1..)]
        families: Option<Vec<String>>,
        /// Directory for counterexample edge lists.
        #[arg(long, default_value = "counterexamples")]
        dump: PathBuf,
    },
    /// The 2-separation tree-decomposition of a 2-connected graph, as JSON.
    Twosep {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-render a JSON report from `decompose`.
    Report {
        #[arg(short, long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        emit: OutputFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(usage)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn read_graph(input: &Input) -> Result<Graph, CliError> {
    let text = read_source(&input.input)?;
    parse_graph(&text, input.format).map_err(|e| usage(format!("{}: {e}", input.input)))
}

fn write_output(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

pub fn parse_param(s: &str) -> Result<u64, CliError> {
    let bad = || usage(format!("{s:?} is not a nonnegative integer"));
    if let Some(b) = s.strip_prefix("0b") {
        u64::from_str_radix(b, 2).map_err(|_| bad())
    } else if let Some(h) = s.strip_prefix("0x") {
        u64::from_str_radix(h, 16).map_err(|_| bad())
    } else {
        s.parse().map_err(|_| bad())
    }
}

/// `name` or `name:p1,p2,...`.
pub fn parse_family(s: &str) -> Result<(String, Vec<u64>), CliError> {
    match s.split_once(':') {
        None => Ok((s.to_string(), Vec::new())),
        Some((name, ps)) => Ok((name.to_string(), ps.split(',').map(parse_param).collect::<Result<_, _>>()?)),
    }
}

/// Runs one command, writing its primary output to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen { family, params, format, output } => {
            let params: Vec<u64> = params.iter().map(|p| parse_param(p)).collect::<Result<_, _>>()?;
            let g = generate(&family, &params).map_err(usage)?;
            let text = match format {
                InputFormat::Edgelist => g.to_edgelist(),
                InputFormat::Graph6 => to_graph6(&g) + "\n",
            };
            write_output(out, output.as_deref(), &text)
        }
        Command::Decompose { input, output, emit, dot, timing } => {
            let g = read_graph(&input)?;
            if g.n() < 4 || !is_k_connected(&g, 3) {
                return Err(usage("input graph is not 3-connected"));
            }
            let start = Instant::now();
            let d = decompose(&g).map_err(usage)?;
            let mut report = Report::from_decomposition(&d);
            if timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            if let Some(dir) = dot {
                fs::create_dir_all(&dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
                for (name, text) in report.dot_files() {
                    let p = dir.join(format!("{name}.dot"));
                    fs::write(&p, text).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                }
            }
            write_output(out, output.as_deref(), &report.render(emit))?;
            if report.verdicts.all_hold() {
                return Ok(());
            }
            let source = if input.input == "-" {
                let dir = PathBuf::from("counterexamples");
                let path = dump(&dir, "decompose", 0, &g, "torso classification")?;
                path.display().to_string()
            } else {
                input.input.clone()
            };
            let _ = writeln!(err, "verdicts failed: {:?}", report.verdicts);
            Err(CliError::Failed(format!("counterexample: {source}")))
        }
        Command::Enumerate { input, order, tri, totally_nested, nontrivial } => {
            let g = read_graph(&input)?;
            let tri = tri || totally_nested || nontrivial;
            if tri && order != 3 {
                return Err(usage("tri-separations have order 3"));
            }
            let mut seps: Vec<MixedSeparation> = if tri {
                let a = compute_total_nested(&g).map_err(usage)?;
                a.all_tri
                    .iter()
                    .zip(&a.flags)
                    .filter(|(&s, f)| (!totally_nested || a.is_totally_nested(s)) && (!nontrivial || f.is_nontrivial))
                    .map(|(&s, _)| s)
                    .collect()
            } else {
                let all = enumerate_mixed_separations(&g, order).map_err(usage)?;
                all.into_iter().filter(|s| s.order(&g) == order).collect()
            };
            sort_separations(&g, &mut seps);
            let entries: Vec<SeparationEntry> = seps.iter().map(|&s| SeparationEntry::of(&g, s)).collect();
            let text = serde_json::to_string_pretty(&entries).expect("separations serialize") + "\n";
            write_output(out, None, &text)
        }
        Command::Verify { suite, max_n, families, dump: dir } => {
            let s = Suite::parse(&suite).ok_or_else(|| usage(format!("unknown suite {suite:?}")))?;
            let families = match families {
                Some(list) if list.iter().any(|f| f == "none") => Vec::new(),
                Some(list) => list.iter().map(|f| parse_family(f)).collect::<Result<_, _>>()?,
                None if s == Suite::Main => {
                    DEFAULT_FAMILIES.iter().map(|(f, p)| (f.to_string(), p.to_vec())).collect()
                }
                None => Vec::new(),
            };
            let opts = SuiteOptions { max_n, families };
            let r = verify_suite(s, &opts).map_err(usage)?;
            let mut text = format!("suite {}: {} graphs, {} failures", r.suite, r.graphs, r.tally.failures.len());
            if !r.complete {
                text += &format!(", incomplete ({} graphs over budget)", r.tally.incomplete);
            }
            text.push('\n');
            let mut by_check: BTreeMap<&str, usize> = BTreeMap::new();
            for f in &r.tally.failures {
                *by_check.entry(&f.check).or_default() += 1;
            }
            for (k, v) in &by_check {
                text += &format!("  failed {k}: {v}\n");
            }
            for (k, v) in &r.tally.stats {
                text += &format!("  {k}: {v}\n");
            }
            write_output(out, None, &text)?;
            if r.passed() {
                return Ok(());
            }
            let mut first = None;
            for (i, f) in r.tally.failures.iter().enumerate() {
                let p = dump(&dir, &r.suite, i, &f.graph, &format!("{}: {}", f.check, f.detail))?;
                first.get_or_insert(p);
            }
            Err(CliError::Failed(format!(
                "{} counterexamples written to {}, first {}",
                r.tally.failures.len(),
                dir.display(),
                first.expect("at least one failure").display()
            )))
        }
        Command::Twosep { input, output } => {
            let g = read_graph(&input)?;
            if g.n() < 3 || !is_k_connected(&g, 2) {
                return Err(usage("input graph is not 2-connected"));
            }
            let td = two_sep_decomposition(&g).map_err(usage)?;
            td.validate(&g).map_err(CliError::Failed)?;
            let text = serde_json::to_string_pretty(&TwoSepReport::new(&g, &td)).expect("reports serialize") + "\n";
            write_output(out, output.as_deref(), &text)
        }
        Command::Report { input, emit, output } => {
            let text = read_source(&input)?;
            let report = Report::from_json(&text).map_err(|e| usage(format!("{input}: {e}")))?;
            write_output(out, output.as_deref(), &report.render(emit))
        }
    }
}

/// Writes a counterexample as an edge list with the failed check in a comment header.
fn dump(dir: &Path, suite: &str, i: usize, g: &Graph, what: &str) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    let p = dir.join(format!("{suite}-{i:04}.edgelist"));
    let header: String = what.lines().map(|l| format!("# {l}\n")).collect();
    fs::write(&p, header + &g.to_edgelist()).map_err(|e| usage(format!("{}: {e}", p.display())))?;
    Ok(p)
}
