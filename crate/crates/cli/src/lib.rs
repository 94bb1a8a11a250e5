//! Command-line front end for `learnspace`.
//!
//! [`run`] parses a command line, writes to the given sinks and returns the
//! process exit code: 0 on success, 1 when the checked predicate or claim is
//! false, 2 on usage, file or format errors.

pub mod format;

use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use learnspace::oracle::{
    enumerate_knowledge_structures, enumerate_learning_spaces, random_learning_space,
    sweep_exhaustive, sweep_random, GeneratorConfig, RandomSweep, Suite, VerificationReport,
};
use learnspace::{assess_recursive, AssessConfig, LatentResponder, SetFamily, StateSet};
use serde::Serialize;

pub use format::{parse_family, serialize_family, FamilyDocument, Format, FormatError, Parsed};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "learnspace",
    version,
    about = "Learning spaces, projections and recursive assessment"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Family file (JSON document or compact lines); `-` reads stdin.
    file: PathBuf,
}

#[derive(Debug, Args)]
struct Projected {
    #[command(flatten)]
    input: Input,
    /// Comma-separated items of the projection subset.
    #[arg(long)]
    items: String,
}

#[derive(Debug, Args)]
struct Output {
    /// Write JSON documents instead of compact lines.
    #[arg(long)]
    json: bool,
}

impl Output {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Lines
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report which structural predicates hold; exit 0 iff a learning space.
    Check(Input),
    /// Write the projection on a subset.
    Project {
        #[command(flatten)]
        target: Projected,
        #[command(flatten)]
        output: Output,
    },
    /// List the equivalence classes induced by a subset.
    Partition(Projected),
    /// Write each distinct child with its trivial/plus status.
    Children {
        #[command(flatten)]
        target: Projected,
        #[command(flatten)]
        output: Output,
    },
    /// Test whether a subset is yielding; exit 1 with a violation if not.
    Yielding(Projected),
    /// Run the recursive assessment against a simulated latent state.
    Assess {
        #[command(flatten)]
        input: Input,
        /// Latent state, comma-separated; `-` for the empty state.
        #[arg(long)]
        true_state: String,
        /// First-level subset; later levels use the balanced rule.
        #[arg(long)]
        items: Option<String>,
        /// Target subset size per level.
        #[arg(long)]
        split_size: Option<usize>,
        #[arg(long, default_value_t = 64)]
        max_depth: usize,
    },
    /// Stream all learning spaces (or knowledge structures) on n items.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Enumerate every knowledge structure instead.
        #[arg(long)]
        structures: bool,
    },
    /// Emit a seeded random learning space.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 40)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Run an oracle sweep; exhaustive unless `--seeds` is given.
    Verify {
        #[arg(long)]
        suite: Suite,
        /// Item count (exhaustive default 4, random default 6).
        #[arg(long)]
        n: Option<usize>,
        /// Number of generated spaces for a random sweep.
        #[arg(long)]
        seeds: Option<usize>,
        #[arg(long, default_value_t = 0)]
        first_seed: u64,
        #[arg(long, default_value_t = 40)]
        steps: usize,
        #[arg(long, default_value_t = 20)]
        subsets: usize,
        /// Print the summary as JSON only.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load(input: &Input, err: &mut dyn Write) -> Result<SetFamily, Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(&input.file)
            .map_err(|e| Failure(format!("{}: {e}", input.file.display())))?
    };
    let parsed =
        parse_family(&text).map_err(|e| Failure(format!("{}: {e}", input.file.display())))?;
    for w in &parsed.warnings {
        writeln!(err, "warning: {}: {w}", input.file.display())?;
    }
    Ok(parsed.family)
}

fn parse_items(family: &SetFamily, items: &str) -> Result<StateSet, Failure> {
    let items = items.trim();
    if items == "-" || items.is_empty() {
        return Ok(StateSet::EMPTY);
    }
    Ok(family.domain().state(items.split(',').map(str::trim))?)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Check(input) => check(&load(&input, err)?, out),
        Command::Project { target, output } => {
            let f = load(&target.input, err)?;
            let subset = parse_items(&f, &target.items)?;
            let p = f.project(subset)?;
            out.write_all(serialize_family(&p, output.format()).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Partition(target) => {
            let f = load(&target.input, err)?;
            let subset = parse_items(&f, &target.items)?;
            let partition = f.partition_by(subset)?;
            for class in partition.classes() {
                writeln!(
                    out,
                    "trace {} core {} members {}: {}",
                    f.format_state(class.trace()),
                    f.format_state(class.core()),
                    class.members().len(),
                    class.members()
                )?;
            }
            writeln!(out, "classes: {}", partition.len())?;
            Ok(EXIT_OK)
        }
        Command::Children { target, output } => {
            let f = load(&target.input, err)?;
            let subset = parse_items(&f, &target.items)?;
            let kids = f.children(subset)?;
            let format = output.format();
            for (i, child) in kids.iter().enumerate() {
                let status = if child.is_trivial() {
                    "trivial".to_string()
                } else {
                    let plus = child.plus()?;
                    format!(
                        "plus child learning space: {}",
                        yes(plus.family().is_learning_space())
                    )
                };
                writeln!(
                    out,
                    "# child {} trace {}: {status}",
                    i + 1,
                    f.format_state(child.origin_trace())
                )?;
                out.write_all(serialize_family(child.family(), format).as_bytes())?;
            }
            writeln!(out, "# children: {}", kids.len())?;
            Ok(EXIT_OK)
        }
        Command::Yielding(target) => {
            let f = load(&target.input, err)?;
            let subset = parse_items(&f, &target.items)?;
            match f.yielding_violation(subset)? {
                None => {
                    writeln!(out, "yielding: true")?;
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    writeln!(out, "yielding: false")?;
                    writeln!(
                        out,
                        "violation: minimal state {} in class trace {} with core {}",
                        f.format_state(v.minimal_state),
                        f.format_state(v.trace),
                        f.format_state(v.core)
                    )?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Assess {
            input,
            true_state,
            items,
            split_size,
            max_depth,
        } => {
            let f = load(&input, err)?;
            let t = parse_items(&f, &true_state)?;
            let mut cfg = match items {
                Some(items) => AssessConfig::with_first_subset(parse_items(&f, &items)?),
                None => AssessConfig::default(),
            };
            cfg.split_size = split_size;
            cfg.max_depth = max_depth;
            let responder = LatentResponder::new(&f, t)?;
            let session = match assess_recursive(&f, &cfg, &responder) {
                Ok(s) => s,
                Err(learnspace::Error::DepthExhausted {
                    session,
                    candidates,
                    ..
                }) => {
                    out.write_all(session.transcript().as_bytes())?;
                    writeln!(out, "depth exhausted; candidates {candidates}")?;
                    return Ok(EXIT_FALSE);
                }
                Err(e) => return Err(e.into()),
            };
            out.write_all(session.transcript().as_bytes())?;
            writeln!(out, "queries: {}", session.query_count())?;
            let recovered = session.result == Some(t);
            writeln!(out, "recovered: {}", yes(recovered))?;
            Ok(if recovered { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Enumerate { n, structures } => {
            let mut count = 0usize;
            if structures {
                for f in enumerate_knowledge_structures(n)? {
                    writeln!(out, "{f}")?;
                    count += 1;
                }
            } else {
                for f in enumerate_learning_spaces(n)? {
                    writeln!(out, "{f}")?;
                    count += 1;
                }
            }
            writeln!(out, "count: {count}")?;
            Ok(EXIT_OK)
        }
        Command::Generate {
            n,
            steps,
            seed,
            output,
        } => {
            let f = random_learning_space(&GeneratorConfig::new(n, steps, seed))?;
            out.write_all(serialize_family(&f, output.format()).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            n,
            seeds,
            first_seed,
            steps,
            subsets,
            json,
        } => {
            let report = match seeds {
                None => sweep_exhaustive(suite, n.unwrap_or(4))?,
                Some(spaces) => sweep_random(
                    suite,
                    &RandomSweep {
                        item_count: n.unwrap_or(6),
                        growth_steps: steps,
                        first_seed,
                        spaces,
                        subsets_per_space: subsets,
                    },
                )?,
            };
            let summary = Summary::from(&report);
            if json {
                serde_json::to_writer_pretty(&mut *out, &summary)?;
                writeln!(out)?;
            } else {
                write!(out, "{report}")?;
                writeln!(
                    out,
                    "summary: {} claims, {} failing, {}",
                    summary.claims.len(),
                    summary.claims.iter().filter(|c| !c.holds).count(),
                    if summary.holds { "PASS" } else { "FAIL" }
                )?;
            }
            Ok(if report.holds() { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

fn check(f: &SetFamily, out: &mut dyn Write) -> Outcome {
    let rows = [
        ("knowledge structure", f.is_knowledge_structure()),
        (
            "partial knowledge structure",
            f.is_partial_knowledge_structure(),
        ),
        ("union-closed", f.is_union_closed()),
        ("well-graded", f.is_well_graded()),
        ("accessible", f.is_accessible()),
        ("L1 learning smoothness", f.satisfies_l1()),
        ("L2 learning consistency", f.satisfies_l2()),
        ("learning space", f.is_learning_space()),
        ("partial learning space", f.is_partial_learning_space()),
    ];
    writeln!(out, "states: {} items: {}", f.len(), f.ground().len())?;
    for (name, holds) in rows {
        writeln!(out, "{name}: {}", yes(holds))?;
    }
    Ok(if f.is_learning_space() {
        EXIT_OK
    } else {
        EXIT_FALSE
    })
}

/// Machine-readable sweep summary.
#[derive(Debug, Serialize)]
pub struct Summary {
    pub instance: String,
    pub holds: bool,
    pub claims: Vec<ClaimSummary>,
}

#[derive(Debug, Serialize)]
pub struct ClaimSummary {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<String>,
}

impl From<&VerificationReport> for Summary {
    fn from(r: &VerificationReport) -> Self {
        Summary {
            instance: r.instance.clone(),
            holds: r.holds(),
            claims: r
                .claims
                .iter()
                .map(|c| ClaimSummary {
                    name: c.name.clone(),
                    checked: c.checked,
                    failures: c.failures,
                    holds: c.holds(),
                    evidence: c.evidence.as_ref().map(ToString::to_string),
                })
                .collect(),
        }
    }
}
