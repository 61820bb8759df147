//! Command-line front end.
//!
//! Exit codes: `0` yes, feasible or success; `1` no or infeasible; `2` usage
//! or input error; `3` the instance is outside every supported route.

mod format;

use std::fmt::Write as _;

use clap::{Parser, Subcommand};

pub use format::{format_graph, format_split_instance, parse_graph, ParseError};

use crate::generators::{generate, GenClass, GenSpec};
use crate::graph::{Coloring, Graph};
use crate::oracle::{brute_profile, DEFAULT_CAP, MAX_CAP};
use crate::recognition::{classify, Verdict};
use crate::reduction::build_split_instance;
use crate::solvers::{Prepared, Route, SolveError};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Exit code plus the text destined for standard output and error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn out(code: i32, stdout: String) -> Self {
        CommandOutcome { code, stdout, stderr: String::new() }
    }

    fn err(code: i32, msg: impl std::fmt::Display) -> Self {
        CommandOutcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Debug, Parser)]
#[command(name = "bwcolor", version, about = "Black-and-white coloring on special graph classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every class recognizer.
    Classify { file: String },
    /// Decide whether B black and W white vertices fit.
    Solve {
        file: String,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        w: usize,
        /// Print the coloring when feasible.
        #[arg(long)]
        certificate: bool,
        /// Force a solver instead of the dispatch order.
        #[arg(long)]
        via: Option<String>,
    },
    /// Print the max-white profile, one `b f(b)` line per black count.
    Profile {
        file: String,
        #[arg(long)]
        via: Option<String>,
    },
    /// Print a seeded random graph of the given class.
    Generate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        density: Option<f64>,
    },
    /// Print the split-graph instance for a clique size.
    Reduce {
        file: String,
        #[arg(long)]
        s: usize,
    },
    /// Print the profile by exhaustive enumeration.
    Oracle {
        file: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check a coloring given as comma-separated id lists.
    Verify {
        file: String,
        #[arg(long, default_value = "")]
        black: String,
        #[arg(long, default_value = "")]
        white: String,
    },
}

fn read_graph(path: &str) -> Result<Graph, CommandOutcome> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| CommandOutcome::err(EXIT_USAGE, format!("{path}: {e}")))?;
    parse_graph(&text).map_err(|e| CommandOutcome::err(EXIT_USAGE, format!("{path}: {e}")))
}

fn prepare(g: &Graph, via: Option<&str>) -> Result<Prepared, CommandOutcome> {
    let prepared = match via {
        Some(name) => name.parse::<Route>().and_then(|r| Prepared::for_route(g, r)),
        None => Prepared::dispatch(g),
    };
    prepared.map_err(|e| match e {
        SolveError::Unsupported { .. } => CommandOutcome::err(EXIT_UNSUPPORTED, e),
        _ => CommandOutcome::err(EXIT_USAGE, e),
    })
}

fn id_list(ids: impl IntoIterator<Item = usize>) -> String {
    ids.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn parse_ids(list: &str) -> Result<Vec<usize>, CommandOutcome> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CommandOutcome::err(EXIT_USAGE, format!("bad vertex id `{s}`"))))
        .collect()
}

fn certificate_lines(c: &Coloring) -> String {
    let line = |tag: &str, ids: &std::collections::BTreeSet<usize>| {
        if ids.is_empty() {
            format!("{tag}:\n")
        } else {
            format!("{tag}: {}\n", id_list(ids.iter().copied()))
        }
    };
    line("B", &c.black) + &line("W", &c.white)
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                CommandOutcome::out(EXIT_YES, text)
            };
        }
    };
    execute(cli.command).unwrap_or_else(|failure| failure)
}

fn execute(command: Command) -> Result<CommandOutcome, CommandOutcome> {
    Ok(match command {
        Command::Classify { file } => {
            let g = read_graph(&file)?;
            let mut out = String::new();
            for (class, verdict) in classify(&g).verdicts {
                let _ = match verdict {
                    Verdict::Member => writeln!(out, "{}=yes", class.name()),
                    Verdict::NonMember(Some(w)) => {
                        let ids: Vec<String> = w.vertices.iter().map(ToString::to_string).collect();
                        writeln!(out, "{}=no witness={}", class.name(), ids.join(","))
                    }
                    Verdict::NonMember(None) => writeln!(out, "{}=no", class.name()),
                    Verdict::Undetermined => writeln!(out, "{}=unknown", class.name()),
                };
            }
            CommandOutcome::out(EXIT_YES, out)
        }
        Command::Solve { file, b, w, certificate, via } => {
            let g = read_graph(&file)?;
            let prepared = prepare(&g, via.as_deref())?;
            let found = prepared.certificate(b, w);
            let verdict = if found.is_some() { "feasible" } else { "infeasible" };
            let mut out = format!("route={} {verdict} b={b} w={w}\n", prepared.route());
            if let (true, Some(c)) = (certificate, &found) {
                out.push_str(&certificate_lines(c));
            }
            CommandOutcome::out(if found.is_some() { EXIT_YES } else { EXIT_NO }, out)
        }
        Command::Profile { file, via } => {
            let g = read_graph(&file)?;
            let prepared = prepare(&g, via.as_deref())?;
            CommandOutcome::out(EXIT_YES, prepared.profile().to_string())
        }
        Command::Generate { class, n, seed, density } => {
            let class: GenClass = class.parse().map_err(|e| CommandOutcome::err(EXIT_USAGE, e))?;
            let mut spec = GenSpec::new(class, n, seed);
            spec.density = density;
            let generated = generate(&spec).map_err(|e| CommandOutcome::err(EXIT_USAGE, e))?;
            CommandOutcome::out(EXIT_YES, format_graph(&generated.graph))
        }
        Command::Reduce { file, s } => {
            let g = read_graph(&file)?;
            let inst = build_split_instance(&g, s).map_err(|e| CommandOutcome::err(EXIT_USAGE, e))?;
            CommandOutcome::out(EXIT_YES, format_split_instance(&inst))
        }
        Command::Oracle { file, cap } => {
            if cap > MAX_CAP {
                return Err(CommandOutcome::err(EXIT_USAGE, format!("cap {cap} exceeds the maximum of {MAX_CAP}")));
            }
            let g = read_graph(&file)?;
            let f = brute_profile(&g, cap).map_err(|e| CommandOutcome::err(EXIT_UNSUPPORTED, e))?;
            CommandOutcome::out(EXIT_YES, f.to_string())
        }
        Command::Verify { file, black, white } => {
            let g = read_graph(&file)?;
            let c = Coloring::new(parse_ids(&black)?, parse_ids(&white)?);
            let ok = g.verify_coloring(&c).map_err(|e| CommandOutcome::err(EXIT_USAGE, e))?;
            let verdict = if ok { "valid" } else { "invalid" };
            CommandOutcome::out(if ok { EXIT_YES } else { EXIT_NO }, format!("{verdict} b={} w={}\n", c.b(), c.w()))
        }
    })
}
