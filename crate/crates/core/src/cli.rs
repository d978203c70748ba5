//! Command-line front end: `analyze`, `compare` and `gen`.
//!
//! Exit codes: 0 on success, 1 for input or computation errors, 2 for usage
//! errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::advisor::{analyze, compare_orderings, gen_grid_family, gen_lattice_family, render_rows, Strategy};
use crate::chordal::{associated_graph, elimination_game, enumerate_peos, is_chordal, min_fill_ordering, Ordering};
use crate::io::{analysis_report, compare_report, graph_dot, parse_system, render_analysis, tree_dot, InputSystem, ReportOptions};
use crate::projection::Operator;

#[derive(Parser, Debug)]
#[command(name = "chordcad", version, about = "Variable orderings and projection sets for CAD")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Choose an ordering, project along it and report bounds.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Project under several orderings and tabulate the results.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Write a benchmark family as an input file.
    Gen {
        #[command(subcommand)]
        family: FamilyCmd,
        /// Output path; standard output when absent.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// `x_k x_{k+3} - x_{k+1} x_{k+2}` for k = 1..n-3.
    Lattice { n: usize },
    /// Four binomials per cell of an n1 by n2 grid.
    Grid { n1: usize, n2: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    MinHeightPeo,
    MinFill,
    Given,
    Enumerate,
}

#[derive(Args, Debug)]
struct CommonOpts {
    #[arg(long, default_value = "mccallum")]
    operator: Operator,
    /// Defaults to `given` when an ordering is supplied, else `min-height-peo`.
    #[arg(long, value_enum)]
    strategy: Option<StrategyArg>,
    /// Ordering such as "x4>x5>x3>x2>x1". `compare` accepts it repeatedly.
    #[arg(long)]
    ordering: Vec<String>,
    #[arg(long, default_value_t = 64)]
    max_enumerate: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    dot_graph: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    dot_tree: Option<PathBuf>,
    /// Include canonical polynomial text in the report.
    #[arg(long)]
    show_polys: bool,
    /// Include wall-clock timings (reports are then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

enum Failure {
    Usage(String),
    Input(String),
}

type Outcome = Result<(), Failure>;

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

/// Runs the command line `args` (program name first), writing normal output
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Analyze { file, opts } => cmd_analyze(&file, &opts, out),
        Command::Compare { file, opts } => cmd_compare(&file, &opts, out),
        Command::Gen { family, out: path } => cmd_gen(&family, path.as_deref(), out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn load(path: &Path) -> Result<InputSystem, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let sys = parse_system(&text)
        .map_err(|e| Failure::Input(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message)))?;
    if sys.set().is_empty() {
        return Err(Failure::Input(format!("{}: empty system", path.display())));
    }
    Ok(sys)
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_ordering(text: &str, sys: &InputSystem) -> Result<Ordering, Failure> {
    Ordering::parse(text, &sys.table).map_err(|e| Failure::Input(format!("ordering \"{text}\": {e}")))
}

fn strategy(opts: &CommonOpts, sys: &InputSystem) -> Result<Strategy, Failure> {
    let chosen = opts.strategy.unwrap_or(if opts.ordering.is_empty() {
        StrategyArg::MinHeightPeo
    } else {
        StrategyArg::Given
    });
    if chosen != StrategyArg::Given && !opts.ordering.is_empty() {
        return Err(Failure::Usage("--ordering only applies to --strategy given".to_string()));
    }
    Ok(match chosen {
        StrategyArg::MinHeightPeo => Strategy::MinHeightPeo,
        StrategyArg::MinFill => Strategy::MinFill,
        StrategyArg::Enumerate => {
            if opts.max_enumerate == 0 {
                return Err(Failure::Usage("--max-enumerate must be positive".to_string()));
            }
            Strategy::EnumerateAll {
                cap: opts.max_enumerate,
                seed: opts.seed,
                operator: opts.operator,
            }
        }
        StrategyArg::Given => match opts.ordering.as_slice() {
            [one] => Strategy::Given(parse_ordering(one, sys)?),
            [] => return Err(Failure::Usage("--strategy given needs --ordering".to_string())),
            _ => return Err(Failure::Usage("analyze takes a single --ordering".to_string())),
        },
    })
}

fn cmd_analyze(file: &Path, opts: &CommonOpts, out: &mut dyn Write) -> Outcome {
    let sys = load(file)?;
    let s = strategy(opts, &sys)?;
    let f = sys.set();
    let a = analyze(&f, &s, opts.operator).map_err(input_err)?;
    let report = analysis_report(
        &f,
        &a,
        &sys.table,
        ReportOptions {
            show_polys: opts.show_polys,
            timings: opts.timings,
        },
    );
    if let Some(p) = &opts.json {
        write_file(p, &(serde_json::to_string_pretty(&report).map_err(input_err)? + "\n"))?;
    }
    if let Some(p) = &opts.dot_graph {
        write_file(p, &graph_dot(&a.rationale.structure, &a.rationale.fill_edges, &sys.table))?;
    }
    if let Some(p) = &opts.dot_tree {
        write_file(p, &tree_dot(&a.tree, &sys.table))?;
    }
    write!(out, "{}", render_analysis(&report)).map_err(input_err)
}

fn cmd_compare(file: &Path, opts: &CommonOpts, out: &mut dyn Write) -> Outcome {
    let sys = load(file)?;
    let f = sys.set();
    if opts.dot_graph.is_some() || opts.dot_tree.is_some() {
        return Err(Failure::Usage("DOT output is only produced by analyze".to_string()));
    }
    let orderings: Vec<Ordering> = if opts.ordering.is_empty() {
        if opts.max_enumerate == 0 {
            return Err(Failure::Usage("--max-enumerate must be positive".to_string()));
        }
        let g = associated_graph(&f);
        let h = if is_chordal(&g) {
            g
        } else {
            elimination_game(&g, &min_fill_ordering(&g)).map_err(input_err)?.graph
        };
        enumerate_peos(&h, opts.max_enumerate, opts.seed).map_err(input_err)?
    } else {
        opts.ordering.iter().map(|t| parse_ordering(t, &sys)).collect::<Result<_, _>>()?
    };
    let rows = compare_orderings(&f, &orderings, opts.operator);
    let report = compare_report(
        &f,
        &rows,
        opts.operator,
        &sys.table,
        ReportOptions {
            show_polys: opts.show_polys,
            timings: opts.timings,
        },
    );
    if let Some(p) = &opts.json {
        write_file(p, &(serde_json::to_string_pretty(&report).map_err(input_err)? + "\n"))?;
    }
    write!(out, "{}", render_rows(&rows, &sys.table, opts.timings)).map_err(input_err)
}

fn cmd_gen(family: &FamilyCmd, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let fam = match *family {
        FamilyCmd::Lattice { n } => gen_lattice_family(n),
        FamilyCmd::Grid { n1, n2 } => gen_grid_family(n1, n2),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    let text = fam.to_text();
    match path {
        Some(p) => write_file(p, &text),
        None => write!(out, "{text}").map_err(input_err),
    }
}
