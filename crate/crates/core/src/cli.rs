//! Command-line front end. [`run`] holds all logic so it can be driven in tests.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graphs::{self, CacheDir, Kind, StateCode};
use crate::solvers::closed_forms::{self, closed_forms};
use crate::solvers::sequences::{sds_endpoints, tts_endpoints};
use crate::solvers::{self, solve_basic, solve_compatible, transform_single};
use crate::verify::{self, Params, Suite};
use crate::words::{Config, CoupledConfig, MoveSeq, Order};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCOMPATIBLE: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

/// Largest disk count for printed twin-tower sequences.
pub const MAX_SEQUENCE_DISKS: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "twin-hanoi", version, about = "Hanoi Towers group action, twin-tower solvers and verification")]
struct Cli {
    /// Written order of printed move sequences.
    #[arg(long, value_enum, global = true, default_value_t = OrderArg::Written)]
    order: OrderArg,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    /// Right to left: the last letter is applied first.
    Written,
    /// Left to right, in application order.
    Applied,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Written => Order::Written,
            OrderArg::Applied => Order::Applied,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Produce a move sequence.
    #[command(subcommand)]
    Solve(SolveCommand),
    /// Exact graph distance between two states.
    Distance(DistanceArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Export a graph.
    Graph(GraphArgs),
    /// Print closed-form values.
    Tables {
        #[arg(long)]
        max_n: usize,
    },
    /// Inspect or clear the distance cache named by TWIN_HANOI_CACHE_DIR.
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum SolveCommand {
    /// Between two single-tower configurations.
    Classic {
        #[arg(long)]
        from: Config,
        #[arg(long)]
        to: Config,
    },
    /// Switch the towers (0^n, 2^n) -> (2^n, 0^n).
    Tts {
        #[arg(long)]
        n: usize,
        /// The alternative sequence (n >= 3).
        #[arg(long)]
        alt: bool,
    },
    /// Shift the small disks (0^n, 10..0) -> (10..0, 20..0).
    Sds {
        #[arg(long)]
        n: usize,
        /// The alternative sequence (even n >= 4).
        #[arg(long)]
        alt: bool,
    },
    /// Between two compatible coupled configurations "top,bottom".
    Twin {
        #[arg(long)]
        from: CoupledConfig,
        #[arg(long)]
        to: CoupledConfig,
        /// Print every stage of the solver (basic pairs only).
        #[arg(long)]
        plan: bool,
    },
}

#[derive(Args, Debug)]
struct DistanceArgs {
    /// Treat the states as coupled configurations "top,bottom".
    #[arg(long)]
    coupled: bool,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long)]
    max_n: usize,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include per-check wall-clock times (output is then not reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Lemma,
    Tts,
    Sds,
    Structure,
    Gp,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Lemma => Suite::Lemma,
            SuiteArg::Tts => Suite::Tts,
            SuiteArg::Sds => Suite::Sds,
            SuiteArg::Structure => Suite::Structure,
            SuiteArg::Gp => Suite::Gp,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Common-prefix length of the coupled component to export.
    #[arg(long)]
    component: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Single,
    Coupled,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CacheAction {
    Info,
    Clear,
}

/// Process-level entry point.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first), executes, and returns the exit code.
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
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Incompatible { .. } => EXIT_INCOMPATIBLE,
        Error::CapacityExceeded { .. } => EXIT_CAPACITY,
        Error::InvalidPeg(_)
        | Error::InvalidMove(_)
        | Error::MalformedCoupled(_)
        | Error::SizeMismatch(..)
        | Error::NotBasic(_)
        | Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let order = Order::from(cli.order);
    match &cli.command {
        Command::Solve(cmd) => solve(cmd, order, cli.json, out),
        Command::Distance(args) => distance(args, cli.json, out),
        Command::Verify(args) => run_verify(args, cli.json, out),
        Command::Graph(args) => {
            let kind = match args.kind {
                KindArg::Single => Kind::Single,
                KindArg::Coupled => Kind::Coupled,
            };
            let Format::Dot = args.format;
            out.write_all(graphs::export_dot(args.n, kind, args.component)?.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Tables { max_n } => tables(*max_n, cli.json, out),
        Command::Cache { action } => cache(*action, out),
    }
}

fn check_sequence_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("--n must be at least 1".into()));
    }
    if n > MAX_SEQUENCE_DISKS {
        return Err(Error::CapacityExceeded { needed: n as u64, budget: MAX_SEQUENCE_DISKS as u64 });
    }
    Ok(())
}

/// Applies `seq` once more before anything is printed.
fn revalidate<S: PartialEq + std::fmt::Display>(seq: &MoveSeq, from: &S, to: &S, apply: impl Fn(&S, &MoveSeq) -> S) -> Result<()> {
    if apply(from, seq) != *to {
        return Err(Error::NotAPath { word: seq.to_string(), from: from.to_string(), to: to.to_string() });
    }
    Ok(())
}

fn print_sequence(out: &mut dyn Write, json: bool, problem: &str, from: String, to: String, seq: &MoveSeq, order: Order) -> Result<()> {
    let rendered = seq.render(order);
    if json {
        let order_name = match order {
            Order::Written => "written",
            Order::Applied => "applied",
        };
        emit_json(
            out,
            &json!({ "problem": problem, "from": from, "to": to, "order": order_name, "sequence": rendered, "length": seq.len() }),
        )
    } else {
        writeln!(out, "{rendered}\nlength: {}", seq.len()).map_err(io)
    }
}

fn solve(cmd: &SolveCommand, order: Order, json: bool, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        SolveCommand::Classic { from, to } => {
            let seq = transform_single(from, to)?;
            revalidate(&seq, from, to, Config::apply_seq)?;
            print_sequence(out, json, "classic", from.to_string(), to.to_string(), &seq, order)?;
        }
        SolveCommand::Tts { n, alt } | SolveCommand::Sds { n, alt } => {
            check_sequence_size(*n)?;
            let is_tts = matches!(cmd, SolveCommand::Tts { .. });
            let (problem, (from, to)) = if is_tts { ("tts", tts_endpoints(*n)) } else { ("sds", sds_endpoints(*n)) };
            let seq = match (is_tts, alt) {
                (true, false) => solvers::tts_seq(*n),
                (true, true) if *n >= 3 => solvers::tts_alt_seq(*n),
                (false, false) => solvers::sds_seq(*n),
                (false, true) if *n >= 4 && n % 2 == 0 => solvers::sds_alt_seq(*n),
                _ => return Err(Error::InvalidArgument(format!("no alternative {problem} sequence for n = {n}"))),
            };
            revalidate(&seq, &from, &to, CoupledConfig::apply_seq)?;
            print_sequence(out, json, problem, from.to_string(), to.to_string(), &seq, order)?;
        }
        SolveCommand::Twin { from, to, plan } => {
            if from.len() != to.len() {
                return Err(Error::SizeMismatch(from.len(), to.len()));
            }
            if *plan {
                let (i, j) = (from.common_prefix_len(), to.common_prefix_len());
                if i != j {
                    return Err(Error::Incompatible { from: i, to: j });
                }
                let plan = solve_basic(from, to)?;
                revalidate(&plan.total, from, to, CoupledConfig::apply_seq)?;
                if json {
                    emit_json(out, &plan)?;
                } else {
                    writeln!(out, "{plan}").map_err(io)?;
                }
            } else {
                let seq = solve_compatible(from, to)?;
                revalidate(&seq, from, to, CoupledConfig::apply_seq)?;
                print_sequence(out, json, "twin", from.to_string(), to.to_string(), &seq, order)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn distance(args: &DistanceArgs, json: bool, out: &mut dyn Write) -> Result<i32> {
    let (kind, n, from, to, lcp) = if args.coupled {
        let (u, v): (CoupledConfig, CoupledConfig) = (args.from.parse()?, args.to.parse()?);
        if u.len() != v.len() {
            return Err(Error::SizeMismatch(u.len(), v.len()));
        }
        let lcp = (u.common_prefix_len(), v.common_prefix_len());
        (Kind::Coupled, u.len(), StateCode::coupled(&u), StateCode::coupled(&v), Some(lcp))
    } else {
        let (u, v): (Config, Config) = (args.from.parse()?, args.to.parse()?);
        if u.len() != v.len() {
            return Err(Error::SizeMismatch(u.len(), v.len()));
        }
        (Kind::Single, u.len(), StateCode::single(&u), StateCode::single(&v), None)
    };
    if let Some((i, j)) = lcp.filter(|(i, j)| i != j) {
        return Err(Error::Incompatible { from: i, to: j });
    }
    let d = match CacheDir::from_env() {
        Some(cache) => {
            let field = cache.load_or_compute(from, kind, n)?;
            field.get(to).map(u32::from).ok_or_else(|| Error::Internal("target unreached in its own component".into()))?
        }
        None => graphs::distance(from, to, kind, n)?,
    };
    if json {
        emit_json(out, &json!({ "kind": kind, "n": n, "from": args.from, "to": args.to, "distance": d }))?;
    } else {
        writeln!(out, "{d}").map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn run_verify(args: &VerifyArgs, json: bool, out: &mut dyn Write) -> Result<i32> {
    let params = Params { max_n: args.max_n, samples: args.samples, seed: args.seed };
    let report = verify::run_suite_with(args.suite.into(), params, args.timings)?;
    if json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "{report}").map_err(io)?;
    }
    Ok(if report.ok() { EXIT_OK } else { EXIT_FAILED })
}

fn tables(max_n: usize, json: bool, out: &mut dyn Write) -> Result<i32> {
    if max_n == 0 || max_n > closed_forms::MAX_CLOSED_FORM_N {
        return Err(Error::InvalidArgument(format!("--max-n must lie in 1..={}", closed_forms::MAX_CLOSED_FORM_N)));
    }
    let rows: Vec<_> = (1..=max_n).map(closed_forms).collect();
    if json {
        return emit_json(out, &rows).map(|_| EXIT_OK);
    }
    writeln!(out, "n\ta(n)\td(n)\tm(n)\t11/3*2^n\tsmall diam\tcomponent sizes (i = 0..n)").map_err(io)?;
    for r in &rows {
        let sizes = if r.component_sizes.is_empty() {
            "-".to_string()
        } else {
            r.component_sizes.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        };
        writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}\t{}", r.n, r.a, r.d, r.m, r.gp_bound, r.small_diam, sizes).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cache(action: CacheAction, out: &mut dyn Write) -> Result<i32> {
    let Some(cache) = CacheDir::from_env() else {
        writeln!(out, "no cache directory ({} is not set)", graphs::cache::CACHE_DIR_ENV).map_err(io)?;
        return Ok(EXIT_OK);
    };
    match action {
        CacheAction::Info => {
            let entries = cache.entries()?;
            writeln!(out, "{}: {} files", cache.root().display(), entries.len()).map_err(io)?;
            for (name, bytes) in entries {
                writeln!(out, "{name}\t{bytes}").map_err(io)?;
            }
        }
        CacheAction::Clear => {
            let removed = cache.clear()?;
            writeln!(out, "removed {removed} files from {}", cache.root().display()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("twin-hanoi").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spec_examples() {
        assert_eq!(call(&["solve", "sds", "--n", "2"]), (0, "bcacba\nlength: 6\n".into(), String::new()));
        assert_eq!(call(&["distance", "--coupled", "--from", "00,22", "--to", "22,00"]).1, "5\n");
        let (code, _, err) = call(&["solve", "twin", "--from", "00,01", "--to", "01,20"]);
        assert_eq!(code, EXIT_INCOMPATIBLE);
        assert!(err.contains("incompatible"));
    }

    #[test]
    fn orders_and_errors() {
        assert_eq!(call(&["--order", "applied", "solve", "classic", "--from", "20", "--to", "01"]).1, "ab\nlength: 2\n");
        assert_eq!(call(&["solve", "classic", "--from", "2x", "--to", "01"]).0, EXIT_USAGE);
        assert_eq!(call(&["solve", "classic", "--from", "2", "--to", "01"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["graph", "--n", "12", "--kind", "single"]).0, EXIT_CAPACITY);
        assert_eq!(call(&["solve", "tts", "--n", "40"]).0, EXIT_CAPACITY);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
