//! The `pathlen` command line.
//!
//! Exit statuses: 0 on success, 1 when the input is not a path-length
//! sequence (or a cross-check finds a counterexample), 2 on usage or parse
//! errors.

pub mod input;
pub mod render;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::islands::{
    annotate_islands, find_islands_fast, find_islands_fast_counted, find_islands_naive, island_tree,
};
use crate::oracle::{projected_work, theorem_crosscheck, Discrepancy};
use crate::sequence::LengthSeq;
use crate::treebuild::{path_lengths, reconstruct};
use crate::validator::{validate, Verdict};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` for which `bench` also runs the quadratic detector.
pub const NAIVE_BENCH_LIMIT: usize = 10_000;

pub const DEFAULT_WORK_LIMIT: u128 = 1_000_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "pathlen",
    version,
    about = "Path-length sequences of binary trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a sequence is the path-length sequence of a binary tree
    Validate(DocArgs),
    /// Print the tree of islands of a sequence
    Islands(DocArgs),
    /// Rebuild the tree of a valid sequence
    Build(DocArgs),
    /// Read a tree document and print its path-length sequence
    FromTree(InputArg),
    /// Compare the validator against exhaustive tree enumeration
    Crosscheck(CrosscheckArgs),
    /// Time the linear and quadratic island detectors on random input
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Codes,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Codes => "codes",
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Input file, or `-` for stdin
    #[arg(long, default_value = "-")]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct DocArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long, default_value_t = 8)]
    pub max_len: usize,
    #[arg(long, default_value_t = 8)]
    pub max_value: u32,
    /// Refuse to start when the projected enumeration exceeds this many steps
    #[arg(long, default_value_t = DEFAULT_WORK_LIMIT)]
    pub work_limit: u128,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<input::ParseError> for Failure {
    fn from(e: input::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Run the command line against the given streams and return the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let outcome = match &cli.command {
        Command::Validate(a) => cmd_validate(a, stdin, stdout),
        Command::Islands(a) => cmd_islands(a, stdin, stdout),
        Command::Build(a) => cmd_build(a, stdin, stdout, stderr),
        Command::FromTree(a) => cmd_from_tree(a, stdin, stdout),
        Command::Crosscheck(a) => cmd_crosscheck(a, stdout),
        Command::Bench(a) => cmd_bench(a, stdout),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    };
    let _ = stdout.flush();
    code
}

fn read_input(arg: &InputArg, stdin: &mut dyn Read) -> Result<String, Failure> {
    let bytes = if arg.input == "-" {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf)?;
        buf
    } else {
        fs::read(&arg.input).map_err(|e| Failure::Usage(format!("{}: {e}", arg.input)))?
    };
    String::from_utf8(bytes).map_err(|_| Failure::Usage("parse error: input is not UTF-8".into()))
}

fn read_sequence(arg: &InputArg, stdin: &mut dyn Read) -> Result<LengthSeq, Failure> {
    Ok(input::parse_sequence(&read_input(arg, stdin)?)?)
}

fn pick_format(
    requested: Option<Format>,
    allowed: &[Format],
    command: &str,
) -> Result<Format, Failure> {
    let format = requested.unwrap_or(allowed[0]);
    if !allowed.contains(&format) {
        let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
        return Err(Failure::Usage(format!(
            "{command} does not support --format {} (use one of: {})",
            format.name(),
            names.join(", ")
        )));
    }
    Ok(format)
}

fn cmd_validate(args: &DocArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    pick_format(args.format, &[Format::Text], "validate")?;
    let seq = read_sequence(&args.input, stdin)?;
    let verdict = validate(&seq);
    let mut report = String::new();
    match &verdict {
        Verdict::Valid => report.push_str("valid\n"),
        Verdict::Invalid(w) => {
            let _ = writeln!(report, "invalid\n{w}");
        }
    }
    for node in annotate_islands(&seq, &find_islands_fast(&seq)) {
        let _ = writeln!(report, "island {}", render::island_summary(&node));
    }
    out.write_all(report.as_bytes())?;
    Ok(if verdict.is_valid() {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    })
}

fn cmd_islands(args: &DocArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let format = pick_format(args.format, &[Format::Text, Format::Dot], "islands")?;
    let seq = read_sequence(&args.input, stdin)?;
    let text = match island_tree(&seq) {
        None => "no island tree\n".to_string(),
        Some(tree) if format == Format::Dot => render::island_tree_dot(&tree),
        Some(tree) => render::island_tree_text(&tree),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_build(
    args: &DocArgs,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let format = pick_format(
        args.format,
        &[Format::Json, Format::Dot, Format::Codes],
        "build",
    )?;
    let seq = read_sequence(&args.input, stdin)?;
    let tree = match reconstruct(&seq) {
        Ok(tree) => tree,
        Err(Error::Invalid(w)) => {
            writeln!(err, "invalid\n{w}")?;
            return Ok(EXIT_DOMAIN);
        }
        Err(e) => return Err(Failure::Usage(e.to_string())),
    };
    let text = match format {
        Format::Dot => render::tree_dot(&tree),
        Format::Codes => render::tree_codes(&tree),
        _ => render::tree_json(&tree),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_from_tree(args: &InputArg, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let tree = input::parse_tree(&read_input(args, stdin)?)?;
    writeln!(out, "{}", path_lengths(&tree))?;
    Ok(EXIT_OK)
}

fn cmd_crosscheck(args: &CrosscheckArgs, out: &mut dyn Write) -> Outcome {
    if args.max_len < 1 {
        return Err(Failure::Usage("--max-len must be at least 1".into()));
    }
    let projected = projected_work(args.max_len, args.max_value);
    if projected > args.work_limit {
        return Err(Failure::Usage(format!(
            "projected work {projected} exceeds --work-limit {}",
            args.work_limit
        )));
    }
    let report = theorem_crosscheck(args.max_len, args.max_value)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let mut text = String::new();
    for row in &report.per_length {
        let _ = writeln!(
            text,
            "n={}: candidates={} valid={} trees={}",
            row.n, row.candidates, row.accepted, row.trees
        );
    }
    let trees: Vec<String> = report
        .per_length
        .iter()
        .map(|r| r.trees.to_string())
        .collect();
    let _ = writeln!(
        text,
        "n≤{}: {} valid sequences, {} trees",
        args.max_len,
        report.accepted.len(),
        trees.join("+")
    );
    match &report.counterexample {
        None => text.push_str("pass\n"),
        Some(d) => {
            let line = match d {
                Discrepancy::AcceptedWithoutTree(s) => {
                    format!("{s} (accepted, but no tree has these path lengths)")
                }
                Discrepancy::TreeRejected(s) => {
                    format!("{s} (path lengths of a tree, but rejected)")
                }
                Discrepancy::DuplicateTreeSequence(s) => format!("{s} (shared by two trees)"),
            };
            let _ = writeln!(text, "counterexample: {line}\nfail");
        }
    }
    out.write_all(text.as_bytes())?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    })
}

/// Reproducible pseudo-random sequence with values in `1..=30`.
pub fn random_sequence(n: usize, seed: u64) -> LengthSeq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..n.max(1)).map(|_| rng.gen_range(1..=30)).collect();
    LengthSeq::new(values).expect("non-empty")
}

fn millis(d: Duration) -> String {
    format!("{:.3}ms", d.as_secs_f64() * 1e3)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Outcome {
    if args.n < 1 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let seq = random_sequence(args.n, args.seed);
    let mut text = format!("bench n={} seed={}\n", args.n, args.seed);

    let started = Instant::now();
    let (fast, ops) = find_islands_fast_counted(&seq);
    let fast_time = started.elapsed();
    let _ = writeln!(
        text,
        "fast: islands={} ops={} time={}",
        fast.len(),
        ops,
        millis(fast_time)
    );

    let mut agree = true;
    if args.n <= NAIVE_BENCH_LIMIT {
        let started = Instant::now();
        let naive = find_islands_naive(&seq);
        let naive_time = started.elapsed();
        agree = naive == fast;
        let _ = writeln!(
            text,
            "naive: islands={} time={}",
            naive.len(),
            millis(naive_time)
        );
        let _ = writeln!(text, "agree: {}", if agree { "yes" } else { "no" });
    } else {
        let _ = writeln!(text, "naive: skipped (n > {NAIVE_BENCH_LIMIT})");
    }
    let bound_ok = fast.len() < 2 * args.n;
    let _ = writeln!(
        text,
        "islands <= 2n-1: {}",
        if bound_ok { "ok" } else { "violated" }
    );
    out.write_all(text.as_bytes())?;
    Ok(if agree && bound_ok {
        EXIT_OK
    } else {
        EXIT_DOMAIN
    })
}
