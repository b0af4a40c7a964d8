//! Command-line front end.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::applications::{enumerate_plane_trees, enumerate_raney};
use crate::brickstack::{
    enumerate_stacks, render_ascii, sequence_to_stack, stack_to_sequence, validate, BrickStack,
};
use crate::counting::{
    catalan, count_q_satisfying, count_q_satisfying_length, count_q_stacks, count_q_stacks_total,
    generalized_catalan, CountValue,
};
use crate::error::Error;
use crate::seqcore::{enumerate_arrangements, enumerate_bitstrings, is_q_satisfying, BitString};
use crate::verify::{self, MontaghSweep, SweepReport, DEFAULT_INSTANCE_CAP};

pub const DEFAULT_OUTPUT_CAP: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(
    name = "bricklayer",
    version,
    about = "Exact counts, bijections and cycle-lemma checks for brick stacks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact count
    Count {
        kind: CountKind,
        #[command(flatten)]
        params: Params,
    },
    /// List every object of a kind, one per line
    Enumerate {
        kind: EnumKind,
        #[command(flatten)]
        params: Params,
    },
    /// Apply the stack/sequence bijection
    Map {
        direction: Direction,
        input: String,
        #[command(flatten)]
        params: Params,
    },
    /// Run an exhaustive or sampled verification sweep
    Verify {
        suite: Suite,
        #[command(flatten)]
        params: Params,
    },
    /// Draw a stack as ASCII art
    Render {
        input: String,
        #[arg(long)]
        shaved: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountKind {
    Stacks,
    Satisfying,
    Catalan,
    Gcatalan,
    Raney,
    Trees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Stacks,
    Sequences,
    Arrangements,
    Raney,
    Trees,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    StackToSeq,
    SeqToStack,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cycle,
    Strong,
    Stronger,
    Extended,
    PositionSum,
    ChungFeller,
    Montagh,
    Bijection,
    Recurrences,
    Satisfying,
    Raney,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub ones: Option<usize>,
    #[arg(long = "max-size")]
    pub max_size: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long)]
    pub cap: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Pass,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Ok => "OK",
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: String,
    /// Reason shown on standard error; only set for FAIL.
    pub diagnostic: Option<String>,
}

impl CommandResult {
    fn ok(payload: impl Into<String>) -> Self {
        Self {
            status: Status::Ok,
            payload: payload.into(),
            diagnostic: None,
        }
    }

    fn fail(payload: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            status: Status::Fail,
            payload: payload.into(),
            diagnostic: Some(reason.into()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

/// Bad flags or parameters; exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Outcome = Result<CommandResult, UsageError>;

fn need(value: Option<usize>, flag: &str, what: &str) -> Result<usize, UsageError> {
    value.ok_or_else(|| UsageError(format!("{what} requires --{flag}")))
}

fn usage(e: Error) -> UsageError {
    UsageError(e.to_string())
}

fn u(v: usize) -> u64 {
    v as u64
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Count { kind, params } => cmd_count(*kind, params),
        Command::Enumerate { kind, params } => cmd_enumerate(*kind, params),
        Command::Map {
            direction,
            input,
            params,
        } => cmd_map(*direction, input, params),
        Command::Verify { suite, params } => cmd_verify(*suite, params),
        Command::Render { input, shaved } => Ok(cmd_render(input, *shaved)),
    }
}

fn count_payload(value: &CountValue, format: Format) -> String {
    match format {
        Format::Text => value.to_string(),
        Format::Json => json!({ "count": value.to_string() }).to_string(),
    }
}

pub fn cmd_count(kind: CountKind, params: &Params) -> Outcome {
    let what = "count";
    let value = match kind {
        CountKind::Stacks => {
            let m = need(params.m, "m", "count stacks")?;
            let q = need(params.q, "q", "count stacks")?;
            let total = match params.n {
                Some(n) => count_q_stacks(u(m), u(n), u(q)),
                None => count_q_stacks_total(u(m), u(q)),
            };
            // only the empty stack has no bricks
            let nonempty = if params.n.unwrap_or(1) == 0 || total.is_zero() {
                CountValue::zero()
            } else if params.n.is_some() {
                total.clone()
            } else {
                CountValue::from(total.as_biguint() - 1u32)
            };
            let payload = match params.format {
                Format::Text => format!("total={total} nonempty={nonempty}"),
                Format::Json => json!({
                    "total": total.to_string(),
                    "nonempty": nonempty.to_string(),
                })
                .to_string(),
            };
            return Ok(CommandResult::ok(payload + "\n"));
        }
        CountKind::Satisfying => {
            let q = need(params.q, "q", "count satisfying")?;
            match (params.k, params.p, params.m) {
                (Some(k), Some(p), _) => count_q_satisfying(u(k), u(p), u(q)).map_err(usage)?,
                (_, _, Some(m)) => count_q_satisfying_length(u(m), u(q)),
                _ => {
                    return Err(UsageError(
                        "count satisfying requires --k and --p, or --m".into(),
                    ))
                }
            }
        }
        CountKind::Catalan => catalan(u(need(params.n, "n", "count catalan")?)),
        CountKind::Gcatalan | CountKind::Trees => {
            let n = need(params.n, "n", what)?;
            generalized_catalan(u(n), u(need(params.q, "q", what)?))
        }
        CountKind::Raney => {
            let k = need(params.k, "k", "count raney")?;
            generalized_catalan(u(k), u(need(params.q, "q", "count raney")?))
        }
    };
    Ok(CommandResult::ok(
        count_payload(&value, params.format) + "\n",
    ))
}

fn over_cap(cap: u64) -> UsageError {
    UsageError(format!(
        "output exceeds the cap of {cap} objects; raise it with --cap"
    ))
}

fn check_count(count: &CountValue, cap: u64) -> Result<(), UsageError> {
    match count.to_u64() {
        Some(c) if c <= cap => Ok(()),
        _ => Err(over_cap(cap)),
    }
}

fn lines<T>(
    items: impl IntoIterator<Item = T>,
    cap: u64,
    mut render: impl FnMut(&T) -> String,
) -> Result<String, UsageError> {
    let mut out = String::new();
    for (i, item) in items.into_iter().enumerate() {
        if i as u64 >= cap {
            return Err(over_cap(cap));
        }
        out.push_str(&render(&item));
        out.push('\n');
    }
    Ok(out)
}

fn text_or_json<T: fmt::Display>(format: Format) -> impl FnMut(&T) -> String {
    move |x| match format {
        Format::Text => x.to_string(),
        Format::Json => serde_json::Value::String(x.to_string()).to_string(),
    }
}

pub fn cmd_enumerate(kind: EnumKind, params: &Params) -> Outcome {
    let cap = params.cap.unwrap_or(DEFAULT_OUTPUT_CAP);
    let fmt = params.format;
    let payload = match kind {
        EnumKind::Stacks => {
            let m = need(params.m, "m", "enumerate stacks")?;
            let q = need(params.q, "q", "enumerate stacks")?;
            if q == 0 {
                return Err(UsageError("stacks need --q of at least 1".into()));
            }
            check_count(&count_q_stacks_total(u(m), u(q)), cap)?;
            let stacks = enumerate_stacks(m, q)
                .into_iter()
                .filter(|s| params.n.is_none_or(|n| s.base_bricks() == n));
            lines(stacks, cap, |s| match fmt {
                Format::Text => s.to_string(),
                Format::Json => serde_json::to_string(s).expect("stack serializes"),
            })?
        }
        EnumKind::Sequences => {
            let m = need(params.m, "m", "enumerate sequences")?;
            let q = need(params.q, "q", "enumerate sequences")?;
            let expected = match params.ones {
                Some(k) => count_q_stacks(u(m), u(k), u(q)),
                None => count_q_satisfying_length(u(m), u(q)),
            };
            check_count(&expected, cap)?;
            let ones: Vec<usize> = match params.ones {
                Some(k) if k <= m => vec![k],
                Some(_) => Vec::new(),
                None => (0..=m).collect(),
            };
            let seqs = ones
                .into_iter()
                .flat_map(|k| enumerate_bitstrings(k, m - k))
                .filter(|b| is_q_satisfying(b, q));
            lines(seqs, cap, text_or_json::<BitString>(fmt))?
        }
        EnumKind::Arrangements => {
            let ones = need(params.ones.or(params.k), "ones", "enumerate arrangements")?;
            let m = need(params.m, "m", "enumerate arrangements")?;
            if ones > m {
                return Err(UsageError("--ones cannot exceed --m".into()));
            }
            lines(
                enumerate_arrangements(ones, m - ones),
                cap,
                text_or_json(fmt),
            )?
        }
        EnumKind::Raney => {
            let k = need(params.k, "k", "enumerate raney")?;
            let q = need(params.q, "q", "enumerate raney")?;
            check_count(&generalized_catalan(u(k), u(q)), cap)?;
            lines(enumerate_raney(k, q), cap, text_or_json(fmt))?
        }
        EnumKind::Trees => {
            let n = need(params.n, "n", "enumerate trees")?;
            let q = need(params.q, "q", "enumerate trees")?;
            check_count(&generalized_catalan(u(n), u(q)), cap)?;
            lines(enumerate_plane_trees(n, q), cap, text_or_json(fmt))?
        }
    };
    Ok(CommandResult::ok(payload))
}

pub fn cmd_map(direction: Direction, input: &str, params: &Params) -> Outcome {
    let image = match direction {
        Direction::StackToSeq => input
            .parse::<BrickStack>()
            .and_then(|s| stack_to_sequence(&s))
            .map(|b| match params.format {
                Format::Text => b.to_string(),
                Format::Json => serde_json::Value::String(b.to_string()).to_string(),
            }),
        Direction::SeqToStack => {
            let q = need(params.q, "q", "map seq-to-stack")?;
            input
                .parse::<BitString>()
                .and_then(|b| sequence_to_stack(&b, q))
                .map(|s| match params.format {
                    Format::Text => s.to_string(),
                    Format::Json => serde_json::to_string(&s).expect("stack serializes"),
                })
        }
    };
    Ok(match image {
        Ok(text) => CommandResult::ok(text + "\n"),
        Err(e) => CommandResult::fail("", e.to_string()),
    })
}

pub fn cmd_render(input: &str, shaved: bool) -> CommandResult {
    let stack = match input.parse::<BrickStack>() {
        Ok(s) => s,
        Err(e) => return CommandResult::fail("", e.to_string()),
    };
    if let Err(violations) = validate(&stack) {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return CommandResult::fail("", list.join("\n"));
    }
    match render_ascii(&stack, shaved) {
        Ok(art) => CommandResult::ok(art),
        Err(e) => CommandResult::fail("", e.to_string()),
    }
}

fn run_suite(suite: Suite, params: &Params, cap: u64) -> crate::Result<SweepReport> {
    let q_max = params.q.unwrap_or(3);
    match suite {
        Suite::Cycle => verify::cycle_lemma_sweep(params.max_size.unwrap_or(14), q_max, cap),
        Suite::Strong => verify::strong_sweep(params.max_size.unwrap_or(14), cap),
        Suite::Stronger => verify::stronger_sweep(params.max_size.unwrap_or(10), cap),
        Suite::Extended => verify::extended_sweep(
            params.max_size.unwrap_or(12),
            params.p.unwrap_or(4),
            q_max,
            params.m.unwrap_or(10),
            cap,
        ),
        Suite::PositionSum => verify::position_sum_sweep(params.max_size.unwrap_or(14), cap),
        Suite::ChungFeller => verify::chung_feller_sweep(params.n.unwrap_or(7), cap),
        Suite::Montagh => {
            let defaults = MontaghSweep::default();
            verify::montagh_sweep(
                MontaghSweep {
                    sample_n: params.n.unwrap_or(defaults.sample_n),
                    samples: params.k.unwrap_or(defaults.samples),
                    seed: params.seed.unwrap_or(defaults.seed),
                    ..defaults
                },
                cap,
            )
        }
        Suite::Bijection => {
            let qs: Vec<usize> = match params.q {
                Some(q) => vec![q],
                None => vec![1, 2, 3],
            };
            verify::bijection_sweep(params.m.unwrap_or(8), &qs, cap)
        }
        Suite::Recurrences => verify::recurrence_sweep(
            params.m.unwrap_or(40),
            q_max,
            params.n.unwrap_or(12),
            20,
            cap,
        ),
        Suite::Satisfying => verify::satisfying_count_sweep(params.m.unwrap_or(14), q_max, cap),
        Suite::Raney => {
            verify::raney_tree_sweep(params.k.unwrap_or(6), params.n.unwrap_or(5), q_max, cap)
        }
    }
}

pub fn cmd_verify(suite: Suite, params: &Params) -> Outcome {
    if suite == Suite::Bijection && params.q == Some(0) {
        return Err(UsageError("stacks need --q of at least 1".into()));
    }
    let cap = params.cap.unwrap_or(DEFAULT_INSTANCE_CAP);
    let report = match run_suite(suite, params, cap) {
        Ok(r) => r,
        Err(Error::CapExceeded { cap }) => {
            return Err(UsageError(format!(
                "sweep exceeds the cap of {cap} instances; raise it with --cap"
            )))
        }
        Err(e) => return Err(usage(e)),
    };
    let name = suite
        .to_possible_value()
        .expect("suites are named")
        .get_name()
        .to_string();
    let failed = report.failures().count();
    let status = if failed == 0 {
        Status::Pass
    } else {
        Status::Fail
    };
    let mut payload = String::new();
    for r in report.failures() {
        match params.format {
            Format::Text => payload.push_str(&r.to_string()),
            Format::Json => payload.push_str(
                &json!({
                    "object": r.object,
                    "property": r.property,
                    "observed": r.observed,
                    "expected": r.expected,
                    "status": "FAIL",
                })
                .to_string(),
            ),
        }
        payload.push('\n');
    }
    let summary = match params.format {
        Format::Text => format!("{name}: {status} checked={} failed={failed}", report.len()),
        Format::Json => json!({
            "suite": name,
            "status": status.to_string(),
            "checked": report.len(),
            "failed": failed,
        })
        .to_string(),
    };
    payload.push_str(&summary);
    payload.push('\n');
    Ok(CommandResult {
        status,
        payload,
        diagnostic: (failed > 0).then(|| format!("{failed} of {} checks failed", report.len())),
    })
}

/// Parses arguments, runs the command, writes output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(result) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(result.payload.as_bytes());
            let _ = out.flush();
            if let Some(reason) = &result.diagnostic {
                eprintln!("FAIL: {reason}");
            }
            result.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
