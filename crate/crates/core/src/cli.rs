//! Argument handling for the `ait` binary.
//!
//! Output is one record per line. With `--json` every line is a standalone
//! JSON object carrying a `config` echo; otherwise lines are plain text and
//! the config goes to stderr once.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a request
//! exceeds a configured cap.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bits::BitString;
use crate::census::{census, census_prefix, deficiency_profile};
use crate::codec::{decode_pair, encode_pair, pad, PairLevel};
use crate::complexity::{estimate_k, estimate_k_cond, estimate_k_pair, Estimate, EstimateError};
use crate::dovetail::sweep;
use crate::error::Error;
use crate::machine::{run, run_traced, ExecBudget, RunOutcome, DEFAULT_TAPE_CELLS};
use crate::prefix::{estimate_h, omega_estimate};
use crate::randomness::{
    frequency_stats, lil_statistic, ml_test_eval, select_subsequence, FiniteMLTest, SelectionRule,
    SequenceSource, Verdict,
};
use crate::tmprofiler::{crossing_sequences, quadratic_report, run_palindrome_tm};

/// Environment variable naming the machine documentation echoed in headers.
pub const MACHINE_DOC_VAR: &str = "AIT_MACHINE_DOC";
const DEFAULT_MACHINE_DOC: &str = "docs/machines.md";

/// Limits and settings shared by every subcommand, echoed with the output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub max_sweep_horizon: u64,
    pub max_omega_horizon: u64,
    pub max_run_steps: u64,
    pub max_tm_len: usize,
    pub tape_cells: usize,
    pub machine_doc: String,
    pub json: bool,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_sweep_horizon: 20,
            max_omega_horizon: 30,
            max_run_steps: 1 << 32,
            max_tm_len: 1 << 12,
            tape_cells: DEFAULT_TAPE_CELLS,
            machine_doc: DEFAULT_MACHINE_DOC.into(),
            json: false,
            seed: 0,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ait", version, about = "Algorithmic information toolkit")]
struct Cli {
    /// Emit JSON lines.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Tape cells available to machine runs.
    #[arg(long, global = true, default_value_t = DEFAULT_TAPE_CELLS)]
    tape_cells: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Doubles every bit and appends "01".
    Pad { bits: BitString },
    /// Pair codes.
    #[command(subcommand)]
    Pair(PairCmd),
    /// Runs one machine of the enumeration.
    Run {
        #[arg(long)]
        machine: u64,
        #[arg(long, default_value = "")]
        input: BitString,
        #[arg(long)]
        steps: u64,
        #[arg(long)]
        tape: Option<usize>,
        /// Stream every transition (table machines only).
        #[arg(long)]
        trace: bool,
    },
    /// Halting events of the universal machine, in stage order.
    Sweep {
        #[arg(long)]
        horizon: u64,
    },
    /// Plain, conditional or pair complexity estimate.
    K {
        #[arg(long)]
        target: BitString,
        #[arg(long)]
        horizon: u64,
        #[arg(long, conflicts_with = "pair")]
        cond: Option<BitString>,
        #[arg(long)]
        pair: Option<BitString>,
    },
    /// Prefix complexity estimate.
    H {
        #[arg(long)]
        target: BitString,
        #[arg(long)]
        horizon: u64,
    },
    /// Lower bound on the halting probability of the prefix machine.
    Omega {
        #[arg(long)]
        horizon: u64,
        #[arg(long, default_value_t = 16)]
        digits: usize,
    },
    /// Counts compressible strings of one length.
    Census {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        horizon: u64,
        #[arg(long)]
        prefix: bool,
    },
    /// Prefix deficiency profile of a sequence.
    Deficiency {
        #[arg(long)]
        source: String,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        horizon: u64,
    },
    /// Sequence tests.
    #[command(subcommand)]
    Random(RandomCmd),
    /// The palindrome machine.
    #[command(subcommand)]
    Tm(TmCmd),
}

#[derive(Subcommand, Debug)]
enum PairCmd {
    Encode {
        #[arg(long)]
        level: u8,
        u: BitString,
        v: BitString,
    },
    Decode {
        #[arg(long)]
        level: u8,
        w: BitString,
    },
}

#[derive(Args, Debug)]
struct SourceArgs {
    #[arg(long)]
    source: String,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum RandomCmd {
    Freq(SourceArgs),
    Select {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        rule: String,
    },
    Lil(SourceArgs),
    Mltest {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        test: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum TmCmd {
    Palindrome {
        #[arg(long, default_value = "")]
        input: BitString,
        #[arg(long)]
        trace: bool,
    },
    Quadratic {
        #[arg(long, value_delimiter = ',', default_value = "64,128,256,512")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

struct Sink<'a> {
    out: &'a mut dyn Write,
    config: Value,
    json: bool,
}

impl Sink<'_> {
    fn emit(&mut self, human: impl AsRef<str>, mut record: Value) -> std::io::Result<()> {
        if self.json {
            if let Value::Object(map) = &mut record {
                map.insert("config".into(), self.config.clone());
            }
            writeln!(self.out, "{record}")
        } else {
            writeln!(self.out, "{}", human.as_ref())
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn dispatch<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let config = RunConfig {
        machine_doc: std::env::var(MACHINE_DOC_VAR).unwrap_or_else(|_| DEFAULT_MACHINE_DOC.into()),
        json: cli.json,
        seed: cli.seed,
        tape_cells: cli.tape_cells,
        ..RunConfig::default()
    };
    let config_value = serde_json::to_value(&config).expect("config serializes");
    if !config.json {
        let _ = writeln!(err, "# config {config_value}");
    }
    let mut sink = Sink {
        out,
        config: config_value,
        json: config.json,
    };
    match execute(cli.command, &config, &mut sink) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ResourceRefused(_) => 2,
                _ => 1,
            }
        }
    }
}

fn refuse(what: &str, got: impl std::fmt::Display, cap: impl std::fmt::Display) -> Error {
    Error::ResourceRefused(format!("{what} {got} exceeds the cap {cap}"))
}

fn level(n: u8) -> Result<PairLevel, Error> {
    PairLevel::try_from(n).map_err(Error::from)
}

fn estimate_record(est: Estimate, horizon: u64) -> Result<(String, Value), Error> {
    match est {
        Ok(e) => Ok((
            format!(
                "bound {} witness {} horizon {}",
                e.bound, e.witness, e.horizon
            ),
            serde_json::to_value(&e)?,
        )),
        Err(EstimateError::NotFound { .. }) => Ok((
            format!("no witness within horizon {horizon}"),
            json!({ "bound": null, "witness": null, "horizon": horizon }),
        )),
        Err(e @ EstimateError::Refused { .. }) => Err(Error::ResourceRefused(e.to_string())),
    }
}

fn outcome_record(outcome: &RunOutcome) -> (String, Value) {
    match outcome {
        RunOutcome::Halted { output, steps } => (
            format!("halted output {output} steps {steps}"),
            json!({ "halted": true, "output": output, "steps": steps }),
        ),
        RunOutcome::StillRunning { steps } => (
            format!("still running after {steps} steps"),
            json!({ "halted": false, "steps": steps }),
        ),
    }
}

fn execute(command: Command, config: &RunConfig, sink: &mut Sink<'_>) -> Result<(), Error> {
    match command {
        Command::Pad { bits } => {
            let p = pad(&bits);
            sink.emit(p.to_string(), json!({ "input": bits, "pad": p }))?;
        }
        Command::Pair(PairCmd::Encode { level: l, u, v }) => {
            let w = encode_pair(level(l)?, &u, &v);
            sink.emit(
                w.to_string(),
                json!({ "level": l, "u": u, "v": v, "code": w }),
            )?;
        }
        Command::Pair(PairCmd::Decode { level: l, w }) => {
            let (u, v) = decode_pair(level(l)?, &w)?;
            sink.emit(
                format!("{u} {v}"),
                json!({ "level": l, "code": w, "u": u, "v": v }),
            )?;
        }
        Command::Run {
            machine,
            input,
            steps,
            tape,
            trace,
        } => {
            if steps > config.max_run_steps {
                return Err(refuse("step budget", steps, config.max_run_steps));
            }
            let budget = ExecBudget::new(steps, tape.unwrap_or(config.tape_cells))?;
            let outcome = if trace {
                let mut events = Vec::new();
                let o = run_traced(machine, &input, budget, |s| events.push(s));
                for s in events {
                    let v = serde_json::to_value(s)?;
                    let line = v.to_string();
                    sink.emit(line, v)?;
                }
                o
            } else {
                run(machine, &input, budget)
            };
            let (h, mut v) = outcome_record(&outcome);
            v["machine"] = json!(machine);
            v["input"] = json!(input);
            sink.emit(h, v)?;
        }
        Command::Sweep { horizon } => {
            if horizon > config.max_sweep_horizon {
                return Err(refuse("sweep horizon", horizon, config.max_sweep_horizon));
            }
            for ev in sweep(horizon) {
                sink.emit(
                    format!("{} -> {} ({} steps)", ev.program, ev.output, ev.steps),
                    serde_json::to_value(&ev)?,
                )?;
            }
        }
        Command::K {
            target,
            horizon,
            cond,
            pair,
        } => {
            let est = match (&cond, &pair) {
                (Some(y), _) => estimate_k_cond(&target, y, horizon),
                (_, Some(y)) => estimate_k_pair(&target, y, horizon),
                _ => estimate_k(&target, horizon),
            };
            let (h, v) = estimate_record(est, horizon)?;
            sink.emit(h, v)?;
        }
        Command::H { target, horizon } => {
            let (h, v) = estimate_record(estimate_h(&target, horizon), horizon)?;
            sink.emit(h, v)?;
        }
        Command::Omega { horizon, digits } => {
            if horizon > config.max_omega_horizon {
                return Err(refuse("omega horizon", horizon, config.max_omega_horizon));
            }
            let o = omega_estimate(horizon);
            let mut v = serde_json::to_value(o.to_json())?;
            v["digits"] = json!(o.digits(digits));
            sink.emit(
                format!(
                    "omega >= {} = 0.{}... ({} programs, horizon {})",
                    o.value,
                    o.digits(digits),
                    o.contributing,
                    horizon
                ),
                v,
            )?;
        }
        Command::Census {
            n,
            c,
            horizon,
            prefix,
        } => {
            let r = if prefix {
                census_prefix(n, c, horizon)?
            } else {
                census(n, c, horizon)?
            };
            let mut v = serde_json::to_value(r)?;
            v["flag_limit"] = json!(r.flag_limit());
            sink.emit(
                format!(
                    "n {} c {}: {} of {} flagged (limit {})",
                    r.n,
                    r.c,
                    r.flagged,
                    r.total,
                    r.flag_limit()
                ),
                v,
            )?;
        }
        Command::Deficiency {
            source,
            n_max,
            horizon,
        } => {
            let src: SequenceSource = source.parse()?;
            for (i, d) in deficiency_profile(&src, n_max, horizon)?
                .into_iter()
                .enumerate()
            {
                let n = i + 1;
                let shown = d.map_or_else(|| "unknown".to_string(), |d| d.to_string());
                sink.emit(format!("{n} {shown}"), json!({ "n": n, "deficiency": d }))?;
            }
        }
        Command::Random(cmd) => random(cmd, sink)?,
        Command::Tm(TmCmd::Palindrome { input, trace }) => {
            let t = run_palindrome_tm(&input);
            if trace {
                for cs in crossing_sequences(&t) {
                    let names: Vec<String> = cs.states.iter().map(ToString::to_string).collect();
                    sink.emit(
                        format!("boundary {}: {}", cs.cell, names.join(" ")),
                        serde_json::to_value(&cs)?,
                    )?;
                }
            }
            sink.emit(
                format!(
                    "{} in {} steps",
                    if t.accepted { "accepted" } else { "rejected" },
                    t.steps
                ),
                json!({ "input": input, "accepted": t.accepted, "steps": t.steps }),
            )?;
        }
        Command::Tm(TmCmd::Quadratic { n, trials }) => {
            if let Some(&big) = n.iter().find(|&&n| n > config.max_tm_len) {
                return Err(refuse("input length", big, config.max_tm_len));
            }
            let r = quadratic_report(&n, trials, config.seed)?;
            let mut lines: Vec<String> = r
                .rows
                .iter()
                .map(|row| match row.ratio_to_previous {
                    Some(q) => format!("n {} mean T {:.1} ratio {:.3}", row.n, row.mean_steps, q),
                    None => format!("n {} mean T {:.1}", row.n, row.mean_steps),
                })
                .collect();
            if let Some(s) = r.slope {
                lines.push(format!("log-log slope {s:.4}"));
            }
            sink.emit(lines.join("\n"), serde_json::to_value(&r)?)?;
        }
    }
    Ok(())
}

fn random(cmd: RandomCmd, sink: &mut Sink<'_>) -> Result<(), Error> {
    match cmd {
        RandomCmd::Freq(a) => {
            let src: SequenceSource = a.source.parse()?;
            let (s, ratio) = frequency_stats(&src, a.n)?;
            sink.emit(
                format!("S_n {s} ratio {ratio}"),
                json!({ "n": a.n, "s_n": s, "ratio": ratio.to_string() }),
            )?;
        }
        RandomCmd::Select { src: a, rule } => {
            let src: SequenceSource = a.source.parse()?;
            let rule: SelectionRule = rule.parse()?;
            let sub = select_subsequence(&rule, &src, a.n)?;
            let ones = sub.count_ones();
            sink.emit(
                format!("{} selected, {} ones: {}", sub.len(), ones, sub),
                json!({ "rule": rule.to_string(), "n": a.n, "selected": sub, "len": sub.len(), "ones": ones }),
            )?;
        }
        RandomCmd::Lil(a) => {
            let src: SequenceSource = a.source.parse()?;
            let l = lil_statistic(&src, a.n)?;
            sink.emit(
                format!(
                    "S_n {} s* {:.6} ratio {:.6} (log = ln)",
                    l.s_n, l.s_star, l.ratio
                ),
                serde_json::to_value(l)?,
            )?;
        }
        RandomCmd::Mltest { src: a, test } => {
            let src: SequenceSource = a.source.parse()?;
            let t = FiniteMLTest::load(&test)?;
            for lv in ml_test_eval(&t, &src, a.n)? {
                let h = match &lv.verdict {
                    Verdict::Caught { witness } => {
                        format!("level {} caught by {}", lv.level, witness)
                    }
                    Verdict::Escaped => format!("level {} escaped", lv.level),
                    Verdict::Undetermined => format!("level {} undetermined", lv.level),
                };
                sink.emit(h, serde_json::to_value(&lv)?)?;
            }
        }
    }
    Ok(())
}
