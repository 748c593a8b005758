//! Command-line front end. `main` only forwards to [`run`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::arrangements::{analyze_arrangement, LineArrangement};
use crate::corpus::{embedded_corpus, load_corpus, run_corpus, search, EntryOutcome, SearchParams};
use crate::error::{Error, Result};
use crate::invariants::{analyze, AnalyzeOptions, FieldMode, Status};
use crate::poly::parse_poly;

#[derive(Debug, Parser)]
#[command(name = "jacsyz", version, about = "Jacobian syzygies, Tjurina numbers and types of plane curves")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Arithmetic for the linear algebra: prime (certified) or rational.
    #[arg(long, global = true, default_value = "prime")]
    pub field: FieldMode,
    /// Print JSON.
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Print a plain-text table (default).
    #[arg(long, global = true)]
    pub table: bool,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Seed for random constructions and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Only corpus entries whose name or group contains this string.
    #[arg(long, global = true)]
    pub filter: Option<String>,
    /// Include the syzygy generators in JSON output.
    #[arg(long, global = true)]
    pub show_generators: bool,
    /// Record per-stage timings.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one curve given inline or as @FILE.
    Analyze {
        input: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Run the regression corpus.
    Corpus {
        /// Use this corpus file instead of the embedded one.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Analyze a line arrangement given as a JSON list of linear forms, inline or as @FILE.
    Arrangement {
        input: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Sample random curves looking for given exponents.
    Search {
        #[arg(long)]
        degree: u32,
        /// Comma separated exponents, e.g. 3,3,3,3,4.
        #[arg(long, value_delimiter = ',', required = true)]
        target: Vec<u32>,
        #[arg(long, default_value_t = 5)]
        coeff_bound: i64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn read_input(s: &str) -> Result<String> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn outcome_line(o: &EntryOutcome) -> String {
    let mut expected = String::new();
    let mut computed = String::new();
    for c in &o.comparisons {
        let _ = write!(expected, "{}={} ", c.field, c.expected);
        let mark = if c.pass { "" } else { "!" };
        let _ = write!(computed, "{mark}{}={} ", c.field, c.actual);
    }
    if let Some(e) = &o.error {
        computed = format!("error: {e}");
    }
    if let Some(r) = &o.report {
        for c in r.failed_checks() {
            let _ = write!(computed, "[failed check: {}] ", c.name);
        }
    }
    let status = match o.status() {
        Status::Pass => "PASS",
        Status::Failed => "FAIL",
        Status::Inconsistent => "INCONSISTENT",
    };
    format!("{:<40} {:<12} | expected {}| computed {}", o.entry.name, status, expected, computed)
}

/// Runs the CLI and returns the process exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut String, err: &mut String) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                out.push_str(&text);
            } else {
                err.push_str(&text);
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32> {
    let g = &cli.global;
    let opts = AnalyzeOptions { field: g.field, timings: g.timings };
    match &cli.command {
        Command::Analyze { input, name } => {
            let text = read_input(input)?;
            let f = parse_poly(text.trim())?;
            let r = analyze(name.as_deref().unwrap_or(text.trim()), &f, opts)?;
            if g.json {
                out.push_str(&pretty(&r.to_json(g.show_generators)));
            } else {
                let _ = write!(out, "{r}");
            }
            out.push('\n');
            Ok(r.status().exit_code())
        }
        Command::Arrangement { input, name } => {
            let a = LineArrangement::from_json(&read_input(input)?)?;
            let label = name.clone().unwrap_or_else(|| a.to_string());
            let r = analyze_arrangement(&label, &a, opts)?;
            if g.json {
                out.push_str(&pretty(&r.to_json(g.show_generators)));
            } else {
                let c = &r.combinatorics;
                let _ = writeln!(out, "lines      {}", a.len());
                let _ = writeln!(out, "census     {:?}", c.counts);
                let _ = writeln!(out, "tau(comb)  {}", c.tau);
                let _ = writeln!(out, "joined     {}", c.multiple_points_joined());
                let _ = writeln!(out, "verdict    {:?}", r.verdict);
                let _ = write!(out, "{}", r.report);
            }
            out.push('\n');
            Ok(r.report.status().exit_code())
        }
        Command::Corpus { corpus } => {
            let entries = match corpus {
                Some(p) => load_corpus(
                    &std::fs::read_to_string(p).map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display())))?,
                )?,
                None => embedded_corpus(),
            };
            let outcomes = run_corpus(&entries, g.filter.as_deref(), opts, g.jobs as usize)?;
            let status = outcomes.iter().map(EntryOutcome::status).max().unwrap_or(Status::Pass);
            if g.json {
                let rows: Vec<Value> = outcomes.iter().map(|o| o.to_json(g.show_generators)).collect();
                out.push_str(&pretty(&json!({"entries": rows, "status": status})));
                out.push('\n');
            } else {
                for o in &outcomes {
                    let _ = writeln!(out, "{}", outcome_line(o));
                }
                let passed = outcomes.iter().filter(|o| o.status() == Status::Pass).count();
                let _ = writeln!(out, "{passed}/{} entries pass", outcomes.len());
            }
            Ok(status.exit_code())
        }
        Command::Search { degree, target, coeff_bound, samples } => {
            let params =
                SearchParams { degree: *degree, target: target.clone(), coeff_bound: *coeff_bound, samples: *samples, seed: g.seed };
            let r = search(&params, g.jobs as usize)?;
            if g.json {
                let mut v = serde_json::to_value(&r).expect("report serializes");
                v["summary"] = json!(r.summary_line());
                out.push_str(&pretty(&v));
                out.push('\n');
            } else {
                let _ = writeln!(out, "samples    {} ({} skipped)", samples, r.skipped);
                for (e, n) in &r.histogram {
                    let _ = writeln!(out, "  {e:<24} {n}");
                }
                for f in &r.findings {
                    let _ = writeln!(out, "witness    #{} tau {} {}", f.sample, f.tau, f.polynomial);
                }
                let _ = writeln!(out, "{}", r.summary_line());
            }
            Ok(0)
        }
    }
}
