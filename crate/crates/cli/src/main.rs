use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use psichar::cache::TableCache;
use psichar::modular::{brauer_system, load_decomposition};
use psichar::oracle::oracle;
use psichar::plocal::DEFAULT_POSET_CAP;
use psichar::psi::PiSpec;
use psichar::report::{analyze, AnalyzeOptions};
use psichar::suite::{run_suite, CorpusConfig};
use psichar::{zoo, GroupSpec};
use serde_json::json;

const PASS: u8 = 0;
const USAGE: u8 = 1;
const FAIL: u8 = 2;

#[derive(Parser)]
#[command(name = "psichar", version, about = "Exact checks of the p-element counting character Ψ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PiArgs {
    #[arg(long, conflicts_with = "pi")]
    prime: Option<u64>,
    /// Comma-separated primes.
    #[arg(long)]
    pi: Option<String>,
}

impl PiArgs {
    fn resolve(&self) -> Result<PiSpec, String> {
        match (&self.prime, &self.pi) {
            (Some(p), _) => PiSpec::prime(*p).map_err(|e| e.to_string()),
            (None, Some(s)) => s.parse().map_err(|e: psichar::Error| e.to_string()),
            (None, None) => Err("one of --prime or --pi is required".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable check for one group and prime set.
    Analyze {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        pi: PiArgs,
        /// Decomposition matrix file for the prime.
        #[arg(long)]
        dec: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_POSET_CAP)]
        poset_cap: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Run a corpus configuration.
    Suite {
        #[arg(default_value = "corpus/default.toml")]
        config: PathBuf,
        /// Parallel entries; defaults to the config's `jobs`.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        poset_cap: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Brute-force root and centralizer counts, without character theory.
    Oracle {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        pi: PiArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Canonical character table serialization and its hash.
    Table {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check a decomposition file against the group's table.
    DecompValidate {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        dec: PathBuf,
        #[command(flatten)]
        output: Output,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { PASS });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn emit(output: &Output, text: &str) -> Result<(), String> {
    let Format::Json = output.format;
    match &output.out {
        Some(path) => std::fs::write(path, format!("{text}\n")).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}").map_err(|e| e.to_string())
        }
    }
}

fn group(spec: &str) -> Result<(GroupSpec, psichar::FiniteGroup), String> {
    let spec: GroupSpec = spec.parse().map_err(|e: psichar::Error| e.to_string())?;
    let g = zoo::construct(&spec).map_err(|e| e.to_string())?;
    Ok((spec, g))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(command: Command) -> Result<u8, String> {
    let cache = TableCache::from_env();
    match command {
        Command::Analyze { group: spec, pi, dec, poset_cap, output } => {
            let pi = pi.resolve()?;
            let spec: GroupSpec = spec.parse().map_err(|e: psichar::Error| e.to_string())?;
            if let Some(d) = &dec {
                if !d.is_file() {
                    return Err(format!("{}: no such file", d.display()));
                }
            }
            let opts = AnalyzeOptions { poset_cap, dec, ..AnalyzeOptions::default() };
            let report = analyze(&spec, &pi, &opts, &cache).map_err(|e| e.to_string())?;
            emit(&output, &report.to_json())?;
            Ok(if report.any_failed() { FAIL } else { PASS })
        }
        Command::Suite { config, jobs, poset_cap, output } => {
            let mut cfg = CorpusConfig::load(&config).map_err(|e| format!("{}: {e}", config.display()))?;
            if let Some(cap) = poset_cap {
                cfg.poset_cap = cap;
            }
            let jobs = jobs.unwrap_or(cfg.jobs);
            let (report, elapsed) = run_suite(&cfg, jobs, &cache).map_err(|e| e.to_string())?;
            emit(&output, &report.to_json())?;
            let c = report.counts;
            eprintln!(
                "{} reports: {} pass, {} fail, {} not applicable, {} errors in {:.1}s",
                report.reports.len(),
                c.pass,
                c.fail,
                c.not_applicable,
                report.errors.len(),
                elapsed.as_secs_f64()
            );
            for f in &report.failures {
                eprintln!("FAIL {} π={} {}", f.group, f.pi, f.check);
            }
            let over_budget = cfg.time_budget.is_some_and(|b| elapsed > b);
            if over_budget {
                eprintln!("time budget of {}s exceeded", cfg.time_budget.unwrap().as_secs());
            }
            Ok(if report.ok() && !over_budget { PASS } else { FAIL })
        }
        Command::Oracle { group: spec, pi, output } => {
            let pi = pi.resolve()?;
            let (_, g) = group(&spec)?;
            let report = oracle(&g, &pi).map_err(|e| e.to_string())?;
            emit(&output, &serde_json::to_string_pretty(&report).expect("serializable"))?;
            Ok(PASS)
        }
        Command::Table { group: spec, output } => {
            let (_, g) = group(&spec)?;
            let table = cache.table(&g).map_err(|e| e.to_string())?;
            let v = json!({
                "group": spec.trim(),
                "hash": table.hash(),
                "degrees": table.degrees(),
                "serialization": table.serialized(),
            });
            emit(&output, &pretty(&v))?;
            Ok(PASS)
        }
        Command::DecompValidate { group: spec, prime, dec, output } => {
            let (_, g) = group(&spec)?;
            if !psichar::arith::is_prime(prime) {
                return Err(format!("{prime} is not prime"));
            }
            let table = cache.table(&g).map_err(|e| e.to_string())?;
            let (v, code) = match validate(&g, &table, prime, &dec) {
                Ok(v) => (v, PASS),
                Err(e) => (json!({ "group": spec.trim(), "prime": prime, "valid": false, "error": e }), FAIL),
            };
            emit(&output, &pretty(&v))?;
            Ok(code)
        }
    }
}

fn validate(
    g: &psichar::FiniteGroup,
    table: &psichar::chartab::CharacterTable,
    p: u64,
    path: &Path,
) -> Result<serde_json::Value, String> {
    let data = load_decomposition(path, g, table, p).map_err(|e| e.to_string())?;
    let sys = brauer_system(g, table, &data).map_err(|e| e.to_string())?;
    Ok(json!({
        "group": data.spec,
        "prime": p,
        "valid": true,
        "brauer_characters": sys.len(),
        "cartan": sys.cartan,
        "blocks": sys.blocks,
        "invariants": sys.invariants,
    }))
}
