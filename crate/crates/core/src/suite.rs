//! Corpus configuration and the parallel suite runner.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith;
use crate::cache::TableCache;
use crate::error::{Error, Result};
use crate::plocal::DEFAULT_POSET_CAP;
use crate::psi::PiSpec;
use crate::report::{analyze_group, AnalyzeOptions, Counts, PsiReport, SCHEMA_VERSION, TOOL};
use crate::zoo::{self, GroupSpec};

/// Keyword in an entry's `pi` list for "each prime divisor of |G| on its own".
pub const EACH_PRIME: &str = "primes";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    poset_cap: Option<u64>,
    time_budget_secs: Option<u64>,
    jobs: Option<usize>,
    #[serde(default, rename = "entry")]
    entries: Vec<RawEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    group: String,
    pi: Option<Vec<String>>,
    #[serde(default)]
    dec: BTreeMap<String, PathBuf>,
    plocal: Option<bool>,
    modular: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub group: GroupSpec,
    /// Explicit π-sets; [`EACH_PRIME`] is expanded once the order is known.
    pub pis: Vec<PiSpec>,
    pub each_prime: bool,
    pub dec: BTreeMap<u64, PathBuf>,
    pub plocal: bool,
    pub modular: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusConfig {
    pub entries: Vec<CorpusEntry>,
    pub poset_cap: u64,
    pub time_budget: Option<Duration>,
    pub jobs: usize,
}

impl CorpusConfig {
    /// Parse a TOML corpus; `dec` paths are resolved against `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let mut entries = Vec::with_capacity(raw.entries.len());
        for e in raw.entries {
            let group: GroupSpec = e.group.parse()?;
            let tokens = e.pi.unwrap_or_else(|| vec![EACH_PRIME.to_string()]);
            let each_prime = tokens.iter().any(|t| t == EACH_PRIME);
            let mut pis = Vec::new();
            for t in tokens.iter().filter(|t| *t != EACH_PRIME) {
                let pi: PiSpec = t.parse()?;
                if !pis.contains(&pi) {
                    pis.push(pi);
                }
            }
            let mut dec = BTreeMap::new();
            for (p, path) in e.dec {
                let p: u64 = p
                    .parse()
                    .ok()
                    .filter(|&p| arith::is_prime(p))
                    .ok_or_else(|| Error::Config(format!("{group}: dec key `{p}` is not a prime")))?;
                let path = base.join(path);
                if !path.is_file() {
                    return Err(Error::Config(format!("{group}: missing decomposition file {}", path.display())));
                }
                dec.insert(p, path);
            }
            entries.push(CorpusEntry {
                group,
                pis,
                each_prime,
                dec,
                plocal: e.plocal.unwrap_or(true),
                modular: e.modular.unwrap_or(true),
            });
        }
        Ok(CorpusConfig {
            entries,
            poset_cap: raw.poset_cap.unwrap_or(DEFAULT_POSET_CAP),
            time_budget: raw.time_budget_secs.map(Duration::from_secs),
            jobs: raw.jobs.unwrap_or(1).max(1),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }
}

impl CorpusEntry {
    /// The π-sets to run for a group of the given order. The trivial group
    /// has no prime divisors and is run with π = {2}.
    pub fn pi_sets(&self, order: u64) -> Vec<PiSpec> {
        let mut out = Vec::new();
        if self.each_prime {
            let primes = arith::prime_divisors(order);
            let primes = if primes.is_empty() { vec![2] } else { primes };
            out.extend(primes.into_iter().map(|p| PiSpec::prime(p).expect("prime divisor")));
        }
        for pi in &self.pis {
            if !out.contains(pi) {
                out.push(pi.clone());
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryError {
    pub group: String,
    pub error: String,
}

/// A failing check, with enough context to rerun it.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub group: String,
    pub pi: PiSpec,
    pub check: String,
    pub witness: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub tool: String,
    pub reports: Vec<PsiReport>,
    pub errors: Vec<EntryError>,
    pub counts: Counts,
    /// Every failing check across the corpus.
    pub failures: Vec<Failure>,
    /// Failures of `psi_is_character`, i.e. pairs where Ψ is not a character.
    pub counterexamples: Vec<Failure>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.errors.is_empty() && self.counts.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

fn run_entry(entry: &CorpusEntry, poset_cap: u64, cache: &TableCache) -> Result<Vec<PsiReport>> {
    let g = zoo::construct(&entry.group)?;
    let table = cache.table(&g)?;
    entry
        .pi_sets(g.order())
        .iter()
        .map(|pi| {
            let opts = AnalyzeOptions {
                poset_cap,
                dec: pi.single().and_then(|p| entry.dec.get(&p).cloned()),
                plocal: entry.plocal,
                modular: entry.modular,
            };
            analyze_group(&g, &table, Some(&entry.group), pi, &opts)
        })
        .collect()
}

/// Run every entry, up to `jobs` at a time. The report does not depend on
/// `jobs` or on the cache state; the elapsed time is returned beside it.
pub fn run_suite(config: &CorpusConfig, jobs: usize, cache: &TableCache) -> Result<(SuiteReport, Duration)> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let results: Vec<Result<Vec<PsiReport>>> =
        pool.install(|| config.entries.par_iter().map(|e| run_entry(e, config.poset_cap, cache)).collect());

    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for (entry, r) in config.entries.iter().zip(results) {
        match r {
            Ok(rs) => reports.extend(rs),
            Err(e) => errors.push(EntryError { group: entry.group.to_string(), error: e.to_string() }),
        }
    }
    let mut counts = Counts::default();
    let mut failures = Vec::new();
    for r in &reports {
        counts.add(r.summary);
        for v in r.checks.iter().filter(|v| v.failed()) {
            failures.push(Failure {
                group: r.group.clone(),
                pi: r.pi.clone(),
                check: v.id.clone(),
                witness: v.witness.clone(),
            });
        }
    }
    let counterexamples = failures.iter().filter(|f| f.check == "psi_is_character").cloned().collect();
    let report = SuiteReport {
        schema: SCHEMA_VERSION,
        tool: TOOL.to_string(),
        reports,
        errors,
        counts,
        failures,
        counterexamples,
    };
    Ok((report, start.elapsed()))
}
