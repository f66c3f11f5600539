//! One `(G, π)` analysis: every applicable check, collected into a report.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::cache::TableCache;
use crate::chartab::CharacterTable;
use crate::error::Result;
use crate::modular::{
    brauer_system, load_decomposition, modular_checks, ModularContext, MODULAR_CHECK_IDS,
};
use crate::perm::FiniteGroup;
use crate::plocal::{plocal_checks, PSubgroupPoset, PosetStats, DEFAULT_POSET_CAP, PLOCAL_CHECK_IDS};
use crate::psi::{psi_checks, PiSpec, PsiContext};
use crate::verdict::{strings, Status, Verdict};
use crate::zoo::{self, GroupSpec};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = concat!("psichar ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub poset_cap: u64,
    /// Decomposition file for the single prime of π.
    pub dec: Option<PathBuf>,
    pub plocal: bool,
    pub modular: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { poset_cap: DEFAULT_POSET_CAP, dec: None, plocal: true, modular: true }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassInfo {
    pub order: u64,
    pub size: u64,
    pub centralizer: u64,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

impl Counts {
    pub fn of(checks: &[Verdict]) -> Self {
        let mut c = Counts::default();
        for v in checks {
            match v.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::NotApplicable => c.not_applicable += 1,
            }
        }
        c
    }

    pub fn add(&mut self, other: Counts) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiReport {
    pub schema: u32,
    pub tool: String,
    pub group: String,
    pub order: u64,
    pub pi: PiSpec,
    /// The root exponent: `q` for one prime, `|G|_π` otherwise.
    pub q: String,
    pub classes: Vec<ClassInfo>,
    pub table_hash: String,
    pub psi_values: Vec<String>,
    /// `⟨Ψ, χ_i⟩` in canonical character order.
    pub nu: Vec<String>,
    pub poset: Option<PosetStats>,
    pub decomposition: Option<String>,
    pub checks: Vec<Verdict>,
    pub summary: Counts,
}

impl PsiReport {
    pub fn check(&self, id: &str) -> Option<&Verdict> {
        self.checks.iter().find(|v| v.id == id)
    }

    pub fn any_failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

pub fn analyze(spec: &GroupSpec, pi: &PiSpec, opts: &AnalyzeOptions, cache: &TableCache) -> Result<PsiReport> {
    let g = zoo::construct(spec)?;
    let table = cache.table(&g)?;
    analyze_group(&g, &table, Some(spec), pi, opts)
}

/// The analysis of an already built group and table.
pub fn analyze_group(
    g: &FiniteGroup,
    table: &CharacterTable,
    spec: Option<&GroupSpec>,
    pi: &PiSpec,
    opts: &AnalyzeOptions,
) -> Result<PsiReport> {
    let ctx = PsiContext::new(g, table, pi.clone(), spec.cloned());
    let mut checks = psi_checks(&ctx);
    let mut poset = None;
    let mut decomposition = None;

    if let Some(p) = pi.single() {
        if opts.plocal {
            checks.extend(plocal_checks(g, p, opts.poset_cap, spec, table));
            poset = PSubgroupPoset::new(g, p, opts.poset_cap).ok().map(|ps| ps.stats(g));
        } else {
            checks.extend(PLOCAL_CHECK_IDS.iter().chain(["thm_11_6"].iter()).map(|id| disabled(id)));
        }
        if opts.modular {
            let (sys, load_error) = if let Some(path) = &opts.dec {
                decomposition = Some(path.display().to_string());
                match load_decomposition(path, g, table, p).and_then(|d| brauer_system(g, table, &d)) {
                    Ok(s) => (Some(s), None),
                    Err(e) => (None, Some(e)),
                }
            } else {
                (None, None)
            };
            let mctx = ModularContext::new(g, table, p, spec.cloned(), sys)?;
            let mut verdicts = modular_checks(&mctx);
            if let Some(e) = load_error {
                verdicts[0] = Verdict::error("brauer_system", &e);
            }
            checks.extend(verdicts);
        } else {
            checks.extend(MODULAR_CHECK_IDS.iter().map(|id| disabled(id)));
        }
    } else if opts.dec.is_some() {
        return Err(crate::Error::Config("decomposition data needs a single prime".into()));
    }

    let cl = g.classes();
    let classes = (0..cl.len())
        .map(|k| ClassInfo { order: cl.elem_order(k), size: cl.size(k), centralizer: cl.centralizer_order(k) })
        .collect();
    let summary = Counts::of(&checks);
    Ok(PsiReport {
        schema: SCHEMA_VERSION,
        tool: TOOL.to_string(),
        group: spec.map(|s| s.to_string()).or_else(|| g.label().map(str::to_string)).unwrap_or_default(),
        order: g.order(),
        pi: pi.clone(),
        q: ctx.n.to_string(),
        classes,
        table_hash: table.hash().to_string(),
        psi_values: strings(ctx.psi.values()),
        nu: strings(&ctx.nu),
        poset,
        decomposition,
        checks,
        summary,
    })
}

fn disabled(id: &str) -> Verdict {
    Verdict::not_applicable(id, "disabled by configuration")
}
