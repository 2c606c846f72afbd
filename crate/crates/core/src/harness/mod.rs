//! Instantiates the checked statements' hypotheses over concrete groups, σ-partitions,
//! complete Hall σ-sets and exponents `k`, and classifies every instance.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::classes::{self, ClassKind};
use crate::corpus::{CorpusGroup, Skipped};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::lattice::{chief_series, chief_series_top_down, named, SubgroupLattice};
use crate::sigma::{sweep_family, ClassPermutability, SigmaPartition};

mod corollaries;
pub mod lemmas;
mod theorems;

pub use corollaries::check_corollaries;
pub use theorems::{
    check_hypercyclic_embedding, check_p_solubility, check_p_supersolubility,
    check_quotient_embedding, k_range, pk_subjects,
};

/// The statements the harness can check. `code` gives the short label used
/// on the command line and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Sylow-based hypotheses ⟹ `G` is `p`-supersoluble.
    PSupersolubility,
    /// `E/O_{p′}(E)` hypercyclically embedded in `G/O_{p′}(E)` for `p`-soluble normal `E`.
    QuotientEmbedding,
    /// Sylow-based hypotheses ⟹ `G` is `p`-soluble.
    PSolubility,
    /// Supersoluble Hall set plus conditions on Sylows of `X` ⟹ `E` hypercyclically embedded.
    HypercyclicEmbedding,
    /// One of the ten applications, numbered 1 to 10.
    Application(u8),
}

impl TheoremId {
    pub const MAIN: [TheoremId; 4] = [
        TheoremId::PSupersolubility,
        TheoremId::QuotientEmbedding,
        TheoremId::PSolubility,
        TheoremId::HypercyclicEmbedding,
    ];

    pub fn applications() -> Vec<TheoremId> {
        (1..=10).map(TheoremId::Application).collect()
    }

    pub fn code(&self) -> String {
        match self {
            TheoremId::PSupersolubility => "A".into(),
            TheoremId::QuotientEmbedding => "3.1".into(),
            TheoremId::PSolubility => "3.2".into(),
            TheoremId::HypercyclicEmbedding => "B".into(),
            TheoremId::Application(n) => format!("4.{n}"),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let found = match s {
            "A" => Some(TheoremId::PSupersolubility),
            "B" => Some(TheoremId::HypercyclicEmbedding),
            "3.1" => Some(TheoremId::QuotientEmbedding),
            "3.2" => Some(TheoremId::PSolubility),
            _ => s
                .strip_prefix("4.")
                .or_else(|| s.strip_prefix("C4."))
                .and_then(|n| n.parse::<u8>().ok())
                .filter(|n| (1..=10).contains(n))
                .map(TheoremId::Application),
        };
        found.ok_or_else(|| Error::Precondition(format!("unknown theorem '{s}'")))
    }
}

/// Parses a comma-separated theorem list; `all` and `4.x` expand.
pub fn parse_theorems(text: &str) -> Result<Vec<TheoremId>> {
    let mut out = Vec::new();
    for part in text.split(',') {
        match part.trim() {
            "all" => {
                out.extend(TheoremId::MAIN);
                out.extend(TheoremId::applications());
            }
            "main" => out.extend(TheoremId::MAIN),
            "4.x" => out.extend(TheoremId::applications()),
            t => out.push(t.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Vacuous,
    Confirmed,
    Counterexample,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Vacuous => "vacuous",
            Verdict::Confirmed => "confirmed",
            Verdict::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Instance parameters. Subgroups are given by their index in the group's
/// canonical subgroup list.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hall_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroups: Option<Vec<usize>>,
}

/// One checked instance. Field order is the serialized order.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TheoremReport {
    pub group: String,
    pub theorem: String,
    pub params: Params,
    pub hypotheses_hold: bool,
    pub conclusion_holds: Option<bool>,
    pub verdict: Verdict,
    pub details: String,
}

impl TheoremReport {
    /// Classifies an instance. The conclusion is only evaluated when the
    /// hypotheses hold; `hypotheses` carries the failure reason otherwise.
    pub fn classify(
        group: &str,
        theorem: TheoremId,
        params: Params,
        hypotheses: std::result::Result<String, String>,
        conclusion: impl FnOnce() -> (bool, String),
    ) -> TheoremReport {
        let (hypotheses_hold, conclusion_holds, verdict, details) = match hypotheses {
            Err(reason) => (false, None, Verdict::Vacuous, reason),
            Ok(h) => {
                let (ok, c) = conclusion();
                let details = [h, c].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("; ");
                let v = if ok { Verdict::Confirmed } else { Verdict::Counterexample };
                (true, Some(ok), v, details)
            }
        };
        TheoremReport {
            group: group.to_string(),
            theorem: theorem.code(),
            params,
            hypotheses_hold,
            conclusion_holds,
            verdict,
            details,
        }
    }

    /// The verdict agrees with the two flags.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::Vacuous => !self.hypotheses_hold && self.conclusion_holds.is_none(),
            Verdict::Confirmed => self.hypotheses_hold && self.conclusion_holds == Some(true),
            Verdict::Counterexample => self.hypotheses_hold && self.conclusion_holds == Some(false),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Per-group memo tables shared by all checks on one group.
pub struct Context<'a> {
    pub id: &'a str,
    pub lat: &'a SubgroupLattice,
    pub perm: ClassPermutability<'a>,
    class_memo: RefCell<HashMap<(usize, ClassKind), bool>>,
    hyper_memo: RefCell<HashMap<(usize, usize), bool>>,
    ssq_memo: RefCell<HashMap<usize, bool>>,
    fstar_memo: RefCell<HashMap<usize, usize>>,
}

/// Above this many normal subgroups, `E` is swept over a characteristic
/// selection instead of every normal subgroup.
pub const FULL_NORMAL_SWEEP: usize = 32;

impl<'a> Context<'a> {
    pub fn new(id: &'a str, lat: &'a SubgroupLattice) -> Self {
        Context {
            id,
            lat,
            perm: ClassPermutability::new(lat),
            class_memo: RefCell::new(HashMap::new()),
            hyper_memo: RefCell::new(HashMap::new()),
            ssq_memo: RefCell::new(HashMap::new()),
            fstar_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn sub(&self, i: usize) -> &'a Subgroup {
        self.lat.get(i)
    }

    pub fn whole_id(&self) -> usize {
        self.lat.len() - 1
    }

    /// Class membership of lattice subgroup `i`, memoized.
    pub fn in_class(&self, i: usize, kind: ClassKind) -> bool {
        if let Some(&v) = self.class_memo.borrow().get(&(i, kind)) {
            return v;
        }
        let v = classes::subgroup_class(self.lat, self.sub(i), kind).holds;
        self.class_memo.borrow_mut().insert((i, kind), v);
        v
    }

    /// Every chief factor of `G` between normal subgroups `lower ≤ upper` is cyclic.
    pub fn cyclic_between(&self, lower: usize, upper: usize) -> bool {
        if let Some(&v) = self.hyper_memo.borrow().get(&(lower, upper)) {
            return v;
        }
        let v = classes::hypercyclic_between(self.lat, self.sub(lower), self.sub(upper))
            .expect("normal chain")
            .holds;
        self.hyper_memo.borrow_mut().insert((lower, upper), v);
        v
    }

    /// Every chief factor of `G` below normal `e` is a `p`- or `p′`-group.
    pub fn p_soluble_below(&self, e: usize, p: usize) -> bool {
        let cs = chief_series(self.lat, &[self.sub(e).clone()]).expect("normal term");
        let bottom = self.lat.trivial();
        let ok = cs.factors_between(bottom, self.sub(e)).all(|f| f.is_p_or_p_prime(p));
        ok
    }

    pub fn ss_quasinormal(&self, i: usize) -> bool {
        if let Some(&v) = self.ssq_memo.borrow().get(&i) {
            return v;
        }
        let v = crate::sigma::ss_quasinormal_supplement(self.lat, self.sub(i)).is_some();
        self.ssq_memo.borrow_mut().insert(i, v);
        v
    }

    pub fn generalized_fitting(&self, e: usize) -> usize {
        if let Some(&v) = self.fstar_memo.borrow().get(&e) {
            return v;
        }
        let f = named::generalized_fitting(self.lat, self.sub(e));
        let v = self.lat.id(&f);
        self.fstar_memo.borrow_mut().insert(e, v);
        v
    }

    /// The canonically first Sylow `p`-subgroup of lattice subgroup `h`.
    pub fn sylow_in(&self, h: usize, p: usize) -> usize {
        let s = self.sub(h);
        self.lat
            .within_of_order(s, arith::p_part(s.order(), p))
            .next()
            .expect("Sylow subgroups exist")
    }

    /// Normal subgroups used as `E`: all of them when there are at most
    /// [`FULL_NORMAL_SWEEP`]; otherwise the terms of two chief series and the
    /// standard characteristic subgroups.
    pub fn normal_sweep(&self) -> Vec<usize> {
        let lat = self.lat;
        if lat.normal().len() <= FULL_NORMAL_SWEEP {
            return lat.normal().to_vec();
        }
        let whole = lat.whole();
        let mut subs: Vec<Subgroup> = Vec::new();
        subs.extend(chief_series(lat, &[]).expect("no terms").chain);
        subs.extend(chief_series_top_down(lat, &[]).expect("no terms").chain);
        subs.push(named::derived(whole));
        subs.push(named::center(whole));
        subs.push(named::hypercenter(whole));
        subs.push(named::fitting(lat, whole));
        subs.push(named::frattini(lat, whole));
        subs.push(named::socle(lat));
        subs.push(named::generalized_fitting(lat, whole));
        for &p in lat.group().primes() {
            subs.push(named::o_p(lat, whole, p));
            subs.push(named::o_p_prime(lat, whole, p));
        }
        let mut ids: Vec<usize> = subs.iter().map(|s| lat.id(s)).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// Which σ-partitions to sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaChoice {
    /// [`sweep_family`] of each group.
    Family,
    /// Only the singleton partition.
    Singletons,
    Fixed(SigmaPartition),
}

impl SigmaChoice {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "family" | "all" => Ok(SigmaChoice::Family),
            "singletons" => Ok(SigmaChoice::Singletons),
            s => Ok(SigmaChoice::Fixed(s.parse()?)),
        }
    }

    pub fn partitions(&self, primes: &[usize]) -> Vec<SigmaPartition> {
        match self {
            SigmaChoice::Family => sweep_family(primes),
            SigmaChoice::Singletons => vec![SigmaPartition::singletons(primes)],
            SigmaChoice::Fixed(s) => vec![s.clone()],
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub theorems: Vec<TheoremId>,
    pub sigma: SigmaChoice,
    /// Restricts the prime `p` of the Sylow-based statements.
    pub p: Option<usize>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            theorems: TheoremId::MAIN.to_vec(),
            sigma: SigmaChoice::Family,
            p: None,
        }
    }
}

/// All reports for one group, in a deterministic order.
pub fn check_group(id: &str, lat: &SubgroupLattice, cfg: &CheckConfig) -> Result<Vec<TheoremReport>> {
    let ctx = Context::new(id, lat);
    let g = lat.group();
    let sigmas = cfg.sigma.partitions(g.primes());
    for s in &sigmas {
        s.blocks_meeting(g.order())?;
    }
    let primes: Vec<usize> = g
        .primes()
        .iter()
        .copied()
        .filter(|&q| cfg.p.is_none_or(|p| p == q))
        .collect();
    let mut out = Vec::new();
    for &t in &cfg.theorems {
        match t {
            TheoremId::PSupersolubility => {
                for s in &sigmas {
                    for &p in &primes {
                        out.extend(check_p_supersolubility(&ctx, p, s)?);
                    }
                }
            }
            TheoremId::QuotientEmbedding => {
                for s in &sigmas {
                    for &p in &primes {
                        for e in ctx.normal_sweep() {
                            out.extend(check_quotient_embedding(&ctx, e, p, s)?);
                        }
                    }
                }
            }
            TheoremId::PSolubility => {
                for s in &sigmas {
                    for &p in &primes {
                        out.extend(check_p_solubility(&ctx, p, s)?);
                    }
                }
            }
            TheoremId::HypercyclicEmbedding => {
                for s in &sigmas {
                    for e in ctx.normal_sweep() {
                        out.extend(check_hypercyclic_embedding(&ctx, e, s)?);
                    }
                }
            }
            TheoremId::Application(n) => out.extend(check_corollaries(&ctx, &[n], cfg.p)),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Counts {
    pub vacuous: usize,
    pub confirmed: usize,
    pub counterexamples: usize,
}

impl Counts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Confirmed => self.confirmed += 1,
            Verdict::Counterexample => self.counterexamples += 1,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HuntSummary {
    pub groups: usize,
    pub by_theorem: BTreeMap<String, Counts>,
    pub skipped: Vec<(String, String)>,
    /// Reports whose verdict disagrees with their own flags.
    pub inconsistent: usize,
}

impl HuntSummary {
    pub fn counterexamples(&self) -> usize {
        self.by_theorem.values().map(|c| c.counterexamples).sum()
    }

    pub fn confirmed(&self, t: TheoremId) -> usize {
        self.by_theorem.get(&t.code()).map_or(0, |c| c.confirmed)
    }

    pub fn clean(&self) -> bool {
        self.counterexamples() == 0 && self.inconsistent == 0
    }
}

pub struct HuntOutcome {
    pub reports: Vec<TheoremReport>,
    pub summary: HuntSummary,
}

impl HuntOutcome {
    /// One JSON record per line, in corpus order.
    pub fn jsonl(&self) -> String {
        let mut s = String::new();
        for r in &self.reports {
            s.push_str(&r.to_json());
            s.push('\n');
        }
        s
    }
}

/// Runs `cfg` over every group in parallel. Groups whose lattice exceeds the
/// caps, or whose primes a fixed σ does not cover, are skipped and listed.
/// Output order follows the corpus, independent of scheduling.
pub fn hunt(groups: &[CorpusGroup], cfg: &CheckConfig, threads: Option<usize>) -> HuntOutcome {
    let run = || -> Vec<std::result::Result<Vec<TheoremReport>, Skipped>> {
        groups
            .par_iter()
            .map(|cg| {
                let skip = |e: Error| Skipped {
                    id: cg.id().to_string(),
                    reason: e.to_string(),
                };
                let lat = SubgroupLattice::new(&cg.group).map_err(skip)?;
                check_group(cg.id(), &lat, cfg).map_err(skip)
            })
            .collect()
    };
    let results = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    let mut summary = HuntSummary {
        groups: groups.len(),
        ..Default::default()
    };
    let mut reports = Vec::new();
    for r in results {
        match r {
            Ok(rs) => reports.extend(rs),
            Err(s) => summary.skipped.push((s.id, s.reason)),
        }
    }
    for r in &reports {
        summary.by_theorem.entry(r.theorem.clone()).or_default().add(r.verdict);
        if !r.is_consistent() {
            summary.inconsistent += 1;
        }
    }
    HuntOutcome { reports, summary }
}
