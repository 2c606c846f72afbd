//! Supporting statements checked as sweep properties. Where the full
//! instance space is large, a deterministic sample (seeded by group id) of at
//! most [`BUDGET`] instances is drawn.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::gcd;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::classes::{lemma_check, ClassKind, LemmaCheck};
use crate::corpus::CorpusGroup;
use crate::error::{Error, Result};
use crate::group::{Elem, Subgroup};
use crate::lattice::{named, quotient, Quotient, SubgroupLattice};
use crate::sigma::{
    cartesian, complete_hall_sets, hall_choices, is_s_semipermutable, is_sigma_semipermutable,
    reduces_into, sweep_family, CompleteHallSigmaSet, HallMember, SigmaPartition,
};

use super::Context;

/// Largest number of instances examined per statement and group.
pub const BUDGET: usize = 1000;

/// Largest number of complete Hall σ-sets examined per σ.
const HALL_SETS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// `HR/R` stays σ-semipermutable w.r.t. `{H_iR/R}`, itself a complete Hall σ-set.
    QuotientSemipermutability,
    /// If `𝓗` reduces into `L ≥ H`, `H` is σ-semipermutable in `L` w.r.t. `L ∩ 𝓗`.
    ReductionSemipermutability,
    /// `L ≤ H_i` ⟹ `𝓗` reduces into `LR`.
    ReductionIntoProduct,
    /// `H ≤ H_i` ⟹ `H` is σ-semipermutable in `HR`.
    SemipermutableInProduct,
    /// A semipermutable `p`-subgroup `H` and normal σ_i-subgroup `R` give a
    /// σ_i-number `|G : N_G(H ∩ R)|`.
    NormalizerIndex,
    /// `AB ≠ G` with `A` permuting with every `B^x` ⟹ a proper normal subgroup contains `A` or `B`.
    ProperNormalSubgroup,
    /// `P^x H_i` `p`-soluble subgroups for all `x` and `i ≠ 1` ⟹ `G` `p`-soluble.
    PSolubleProducts,
    HypercyclicCentralizer,
    PNilpotentHypercentral,
    PSupersolubleStructure,
    /// `H` Hall, `H, K, N` pairwise permutable ⟹ `N ∩ HK = (N ∩ H)(N ∩ K)`.
    HallIntersection,
    /// A subnormal π-subgroup lies in `O_π(G)`.
    SubnormalPiSubgroup,
    GeneralizedFittingEmbedding,
    /// `G = AB`, `K ≤ B`, `A` permutes with every `K^b` ⟹ with every `K^x`.
    ConjugatePermutability,
    /// Same hypotheses ⟹ `A^x K = K A^x`.
    ConjugatePermutabilitySwapped,
    /// SS-quasinormal ⟹ σ-semipermutable for the singleton partition.
    SsQuasinormalSemipermutable,
}

impl LemmaId {
    pub const ALL: [LemmaId; 16] = [
        LemmaId::QuotientSemipermutability,
        LemmaId::ReductionSemipermutability,
        LemmaId::ReductionIntoProduct,
        LemmaId::SemipermutableInProduct,
        LemmaId::NormalizerIndex,
        LemmaId::ProperNormalSubgroup,
        LemmaId::PSolubleProducts,
        LemmaId::HypercyclicCentralizer,
        LemmaId::PNilpotentHypercentral,
        LemmaId::PSupersolubleStructure,
        LemmaId::HallIntersection,
        LemmaId::SubnormalPiSubgroup,
        LemmaId::GeneralizedFittingEmbedding,
        LemmaId::ConjugatePermutability,
        LemmaId::ConjugatePermutabilitySwapped,
        LemmaId::SsQuasinormalSemipermutable,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            LemmaId::QuotientSemipermutability => "2.1(1)",
            LemmaId::ReductionSemipermutability => "2.1(2)",
            LemmaId::ReductionIntoProduct => "2.1(3)",
            LemmaId::SemipermutableInProduct => "2.1(4)",
            LemmaId::NormalizerIndex => "2.1(5)",
            LemmaId::ProperNormalSubgroup => "2.2",
            LemmaId::PSolubleProducts => "2.3",
            LemmaId::HypercyclicCentralizer => "2.4",
            LemmaId::PNilpotentHypercentral => "2.7",
            LemmaId::PSupersolubleStructure => "2.8",
            LemmaId::HallIntersection => "2.9",
            LemmaId::SubnormalPiSubgroup => "2.10",
            LemmaId::GeneralizedFittingEmbedding => "2.11",
            LemmaId::ConjugatePermutability => "1.3(i)",
            LemmaId::ConjugatePermutabilitySwapped => "1.3(ii)",
            LemmaId::SsQuasinormalSemipermutable => "1.4",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.code() == s.trim())
            .ok_or_else(|| Error::Precondition(format!("unknown statement '{s}'")))
    }
}

/// Outcome of one statement on one group.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: String,
    pub group: String,
    /// Instances whose hypotheses held and whose conclusion was checked.
    pub instances: usize,
    /// Candidate instances whose hypotheses failed.
    pub not_applicable: usize,
    pub violations: Vec<String>,
    /// Set when the group was too large to analyse.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Tallies for one statement on one group.
#[derive(Default)]
struct Tally {
    instances: usize,
    not_applicable: usize,
    violations: Vec<String>,
}

impl Tally {
    fn skip(&mut self) {
        self.not_applicable += 1;
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.violations.len() < 10 {
            self.violations.push(what());
        }
    }
}

fn seed(id: &str, salt: u64) -> ChaCha8Rng {
    // FNV-1a, stable across platforms and releases
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ salt;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(h)
}

/// At most `budget` items, chosen uniformly without replacement and kept in
/// their original order.
fn thin<T: Clone>(items: Vec<T>, budget: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    if items.len() <= budget {
        return items;
    }
    let mut idx = sample(rng, items.len(), budget).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| items[i].clone()).collect()
}

struct Sweep<'a> {
    ctx: Context<'a>,
    sigmas: Vec<SigmaPartition>,
    /// Per σ: the Hall sets examined, as lattice indices by block.
    halls: Vec<Vec<Vec<usize>>>,
    quotients: std::cell::RefCell<HashMap<usize, Quotient>>,
}

impl<'a> Sweep<'a> {
    fn new(id: &'a str, lat: &'a SubgroupLattice) -> Self {
        let sigmas = sweep_family(lat.group().primes());
        let halls = sigmas
            .iter()
            .map(|s| {
                let all = cartesian(&hall_choices(lat, s).expect("family covers the group"));
                if all.len() <= HALL_SETS {
                    all
                } else {
                    // evenly spaced, always including the first and last
                    (0..HALL_SETS)
                        .map(|j| all[j * (all.len() - 1) / (HALL_SETS - 1)].clone())
                        .collect()
                }
            })
            .collect();
        Sweep {
            ctx: Context::new(id, lat),
            sigmas,
            halls,
            quotients: Default::default(),
        }
    }

    fn lat(&self) -> &'a SubgroupLattice {
        self.ctx.lat
    }

    fn hall_set(&self, s: usize, ids: &[usize]) -> CompleteHallSigmaSet {
        let lat = self.lat();
        let sigma = &self.sigmas[s];
        let blocks = sigma.blocks_meeting(lat.group().order()).expect("covered");
        let members = blocks
            .into_iter()
            .zip(ids)
            .map(|(block, &i)| HallMember {
                block,
                subgroup: lat.get(i).clone(),
            })
            .collect();
        CompleteHallSigmaSet::new(lat.group(), sigma, members).expect("lattice Hall set")
    }

    fn with_quotient<T>(&self, r: usize, f: impl FnOnce(&Quotient) -> T) -> T {
        let mut q = self.quotients.borrow_mut();
        let entry = q
            .entry(r)
            .or_insert_with(|| quotient(self.lat().group(), self.lat().get(r)).expect("normal"));
        f(entry)
    }

    /// Every (σ index, Hall set) pair examined.
    fn hall_pairs(&self) -> Vec<(usize, Vec<usize>)> {
        self.halls
            .iter()
            .enumerate()
            .flat_map(|(s, sets)| sets.iter().map(move |h| (s, h.clone())))
            .collect()
    }

    fn class_reps(&self) -> Vec<usize> {
        self.lat().classes().iter().map(|c| c[0]).collect()
    }
}

/// Subnormality via the normal closure chain `G ≥ H^G ≥ (H^{H^G}) ≥ …`.
fn is_subnormal(h: &Subgroup) -> bool {
    let mut s = h.parent().whole();
    loop {
        let next = named::normal_closure(h, &s);
        if next == s {
            return s == *h;
        }
        s = next;
    }
}

/// Runs the listed statements on one group.
pub fn check_lemmas(id: &str, lat: &SubgroupLattice, which: &[LemmaId]) -> Vec<LemmaReport> {
    let sw = Sweep::new(id, lat);
    which
        .iter()
        .map(|&l| {
            let t = run_one(&sw, l);
            LemmaReport {
                lemma: l.code().to_string(),
                group: id.to_string(),
                instances: t.instances,
                not_applicable: t.not_applicable,
                violations: t.violations,
                skipped: None,
            }
        })
        .collect()
}

fn run_one(sw: &Sweep<'_>, lemma: LemmaId) -> Tally {
    let ctx = &sw.ctx;
    let lat = sw.lat();
    let g = lat.group();
    let n = g.order();
    let mut rng = seed(ctx.id, lemma as u64);
    let mut t = Tally::default();
    let normals = lat.normal().to_vec();
    match lemma {
        LemmaId::QuotientSemipermutability => {
            let mut cands = Vec::new();
            for (s, hall) in sw.hall_pairs() {
                for &r in &normals {
                    for h in sw.class_reps() {
                        cands.push((s, hall.clone(), r, h));
                    }
                }
            }
            for (s, hall, r, h) in thin(cands, BUDGET, &mut rng) {
                let hs = lat.get(h);
                let rs = lat.get(r);
                let escapes = hs.primes().into_iter().all(|q| !lat.get(ctx.sylow_in(h, q)).is_subgroup_of(rs));
                if !escapes || !ctx.perm.is_semipermutable(h, &hall) {
                    t.skip();
                    continue;
                }
                let set = sw.hall_set(s, &hall);
                let (ok, why) = sw.with_quotient(r, |q| {
                    let members: Vec<HallMember> = set
                        .members
                        .iter()
                        .filter_map(|m| {
                            let img = q.project(&m.subgroup);
                            // blocks vanishing in G/R drop out of σ(G/R)
                            (!img.is_trivial()).then_some(HallMember {
                                block: m.block,
                                subgroup: img,
                            })
                        })
                        .collect();
                    match CompleteHallSigmaSet::new(&q.group, &sw.sigmas[s], members) {
                        Err(e) => (false, format!("images not a complete Hall set: {e}")),
                        Ok(qs) => {
                            let w = is_sigma_semipermutable(&q.project(hs), &qs).expect("same parent");
                            (w.holds(), "HR/R not semipermutable".to_string())
                        }
                    }
                });
                t.check(ok, || format!("sigma {} hall {hall:?} R #{r} H #{h}: {why}", sw.sigmas[s]));
            }
        }
        LemmaId::ReductionSemipermutability => {
            let mut cands = Vec::new();
            for (s, hall) in sw.hall_pairs() {
                for l in 0..lat.len() {
                    cands.push((s, hall.clone(), l));
                }
            }
            for (s, hall, l) in thin(cands, BUDGET, &mut rng) {
                let set = sw.hall_set(s, &hall);
                let ls = lat.get(l);
                let red = reduces_into(&set, ls);
                if lat.is_normal(l) {
                    t.check(red.is_some(), || format!("Hall set {hall:?} fails to reduce into normal #{l}"));
                }
                let Some((emb, lset)) = red else {
                    t.skip();
                    continue;
                };
                let subjects: Vec<usize> = lat.within(ls).filter(|&h| ctx.perm.is_semipermutable(h, &hall)).collect();
                for h in thin(subjects, 16, &mut rng) {
                    let inner = emb.restrict(lat.get(h)).expect("H <= L");
                    let w = is_sigma_semipermutable(&inner, &lset).expect("same parent");
                    t.check(w.holds(), || format!("sigma {} hall {hall:?} L #{l} H #{h}", sw.sigmas[s]));
                }
            }
        }
        LemmaId::ReductionIntoProduct | LemmaId::SemipermutableInProduct => {
            let mut cands = Vec::new();
            for (s, hall) in sw.hall_pairs() {
                for &hi in &hall {
                    for l in lat.within(lat.get(hi)) {
                        for &r in &normals {
                            cands.push((s, hall.clone(), l, r));
                        }
                    }
                }
            }
            for (s, hall, l, r) in thin(cands, BUDGET, &mut rng) {
                let set = sw.hall_set(s, &hall);
                let lr = lat.get(l).join(lat.get(r));
                let red = reduces_into(&set, &lr);
                if lemma == LemmaId::ReductionIntoProduct {
                    t.check(red.is_some(), || format!("hall {hall:?} L #{l} R #{r}: no reduction into LR"));
                    continue;
                }
                if !ctx.perm.is_semipermutable(l, &hall) {
                    t.skip();
                    continue;
                }
                let ok = red.is_some_and(|(emb, lset)| {
                    let inner = emb.restrict(lat.get(l)).expect("H <= HR");
                    is_sigma_semipermutable(&inner, &lset).expect("same parent").holds()
                });
                t.check(ok, || format!("sigma {} hall {hall:?} H #{l} R #{r}", sw.sigmas[s]));
            }
        }
        LemmaId::NormalizerIndex => {
            let mut cands = Vec::new();
            for (s, hall) in sw.hall_pairs() {
                for h in sw.class_reps() {
                    if arith::prime_power(lat.get(h).order()).is_some() {
                        for &r in &normals {
                            cands.push((s, hall.clone(), h, r));
                        }
                    }
                }
            }
            for (s, hall, h, r) in thin(cands, BUDGET, &mut rng) {
                let sigma = &sw.sigmas[s];
                let (p, _) = arith::prime_power(lat.get(h).order()).unwrap();
                let block = sigma.block_of(p).unwrap();
                let rs = lat.get(r);
                let r_in_block = arith::is_pi_number(rs.order(), |q| sigma.in_block(block, q));
                if !r_in_block || !ctx.perm.is_semipermutable(h, &hall) {
                    t.skip();
                    continue;
                }
                let meet = lat.get(h).intersection(rs);
                let index = n / named::normalizer(&meet).order();
                t.check(arith::is_pi_number(index, |q| sigma.in_block(block, q)), || {
                    format!("sigma {sigma} H #{h} R #{r}: index {index}")
                });
            }
        }
        LemmaId::ProperNormalSubgroup => {
            let reps = sw.class_reps();
            let mut cands = Vec::new();
            for &a in &reps {
                for (c, _) in lat.classes().iter().enumerate() {
                    cands.push((a, c));
                }
            }
            for (a, c) in thin(cands, BUDGET, &mut rng) {
                let asub = lat.get(a);
                let class = &lat.classes()[c];
                let proper = class.iter().any(|&b| asub.product_size(lat.get(b)) < n);
                if !proper || !ctx.perm.permutes_with_class(a, c) {
                    t.skip();
                    continue;
                }
                let whole = lat.whole();
                let ok = !named::normal_closure(asub, whole).is_whole()
                    || !named::normal_closure(lat.get(class[0]), whole).is_whole();
                t.check(ok, || format!("A #{a}, B #{}", class[0]));
            }
        }
        LemmaId::PSolubleProducts => {
            for (s, hall) in sw.hall_pairs() {
                let sigma = &sw.sigmas[s];
                let blocks = sigma.blocks_meeting(n).unwrap();
                for &p in g.primes() {
                    let pos = blocks.iter().position(|&b| sigma.in_block(b, p)).unwrap();
                    let sylows: Vec<usize> = lat.of_order(arith::p_part(n, p)).collect();
                    let hyp = sylows.iter().all(|&sy| {
                        hall.iter().enumerate().filter(|&(j, _)| j != pos).all(|(_, &m)| {
                            let (a, b) = (lat.get(sy), lat.get(m));
                            a.permutes_unchecked(b) && ctx.in_class(lat.id(&a.join(b)), ClassKind::PSoluble(p))
                        })
                    });
                    if !hyp {
                        t.skip();
                        continue;
                    }
                    t.check(ctx.in_class(ctx.whole_id(), ClassKind::PSoluble(p)), || {
                        format!("sigma {sigma} hall {hall:?} p {p}")
                    });
                }
            }
        }
        LemmaId::HypercyclicCentralizer => {
            for &p in g.primes() {
                for &r in &normals {
                    let rs = lat.get(r);
                    if !rs.is_trivial() && arith::prime_power(rs.order()).map(|x| x.0) != Some(p) {
                        continue;
                    }
                    record(&mut t, lemma_check(lat, LemmaCheck::HypercyclicCentralizer { p, subgroup: rs }), || {
                        format!("p {p} P #{r}")
                    });
                }
            }
        }
        LemmaId::PNilpotentHypercentral => {
            for &p in g.primes() {
                for &e in &normals {
                    let es = lat.get(e);
                    record(&mut t, lemma_check(lat, LemmaCheck::PNilpotentHypercentral { p, normal: es }), || {
                        format!("p {p} E #{e}")
                    });
                }
            }
        }
        LemmaId::PSupersolubleStructure => {
            for &p in g.primes() {
                record(&mut t, lemma_check(lat, LemmaCheck::PSupersolubleStructure { p }), || format!("p {p}"));
            }
        }
        LemmaId::HallIntersection => {
            let halls: Vec<usize> = sw
                .class_reps()
                .into_iter()
                .filter(|&h| gcd(lat.get(h).order(), n / lat.get(h).order()) == 1)
                .collect();
            let mut cands = Vec::new();
            for &h in &halls {
                for k in 0..lat.len() {
                    for m in 0..lat.len() {
                        cands.push((h, k, m));
                    }
                }
            }
            for (h, k, m) in thin(cands, BUDGET * 4, &mut rng) {
                let (hs, ks, ns) = (lat.get(h), lat.get(k), lat.get(m));
                if !(hs.permutes_unchecked(ks) && hs.permutes_unchecked(ns) && ks.permutes_unchecked(ns)) {
                    t.skip();
                    continue;
                }
                let mut left = hs.product_set(ks);
                left.intersect_with(ns.members());
                let right = ns.intersection(hs).product_set(&ns.intersection(ks));
                t.check(left == right, || format!("H #{h} K #{k} N #{m}"));
            }
        }
        LemmaId::SubnormalPiSubgroup => {
            for h in sw.class_reps() {
                let hs = lat.get(h);
                if !is_subnormal(hs) {
                    t.skip();
                    continue;
                }
                let pi = hs.primes();
                let o = named::o_pi(lat, lat.whole(), &pi);
                t.check(hs.is_subgroup_of(&o), || format!("H #{h}"));
            }
        }
        LemmaId::GeneralizedFittingEmbedding => {
            for &e in &normals {
                record(
                    &mut t,
                    lemma_check(lat, LemmaCheck::GeneralizedFittingEmbedding { normal: lat.get(e) }),
                    || format!("E #{e}"),
                );
            }
        }
        LemmaId::ConjugatePermutability | LemmaId::ConjugatePermutabilitySwapped => {
            let mut cands = Vec::new();
            for a in sw.class_reps() {
                for b in 0..lat.len() {
                    if lat.get(a).product_size(lat.get(b)) == n {
                        for k in lat.within(lat.get(b)) {
                            cands.push((a, b, k));
                        }
                    }
                }
            }
            for (a, b, k) in thin(cands, BUDGET, &mut rng) {
                let (asub, bsub, ksub) = (lat.get(a), lat.get(b), lat.get(k));
                let hyp = bsub.elements().all(|x| asub.permutes_unchecked(&ksub.conjugate_by(x)));
                if !hyp {
                    t.skip();
                    continue;
                }
                let xs: Vec<Elem> = thin(g.elems().collect(), 12, &mut rng);
                let ok = xs.iter().all(|&x| {
                    if lemma == LemmaId::ConjugatePermutability {
                        asub.permutes_unchecked(&ksub.conjugate_by(x))
                    } else {
                        asub.conjugate_by(x).permutes_unchecked(ksub)
                    }
                });
                t.check(ok, || format!("A #{a} B #{b} K #{k}"));
            }
        }
        LemmaId::SsQuasinormalSemipermutable => {
            let s = SigmaPartition::singletons(g.primes());
            let sets: Vec<CompleteHallSigmaSet> = complete_hall_sets(lat, &s).expect("Sylow sets exist");
            for h in sw.class_reps() {
                if !ctx.ss_quasinormal(h) {
                    t.skip();
                    continue;
                }
                let hs = lat.get(h);
                let ok = sets
                    .iter()
                    .take(HALL_SETS)
                    .all(|set| is_sigma_semipermutable(hs, set).expect("same parent").holds())
                    && is_s_semipermutable(lat, hs);
                t.check(ok, || format!("H #{h}"));
            }
        }
    }
    t
}

fn record(t: &mut Tally, v: Result<crate::classes::ClassVerdict>, what: impl FnOnce() -> String) {
    match v {
        Err(Error::NotApplicable(_)) => t.skip(),
        Err(e) => t.check(false, || format!("{}: {e}", what())),
        Ok(v) => t.check(v.holds, || {
            format!("{}: {}", what(), v.witness.map(|w| w.to_string()).unwrap_or_default())
        }),
    }
}

/// Runs the statements over a corpus in parallel; output in corpus order.
pub fn lemma_suite(groups: &[CorpusGroup], which: &[LemmaId], threads: Option<usize>) -> Vec<LemmaReport> {
    let run = || -> Vec<Vec<LemmaReport>> {
        groups
            .par_iter()
            .map(|cg| match SubgroupLattice::new(&cg.group) {
                Ok(lat) => check_lemmas(cg.id(), &lat, which),
                Err(e) => which
                    .iter()
                    .map(|l| LemmaReport {
                        lemma: l.code().to_string(),
                        group: cg.id().to_string(),
                        instances: 0,
                        not_applicable: 0,
                        violations: Vec::new(),
                        skipped: Some(e.to_string()),
                    })
                    .collect(),
            })
            .collect()
    };
    let out = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("pool").install(run),
        None => run(),
    };
    out.into_iter().flatten().collect()
}
