//! Partitions of the primes, complete Hall σ-sets and σ-semipermutability.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::gcd;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Embedding, Group, Subgroup};
use crate::lattice::{named, SubgroupLattice};
use crate::perm::Permutation;

/// A partition σ of the primes: explicit disjoint blocks, optionally followed
/// by one implicit block holding every unlisted prime.
///
/// Blocks are kept sorted by least prime, so `2|3` and `3|2` are the same
/// partition with the same block indices. The implicit block, when present,
/// has index `blocks.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaPartition {
    blocks: Vec<Vec<usize>>,
    remainder: bool,
}

impl SigmaPartition {
    pub fn new(blocks: Vec<Vec<usize>>, remainder: bool) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::SigmaParse {
                    text: String::new(),
                    msg: "empty block".into(),
                });
            }
            for &p in b.iter() {
                if !arith::is_prime(p) {
                    return Err(Error::SigmaParse {
                        text: p.to_string(),
                        msg: "not a prime".into(),
                    });
                }
                if !seen.insert(p) {
                    return Err(Error::SigmaParse {
                        text: p.to_string(),
                        msg: "prime listed in two blocks".into(),
                    });
                }
            }
            b.sort_unstable();
        }
        blocks.sort();
        Ok(SigmaPartition { blocks, remainder })
    }

    /// `{{p} : p ∈ primes}` plus the remainder block.
    pub fn singletons(primes: &[usize]) -> Self {
        SigmaPartition::new(primes.iter().map(|&p| vec![p]).collect(), true)
            .expect("distinct primes")
    }

    /// `{π, π′}`.
    pub fn binary(pi: &[usize]) -> Self {
        SigmaPartition::new(vec![pi.to_vec()], true).expect("distinct primes")
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn has_remainder(&self) -> bool {
        self.remainder
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len() + self.remainder as usize
    }

    /// Index of the block containing `p`.
    pub fn block_of(&self, p: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.contains(&p))
            .or(self.remainder.then_some(self.blocks.len()))
    }

    pub fn in_block(&self, block: usize, p: usize) -> bool {
        self.block_of(p) == Some(block)
    }

    /// The σ_i-part of `n`.
    pub fn block_part(&self, block: usize, n: usize) -> usize {
        arith::pi_part(n, |q| self.in_block(block, q))
    }

    /// Indices of the blocks meeting π(n), ascending.
    pub fn blocks_meeting(&self, n: usize) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for p in arith::primes_of(n) {
            let b = self.block_of(p).ok_or(Error::UncoveredPrime(p))?;
            if !out.contains(&b) {
                out.push(b);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The partition of `primes` induced by σ, canonically sorted. Two
    /// partitions with equal restrictions behave identically on groups whose
    /// primes lie in `primes`.
    pub fn restricted(&self, primes: &[usize]) -> Vec<Vec<usize>> {
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for b in 0..self.block_count() {
            let part: Vec<usize> = primes.iter().copied().filter(|&p| self.in_block(b, p)).collect();
            if !part.is_empty() {
                parts.push(part);
            }
        }
        parts.sort();
        parts
    }
}

impl fmt::Display for SigmaPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        if self.remainder {
            parts.push("*".into());
        }
        f.write_str(&parts.join("|"))
    }
}

impl FromStr for SigmaPartition {
    type Err = Error;

    /// Grammar: blocks separated by `|`, primes within a block by `,`, and an
    /// optional final `*` for the remainder block. Example: `2|3,5|*`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::SigmaParse {
            text: s.to_string(),
            msg: msg.to_string(),
        };
        let parts: Vec<&str> = s.split('|').map(str::trim).collect();
        let mut blocks = Vec::new();
        let mut remainder = false;
        for (i, part) in parts.iter().enumerate() {
            if *part == "*" {
                if i + 1 != parts.len() {
                    return Err(err("'*' must be the last block"));
                }
                remainder = true;
                continue;
            }
            if part.is_empty() {
                return Err(err("empty block"));
            }
            let block = part
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| err(&format!("bad prime '{}'", t.trim()))))
                .collect::<Result<Vec<usize>>>()?;
            blocks.push(block);
        }
        SigmaPartition::new(blocks, remainder).map_err(|e| match e {
            Error::SigmaParse { text, msg } => err(&format!("{msg}: {text}")),
            other => other,
        })
    }
}

/// σ(G): indices of the blocks meeting π(G).
pub fn sigma_of(group: &Group, sigma: &SigmaPartition) -> Result<Vec<usize>> {
    sigma.blocks_meeting(group.order())
}

/// The default sweep over σ for a group with prime set `primes`: the
/// singleton partition and every `{π, π′}` with `∅ ≠ π ⊊ primes`, keeping one
/// partition per distinct restriction to `primes`.
pub fn sweep_family(primes: &[usize]) -> Vec<SigmaPartition> {
    let mut out = vec![SigmaPartition::singletons(primes)];
    let mut seen = vec![out[0].restricted(primes)];
    let n = primes.len();
    for mask in 1..(1u32 << n).saturating_sub(1) {
        let pi: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).collect();
        let s = SigmaPartition::binary(&pi);
        let r = s.restricted(primes);
        if !seen.contains(&r) {
            seen.push(r);
            out.push(s);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallMember {
    pub block: usize,
    pub subgroup: Subgroup,
}

/// One Hall σ_i-subgroup for each σ_i ∈ σ(G), ordered by block index.
#[derive(Clone, Debug)]
pub struct CompleteHallSigmaSet {
    pub group: Group,
    pub sigma: SigmaPartition,
    pub members: Vec<HallMember>,
}

impl CompleteHallSigmaSet {
    /// Validates that `members` is a complete Hall σ-set of `group`.
    pub fn new(group: &Group, sigma: &SigmaPartition, members: Vec<HallMember>) -> Result<Self> {
        let blocks = sigma_of(group, sigma)?;
        if members.iter().map(|m| m.block).collect::<Vec<_>>() != blocks {
            return Err(Error::Precondition(
                "need exactly one member per block of sigma(G), in block order".into(),
            ));
        }
        for m in &members {
            if !m.subgroup.parent().same_as(group) {
                return Err(Error::ParentMismatch);
            }
            if m.subgroup.order() != sigma.block_part(m.block, group.order()) {
                return Err(Error::Precondition(format!(
                    "member for block {} has order {}, not a Hall subgroup",
                    m.block,
                    m.subgroup.order()
                )));
            }
        }
        Ok(CompleteHallSigmaSet {
            group: group.clone(),
            sigma: sigma.clone(),
            members,
        })
    }

    pub fn member_for(&self, block: usize) -> Option<&Subgroup> {
        self.members.iter().find(|m| m.block == block).map(|m| &m.subgroup)
    }
}

/// For each block of σ(G), the lattice indices of all Hall σ_i-subgroups.
pub fn hall_choices(lat: &SubgroupLattice, sigma: &SigmaPartition) -> Result<Vec<(usize, Vec<usize>)>> {
    let n = lat.group().order();
    sigma_of(lat.group(), sigma)?
        .into_iter()
        .map(|b| Ok((b, lat.of_order(sigma.block_part(b, n)).collect())))
        .collect()
}

/// Every choice of one index per block, in lexicographic order.
pub fn cartesian(choices: &[(usize, Vec<usize>)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for (_, opts) in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                opts.iter().map(move |&o| {
                    let mut v = prefix.clone();
                    v.push(o);
                    v
                })
            })
            .collect();
    }
    out
}

/// All complete Hall σ-sets of the lattice's group. Empty when some block of
/// σ(G) has no Hall subgroup; the trivial group has exactly one, the empty set.
pub fn complete_hall_sets(
    lat: &SubgroupLattice,
    sigma: &SigmaPartition,
) -> Result<Vec<CompleteHallSigmaSet>> {
    let choices = hall_choices(lat, sigma)?;
    Ok(cartesian(&choices)
        .into_iter()
        .map(|ids| CompleteHallSigmaSet {
            group: lat.group().clone(),
            sigma: sigma.clone(),
            members: choices
                .iter()
                .zip(ids)
                .map(|((b, _), i)| HallMember {
                    block: *b,
                    subgroup: lat.get(i).clone(),
                })
                .collect(),
        })
        .collect())
}

/// `AB = BA`.
pub fn permutes(a: &Subgroup, b: &Subgroup) -> Result<bool> {
    a.permutes_with(b)
}

/// Result of a σ-semipermutability test. `failures` lists `(block, x)` with
/// `H H_i^x ≠ H_i^x H`; `vacuous` is set when no member has order coprime to `|H|`.
#[derive(Clone, Debug)]
pub struct SemipermutabilityWitness {
    pub subject: Subgroup,
    pub hall_set: CompleteHallSigmaSet,
    pub failures: Vec<(usize, Permutation)>,
    pub vacuous: bool,
}

impl SemipermutabilityWitness {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests `H H_i^x = H_i^x H` for every member `H_i` with `(|H|, |H_i|) = 1`
/// and every `x` in a right transversal of `N_G(H_i)`.
pub fn is_sigma_semipermutable(
    h: &Subgroup,
    hall_set: &CompleteHallSigmaSet,
) -> Result<SemipermutabilityWitness> {
    let g = &hall_set.group;
    if !h.parent().same_as(g) {
        return Err(Error::ParentMismatch);
    }
    let mut failures = Vec::new();
    let mut vacuous = true;
    for m in &hall_set.members {
        if gcd(h.order(), m.subgroup.order()) != 1 {
            continue;
        }
        vacuous = false;
        let n = named::normalizer(&m.subgroup);
        for x in g.right_transversal(&n) {
            let conj = m.subgroup.conjugate_by(x);
            if !h.permutes_unchecked(&conj) {
                failures.push((m.block, g.element(x).clone()));
            }
        }
    }
    Ok(SemipermutabilityWitness {
        subject: h.clone(),
        hall_set: hall_set.clone(),
        failures,
        vacuous,
    })
}

/// `L ∩ 𝓗` when it is a complete Hall σ-set of `L`, expressed on `L` as a
/// standalone group together with the embedding of `L`.
pub fn reduces_into(
    hall_set: &CompleteHallSigmaSet,
    l: &Subgroup,
) -> Option<(Embedding, CompleteHallSigmaSet)> {
    if !l.parent().same_as(&hall_set.group) {
        return None;
    }
    let sigma = &hall_set.sigma;
    let blocks = sigma.blocks_meeting(l.order()).ok()?;
    let emb = l.to_group();
    let mut members = Vec::new();
    for b in blocks {
        let hi = hall_set.member_for(b)?;
        let meet = hi.intersection(l);
        if meet.order() != sigma.block_part(b, l.order()) {
            return None;
        }
        members.push(HallMember {
            block: b,
            subgroup: emb.restrict(&meet).expect("intersection lies in L"),
        });
    }
    let set = CompleteHallSigmaSet {
        group: emb.group.clone(),
        sigma: sigma.clone(),
        members,
    };
    Some((emb, set))
}

/// `H` permutes with every Sylow subgroup `P` of `G` with `(|H|, |P|) = 1`,
/// read straight off the lattice's Sylow lists.
pub fn is_s_semipermutable(lat: &SubgroupLattice, h: &Subgroup) -> bool {
    let n = lat.group().order();
    lat.group()
        .primes()
        .iter()
        .filter(|&&p| !h.order().is_multiple_of(p))
        .all(|&p| {
            lat.of_order(arith::p_part(n, p))
                .all(|i| h.permutes_unchecked(lat.get(i)))
        })
}

/// `H` permutes with every Sylow subgroup of `T`.
pub fn permutes_with_sylows_of(lat: &SubgroupLattice, h: &Subgroup, t: &Subgroup) -> bool {
    t.primes().into_iter().all(|p| {
        lat.within_of_order(t, arith::p_part(t.order(), p))
            .all(|i| h.permutes_unchecked(lat.get(i)))
    })
}

/// A supplement `T` (`HT = G`) such that `H` permutes with all Sylow
/// subgroups of `T`, as a lattice index. Tries `T = G` first.
pub fn ss_quasinormal_supplement(lat: &SubgroupLattice, h: &Subgroup) -> Option<usize> {
    let n = lat.group().order();
    (0..lat.len()).rev().find(|&i| {
        let t = lat.get(i);
        h.product_size(t) == n && permutes_with_sylows_of(lat, h, t)
    })
}

/// Memoized permutability of lattice subgroups with whole conjugacy classes,
/// for repeated σ-semipermutability tests against lattice-indexed Hall sets.
pub struct ClassPermutability<'a> {
    lat: &'a SubgroupLattice,
    memo: RefCell<HashMap<(usize, usize), bool>>,
}

impl<'a> ClassPermutability<'a> {
    pub fn new(lat: &'a SubgroupLattice) -> Self {
        ClassPermutability {
            lat,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lat
    }

    /// `H` permutes with every conjugate of the member of class `class`.
    pub fn permutes_with_class(&self, h: usize, class: usize) -> bool {
        if let Some(&v) = self.memo.borrow().get(&(h, class)) {
            return v;
        }
        let sub = self.lat.get(h);
        let v = self.lat.classes()[class]
            .iter()
            .all(|&c| sub.permutes_unchecked(self.lat.get(c)));
        self.memo.borrow_mut().insert((h, class), v);
        v
    }

    /// σ-semipermutability of lattice subgroup `h` with respect to the Hall
    /// set given by lattice indices. Returns the first failing member.
    pub fn first_failure(&self, h: usize, hall_ids: &[usize]) -> Option<usize> {
        let order = self.lat.get(h).order();
        hall_ids.iter().copied().find(|&m| {
            gcd(order, self.lat.get(m).order()) == 1
                && !self.permutes_with_class(h, self.lat.class_of(m))
        })
    }

    pub fn is_semipermutable(&self, h: usize, hall_ids: &[usize]) -> bool {
        self.first_failure(h, hall_ids).is_none()
    }
}

/// `H` permutes with `K^x` for every `x` in `G`.
pub fn permutes_with_all_conjugates(a: &Subgroup, k: &Subgroup) -> bool {
    let g = a.parent();
    let n = named::normalizer(k);
    g.right_transversal(&n)
        .into_iter()
        .all(|x| a.permutes_unchecked(&k.conjugate_by(x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(deg: usize, gens: &[&str]) -> Group {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(deg, s).unwrap())
            .collect();
        Group::closure(deg, &gens).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let s: SigmaPartition = "3,5|2|*".parse().unwrap();
        assert_eq!(s.to_string(), "2|3,5|*");
        assert_eq!(s.block_of(5), Some(1));
        assert_eq!(s.block_of(7), Some(2));
        let t: SigmaPartition = "2|3".parse().unwrap();
        assert_eq!(t.block_of(5), None);
        for bad in ["", "2||3", "*|2", "4|3", "2|2", "x"] {
            assert!(bad.parse::<SigmaPartition>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn sigma_of_examples() {
        let s = SigmaPartition::singletons(&[2, 3]);
        assert!(sigma_of(&Group::trivial(1), &s).unwrap().is_empty());
        assert_eq!(s.blocks_meeting(24).unwrap(), vec![0, 1]);
        let b: SigmaPartition = "2,3|*".parse().unwrap();
        assert_eq!(b.blocks_meeting(60).unwrap(), vec![0, 1]);
        let closed: SigmaPartition = "2,3".parse().unwrap();
        assert!(matches!(closed.blocks_meeting(60), Err(Error::UncoveredPrime(5))));
    }

    #[test]
    fn sweep_family_dedups() {
        assert_eq!(sweep_family(&[]).len(), 1);
        assert_eq!(sweep_family(&[2]).len(), 1);
        assert_eq!(sweep_family(&[2, 3]).len(), 1);
        // singletons, 2|35, 3|25, 5|23
        assert_eq!(sweep_family(&[2, 3, 5]).len(), 4);
    }

    #[test]
    fn hall_set_counts() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let lat = SubgroupLattice::new(&s3).unwrap();
        let sets = complete_hall_sets(&lat, &SigmaPartition::singletons(&[2, 3])).unwrap();
        assert_eq!(sets.len(), 3);
        let a5 = group(5, &["(0 1 2)", "(0 1 2 3 4)"]);
        let lat = SubgroupLattice::new(&a5).unwrap();
        let sigma: SigmaPartition = "3,5|*".parse().unwrap();
        assert!(complete_hall_sets(&lat, &sigma).unwrap().is_empty());
        let triv = SubgroupLattice::new(&Group::trivial(1)).unwrap();
        let sets = complete_hall_sets(&triv, &sigma).unwrap();
        assert_eq!(sets.len(), 1);
        assert!(sets[0].members.is_empty());
    }

    #[test]
    fn semipermutability_in_s4() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let lat = SubgroupLattice::new(&s4).unwrap();
        let sets = complete_hall_sets(&lat, &SigmaPartition::singletons(&[2, 3])).unwrap();
        let t = s4.generated(&[Permutation::parse_cycles(4, "(0 1)").unwrap()]).unwrap();
        let direct = lat
            .of_order(3)
            .all(|i| t.product_set(lat.get(i)) == lat.get(i).product_set(&t));
        let cache = ClassPermutability::new(&lat);
        let tid = lat.id(&t);
        for hs in &sets {
            let w = is_sigma_semipermutable(&t, hs).unwrap();
            assert_eq!(w.holds(), direct);
            assert!(!w.vacuous);
            let ids: Vec<usize> = hs.members.iter().map(|m| lat.id(&m.subgroup)).collect();
            assert_eq!(cache.is_semipermutable(tid, &ids), w.holds());
        }
        assert_eq!(is_s_semipermutable(&lat, &t), direct);
        // a 2-subgroup of order 8 against the Sylow 2 member only: vacuous
        let p = lat.get(lat.of_order(8).next().unwrap());
        let w = is_sigma_semipermutable(p, &sets[0]).unwrap();
        assert!(!w.vacuous);
        let w = is_sigma_semipermutable(lat.whole(), &sets[0]).unwrap();
        assert!(w.vacuous && w.holds());
    }

    #[test]
    fn reduction_examples() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let lat = SubgroupLattice::new(&s4).unwrap();
        let hs = &complete_hall_sets(&lat, &SigmaPartition::singletons(&[2, 3])).unwrap()[0];
        let (_, whole) = reduces_into(hs, lat.whole()).unwrap();
        assert_eq!(whole.members.len(), 2);
        let (_, triv) = reduces_into(hs, lat.trivial()).unwrap();
        assert!(triv.members.is_empty());
        let a4 = lat.get(lat.of_order(12).next().unwrap());
        let (emb, red) = reduces_into(hs, a4).unwrap();
        assert_eq!(red.members[0].subgroup.order(), 4);
        assert_eq!(red.members[1].subgroup.order(), 3);
        assert_eq!(emb.group.order(), 12);
    }

    #[test]
    fn ss_quasinormal_and_normal() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let lat = SubgroupLattice::new(&s4).unwrap();
        for &i in lat.normal() {
            assert_eq!(ss_quasinormal_supplement(&lat, lat.get(i)), Some(lat.len() - 1));
        }
    }
}
