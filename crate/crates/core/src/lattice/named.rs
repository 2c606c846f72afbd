//! Classical characteristic and relative subgroups.

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::classes;
use crate::error::{Error, Result};
use crate::group::{conjugacy_orbit, Elem, Subgroup};

use super::SubgroupLattice;

/// Which subgroup [`named_subgroup`] should compute.
#[derive(Clone, Copy, Debug)]
pub enum NamedKind<'a> {
    Center,
    Derived,
    Frattini,
    Fitting,
    /// `F*(E)` for `E` normal in `G`.
    GeneralizedFitting(&'a Subgroup),
    Hypercenter,
    Socle,
    /// `O_π(G)`.
    OPi(&'a [usize]),
    Core(&'a Subgroup),
    NormalClosure(&'a Subgroup),
    Normalizer(&'a Subgroup),
    Centralizer(&'a Subgroup),
    /// `C_G(H/K)` for `K ⊴ G`, `H ⊴ G`, `K ≤ H`.
    CentralizerOfFactor(&'a Subgroup, &'a Subgroup),
}

pub fn named_subgroup(lat: &SubgroupLattice, kind: NamedKind<'_>) -> Result<Subgroup> {
    let g = lat.group();
    let own = |h: &Subgroup| -> Result<()> {
        if h.parent().same_as(g) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    };
    let whole = lat.whole();
    Ok(match kind {
        NamedKind::Center => center(whole),
        NamedKind::Derived => derived(whole),
        NamedKind::Frattini => frattini(lat, whole),
        NamedKind::Fitting => fitting(lat, whole),
        NamedKind::GeneralizedFitting(e) => {
            own(e)?;
            if !e.is_normal() {
                return Err(Error::NotNormal("E for the generalized Fitting subgroup".into()));
            }
            generalized_fitting(lat, e)
        }
        NamedKind::Hypercenter => hypercenter(whole),
        NamedKind::Socle => socle(lat),
        NamedKind::OPi(pi) => o_pi(lat, whole, pi),
        NamedKind::Core(h) => {
            own(h)?;
            core(h)
        }
        NamedKind::NormalClosure(h) => {
            own(h)?;
            normal_closure(h, whole)
        }
        NamedKind::Normalizer(h) => {
            own(h)?;
            normalizer(h)
        }
        NamedKind::Centralizer(h) => {
            own(h)?;
            centralizer(h)
        }
        NamedKind::CentralizerOfFactor(h, k) => {
            own(h)?;
            own(k)?;
            if !h.is_normal() || !k.is_normal() {
                return Err(Error::NotNormal("factor terms for C_G(H/K)".into()));
            }
            if !k.is_subgroup_of(h) {
                return Err(Error::Precondition("K must be contained in H".into()));
            }
            centralizer_of_factor(h, k)
        }
    })
}

/// `Z(H)`.
pub fn center(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let gens = h.generators();
    let mut m = FixedBitSet::with_capacity(g.order());
    for x in h.elements() {
        if gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)) {
            m.insert(x as usize);
        }
    }
    g.subgroup_from_members(m)
}

/// The smallest subgroup containing `h` and normalized by `within`.
pub fn normal_closure(h: &Subgroup, within: &Subgroup) -> Subgroup {
    let g = h.parent();
    let mut out = h.clone();
    loop {
        let extra: Vec<Elem> = out
            .generators()
            .iter()
            .flat_map(|&a| within.generators().iter().map(move |&x| g.conj(a, x)))
            .filter(|&c| !out.contains(c))
            .collect();
        if extra.is_empty() {
            return out;
        }
        out = out.extended(&extra);
    }
}

/// `H′ = [H, H]`: the normal closure in `H` of commutators of generators.
pub fn derived(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let gens = h.generators();
    let comms: Vec<Elem> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| g.comm(a, b)))
        .collect();
    normal_closure(&g.generated_by(&comms), h)
}

/// Derived series `H ≥ H′ ≥ H″ ≥ …` down to its terminal term.
pub fn derived_series(h: &Subgroup) -> Vec<Subgroup> {
    let mut out = vec![h.clone()];
    loop {
        let next = derived(out.last().unwrap());
        if next.order() == out.last().unwrap().order() {
            return out;
        }
        out.push(next);
    }
}

/// Upper central series `1 = Z_0 ≤ Z_1 ≤ …` of `H`, up to `Z_∞(H)`.
pub fn upper_central_series(h: &Subgroup) -> Vec<Subgroup> {
    let g = h.parent();
    let gens = h.generators().to_vec();
    let mut out = vec![g.trivial_subgroup()];
    loop {
        let cur = out.last().unwrap().clone();
        let mut m = FixedBitSet::with_capacity(g.order());
        for x in h.elements() {
            if gens.iter().all(|&y| cur.contains(g.comm(x, y))) {
                m.insert(x as usize);
            }
        }
        if m.count_ones(..) == cur.order() {
            return out;
        }
        out.push(g.subgroup_from_members(m));
    }
}

/// `Z_∞(H)`, the last term of the upper central series.
pub fn hypercenter(h: &Subgroup) -> Subgroup {
    upper_central_series(h).pop().unwrap()
}

/// `N_G(H)`.
pub fn normalizer(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    g.subgroup_where(|x| h.generators().iter().all(|&a| h.contains(g.conj(a, x))))
}

/// `C_G(H)`.
pub fn centralizer(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    g.subgroup_where(|x| h.generators().iter().all(|&a| g.mul(a, x) == g.mul(x, a)))
}

/// `C_G(H/K) = {x : [x, h] ∈ K for all h ∈ H}`.
pub fn centralizer_of_factor(h: &Subgroup, k: &Subgroup) -> Subgroup {
    let g = h.parent();
    g.subgroup_where(|x| h.generators().iter().all(|&a| k.contains(g.comm(x, a))))
}

/// `H_G`, the intersection of all conjugates of `H`.
pub fn core(h: &Subgroup) -> Subgroup {
    let orbit = conjugacy_orbit(h);
    let mut m = h.members().clone();
    for c in &orbit[1..] {
        m.intersect_with(c.members());
    }
    h.parent().subgroup_from_members(m)
}

/// Subgroups of `e` normalized by `e`, as lattice indices.
pub fn normal_in<'a>(lat: &'a SubgroupLattice, e: &'a Subgroup) -> impl Iterator<Item = usize> + 'a {
    lat.within(e).filter(move |&i| lat.get(i).is_normalized_by(e))
}

/// `O_π(E)`: the largest π-subgroup normal in `E`.
pub fn o_pi(lat: &SubgroupLattice, e: &Subgroup, pi: &[usize]) -> Subgroup {
    let mut acc = lat.group().trivial_subgroup();
    for i in normal_in(lat, e) {
        let s = lat.get(i);
        if arith::is_pi_number(s.order(), |q| pi.contains(&q)) && !s.is_subgroup_of(&acc) {
            acc = acc.join(s);
        }
    }
    acc
}

/// `O_p(E)`.
pub fn o_p(lat: &SubgroupLattice, e: &Subgroup, p: usize) -> Subgroup {
    o_pi(lat, e, &[p])
}

/// `O_{p′}(E)`.
pub fn o_p_prime(lat: &SubgroupLattice, e: &Subgroup, p: usize) -> Subgroup {
    let pi: Vec<usize> = e.primes().into_iter().filter(|&q| q != p).collect();
    o_pi(lat, e, &pi)
}

/// `F(E) = ∏_p O_p(E)`.
pub fn fitting(lat: &SubgroupLattice, e: &Subgroup) -> Subgroup {
    e.primes()
        .into_iter()
        .fold(lat.group().trivial_subgroup(), |acc, p| acc.join(&o_p(lat, e, p)))
}

/// `Φ(E)`: the intersection of the maximal subgroups of `E`.
pub fn frattini(lat: &SubgroupLattice, e: &Subgroup) -> Subgroup {
    let maximal = lat.maximal_in(e);
    if maximal.is_empty() {
        return e.clone();
    }
    let mut m = e.members().clone();
    for i in maximal {
        m.intersect_with(lat.get(i).members());
    }
    lat.group().subgroup_from_members(m)
}

/// Product of the minimal normal subgroups of `G`.
pub fn socle(lat: &SubgroupLattice) -> Subgroup {
    lat.minimal_normal()
        .into_iter()
        .fold(lat.group().trivial_subgroup(), |acc, i| acc.join(lat.get(i)))
}

/// `F*(E)`: the product of all quasinilpotent subgroups normal in `E`.
///
/// Nilpotent candidates are accepted directly; the rest go through the
/// chief-factor quasinilpotence test.
pub fn generalized_fitting(lat: &SubgroupLattice, e: &Subgroup) -> Subgroup {
    let mut acc = lat.group().trivial_subgroup();
    let candidates: Vec<usize> = normal_in(lat, e).collect();
    for i in candidates.into_iter().rev() {
        let n = lat.get(i);
        if n.is_subgroup_of(&acc) {
            continue;
        }
        if classes::subgroup_is_nilpotent(n) || classes::subgroup_is_quasinilpotent(lat, n) {
            acc = acc.join(n);
        }
    }
    acc
}
