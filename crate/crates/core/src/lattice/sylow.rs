use crate::arith;
use crate::group::{Group, Subgroup};

use super::SubgroupLattice;

/// A Sylow `p`-subgroup of `group`; the trivial subgroup when `p ∤ |G|`.
///
/// Grows a `p`-subgroup one step at a time: while `P` is not Sylow,
/// `N_G(P)/P` has an element of order `p`, i.e. some `x ∈ N_G(P) \ P` with
/// `x^p ∈ P`, and `⟨P, x⟩` has order `p|P|`. Candidates are scanned in index
/// order, so the result is deterministic.
pub fn sylow(group: &Group, p: usize) -> Subgroup {
    let target = arith::p_part(group.order(), p);
    let mut sub = group.trivial_subgroup();
    while sub.order() < target {
        let next = group
            .elems()
            .find(|&x| {
                !sub.contains(x)
                    && sub.contains(group.pow(x, p))
                    && sub.generators().iter().all(|&h| sub.contains(group.conj(h, x)))
            })
            .expect("Sylow's theorem guarantees an extending element");
        sub = sub.extended(&[next]);
    }
    sub
}

/// All Hall π-subgroups (order exactly the π-part of `|G|`), canonically ordered.
pub fn all_hall(lat: &SubgroupLattice, pi: &[usize]) -> Vec<Subgroup> {
    let target = arith::pi_part(lat.group().order(), |q| pi.contains(&q));
    lat.of_order(target).map(|i| lat.get(i).clone()).collect()
}

/// The canonically first Hall π-subgroup, or `None` when none exists.
pub fn hall(lat: &SubgroupLattice, pi: &[usize]) -> Option<Subgroup> {
    all_hall(lat, pi).into_iter().next()
}
