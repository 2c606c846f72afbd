use crate::arith;
use crate::error::{Error, Result};
use crate::group::Subgroup;

use super::SubgroupLattice;

/// One chief factor `upper/lower`.
#[derive(Clone, Debug)]
pub struct ChiefFactor {
    pub lower: Subgroup,
    pub upper: Subgroup,
    pub order: usize,
    pub is_cyclic: bool,
    /// `Some(p)` when the factor is a `p`-group.
    pub p_group_for: Option<usize>,
}

impl ChiefFactor {
    fn new(lower: &Subgroup, upper: &Subgroup) -> ChiefFactor {
        let order = upper.order() / lower.order();
        ChiefFactor {
            lower: lower.clone(),
            upper: upper.clone(),
            order,
            is_cyclic: factor_is_cyclic(lower, upper),
            p_group_for: arith::prime_power(order).map(|(p, _)| p),
        }
    }

    /// A `p`-group or a `p′`-group.
    pub fn is_p_or_p_prime(&self, p: usize) -> bool {
        !self.order.is_multiple_of(p) || self.p_group_for == Some(p)
    }
}

/// Some coset `mK` generates `M/K`.
fn factor_is_cyclic(lower: &Subgroup, upper: &Subgroup) -> bool {
    let g = upper.parent();
    let index = upper.order() / lower.order();
    upper.elements().any(|m| {
        let mut acc = m;
        let mut j = 1;
        while !lower.contains(acc) {
            acc = g.mul(acc, m);
            j += 1;
        }
        j == index
    })
}

/// A chief series `1 = N_0 < N_1 < … < N_r = G`, every term normal in `G` and
/// every factor a chief factor.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub chain: Vec<Subgroup>,
    pub factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    fn from_chain(chain: Vec<Subgroup>) -> ChiefSeries {
        let factors = chain.windows(2).map(|w| ChiefFactor::new(&w[0], &w[1])).collect();
        ChiefSeries { chain, factors }
    }

    /// Factors lying between `lower` and `upper`, which must be terms of the chain.
    pub fn factors_between<'a>(
        &'a self,
        lower: &'a Subgroup,
        upper: &'a Subgroup,
    ) -> impl Iterator<Item = &'a ChiefFactor> + 'a {
        self.factors
            .iter()
            .filter(move |f| lower.is_subgroup_of(&f.lower) && f.upper.is_subgroup_of(upper))
    }

    /// Sorted `(order, cyclic)` pairs, the Jordan–Hölder invariant.
    pub fn signature(&self) -> Vec<(usize, bool)> {
        let mut s: Vec<(usize, bool)> = self.factors.iter().map(|f| (f.order, f.is_cyclic)).collect();
        s.sort_unstable();
        s
    }
}

fn checked_through(lat: &SubgroupLattice, through: &[Subgroup]) -> Result<Vec<usize>> {
    let mut ids = Vec::with_capacity(through.len());
    for t in through {
        let i = lat
            .index_of(t)
            .ok_or(Error::ParentMismatch)?;
        if !lat.is_normal(i) {
            return Err(Error::NotNormal(format!("chief series term of order {}", t.order())));
        }
        ids.push(i);
    }
    ids.sort_unstable();
    ids.dedup();
    for w in ids.windows(2) {
        if !lat.get(w[0]).is_subgroup_of(lat.get(w[1])) {
            return Err(Error::Precondition(
                "chief series terms must form a chain".into(),
            ));
        }
    }
    Ok(ids)
}

/// A chief series passing through every member of `through`.
///
/// Built bottom-up: from the current term `K`, the next term is the
/// canonically first normal `M` with `K < M ≤ T` for the next target `T`.
/// The first candidate in canonical (order, elements) order has least order,
/// hence `M/K` is a minimal normal subgroup of `G/K`.
pub fn chief_series(lat: &SubgroupLattice, through: &[Subgroup]) -> Result<ChiefSeries> {
    let mut targets = checked_through(lat, through)?;
    targets.push(lat.len() - 1);
    let mut chain = vec![lat.trivial().clone()];
    let mut current = 0usize;
    for t in targets {
        let target = lat.get(t);
        while current != t {
            let cur = lat.get(current);
            let next = lat
                .normal()
                .iter()
                .copied()
                .find(|&m| {
                    let s = lat.get(m);
                    s.order() > cur.order() && cur.is_subgroup_of(s) && s.is_subgroup_of(target)
                })
                .expect("target is itself a candidate");
            chain.push(lat.get(next).clone());
            current = next;
        }
    }
    Ok(ChiefSeries::from_chain(chain))
}

/// A chief series built top-down: each step passes to the canonically last
/// (hence maximal) normal subgroup strictly inside the current term and
/// containing the next target. Used to cross-check [`chief_series`].
pub fn chief_series_top_down(lat: &SubgroupLattice, through: &[Subgroup]) -> Result<ChiefSeries> {
    let mut targets = checked_through(lat, through)?;
    targets.reverse();
    targets.push(0);
    let mut chain = vec![lat.whole().clone()];
    let mut current = lat.len() - 1;
    for t in targets {
        let target = lat.get(t);
        while current != t {
            let cur = lat.get(current);
            let next = lat
                .normal()
                .iter()
                .rev()
                .copied()
                .find(|&m| {
                    let s = lat.get(m);
                    s.order() < cur.order() && s.is_subgroup_of(cur) && target.is_subgroup_of(s)
                })
                .expect("target is itself a candidate");
            chain.push(lat.get(next).clone());
            current = next;
        }
    }
    chain.reverse();
    Ok(ChiefSeries::from_chain(chain))
}
