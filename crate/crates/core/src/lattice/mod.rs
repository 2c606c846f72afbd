//! Subgroup lattices and the subgroup-valued functors computed from them.

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{conjugacy_orbit, Embedding, Group, Subgroup};

pub mod named;
mod quotient;
mod series;
mod sylow;

pub use named::{named_subgroup, NamedKind};
pub use quotient::{quotient, Quotient};
pub use series::{chief_series, chief_series_top_down, ChiefFactor, ChiefSeries};
pub use sylow::{all_hall, hall, sylow};

/// Hard ceiling on the number of subgroups, independent of the order cap.
const MAX_SUBGROUPS: usize = 250_000;

/// Every subgroup of a group, deduplicated and sorted canonically by
/// (order, element list), with conjugacy classes and the normal subgroups.
pub struct SubgroupLattice {
    group: Group,
    all: Vec<Subgroup>,
    index: HashMap<FixedBitSet, usize>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    normal: Vec<usize>,
    maximal: OnceLock<Vec<usize>>,
}

impl SubgroupLattice {
    /// Enumerates all subgroups of `group`.
    ///
    /// Starting from the cyclic subgroups of prime-power order, every known
    /// subgroup is joined with every such cyclic subgroup until nothing new
    /// appears. Every subgroup is generated by its elements of prime-power
    /// order, so the fixpoint is the whole lattice.
    pub fn new(group: &Group) -> Result<SubgroupLattice> {
        let cap = group.caps().lattice_cap;
        if group.order() > cap {
            return Err(Error::LatticeTooLarge {
                order: group.order(),
                cap,
            });
        }
        let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
        let mut all: Vec<Subgroup> = Vec::new();
        let trivial = group.trivial_subgroup();
        index.insert(trivial.members().clone(), 0);
        all.push(trivial);

        let mut cyclic: Vec<Subgroup> = Vec::new();
        for e in group.elems() {
            if arith::prime_power(group.elem_order(e)).is_none() {
                continue;
            }
            let c = group.generated_by(&[e]);
            if !index.contains_key(c.members()) {
                index.insert(c.members().clone(), all.len());
                all.push(c.clone());
                cyclic.push(c);
            }
        }

        let mut i = 1;
        while i < all.len() {
            let h = all[i].clone();
            for c in &cyclic {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let j = h.join(c);
                if !index.contains_key(j.members()) {
                    if all.len() >= MAX_SUBGROUPS {
                        return Err(Error::LatticeTooLarge {
                            order: group.order(),
                            cap,
                        });
                    }
                    index.insert(j.members().clone(), all.len());
                    all.push(j);
                }
            }
            i += 1;
        }
        Ok(SubgroupLattice::from_subgroups(group.clone(), all))
    }

    /// Sorts canonically and computes conjugacy classes.
    fn from_subgroups(group: Group, mut all: Vec<Subgroup>) -> SubgroupLattice {
        all.sort();
        let index: HashMap<FixedBitSet, usize> = all
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let mut class_of = vec![usize::MAX; all.len()];
        let mut classes = Vec::new();
        for i in 0..all.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = conjugacy_orbit(&all[i])
                .iter()
                .map(|c| index[c.members()])
                .collect();
            members.sort_unstable();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        let normal = (0..all.len())
            .filter(|&i| classes[class_of[i]].len() == 1)
            .collect();
        SubgroupLattice {
            group,
            all,
            index,
            class_of,
            classes,
            normal,
            maximal: OnceLock::new(),
        }
    }

    /// The lattice of a subgroup `h`, derived from this one without a new
    /// enumeration, together with the embedding of `h` as a standalone group.
    pub fn restrict(&self, h: &Subgroup) -> (SubgroupLattice, Embedding) {
        let emb = h.to_group();
        let subs: Vec<Subgroup> = self
            .all
            .iter()
            .filter(|s| s.is_subgroup_of(h))
            .map(|s| emb.restrict(s).expect("contained subgroup restricts"))
            .collect();
        (SubgroupLattice::from_subgroups(emb.group.clone(), subs), emb)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn all(&self) -> &[Subgroup] {
        &self.all
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.all[i]
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        if !h.parent().same_as(&self.group) {
            return None;
        }
        self.index.get(h.members()).copied()
    }

    /// Canonical position of a subgroup; panics if `h` is from another group.
    pub fn id(&self, h: &Subgroup) -> usize {
        self.index_of(h).expect("subgroup belongs to this lattice")
    }

    pub fn trivial(&self) -> &Subgroup {
        &self.all[0]
    }

    pub fn whole(&self) -> &Subgroup {
        self.all.last().expect("lattice is never empty")
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// The conjugacy class (as lattice indices) containing subgroup `i`.
    pub fn conjugates(&self, i: usize) -> &[usize] {
        &self.classes[self.class_of[i]]
    }

    /// Indices of the normal subgroups, ascending.
    pub fn normal(&self) -> &[usize] {
        &self.normal
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.classes[self.class_of[i]].len() == 1
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.normal.iter().map(move |&i| &self.all[i])
    }

    /// Indices of subgroups of the given order.
    pub fn of_order(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let start = self.all.partition_point(|s| s.order() < order);
        (start..self.all.len()).take_while(move |&i| self.all[i].order() == order)
    }

    /// Indices of subgroups contained in `h`.
    pub fn within<'a>(&'a self, h: &'a Subgroup) -> impl Iterator<Item = usize> + 'a {
        let end = self.all.partition_point(|s| s.order() <= h.order());
        (0..end).filter(move |&i| self.all[i].is_subgroup_of(h))
    }

    /// Subgroups of order `order` contained in `h`.
    pub fn within_of_order<'a>(
        &'a self,
        h: &'a Subgroup,
        order: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        self.of_order(order)
            .filter(move |&i| self.all[i].is_subgroup_of(h))
    }

    /// Maximal subgroups of the whole group.
    pub fn maximal(&self) -> &[usize] {
        self.maximal.get_or_init(|| self.maximal_in(self.whole()))
    }

    /// Maximal subgroups of `h` (proper subgroups not inside another proper one).
    pub fn maximal_in(&self, h: &Subgroup) -> Vec<usize> {
        let proper: Vec<usize> = self.within(h).filter(|&i| self.all[i].order() < h.order()).collect();
        proper
            .iter()
            .copied()
            .filter(|&i| {
                let s = &self.all[i];
                !proper.iter().any(|&j| {
                    let t = &self.all[j];
                    t.order() > s.order() && s.is_subgroup_of(t)
                })
            })
            .collect()
    }

    /// Minimal normal subgroups of the whole group.
    pub fn minimal_normal(&self) -> Vec<usize> {
        let nontrivial: Vec<usize> = self.normal.iter().copied().filter(|&i| i != 0).collect();
        nontrivial
            .iter()
            .copied()
            .filter(|&i| {
                !nontrivial.iter().any(|&j| {
                    j != i && self.all[j].order() < self.all[i].order()
                        && self.all[j].is_subgroup_of(&self.all[i])
                })
            })
            .collect()
    }

    /// Number of subgroups of each order, ascending by order.
    pub fn census(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in &self.all {
            match out.last_mut() {
                Some((o, c)) if *o == s.order() => *c += 1,
                _ => out.push((s.order(), 1)),
            }
        }
        out
    }
}

/// Enumerates all subgroups of `group`.
pub fn all_subgroups(group: &Group) -> Result<SubgroupLattice> {
    SubgroupLattice::new(group)
}
