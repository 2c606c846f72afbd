//! Finite permutation groups with fully materialized element sets.
//!
//! Elements of a [`Group`] are addressed by [`Elem`], their position in the
//! sorted element list. Position 0 is always the identity. Groups whose order
//! is within the lattice cap also carry a full multiplication table.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Index of an element in its group's sorted element list.
pub type Elem = u32;

/// The identity is the lexicographically smallest image table.
pub const IDENTITY: Elem = 0;

/// Size limits for closure and for everything built on the subgroup lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group a closure may produce.
    pub element_cap: usize,
    /// Largest group order for which subgroup lattices (and multiplication
    /// tables) are built.
    pub lattice_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            element_cap: 20_000,
            lattice_cap: 2_000,
        }
    }
}

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    gen_elems: Vec<Elem>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, Elem>,
    table: Option<Vec<Elem>>,
    inverses: Vec<Elem>,
    orders: Vec<u32>,
    primes: Vec<usize>,
    caps: Caps,
}

/// A finite permutation group. Cloning is cheap; clones share storage and
/// compare as the same parent.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl Group {
    /// The group generated by `generators` acting on `degree` points, with
    /// default caps.
    pub fn closure(degree: usize, generators: &[Permutation]) -> Result<Group> {
        Group::closure_with(degree, generators, Caps::default())
    }

    pub fn closure_with(degree: usize, generators: &[Permutation], caps: Caps) -> Result<Group> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let prod = e.then(g);
                if !seen.contains(&prod) {
                    if seen.len() >= caps.element_cap {
                        return Err(Error::GroupTooLarge {
                            cap: caps.element_cap,
                        });
                    }
                    seen.insert(prod.clone());
                    queue.push_back(prod);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Group::from_sorted(degree, generators.to_vec(), elements, caps))
    }

    /// Builds the group data from an already closed, sorted element list.
    fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
        caps: Caps,
    ) -> Group {
        let n = elements.len();
        let lookup: HashMap<Permutation, Elem> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as Elem))
            .collect();
        let gen_elems: Vec<Elem> = generators.iter().map(|g| lookup[g]).collect();
        let inverses: Vec<Elem> = elements.iter().map(|p| lookup[&p.inverse()]).collect();
        let orders: Vec<u32> = elements.iter().map(|p| p.order() as u32).collect();
        let primes = arith::primes_of(n);
        let table = (n <= caps.lattice_cap).then(|| build_table(&elements, &lookup, &gen_elems));
        Group(Arc::new(GroupData {
            degree,
            generators,
            gen_elems,
            elements,
            lookup,
            table,
            inverses,
            orders,
            primes,
            caps,
        }))
    }

    pub fn trivial(degree: usize) -> Group {
        Group::closure(degree, &[]).expect("trivial group always fits")
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    /// The generators as element indices.
    pub fn generator_elems(&self) -> &[Elem] {
        &self.0.gen_elems
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.0.elements
    }

    /// π(G), ascending.
    pub fn primes(&self) -> &[usize] {
        &self.0.primes
    }

    pub fn caps(&self) -> Caps {
        self.0.caps
    }

    pub fn has_table(&self) -> bool {
        self.0.table.is_some()
    }

    #[inline]
    pub fn element(&self, e: Elem) -> &Permutation {
        &self.0.elements[e as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Elem> {
        self.0.lookup.get(p).copied()
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        0..self.order() as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.table {
            Some(t) => t[a as usize * self.order() + b as usize],
            None => self.0.lookup[&self.element(a).then(self.element(b))],
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.0.inverses[a as usize]
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn comm(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut acc = IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    #[inline]
    pub fn elem_order(&self, a: Elem) -> usize {
        self.0.orders[a as usize] as usize
    }

    pub fn same_as(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_elems();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        Subgroup {
            group: self.clone(),
            members,
            order: self.order(),
            gens: self.generator_elems().iter().copied().filter(|&g| g != IDENTITY).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(IDENTITY as usize);
        Subgroup {
            group: self.clone(),
            members,
            order: 1,
            gens: Vec::new(),
        }
    }

    /// The smallest subgroup containing the given elements.
    pub fn generated_by(&self, seed: &[Elem]) -> Subgroup {
        self.trivial_subgroup().extended(seed)
    }

    /// The smallest subgroup containing the given permutations.
    pub fn generated(&self, seed: &[Permutation]) -> Result<Subgroup> {
        let elems = seed
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::NotInGroup(p.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.generated_by(&elems))
    }

    /// Builds a subgroup from an element set already known to be closed.
    pub fn subgroup_from_members(&self, members: FixedBitSet) -> Subgroup {
        let order = members.count_ones(..);
        let mut gens = Vec::new();
        let mut span = self.trivial_subgroup();
        for e in members.ones() {
            if !span.contains(e as Elem) {
                gens.push(e as Elem);
                span = span.extended(&[e as Elem]);
                if span.order == order {
                    break;
                }
            }
        }
        debug_assert_eq!(span.members, members, "member set is not closed");
        span
    }

    /// The subgroup whose elements satisfy `pred`; the caller guarantees the
    /// resulting set is a subgroup.
    pub fn subgroup_where(&self, pred: impl Fn(Elem) -> bool) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for e in self.elems() {
            if pred(e) {
                members.insert(e as usize);
            }
        }
        self.subgroup_from_members(members)
    }

    /// Representatives of the right cosets `H x`, one per coset, each the
    /// smallest element of its coset.
    pub fn right_transversal(&self, h: &Subgroup) -> Vec<Elem> {
        let mut covered = FixedBitSet::with_capacity(self.order());
        let mut reps = Vec::with_capacity(self.order() / h.order());
        for x in self.elems() {
            if covered.contains(x as usize) {
                continue;
            }
            reps.push(x);
            for a in h.elements() {
                covered.insert(self.mul(a, x) as usize);
            }
        }
        reps
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, degree {}, gens [", self.order(), self.degree())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

/// Row `i` of the table is `e_i * e_j` for all `j`. Each row is derived from a
/// breadth-first spanning tree over the generators, so only `n * gens`
/// permutation products need hashing.
fn build_table(
    elements: &[Permutation],
    lookup: &HashMap<Permutation, Elem>,
    gens: &[Elem],
) -> Vec<Elem> {
    let n = elements.len();
    let rgen: Vec<Vec<Elem>> = elements
        .iter()
        .map(|e| {
            gens.iter()
                .map(|&g| lookup[&e.then(&elements[g as usize])])
                .collect()
        })
        .collect();
    // tree[j] = (k, s) with e_j = e_k * g_s, listed in BFS order.
    let mut tree: Vec<(Elem, Elem, usize)> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0 as Elem]);
    while let Some(k) = queue.pop_front() {
        for (s, &next) in rgen[k as usize].iter().enumerate() {
            if !seen[next as usize] {
                seen[next as usize] = true;
                tree.push((next, k, s));
                queue.push_back(next);
            }
        }
    }
    let mut table = vec![0 as Elem; n * n];
    for i in 0..n {
        let row = &mut table[i * n..(i + 1) * n];
        row[0] = i as Elem;
        for &(j, k, s) in &tree {
            row[j as usize] = rgen[row[k as usize] as usize][s];
        }
    }
    table
}

/// A subgroup of a [`Group`], stored as a membership bitset over the parent's
/// element indices together with a small generating set.
#[derive(Clone)]
pub struct Subgroup {
    group: Group,
    members: FixedBitSet,
    order: usize,
    gens: Vec<Elem>,
}

impl Subgroup {
    pub fn parent(&self) -> &Group {
        &self.group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e as usize)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    /// Elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|e| e as Elem)
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order <= other.order && self.members.is_subset(&other.members)
    }

    fn check_parent(&self, other: &Subgroup) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Normal in the parent group.
    pub fn is_normal(&self) -> bool {
        let g = &self.group;
        g.generator_elems()
            .iter()
            .all(|&x| self.gens.iter().all(|&h| self.contains(g.conj(h, x))))
    }

    /// True when every element of `by` normalizes `self`.
    pub fn is_normalized_by(&self, by: &Subgroup) -> bool {
        let g = &self.group;
        by.gens
            .iter()
            .all(|&x| self.gens.iter().all(|&h| self.contains(g.conj(h, x))))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.group;
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Adds elements and closes under multiplication.
    pub fn extended(&self, extra: &[Elem]) -> Subgroup {
        let g = &self.group;
        let mut out = self.clone();
        for &s in extra {
            if out.contains(s) {
                continue;
            }
            out.gens.push(s);
            let mut queue: Vec<Elem> = out.elements().collect();
            while let Some(e) = queue.pop() {
                for &t in &out.gens {
                    let prod = g.mul(e, t);
                    if !out.members.contains(prod as usize) {
                        out.members.insert(prod as usize);
                        queue.push(prod);
                    }
                }
            }
            out.order = out.members.count_ones(..);
        }
        out
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        self.extended(&other.gens)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        self.group.subgroup_from_members(m)
    }

    /// `x⁻¹ H x` for an element index `x`.
    pub fn conjugate_by(&self, x: Elem) -> Subgroup {
        let g = &self.group;
        let mut members = FixedBitSet::with_capacity(g.order());
        for h in self.elements() {
            members.insert(g.conj(h, x) as usize);
        }
        Subgroup {
            group: g.clone(),
            members,
            order: self.order,
            gens: self.gens.iter().map(|&h| g.conj(h, x)).collect(),
        }
    }

    /// `x⁻¹ H x` for a permutation `x` of the parent group.
    pub fn conjugate(&self, x: &Permutation) -> Result<Subgroup> {
        let xi = self
            .group
            .index_of(x)
            .ok_or_else(|| Error::NotInGroup(x.to_string()))?;
        Ok(self.conjugate_by(xi))
    }

    /// The set product `AB` as a membership bitset.
    pub fn product_set(&self, other: &Subgroup) -> FixedBitSet {
        let g = &self.group;
        let mut out = FixedBitSet::with_capacity(g.order());
        for a in self.elements() {
            for b in other.elements() {
                out.insert(g.mul(a, b) as usize);
            }
        }
        out
    }

    /// Size of `AB`, via `|A||B|/|A∩B|`.
    pub fn product_size(&self, other: &Subgroup) -> usize {
        let common = self.members.intersection(&other.members).count();
        self.order * other.order / common
    }

    /// `AB = BA` as element sets.
    pub fn permutes_with(&self, other: &Subgroup) -> Result<bool> {
        self.check_parent(other)?;
        Ok(self.permutes_unchecked(other))
    }

    pub(crate) fn permutes_unchecked(&self, other: &Subgroup) -> bool {
        if self.is_subgroup_of(other) || other.is_subgroup_of(self) {
            return true;
        }
        self.product_set(other) == other.product_set(self)
    }

    /// π(H).
    pub fn primes(&self) -> Vec<usize> {
        arith::primes_of(self.order)
    }

    /// The subgroup as a standalone group, with index maps to and from the parent.
    pub fn to_group(&self) -> Embedding {
        let parent = &self.group;
        let to_parent: Vec<Elem> = self.elements().collect();
        let elements: Vec<Permutation> = to_parent
            .iter()
            .map(|&e| parent.element(e).clone())
            .collect();
        let generators: Vec<Permutation> =
            self.gens.iter().map(|&e| parent.element(e).clone()).collect();
        let group = Group::from_sorted(parent.degree(), generators, elements, parent.caps());
        Embedding {
            parent: parent.clone(),
            group,
            to_parent,
        }
    }

    /// Element indices in ascending order, for canonical comparisons.
    pub fn element_list(&self) -> Vec<Elem> {
        self.elements().collect()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by order, then by ascending element list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens [", self.order)?;
        for (i, &g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.group.element(g))?;
        }
        f.write_str("])")
    }
}

/// A subgroup `L ≤ G` viewed as a group in its own right.
///
/// Element `i` of the embedded group is element `to_parent[i]` of the parent;
/// both lists are sorted, so the map is monotone.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub parent: Group,
    pub group: Group,
    to_parent: Vec<Elem>,
}

impl Embedding {
    pub fn to_parent(&self, e: Elem) -> Elem {
        self.to_parent[e as usize]
    }

    pub fn from_parent(&self, e: Elem) -> Option<Elem> {
        self.to_parent.binary_search(&e).ok().map(|i| i as Elem)
    }

    /// Maps a subgroup of the embedded group into the parent.
    pub fn lift(&self, h: &Subgroup) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.parent.order());
        for e in h.elements() {
            m.insert(self.to_parent(e) as usize);
        }
        Subgroup {
            group: self.parent.clone(),
            members: m,
            order: h.order,
            gens: h.gens.iter().map(|&e| self.to_parent(e)).collect(),
        }
    }

    /// Maps a subgroup of the parent that lies inside the embedded subgroup.
    pub fn restrict(&self, h: &Subgroup) -> Option<Subgroup> {
        let mut m = FixedBitSet::with_capacity(self.group.order());
        for e in h.elements() {
            m.insert(self.from_parent(e)? as usize);
        }
        let gens = h
            .gens
            .iter()
            .map(|&e| self.from_parent(e))
            .collect::<Option<Vec<_>>>()?;
        Some(Subgroup {
            group: self.group.clone(),
            members: m,
            order: h.order,
            gens,
        })
    }
}

/// Applies `gens`-conjugation closure to find the orbit of `h` under
/// conjugation by `G`. Returns the distinct conjugates in discovery order.
pub fn conjugacy_orbit(h: &Subgroup) -> Vec<Subgroup> {
    let g = h.parent();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(h.members.clone());
    let mut orbit = vec![h.clone()];
    let mut i = 0;
    while i < orbit.len() {
        for &x in g.generator_elems() {
            let c = orbit[i].conjugate_by(x);
            if seen.insert(c.members.clone()) {
                orbit.push(c);
            }
        }
        i += 1;
    }
    orbit
}
