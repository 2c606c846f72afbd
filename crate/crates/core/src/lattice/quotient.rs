use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{Elem, Group, Subgroup};
use crate::perm::Permutation;

/// `G/N` realized as the permutation action of `G` on the right cosets of `N`,
/// with the projection `G → G/N` tabulated on elements.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub source: Group,
    pub kernel: Subgroup,
    pub group: Group,
    projection: Vec<Elem>,
}

/// Builds `G/N` for a normal subgroup `N`.
///
/// Cosets are numbered by their smallest element index. The image of `g` is
/// the permutation `Nx ↦ Nxg`.
pub fn quotient(group: &Group, normal: &Subgroup) -> Result<Quotient> {
    if !normal.parent().same_as(group) {
        return Err(Error::ParentMismatch);
    }
    if !normal.is_normal() {
        return Err(Error::NotNormal("quotient kernel".into()));
    }
    let reps = group.right_transversal(normal);
    let mut coset_of = vec![0u32; group.order()];
    for (c, &x) in reps.iter().enumerate() {
        for a in normal.elements() {
            coset_of[group.mul(a, x) as usize] = c as u32;
        }
    }
    let induced = |g: Elem| -> Permutation {
        let images = reps
            .iter()
            .map(|&x| coset_of[group.mul(x, g) as usize])
            .collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    };
    let gens: Vec<Permutation> = group
        .generator_elems()
        .iter()
        .map(|&g| induced(g))
        .filter(|p| !p.is_identity())
        .collect();
    let qgroup = Group::closure_with(reps.len(), &gens, group.caps())?;
    debug_assert_eq!(qgroup.order(), reps.len());
    // Elements of one coset share an image, so tabulate once per coset.
    let mut per_coset = vec![0 as Elem; reps.len()];
    for (c, &x) in reps.iter().enumerate() {
        per_coset[c] = qgroup
            .index_of(&induced(x))
            .expect("induced permutation lies in the quotient");
    }
    let projection = coset_of.iter().map(|&c| per_coset[c as usize]).collect();
    Ok(Quotient {
        source: group.clone(),
        kernel: normal.clone(),
        group: qgroup,
        projection,
    })
}

impl Quotient {
    /// Image of an element of `G` in `G/N`.
    pub fn project_elem(&self, g: Elem) -> Elem {
        self.projection[g as usize]
    }

    /// `HN/N` for `H ≤ G`.
    pub fn project(&self, h: &Subgroup) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.group.order());
        for e in h.elements() {
            m.insert(self.project_elem(e) as usize);
        }
        let gens: Vec<Elem> = h.generators().iter().map(|&e| self.project_elem(e)).collect();
        let out = self.group.generated_by(&gens);
        debug_assert_eq!(out.members(), &m);
        out
    }

    /// The full preimage in `G` of a subgroup of `G/N`.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let src = &self.source;
        let mut m = FixedBitSet::with_capacity(src.order());
        for g in src.elems() {
            if h.contains(self.project_elem(g)) {
                m.insert(g as usize);
            }
        }
        src.subgroup_from_members(m)
    }
}
