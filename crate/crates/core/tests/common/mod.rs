//! Naive reference computations on bare image vectors. Shares no code with
//! the library beyond reading its generators.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use semiperm::Group;

pub type P = Vec<usize>;

/// `a` then `b`.
pub fn compose(a: &P, b: &P) -> P {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inverse(a: &P) -> P {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn closure(degree: usize, gens: &[P]) -> BTreeSet<P> {
    let id: P = (0..degree).collect();
    let mut seen: BTreeSet<P> = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Elements of a library group as bare image vectors.
pub fn elements(g: &Group) -> Vec<P> {
    g.elements()
        .iter()
        .map(|p| p.images().iter().map(|&x| x as usize).collect())
        .collect()
}

/// Every subset containing the identity and closed under products. Only for
/// tiny groups.
pub fn subgroups_by_subsets(elems: &[P]) -> Vec<BTreeSet<P>> {
    let n = elems.len();
    assert!(n <= 12, "subset search is exponential");
    let id: P = (0..elems[0].len()).collect();
    let id_pos = elems.iter().position(|e| *e == id).unwrap();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask >> id_pos & 1 == 0 {
            continue;
        }
        let set: BTreeSet<P> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| elems[i].clone()).collect();
        if set.iter().all(|a| set.iter().all(|b| set.contains(&compose(a, b)))) {
            out.push(set);
        }
    }
    out
}

/// Breadth-first search over `⟨H, g⟩` starting from the trivial subgroup.
pub fn subgroups_by_extension(elems: &[P]) -> Vec<BTreeSet<P>> {
    let degree = elems[0].len();
    let trivial: BTreeSet<P> = BTreeSet::from([(0..degree).collect()]);
    let mut seen: HashSet<BTreeSet<P>> = HashSet::from([trivial.clone()]);
    let mut queue = VecDeque::from([trivial]);
    while let Some(h) = queue.pop_front() {
        for g in elems {
            if h.contains(g) {
                continue;
            }
            let mut gens: Vec<P> = h.iter().cloned().collect();
            gens.push(g.clone());
            let k = closure(degree, &gens);
            if seen.insert(k.clone()) {
                queue.push_back(k);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn is_normal(h: &BTreeSet<P>, elems: &[P]) -> bool {
    elems
        .iter()
        .all(|x| h.iter().all(|a| h.contains(&compose(&compose(&inverse(x), a), x))))
}

/// Chief factor orders from a maximal chain of normal subgroups, built by
/// repeatedly stepping to a smallest normal subgroup strictly above.
pub fn chief_factor_orders(elems: &[P]) -> Vec<usize> {
    let mut normals: Vec<BTreeSet<P>> = subgroups_by_extension(elems)
        .into_iter()
        .filter(|h| is_normal(h, elems))
        .collect();
    normals.sort_by_key(|h| h.len());
    let mut current = normals[0].clone();
    let mut out = Vec::new();
    while current.len() < elems.len() {
        let next = normals
            .iter()
            .find(|n| n.len() > current.len() && current.is_subset(n))
            .unwrap()
            .clone();
        out.push(next.len() / current.len());
        current = next;
    }
    out
}
