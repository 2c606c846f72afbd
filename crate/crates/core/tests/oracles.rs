mod common;

use std::collections::BTreeSet;

use semiperm::classes::{
    group_class, is_hypercyclically_embedded, lemma_check, omega_of, ClassKind, LemmaCheck, Witness,
};
use semiperm::corpus::{builtin, bundled, parse_corpus};
use semiperm::lattice::{chief_series, chief_series_top_down, hall, named, quotient, sylow};
use semiperm::sigma::{complete_hall_sets, is_sigma_semipermutable, permutes, SigmaPartition};
use semiperm::{Caps, Group, Permutation, SubgroupLattice};

fn build(spec: &str) -> Group {
    builtin(spec).unwrap().build(Caps::default()).unwrap()
}

fn lat(spec: &str) -> SubgroupLattice {
    SubgroupLattice::new(&build(spec)).unwrap()
}

fn perm(deg: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(deg, s).unwrap()
}

fn as_set(h: &semiperm::Subgroup) -> BTreeSet<common::P> {
    let all = common::elements(h.parent());
    h.elements().map(|e| all[e as usize].clone()).collect()
}

#[test]
fn closure_orders_match_breadth_first_search() {
    for (deg, gens) in [
        (3, vec!["(0 1 2)"]),
        (1, vec![]),
        (4, vec!["(0 1)", "(0 1 2 3)"]),
        (5, vec!["(0 1 2)", "(2 3 4)"]),
        (6, vec!["(0 1 2 3 4 5)", "(1 5)(2 4)"]),
    ] {
        let ps: Vec<Permutation> = gens.iter().map(|s| perm(deg, s)).collect();
        let g = Group::closure(deg, &ps).unwrap();
        let raw: Vec<common::P> = ps.iter().map(|p| p.images().iter().map(|&x| x as usize).collect()).collect();
        let expected = common::closure(deg, &raw);
        assert_eq!(g.order(), expected.len());
        assert_eq!(common::elements(&g).into_iter().collect::<BTreeSet<_>>(), expected);
    }
}

#[test]
fn subgroup_counts_match_subset_search() {
    for (spec, expected) in [("sym:3", 6), ("quaternion:8", 6), ("dihedral:4", 10)] {
        let g = build(spec);
        let brute = common::subgroups_by_subsets(&common::elements(&g));
        assert_eq!(brute.len(), expected, "{spec} subset search");
        let l = SubgroupLattice::new(&g).unwrap();
        assert_eq!(l.len(), expected, "{spec}");
        let mine: BTreeSet<_> = l.all().iter().map(as_set).collect();
        assert_eq!(mine, brute.into_iter().collect());
    }
}

#[test]
fn subgroup_counts_match_extension_search() {
    for (spec, expected) in [("sym:4", 30), ("alt:4", 10), ("alt:5", 59), ("dihedral:6", 16)] {
        let g = build(spec);
        let brute = common::subgroups_by_extension(&common::elements(&g));
        assert_eq!(brute.len(), expected, "{spec}");
        let l = SubgroupLattice::new(&g).unwrap();
        let mine: BTreeSet<_> = l.all().iter().map(as_set).collect();
        assert_eq!(mine, brute.into_iter().collect(), "{spec}");
    }
}

#[test]
fn chief_factor_orders_match_normal_chain() {
    for spec in ["sym:4", "alt:5", "cyclic:12", "sym:3", "dihedral:6", "cyclic:1"] {
        let l = lat(spec);
        let mut mine: Vec<usize> = chief_series(&l, &[]).unwrap().factors.iter().map(|f| f.order).collect();
        let mut naive = common::chief_factor_orders(&common::elements(l.group()));
        mine.sort_unstable();
        naive.sort_unstable();
        assert_eq!(mine, naive, "{spec}");
    }
    let s4 = lat("sym:4");
    let orders: Vec<usize> = chief_series(&s4, &[]).unwrap().factors.iter().map(|f| f.order).collect();
    assert_eq!(orders, vec![4, 3, 2]);
    let a5 = lat("alt:5");
    assert_eq!(chief_series(&a5, &[]).unwrap().factors.len(), 1);
    assert!(chief_series(&lat("cyclic:1"), &[]).unwrap().factors.is_empty());
    let c12 = chief_series(&lat("cyclic:12"), &[]).unwrap();
    assert!(c12.factors.iter().all(|f| f.is_cyclic && semiperm::arith::is_prime(f.order)));
}

#[test]
fn both_chief_series_constructions_agree() {
    for d in bundled().into_iter().filter(|d| d.id.starts_with("sg24_") || d.id.starts_with("sg48_")) {
        let l = SubgroupLattice::new(&d.build(Caps::default()).unwrap()).unwrap();
        let mut a = chief_series(&l, &[]).unwrap().signature();
        let mut b = chief_series_top_down(&l, &[]).unwrap().signature();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "{}", d.id);
    }
}

#[test]
fn conjugation_and_generation() {
    let s3 = build("sym:3");
    let h = s3.generated(&[perm(3, "(0 1)")]).unwrap();
    let c = h.conjugate(&perm(3, "(0 1 2)")).unwrap();
    assert_eq!(c, s3.generated(&[perm(3, "(1 2)")]).unwrap());
    assert_eq!(s3.whole().conjugate(&perm(3, "(0 1)")).unwrap(), s3.whole());
    assert!(s3.generated(&[]).unwrap().is_trivial());
    let s4 = build("sym:4");
    let klein = s4.generated(&[perm(4, "(0 1)(2 3)"), perm(4, "(0 2)(1 3)")]).unwrap();
    assert_eq!(klein.order(), 4);
    assert!(klein.is_normal());
}

#[test]
fn named_subgroups() {
    let s4 = lat("sym:4");
    let f = named::fitting(&s4, s4.whole());
    assert_eq!(f.order(), 4);
    assert!(f.is_normal());
    let q8 = lat("quaternion:8");
    let phi = named::frattini(&q8, q8.whole());
    assert_eq!(phi.order(), 2);
    assert_eq!(phi, named::center(q8.whole()));
    assert_eq!(sylow(s4.group(), 3).order(), 3);
    assert_eq!(sylow(s4.group(), 2).order(), 8);
    assert!(sylow(s4.group(), 5).is_trivial());
    let a5 = lat("alt:5");
    assert!(hall(&a5, &[3, 5]).is_none());
    assert_eq!(hall(&a5, &[2, 3, 5]).unwrap().order(), 60);
    let s3 = lat("sym:3");
    let h3 = hall(&s3, &[3]).unwrap();
    assert_eq!(h3.order(), 3);
    assert!(h3.is_normal());
}

#[test]
fn quotients() {
    let s4 = lat("sym:4");
    let q = quotient(s4.group(), s4.whole()).unwrap();
    assert_eq!(q.group.order(), 1);
    let klein = s4.of_order(4).map(|i| s4.get(i)).find(|h| h.is_normal()).unwrap();
    let q = quotient(s4.group(), klein).unwrap();
    assert_eq!(q.group.order(), 6);
    assert!(!q.group.is_abelian());
}

#[test]
fn class_predicates() {
    let t = lat("cyclic:1");
    for kind in [ClassKind::Soluble, ClassKind::Supersoluble, ClassKind::Nilpotent, ClassKind::Cyclic] {
        assert!(group_class(&t, kind).holds);
    }
    let s4 = lat("sym:4");
    let v = group_class(&s4, ClassKind::PSupersoluble(2));
    assert!(!v.holds);
    match v.witness {
        Some(Witness::ChiefFactor(f)) => assert_eq!(f.order, 4),
        w => panic!("unexpected witness {w:?}"),
    }
    let a5 = lat("alt:5");
    for p in [2, 3, 5] {
        assert!(!group_class(&a5, ClassKind::PSoluble(p)).holds);
    }
    assert!(group_class(&a5, ClassKind::Quasinilpotent).holds);
}

#[test]
fn hypercyclic_embedding_examples() {
    let s3 = lat("sym:3");
    assert!(is_hypercyclically_embedded(&s3, s3.trivial()).unwrap().holds);
    let c3 = s3.of_order(3).next().unwrap();
    assert!(is_hypercyclically_embedded(&s3, s3.get(c3)).unwrap().holds);
    let s4 = lat("sym:4");
    let klein = s4.of_order(4).find(|&i| s4.is_normal(i)).unwrap();
    assert!(!is_hypercyclically_embedded(&s4, s4.get(klein)).unwrap().holds);
}

#[test]
fn omega_examples() {
    let c9 = lat("cyclic:9");
    assert_eq!(omega_of(c9.whole()).unwrap().order(), 3);
    let q8 = lat("quaternion:8");
    assert_eq!(omega_of(q8.whole()).unwrap().order(), 8);
    let e = lat("elab:2,3");
    assert_eq!(omega_of(e.whole()).unwrap().order(), 8);
}

#[test]
fn statement_check_examples() {
    let s4 = lat("sym:4");
    let klein = s4.get(s4.of_order(4).find(|&i| s4.is_normal(i)).unwrap());
    assert!(!is_hypercyclically_embedded(&s4, klein).unwrap().holds);
    let v = lemma_check(&s4, LemmaCheck::HypercyclicCentralizer { p: 2, subgroup: klein }).unwrap();
    assert!(v.holds);
    let c15 = lat("cyclic:15");
    let v = lemma_check(&c15, LemmaCheck::PNilpotentHypercentral { p: 3, normal: c15.whole() }).unwrap();
    assert!(v.holds);
    let p = lat("dihedral:4");
    assert!(lemma_check(&p, LemmaCheck::PSupersolubleStructure { p: 2 }).unwrap().holds);
}

#[test]
fn hall_set_examples() {
    let s3 = lat("sym:3");
    assert_eq!(complete_hall_sets(&s3, &SigmaPartition::singletons(&[2, 3])).unwrap().len(), 3);
    let a5 = lat("alt:5");
    let s: SigmaPartition = "3,5|*".parse().unwrap();
    assert!(complete_hall_sets(&a5, &s).unwrap().is_empty());
    let ab = lat("abelian:4,6");
    for s in semiperm::sigma::sweep_family(ab.group().primes()) {
        assert_eq!(complete_hall_sets(&ab, &s).unwrap().len(), 1);
    }
}

#[test]
fn permutability_matches_set_products() {
    let s4 = lat("sym:4");
    let g = s4.group();
    let a = g.generated(&[perm(4, "(0 1)")]).unwrap();
    let b = g.generated(&[perm(4, "(0 2 3)")]).unwrap();
    let naive = |x: &semiperm::Subgroup, y: &semiperm::Subgroup| {
        let (xs, ys) = (as_set(x), as_set(y));
        let xy: BTreeSet<common::P> = xs.iter().flat_map(|u| ys.iter().map(move |v| common::compose(u, v))).collect();
        let yx: BTreeSet<common::P> = ys.iter().flat_map(|u| xs.iter().map(move |v| common::compose(u, v))).collect();
        xy == yx
    };
    assert_eq!(permutes(&a, &b).unwrap(), naive(&a, &b));
    // <(0 1)> against every Sylow 3-subgroup, by explicit products
    let sylow3: Vec<_> = s4.of_order(3).map(|i| s4.get(i).clone()).collect();
    assert_eq!(sylow3.len(), 4);
    let expected = sylow3.iter().all(|p| naive(&a, p));
    for set in complete_hall_sets(&s4, &SigmaPartition::singletons(&[2, 3])).unwrap() {
        assert_eq!(is_sigma_semipermutable(&a, &set).unwrap().holds(), expected);
    }
}

#[test]
fn corpus_file_example() {
    let d = parse_corpus("d8 4 [(0 1 2 3), (0 2)]\n").unwrap();
    assert_eq!(d[0].build(Caps::default()).unwrap().order(), 8);
    assert_eq!(build("sym:4").order(), 24);
    assert_eq!(build("cyclic:1").order(), 1);
}

/// Number of groups of each order 1..=100, up to isomorphism.
const GROUP_COUNTS: [usize; 100] = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1, 51, 1, 2, 1, 14,
    1, 2, 2, 14, 1, 6, 1, 4, 2, 2, 1, 52, 2, 5, 1, 5, 1, 15, 2, 13, 2, 2, 1, 13, 1, 2, 4, 267, 1, 4, 1, 5, 1, 4, 1,
    50, 1, 2, 3, 4, 1, 6, 1, 52, 15, 2, 1, 15, 1, 2, 1, 12, 1, 10, 1, 4, 2, 2, 1, 231, 1, 5, 2, 16,
];

#[test]
fn bundled_corpus_covers_every_small_order() {
    let descs = bundled();
    assert_eq!(GROUP_COUNTS.iter().sum::<usize>(), 1048);
    assert_eq!(descs.len(), 1048);
    let mut per_order = [0usize; 100];
    for d in &descs {
        let n: usize = d.id[2..].split('_').next().unwrap().parse().unwrap();
        let g = d.build(Caps::default()).unwrap();
        assert_eq!(g.order(), n, "{}", d.id);
        per_order[n - 1] += 1;
    }
    assert_eq!(per_order, GROUP_COUNTS);
}
