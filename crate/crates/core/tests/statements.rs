use semiperm::corpus::{build_all, resolve, CorpusGroup};
use semiperm::harness::lemmas::{check_lemmas, LemmaId};
use semiperm::harness::{
    check_group, hunt, parse_theorems, CheckConfig, SigmaChoice, TheoremId, TheoremReport, Verdict,
};
use semiperm::{Caps, SubgroupLattice};

fn corpus(spec: &str) -> Vec<CorpusGroup> {
    let (groups, skipped) = build_all(resolve(spec).unwrap(), Caps::default());
    assert!(skipped.is_empty());
    groups
}

fn reports(spec: &str, theorems: &str, sigma: &str, p: Option<usize>) -> Vec<TheoremReport> {
    let cfg = CheckConfig {
        theorems: parse_theorems(theorems).unwrap(),
        sigma: SigmaChoice::parse(sigma).unwrap(),
        p,
    };
    let g = &corpus(spec)[0];
    let lat = SubgroupLattice::new(&g.group).unwrap();
    check_group(g.id(), &lat, &cfg).unwrap()
}

fn normal_of_order(spec: &str, order: usize) -> usize {
    let g = &corpus(spec)[0];
    let lat = SubgroupLattice::new(&g.group).unwrap();
    let found = lat.of_order(order).find(|&i| lat.is_normal(i)).unwrap();
    found
}

#[test]
fn sym4_never_satisfies_the_supersolubility_hypotheses_at_2() {
    let rs = reports("sym:4", "A", "singletons", Some(2));
    assert!(!rs.is_empty());
    assert!(rs.iter().all(|r| r.verdict == Verdict::Vacuous));
    let ks: std::collections::BTreeSet<u32> = rs.iter().filter_map(|r| r.params.k).collect();
    assert_eq!(ks, [1, 2].into());
}

#[test]
fn sym4_alternating_subgroup_fails_embedding_hypotheses() {
    let a4 = normal_of_order("sym:4", 12);
    let rs = reports("sym:4", "3.1", "singletons", Some(2));
    let mine: Vec<_> = rs.iter().filter(|r| r.params.e == Some(a4)).collect();
    assert!(mine.iter().any(|r| r.params.k == Some(1)));
    assert!(mine.iter().all(|r| r.verdict == Verdict::Vacuous));

    let rs = reports("sym:4", "B", "singletons", None);
    let mine: Vec<_> = rs
        .iter()
        .filter(|r| r.params.e == Some(a4) && r.params.x.as_deref() == Some("E"))
        .collect();
    assert!(!mine.is_empty());
    assert!(mine.iter().all(|r| r.verdict == Verdict::Vacuous));
}

#[test]
fn alt5_solubility_reports_are_all_vacuous() {
    let out = hunt(
        &corpus("alt:5"),
        &CheckConfig {
            theorems: vec![TheoremId::PSolubility],
            ..CheckConfig::default()
        },
        None,
    );
    let c = out.summary.by_theorem["3.2"];
    assert!(c.vacuous > 0);
    assert_eq!((c.confirmed, c.counterexamples), (0, 0));
}

#[test]
fn sl23_has_reports_for_both_exponents() {
    // SmallGroup(24, 3) is SL(2,3)
    let g = corpus("bundled-le-24").into_iter().find(|g| g.id() == "sg24_3").unwrap();
    let lat = SubgroupLattice::new(&g.group).unwrap();
    assert_eq!(lat.len(), 15);
    let cfg = CheckConfig {
        theorems: vec![TheoremId::PSolubility],
        sigma: SigmaChoice::Singletons,
        p: Some(2),
    };
    let rs = check_group(g.id(), &lat, &cfg).unwrap();
    let sets: std::collections::BTreeSet<_> = rs.iter().map(|r| r.params.hall_set.clone()).collect();
    for set in sets {
        let ks: Vec<u32> = rs.iter().filter(|r| r.params.hall_set == set).filter_map(|r| r.params.k).collect();
        assert_eq!(ks, vec![1, 2]);
    }
}

#[test]
fn abelian_groups_confirm() {
    for spec in ["abelian:4,2", "elab:3,2", "abelian:8,3"] {
        let rs = reports(spec, "A", "family", None);
        assert!(rs.iter().any(|r| r.verdict == Verdict::Confirmed), "{spec}");
        assert!(rs.iter().all(|r| r.verdict != Verdict::Counterexample));
    }
}

#[test]
fn trivial_normal_subgroup_confirms_embedding() {
    let rs = reports("sym:3", "B", "family", None);
    assert!(rs
        .iter()
        .filter(|r| r.params.e == Some(0))
        .all(|r| r.verdict == Verdict::Confirmed));
}

#[test]
fn empty_corpus_gives_empty_summary() {
    let out = hunt(&[], &CheckConfig::default(), None);
    assert!(out.reports.is_empty());
    assert_eq!(out.summary.groups, 0);
    assert!(out.summary.by_theorem.is_empty());
    assert!(out.jsonl().is_empty());
}

#[test]
fn applications_hold_on_small_groups() {
    let cfg = CheckConfig {
        theorems: TheoremId::applications(),
        ..CheckConfig::default()
    };
    let out = hunt(&corpus("bundled-le-48"), &cfg, None);
    assert_eq!(out.summary.counterexamples(), 0);
    assert_eq!(out.summary.inconsistent, 0);
    for n in 1..=10u8 {
        let code = TheoremId::Application(n).code();
        let c = out.summary.by_theorem.get(&code).copied().unwrap_or_default();
        assert!(c.confirmed > 0, "{code} never confirmed");
    }
}

#[test]
fn odd_order_application_confirms_on_cyclic_group() {
    let rs = reports("cyclic:15", "4.2", "family", None);
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0].verdict, Verdict::Confirmed);
}

#[test]
fn smallest_prime_application_on_two_nilpotent_group() {
    // C3 x C8 is 2-nilpotent and every 2-subgroup is normal
    let rs = reports("cyclic:3xcyclic:8", "4.7", "family", None);
    assert!(!rs.is_empty());
    assert!(rs.iter().all(|r| r.verdict == Verdict::Confirmed));
}

#[test]
fn reports_are_self_consistent_json() {
    for r in reports("dihedral:6", "all", "family", None) {
        assert!(r.is_consistent());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["group"], "dihedral:6");
        assert_eq!(v["verdict"], r.verdict.as_str());
    }
}

#[test]
fn lemma_sweeps_find_instances() {
    for spec in ["sym:4", "dihedral:6", "metacyclic:7,3,2"] {
        let g = &corpus(spec)[0];
        let lat = SubgroupLattice::new(&g.group).unwrap();
        for r in check_lemmas(g.id(), &lat, &LemmaId::ALL) {
            assert!(r.passed(), "{spec} {}: {:?}", r.lemma, r.violations);
        }
    }
    let g = &corpus("sym:4")[0];
    let lat = SubgroupLattice::new(&g.group).unwrap();
    let rs = check_lemmas(g.id(), &lat, &[LemmaId::HypercyclicCentralizer, LemmaId::HallIntersection]);
    assert!(rs.iter().all(|r| r.instances > 0));
}

#[test]
fn statement_codes_round_trip() {
    for l in LemmaId::ALL {
        assert_eq!(l.code().parse::<LemmaId>().unwrap(), l);
    }
    for t in TheoremId::MAIN.into_iter().chain(TheoremId::applications()) {
        assert_eq!(t.code().parse::<TheoremId>().unwrap(), t);
    }
    assert!("2.5".parse::<LemmaId>().is_err());
    assert!(parse_theorems("Z").is_err());
}
