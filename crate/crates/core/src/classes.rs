//! Membership of groups in the classes the checked statements quantify over, hypercyclic
//! embedding, `Ω(P)`, and executable statement checks built on them.

use std::fmt;

use num_integer::gcd;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elem, Group, Subgroup};
use crate::lattice::{
    chief_series, named, quotient, sylow, ChiefFactor, SubgroupLattice,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Soluble,
    Nilpotent,
    Supersoluble,
    PSoluble(usize),
    PSupersoluble(usize),
    PNilpotent(usize),
    Quasinilpotent,
    StrictlyPClosed(usize),
    Cyclic,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::Soluble => write!(f, "soluble"),
            ClassKind::Nilpotent => write!(f, "nilpotent"),
            ClassKind::Supersoluble => write!(f, "supersoluble"),
            ClassKind::PSoluble(p) => write!(f, "p_soluble({p})"),
            ClassKind::PSupersoluble(p) => write!(f, "p_supersoluble({p})"),
            ClassKind::PNilpotent(p) => write!(f, "p_nilpotent({p})"),
            ClassKind::Quasinilpotent => write!(f, "quasinilpotent"),
            ClassKind::StrictlyPClosed(p) => write!(f, "strictly_p_closed({p})"),
            ClassKind::Cyclic => write!(f, "cyclic"),
        }
    }
}

/// Why a class predicate failed. Each variant carries enough data to re-check.
#[derive(Clone, Debug)]
pub enum Witness {
    /// A chief factor violating the class condition.
    ChiefFactor(ChiefFactor),
    /// A chief factor `H/K` and an element acting on it unlike any element of `H`.
    OuterAction { factor: ChiefFactor, element: Elem },
    /// The derived series stops at this nontrivial perfect subgroup.
    PerfectTerm(Subgroup),
    /// The upper central series stops at this proper subgroup.
    Hypercenter(Subgroup),
    /// `⟨p′-elements⟩` has this order instead of the `p′`-part.
    NoNormalComplement { generated_order: usize, expected: usize },
    SylowNotNormal(Subgroup),
    /// Two elements whose commutator escapes the Sylow subgroup.
    QuotientNotAbelian { a: Elem, b: Elem },
    QuotientExponent { exponent: usize },
    LargestElementOrder(usize),
    Statement(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ChiefFactor(cf) => write!(
                f,
                "chief factor of order {} between subgroups of order {} and {} (cyclic: {})",
                cf.order,
                cf.lower.order(),
                cf.upper.order(),
                cf.is_cyclic
            ),
            Witness::OuterAction { factor, element } => write!(
                f,
                "element #{element} induces a non-inner action on the chief factor of order {} above order {}",
                factor.order,
                factor.lower.order()
            ),
            Witness::PerfectTerm(s) => write!(f, "derived series stops at order {}", s.order()),
            Witness::Hypercenter(s) => write!(f, "hypercenter has order {}", s.order()),
            Witness::NoNormalComplement { generated_order, expected } => write!(
                f,
                "p'-elements generate order {generated_order}, p'-part is {expected}"
            ),
            Witness::SylowNotNormal(s) => write!(f, "Sylow subgroup of order {} is not normal", s.order()),
            Witness::QuotientNotAbelian { a, b } => {
                write!(f, "commutator of #{a} and #{b} escapes the Sylow subgroup")
            }
            Witness::QuotientExponent { exponent } => write!(f, "quotient has exponent {exponent}"),
            Witness::LargestElementOrder(o) => write!(f, "largest element order is {o}"),
            Witness::Statement(s) => f.write_str(s),
        }
    }
}

/// Outcome of a class predicate. When `holds` is false a witness is present.
#[derive(Clone, Debug)]
pub struct ClassVerdict {
    pub kind: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ClassVerdict {
    fn yes(kind: impl ToString) -> Self {
        ClassVerdict {
            kind: kind.to_string(),
            holds: true,
            witness: None,
        }
    }

    fn no(kind: impl ToString, witness: Witness) -> Self {
        ClassVerdict {
            kind: kind.to_string(),
            holds: false,
            witness: Some(witness),
        }
    }

    fn from_check(kind: impl ToString, failure: Option<Witness>) -> Self {
        match failure {
            None => ClassVerdict::yes(kind),
            Some(w) => ClassVerdict::no(kind, w),
        }
    }
}

/// Serializable summary used in reports.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerdictSummary {
    pub kind: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<&ClassVerdict> for VerdictSummary {
    fn from(v: &ClassVerdict) -> Self {
        VerdictSummary {
            kind: v.kind.clone(),
            holds: v.holds,
            witness: v.witness.as_ref().map(|w| w.to_string()),
        }
    }
}

/// Decides whether the lattice's group lies in the class `kind`.
pub fn group_class(lat: &SubgroupLattice, kind: ClassKind) -> ClassVerdict {
    let g = lat.group();
    let whole = lat.whole();
    let factor_test = |ok: &dyn Fn(&ChiefFactor) -> bool| -> Option<Witness> {
        let cs = chief_series(lat, &[]).expect("no terms to validate");
        cs.factors
            .into_iter()
            .find(|f| !ok(f))
            .map(Witness::ChiefFactor)
    };
    let failure = match kind {
        ClassKind::Soluble => {
            let last = named::derived_series(whole).pop().unwrap();
            (!last.is_trivial()).then_some(Witness::PerfectTerm(last))
        }
        ClassKind::Nilpotent => {
            let z = named::hypercenter(whole);
            (!z.is_whole()).then_some(Witness::Hypercenter(z))
        }
        ClassKind::Supersoluble => factor_test(&|f| arith::is_prime(f.order)),
        ClassKind::PSoluble(p) => factor_test(&|f| f.is_p_or_p_prime(p)),
        ClassKind::PSupersoluble(p) => factor_test(&|f| f.order % p != 0 || f.order == p),
        ClassKind::PNilpotent(p) => p_nilpotent_failure(whole, p),
        ClassKind::Quasinilpotent => quasinilpotent_failure(lat),
        ClassKind::StrictlyPClosed(p) => strictly_p_closed_failure(g, p),
        ClassKind::Cyclic => {
            let m = g.elems().map(|e| g.elem_order(e)).max().unwrap_or(1);
            (m != g.order()).then_some(Witness::LargestElementOrder(m))
        }
    };
    ClassVerdict::from_check(kind, failure)
}

/// Builds the lattice and decides the class.
pub fn group_class_of(group: &Group, kind: ClassKind) -> Result<ClassVerdict> {
    Ok(group_class(&SubgroupLattice::new(group)?, kind))
}

/// Class membership of a subgroup regarded as a group in its own right.
pub fn subgroup_class(lat: &SubgroupLattice, h: &Subgroup, kind: ClassKind) -> ClassVerdict {
    if h.is_whole() {
        return group_class(lat, kind);
    }
    match kind {
        ClassKind::Soluble | ClassKind::Nilpotent | ClassKind::PNilpotent(_) | ClassKind::Cyclic => {
            // these do not need a lattice
            let failure = match kind {
                ClassKind::Soluble => {
                    let last = named::derived_series(h).pop().unwrap();
                    (!last.is_trivial()).then_some(Witness::PerfectTerm(last))
                }
                ClassKind::Nilpotent => {
                    let z = named::hypercenter(h);
                    (z.order() != h.order()).then_some(Witness::Hypercenter(z))
                }
                ClassKind::PNilpotent(p) => p_nilpotent_failure(h, p),
                _ => {
                    let g = h.parent();
                    let m = h.elements().map(|e| g.elem_order(e)).max().unwrap_or(1);
                    (m != h.order()).then_some(Witness::LargestElementOrder(m))
                }
            };
            ClassVerdict::from_check(kind, failure)
        }
        _ => {
            let (sub, _) = lat.restrict(h);
            group_class(&sub, kind)
        }
    }
}

pub fn subgroup_is_nilpotent(h: &Subgroup) -> bool {
    named::hypercenter(h).order() == h.order()
}

pub fn subgroup_is_soluble(h: &Subgroup) -> bool {
    named::derived_series(h).pop().unwrap().is_trivial()
}

pub fn subgroup_is_quasinilpotent(lat: &SubgroupLattice, h: &Subgroup) -> bool {
    subgroup_class(lat, h, ClassKind::Quasinilpotent).holds
}

/// A normal Hall `p′`-subgroup exists iff the `p′`-elements generate a
/// subgroup of order `|H|_{p′}`: such a complement contains every
/// `p′`-element, and conversely the generated subgroup is normal.
fn p_nilpotent_failure(h: &Subgroup, p: usize) -> Option<Witness> {
    let g = h.parent();
    let expected = arith::pi_part(h.order(), |q| q != p);
    let pprime: Vec<Elem> = h.elements().filter(|&e| !g.elem_order(e).is_multiple_of(p)).collect();
    let k = g.generated_by(&pprime);
    (k.order() != expected).then_some(Witness::NoNormalComplement {
        generated_order: k.order(),
        expected,
    })
}

/// For every chief factor `H/K`, every `g` must act on `H/K` like some
/// `h ∈ H`, i.e. `G = H · C_G(H/K)`.
fn quasinilpotent_failure(lat: &SubgroupLattice) -> Option<Witness> {
    let g = lat.group();
    let cs = chief_series(lat, &[]).expect("no terms to validate");
    for f in cs.factors {
        let c = named::centralizer_of_factor(&f.upper, &f.lower);
        if f.upper.product_size(&c) != g.order() {
            let prod = f.upper.product_set(&c);
            let element = g
                .elems()
                .find(|&x| !prod.contains(x as usize))
                .expect("product is proper");
            return Some(Witness::OuterAction { factor: f, element });
        }
    }
    None
}

/// Sylow `p` normal with `G/G_p` abelian of exponent dividing `p − 1`.
fn strictly_p_closed_failure(g: &Group, p: usize) -> Option<Witness> {
    let gp = sylow(g, p);
    if !gp.is_normal() {
        return Some(Witness::SylowNotNormal(gp));
    }
    let gens = g.generator_elems();
    for &a in gens {
        for &b in gens {
            if !gp.contains(g.comm(a, b)) {
                return Some(Witness::QuotientNotAbelian { a, b });
            }
        }
    }
    let exponent = g.elems().fold(1usize, |acc, x| {
        let mut y = x;
        let mut j = 1;
        while !gp.contains(y) {
            y = g.mul(y, x);
            j += 1;
        }
        num_integer::lcm(acc, j)
    });
    (!(p - 1).is_multiple_of(exponent)).then_some(Witness::QuotientExponent { exponent })
}

/// Every chief factor of `G` below the normal subgroup `e` is cyclic.
pub fn is_hypercyclically_embedded(lat: &SubgroupLattice, e: &Subgroup) -> Result<ClassVerdict> {
    let g = lat.group();
    hypercyclic_between(lat, &g.trivial_subgroup(), e)
}

/// Every chief factor of `G` between the normal subgroups `lower ≤ upper` is
/// cyclic; equivalently `upper/lower` is hypercyclically embedded in `G/lower`.
pub fn hypercyclic_between(
    lat: &SubgroupLattice,
    lower: &Subgroup,
    upper: &Subgroup,
) -> Result<ClassVerdict> {
    for s in [lower, upper] {
        if !s.parent().same_as(lat.group()) {
            return Err(Error::ParentMismatch);
        }
        if !s.is_normal() {
            return Err(Error::NotNormal(format!("subgroup of order {}", s.order())));
        }
    }
    if !lower.is_subgroup_of(upper) {
        return Err(Error::Precondition("lower term must lie in upper term".into()));
    }
    let cs = chief_series(lat, &[lower.clone(), upper.clone()])?;
    let bad = cs
        .factors_between(lower, upper)
        .find(|f| !arith::is_prime(f.order))
        .cloned();
    Ok(ClassVerdict::from_check(
        "hypercyclically_embedded",
        bad.map(Witness::ChiefFactor),
    ))
}

/// `Ω(P)`: generated by elements of order dividing `p`, or dividing 4 when `P`
/// is a non-abelian 2-group.
pub fn omega(p_group: &Group) -> Result<Subgroup> {
    omega_of(&p_group.whole())
}

/// `Ω` of a `p`-subgroup, computed inside its parent group.
pub fn omega_of(h: &Subgroup) -> Result<Subgroup> {
    let g = h.parent();
    if h.is_trivial() {
        return Ok(h.clone());
    }
    let (p, _) = arith::prime_power(h.order())
        .ok_or_else(|| Error::Precondition(format!("order {} is not a prime power", h.order())))?;
    let bound = if p == 2 && !h.is_abelian() { 4 } else { p };
    let gens: Vec<Elem> = h
        .elements()
        .filter(|&e| bound % g.elem_order(e) == 0)
        .collect();
    Ok(g.generated_by(&gens))
}

/// Statements checked by [`lemma_check`]. Each carries the arguments its
/// hypotheses quantify over.
#[derive(Clone, Copy, Debug)]
pub enum LemmaCheck<'a> {
    /// A normal `p`-subgroup `P` is hypercyclically embedded iff `G/C_G(P)`
    /// is strictly `p`-closed. Both directions are tested.
    HypercyclicCentralizer { p: usize, subgroup: &'a Subgroup },
    /// `E ⊴ G`, `(p − 1, |G|) = 1`, and a Sylow `p` of `E` cyclic or `G`
    /// `p`-supersoluble ⟹ `E` is `p`-nilpotent and
    /// `E/O_{p′}(E) ≤ Z_∞(G/O_{p′}(E))`.
    PNilpotentHypercentral { p: usize, normal: &'a Subgroup },
    /// `G` `p`-supersoluble with `O_{p′}(G) = 1` ⟹ `p` is the largest prime
    /// divisor of `|G|`, `G` is supersoluble and `F(G) = O_p(G)` is Sylow.
    PSupersolubleStructure { p: usize },
    /// `F*(E)` hypercyclically embedded ⟹ `E` hypercyclically embedded.
    GeneralizedFittingEmbedding { normal: &'a Subgroup },
}

impl LemmaCheck<'_> {
    pub fn code(&self) -> &'static str {
        match self {
            LemmaCheck::HypercyclicCentralizer { .. } => "2.4",
            LemmaCheck::PNilpotentHypercentral { .. } => "2.7",
            LemmaCheck::PSupersolubleStructure { .. } => "2.8",
            LemmaCheck::GeneralizedFittingEmbedding { .. } => "2.11",
        }
    }
}

/// Evaluates the statement's conclusion when its hypotheses hold. Hypothesis
/// violations yield [`Error::NotApplicable`], never a verdict.
pub fn lemma_check(lat: &SubgroupLattice, check: LemmaCheck<'_>) -> Result<ClassVerdict> {
    let g = lat.group();
    let kind = format!("lemma {}", check.code());
    let not_applicable = |msg: String| Err(Error::NotApplicable(msg));
    match check {
        LemmaCheck::HypercyclicCentralizer { p, subgroup } => {
            if !subgroup.parent().same_as(g) || !subgroup.is_normal() {
                return not_applicable("P must be a normal subgroup".into());
            }
            if !subgroup.is_trivial() && arith::prime_power(subgroup.order()).map(|x| x.0) != Some(p) {
                return not_applicable(format!("P is not a {p}-group"));
            }
            let hyper = is_hypercyclically_embedded(lat, subgroup)?.holds;
            let c = named::centralizer(subgroup);
            let q = quotient(g, &c)?;
            let spc = strictly_p_closed_failure(&q.group, p).is_none();
            let failure = (hyper != spc).then(|| {
                Witness::Statement(format!(
                    "hypercyclically embedded: {hyper}, G/C_G(P) strictly {p}-closed: {spc}"
                ))
            });
            Ok(ClassVerdict::from_check(kind, failure))
        }
        LemmaCheck::PNilpotentHypercentral { p, normal } => {
            if !normal.parent().same_as(g) || !normal.is_normal() {
                return not_applicable("E must be normal".into());
            }
            if gcd(p - 1, g.order()) != 1 {
                return not_applicable(format!("({} , |G|) != 1", p - 1));
            }
            let pe = arith::p_part(normal.order(), p);
            let sylow_e = lat
                .within_of_order(normal, pe)
                .next()
                .map(|i| lat.get(i).clone())
                .expect("Sylow subgroups exist");
            let cyclic = subgroup_class(lat, &sylow_e, ClassKind::Cyclic).holds;
            if !cyclic && !group_class(lat, ClassKind::PSupersoluble(p)).holds {
                return not_applicable("Sylow p of E not cyclic and G not p-supersoluble".into());
            }
            if let Some(w) = p_nilpotent_failure(normal, p) {
                return Ok(ClassVerdict::no(kind, w));
            }
            let n = named::o_p_prime(lat, normal, p);
            let q = quotient(g, &n)?;
            let z = named::hypercenter(&q.group.whole());
            let image = q.project(normal);
            let failure = (!image.is_subgroup_of(&z)).then(|| {
                Witness::Statement(format!(
                    "E/O_p'(E) of order {} not inside the hypercenter of order {}",
                    image.order(),
                    z.order()
                ))
            });
            Ok(ClassVerdict::from_check(kind, failure))
        }
        LemmaCheck::PSupersolubleStructure { p } => {
            if !g.primes().contains(&p) {
                return not_applicable(format!("{p} does not divide |G|"));
            }
            if !group_class(lat, ClassKind::PSupersoluble(p)).holds {
                return not_applicable("G is not p-supersoluble".into());
            }
            if !named::o_p_prime(lat, lat.whole(), p).is_trivial() {
                return not_applicable("O_p'(G) is not trivial".into());
            }
            let mut problems = Vec::new();
            if g.primes().last() != Some(&p) {
                problems.push(format!("{p} is not the largest prime divisor"));
            }
            if !group_class(lat, ClassKind::Supersoluble).holds {
                problems.push("G is not supersoluble".to_string());
            }
            let f = named::fitting(lat, lat.whole());
            let op = named::o_p(lat, lat.whole(), p);
            if f != op {
                problems.push(format!("F(G) has order {}, O_p(G) has order {}", f.order(), op.order()));
            }
            if op.order() != arith::p_part(g.order(), p) {
                problems.push("O_p(G) is not a Sylow subgroup".to_string());
            }
            let failure = (!problems.is_empty()).then(|| Witness::Statement(problems.join("; ")));
            Ok(ClassVerdict::from_check(kind, failure))
        }
        LemmaCheck::GeneralizedFittingEmbedding { normal } => {
            if !normal.parent().same_as(g) || !normal.is_normal() {
                return not_applicable("E must be normal".into());
            }
            let fstar = named::generalized_fitting(lat, normal);
            if !is_hypercyclically_embedded(lat, &fstar)?.holds {
                return not_applicable("F*(E) is not hypercyclically embedded".into());
            }
            let v = is_hypercyclically_embedded(lat, normal)?;
            Ok(ClassVerdict {
                kind,
                holds: v.holds,
                witness: v.witness,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(deg: usize, gens: &[&str]) -> Group {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(deg, s).unwrap())
            .collect();
        Group::closure(deg, &gens).unwrap()
    }

    const ALL_KINDS: [ClassKind; 9] = [
        ClassKind::Soluble,
        ClassKind::Nilpotent,
        ClassKind::Supersoluble,
        ClassKind::PSoluble(2),
        ClassKind::PSupersoluble(3),
        ClassKind::PNilpotent(2),
        ClassKind::Quasinilpotent,
        ClassKind::StrictlyPClosed(5),
        ClassKind::Cyclic,
    ];

    #[test]
    fn trivial_group_is_in_every_class() {
        let lat = SubgroupLattice::new(&Group::trivial(1)).unwrap();
        for k in ALL_KINDS {
            let v = group_class(&lat, k);
            assert!(v.holds, "{k}");
            assert!(v.witness.is_none());
        }
    }

    #[test]
    fn s4_predicates() {
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let lat = SubgroupLattice::new(&s4).unwrap();
        let v = group_class(&lat, ClassKind::PSupersoluble(2));
        assert!(!v.holds);
        match v.witness {
            Some(Witness::ChiefFactor(f)) => assert_eq!(f.order, 4),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(group_class(&lat, ClassKind::Soluble).holds);
        assert!(group_class(&lat, ClassKind::PSupersoluble(3)).holds);
        assert!(!group_class(&lat, ClassKind::Supersoluble).holds);
        assert!(!group_class(&lat, ClassKind::Nilpotent).holds);
        assert!(!group_class(&lat, ClassKind::PNilpotent(2)).holds);
        assert!(!group_class(&lat, ClassKind::Quasinilpotent).holds);
        assert!(!group_class(&lat, ClassKind::Cyclic).holds);
    }

    #[test]
    fn a5_predicates() {
        let a5 = group(5, &["(0 1 2)", "(0 1 2 3 4)"]);
        let lat = SubgroupLattice::new(&a5).unwrap();
        for p in [2, 3, 5] {
            assert!(!group_class(&lat, ClassKind::PSoluble(p)).holds);
        }
        assert!(group_class(&lat, ClassKind::Quasinilpotent).holds);
        let v = group_class(&lat, ClassKind::Soluble);
        assert!(!v.holds);
        assert!(matches!(v.witness, Some(Witness::PerfectTerm(_))));
    }

    #[test]
    fn strictly_p_closed_examples() {
        // S3 = C3 : C2, and 2 divides 3 - 1
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let lat = SubgroupLattice::new(&s3).unwrap();
        assert!(group_class(&lat, ClassKind::StrictlyPClosed(3)).holds);
        assert!(!group_class(&lat, ClassKind::StrictlyPClosed(2)).holds);
        // C5 : C4 is strictly 5-closed, C4 exponent 4 divides 4
        let f20 = group(5, &["(0 1 2 3 4)", "(1 2 4 3)"]);
        let lat = SubgroupLattice::new(&f20).unwrap();
        assert!(group_class(&lat, ClassKind::StrictlyPClosed(5)).holds);
        // A4: quotient C3 has exponent 3, not dividing 1
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let lat = SubgroupLattice::new(&a4).unwrap();
        let v = group_class(&lat, ClassKind::StrictlyPClosed(2));
        assert!(matches!(v.witness, Some(Witness::QuotientExponent { exponent: 3 })));
    }

    #[test]
    fn hypercyclic_examples() {
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let lat = SubgroupLattice::new(&s3).unwrap();
        assert!(is_hypercyclically_embedded(&lat, lat.trivial()).unwrap().holds);
        let c3 = lat.get(lat.of_order(3).next().unwrap());
        assert!(is_hypercyclically_embedded(&lat, c3).unwrap().holds);
        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let lat = SubgroupLattice::new(&s4).unwrap();
        let v4 = lat.get(lat.of_order(4).find(|&i| lat.is_normal(i)).unwrap());
        assert!(!is_hypercyclically_embedded(&lat, v4).unwrap().holds);
        let t = lat.get(lat.of_order(2).next().unwrap());
        assert!(matches!(
            is_hypercyclically_embedded(&lat, t),
            Err(Error::NotNormal(_))
        ));
    }

    #[test]
    fn omega_examples() {
        let e8 = group(6, &["(0 1)", "(2 3)", "(4 5)"]);
        assert!(omega(&e8).unwrap().is_whole());
        let c9 = group(9, &["(0 1 2 3 4 5 6 7 8)"]);
        assert_eq!(omega(&c9).unwrap().order(), 3);
        let q8 = group(8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]);
        assert!(omega(&q8).unwrap().is_whole());
        let c4 = group(4, &["(0 1 2 3)"]);
        assert_eq!(omega(&c4).unwrap().order(), 2);
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        assert!(omega(&s3).is_err());
    }

    #[test]
    fn statement_check_examples() {
        // supersoluble p-group
        let d8 = group(4, &["(0 1 2 3)", "(0 2)"]);
        let lat = SubgroupLattice::new(&d8).unwrap();
        assert!(lemma_check(&lat, LemmaCheck::PSupersolubleStructure { p: 2 }).unwrap().holds);

        let s4 = group(4, &["(0 1)", "(0 1 2 3)"]);
        let lat = SubgroupLattice::new(&s4).unwrap();
        let v4 = lat.get(lat.of_order(4).find(|&i| lat.is_normal(i)).unwrap()).clone();
        let v = lemma_check(
            &lat,
            LemmaCheck::HypercyclicCentralizer { p: 2, subgroup: &v4 },
        )
        .unwrap();
        assert!(v.holds);
        assert!(!is_hypercyclically_embedded(&lat, &v4).unwrap().holds);

        let c15 = group(8, &["(0 1 2)(3 4 5 6 7)"]);
        let lat = SubgroupLattice::new(&c15).unwrap();
        let whole = lat.whole().clone();
        let v = lemma_check(&lat, LemmaCheck::PNilpotentHypercentral { p: 3, normal: &whole }).unwrap();
        assert!(v.holds);
        // (5 - 1, 15) = 1 too
        assert!(lemma_check(&lat, LemmaCheck::PNilpotentHypercentral { p: 5, normal: &whole }).unwrap().holds);
        // hypotheses violated -> not applicable
        let s3 = group(3, &["(0 1)", "(0 1 2)"]);
        let lat = SubgroupLattice::new(&s3).unwrap();
        let whole = lat.whole().clone();
        assert!(matches!(
            lemma_check(&lat, LemmaCheck::PNilpotentHypercentral { p: 3, normal: &whole }),
            Err(Error::NotApplicable(_))
        ));
    }
}
