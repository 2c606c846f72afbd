//! The applications: classical criteria recovered as special cases. Each
//! is checked as a statement in its own right, with its own hypotheses.

use crate::arith;
use crate::classes::{self, ClassKind};
use crate::lattice::{named, quotient};

use super::theorems::k_range;
use super::{Context, Params, TheoremId, TheoremReport};

type Hyp = std::result::Result<String, String>;

fn report(
    ctx: &Context<'_>,
    n: u8,
    params: Params,
    hyp: Hyp,
    concl: impl FnOnce() -> (bool, String),
) -> TheoremReport {
    TheoremReport::classify(ctx.id, TheoremId::Application(n), params, hyp, concl)
}

/// Every subgroup of prime order is normal.
fn minimal_subgroups_normal(ctx: &Context<'_>) -> Hyp {
    for &q in ctx.lat.group().primes() {
        if let Some(i) = ctx.lat.of_order(q).find(|&i| !ctx.lat.is_normal(i)) {
            return Err(format!("minimal subgroup #{i} of order {q} is not normal"));
        }
    }
    Ok(String::new())
}

fn group_in(ctx: &Context<'_>, kind: ClassKind) -> (bool, String) {
    let ok = ctx.in_class(ctx.whole_id(), kind);
    (ok, format!("G {kind}: {ok}"))
}

/// `G` soluble, and `G′` has a normal Sylow 2-subgroup `S` with `G′/S` nilpotent.
fn soluble_with_nilpotent_derived_quotient(ctx: &Context<'_>) -> (bool, String) {
    let lat = ctx.lat;
    if !ctx.in_class(ctx.whole_id(), ClassKind::Soluble) {
        return (false, "G is not soluble".into());
    }
    let d = named::derived(lat.whole());
    let sylows: Vec<usize> = lat.within_of_order(&d, arith::p_part(d.order(), 2)).collect();
    if sylows.len() != 1 {
        return (false, format!("G' has {} Sylow 2-subgroups", sylows.len()));
    }
    let s = lat.get(sylows[0]);
    let q = quotient(lat.group(), s).expect("characteristic in a normal subgroup");
    let ok = classes::subgroup_is_nilpotent(&q.project(&d));
    (ok, format!("G'/S nilpotent: {ok}"))
}

fn maximal_subgroups_of(ctx: &Context<'_>, h: usize) -> Vec<usize> {
    ctx.lat.maximal_in(ctx.sub(h))
}

fn sylows_of(ctx: &Context<'_>, p: usize) -> Vec<usize> {
    let n = ctx.lat.group().order();
    ctx.lat.of_order(arith::p_part(n, p)).collect()
}

/// One representative per conjugacy class among `ids`.
fn class_reps(ctx: &Context<'_>, ids: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut seen = Vec::new();
    ids.filter(|&i| {
        let c = ctx.lat.class_of(i);
        if seen.contains(&c) {
            false
        } else {
            seen.push(c);
            true
        }
    })
    .collect()
}

/// Nonempty proper subsets of π(G).
fn proper_prime_sets(primes: &[usize]) -> Vec<Vec<usize>> {
    let n = primes.len();
    (1..(1u32 << n).saturating_sub(1))
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| primes[i]).collect())
        .collect()
}

/// Every maximal subgroup of every Sylow subgroup of `x` (one Sylow per
/// prime, which suffices since the property is conjugation invariant) is
/// SS-quasinormal; Sylows with the given predicate are skipped.
fn sylow_maximals_ss_quasinormal(ctx: &Context<'_>, x: usize, skip_cyclic: bool) -> Hyp {
    let mut count = 0;
    for q in ctx.sub(x).primes() {
        let s = ctx.sylow_in(x, q);
        if skip_cyclic && ctx.in_class(s, ClassKind::Cyclic) {
            continue;
        }
        for m in maximal_subgroups_of(ctx, s) {
            if !ctx.ss_quasinormal(m) {
                return Err(format!("maximal subgroup #{m} of Sylow #{s} is not SS-quasinormal"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} maximal subgroups SS-quasinormal"))
}

/// Reports for the listed applications (numbered 1 to 10). `p` restricts
/// the prime parameter where there is one.
pub fn check_corollaries(ctx: &Context<'_>, ids: &[u8], p: Option<usize>) -> Vec<TheoremReport> {
    let lat = ctx.lat;
    let g = lat.group();
    let primes: Vec<usize> = g.primes().iter().copied().filter(|&q| p.is_none_or(|x| x == q)).collect();
    let mut out = Vec::new();
    for &n in ids {
        match n {
            1 => out.push(report(ctx, 1, Params::default(), minimal_subgroups_normal(ctx), || {
                soluble_with_nilpotent_derived_quotient(ctx)
            })),
            2 => {
                let hyp = if g.order().is_multiple_of(2) {
                    Err("|G| is even".to_string())
                } else {
                    minimal_subgroups_normal(ctx)
                };
                out.push(report(ctx, 2, Params::default(), hyp, || {
                    group_in(ctx, ClassKind::Supersoluble)
                }));
            }
            3 | 4 => {
                for &q in &primes {
                    let pp = arith::p_part(g.order(), q);
                    let base = Params {
                        p: Some(q),
                        ..Params::default()
                    };
                    if pp <= q {
                        out.push(report(ctx, n, base, Err("|P| = p".into()), || unreachable!()));
                        continue;
                    }
                    let complements = class_reps(ctx, lat.of_order(g.order() / pp));
                    if complements.is_empty() {
                        out.push(report(ctx, n, base, Err("no p-complement".into()), || unreachable!()));
                        continue;
                    }
                    for &e in &complements {
                        for s in sylows_of(ctx, q) {
                            let es = ctx.sub(e);
                            if n == 3 {
                                let params = Params {
                                    subgroups: Some(vec![e, s]),
                                    ..base.clone()
                                };
                                let hyp = match maximal_subgroups_of(ctx, s)
                                    .into_iter()
                                    .find(|&m| !es.permutes_unchecked(ctx.sub(m)))
                                {
                                    Some(m) => Err(format!("E does not permute with maximal subgroup #{m}")),
                                    None => Ok(String::new()),
                                };
                                out.push(report(ctx, 3, params, hyp, || group_in(ctx, ClassKind::PSoluble(q))));
                            } else {
                                for k in k_range(q, pp) {
                                    let params = Params {
                                        subgroups: Some(vec![e, s]),
                                        k: Some(k),
                                        ..base.clone()
                                    };
                                    let hyp = if q == 2 && !ctx.sub(s).is_abelian() {
                                        Err("Sylow 2-subgroups are non-abelian".to_string())
                                    } else {
                                        match lat
                                            .within_of_order(ctx.sub(s), q.pow(k))
                                            .find(|&h| !es.permutes_unchecked(ctx.sub(h)))
                                        {
                                            Some(h) => Err(format!("E does not permute with #{h}")),
                                            None => Ok(String::new()),
                                        }
                                    };
                                    out.push(report(ctx, 4, params, hyp, || {
                                        group_in(ctx, ClassKind::PSupersoluble(q))
                                    }));
                                }
                            }
                        }
                    }
                }
            }
            5 | 6 => {
                for pi in proper_prime_sets(g.primes()) {
                    let part = arith::pi_part(g.order(), |q| pi.contains(&q));
                    for a in class_reps(ctx, lat.of_order(part)) {
                        let asub = ctx.sub(a);
                        let supplements = (0..lat.len()).filter(|&t| {
                            asub.product_size(ctx.sub(t)) == g.order() && ctx.in_class(t, ClassKind::Nilpotent)
                        });
                        for t in supplements {
                            let ts = ctx.sub(t);
                            if n == 6
                                && maximal_subgroups_of(ctx, t)
                                    .iter()
                                    .any(|&m| asub.product_size(ctx.sub(m)) == g.order())
                            {
                                continue; // not a minimal supplement
                            }
                            let targets: Vec<usize> = g
                                .primes()
                                .iter()
                                .copied()
                                .filter(|q| !pi.contains(q) && p.is_none_or(|x| x == *q))
                                .filter(|&q| arith::p_part(ts.order(), q) > q)
                                .collect();
                            let params = Params {
                                sigma: Some(format!(
                                    "{}|*",
                                    pi.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
                                )),
                                subgroups: Some(vec![a, t]),
                                ..Params::default()
                            };
                            let hyp = if targets.is_empty() {
                                Err("no prime p outside pi with |T_p| > p".to_string())
                            } else if n == 5 {
                                match lat.within(ts).find(|&s| !asub.permutes_unchecked(ctx.sub(s))) {
                                    Some(s) => Err(format!("A does not permute with #{s} <= T")),
                                    None => Ok(String::new()),
                                }
                            } else {
                                let halls = arith::primes_of(ts.order()).into_iter().fold(vec![1usize], |acc, q| {
                                    let qq = arith::p_part(ts.order(), q);
                                    acc.iter().flat_map(|&x| [x, x * qq]).collect()
                                });
                                let bad = halls.into_iter().find_map(|order| {
                                    let h = lat.within_of_order(ts, order).next()?;
                                    maximal_subgroups_of(ctx, h)
                                        .into_iter()
                                        .find(|&m| !asub.permutes_unchecked(ctx.sub(m)))
                                });
                                match bad {
                                    Some(m) => Err(format!("A does not permute with #{m}")),
                                    None => Ok(String::new()),
                                }
                            };
                            out.push(report(ctx, n, params, hyp, || {
                                let fails: Vec<usize> = targets
                                    .iter()
                                    .copied()
                                    .filter(|&q| !ctx.in_class(ctx.whole_id(), ClassKind::PSupersoluble(q)))
                                    .collect();
                                (fails.is_empty(), format!("not p-supersoluble for p in {fails:?}"))
                            }));
                        }
                    }
                }
            }
            7 => {
                let Some(&q) = g.primes().first() else { continue };
                if p.is_some_and(|x| x != q) {
                    continue;
                }
                let s = ctx.sylow_in(ctx.whole_id(), q);
                let pp = ctx.sub(s).order();
                for k in k_range(q, pp) {
                    let d = q.pow(k);
                    let params = Params {
                        p: Some(q),
                        k: Some(k),
                        ..Params::default()
                    };
                    let mut subjects: Vec<usize> = lat.within_of_order(ctx.sub(s), d).collect();
                    if d == 2 {
                        subjects.extend(lat.within_of_order(ctx.sub(s), 4));
                    }
                    let hyp = match subjects.iter().find(|&&h| !ctx.ss_quasinormal(h)) {
                        Some(h) => Err(format!("#{h} is not SS-quasinormal")),
                        None => Ok(format!("{} subgroups SS-quasinormal", subjects.len())),
                    };
                    out.push(report(ctx, 7, params, hyp, || group_in(ctx, ClassKind::PNilpotent(q))));
                }
            }
            8..=10 => {
                for e in ctx.normal_sweep() {
                    let params = Params {
                        e: Some(e),
                        ..Params::default()
                    };
                    let hyp = if !ctx.cyclic_between(e, ctx.whole_id()) {
                        Err("G/E is not supersoluble".to_string())
                    } else if n == 8 {
                        sylow_maximals_ss_quasinormal(ctx, e, true)
                    } else {
                        sylow_maximals_ss_quasinormal(ctx, ctx.generalized_fitting(e), false)
                    };
                    out.push(report(ctx, n, params, hyp, || group_in(ctx, ClassKind::Supersoluble)));
                }
            }
            _ => {}
        }
    }
    out
}
