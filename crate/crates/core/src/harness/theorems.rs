use std::cell::OnceCell;

use crate::classes::ClassKind;
use crate::error::Result;
use crate::lattice::named;
use crate::sigma::{cartesian, hall_choices, SigmaPartition};

use super::{Context, Params, TheoremId, TheoremReport};

/// Exponents `k ≥ 1` with `p^k < |P|`.
pub fn k_range(p: usize, sylow_order: usize) -> Vec<u32> {
    (1..).take_while(|&k| p.pow(k) < sylow_order).collect()
}

/// The subgroups the hypothesis quantifies over for a fixed `k`: those of
/// order `p^k` in `P`, plus the cyclic ones of order 4 when `p^k = 2` and `P`
/// is non-abelian.
pub fn pk_subjects(ctx: &Context<'_>, sylow: usize, p: usize, k: u32) -> Vec<usize> {
    let lat = ctx.lat;
    let pp = ctx.sub(sylow);
    let mut out: Vec<usize> = lat.within_of_order(pp, p.pow(k)).collect();
    if p.pow(k) == 2 && !pp.is_abelian() {
        out.extend(
            lat.within_of_order(pp, 4)
                .filter(|&i| ctx.in_class(i, ClassKind::Cyclic)),
        );
    }
    out
}

/// `Ok(count)` when every subject is σ-semipermutable with respect to the
/// Hall set, otherwise a description of the first failure.
fn scan(ctx: &Context<'_>, subjects: &[usize], hall: &[usize]) -> std::result::Result<usize, String> {
    for &h in subjects {
        if let Some(m) = ctx.perm.first_failure(h, hall) {
            return Err(format!(
                "subgroup #{h} of order {} does not permute with all conjugates of member #{m}",
                ctx.sub(h).order()
            ));
        }
    }
    Ok(subjects.len())
}

/// The hypothesis schema shared by the Sylow-based statements: a Hall set
/// whose member `H_1` for the block of `p` is `p`-supersoluble of order
/// divisible by `p`, and a `k` with `p^k < |P|` for which every subject is
/// σ-semipermutable. One report per (Hall set, k).
fn sylow_schema(
    ctx: &Context<'_>,
    theorem: TheoremId,
    p: usize,
    sigma: &SigmaPartition,
    base: Params,
    sylow: usize,
    conclusion: &dyn Fn() -> (bool, String),
) -> Result<Vec<TheoremReport>> {
    let base = Params {
        p: Some(p),
        sigma: Some(sigma.to_string()),
        ..base
    };
    let choices = hall_choices(ctx.lat, sigma)?;
    let sets = cartesian(&choices);
    let ks = k_range(p, ctx.sub(sylow).order());
    let cached = OnceCell::new();
    let concl = || cached.get_or_init(conclusion).clone();
    let vacuous = |why: &str| {
        TheoremReport::classify(ctx.id, theorem, base.clone(), Err(why.to_string()), || unreachable!())
    };
    if sets.is_empty() {
        return Ok(vec![vacuous("no complete Hall sigma-set")]);
    }
    if ks.is_empty() {
        return Ok(vec![vacuous("no k with p^k < |P|")]);
    }
    let block = sigma.block_of(p).expect("sigma covers the group");
    let pos = choices.iter().position(|(b, _)| *b == block).expect("p divides |G|");
    let mut out = Vec::new();
    for set in sets {
        let h1 = set[pos];
        let h1_ok = ctx.sub(h1).order().is_multiple_of(p) && ctx.in_class(h1, ClassKind::PSupersoluble(p));
        for &k in &ks {
            let params = Params {
                hall_set: Some(set.clone()),
                k: Some(k),
                ..base.clone()
            };
            let hyp = if h1_ok {
                let subjects = pk_subjects(ctx, sylow, p, k);
                scan(ctx, &subjects, &set).map(|n| format!("{n} subgroups scanned"))
            } else {
                Err(format!("H1 = #{h1} is not p-supersoluble"))
            };
            out.push(TheoremReport::classify(ctx.id, theorem, params, hyp, concl));
        }
    }
    Ok(out)
}

/// Sylow-based hypotheses on `G` ⟹ `G` is `p`-supersoluble.
pub fn check_p_supersolubility(ctx: &Context<'_>, p: usize, sigma: &SigmaPartition) -> Result<Vec<TheoremReport>> {
    let sylow = ctx.sylow_in(ctx.whole_id(), p);
    let concl = || {
        let ok = ctx.in_class(ctx.whole_id(), ClassKind::PSupersoluble(p));
        (ok, format!("G p-supersoluble: {ok}"))
    };
    sylow_schema(ctx, TheoremId::PSupersolubility, p, sigma, Params::default(), sylow, &concl)
}

/// Sylow-based hypotheses on `G` ⟹ `G` is `p`-soluble.
pub fn check_p_solubility(ctx: &Context<'_>, p: usize, sigma: &SigmaPartition) -> Result<Vec<TheoremReport>> {
    let sylow = ctx.sylow_in(ctx.whole_id(), p);
    let concl = || {
        let ok = ctx.in_class(ctx.whole_id(), ClassKind::PSoluble(p));
        (ok, format!("G p-soluble: {ok}"))
    };
    sylow_schema(ctx, TheoremId::PSolubility, p, sigma, Params::default(), sylow, &concl)
}

/// For a `p`-soluble normal `E` with the Sylow hypotheses on a Sylow `p` of
/// `E`: `E/O_{p′}(E)` is hypercyclically embedded in `G/O_{p′}(E)`, i.e. every
/// chief factor of `G` between `O_{p′}(E)` and `E` is cyclic.
pub fn check_quotient_embedding(
    ctx: &Context<'_>,
    e: usize,
    p: usize,
    sigma: &SigmaPartition,
) -> Result<Vec<TheoremReport>> {
    let base = Params {
        e: Some(e),
        ..Params::default()
    };
    if !ctx.p_soluble_below(e, p) {
        let params = Params {
            p: Some(p),
            sigma: Some(sigma.to_string()),
            ..base
        };
        return Ok(vec![TheoremReport::classify(
            ctx.id,
            TheoremId::QuotientEmbedding,
            params,
            Err("E is not p-soluble".into()),
            || unreachable!(),
        )]);
    }
    let sylow = ctx.sylow_in(e, p);
    let concl = || {
        let n = named::o_p_prime(ctx.lat, ctx.sub(e), p);
        let ok = ctx.cyclic_between(ctx.lat.id(&n), e);
        (ok, format!("|O_p'(E)| = {}, E/O_p'(E) hypercyclically embedded: {ok}", n.order()))
    };
    sylow_schema(ctx, TheoremId::QuotientEmbedding, p, sigma, base, sylow, &concl)
}

/// Every member of the Hall set supersoluble, and for every non-cyclic
/// Sylow `P` of `X` some `k(P)` meeting the Sylow condition ⟹ `E` is
/// hypercyclically embedded. Checked for `X = E` and for `X = F*(E)` when
/// the two differ; one report per (mode, Hall set).
pub fn check_hypercyclic_embedding(
    ctx: &Context<'_>,
    e: usize,
    sigma: &SigmaPartition,
) -> Result<Vec<TheoremReport>> {
    let theorem = TheoremId::HypercyclicEmbedding;
    let fstar = ctx.generalized_fitting(e);
    let mut modes = vec![("E", e)];
    if fstar != e {
        modes.push(("F*(E)", fstar));
    }
    let choices = hall_choices(ctx.lat, sigma)?;
    let sets = cartesian(&choices);
    let concl = || {
        let ok = ctx.cyclic_between(0, e);
        (ok, format!("E hypercyclically embedded: {ok}"))
    };
    let mut out = Vec::new();
    for (mode, x) in modes {
        let base = Params {
            sigma: Some(sigma.to_string()),
            e: Some(e),
            x: Some(mode.to_string()),
            ..Params::default()
        };
        if sets.is_empty() {
            out.push(TheoremReport::classify(
                ctx.id,
                theorem,
                base,
                Err("no complete Hall sigma-set".into()),
                || unreachable!(),
            ));
            continue;
        }
        let xs = ctx.sub(x);
        let noncyclic: Vec<(usize, usize)> = xs
            .primes()
            .into_iter()
            .map(|q| (q, ctx.sylow_in(x, q)))
            .filter(|&(_, s)| !ctx.in_class(s, ClassKind::Cyclic))
            .collect();
        for set in &sets {
            let params = Params {
                hall_set: Some(set.clone()),
                ..base.clone()
            };
            let hyp = (|| {
                if let Some(&m) = set.iter().find(|&&m| !ctx.in_class(m, ClassKind::Supersoluble)) {
                    return Err(format!("member #{m} is not supersoluble"));
                }
                let mut chosen = Vec::new();
                for &(q, s) in &noncyclic {
                    let k = k_range(q, ctx.sub(s).order())
                        .into_iter()
                        .find(|&k| scan(ctx, &pk_subjects(ctx, s, q, k), set).is_ok())
                        .ok_or_else(|| format!("no k works for the Sylow {q}-subgroup #{s} of X"))?;
                    chosen.push(format!("k({q}) = {k}"));
                }
                Ok(chosen.join(", "))
            })();
            out.push(TheoremReport::classify(ctx.id, theorem, params, hyp, concl));
        }
    }
    Ok(out)
}
