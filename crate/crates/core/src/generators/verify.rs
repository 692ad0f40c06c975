use std::collections::HashMap;

use serde_json::{json, Value};

use super::{build_phi, build_psi, GeneratorSet, PatilLabel, PatilSet};
use crate::par;
use crate::polyring::serial::poly_to_json;
use crate::polyring::{
    buchberger, curve_image, first_nonreducing_pair, reduce, Monomial, OrderContext, Polynomial,
};
use crate::report::{CheckResult, VerificationReport};

fn pj(f: &Polynomial) -> Value {
    serde_json::to_value(poly_to_json(f)).expect("serializable")
}

fn mj(m: &Monomial) -> Value {
    json!(m.exponents())
}

/// Leading terms of `G'` read off the binomials themselves:
/// `X_i X_j` for the `phi`s and `X_{b+i} X_p^a` for the `psi`s.
fn explicit_leading_monomials(ctx: &OrderContext) -> Vec<Monomial> {
    let c = ctx.params();
    let mut out = Vec::new();
    for i in 1..c.p {
        for j in i..c.p {
            out.push(ctx.mono(&[(i, 1), (j, 1)]));
        }
    }
    for i in 0..=c.p - c.b {
        out.push(ctx.mono(&[(c.b + i, 1), (c.p, c.a as u32)]));
    }
    out
}

/// Indices `(k, l)`, `k != l`, with `LM(polys[k])` dividing `LM(polys[l])`.
pub fn lt_antichain_violation(polys: &[Polynomial]) -> Option<(usize, usize)> {
    let lms: Vec<&Monomial> = polys
        .iter()
        .map(|f| f.lead().expect("non-zero").0)
        .collect();
    for (k, a) in lms.iter().enumerate() {
        for (l, b) in lms.iter().enumerate() {
            if k != l && a.divides(b) {
                return Some((k, l));
            }
        }
    }
    None
}

/// Closed-form basis checks: shape and size of `G'`, membership of every
/// binomial in the curve ideal, and the Gröbner property by both reducing all
/// S-polynomials and comparing against a full Buchberger run.
pub fn verify_groebner_g_prime(ctx: &OrderContext) -> VerificationReport {
    check_g_prime(ctx, &GeneratorSet::build(ctx).polys())
}

/// The checks of [`verify_groebner_g_prime`] on an explicit list, expected in
/// the canonical order (`phi(i,j)` by `(i, j)` with `i <= j`, then `psi`s).
pub fn check_g_prime(ctx: &OrderContext, polys: &[Polynomial]) -> VerificationReport {
    let c = ctx.params();
    let mut report = VerificationReport::new();

    let expected = GeneratorSet::expected_len(c.p, c.b);
    report.push(if polys.len() == expected {
        CheckResult::pass(
            "g_prime_cardinality",
            c,
            format!("{} elements", polys.len()),
        )
    } else {
        CheckResult::fail(
            "g_prime_cardinality",
            c,
            format!("{} elements, expected {expected}", polys.len()),
            vec![],
        )
    });
    if polys.iter().any(Polynomial::is_zero) {
        report.push(CheckResult::fail(
            "g_prime_homogeneous",
            c,
            "zero member",
            vec![],
        ));
        return report;
    }

    let bad = polys.iter().find(|f| {
        let ms: Vec<_> = f.monomials().collect();
        ms.len() != 2 || ms[0].weight() != ms[1].weight() || !curve_image(c, f).is_zero()
    });
    report.push(match bad {
        None => CheckResult::pass(
            "g_prime_homogeneous",
            c,
            "all binomials weight-homogeneous, all vanish on the curve",
        ),
        Some(f) => CheckResult::fail(
            "g_prime_homogeneous",
            c,
            "binomial outside the curve ideal",
            vec![pj(f)],
        ),
    });

    let computed: Vec<Monomial> = polys.iter().map(|f| f.lead().unwrap().0.clone()).collect();
    let explicit = explicit_leading_monomials(ctx);
    report.push(if computed == explicit {
        CheckResult::pass(
            "g_prime_leading_terms",
            c,
            "LT(G') = {X_iX_j} u {X_{b+i}X_p^a}",
        )
    } else {
        let k = computed
            .iter()
            .zip(&explicit)
            .position(|(x, y)| x != y)
            .unwrap_or(computed.len().min(explicit.len()));
        let mut witness = Vec::new();
        if let Some(f) = polys.get(k) {
            witness.push(pj(f));
        }
        if let Some(m) = explicit.get(k) {
            witness.push(mj(m));
        }
        CheckResult::fail(
            "g_prime_leading_terms",
            c,
            "computed leading monomials differ from the explicit description",
            witness,
        )
    });

    report.push(match first_nonreducing_pair(ctx, polys) {
        None => CheckResult::pass(
            "g_prime_s_pairs",
            c,
            format!(
                "{} S-polynomials reduce to 0",
                polys.len() * (polys.len() - 1) / 2
            ),
        ),
        Some(((i, j), r)) => CheckResult::fail(
            "g_prime_s_pairs",
            c,
            format!("S({i},{j}) has a non-zero normal form"),
            vec![pj(&polys[i]), pj(&polys[j]), pj(&r)],
        ),
    });

    let gb = buchberger(ctx, polys);
    let outside = gb
        .iter()
        .find(|g| !explicit.iter().any(|m| m.divides(g.lead().unwrap().0)));
    let uncovered = explicit
        .iter()
        .find(|m| !gb.iter().any(|g| g.lead().unwrap().0.divides(m)));
    report.push(match (outside, uncovered) {
        (None, None) => CheckResult::pass(
            "g_prime_buchberger",
            c,
            format!(
                "reduced basis has {} elements, same leading-term ideal",
                gb.len()
            ),
        ),
        (Some(g), _) => CheckResult::fail(
            "g_prime_buchberger",
            c,
            "Buchberger produced a leading monomial outside <LT(G')>",
            vec![pj(g)],
        ),
        (None, Some(m)) => CheckResult::fail(
            "g_prime_buchberger",
            c,
            "LT(G') element not generated by the reduced basis",
            vec![mj(m)],
        ),
    });
    report
}

/// Leading terms of `G'` form an antichain under divisibility, and no member
/// lies in the ideal of the others.
pub fn verify_minimality(ctx: &OrderContext) -> VerificationReport {
    let mut report = verify_lt_antichain(ctx);
    report.extend(verify_minimal_generation(ctx));
    report
}

/// No leading term of `G'` divides another.
pub fn verify_lt_antichain(ctx: &OrderContext) -> VerificationReport {
    let c = ctx.params();
    let polys = GeneratorSet::build(ctx).polys();
    let mut report = VerificationReport::new();
    let n = polys.len();
    report.push(match lt_antichain_violation(&polys) {
        None => CheckResult::pass(
            "g_prime_lt_antichain",
            c,
            format!("{} pairs checked", n * (n - 1) / 2),
        ),
        Some((k, l)) => CheckResult::fail(
            "g_prime_lt_antichain",
            c,
            format!("LT of member {k} divides LT of member {l}"),
            vec![pj(&polys[k]), pj(&polys[l])],
        ),
    });
    report
}

/// No member of `G'` reduces to zero modulo a Gröbner basis of the others.
pub fn verify_minimal_generation(ctx: &OrderContext) -> VerificationReport {
    let c = ctx.params();
    let polys = GeneratorSet::build(ctx).polys();
    let mut report = VerificationReport::new();
    let idx: Vec<usize> = (0..polys.len()).collect();
    let redundant = par::find_first(&idx, |&k| {
        let others: Vec<Polynomial> = polys
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, f)| f.clone())
            .collect();
        let gb = buchberger(ctx, &others);
        reduce(&polys[k], &gb).is_zero().then_some(())
    });
    report.push(match redundant {
        None => CheckResult::pass(
            "g_prime_minimal_generation",
            c,
            "no member lies in the ideal of the others",
        ),
        Some((k, ())) => CheckResult::fail(
            "g_prime_minimal_generation",
            c,
            format!("member {k} is generated by the others"),
            vec![pj(&polys[k])],
        ),
    });
    report
}

/// Shapes a monomial outside `<LT(G')>` can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StandardFamily {
    /// `X_p^m X_i`, `1 <= m <= a-1`, `i in [1, p-1]`.
    TopPowerTimesMiddle,
    /// `X_0^m X_i`, `i in [1, p-1]`.
    BasePowerTimesMiddle,
    /// `X_0^m X_p^n`, `n <= a`.
    BaseTimesTop,
    /// `X_p^m X_i`, `1 <= m <= a`, `i in [1, b-1]`.
    TopPowerTimesLowMiddle,
    /// `X_0^m X_p^n X_i` with `m, n >= 1`, `i in [1, p-1]`, and `n <= a-1`
    /// (or `n <= a` when `i < b`). Missing from the four shapes above.
    Mixed,
}

fn classify(ctx: &OrderContext, m: &Monomial) -> Option<StandardFamily> {
    let c = ctx.params();
    let (p, a, b) = (c.p, c.a as u32, c.b);
    let e = m.exponents();
    let base = e[p];
    let top = e[p - 1];
    let middle: Vec<(usize, u32)> = (1..p)
        .map(|k| (k, e[k - 1]))
        .filter(|(_, x)| *x > 0)
        .collect();
    match middle.as_slice() {
        [] => (top <= a).then_some(StandardFamily::BaseTimesTop),
        [(i, 1)] => {
            let i = *i;
            if base == 0 && top >= 1 && top < a {
                Some(StandardFamily::TopPowerTimesMiddle)
            } else if top == 0 {
                Some(StandardFamily::BasePowerTimesMiddle)
            } else if base == 0 && top >= 1 && top <= a && i < b {
                Some(StandardFamily::TopPowerTimesLowMiddle)
            } else if base >= 1 && top >= 1 && (top < a || (top == a && i < b)) {
                Some(StandardFamily::Mixed)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// All exponent vectors with every entry at most `cap`.
fn exponent_box(ctx: &OrderContext, cap: u32) -> Vec<Monomial> {
    let n = ctx.nvars();
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    loop {
        out.push(ctx.monomial(e.clone()));
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if e[k] < cap {
                e[k] += 1;
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Enumerates the standard monomials of `G'` with every exponent at most
/// `bound`, classifies them, and checks that no two distinct ones have the
/// same weight (equivalently, their difference is not in the curve ideal).
pub fn verify_standard_monomials(ctx: &OrderContext, bound: u32) -> VerificationReport {
    let c = ctx.params();
    let lts: Vec<Monomial> = GeneratorSet::build(ctx)
        .polys()
        .iter()
        .map(|f| f.lead().unwrap().0.clone())
        .collect();
    let standard: Vec<Monomial> = exponent_box(ctx, bound)
        .into_iter()
        .filter(|m| !lts.iter().any(|l| l.divides(m)))
        .collect();
    let mut report = VerificationReport::new();

    let mut counts: HashMap<StandardFamily, usize> = HashMap::new();
    let mut unclassified = None;
    for m in &standard {
        match classify(ctx, m) {
            Some(f) => *counts.entry(f).or_default() += 1,
            None => {
                unclassified = Some(m);
                break;
            }
        }
    }
    report.push(match unclassified {
        None => {
            let mixed = counts.get(&StandardFamily::Mixed).copied().unwrap_or(0);
            CheckResult::pass(
                "standard_monomial_families",
                c,
                format!(
                    "{} standard monomials classified ({} of mixed shape X0^m Xp^n Xi)",
                    standard.len(),
                    mixed
                ),
            )
        }
        Some(m) => CheckResult::fail(
            "standard_monomial_families",
            c,
            format!("{m} fits none of the standard shapes"),
            vec![mj(m)],
        ),
    });

    let mut seen: HashMap<u64, &Monomial> = HashMap::new();
    let mut clash = None;
    for m in &standard {
        if let Some(prev) = seen.insert(m.weight(), m) {
            clash = Some((prev, m));
            break;
        }
    }
    report.push(match clash {
        None => CheckResult::pass(
            "standard_monomial_distinct_weights",
            c,
            format!(
                "{} monomials, bound {bound}, pairwise distinct weights",
                standard.len()
            ),
        ),
        Some((f, g)) => {
            let diff = ctx.binomial(f.clone(), g.clone());
            CheckResult::fail(
                "standard_monomial_distinct_weights",
                c,
                format!("{f} - {g} lies in the curve ideal"),
                vec![pj(&diff)],
            )
        }
    });
    report
}

/// `G` and `G'` generate the same ideal and have the same size; the displayed
/// rewriting identities between their members hold exactly.
pub fn verify_ideal_equality(ctx: &OrderContext) -> VerificationReport {
    let c = ctx.params();
    let p = c.p;
    let g_prime = GeneratorSet::build(ctx);
    let patil = PatilSet::build(ctx);
    let gp_polys = g_prime.polys();
    let mut report = VerificationReport::new();

    report.push(if patil.len() == g_prime.len() {
        CheckResult::pass(
            "patil_cardinality",
            c,
            format!("|G| = |G'| = {}", patil.len()),
        )
    } else {
        CheckResult::fail(
            "patil_cardinality",
            c,
            format!("|G| = {} but |G'| = {}", patil.len(), g_prime.len()),
            vec![],
        )
    });

    let stray = patil
        .members
        .values()
        .find(|g| !reduce(g, &gp_polys).is_zero());
    report.push(match stray {
        None => CheckResult::pass(
            "patil_in_g_prime_ideal",
            c,
            "every member of G reduces to 0 modulo G'",
        ),
        Some(g) => CheckResult::fail(
            "patil_in_g_prime_ideal",
            c,
            "member of G does not reduce to 0",
            vec![pj(g)],
        ),
    });

    let gb = buchberger(ctx, &patil.polys());
    let stray = gp_polys.iter().find(|g| !reduce(g, &gb).is_zero());
    report.push(match stray {
        None => CheckResult::pass(
            "g_prime_in_patil_ideal",
            c,
            "every member of G' reduces to 0 modulo a basis of <G>",
        ),
        Some(g) => CheckResult::fail(
            "g_prime_in_patil_ideal",
            c,
            "member of G' does not reduce to 0",
            vec![pj(g)],
        ),
    });

    let mut broken: Option<(String, Polynomial)> = None;
    let mut note = |label: String, diff: Polynomial| {
        if broken.is_none() && !diff.is_zero() {
            broken = Some((label, diff));
        }
    };
    for (&label, g) in &patil.members {
        match label {
            PatilLabel::Xi(i, j) => {
                let phi = build_phi(ctx, i, j).unwrap();
                if i + j < p {
                    note(format!("xi({i},{j}) = phi({i},{j})"), g - &phi);
                } else {
                    let shifted = &patil.members[&PatilLabel::Phi(i + j - p)];
                    note(
                        format!("xi({i},{j}) + phi_{} = phi({i},{j})", i + j - p),
                        &(g + shifted) - &phi,
                    );
                }
            }
            PatilLabel::Phi(i) => {
                note(
                    format!("phi_{i} = phi({},{})", i + 1, p - 1),
                    g - &build_phi(ctx, i + 1, p - 1).unwrap(),
                );
            }
            PatilLabel::Psi(j) => note(
                format!("psi_b,{j} = psi(b,{j})"),
                g - &build_psi(ctx, j).unwrap(),
            ),
            PatilLabel::Theta => note(
                "theta = psi(b,p-b)".into(),
                g - &build_psi(ctx, p - c.b).unwrap(),
            ),
        }
    }
    report.push(match broken {
        None => CheckResult::pass("patil_rewriting_identities", c, "all identities hold"),
        Some((label, diff)) => CheckResult::fail(
            "patil_rewriting_identities",
            c,
            format!("{label} fails"),
            vec![pj(&diff)],
        ),
    });
    report
}
