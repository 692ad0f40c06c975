use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use super::reduce::{module_normal_form, s_vector};
use super::{BasisSymbol, ModuleContext, ModuleElement, SyzygyLabel, SyzygySet};
use crate::par;
use crate::polyring::serial::poly_to_json;
use crate::polyring::{pair_syzygies, Coeff, Monomial};
use crate::report::{CheckResult, VerificationReport};

fn ej(ctx: &ModuleContext, h: &ModuleElement) -> Value {
    serde_json::to_value(ctx.element_to_json(h)).expect("serializable")
}

/// A syzygy of `G'` harvested from one S-pair reduction.
#[derive(Debug, Clone)]
pub struct SchreyerSyzygy {
    pub pair: (BasisSymbol, BasisSymbol),
    pub element: ModuleElement,
    /// Whether the S-polynomial reduced to zero (so `element` is a relation).
    pub complete: bool,
}

/// One relation per pair of members of `G'`: the S-polynomial cofactors minus
/// the division quotients. When `G'` is a Gröbner basis these generate the
/// whole syzygy module.
pub fn schreyer_syzygies(ctx: &ModuleContext) -> Vec<SchreyerSyzygy> {
    let labelled = ctx.generators().labelled();
    let polys: Vec<_> = labelled.iter().map(|(_, f)| (*f).clone()).collect();
    pair_syzygies(ctx.ring(), &polys)
        .into_iter()
        .map(|ps| {
            let element = ctx.element_from_components(
                labelled.iter().map(|(s, _)| *s).zip(ps.coefficients.iter()),
            );
            SchreyerSyzygy {
                pair: (labelled[ps.i].0, labelled[ps.j].0),
                element,
                complete: ps.remainder.is_zero(),
            }
        })
        .collect()
}

/// Index pair `(k, l)`, `k != l`, where the leading term of member `k`
/// divides that of member `l`.
pub fn module_lt_antichain_violation(members: &[ModuleElement]) -> Option<(usize, usize)> {
    let lts: Vec<_> = members
        .iter()
        .map(|h| h.lead().expect("non-zero").0)
        .collect();
    for (k, x) in lts.iter().enumerate() {
        for (l, y) in lts.iter().enumerate() {
            if k != l && x.divides(y) {
                return Some((k, l));
            }
        }
    }
    None
}

/// Kernel, leading-term, minimality, S-vector and completeness checks for an
/// arbitrary candidate set (normally the full closed-form set).
pub fn check_g_hat(
    ctx: &ModuleContext,
    members: &[(SyzygyLabel, ModuleElement)],
) -> VerificationReport {
    let c = ctx.params();
    let elems: Vec<ModuleElement> = members.iter().map(|(_, h)| h.clone()).collect();
    let mut report = VerificationReport::new();

    let bad = par::find_first(members, |(label, h)| {
        let img = ctx.ideal_image(h);
        (!img.is_zero() || h.is_zero()).then_some((*label, img))
    });
    report.push(match bad {
        None => CheckResult::pass(
            "g_hat_kernel",
            c,
            format!("{} relations map to 0", members.len()),
        ),
        Some((k, (label, img))) => CheckResult::fail(
            "g_hat_kernel",
            c,
            format!("{label} is not a relation"),
            vec![
                ej(ctx, &elems[k]),
                serde_json::to_value(poly_to_json(&img)).unwrap(),
            ],
        ),
    });

    let wrong_lead = members
        .iter()
        .find(|(label, h)| h.lead().map(|(t, _)| t) != Some(&ctx.designated_leading_term(*label)));
    report.push(match wrong_lead {
        None => CheckResult::pass(
            "g_hat_leading_terms",
            c,
            "computed leading terms match the marked ones",
        ),
        Some((label, h)) => CheckResult::fail(
            "g_hat_leading_terms",
            c,
            format!(
                "{label}: leading term {} but marked {}",
                h.lead().map(|(t, _)| t.to_string()).unwrap_or_default(),
                ctx.designated_leading_term(*label)
            ),
            vec![ej(ctx, h)],
        ),
    });

    report.push(match module_lt_antichain_violation(&elems) {
        None => CheckResult::pass(
            "g_hat_lt_antichain",
            c,
            format!(
                "{} pairs checked",
                elems.len() * elems.len().saturating_sub(1) / 2
            ),
        ),
        Some((k, l)) => CheckResult::fail(
            "g_hat_lt_antichain",
            c,
            format!("LT({}) divides LT({})", members[k].0, members[l].0),
            vec![ej(ctx, &elems[k]), ej(ctx, &elems[l])],
        ),
    });

    let n = elems.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|k| (k + 1..n).map(move |l| (k, l)))
        .filter(|&(k, l)| elems[k].lead().unwrap().0.symbol == elems[l].lead().unwrap().0.symbol)
        .collect();
    let stuck = par::find_first(&pairs, |&(k, l)| {
        let s = s_vector(ctx, &elems[k], &elems[l])?;
        let r = module_normal_form(ctx, &s, &elems).remainder;
        (!r.is_zero()).then_some(r)
    });
    report.push(match stuck {
        None => CheckResult::pass(
            "g_hat_s_vectors",
            c,
            format!("{} S-vectors reduce to 0", pairs.len()),
        ),
        Some((q, r)) => {
            let (k, l) = pairs[q];
            CheckResult::fail(
                "g_hat_s_vectors",
                c,
                format!(
                    "S({}, {}) has a non-zero remainder",
                    members[k].0, members[l].0
                ),
                vec![ej(ctx, &elems[k]), ej(ctx, &elems[l]), ej(ctx, &r)],
            )
        }
    });

    let oracle = schreyer_syzygies(ctx);
    let broken = oracle
        .iter()
        .find(|s| !s.complete || !ctx.ideal_image(&s.element).is_zero());
    let missing = par::find_first(&oracle, |s| {
        let r = module_normal_form(ctx, &s.element, &elems).remainder;
        (!r.is_zero()).then_some(r)
    });
    report.push(match (broken, missing) {
        (Some(s), _) => CheckResult::fail(
            "g_hat_completeness",
            c,
            format!(
                "oracle syzygy for ({}, {}) is not a relation",
                s.pair.0, s.pair.1
            ),
            vec![ej(ctx, &s.element)],
        ),
        (None, None) => CheckResult::pass(
            "g_hat_completeness",
            c,
            format!("{} pair syzygies of G' reduce to 0", oracle.len()),
        ),
        (None, Some((k, r))) => CheckResult::fail(
            "g_hat_completeness",
            c,
            format!(
                "syzygy from pair ({}, {}) is not generated",
                oracle[k].pair.0, oracle[k].pair.1
            ),
            vec![ej(ctx, &oracle[k].element), ej(ctx, &r)],
        ),
    });
    report
}

/// Full set: cardinalities plus [`check_g_hat`].
pub fn verify_groebner_g_hat(ctx: &ModuleContext) -> VerificationReport {
    let c = ctx.params();
    let set = SyzygySet::build(ctx);
    let (ea, eb, el) = SyzygySet::expected_counts(c.p, c.b);
    let mut report = VerificationReport::new();
    let got = (set.a.len(), set.b.len(), set.l.len());
    report.push(if got == (ea, eb, el) {
        CheckResult::pass(
            "g_hat_cardinality",
            c,
            format!("|A|={ea} |B|={eb} |L|={el} total {}", ea + eb + el),
        )
    } else {
        CheckResult::fail(
            "g_hat_cardinality",
            c,
            format!("got {got:?}, expected {:?}", (ea, eb, el)),
            vec![],
        )
    });
    let members: Vec<(SyzygyLabel, ModuleElement)> = set
        .labelled()
        .into_iter()
        .map(|(l, h)| (l, h.clone()))
        .collect();
    report.extend(check_g_hat(ctx, &members));
    report
}

/// Coefficient monomials with every exponent at most `cap` and zero exponent
/// on the variables listed in `forbidden` (`0` is `X_0`).
fn bounded_monomials(ctx: &ModuleContext, cap: u32, forbidden: &[usize]) -> Vec<Monomial> {
    let r = ctx.ring();
    let n = r.nvars();
    let blocked: Vec<usize> = forbidden.iter().map(|&k| r.slot(k)).collect();
    let free: Vec<usize> = (0..n).filter(|s| !blocked.contains(s)).collect();
    let mut out = Vec::new();
    let mut e = vec![0u32; free.len()];
    loop {
        let mut exps = vec![0u32; n];
        for (k, &s) in free.iter().enumerate() {
            exps[s] = e[k];
        }
        out.push(r.monomial(exps));
        let mut k = 0;
        loop {
            if k == free.len() {
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

/// The monomial shapes that cannot lead a relation (`X_0^n Psi`, `X_0^n X_i
/// Psi(b,p-b)`, `X_p^n X_i Psi(b,p-b)`, and `X^alpha Phi(i,j)` with no
/// `X_l`, `0 < l < j`, dividing `X^alpha`) enumerated up to `bound`, each
/// checked to lie outside the leading-term module of the closed-form set.
pub fn verify_excluded_leading_forms(ctx: &ModuleContext, bound: u32) -> VerificationReport {
    let c = ctx.params();
    let r = ctx.ring();
    let (p, b) = (c.p, c.b);
    let top = BasisSymbol::Psi(p - b);
    let lts: Vec<_> = SyzygySet::build(ctx)
        .elements()
        .iter()
        .map(|h| h.lead().unwrap().0.clone())
        .collect();

    let mut family: Vec<(&'static str, super::ModuleTerm)> = Vec::new();
    for n in 0..=bound {
        for j in 0..=p - b {
            family.push((
                "X0^n Psi(b,i)",
                ctx.term(r.var_pow(0, n), BasisSymbol::Psi(j)),
            ));
        }
        for i in 0..=p {
            family.push((
                "X0^n Xi Psi(b,p-b)",
                ctx.term(r.mono(&[(0, n), (i, 1)]), top),
            ));
            family.push((
                "Xp^n Xi Psi(b,p-b)",
                ctx.term(r.mono(&[(p, n), (i, 1)]), top),
            ));
        }
    }
    for j in 1..p {
        let forbidden: Vec<usize> = (1..j).collect();
        let monos = bounded_monomials(ctx, bound, &forbidden);
        for i in 1..=j {
            for m in &monos {
                family.push((
                    "X^alpha Phi(i,j), no X_l | X^alpha for 0<l<j",
                    ctx.term(m.clone(), BasisSymbol::Phi(i, j)),
                ));
            }
        }
    }

    let hit = par::find_first(&family, |(name, t)| {
        lts.iter()
            .find(|l| l.divides(t))
            .map(|l| (*name, l.clone()))
    });
    let mut report = VerificationReport::new();
    report.push(match hit {
        None => CheckResult::pass(
            "excluded_leading_forms",
            c,
            format!(
                "{} family members, bound {bound}, none in <LT(G-hat)>",
                family.len()
            ),
        ),
        Some((k, (name, l))) => {
            let mut f = ModuleElement::zero();
            f.add_term(family[k].1.clone(), Coeff::one());
            let mut g = ModuleElement::zero();
            g.add_term(l, Coeff::one());
            CheckResult::fail(
                "excluded_leading_forms",
                c,
                format!("{} ({name}) is divisible by a leading term", family[k].1),
                vec![ej(ctx, &f), ej(ctx, &g)],
            )
        }
    });
    report
}

/// `image_monomial(F) = LM(phi(F))` for `samples` random single-term elements
/// (exponents in `[0, 4]`, uniform symbol), seeded for reproducibility.
pub fn verify_image_monomial_leads(
    ctx: &ModuleContext,
    samples: usize,
    seed: u64,
) -> VerificationReport {
    let c = ctx.params();
    let r = ctx.ring();
    let symbols = BasisSymbol::all(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms: Vec<(Monomial, BasisSymbol)> = (0..samples)
        .map(|_| {
            let exps = (0..r.nvars()).map(|_| rng.gen_range(0..=4)).collect();
            (r.monomial(exps), symbols[rng.gen_range(0..symbols.len())])
        })
        .collect();
    let bad = par::find_first(&terms, |(m, s)| {
        let mut f = ModuleElement::zero();
        f.add_term(ctx.term(m.clone(), *s), Coeff::one());
        let img = ctx.ideal_image(&f);
        let lm = img.lead().map(|(x, _)| x.clone());
        (lm.as_ref() != Some(&ctx.image_monomial(m, *s))).then_some(f)
    });
    let mut report = VerificationReport::new();
    report.push(match bad {
        None => CheckResult::pass(
            "image_monomial_leads",
            c,
            format!("{samples} random terms, seed {seed}"),
        ),
        Some((_, f)) => CheckResult::fail(
            "image_monomial_leads",
            c,
            "image_monomial differs from the leading monomial of the image",
            vec![ej(ctx, &f)],
        ),
    });
    report
}
