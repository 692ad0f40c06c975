use std::cmp::Ordering;

use num_traits::One;

use super::*;
use crate::polyring::{Coeff, Monomial};
use crate::semigroup::CurveParams;

fn mctx(m0: u64, d: u64, p: usize) -> ModuleContext {
    ModuleContext::new(CurveParams::new(m0, d, p).unwrap())
}

/// Element from `(coefficient, monomial, symbol)` triples.
fn elem(ctx: &ModuleContext, parts: &[(i64, Monomial, BasisSymbol)]) -> ModuleElement {
    let mut h = ModuleElement::zero();
    for (c, m, s) in parts {
        h.add_term(ctx.term(m.clone(), *s), Coeff::from_integer((*c).into()));
    }
    h
}

#[test]
fn zero_convention() {
    let c = CurveParams::new(7, 1, 3).unwrap();
    assert_eq!(BasisSymbol::phi(&c, 2, 1), Some(BasisSymbol::Phi(1, 2)));
    assert_eq!(BasisSymbol::phi(&c, 3, 1), None);
    assert_eq!(BasisSymbol::phi(&c, 0, 2), None);
    assert_eq!(BasisSymbol::phi(&c, -1, 2), None);
    assert!(BasisSymbol::psi(&c, 2).is_ok());
    assert!(BasisSymbol::psi(&c, 3).is_err());
    assert_eq!(BasisSymbol::all(&c).len(), 6);
}

#[test]
fn phi_map_examples() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    let h = elem(
        &ctx,
        &[
            (1, r.var(3), BasisSymbol::Psi(0)),
            (-1, r.var(1), BasisSymbol::Psi(2)),
            (-1, r.var_pow(0, 3), BasisSymbol::Phi(1, 2)),
        ],
    );
    assert!(ctx.ideal_image(&h).is_zero());

    let single = elem(&ctx, &[(1, r.one(), BasisSymbol::Psi(0))]);
    assert_eq!(&ctx.ideal_image(&single), ctx.image_of(BasisSymbol::Psi(0)));

    // Koszul relation between phi(1,2) and psi(1,2)
    let phi = ctx.image_of(BasisSymbol::Phi(1, 2)).clone();
    let psi = ctx.image_of(BasisSymbol::Psi(2)).clone();
    let koszul = ctx.element_from_components([
        (BasisSymbol::Psi(2), &phi),
        (BasisSymbol::Phi(1, 2), &-&psi),
    ]);
    assert_eq!(koszul.len(), 4);
    assert!(ctx.ideal_image(&koszul).is_zero());
}

#[test]
fn image_monomial_examples() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    assert_eq!(
        ctx.image_monomial(&r.one(), BasisSymbol::Psi(0)),
        r.mono(&[(1, 1), (3, 2)])
    );
    assert_eq!(
        ctx.image_monomial(&r.var(0), BasisSymbol::Phi(1, 2)),
        r.mono(&[(0, 1), (1, 1), (2, 1)])
    );
    let f = elem(&ctx, &[(1, r.var(2), BasisSymbol::Psi(1))]);
    assert_eq!(
        ctx.ideal_image(&f).leading_monomial().unwrap(),
        &ctx.image_monomial(&r.var(2), BasisSymbol::Psi(1))
    );
}

#[test]
fn module_order_examples() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    let (x3, x1, x0c) = (r.var(3), r.var(1), r.var_pow(0, 3));
    let t1 = (&x3, BasisSymbol::Psi(0));
    let t2 = (&x1, BasisSymbol::Psi(2));
    assert_eq!(ctx.cmp_m(t1, t2), Ordering::Greater);
    assert_eq!(ctx.cmp_m(t2, t1), Ordering::Less);

    let t3 = (&x0c, BasisSymbol::Phi(1, 2));
    assert_eq!(ctx.image_monomial(t3.0, t3.1).weight(), 38);
    assert_eq!(ctx.image_monomial(t2.0, t2.1).weight(), 38);
    assert_eq!(ctx.cmp_m(t2, t3), Ordering::Greater);

    assert_eq!(ctx.cmp_m(t1, t1), Ordering::Equal);

    // same image, symbol tie-break only
    let (x2, x12) = (r.var(2), r.mono(&[(1, 2)]));
    assert_eq!(
        ctx.cmp_m((&x2, BasisSymbol::Phi(1, 1)), (&x1, BasisSymbol::Phi(1, 2))),
        Ordering::Less
    );
    assert_eq!(
        ctx.cmp_m(
            (&x12, BasisSymbol::Phi(2, 2)),
            (&x1, BasisSymbol::Phi(1, 2))
        ),
        ctx.term(x12.clone(), BasisSymbol::Phi(2, 2))
            .cmp(&ctx.term(x1.clone(), BasisSymbol::Phi(1, 2)))
    );
}

#[test]
fn cmp_m_agrees_with_term_ord() {
    let ctx = mctx(11, 2, 4);
    let r = ctx.ring();
    let syms = BasisSymbol::all(ctx.params());
    let monos: Vec<Monomial> = (0..=r.params().p)
        .flat_map(|k| [r.one(), r.var(k), r.var_pow(k, 2)])
        .collect();
    for m1 in &monos {
        for m2 in &monos {
            for &s1 in &syms {
                for &s2 in &syms {
                    let a = ctx.term(m1.clone(), s1);
                    let b = ctx.term(m2.clone(), s2);
                    assert_eq!(ctx.cmp_m((m1, s1), (m2, s2)), a.cmp(&b));
                }
            }
        }
    }
}

#[test]
fn a_example() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    let expected = elem(
        &ctx,
        &[
            (1, r.var(3), BasisSymbol::Psi(0)),
            (-1, r.var(1), BasisSymbol::Psi(2)),
            (-1, r.var_pow(0, 3), BasisSymbol::Phi(1, 2)),
        ],
    );
    let a = ctx.build_a(3, 0).unwrap();
    assert_eq!(a, expected);
    assert_eq!(
        a.lead().unwrap().0,
        &ctx.term(r.var(3), BasisSymbol::Psi(0))
    );
    assert!(ctx.build_a(4, 0).is_err());
    assert!(ctx.build_a(1, 2).is_err());
}

#[test]
fn b_example() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    let expected = elem(
        &ctx,
        &[
            (1, r.mono(&[(1, 1), (2, 1)]), BasisSymbol::Psi(2)),
            (-1, r.mono(&[(3, 1), (0, 1)]), BasisSymbol::Psi(2)),
            (-1, r.var_pow(3, 3), BasisSymbol::Phi(1, 2)),
            (1, r.mono(&[(2, 1), (0, 3)]), BasisSymbol::Phi(1, 2)),
        ],
    );
    assert_eq!(ctx.build_b(1, 2).unwrap(), expected);
    assert_eq!(ctx.build_b(2, 1).unwrap(), expected);
    assert!(ctx.build_b(0, 1).is_err());
}

#[test]
fn l_example() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    let expected = elem(
        &ctx,
        &[
            (1, r.var(1), BasisSymbol::Phi(2, 2)),
            (-1, r.var(2), BasisSymbol::Phi(1, 2)),
            (1, r.var(3), BasisSymbol::Phi(1, 1)),
        ],
    );
    let l = ctx.build_l(1, 2, 2).unwrap();
    assert_eq!(l, expected);
    assert!(ctx.ideal_image(&l).is_zero());
    assert!(ctx.build_l(2, 2, 2).is_err());
    assert!(ctx.build_l(1, 2, 1).is_err());
}

#[test]
fn set_counts() {
    let ctx = mctx(7, 1, 3);
    let s = SyzygySet::build(&ctx);
    assert_eq!((s.a.len(), s.b.len(), s.l.len()), (6, 3, 2));
    assert_eq!(SyzygySet::expected_counts(3, 1), (6, 3, 2));
    assert_eq!(s.len(), 11);

    let s = SyzygySet::build(&mctx(8, 3, 2));
    assert_eq!((s.a.len(), s.b.len(), s.l.len()), (0, 1, 0));

    let ctx = mctx(13, 3, 5);
    let s = SyzygySet::build(&ctx);
    assert_eq!(
        (s.a.len(), s.b.len(), s.l.len()),
        SyzygySet::expected_counts(5, 3)
    );
    for (label, h) in s.labelled() {
        assert!(ctx.ideal_image(h).is_zero(), "{label}");
        assert_eq!(
            h.lead().unwrap().0,
            &ctx.designated_leading_term(label),
            "{label}"
        );
    }
}

#[test]
fn normal_form_examples() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    let a = ctx.build_a(3, 0).unwrap();
    let div = module_normal_form(&ctx, &a, std::slice::from_ref(&a));
    assert!(div.remainder.is_zero());
    assert_eq!(div.quotients[0], r.poly_from_monomial(r.one()));

    let basis = SyzygySet::build(&ctx).elements();
    let shifted = a.scale_by_term(&Coeff::one(), &r.var(0));
    assert!(module_normal_form(&ctx, &shifted, &basis)
        .remainder
        .is_zero());

    for s in schreyer_syzygies(&ctx) {
        assert!(s.complete);
        assert!(module_normal_form(&ctx, &s.element, &basis)
            .remainder
            .is_zero());
    }

    // a lone generator is not a relation and stays irreducible
    let lone = elem(&ctx, &[(1, r.var_pow(0, 2), BasisSymbol::Psi(0))]);
    assert_eq!(module_normal_form(&ctx, &lone, &basis).remainder, lone);
}

#[test]
fn s_vectors() {
    let ctx = mctx(7, 1, 3);
    let a30 = ctx.build_a(3, 0).unwrap();
    let a20 = ctx.build_a(2, 0).unwrap();
    let l = ctx.build_l(1, 2, 2).unwrap();
    assert!(s_vector(&ctx, &a30, &l).is_none());
    let s = s_vector(&ctx, &a30, &a20).expect("same symbol");
    assert!(ctx.ideal_image(&s).is_zero());
    assert!(s_vector(&ctx, &a30, &a30).unwrap().is_zero());
}

#[test]
fn verification_passes() {
    for (m0, d, p) in [(7, 1, 3), (8, 3, 2), (13, 3, 5)] {
        let ctx = mctx(m0, d, p);
        let r = verify_groebner_g_hat(&ctx);
        assert!(r.passed(), "{r:?}");
    }
    let ctx = mctx(7, 1, 3);
    assert!(verify_excluded_leading_forms(&ctx, 5).passed());
    assert!(verify_image_monomial_leads(&ctx, 200, 1).passed());
}

#[test]
fn excluded_form_instances() {
    let ctx = mctx(7, 1, 3);
    let r = ctx.ring();
    let lts: Vec<ModuleTerm> = SyzygySet::build(&ctx)
        .elements()
        .iter()
        .map(|h| h.lead().unwrap().0.clone())
        .collect();
    let x0sq = ctx.term(r.var_pow(0, 2), BasisSymbol::Psi(0));
    let x2cube = ctx.term(r.var_pow(2, 3), BasisSymbol::Phi(1, 2));
    assert!(lts.iter().all(|l| !l.divides(&x0sq)));
    assert!(lts.iter().all(|l| !l.divides(&x2cube)));
}

#[test]
fn dropping_a_member_breaks_completeness() {
    let ctx = mctx(7, 1, 3);
    let set = SyzygySet::build(&ctx);
    let members: Vec<(SyzygyLabel, ModuleElement)> = set
        .labelled()
        .into_iter()
        .filter(|(label, _)| *label != SyzygyLabel::L { l: 1, i: 2, j: 2 })
        .map(|(label, h)| (label, h.clone()))
        .collect();
    assert_eq!(members.len(), 10);
    let report = check_g_hat(&ctx, &members);
    let c = report.get("g_hat_completeness").unwrap();
    assert!(!c.passed());
    assert!(c.witness.as_ref().is_some_and(|w| !w.is_empty()));
    assert!(report.get("g_hat_kernel").unwrap().passed());
}

#[test]
fn json_round_trip() {
    let ctx = mctx(7, 1, 3);
    let b = ctx.build_b(1, 2).unwrap();
    let js = ctx.element_to_json(&b);
    let text = serde_json::to_string(&js).unwrap();
    assert!(text.contains(r#""basis":{"kind":"Psi","j":2}"#));
    let back: Vec<ModuleTermJson> = serde_json::from_str(&text).unwrap();
    assert_eq!(ctx.element_from_json(&back).unwrap(), b);
}

#[test]
fn display() {
    let ctx = mctx(7, 1, 3);
    assert_eq!(SyzygyLabel::A { i: 3, j: 0 }.to_string(), "A(3;b,0)");
    assert_eq!(BasisSymbol::Phi(1, 2).to_string(), "Phi(1,2)");
    let l = ctx.build_l(1, 2, 2).unwrap();
    assert!(l.to_string().contains("Phi(2,2)"));
}
