use std::cmp::Ordering;

use monocurve::generators::GeneratorSet;
use monocurve::polyring::serial::poly_to_json;
use monocurve::polyring::{curve_image, normal_form, Coeff, Monomial, OrderContext, Polynomial};
use monocurve::syzygy::{BasisSymbol, ModuleContext, ModuleElement, SyzygySet};
use monocurve::CurveParams;
use num_traits::One;
use proptest::prelude::*;

const TRIPLES: &[(u64, u64, usize)] = &[
    (7, 1, 3),
    (8, 3, 2),
    (9, 2, 3),
    (11, 2, 4),
    (13, 3, 5),
    (5, 4, 2),
];

fn params() -> impl Strategy<Value = CurveParams> {
    prop::sample::select(TRIPLES).prop_map(|(m0, d, p)| CurveParams::new(m0, d, p).unwrap())
}

fn exps(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n)
}

/// Params with three monomials over them.
fn monomial_triple() -> impl Strategy<Value = (OrderContext, Monomial, Monomial, Monomial)> {
    params().prop_flat_map(|c| {
        let n = c.p + 1;
        (Just(c), exps(n, 4), exps(n, 4), exps(n, 4)).prop_map(|(c, x, y, z)| {
            let ctx = OrderContext::new(c);
            let (x, y, z) = (ctx.monomial(x), ctx.monomial(y), ctx.monomial(z));
            (ctx, x, y, z)
        })
    })
}

/// Params with a polynomial of up to six terms with small integer coefficients.
fn polynomial() -> impl Strategy<Value = (OrderContext, Polynomial)> {
    params().prop_flat_map(|c| {
        let n = c.p + 1;
        let terms = prop::collection::vec((exps(n, 3), -5i64..=5), 0..6);
        (Just(c), terms).prop_map(|(c, terms)| {
            let ctx = OrderContext::new(c);
            let f = Polynomial::from_terms(
                ctx.nvars(),
                terms
                    .into_iter()
                    .map(|(e, k)| (ctx.monomial(e), Coeff::from_integer(k.into()))),
            );
            (ctx, f)
        })
    })
}

proptest! {
    #[test]
    fn ring_order_is_a_monomial_order((ctx, x, y, z) in monomial_triple()) {
        let xy = ctx.cmp(&x, &y);
        prop_assert_eq!(xy, x.cmp(&y));
        prop_assert_eq!(xy.reverse(), ctx.cmp(&y, &x));
        prop_assert_eq!(xy == Ordering::Equal, x == y);
        prop_assert_eq!(ctx.cmp(&x.mul(&z), &y.mul(&z)), xy);
        if xy == Ordering::Greater && ctx.cmp(&y, &z) == Ordering::Greater {
            prop_assert_eq!(ctx.cmp(&x, &z), Ordering::Greater);
        }
        if !z.is_one() {
            prop_assert_eq!(ctx.cmp(&x.mul(&z), &x), Ordering::Greater);
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_ideal_preserving((ctx, f) in polynomial()) {
        let basis = GeneratorSet::build(&ctx).polys();
        let div = normal_form(&f, &basis);
        prop_assert_eq!(&normal_form(&div.remainder, &basis).remainder, &div.remainder);
        let lts: Vec<_> = basis.iter().map(|g| g.lead().unwrap().0.clone()).collect();
        for m in div.remainder.monomials() {
            prop_assert!(lts.iter().all(|l| !l.divides(m)));
        }
        // f and its remainder have the same image on the curve
        prop_assert_eq!(curve_image(ctx.params(), &f), curve_image(ctx.params(), &div.remainder));
    }

    #[test]
    fn polynomial_json_round_trips((ctx, f) in polynomial()) {
        let text = serde_json::to_string(&poly_to_json(&f)).unwrap();
        let back = ctx.poly_from_json(&serde_json::from_str::<Vec<_>>(&text).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn image_monomial_is_leading_monomial_of_image(
        (c, e, k) in params().prop_flat_map(|c| {
            let n = c.p + 1;
            let syms = BasisSymbol::all(&c).len();
            (Just(c), exps(n, 6), 0..syms)
        })
    ) {
        let ctx = ModuleContext::new(c);
        let sym = BasisSymbol::all(ctx.params())[k];
        let m = ctx.ring().monomial(e);
        let mut f = ModuleElement::zero();
        f.add_term(ctx.term(m.clone(), sym), Coeff::one());
        let img = ctx.ideal_image(&f);
        prop_assert_eq!(img.leading_monomial().unwrap(), &ctx.image_monomial(&m, sym));
    }

    #[test]
    fn module_order_is_multiplicative(
        (c, x, y, z, s, t) in params().prop_flat_map(|c| {
            let n = c.p + 1;
            let syms = BasisSymbol::all(&c).len();
            (Just(c), exps(n, 3), exps(n, 3), exps(n, 3), 0..syms, 0..syms)
        })
    ) {
        let ctx = ModuleContext::new(c);
        let syms = BasisSymbol::all(ctx.params());
        let r = ctx.ring();
        let (x, y, z) = (r.monomial(x), r.monomial(y), r.monomial(z));
        let (s, t) = (syms[s], syms[t]);
        let before = ctx.cmp_m((&x, s), (&y, t));
        prop_assert_eq!(before, ctx.term(x.clone(), s).cmp(&ctx.term(y.clone(), t)));
        prop_assert_eq!(ctx.cmp_m((&x.mul(&z), s), (&y.mul(&z), t)), before);
        prop_assert_eq!(before == Ordering::Equal, x == y && s == t);
    }

    #[test]
    fn combinations_of_syzygies_are_syzygies(
        (c, picks) in params().prop_flat_map(|c| {
            let n = c.p + 1;
            let term = (exps(n, 2), -3i64..=3);
            (Just(c), prop::collection::vec((any::<prop::sample::Index>(), prop::collection::vec(term, 1..3)), 1..4))
        })
    ) {
        let ctx = ModuleContext::new(c);
        let members = SyzygySet::build(&ctx).elements();
        let r = ctx.ring();
        let mut total = ModuleElement::zero();
        for (idx, terms) in picks {
            let g = idx.get(&members);
            let mult = Polynomial::from_terms(
                r.nvars(),
                terms.into_iter().map(|(e, k)| (r.monomial(e), Coeff::from_integer(k.into()))),
            );
            total = total.add(&g.scale_by_poly(&mult));
        }
        prop_assert!(ctx.ideal_image(&total).is_zero());
    }

    #[test]
    fn module_json_round_trips(
        (c, idx, e) in params().prop_flat_map(|c| {
            let n = c.p + 1;
            (Just(c), any::<prop::sample::Index>(), exps(n, 2))
        })
    ) {
        let ctx = ModuleContext::new(c);
        let members = SyzygySet::build(&ctx).elements();
        let h = idx.get(&members).scale_by_term(&Coeff::new(3.into(), 7.into()), &ctx.ring().monomial(e));
        let text = serde_json::to_string(&ctx.element_to_json(&h)).unwrap();
        let back = ctx.element_from_json(&serde_json::from_str::<Vec<_>>(&text).unwrap()).unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn semigroup_membership_matches_weights(
        (c, e) in params().prop_flat_map(|c| { let n = c.p + 1; (Just(c), exps(n, 5)) })
    ) {
        let ctx = OrderContext::new(c.clone());
        let w = c.weight(&ctx.monomial(e));
        prop_assert!(c.contains(w));
        let rep = c.representation(w).unwrap();
        prop_assert_eq!(rep.iter().zip(&c.generators).map(|(k, m)| k * m).sum::<u64>(), w);
    }
}
