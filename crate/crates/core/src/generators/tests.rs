use super::*;
use crate::polyring::curve_image;
use crate::semigroup::CurveParams;

fn ctx(m0: u64, d: u64, p: usize) -> OrderContext {
    OrderContext::new(CurveParams::new(m0, d, p).unwrap())
}

#[test]
fn capped_sum_and_wrap_offset() {
    assert_eq!((capped_sum(1, 2, 3), wrap_offset(1, 2, 3)), (3, 3));
    assert_eq!((capped_sum(1, 1, 3), wrap_offset(1, 1, 3)), (2, 0));
    assert_eq!(capped_sum(0, 0, 3), 0);
}

#[test]
fn phi_examples() {
    let c = ctx(7, 1, 3);
    assert_eq!(
        build_phi(&c, 1, 2).unwrap(),
        c.binomial(c.mono(&[(1, 1), (2, 1)]), c.mono(&[(3, 1), (0, 1)]))
    );
    assert_eq!(
        build_phi(&c, 1, 1).unwrap(),
        c.binomial(c.mono(&[(1, 2)]), c.mono(&[(2, 1), (0, 1)]))
    );
    assert_eq!(
        build_phi(&c, 2, 2).unwrap(),
        c.binomial(c.mono(&[(2, 2)]), c.mono(&[(3, 1), (1, 1)]))
    );
    assert_eq!(build_phi(&c, 2, 1).unwrap(), build_phi(&c, 1, 2).unwrap());
    assert!(matches!(
        build_phi(&c, 0, 1),
        Err(crate::Error::Index { .. })
    ));
    assert!(matches!(
        build_phi(&c, 1, 3),
        Err(crate::Error::Index { .. })
    ));
}

#[test]
fn psi_examples() {
    let c = ctx(7, 1, 3);
    assert_eq!(
        build_psi(&c, 0).unwrap(),
        c.binomial(c.mono(&[(1, 1), (3, 2)]), c.var_pow(0, 4))
    );
    assert_eq!(
        build_psi(&c, 2).unwrap(),
        c.binomial(c.var_pow(3, 3), c.mono(&[(2, 1), (0, 3)]))
    );
    assert_eq!(
        build_psi(&c, 1).unwrap(),
        c.binomial(c.mono(&[(2, 1), (3, 2)]), c.mono(&[(1, 1), (0, 3)]))
    );
    assert!(matches!(build_psi(&c, 3), Err(crate::Error::Index { .. })));
}

#[test]
fn set_sizes() {
    let c = ctx(7, 1, 3);
    let g = GeneratorSet::build(&c);
    assert_eq!((g.phis.len(), g.psis.len()), (3, 3));
    assert_eq!(g.len(), GeneratorSet::expected_len(3, 1));

    let c = ctx(8, 3, 2);
    let g = GeneratorSet::build(&c);
    assert_eq!(g.len(), 2);
    assert!(g.phis.contains_key(&(1, 1)));
    assert!(g.psis.contains_key(&0));
}

#[test]
fn members_are_homogeneous_and_vanish() {
    for (m0, d, p) in [(7, 1, 3), (8, 3, 2), (13, 3, 5), (11, 2, 4)] {
        let c = ctx(m0, d, p);
        for f in GeneratorSet::build(&c).polys() {
            let w: Vec<u64> = f.monomials().map(|m| c.params().weight(m)).collect();
            assert_eq!(w[0], w[1], "{f}");
            assert!(curve_image(c.params(), &f).is_zero(), "{f}");
        }
        for f in PatilSet::build(&c).polys() {
            assert!(curve_image(c.params(), &f).is_zero(), "{f}");
        }
    }
}

#[test]
fn patil_example() {
    let c = ctx(7, 1, 3);
    let g = PatilSet::build(&c);
    assert_eq!(g.len(), 6);
    let m = &g.members;
    assert_eq!(m[&PatilLabel::Xi(1, 1)], build_phi(&c, 1, 1).unwrap());
    assert_eq!(
        m[&PatilLabel::Phi(0)],
        c.binomial(c.mono(&[(1, 1), (2, 1)]), c.mono(&[(0, 1), (3, 1)]))
    );
    assert_eq!(
        m[&PatilLabel::Phi(1)],
        c.binomial(c.mono(&[(2, 2)]), c.mono(&[(1, 1), (3, 1)]))
    );
    assert_eq!(m[&PatilLabel::Psi(0)], build_psi(&c, 0).unwrap());
    assert_eq!(m[&PatilLabel::Psi(1)], build_psi(&c, 1).unwrap());
    assert_eq!(m[&PatilLabel::Theta], build_psi(&c, 2).unwrap());
}

#[test]
fn patil_identities() {
    for (m0, d, p) in [(13, 3, 5), (11, 2, 4), (16, 1, 6)] {
        let c = ctx(m0, d, p);
        let g = PatilSet::build(&c).members;
        for i in 0..=p - 2 {
            assert_eq!(g[&PatilLabel::Phi(i)], build_phi(&c, i + 1, p - 1).unwrap());
        }
        for j in 1..p - 1 {
            for i in 1..=j {
                let xi = &g[&PatilLabel::Xi(i, j)];
                let phi = build_phi(&c, i, j).unwrap();
                if i + j < p {
                    assert_eq!(xi, &phi);
                } else {
                    let shifted = &g[&PatilLabel::Phi(i + j - p)];
                    assert!((&(xi + shifted) - &phi).is_zero());
                }
            }
        }
    }
}

#[test]
fn verification_passes() {
    for (m0, d, p) in [(7, 1, 3), (8, 3, 2)] {
        let c = ctx(m0, d, p);
        let r = verify_groebner_g_prime(&c);
        assert!(r.passed(), "{r:?}");
        let r = verify_minimality(&c);
        assert!(r.passed(), "{r:?}");
    }
    let r = verify_ideal_equality(&ctx(13, 3, 5));
    assert!(r.passed(), "{r:?}");
    assert_eq!(
        r.get("patil_cardinality").unwrap().detail,
        "|G| = |G'| = 13"
    );
}

#[test]
fn adding_a_multiple_breaks_minimality() {
    let c = ctx(7, 1, 3);
    let mut polys = GeneratorSet::build(&c).polys();
    assert!(lt_antichain_violation(&polys).is_none());
    let extra = &build_phi(&c, 1, 1).unwrap() * &c.poly_from_monomial(c.var(1));
    polys.push(extra);
    let (k, l) = lt_antichain_violation(&polys).expect("violation");
    assert!(k == polys.len() - 1 || l == polys.len() - 1);
}

#[test]
fn standard_monomials() {
    let c = ctx(7, 1, 3);
    let r = verify_standard_monomials(&c, 6);
    assert!(r.passed(), "{r:?}");
    let r = verify_standard_monomials(&c, 8);
    assert!(r.passed(), "{r:?}");
    // a = 2 makes the top-power family nonempty
    let r = verify_standard_monomials(&ctx(9, 2, 3), 5);
    assert!(r.passed(), "{r:?}");
}
