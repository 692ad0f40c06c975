//! S-polynomials and a plain Buchberger engine, used as the independent
//! oracle for the closed-form bases.

use super::division::{normal_form, reduce};
use super::{Coeff, Monomial, OrderContext, Polynomial};
use crate::par;

/// The cofactor `(lcm / LM(f)) / LC(f)` that lifts `f` to the common multiple.
fn cofactor(ctx: &OrderContext, f: &Polynomial, g: &Polynomial) -> (Coeff, Monomial) {
    let (fm, fc) = f.lead().expect("non-zero operand");
    let (gm, _) = g.lead().expect("non-zero operand");
    let l = ctx.lcm(fm, gm);
    let m = l.checked_div(fm).expect("lcm is a multiple");
    (fc.recip(), m)
}

pub fn s_polynomial(ctx: &OrderContext, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (cf, mf) = cofactor(ctx, f, g);
    let (cg, mg) = cofactor(ctx, g, f);
    let mut s = Polynomial::zero(f.nvars());
    s.add_scaled(&cf, &mf, f);
    s.add_scaled(&-cg, &mg, g);
    s
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted
/// by descending leading monomial. Pairs with coprime leading monomials are
/// skipped. Each round reduces the pending S-pairs concurrently against a
/// snapshot of the basis; the reduced basis is unique, so the schedule does
/// not affect the result.
pub fn buchberger(ctx: &OrderContext, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(Polynomial::monic)
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while !pairs.is_empty() {
        let batch = std::mem::take(&mut pairs);
        let snapshot = basis.clone();
        let remainders = par::map(&batch, |&(i, j)| {
            let (fi, fj) = (&snapshot[i], &snapshot[j]);
            let (mi, _) = fi.lead()?;
            let (mj, _) = fj.lead()?;
            if mi.is_coprime(mj) {
                return None;
            }
            let r = reduce(&s_polynomial(ctx, fi, fj), &snapshot);
            (!r.is_zero()).then_some(r)
        });
        for r in remainders.into_iter().flatten() {
            let r = reduce(&r, &basis);
            if r.is_zero() {
                continue;
            }
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    reduce_basis(basis)
}

/// Turns a Gröbner basis into the reduced one: drop elements whose leading
/// monomial is a multiple of another's, then fully reduce the tails.
pub fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|f, g| f.lead().unwrap().0.cmp(g.lead().unwrap().0));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.lead().unwrap().0;
        if kept.iter().all(|h| !h.lead().unwrap().0.divides(lm)) {
            kept.push(g.monic());
        }
    }
    let reduced: Vec<Polynomial> = (0..kept.len())
        .map(|k| {
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, h)| h.clone())
                .collect();
            reduce(&kept[k], &others).monic()
        })
        .collect();
    let mut out = reduced;
    out.sort_by(|f, g| g.lead().unwrap().0.cmp(f.lead().unwrap().0));
    out
}

/// Relation among basis elements obtained from one S-pair: when `remainder`
/// is zero, `sum coefficients[k] * basis[k] = 0`.
#[derive(Debug, Clone)]
pub struct PairSyzygy {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Reduces the S-polynomial of every pair `i < j` (coprime pairs included)
/// and records the resulting coefficient vector.
pub fn pair_syzygies(ctx: &OrderContext, basis: &[Polynomial]) -> Vec<PairSyzygy> {
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    par::map(&pairs, |&(i, j)| {
        let (ci, mi) = cofactor(ctx, &basis[i], &basis[j]);
        let (cj, mj) = cofactor(ctx, &basis[j], &basis[i]);
        let s = s_polynomial(ctx, &basis[i], &basis[j]);
        let div = normal_form(&s, basis);
        let mut coefficients: Vec<Polynomial> = div.quotients.iter().map(|q| -q).collect();
        coefficients[i].add_term(mi, ci);
        coefficients[j].add_term(mj, -cj);
        PairSyzygy {
            i,
            j,
            coefficients,
            remainder: div.remainder,
        }
    })
}

/// First pair `(i, j)` whose S-polynomial does not reduce to zero modulo
/// `basis`, with that remainder.
pub fn first_nonreducing_pair(
    ctx: &OrderContext,
    basis: &[Polynomial],
) -> Option<((usize, usize), Polynomial)> {
    let n = basis.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    par::find_first(&pairs, |&(i, j)| {
        let r = reduce(&s_polynomial(ctx, &basis[i], &basis[j]), basis);
        (!r.is_zero()).then_some(r)
    })
    .map(|(k, r)| (pairs[k], r))
}
