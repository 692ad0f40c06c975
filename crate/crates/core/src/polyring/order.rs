use std::cmp::Ordering;

use num_traits::One;

use super::{Coeff, Monomial, Polynomial};
use crate::semigroup::CurveParams;

/// Everything needed to build and compare monomials of
/// `K[X_1, ..., X_p, X_0]` for one curve.
#[derive(Debug, Clone)]
pub struct OrderContext {
    params: CurveParams,
    weights: Vec<u64>,
}

impl OrderContext {
    pub fn new(params: CurveParams) -> Self {
        let weights = params.storage_weights();
        OrderContext { params, weights }
    }

    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn nvars(&self) -> usize {
        self.params.p + 1
    }

    /// Storage slot of `X_k` (`X_0` is stored last).
    pub fn slot(&self, k: usize) -> usize {
        assert!(k <= self.params.p, "variable X_{k} out of range");
        if k == 0 {
            self.params.p
        } else {
            k - 1
        }
    }

    pub fn monomial(&self, exps: Vec<u32>) -> Monomial {
        assert_eq!(exps.len(), self.nvars(), "monomial has wrong arity");
        let weight = exps
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as u64 * w)
            .sum();
        Monomial::from_parts(exps, weight)
    }

    pub fn one(&self) -> Monomial {
        self.monomial(vec![0; self.nvars()])
    }

    /// `X_k^e`.
    pub fn var_pow(&self, k: usize, e: u32) -> Monomial {
        let mut exps = vec![0; self.nvars()];
        exps[self.slot(k)] = e;
        self.monomial(exps)
    }

    pub fn var(&self, k: usize) -> Monomial {
        self.var_pow(k, 1)
    }

    /// Product of `X_k^e` over `(k, e)` pairs, with `k = 0` meaning `X_0`.
    pub fn mono(&self, factors: &[(usize, u32)]) -> Monomial {
        let mut exps = vec![0; self.nvars()];
        for &(k, e) in factors {
            exps[self.slot(k)] += e;
        }
        self.monomial(exps)
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        self.monomial(
            a.exponents()
                .iter()
                .zip(b.exponents())
                .map(|(x, y)| *x.max(y))
                .collect(),
        )
    }

    /// Compares two monomials from their exponents alone, recomputing weights
    /// from the curve parameters.
    pub fn cmp(&self, f: &Monomial, g: &Monomial) -> Ordering {
        let wf = self.params.weight(f);
        let wg = self.params.weight(g);
        if wf != wg {
            return wf.cmp(&wg);
        }
        let diff = f
            .exponents()
            .iter()
            .zip(g.exponents())
            .map(|(&x, &y)| x as i64 - y as i64)
            .rev()
            .find(|&v| v != 0);
        match diff {
            None => Ordering::Equal,
            Some(v) if v < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn binomial(&self, plus: Monomial, minus: Monomial) -> Polynomial {
        let mut f = Polynomial::zero(self.nvars());
        f.add_term(plus, Coeff::one());
        f.add_term(minus, -Coeff::one());
        f
    }

    pub fn poly_from_monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::from_terms(self.nvars(), vec![(m, Coeff::one())])
    }
}
