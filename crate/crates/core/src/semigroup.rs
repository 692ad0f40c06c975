//! Curve parameters and the numerical semigroup they generate.
//!
//! The generators form the arithmetic sequence `m_i = m0 + i*d` for
//! `i in [0, p]`, with `m0 = a*p + b`, `a >= 1` and `b in [1, p]`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveParams {
    pub p: usize,
    pub m0: u64,
    pub d: u64,
    pub a: u64,
    pub b: usize,
    /// `m_0, ..., m_p`, strictly increasing.
    pub generators: Vec<u64>,
}

/// A relation `top * m_p = base * m_0 + m_index` (or the mirrored one for
/// multiples of `m_0`), as found by search or predicted in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleRelation {
    /// Multiplier of `m_p`.
    pub top: u64,
    /// Multiplier of `m_0`.
    pub base: u64,
    pub index: usize,
}

impl CurveParams {
    /// Validates `(m0, d, p)` and derives `a`, `b` with `m0 = a*p + b`, `b in [1, p]`.
    pub fn new(m0: u64, d: u64, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::Hypothesis(format!("p must be at least 2, got {p}")));
        }
        if d == 0 {
            return Err(Error::Hypothesis("d must be at least 1".into()));
        }
        if m0 == 0 {
            return Err(Error::Hypothesis("m0 must be positive".into()));
        }
        let gcd = m0.gcd(&d);
        if gcd != 1 {
            return Err(Error::Gcd { m0, d, gcd });
        }
        let pp = p as u64;
        let a = (m0 - 1) / pp;
        let b = (m0 - a * pp) as usize;
        debug_assert!((1..=p).contains(&b));
        if a < 1 {
            return Err(Error::Hypothesis(format!(
                "m0 = {m0} must exceed p = {p} (a = floor((m0-1)/p) must be >= 1)"
            )));
        }
        let generators: Vec<u64> = (0..=pp).map(|i| m0 + i * d).collect();
        for index in 0..=p {
            let others: Vec<u64> = generators
                .iter()
                .enumerate()
                .map(|(k, &g)| if k == index { 0 } else { g })
                .collect();
            if let Some(representation) = representation_over(&others, generators[index]) {
                return Err(Error::NotMinimal {
                    index,
                    value: generators[index],
                    representation,
                });
            }
        }
        Ok(CurveParams {
            p,
            m0,
            d,
            a,
            b,
            generators,
        })
    }

    /// `m_i`.
    pub fn generator(&self, i: usize) -> u64 {
        self.generators[i]
    }

    pub fn top(&self) -> u64 {
        self.generators[self.p]
    }

    /// Whether `x` lies in the semigroup generated by `m_0..m_p`.
    pub fn contains(&self, x: u64) -> bool {
        self.representation(x).is_some()
    }

    /// One way of writing `x` as a non-negative combination of `m_0..m_p`.
    pub fn representation(&self, x: u64) -> Option<Vec<u64>> {
        representation_over(&self.generators, x)
    }

    /// Weight of a monomial: `sum alpha_i * m_i` over `X_1..X_p, X_0`.
    pub fn weight(&self, mono: &Monomial) -> u64 {
        let exps = mono.exponents();
        assert_eq!(exps.len(), self.p + 1, "monomial has wrong arity");
        (1..=self.p)
            .map(|i| exps[i - 1] as u64 * self.generators[i])
            .sum::<u64>()
            + exps[self.p] as u64 * self.m0
    }

    /// Generator weights in monomial storage order `X_1, ..., X_p, X_0`.
    pub fn storage_weights(&self) -> Vec<u64> {
        (1..=self.p)
            .map(|i| self.generators[i])
            .chain(std::iter::once(self.m0))
            .collect()
    }

    /// Smallest `top >= 1` such that `top * m_p = base * m_0 + m_index` with
    /// `base >= 1` and `0 <= index < p`, found by exhaustive search.
    pub fn min_multiple_of_top(&self) -> MultipleRelation {
        let (m0, mp) = (self.m0, self.top());
        // top = m0, base = m_p - 1, index = 0 always solves it, so the scan is bounded.
        for top in 1..=m0 {
            let lhs = top * mp;
            for index in 0..self.p {
                let mi = self.generators[index];
                if lhs <= mi {
                    continue;
                }
                let rest = lhs - mi;
                if rest.is_multiple_of(m0) && rest / m0 >= 1 {
                    return MultipleRelation {
                        top,
                        base: rest / m0,
                        index,
                    };
                }
            }
        }
        unreachable!("top = m0 always yields a relation")
    }

    /// Smallest `base >= 1` such that `base * m_0 = top * m_p + m_index` with
    /// `top >= 1` and `0 < index <= p`, found by exhaustive search.
    pub fn min_multiple_of_base(&self) -> MultipleRelation {
        let (m0, mp) = (self.m0, self.top());
        // base = m_p, top = m0 - 1, index = p always solves it.
        for base in 1..=mp {
            let lhs = base * m0;
            for index in 1..=self.p {
                let mi = self.generators[index];
                if lhs <= mi {
                    continue;
                }
                let rest = lhs - mi;
                if rest.is_multiple_of(mp) && rest / mp >= 1 {
                    return MultipleRelation {
                        top: rest / mp,
                        base,
                        index,
                    };
                }
            }
        }
        unreachable!("base = m_p always yields a relation")
    }

    /// Closed-form prediction for [`Self::min_multiple_of_top`]: `(a+1, a+d, p-b)`.
    pub fn predicted_top_relation(&self) -> MultipleRelation {
        MultipleRelation {
            top: self.a + 1,
            base: self.a + self.d,
            index: self.p - self.b,
        }
    }

    /// The candidate closed form `base = a+d, top = a, index = b` for
    /// [`Self::min_multiple_of_base`].
    ///
    /// It never holds: `a*m_p + m_b = (a+d+1)*m_0`, so the search finds
    /// `base = a+d+1`. Kept so callers can compare.
    pub fn a_plus_d_base_relation(&self) -> MultipleRelation {
        MultipleRelation {
            top: self.a,
            base: self.a + self.d,
            index: self.b,
        }
    }

    /// The base relation that actually holds at the minimum:
    /// `(a+d+1)*m_0 = a*m_p + m_b`.
    pub fn derived_base_relation(&self) -> MultipleRelation {
        MultipleRelation {
            top: self.a,
            base: self.a + self.d + 1,
            index: self.b,
        }
    }

    pub fn relation_holds_top(&self, r: &MultipleRelation) -> bool {
        r.index < self.p && r.top * self.top() == r.base * self.m0 + self.generators[r.index]
    }

    pub fn relation_holds_base(&self, r: &MultipleRelation) -> bool {
        (1..=self.p).contains(&r.index)
            && r.base * self.m0 == r.top * self.top() + self.generators[r.index]
    }
}

/// Dynamic programme over `[0, x]`: `last[v]` records the generator used to
/// reach `v` first. Zero entries in `gens` are ignored.
pub fn representation_over(gens: &[u64], x: u64) -> Option<Vec<u64>> {
    let n = x as usize;
    let mut last: Vec<Option<usize>> = vec![None; n + 1];
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for v in 1..=n {
        for (k, &g) in gens.iter().enumerate() {
            let g = g as usize;
            if g != 0 && g <= v && reach[v - g] {
                reach[v] = true;
                last[v] = Some(k);
                break;
            }
        }
    }
    if !reach[n] {
        return None;
    }
    let mut witness = vec![0u64; gens.len()];
    let mut v = n;
    while v > 0 {
        let k = last[v].expect("reachable value has a back-pointer");
        witness[k] += 1;
        v -= gens[k] as usize;
    }
    Some(witness)
}
