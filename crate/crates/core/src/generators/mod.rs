//! The binomial generating sets of the curve ideal: the closed-form set
//! `G'` of `phi(i,j)` and `psi(b,i)` binomials, and the older set `G`
//! (`xi`, shifted `phi_i`, `psi_{b,j}`, `theta`) it is compared against.

mod verify;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyring::{OrderContext, Polynomial};
use crate::syzygy::BasisSymbol;

pub use verify::{
    check_g_prime, lt_antichain_violation, verify_groebner_g_prime, verify_ideal_equality,
    verify_lt_antichain, verify_minimal_generation, verify_minimality, verify_standard_monomials,
    StandardFamily,
};

/// `i + j` below `p`, else `p`.
pub fn capped_sum(i: usize, j: usize, p: usize) -> usize {
    if i + j < p {
        i + j
    } else {
        p
    }
}

/// `0` below `p`, else `p`.
pub fn wrap_offset(i: usize, j: usize, p: usize) -> usize {
    if i + j < p {
        0
    } else {
        p
    }
}

/// `phi(i,j) = X_i X_j - X_eps X_{i+j-eps}` with `eps = capped_sum(i, j)`.
/// Symmetric in `i, j`.
pub fn build_phi(ctx: &OrderContext, i: usize, j: usize) -> Result<Polynomial> {
    let p = ctx.params().p;
    if !(1..p).contains(&i) || !(1..p).contains(&j) {
        return Err(Error::Index {
            what: "phi",
            detail: format!("({i},{j}) not in [1,{}]^2", p - 1),
        });
    }
    let (i, j) = (i.min(j), i.max(j));
    let e = capped_sum(i, j, p);
    Ok(ctx.binomial(
        ctx.mono(&[(i, 1), (j, 1)]),
        ctx.mono(&[(e, 1), (i + j - e, 1)]),
    ))
}

/// `psi(b,i) = X_{b+i} X_p^a - X_i X_0^{a+d}` for `i in [0, p-b]`.
pub fn build_psi(ctx: &OrderContext, i: usize) -> Result<Polynomial> {
    let c = ctx.params();
    if i > c.p - c.b {
        return Err(Error::Index {
            what: "psi",
            detail: format!("{i} not in [0,{}]", c.p - c.b),
        });
    }
    let (a, d) = (c.a as u32, c.d as u32);
    Ok(ctx.binomial(
        ctx.mono(&[(c.b + i, 1), (c.p, a)]),
        ctx.mono(&[(i, 1), (0, a + d)]),
    ))
}

/// The set `G'`: `phi(i,j)` for `1 <= i <= j <= p-1` and `psi(b,i)` for
/// `i in [0, p-b]`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub phis: BTreeMap<(usize, usize), Polynomial>,
    pub psis: BTreeMap<usize, Polynomial>,
}

impl GeneratorSet {
    pub fn build(ctx: &OrderContext) -> Self {
        let c = ctx.params();
        let mut phis = BTreeMap::new();
        for j in 1..c.p {
            for i in 1..=j {
                phis.insert((i, j), build_phi(ctx, i, j).expect("in range"));
            }
        }
        let psis = (0..=c.p - c.b)
            .map(|i| (i, build_psi(ctx, i).expect("in range")))
            .collect();
        GeneratorSet { phis, psis }
    }

    pub fn len(&self) -> usize {
        self.phis.len() + self.psis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `p(p-1)/2 + (p-b+1)`.
    pub fn expected_len(p: usize, b: usize) -> usize {
        p * (p - 1) / 2 + (p - b + 1)
    }

    /// Members labelled by the module basis symbol they map to; `phi`s first
    /// (by `(i, j)`), then `psi`s.
    pub fn labelled(&self) -> Vec<(BasisSymbol, &Polynomial)> {
        self.phis
            .iter()
            .map(|(&(i, j), f)| (BasisSymbol::Phi(i, j), f))
            .chain(self.psis.iter().map(|(&j, f)| (BasisSymbol::Psi(j), f)))
            .collect()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.labelled()
            .into_iter()
            .map(|(_, f)| f.clone())
            .collect()
    }

    pub fn get(&self, sym: BasisSymbol) -> Option<&Polynomial> {
        match sym {
            BasisSymbol::Phi(i, j) => self.phis.get(&(i, j)),
            BasisSymbol::Psi(j) => self.psis.get(&j),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PatilLabel {
    Xi(usize, usize),
    Phi(usize),
    Psi(usize),
    Theta,
}

/// The set `G` with `Y = X_p`: `xi_{i,j}` (`1 <= i <= j <= p-2`), `phi_i`
/// (`i in [0, p-2]`), `psi_{b,j}` (`j in [0, p-b-1]`) and `theta`.
#[derive(Debug, Clone)]
pub struct PatilSet {
    pub members: BTreeMap<PatilLabel, Polynomial>,
}

impl PatilSet {
    pub fn build(ctx: &OrderContext) -> Self {
        let c = ctx.params();
        let (p, a, b, d) = (c.p, c.a as u32, c.b, c.d as u32);
        let mut members = BTreeMap::new();
        for j in 1..p.saturating_sub(1) {
            for i in 1..=j {
                let rhs = if i + j < p {
                    ctx.mono(&[(i + j, 1), (0, 1)])
                } else {
                    ctx.mono(&[(i + j + 1 - p, 1), (p - 1, 1)])
                };
                members.insert(
                    PatilLabel::Xi(i, j),
                    ctx.binomial(ctx.mono(&[(i, 1), (j, 1)]), rhs),
                );
            }
        }
        for i in 0..=p - 2 {
            members.insert(
                PatilLabel::Phi(i),
                ctx.binomial(
                    ctx.mono(&[(i + 1, 1), (p - 1, 1)]),
                    ctx.mono(&[(i, 1), (p, 1)]),
                ),
            );
        }
        for j in 0..p - b {
            members.insert(
                PatilLabel::Psi(j),
                ctx.binomial(
                    ctx.mono(&[(b + j, 1), (p, a)]),
                    ctx.mono(&[(j, 1), (0, a + d)]),
                ),
            );
        }
        members.insert(
            PatilLabel::Theta,
            ctx.binomial(ctx.var_pow(p, a + 1), ctx.mono(&[(p - b, 1), (0, a + d)])),
        );
        PatilSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.members.values().cloned().collect()
    }
}

#[cfg(test)]
mod tests;
