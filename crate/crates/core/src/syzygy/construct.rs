use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::{BasisSymbol, ModuleContext, ModuleElement, ModuleTerm};
use crate::error::{Error, Result};
use crate::generators::{capped_sum, wrap_offset};
use crate::polyring::{Coeff, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SyzygyLabel {
    A { i: usize, j: usize },
    B { i: usize, j: usize },
    L { l: usize, i: usize, j: usize },
}

impl fmt::Display for SyzygyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyzygyLabel::A { i, j } => write!(f, "A({i};b,{j})"),
            SyzygyLabel::B { i, j } => write!(f, "B({i},{j})"),
            SyzygyLabel::L { l, i, j } => write!(f, "L({l};{i},{j})"),
        }
    }
}

/// Accumulates `+-X^alpha * e`, silently dropping symbols that vanish under
/// the zero convention.
struct Builder<'a> {
    ctx: &'a ModuleContext,
    elem: ModuleElement,
}

impl<'a> Builder<'a> {
    fn new(ctx: &'a ModuleContext) -> Self {
        Builder {
            ctx,
            elem: ModuleElement::zero(),
        }
    }

    fn push(&mut self, sign: i32, mono: Monomial, symbol: Option<BasisSymbol>) {
        if let Some(s) = symbol {
            self.elem
                .add_term(self.ctx.term(mono, s), Coeff::from_integer(sign.into()));
        }
    }
}

impl ModuleContext {
    fn phi_sym(&self, i: isize, j: isize) -> Option<BasisSymbol> {
        BasisSymbol::phi(self.params(), i, j)
    }

    /// `A(i; b, j)` for `i in [1, p]`, `j in [0, p-b-1]`:
    ///
    /// `X_i Psi(b,j) - X_{b+i+j-eps} Psi(b, eps-b) - X_p^a Phi(i, b+j)
    ///  + X_0^{a+d} [Phi(i,j) - Phi(b+i+j-p, p-b)]`, with `eps = capped_sum(i, b+j)`.
    pub fn build_a(&self, i: usize, j: usize) -> Result<ModuleElement> {
        let c = self.params();
        let (p, b) = (c.p, c.b);
        if !(1..=p).contains(&i) || j + b >= p {
            return Err(Error::Index {
                what: "A",
                detail: format!(
                    "(i={i}, j={j}) needs i in [1,{p}], j in [0,{}]",
                    p as isize - b as isize - 1
                ),
            });
        }
        let r = self.ring();
        let (a, d) = (c.a as u32, c.d as u32);
        let e = capped_sum(i, b + j, p);
        let mut h = Builder::new(self);
        h.push(1, r.var(i), Some(BasisSymbol::Psi(j)));
        h.push(-1, r.var(b + i + j - e), Some(BasisSymbol::Psi(e - b)));
        h.push(
            -1,
            r.var_pow(p, a),
            self.phi_sym(i as isize, (b + j) as isize),
        );
        h.push(1, r.var_pow(0, a + d), self.phi_sym(i as isize, j as isize));
        h.push(
            -1,
            r.var_pow(0, a + d),
            self.phi_sym((b + i + j) as isize - p as isize, (p - b) as isize),
        );
        Ok(h.elem)
    }

    /// `B(i, j) = X_i X_j Psi(b,p-b) - X_eps X_{i+j-eps} Psi(b,p-b) - psi(b,p-b) Phi(i,j)`
    /// for `1 <= i <= j <= p-1`.
    pub fn build_b(&self, i: usize, j: usize) -> Result<ModuleElement> {
        let c = self.params();
        let p = c.p;
        let (i, j) = (i.min(j), i.max(j));
        if i < 1 || j >= p {
            return Err(Error::Index {
                what: "B",
                detail: format!("({i},{j}) not in [1,{}]^2", p - 1),
            });
        }
        let r = self.ring();
        let top = BasisSymbol::Psi(p - c.b);
        let e = capped_sum(i, j, p);
        let mut h = Builder::new(self);
        h.push(1, r.mono(&[(i, 1), (j, 1)]), Some(top));
        h.push(-1, r.mono(&[(e, 1), (i + j - e, 1)]), Some(top));
        let mut unit = ModuleElement::zero();
        unit.add_term(self.term(r.one(), BasisSymbol::Phi(i, j)), Coeff::one());
        Ok(h.elem.sub(&unit.scale_by_poly(self.image_of(top))))
    }

    /// `L(l; i, j) = X_l Phi(i,j) - X_j Phi(i,l) + X_s Phi(i+j-s, l)
    ///  - X_t Phi(i+l-t, j)` with `s = wrap_offset(i,j)`, `t = wrap_offset(i,l)`,
    /// for `l, i, j in [1, p-1]`, `i <= j`, `l < j`.
    pub fn build_l(&self, l: usize, i: usize, j: usize) -> Result<ModuleElement> {
        let p = self.params().p;
        if !(1..p).contains(&l) || !(1..p).contains(&i) || !(1..p).contains(&j) || i > j || l >= j {
            return Err(Error::Index {
                what: "L",
                detail: format!("(l={l}, i={i}, j={j}) needs i <= j, l < j in [1,{}]", p - 1),
            });
        }
        let r = self.ring();
        let t1 = wrap_offset(i, j, p);
        let t2 = wrap_offset(i, l, p);
        let ph = |x: usize, y: usize| self.phi_sym(x as isize, y as isize);
        let mut h = Builder::new(self);
        h.push(1, r.var(l), ph(i, j));
        h.push(-1, r.var(j), ph(i, l));
        h.push(1, r.var(t1), ph(i + j - t1, l));
        h.push(-1, r.var(t2), ph(i + l - t2, j));
        Ok(h.elem)
    }

    /// The term marked as leading in the closed-form construction.
    pub fn designated_leading_term(&self, label: SyzygyLabel) -> ModuleTerm {
        let c = self.params();
        let r = self.ring();
        match label {
            SyzygyLabel::A { i, j } => self.term(r.var(i), BasisSymbol::Psi(j)),
            SyzygyLabel::B { i, j } => {
                self.term(r.mono(&[(i, 1), (j, 1)]), BasisSymbol::Psi(c.p - c.b))
            }
            SyzygyLabel::L { l, i, j } => self.term(r.var(l), BasisSymbol::Phi(i, j)),
        }
    }
}

/// The closed-form generating set of the first syzygy module.
#[derive(Debug, Clone)]
pub struct SyzygySet {
    pub a: BTreeMap<(usize, usize), ModuleElement>,
    pub b: BTreeMap<(usize, usize), ModuleElement>,
    pub l: BTreeMap<(usize, usize, usize), ModuleElement>,
}

impl SyzygySet {
    pub fn build(ctx: &ModuleContext) -> Self {
        let c = ctx.params();
        let (p, b) = (c.p, c.b);
        let mut a_set = BTreeMap::new();
        for i in 1..=p {
            for j in 0..p - b {
                a_set.insert((i, j), ctx.build_a(i, j).expect("in range"));
            }
        }
        let mut b_set = BTreeMap::new();
        for j in 1..p {
            for i in 1..=j {
                b_set.insert((i, j), ctx.build_b(i, j).expect("in range"));
            }
        }
        let mut l_set = BTreeMap::new();
        for j in 1..p {
            for i in 1..=j {
                for l in 1..j {
                    l_set.insert((l, i, j), ctx.build_l(l, i, j).expect("in range"));
                }
            }
        }
        SyzygySet {
            a: a_set,
            b: b_set,
            l: l_set,
        }
    }

    pub fn len(&self) -> usize {
        self.a.len() + self.b.len() + self.l.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(|A|, |B|, |L|) = (p(p-b), p(p-1)/2, sum_{j=2}^{p-1} j(j-1))`.
    pub fn expected_counts(p: usize, b: usize) -> (usize, usize, usize) {
        (
            p * (p - b),
            p * (p - 1) / 2,
            (2..p).map(|j| j * (j - 1)).sum(),
        )
    }

    /// Members in label order (`A`s, then `B`s, then `L`s).
    pub fn labelled(&self) -> Vec<(SyzygyLabel, &ModuleElement)> {
        let a = self
            .a
            .iter()
            .map(|(&(i, j), h)| (SyzygyLabel::A { i, j }, h));
        let b = self
            .b
            .iter()
            .map(|(&(i, j), h)| (SyzygyLabel::B { i, j }, h));
        let l = self
            .l
            .iter()
            .map(|(&(l, i, j), h)| (SyzygyLabel::L { l, i, j }, h));
        a.chain(b).chain(l).collect()
    }

    pub fn elements(&self) -> Vec<ModuleElement> {
        self.labelled()
            .into_iter()
            .map(|(_, h)| h.clone())
            .collect()
    }
}
