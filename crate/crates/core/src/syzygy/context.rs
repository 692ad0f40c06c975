use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::symbol::SymbolJson;
use super::{BasisSymbol, ModuleElement, ModuleTerm};
use crate::error::{Error, Result};
use crate::generators::GeneratorSet;
use crate::polyring::serial::{coeff_to_string, parse_coeff};
use crate::polyring::{Monomial, OrderContext, Polynomial};
use crate::semigroup::CurveParams;

/// The free module with basis `Psi(b, j)`, `Phi(i, j)` over the curve's ring,
/// together with the map sending each basis symbol to its binomial in `G'`.
#[derive(Debug, Clone)]
pub struct ModuleContext {
    ring: OrderContext,
    generators: GeneratorSet,
    factors: HashMap<BasisSymbol, Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleTermJson {
    pub coeff: String,
    pub expo: Vec<u32>,
    pub basis: SymbolJson,
}

impl ModuleContext {
    pub fn new(params: CurveParams) -> Self {
        let ring = OrderContext::new(params);
        let generators = GeneratorSet::build(&ring);
        let c = ring.params();
        let factors = BasisSymbol::all(c)
            .into_iter()
            .map(|s| {
                let f = match s {
                    BasisSymbol::Psi(j) => ring.mono(&[(c.p, c.a as u32), (c.b + j, 1)]),
                    BasisSymbol::Phi(i, j) => ring.mono(&[(i, 1), (j, 1)]),
                };
                (s, f)
            })
            .collect();
        ModuleContext {
            ring,
            generators,
            factors,
        }
    }

    pub fn ring(&self) -> &OrderContext {
        &self.ring
    }

    pub fn params(&self) -> &CurveParams {
        self.ring.params()
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    /// `image_monomial(X^alpha Psi(b,i)) = X^alpha X_p^a X_{b+i}` and
    /// `image_monomial(X^alpha Phi(i,j)) = X^alpha X_i X_j`.
    pub fn image_monomial(&self, mono: &Monomial, symbol: BasisSymbol) -> Monomial {
        mono.mul(&self.factors[&symbol])
    }

    pub fn term(&self, mono: Monomial, symbol: BasisSymbol) -> ModuleTerm {
        assert!(symbol.in_range(self.params()), "{symbol} out of range");
        let image = self.image_monomial(&mono, symbol);
        ModuleTerm {
            mono,
            symbol,
            image,
        }
    }

    /// The module order computed from scratch: images under `image_monomial` compared
    /// in the ring order, then the symbol tie-break.
    pub fn cmp_m(&self, t1: (&Monomial, BasisSymbol), t2: (&Monomial, BasisSymbol)) -> Ordering {
        let w1 = self.image_monomial(t1.0, t1.1);
        let w2 = self.image_monomial(t2.0, t2.1);
        match self.ring.cmp(&w1, &w2) {
            Ordering::Equal => {}
            o => return o,
        }
        match t1.1.cmp(&t2.1) {
            Ordering::Equal => self.ring.cmp(t1.0, t2.0),
            o => o,
        }
    }

    /// Image binomial of a basis symbol.
    pub fn image_of(&self, symbol: BasisSymbol) -> &Polynomial {
        self.generators.get(symbol).expect("symbol in range")
    }

    /// `sum c * X^alpha * image(e)`; an element is a relation exactly when
    /// this vanishes.
    pub fn ideal_image(&self, h: &ModuleElement) -> Polynomial {
        let mut out = Polynomial::zero(self.ring.nvars());
        for (t, c) in h.terms() {
            out.add_scaled(c, &t.mono, self.image_of(t.symbol));
        }
        out
    }

    /// `sum f_e * e` from coefficient polynomials.
    pub fn element_from_components<'a>(
        &self,
        parts: impl IntoIterator<Item = (BasisSymbol, &'a Polynomial)>,
    ) -> ModuleElement {
        let mut h = ModuleElement::zero();
        for (s, f) in parts {
            for (m, c) in f.terms() {
                h.add_term(self.term(m.clone(), s), c.clone());
            }
        }
        h
    }

    pub fn element_to_json(&self, h: &ModuleElement) -> Vec<ModuleTermJson> {
        h.terms()
            .map(|(t, c)| ModuleTermJson {
                coeff: coeff_to_string(c),
                expo: t.mono.exponents().to_vec(),
                basis: t.symbol.into(),
            })
            .collect()
    }

    pub fn element_from_json(&self, terms: &[ModuleTermJson]) -> Result<ModuleElement> {
        let mut h = ModuleElement::zero();
        for t in terms {
            if t.expo.len() != self.ring.nvars() {
                return Err(Error::DimensionMismatch {
                    left: self.ring.nvars(),
                    right: t.expo.len(),
                });
            }
            let sym: BasisSymbol = t.basis.clone().into();
            if !sym.in_range(self.params()) {
                return Err(Error::Index {
                    what: "basis symbol",
                    detail: format!("{sym}"),
                });
            }
            h.add_term(
                self.term(self.ring.monomial(t.expo.clone()), sym),
                parse_coeff(&t.coeff)?,
            );
        }
        Ok(h)
    }
}
