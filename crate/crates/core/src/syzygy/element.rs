use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::BasisSymbol;
use crate::polyring::{Coeff, Monomial, Polynomial};

/// A monomial of the free module, `X^alpha * e`, carrying its image monomial
/// (`X^alpha` times the leading monomial attached to `e`) so terms order
/// themselves without a context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleTerm {
    pub mono: Monomial,
    pub symbol: BasisSymbol,
    pub(crate) image: Monomial,
}

impl ModuleTerm {
    pub fn image(&self) -> &Monomial {
        &self.image
    }

    pub fn mul_mono(&self, m: &Monomial) -> ModuleTerm {
        ModuleTerm {
            mono: self.mono.mul(m),
            symbol: self.symbol,
            image: self.image.mul(m),
        }
    }

    /// `other = q * self` on the same symbol.
    pub fn divides(&self, other: &ModuleTerm) -> bool {
        self.symbol == other.symbol && self.mono.divides(&other.mono)
    }
}

impl Ord for ModuleTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.image
            .cmp(&other.image)
            .then_with(|| self.symbol.cmp(&other.symbol))
            .then_with(|| self.mono.cmp(&other.mono))
    }
}

impl PartialOrd for ModuleTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "{}", self.symbol)
        } else {
            write!(f, "{}*{}", self.mono, self.symbol)
        }
    }
}

/// Finite sum of rational multiples of module terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleElement {
    terms: BTreeMap<ModuleTerm, Coeff>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending module order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ModuleTerm, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn lead(&self) -> Option<(&ModuleTerm, &Coeff)> {
        self.terms.last_key_value()
    }

    pub(crate) fn pop_lead(&mut self) -> Option<(ModuleTerm, Coeff)> {
        self.terms.pop_last()
    }

    pub fn add_term(&mut self, t: ModuleTerm, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &Coeff, m: &Monomial, other: &ModuleElement) {
        for (t, x) in &other.terms {
            self.add_term(t.mul_mono(m), c * x);
        }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (t, x) in &other.terms {
            out.add_term(t.clone(), -x.clone());
        }
        out
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (t, x) in &other.terms {
            out.add_term(t.clone(), x.clone());
        }
        out
    }

    pub fn scale_by_term(&self, c: &Coeff, m: &Monomial) -> ModuleElement {
        let mut out = ModuleElement::zero();
        out.add_scaled(c, m, self);
        out
    }

    /// `f * self` for a ring element `f`.
    pub fn scale_by_poly(&self, f: &Polynomial) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (m, c) in f.terms() {
            out.add_scaled(c, m, self);
        }
        out
    }

    /// Coefficient polynomial of each symbol that occurs.
    pub fn components(&self, nvars: usize) -> BTreeMap<BasisSymbol, Polynomial> {
        let mut out: BTreeMap<BasisSymbol, Polynomial> = BTreeMap::new();
        for (t, c) in &self.terms {
            out.entry(t.symbol)
                .or_insert_with(|| Polynomial::zero(nvars))
                .add_term(t.mono.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match k {
                0 if c.is_negative() => write!(f, "-")?,
                0 => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{mag}*{t}")?;
            }
        }
        Ok(())
    }
}
