use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Coeff, Polynomial};
use crate::semigroup::CurveParams;

/// Univariate polynomial in `T`, keyed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Univariate {
    pub terms: BTreeMap<u64, Coeff>,
}

impl Univariate {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Image of `f` under `X_i -> T^{m_i}`. A binomial lies in the curve ideal
/// exactly when this vanishes.
pub fn curve_image(params: &CurveParams, f: &Polynomial) -> Univariate {
    let mut out: BTreeMap<u64, Coeff> = BTreeMap::new();
    for (m, c) in f.terms() {
        let deg = params.weight(m);
        let e = out.entry(deg).or_insert_with(Coeff::zero);
        *e += c;
        if e.is_zero() {
            out.remove(&deg);
        }
    }
    Univariate { terms: out }
}
