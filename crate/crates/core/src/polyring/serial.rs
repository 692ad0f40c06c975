//! JSON form of polynomials: a list of `{"coeff": "num/den", "expo": [...]}`
//! terms, exponents in storage order `(X_1, ..., X_p, X_0)`, sorted
//! descending in the weighted order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Coeff, OrderContext, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub expo: Vec<u32>,
}

pub fn coeff_to_string(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Coeff::new(n, d))
}

pub fn poly_to_json(f: &Polynomial) -> Vec<TermJson> {
    f.terms()
        .map(|(m, c)| TermJson {
            coeff: coeff_to_string(c),
            expo: m.exponents().to_vec(),
        })
        .collect()
}

impl OrderContext {
    pub fn poly_from_json(&self, terms: &[TermJson]) -> Result<Polynomial> {
        let mut f = Polynomial::zero(self.nvars());
        for t in terms {
            if t.expo.len() != self.nvars() {
                return Err(Error::DimensionMismatch {
                    left: self.nvars(),
                    right: t.expo.len(),
                });
            }
            f.add_term(self.monomial(t.expo.clone()), parse_coeff(&t.coeff)?);
        }
        Ok(f)
    }
}
