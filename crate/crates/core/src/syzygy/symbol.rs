use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::CurveParams;

/// Basis symbol of the free module: `Psi(b, j)` for `j in [0, p-b]` or
/// `Phi(i, j)` for `1 <= i <= j <= p-1`.
///
/// `Ord` is the tie-break used when two module terms have the same image
/// monomial: `Psi(b,i) > Psi(b,j)` for `i < j`, every `Psi` beats every `Phi`,
/// and `Phi(i,j) > Phi(i',j')` when `j > j'`, or `j = j'` and `i > i'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisSymbol {
    Psi(usize),
    Phi(usize, usize),
}

impl BasisSymbol {
    pub fn psi(params: &CurveParams, j: usize) -> Result<Self> {
        if j > params.p - params.b {
            return Err(Error::Index {
                what: "Psi",
                detail: format!("{j} not in [0,{}]", params.p - params.b),
            });
        }
        Ok(BasisSymbol::Psi(j))
    }

    /// `Phi(i, j)` under the zero convention: `None` when either index falls
    /// outside `[1, p-1]` (negative indices included); otherwise the symbol
    /// with its indices sorted.
    pub fn phi(params: &CurveParams, i: isize, j: isize) -> Option<Self> {
        let hi = params.p as isize - 1;
        if !(1..=hi).contains(&i) || !(1..=hi).contains(&j) {
            return None;
        }
        let (i, j) = (i.min(j) as usize, i.max(j) as usize);
        Some(BasisSymbol::Phi(i, j))
    }

    pub fn in_range(&self, params: &CurveParams) -> bool {
        match *self {
            BasisSymbol::Psi(j) => j <= params.p - params.b,
            BasisSymbol::Phi(i, j) => 1 <= i && i <= j && j < params.p,
        }
    }

    /// All in-range symbols: `Psi`s by index, then `Phi`s by `(i, j)`.
    pub fn all(params: &CurveParams) -> Vec<BasisSymbol> {
        let mut out: Vec<_> = (0..=params.p - params.b).map(BasisSymbol::Psi).collect();
        for j in 1..params.p {
            for i in 1..=j {
                out.push(BasisSymbol::Phi(i, j));
            }
        }
        out
    }
}

impl Ord for BasisSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        use BasisSymbol::*;
        match (*self, *other) {
            (Psi(i), Psi(j)) => j.cmp(&i),
            (Psi(_), Phi(..)) => Ordering::Greater,
            (Phi(..), Psi(_)) => Ordering::Less,
            (Phi(i, j), Phi(k, l)) => j.cmp(&l).then(i.cmp(&k)),
        }
    }
}

impl PartialOrd for BasisSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::Psi(j) => write!(f, "Psi(b,{j})"),
            BasisSymbol::Phi(i, j) => write!(f, "Phi({i},{j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SymbolJson {
    Psi { j: usize },
    Phi { i: usize, j: usize },
}

impl From<BasisSymbol> for SymbolJson {
    fn from(s: BasisSymbol) -> Self {
        match s {
            BasisSymbol::Psi(j) => SymbolJson::Psi { j },
            BasisSymbol::Phi(i, j) => SymbolJson::Phi { i, j },
        }
    }
}

impl From<SymbolJson> for BasisSymbol {
    fn from(s: SymbolJson) -> Self {
        match s {
            SymbolJson::Psi { j } => BasisSymbol::Psi(j),
            SymbolJson::Phi { i, j } => BasisSymbol::Phi(i.min(j), i.max(j)),
        }
    }
}
