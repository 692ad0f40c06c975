use std::cmp::Ordering;
use std::fmt;

/// Exponent vector in storage order `(X_1, ..., X_p, X_0)` together with its
/// weight. Weights are fixed by the [`super::OrderContext`] that built the
/// monomial, so monomials from different contexts must not be mixed.
///
/// `Ord` is the weighted order: heavier first, and among equal weights the
/// monomial whose exponent difference has a negative right-most non-zero
/// entry is the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    weight: u64,
}

impl Monomial {
    pub(crate) fn from_parts(exps: Vec<u32>, weight: u64) -> Self {
        Monomial { exps, weight }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            weight: self.weight - other.weight,
        })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            weight: self.weight + other.weight,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight.cmp(&other.weight).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    // negative right-most difference wins
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.exps.len() - 1;
        let mut first = true;
        let mut write_var = |f: &mut fmt::Formatter<'_>, idx: usize, e: u32| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "X{idx}"),
                _ => write!(f, "X{idx}^{e}"),
            }
        };
        for (s, &e) in self.exps.iter().enumerate() {
            let idx = if s == p { 0 } else { s + 1 };
            write_var(f, idx, e)?;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
