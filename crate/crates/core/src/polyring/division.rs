use super::{Coeff, Polynomial};

/// Result of dividing `f` by an ordered list: `f = sum q_i * g_i + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub remainder: Polynomial,
    pub quotients: Vec<Polynomial>,
}

/// Multivariate division. The largest remaining term is reduced by the first
/// basis element (in list order) whose leading monomial divides it; terms that
/// no leading monomial divides move to the remainder.
///
/// Zero entries in `basis` are skipped and get a zero quotient.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Division {
    let n = f.nvars();
    let leads: Vec<_> = basis
        .iter()
        .map(|g| g.lead().map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let tails: Vec<Polynomial> = basis
        .iter()
        .map(|g| {
            let mut t = g.clone();
            t.pop_lead();
            t
        })
        .collect();
    let mut quotients = vec![Polynomial::zero(n); basis.len()];
    let mut remainder = Polynomial::zero(n);
    let mut rest = f.clone();
    while let Some((m, c)) = rest.pop_lead() {
        let hit = leads.iter().enumerate().find_map(|(k, lt)| {
            let (lm, lc) = lt.as_ref()?;
            m.checked_div(lm).map(|q| (k, q, lc))
        });
        match hit {
            Some((k, qm, lc)) => {
                let qc: Coeff = &c / lc;
                quotients[k].add_term(qm.clone(), qc.clone());
                // the leading term cancels against the popped one
                rest.add_scaled(&-qc, &qm, &tails[k]);
            }
            None => remainder.add_term(m, c),
        }
    }
    Division {
        remainder,
        quotients,
    }
}

/// Remainder only.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    normal_form(f, basis).remainder
}
