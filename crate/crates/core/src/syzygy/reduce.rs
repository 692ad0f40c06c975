use super::{ModuleContext, ModuleElement};
use crate::polyring::Polynomial;

#[derive(Debug, Clone)]
pub struct ModuleDivision {
    pub remainder: ModuleElement,
    pub quotients: Vec<Polynomial>,
}

/// Module division with the same strategy as the ring version: reduce the
/// largest remaining term by the first basis element whose leading term sits
/// on the same symbol with a dividing coefficient monomial.
pub fn module_normal_form(
    ctx: &ModuleContext,
    h: &ModuleElement,
    basis: &[ModuleElement],
) -> ModuleDivision {
    let nvars = ctx.ring().nvars();
    let split: Vec<_> = basis
        .iter()
        .map(|g| {
            let mut tail = g.clone();
            let lead = tail.pop_lead();
            (lead, tail)
        })
        .collect();
    let mut quotients = vec![Polynomial::zero(nvars); basis.len()];
    let mut remainder = ModuleElement::zero();
    let mut rest = h.clone();
    while let Some((t, c)) = rest.pop_lead() {
        let hit = split.iter().enumerate().find_map(|(k, (lead, _))| {
            let (lt, lc) = lead.as_ref()?;
            if lt.symbol != t.symbol {
                return None;
            }
            t.mono.checked_div(&lt.mono).map(|q| (k, q, lc))
        });
        match hit {
            Some((k, q, lc)) => {
                let qc = &c / lc;
                quotients[k].add_term(q.clone(), qc.clone());
                rest.add_scaled(&-qc, &q, &split[k].1);
            }
            None => remainder.add_term(t, c),
        }
    }
    ModuleDivision {
        remainder,
        quotients,
    }
}

/// S-vector of two elements whose leading terms share a basis symbol;
/// `None` otherwise.
pub fn s_vector(
    ctx: &ModuleContext,
    g: &ModuleElement,
    h: &ModuleElement,
) -> Option<ModuleElement> {
    let (gt, gc) = g.lead()?;
    let (ht, hc) = h.lead()?;
    if gt.symbol != ht.symbol {
        return None;
    }
    let l = ctx.ring().lcm(&gt.mono, &ht.mono);
    let mg = l.checked_div(&gt.mono).expect("lcm is a multiple");
    let mh = l.checked_div(&ht.mono).expect("lcm is a multiple");
    let mut s = ModuleElement::zero();
    s.add_scaled(&gc.recip(), &mg, g);
    s.add_scaled(&-hc.recip(), &mh, h);
    Some(s)
}
