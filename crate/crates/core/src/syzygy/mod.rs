//! The free module on `Psi(b, j)` and `Phi(i, j)`, its map onto the curve
//! ideal, the module order, and the closed-form generators `A`, `B`, `L` of
//! the first syzygy module.

mod construct;
mod context;
mod element;
mod reduce;
mod symbol;
mod verify;

pub use construct::{SyzygyLabel, SyzygySet};
pub use context::{ModuleContext, ModuleTermJson};
pub use element::{ModuleElement, ModuleTerm};
pub use reduce::{module_normal_form, s_vector, ModuleDivision};
pub use symbol::{BasisSymbol, SymbolJson};
pub use verify::{
    check_g_hat, module_lt_antichain_violation, schreyer_syzygies, verify_excluded_leading_forms,
    verify_groebner_g_hat, verify_image_monomial_leads, SchreyerSyzygy,
};

#[cfg(test)]
mod tests;
