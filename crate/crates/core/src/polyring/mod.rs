//! Exact polynomial arithmetic in `K[X_1, ..., X_p, X_0]` over the rationals,
//! ordered by generator weight with a right-most-negative tie-break.

mod division;
mod groebner;
mod monomial;
mod order;
mod polynomial;
pub mod serial;
mod substitution;

pub use division::{normal_form, reduce, Division};
pub use groebner::{
    buchberger, first_nonreducing_pair, pair_syzygies, reduce_basis, s_polynomial, PairSyzygy,
};
pub use monomial::Monomial;
pub use order::OrderContext;
pub use polynomial::Polynomial;
pub use substitution::{curve_image, Univariate};

pub type Coeff = num_rational::BigRational;
