//! Closed-form Gröbner bases for monomial curves whose exponents form an
//! arithmetic sequence `m_i = m0 + i*d`, and for the first syzygy module of
//! their defining ideal, cross-checked against Buchberger and Schreyer
//! computations in exact rational arithmetic.

pub mod cli;
pub mod error;
pub mod generators;
pub mod par;
pub mod polyring;
pub mod report;
pub mod semigroup;
pub mod syzygy;

pub use error::{Error, Result};
pub use report::{CheckResult, Status, VerificationReport};
pub use semigroup::{CurveParams, MultipleRelation};

use polyring::OrderContext;
use syzygy::ModuleContext;

/// Default number of random terms for the `image_monomial` leading-monomial check.
pub const DEFAULT_IMAGE_SAMPLES: usize = 1000;
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Options for [`verify_all`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Exponent cap for the standard-monomial and excluded-form enumerations;
    /// `None` skips both.
    pub bound: Option<u32>,
    pub image_samples: usize,
    pub seed: u64,
    /// Also run the per-member minimal-generation check for `G'` (one
    /// Buchberger run per member).
    pub minimal_generation: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bound: Some(6),
            image_samples: DEFAULT_IMAGE_SAMPLES,
            seed: DEFAULT_SEED,
            minimal_generation: true,
        }
    }
}

/// Every structural check for one parameter triple.
pub fn verify_all(params: &CurveParams, opts: &VerifyOptions) -> VerificationReport {
    let ring = OrderContext::new(params.clone());
    let module = ModuleContext::new(params.clone());
    let mut report = VerificationReport::new();

    let found = params.min_multiple_of_top();
    let predicted = params.predicted_top_relation();
    report.push(if found == predicted {
        CheckResult::pass(
            "top_multiple_relation",
            params,
            format!("{}*m_p = {}*m_0 + m_{}", found.top, found.base, found.index),
        )
    } else {
        CheckResult::fail(
            "top_multiple_relation",
            params,
            format!("search found {found:?}, closed form {predicted:?}"),
            vec![],
        )
    });

    report.extend(generators::verify_groebner_g_prime(&ring));
    report.extend(generators::verify_lt_antichain(&ring));
    if opts.minimal_generation {
        report.extend(generators::verify_minimal_generation(&ring));
    }
    report.extend(generators::verify_ideal_equality(&ring));
    if let Some(bound) = opts.bound {
        report.extend(generators::verify_standard_monomials(&ring, bound));
    }
    report.extend(syzygy::verify_groebner_g_hat(&module));
    if let Some(bound) = opts.bound {
        report.extend(syzygy::verify_excluded_leading_forms(&module, bound));
    }
    report.extend(syzygy::verify_image_monomial_leads(
        &module,
        opts.image_samples,
        opts.seed,
    ));
    report
}
