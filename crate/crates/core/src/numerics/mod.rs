//! High-precision evaluation: constants, tails of `sigma` and `zeta` sums,
//! integer-entry reduction, closed-form coefficient vectors and the identity
//! registry.
//!
//! Every value is an [`ApproxReal`] carrying a rigorous error bound.

pub mod bernoulli;
pub mod closed_forms;
pub mod constants;
pub mod identities;
mod real;
pub mod reduction;
pub mod sigma;
pub mod zeta;

pub use bernoulli::{bernoulli_number, bernoulli_poly, bernoulli_poly_coeffs};
pub use closed_forms::{
    bbb_coefficient, eu127_matrix, eu128_matrix, eu129_matrix, th7_coeffs, th8_coeffs, zagier_coeffs,
    ConstantBasisVector,
};
pub use constants::{l_chi3, pi, sqrt3, zeta_even_ratio, zeta_int};
pub use identities::{registry, verify, Check, IdentityInfo, VerifyReport};
pub use real::ApproxReal;
pub use reduction::{eval_poly_lincomb, lambda, reduce_integer_entries, PolyLinComb};
pub use sigma::{sigma_empty, sigma_lin, sigma_oracle, sigma_tail};
pub use zeta::{mzv, zeta_double_tail_oracle, zeta_sym_tail, ZetaTailEvaluator};

use crate::error::{Error, Result};

/// Largest number of decimal digits any public evaluator accepts.
pub const DIGIT_CAP: u32 = 200;

/// Working precision in bits for `digits` decimal digits: ten guard digits
/// plus 32 bits of headroom for accumulated rounding.
pub(crate) fn bits_for(digits: u32) -> u32 {
    ((f64::from(digits) + 10.0) * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

pub(crate) fn check_digits(digits: u32) -> Result<()> {
    if digits > DIGIT_CAP {
        return Err(Error::Config(format!("{digits} digits requested, the cap is {DIGIT_CAP}")));
    }
    Ok(())
}
