//! Exact and high-precision machinery for multiple zeta values and multiple
//! Apery-like sums.
//!
//! The crate is organised bottom-up:
//!
//! * [`compositions`]: compositions, binary words, duality and enumeration.
//! * [`lincomb`]: formal linear combinations over `Z`, `Q` and `Z[t]`, and the
//!   structural maps `alpha`, `mu` and the class projection.
//! * [`stuffle`]: the stuffle product, the modified stuffle and `phi_{p,q}`.
//! * [`delta`]: the map `delta`, computed inductively and by the explicit
//!   formula, its closed-form families and the submatrices `Delta_k`.
//! * [`exact_linalg`]: exact rank, kernel and determinant, and the rank tables.
//! * [`numerics`]: fixed-point reals with error bounds, constants, tails of
//!   sigma and zeta sums, and closed-form coefficient vectors.

pub mod compositions;
pub mod delta;
pub mod error;
pub mod exact_linalg;
pub mod lincomb;
pub mod numerics;
pub mod stuffle;

pub use compositions::{BinaryWord, Composition, DualityClass, Filter, Listing};
pub use error::{Error, Result};
pub use exact_linalg::{ExactMatrix, KernelBasis};
pub use lincomb::{IntPoly, LinComb, Poly, RatPoly, Ring};
pub use numerics::ApproxReal;
