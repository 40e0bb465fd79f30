//! Exact computer algebra for the center problem of the polynomial Abel
//! equation `y' = p y³ + q y²` on a segment `[a, b]`.
//!
//! Throughout, `P = ∫_a^x p` and `Q = ∫_a^x q`; most routines take `P` and `Q`
//! and differentiate internally.
//!
//! * [`ratpoly`]: rationals, dense polynomials, text grammar, Chebyshev.
//! * [`linalg`]: exact matrices over the rationals and over `ℚ[K]`.
//! * [`decompose`]: right factors, `[a,b]`-factors, the composition condition.
//! * [`moments`]: moments, iterated integrals, second Melnikov coefficients.
//! * [`poincare`]: the return map as an exact power series.
//! * [`casestudy`]: the `T̃_6` computations and classification checks.

pub mod casestudy;
pub mod decompose;
pub mod error;
pub mod linalg;
pub mod moments;
pub mod poincare;
pub mod ratpoly;

pub use error::{Error, Result};
pub use ratpoly::{Interval, Poly, Rational};
