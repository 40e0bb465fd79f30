//! Exact rational scalars, dense polynomials over them, integration paths,
//! the polynomial text grammar and Chebyshev polynomials.

mod chebyshev;
mod interval;
mod parse;
mod poly;
mod rational;

pub use chebyshev::{chebyshev, primitive_part, shifted_chebyshev};
pub use interval::Interval;
pub use parse::parse_poly;
pub use poly::Poly;
pub use rational::{factorial, int, parse_rational, rat, to_decimal, to_f64, to_fraction_string, Rational};
