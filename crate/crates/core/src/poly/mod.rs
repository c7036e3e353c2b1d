//! Dense polynomials over a chain ring and their quotient classes.

mod multi;
mod univariate;

pub use multi::{multi_mul_mod, var_names, MultiPoly};
pub use univariate::{poly_mul_mod, Poly, QuotPoly, ResiduePoly};
