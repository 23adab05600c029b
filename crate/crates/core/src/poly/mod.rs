//! Exact multivariate polynomials over Q or a prime field.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod scalar;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{is_identifier, parse_polynomial};
pub use polynomial::{leading_term, poly_arith, ArithOp, Operand, Polynomial};
pub use scalar::{Field, Rational, Scalar, DEFAULT_PRIME};
