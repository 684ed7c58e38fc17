//! Exact polynomial arithmetic over the rationals.

mod linear;
mod matrix;
mod parse;
mod poly;

pub use linear::LinearForm;
pub use matrix::{antisymmetric, determinant, pfaffian};
pub use parse::parse_polynomial;
pub use poly::{rational, Family, Monomial, Polynomial, Var};

pub type Matrix = Vec<Vec<Polynomial>>;
