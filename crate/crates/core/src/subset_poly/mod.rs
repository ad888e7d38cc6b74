//! The ambient ring `T_n`: subset-indexed variables, grevlex monomials and
//! sparse polynomials.

mod format;
mod monomial;
mod polynomial;
mod subset;

pub use format::{FactorJson, PolynomialJson, TermJson};
pub use monomial::{mono_cmp, Monomial};
pub use polynomial::{poly_add, poly_mul, poly_scale, Polynomial};
pub use subset::{var_cmp, BiDegree, Subset, SubsetRing};
