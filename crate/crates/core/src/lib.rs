//! Exact Gröbner bases for quotients of the unit-cube semigroup algebra
//! `T_n = Q[z_A : A ⊆ [n]]` by the colored invariant ideals, the negative
//! descent basis indexed by colored permutations, and the bigraded Hilbert
//! series identities it produces.
//!
//! All algorithms are generic over the coefficient type (see [`Scalar`]);
//! the aliases at the crate root fix it to exact rationals.

pub mod cli;
pub mod colored_perm;
pub mod descent_basis;
pub mod error;
pub mod groebner;
pub mod ideals;
pub mod scalar;
pub mod series;
pub mod subset_poly;

pub use colored_perm::{ColoredLetter, ColoredPermutation, Permutation, SigmaXPair};
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use subset_poly::{BiDegree, Monomial, Polynomial, Subset, SubsetRing};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
pub type Poly = Polynomial<Rational>;
pub type Basis = groebner::GroebnerBasis<Rational>;
pub type Series = series::BiSeries<Rational>;
pub type Generators = ideals::GeneratorSet<Rational>;
