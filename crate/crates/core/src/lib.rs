//! Color-graded Lie algebras over exact scalars.
//!
//! The grading group is `Z_2^k` (in practice `Z_2` or the Klein group) and the
//! color is a bicharacter `θ: G × G → {±1}`. Everything is generic over a
//! [`Scalar`] field; [`Rational`] is the default instance.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod derivations;
pub mod enveloping;
pub mod forms;
pub mod grading;
pub mod hopf;
pub mod linalg;
pub mod rep;
pub mod scalar;
pub mod structure;
pub mod subspace;

pub use algebra::{validate, AlgebraCandidate, BasisElement, GradedLieAlgebra, LieError, Terms};
pub use grading::{ColorMap, GradeElement, GradeGroup};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

pub type LieAlgebra = GradedLieAlgebra<Rational>;
