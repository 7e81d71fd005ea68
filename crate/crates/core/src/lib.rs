//! Cauchy polynomials from a raising operator on polynomial Fock space,
//! conversions between symmetric-function bases, and exact matrix
//! invariants (power traces and prodeterminants) computed by several
//! independent algorithms.

pub mod algebra;
pub mod error;
pub mod invariants;
pub mod matrix;
pub mod operators;
pub mod partitions;
pub mod random;
pub mod symfun;
pub mod symgroup;

pub use algebra::{Monomial, Polynomial, Rational, Var};
pub use error::{Error, Result};
pub use invariants::{AlgorithmRegistry, ProdetAlgorithm};
pub use matrix::ExactMatrix;
pub use operators::LinearOperator;
pub use partitions::{Partition, PartitionSymbol};
pub use symfun::VariableVector;
pub use symgroup::Permutation;
