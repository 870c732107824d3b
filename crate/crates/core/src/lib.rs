//! Exact computations around the eigenvalue-one eigenvector of the
//! symmetric Pascal matrix `T_N[j][k] = C(j+k, j)`: the commuting Jacobi
//! matrix, binomial transforms, hypergeometric generating functions, a
//! third-order differential equation, Legendre-curve point counts and a
//! `p`-adic congruence.

pub mod check;
pub mod curves;
pub mod error;
pub mod genfun;
pub mod ode;
pub mod operators;
pub mod padic;
pub mod ring;

pub use check::Verdict;
pub use error::{Error, Result};
pub use genfun::DensePoly;
pub use operators::{ExactVector, OperatorKind, OperatorSpec};
pub use ring::{q, ModInt, Modulus, Rational, Ring};
