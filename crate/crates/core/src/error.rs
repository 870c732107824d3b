use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("N must be even, got {0}")]
    OddOrder(usize),
    #[error("vector length {got} does not match order {order} (expected {})", order + 1)]
    LengthMismatch { order: usize, got: usize },
    #[error("denominator {denominator} is not invertible modulo {modulus}")]
    NonInvertibleDenominator { denominator: String, modulus: u64 },
    #[error("lower parameter hits zero at index {index} before the series terminates")]
    PoleBeforeTermination { index: usize },
    #[error("invalid hypergeometric parameters: {0}")]
    InvalidHypergeometric(String),
    #[error("scale degree {scale} is below polynomial degree {degree}")]
    NonPolynomialResult { degree: usize, scale: usize },
    #[error("z = {z} gives a singular Legendre curve modulo {p}")]
    SingularCurve { p: u64, z: u64 },
    #[error("vector is not an eigenvector of T_{order} for the given eigenvalue")]
    NotAnEigenvector { order: usize },
    #[error("integrand is singular on the contour (|1 - z + zw| = {distance:e})")]
    ContourSingularity { distance: f64 },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
