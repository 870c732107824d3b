use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::ring::{factorial, pochhammer, q, Rational};

use super::DensePoly;

/// Parameters of a terminating `2F1(a, b; c; z)` with `a = -degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeometricSpec {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub degree: usize,
}

impl HypergeometricSpec {
    /// `a` must be the nonpositive integer `-degree`.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let degree = if a.is_integer() && a <= Rational::zero() { (-&a).numer().to_usize() } else { None };
        let degree = degree
            .ok_or_else(|| Error::InvalidHypergeometric(format!("upper parameter {a} is not a nonpositive integer")))?;
        Ok(HypergeometricSpec { a, b, c, degree })
    }

    /// `2F1(-N/2, N/2+1; -N; z)`, the polynomial both factors of the
    /// eigenvalue-one generating function are built from.
    pub fn legendre_factor(order: usize) -> Result<Self> {
        let n = order as i64;
        HypergeometricSpec::new(q(-n, 2), q(n + 2, 2), q(-n, 1))
    }

    /// `2F1(-N/2, -3N/2-1; -N; z)`.
    pub fn pfaff_factor(order: usize) -> Result<Self> {
        let n = order as i64;
        HypergeometricSpec::new(q(-n, 2), q(-3 * n - 2, 2), q(-n, 1))
    }
}

/// The terminating series `sum_k (a)_k (b)_k / ((c)_k k!) z^k`, `k <= degree`.
pub fn hyp2f1_terminating(spec: &HypergeometricSpec) -> Result<DensePoly<Rational>> {
    let mut coeffs = Vec::with_capacity(spec.degree + 1);
    for k in 0..=spec.degree {
        let num = pochhammer(&spec.a, k) * pochhammer(&spec.b, k);
        let den = pochhammer(&spec.c, k) * Rational::from(factorial(k as u64));
        if den.is_zero() {
            if num.is_zero() {
                coeffs.push(Rational::zero());
                continue;
            }
            return Err(Error::PoleBeforeTermination { index: k });
        }
        coeffs.push(num / den);
    }
    Ok(DensePoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: i64, b: i64, c: i64) -> HypergeometricSpec {
        HypergeometricSpec::new(q(a, 1), q(b, 1), q(c, 1)).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(hyp2f1_terminating(&spec(-1, 2, -2)).unwrap(), DensePoly::from_ints(&[1, 1]));
        assert_eq!(hyp2f1_terminating(&spec(-2, 3, -4)).unwrap(), DensePoly::new(vec![q(1, 1), q(3, 2), q(1, 1)]));
        for (a, b, c) in [(-3, 5, 7), (0, 2, 3), (-4, -1, 2)] {
            assert_eq!(hyp2f1_terminating(&spec(a, b, c)).unwrap().coeff(0), Rational::one());
        }
    }

    #[test]
    fn rejects_non_terminating() {
        assert!(HypergeometricSpec::new(q(1, 2), q(1, 2), q(1, 1)).is_err());
        assert!(HypergeometricSpec::new(q(2, 1), q(1, 1), q(1, 1)).is_err());
    }

    #[test]
    fn pole_before_termination() {
        // c = -1 vanishes from k = 2 on while a = -3 keeps the numerator alive.
        let err = hyp2f1_terminating(&spec(-3, 1, -1)).unwrap_err();
        assert_eq!(err, Error::PoleBeforeTermination { index: 2 });
    }

    #[test]
    fn legendre_factor_parameters() {
        let s = HypergeometricSpec::legendre_factor(4).unwrap();
        assert_eq!((s.a.clone(), s.b.clone(), s.c.clone(), s.degree), (q(-2, 1), q(3, 1), q(-4, 1), 2));
        let p = HypergeometricSpec::pfaff_factor(4).unwrap();
        assert_eq!(p.b, q(-7, 1));
    }
}
