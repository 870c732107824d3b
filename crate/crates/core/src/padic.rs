//! The period series `F(z) = 2F1(1/2, 1/2; 1; z)`, its differential
//! equations, and the congruence `U_n(z) ≡ F(z)^2 (mod p^n)` on the open
//! disk `|z|_p < 1`, where `U_n` is the eigenvalue-one generating function
//! at `N = p^n - 1`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::genfun::{eigen_poly, DensePoly};
use crate::ring::{factorial, pochhammer, q, rational_to_mod, Modulus, Rational};

/// Power series known through `z^(order-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// A polynomial read as a series valid through `z^(order-1)`.
    pub fn from_poly(f: &DensePoly<Rational>, order: usize) -> Self {
        TruncatedSeries { coeffs: (0..order).map(|i| f.coeff(i)).collect() }
    }

    /// Number of valid coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        TruncatedSeries { coeffs: (0..k).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = self.order().min(other.order());
        let coeffs = (0..k).map(|n| (0..=n).map(|i| &self.coeffs[i] * &other.coeffs[n - i]).sum()).collect();
        TruncatedSeries { coeffs }
    }

    pub fn derivative(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &Rational::from(i as i64)).collect(),
        }
    }

    /// Multiply by a polynomial; exact products keep the same valid order.
    pub fn mul_poly(&self, f: &DensePoly<Rational>) -> Self {
        let k = self.order();
        let coeffs = (0..k).map(|n| (0..=n).map(|i| f.coeff(i) * &self.coeffs[n - i]).sum()).collect();
        TruncatedSeries { coeffs }
    }

    /// All valid coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }
}

/// `c_k = ((1/2)_k / k!)^2` for `k < order`.
pub fn period_series(order: usize) -> TruncatedSeries {
    let half = q(1, 2);
    TruncatedSeries::new(
        (0..order)
            .map(|k| {
                let c = pochhammer(&half, k) / Rational::from(factorial(k as u64));
                &c * &c
            })
            .collect(),
    )
}

/// `z^2(1-z)^2 f''' + 3z(1-z)(1-2z) f'' + (1 - 7z(1-z)) f' - (1/2 - z) f`.
pub fn symmetric_square_residual(f: &TruncatedSeries) -> TruncatedSeries {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let shift = |s: &TruncatedSeries, k: usize| {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(s.coeffs.iter().cloned());
        coeffs.truncate(s.order() + k);
        TruncatedSeries { coeffs }
    };
    // the z^k factors lengthen the valid range of lower derivatives
    shift(&d3, 2)
        .mul_poly(&DensePoly::from_ints(&[1, -2, 1]))
        .add(&shift(&d2, 1).mul_poly(&DensePoly::from_ints(&[3, -9, 6])))
        .add(&d1.mul_poly(&DensePoly::from_ints(&[1, -7, 7])))
        .add(&f.mul_poly(&DensePoly::new(vec![q(-1, 2), q(1, 1)])))
}

/// `z(1-z) f'' + (1-2z) f' - f/4`, valid through one coefficient fewer than `f`.
pub fn hypergeometric_residual(f: &TruncatedSeries) -> TruncatedSeries {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let mut zd2 = vec![Rational::zero()];
    zd2.extend(d2.coeffs.iter().cloned());
    TruncatedSeries::new(zd2)
        .mul_poly(&DensePoly::from_ints(&[1, -1]))
        .add(&d1.mul_poly(&DensePoly::from_ints(&[1, -2])))
        .add(&f.mul_poly(&DensePoly::constant(q(-1, 4))))
}

pub fn satisfies_hypergeometric_ode(f: &TruncatedSeries) -> bool {
    hypergeometric_residual(f).is_zero()
}

pub fn satisfies_symmetric_square_ode(f: &TruncatedSeries) -> bool {
    symmetric_square_residual(f).is_zero()
}

/// `F` (truncated at `order`) satisfies the hypergeometric equation through
/// every coefficient the truncation determines.
pub fn hypergeometric_ode_check(order: usize) -> bool {
    satisfies_hypergeometric_ode(&period_series(order))
}

/// `F^2` satisfies the symmetric-square equation through every determined coefficient.
pub fn symmetric_square_ode_check(order: usize) -> bool {
    let f = period_series(order);
    satisfies_symmetric_square_ode(&f.mul(&f))
}

/// `U_n = ` the eigenvalue-one generating function at `N = p^n - 1`.
pub fn u_n_poly(p: u64, level: u32) -> Result<DensePoly<Rational>> {
    let m = Modulus::new(p, level)?;
    eigen_poly(m.value() as usize - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicReport {
    pub p: u64,
    pub n: u32,
    pub samples: Vec<i64>,
    pub pass: bool,
    pub witness: Option<PadicWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PadicWitness {
    pub t: i64,
    pub z: i64,
    pub u_n: u64,
    pub f_squared: u64,
}

/// `U_n(pt) ≡ (sum_(k<n) c_k (pt)^k)^2 (mod p^n)` for each sample `t`; the
/// dropped tail has valuation at least `n` and the `c_k` are `p`-integral.
pub fn padic_congruence_check(p: u64, level: u32, samples: &[i64]) -> Result<PadicReport> {
    let m = Modulus::new(p, level)?;
    let u = u_n_poly(p, level)?;
    let f = period_series(level as usize);
    let results = samples
        .par_iter()
        .map(|&t| -> Result<Option<PadicWitness>> {
            let z = p as i64 * t;
            let zq = Rational::from(z);
            let lhs = rational_to_mod(&u.eval(&zq), m)?;
            let partial: Rational = (0..level as usize).map(|k| f.coeff(k) * zq.pow(k as u32)).sum();
            let rhs = rational_to_mod(&(&partial * &partial), m)?;
            Ok((lhs != rhs).then_some(PadicWitness { t, z, u_n: lhs.value(), f_squared: rhs.value() }))
        })
        .collect::<Result<Vec<_>>>()?;
    let witness = results.into_iter().flatten().next();
    Ok(PadicReport { p, n: level, samples: samples.to_vec(), pass: witness.is_none(), witness })
}

/// Largest `k` such that coefficients of `U_n` and `F^2` agree mod `p^n` for
/// all indices below `k` (coefficients with a `p` in the denominator count
/// as disagreeing). Informational only.
pub fn coefficient_agreement(p: u64, level: u32) -> Result<usize> {
    let m = Modulus::new(p, level)?;
    let u = u_n_poly(p, level)?;
    let degree = m.value() as usize - 1;
    let f = period_series(degree + 1);
    let f2 = f.mul(&f);
    Ok((0..=degree)
        .take_while(|&k| match (rational_to_mod(&u.coeff(k), m), rational_to_mod(&f2.coeff(k), m)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        })
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_series_coefficients() {
        let f = period_series(3);
        assert_eq!(f.coeffs(), &[q(1, 1), q(1, 4), q(9, 64)]);
    }

    #[test]
    fn hypergeometric_ode_examples() {
        assert!(hypergeometric_ode_check(10));
        assert!(hypergeometric_ode_check(4));
        assert!(!satisfies_hypergeometric_ode(&TruncatedSeries::new(vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)])));
    }

    #[test]
    fn symmetric_square_ode_examples() {
        assert!(symmetric_square_ode_check(50));
        assert!(symmetric_square_ode_check(5));
        let z = TruncatedSeries::new(vec![q(0, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert!(!satisfies_symmetric_square_ode(&z));
    }

    #[test]
    fn coefficients_with_eighth_powers_fail_the_ode() {
        let f = TruncatedSeries::new(
            (0..8u64)
                .map(|k| {
                    let c = crate::ring::binomial(2 * k, k as i64);
                    Rational::from(&c * &c) / Rational::from(8i64.pow(k as u32))
                })
                .collect(),
        );
        assert!(!satisfies_hypergeometric_ode(&f));
    }

    #[test]
    fn u_n_examples() {
        assert_eq!(u_n_poly(3, 1).unwrap(), DensePoly::from_ints(&[1, -1, -2]));
        assert_eq!(u_n_poly(5, 1).unwrap(), eigen_poly(4).unwrap());
        let u = u_n_poly(3, 2).unwrap();
        assert_eq!(u.degree(), Some(8));
        assert_eq!(u.coeff(0), Rational::one());
    }

    #[test]
    fn padic_examples() {
        let r = padic_congruence_check(3, 1, &[1]).unwrap();
        assert!(r.pass);
        assert!(padic_congruence_check(3, 2, &[1, 2, 3, 4, 5]).unwrap().pass);
        assert!(padic_congruence_check(5, 2, &[1, 2, 3, 4, 5]).unwrap().pass);
        assert!(padic_congruence_check(2, 1, &[1]).is_err());
    }
}
