use std::fmt;

use crate::genfun::DensePoly;
use crate::ring::Rational;

/// `q(z) z^a (1-z)^b` with integer (possibly negative) exponents.
///
/// Kept normalized: `q` is divisible by neither `z` nor `1 - z` (or `q = 0`
/// with both exponents zero), so equality is structural.
#[derive(Clone, PartialEq)]
pub struct ExtendedFunction {
    q: DensePoly<Rational>,
    a: i64,
    b: i64,
}

impl ExtendedFunction {
    pub fn new(q: DensePoly<Rational>, a: i64, b: i64) -> Self {
        ExtendedFunction { q, a, b }.normalized()
    }

    pub fn zero() -> Self {
        ExtendedFunction { q: DensePoly::zero(), a: 0, b: 0 }
    }

    pub fn one() -> Self {
        ExtendedFunction::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        ExtendedFunction::new(DensePoly::constant(c), 0, 0)
    }

    pub fn poly(q: DensePoly<Rational>) -> Self {
        ExtendedFunction::new(q, 0, 0)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ExtendedFunction::poly(DensePoly::from_ints(coeffs))
    }

    /// `z^a (1-z)^b`.
    pub fn monomial(a: i64, b: i64) -> Self {
        ExtendedFunction::new(DensePoly::one(), a, b)
    }

    pub fn q(&self) -> &DensePoly<Rational> {
        &self.q
    }

    pub fn z_exponent(&self) -> i64 {
        self.a
    }

    pub fn one_minus_z_exponent(&self) -> i64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    /// Polynomial value if both exponents are nonnegative.
    pub fn as_poly(&self) -> Option<DensePoly<Rational>> {
        if self.a < 0 || self.b < 0 {
            return None;
        }
        let one_minus_z = DensePoly::from_ints(&[1, -1]);
        Some(self.q.shift(self.a as usize).mul(&one_minus_z.pow(self.b as usize)).trimmed())
    }

    fn normalized(mut self) -> Self {
        self.q = self.q.trimmed();
        if self.q.is_zero() {
            return ExtendedFunction::zero();
        }
        let zeros = self.q.coeffs().iter().take_while(|c| c.is_zero()).count();
        if zeros > 0 {
            self.q = DensePoly::new(self.q.coeffs()[zeros..].to_vec());
            self.a += zeros as i64;
        }
        let z_minus_one = DensePoly::from_ints(&[-1, 1]);
        while self.q.degree().unwrap_or(0) > 0 && self.q.eval(&Rational::one()).is_zero() {
            let (quot, _) = self.q.div_rem_monic(&z_minus_one);
            self.q = quot.neg();
            self.b += 1;
        }
        self
    }

    /// `q` rewritten over the common exponents `(a, b)` with `a <= self.a`, `b <= self.b`.
    fn lifted(&self, a: i64, b: i64) -> DensePoly<Rational> {
        let one_minus_z = DensePoly::from_ints(&[1, -1]);
        self.q.shift((self.a - a) as usize).mul(&one_minus_z.pow((self.b - b) as usize))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let a = self.a.min(other.a);
        let b = self.b.min(other.b);
        ExtendedFunction::new(self.lifted(a, b).add(&other.lifted(a, b)), a, b)
    }

    pub fn neg(&self) -> Self {
        ExtendedFunction { q: self.q.neg(), a: self.a, b: self.b }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ExtendedFunction::zero();
        }
        ExtendedFunction::new(self.q.mul(&other.q), self.a + other.a, self.b + other.b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExtendedFunction::new(self.q.scale(c), self.a, self.b)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(ExtendedFunction::one(), |acc, _| acc.mul(self))
    }

    /// Inverse, available when `q` is a nonzero constant.
    pub fn inverse(&self) -> Option<Self> {
        if self.q.degree() != Some(0) {
            return None;
        }
        let c = self.q.coeff(0).recip()?;
        Some(ExtendedFunction { q: DensePoly::constant(c), a: -self.a, b: -self.b })
    }

    /// `d/dz [q z^a (1-z)^b] = [q' z(1-z) + a q (1-z) - b q z] z^(a-1) (1-z)^(b-1)`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return ExtendedFunction::zero();
        }
        let z = DensePoly::from_ints(&[0, 1]);
        let one_minus_z = DensePoly::from_ints(&[1, -1]);
        let q = &self.q;
        let body = q
            .derivative()
            .mul(&z.mul(&one_minus_z))
            .add(&q.mul(&one_minus_z).scale(&Rational::from(self.a)))
            .sub(&q.mul(&z).scale(&Rational::from(self.b)));
        ExtendedFunction::new(body, self.a - 1, self.b - 1)
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }

    /// Value at a rational point away from the poles.
    pub fn eval(&self, z: &Rational) -> Option<Rational> {
        let one = Rational::one();
        let zpow = pow_int(z, self.a)?;
        let wpow = pow_int(&(&one - z), self.b)?;
        Some(self.q.eval(z) * zpow * wpow)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.q.eval_f64(z) * z.powi(self.a as i32) * (1.0 - z).powi(self.b as i32)
    }
}

fn pow_int(x: &Rational, e: i64) -> Option<Rational> {
    if e >= 0 {
        Some(x.pow(e as u32))
    } else {
        Some(x.recip()?.pow((-e) as u32))
    }
}

impl fmt::Display for ExtendedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.q)?;
        if self.a != 0 {
            write!(f, " z^{}", self.a)?;
        }
        if self.b != 0 {
            write!(f, " (1-z)^{}", self.b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtendedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn normal_form_extracts_factors() {
        // z^2 - z^3 = z^2 (1 - z)
        let f = ExtendedFunction::from_ints(&[0, 0, 1, -1]);
        assert_eq!((f.z_exponent(), f.one_minus_z_exponent()), (2, 1));
        assert_eq!(f, ExtendedFunction::monomial(2, 1));
        assert_eq!(f.as_poly().unwrap(), DensePoly::from_ints(&[0, 0, 1, -1]));
    }

    #[test]
    fn addition_aligns_exponents() {
        // z/(1-z) + 1 = 1/(1-z)
        let f = ExtendedFunction::monomial(1, -1).add(&ExtendedFunction::one());
        assert_eq!(f, ExtendedFunction::monomial(0, -1));
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(ExtendedFunction::monomial(1, 0).derivative(), ExtendedFunction::one());
        assert_eq!(ExtendedFunction::monomial(0, 2).derivative(), ExtendedFunction::monomial(0, 1).scale(&q(-2, 1)));
        // d/dz z^2/(1-z) = (2z - z^2)/(1-z)^2
        let expected = ExtendedFunction::new(DensePoly::from_ints(&[0, 2, -1]), 0, -2);
        assert_eq!(ExtendedFunction::monomial(2, -1).derivative(), expected);
    }

    #[test]
    fn inverse_of_monomial() {
        let f = ExtendedFunction::monomial(2, 2).scale(&q(3, 1));
        assert_eq!(f.mul(&f.inverse().unwrap()), ExtendedFunction::one());
        assert!(ExtendedFunction::from_ints(&[1, 1]).inverse().is_none());
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let f = ExtendedFunction::new(DensePoly::from_ints(&[2, -1, 3]), -2, 3);
        let df = f.derivative();
        for z in [q(1, 3), q(-1, 2), q(5, 2), q(2, 7), q(-3, 1)] {
            let x = z.to_f64();
            let h = 1e-6;
            let fd = (f.eval_f64(x + h) - f.eval_f64(x - h)) / (2.0 * h);
            let exact = df.eval(&z).unwrap().to_f64();
            assert!((fd - exact).abs() < 1e-6 * exact.abs().max(1.0), "z={z}: {fd} vs {exact}");
        }
    }
}
