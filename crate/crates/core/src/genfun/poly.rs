use std::fmt;

use num_complex::Complex64;

use crate::error::Result;
use crate::ring::{rational_to_mod, ModInt, Modulus, Rational, Ring};

/// Dense univariate polynomial; `coeffs[i]` multiplies `z^i`.
///
/// Trailing zeros are allowed (the vector length is a degree bound), and
/// equality ignores them. The coefficient vector is never empty.
#[derive(Clone)]
pub struct DensePoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> DensePoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "DensePoly needs at least one coefficient (use [0])");
        coeffs.shrink_to_fit();
        DensePoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        DensePoly { coeffs: vec![c] }
    }

    /// `z^k` with the ring taken from `unit`.
    pub fn monomial(unit: &R, k: usize) -> Self {
        let mut coeffs = vec![unit.zero_like(); k + 1];
        coeffs[k] = unit.one_like();
        DensePoly { coeffs }
    }

    /// `a + b z`.
    pub fn linear(a: R, b: R) -> Self {
        DensePoly { coeffs: vec![a, b] }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the stored range.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero_elem())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn zero_like(&self) -> Self {
        DensePoly::constant(self.coeffs[0].zero_like())
    }

    pub fn one_like(&self) -> Self {
        DensePoly::constant(self.coeffs[0].one_like())
    }

    pub fn trimmed(mut self) -> Self {
        let len = self.degree().map_or(1, |d| d + 1);
        self.coeffs.truncate(len);
        self
    }

    /// Pads with zeros so that `bound() >= n`.
    pub fn with_bound(mut self, n: usize) -> Self {
        if self.coeffs.len() <= n {
            let zero = self.coeffs[0].zero_like();
            self.coeffs.resize(n + 1, zero);
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        DensePoly { coeffs: (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        DensePoly { coeffs: (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect() }
    }

    pub fn neg(&self) -> Self {
        DensePoly { coeffs: self.coeffs.iter().cloned().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly { coeffs: out }
    }

    pub fn scale(&self, c: &R) -> Self {
        DensePoly { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return self.zero_like();
        }
        DensePoly {
            coeffs: self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.from_int_like(i as i64 + 1) * c.clone())
                .collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &R) -> R {
        self.coeffs.iter().rev().fold(self.coeffs[0].zero_like(), |acc, c| acc * z.clone() + c.clone())
    }

    /// `f(g(z))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(self.zero_like(), |acc, c| acc.mul(g).add(&DensePoly::constant(c.clone())))
    }

    /// Division with remainder by a divisor whose leading coefficient is one.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        assert!(divisor.coeffs[d] == divisor.coeffs[d].one_like(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        let zero = self.coeffs[0].zero_like();
        let Some(n) = self.degree() else {
            return (self.zero_like(), self.zero_like());
        };
        if n < d {
            return (self.zero_like(), self.clone().trimmed());
        }
        let mut quot = vec![zero.clone(); n - d + 1];
        for i in (0..=n - d).rev() {
            let lead = rem[i + d].clone();
            if lead.is_zero_elem() {
                continue;
            }
            for j in 0..=d {
                rem[i + j] = rem[i + j].clone() - lead.clone() * divisor.coeffs[j].clone();
            }
            quot[i] = lead;
        }
        rem.truncate(d.max(1));
        (DensePoly { coeffs: quot }, DensePoly { coeffs: rem }.trimmed())
    }

    /// Coefficients read in reverse over `0..=n`: `z^n f(1/z)`.
    pub fn reversed(&self, n: usize) -> Self {
        let padded = self.clone().with_bound(n);
        DensePoly { coeffs: (0..=n).rev().map(|i| padded.coeff(i)).collect() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> DensePoly<S> {
        DensePoly { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl DensePoly<Rational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        DensePoly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        DensePoly::constant(Rational::zero())
    }

    pub fn one() -> Self {
        DensePoly::constant(Rational::one())
    }

    pub fn reduce_mod(&self, modulus: Modulus) -> Result<DensePoly<ModInt>> {
        let coeffs = self.coeffs.iter().map(|c| rational_to_mod(c, modulus)).collect::<Result<Vec<_>>>()?;
        Ok(DensePoly { coeffs })
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c.to_f64())
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64())
    }
}

impl<R: Ring> PartialEq for DensePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl<R: Ring> fmt::Display for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in 0..=deg {
            let c = &self.coeffs[i];
            if c.is_zero_elem() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
