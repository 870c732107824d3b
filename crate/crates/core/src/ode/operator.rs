use std::fmt;

use crate::ring::{binomial, Rational};

use super::ExtendedFunction;

/// Linear differential operator `sum_i c_i(z) ∂^i` with coefficients whose
/// denominators are powers of `z` and `1 - z`.
#[derive(Clone, PartialEq)]
pub struct DifferentialOperator {
    coeffs: Vec<ExtendedFunction>,
}

impl DifferentialOperator {
    /// `coeffs[i]` multiplies the `i`-th derivative; the leading one must be nonzero.
    pub fn new(coeffs: Vec<ExtendedFunction>) -> Self {
        assert!(
            coeffs.last().is_some_and(|c| !c.is_zero()),
            "leading coefficient of a differential operator must be nonzero"
        );
        DifferentialOperator { coeffs }
    }

    /// `∂`.
    pub fn derivation() -> Self {
        DifferentialOperator::new(vec![ExtendedFunction::zero(), ExtendedFunction::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &ExtendedFunction {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[ExtendedFunction] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[self.order()] == ExtendedFunction::one()
    }

    pub fn apply(&self, f: &ExtendedFunction) -> ExtendedFunction {
        let mut acc = ExtendedFunction::zero();
        let mut deriv = f.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                deriv = deriv.derivative();
            }
            if !c.is_zero() {
                acc = acc.add(&c.mul(&deriv));
            }
        }
        acc
    }

    /// Left multiplication by a function: `h · L`.
    pub fn scale_left(&self, h: &ExtendedFunction) -> Self {
        DifferentialOperator::new(self.coeffs.iter().map(|c| h.mul(c)).collect())
    }

    /// Divide through by the leading coefficient, which must be invertible
    /// (a constant times `z^a (1-z)^b`).
    pub fn monic(&self) -> Option<Self> {
        let inv = self.coeffs[self.order()].inverse()?;
        Some(self.scale_left(&inv))
    }

    /// `g^-1 · L · g`, i.e. the operator `y ↦ L(g y) / g`, for invertible `g`.
    pub fn conjugate(&self, g: &ExtendedFunction) -> Option<Self> {
        let g_inv = g.inverse()?;
        let m = self.order();
        let g_derivs: Vec<ExtendedFunction> =
            std::iter::successors(Some(g.clone()), |d| Some(d.derivative())).take(m + 1).collect();
        let coeffs = (0..=m)
            .map(|j| {
                let sum = (j..=m).fold(ExtendedFunction::zero(), |acc, i| {
                    let c = Rational::from(binomial(i as u64, j as i64));
                    acc.add(&self.coeffs[i].mul(&g_derivs[i - j]).scale(&c))
                });
                sum.mul(&g_inv)
            })
            .collect();
        Some(DifferentialOperator::new(coeffs))
    }
}

impl fmt::Display for DifferentialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if i != self.order() {
                write!(f, " + ")?;
            }
            write!(f, "({c})∂^{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DifferentialOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `∂^3 + u2 ∂^2 + u1 ∂ + u0` for monic `L = ∂^2 + v1 ∂ + v0`, with
/// `u2 = 3 v1`, `u1 = 4 v0 + v1' + 2 v1^2`, `u0 = 2 v0' + 4 v0 v1`.
pub fn symmetric_square(l: &DifferentialOperator) -> DifferentialOperator {
    assert!(l.order() == 2 && l.is_monic(), "symmetric_square expects a monic second-order operator");
    let v0 = l.coeff(0);
    let v1 = l.coeff(1);
    let u2 = v1.scale(&Rational::from(3));
    let u1 = v0.scale(&Rational::from(4)).add(&v1.derivative()).add(&v1.mul(v1).scale(&Rational::from(2)));
    let u0 = v0.derivative().scale(&Rational::from(2)).add(&v0.mul(v1).scale(&Rational::from(4)));
    DifferentialOperator::new(vec![u0, u1, u2, ExtendedFunction::one()])
}

/// Solve the first two symmetric-square equations for `v1, v0` and test the
/// third. Returns `L` when the monic third-order `s` is `L`'s symmetric square.
pub fn symmetric_square_root(s: &DifferentialOperator) -> Option<DifferentialOperator> {
    assert!(s.order() == 3 && s.is_monic(), "expected a monic third-order operator");
    let third = Rational::new(1, 3);
    let quarter = Rational::new(1, 4);
    let v1 = s.coeff(2).scale(&third);
    let v0 = s.coeff(1).sub(&v1.derivative()).sub(&v1.mul(&v1).scale(&Rational::from(2))).scale(&quarter);
    let predicted_u0 = v0.derivative().scale(&Rational::from(2)).add(&v0.mul(&v1).scale(&Rational::from(4)));
    (predicted_u0 == *s.coeff(0)).then(|| DifferentialOperator::new(vec![v0, v1, ExtendedFunction::one()]))
}
