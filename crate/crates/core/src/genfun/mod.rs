//! Generating functions `f(v; z) = sum_k v_k z^(N-k)`, the terminating
//! hypergeometric polynomials behind the eigenvalue-one eigenvector of `T_N`,
//! and the functional equations that tie vectors and polynomials together.

mod contour;
mod hypergeometric;
mod mobius;
mod poly;

use crate::error::{Error, Result};
use crate::operators::{binomial_adjoint_apply, binomial_apply, pascal_apply, ExactVector};
use crate::ring::{factorial, pochhammer, q, Rational};

pub use contour::{contour_closed_form, in_validity_disk, integral_operator_numeric, ContourEstimate, Quadrature};
pub use hypergeometric::{hyp2f1_terminating, HypergeometricSpec};
pub use mobius::{mobius_substitute, reflect, AnharmonicMap, MobiusMap};
pub use poly::DensePoly;

/// `f(v; z)`: entry `v_k` becomes the coefficient of `z^(N-k)`.
pub fn gen_poly(v: &ExactVector) -> DensePoly<Rational> {
    DensePoly::new(v.entries().iter().rev().cloned().collect())
}

/// Inverse of [`gen_poly`] at a fixed order.
pub fn vector_of(f: &DensePoly<Rational>, order: usize) -> ExactVector {
    ExactVector::new((0..=order).rev().map(|i| f.coeff(i)).collect())
}

fn require_even(order: usize) -> Result<()> {
    if order % 2 != 0 {
        return Err(Error::OddOrder(order));
    }
    Ok(())
}

/// `2F1(-N/2, N/2+1; -N; z)`.
pub fn legendre_factor(order: usize) -> Result<DensePoly<Rational>> {
    require_even(order)?;
    hyp2f1_terminating(&HypergeometricSpec::legendre_factor(order)?)
}

/// `2F1(-N/2, -3N/2-1; -N; z)`.
pub fn pfaff_factor(order: usize) -> Result<DensePoly<Rational>> {
    require_even(order)?;
    hyp2f1_terminating(&HypergeometricSpec::pfaff_factor(order)?)
}

/// Generating function of the eigenvalue-one eigenvector of `T_N`, as the
/// product of the two terminating hypergeometric factors.
pub fn eigen_poly(order: usize) -> Result<DensePoly<Rational>> {
    Ok(legendre_factor(order)?.mul(&pfaff_factor(order)?).with_bound(order))
}

/// The eigenvalue-one eigenvector of `T_N` (normalized by `v_N = 1`), built
/// from the closed-form double sum over Pochhammer ratios.
///
/// The double sum indexed by `l` gives the coefficient of `z^l` in the
/// generating function, i.e. the entry `v_(N-l)`.
pub fn eigen_vector(order: usize) -> Result<ExactVector> {
    require_even(order)?;
    let n = order as i64;
    let half = order / 2;
    let minus_half = q(-n, 2);
    let left_b = q(n + 2, 2);
    let right_b = q(-3 * n - 2, 2);
    let lower = q(-n, 1);
    let term = |b: &Rational, j: usize| {
        pochhammer(&minus_half, j) * pochhammer(b, j) / (Rational::from(factorial(j as u64)) * pochhammer(&lower, j))
    };
    let left: Vec<Rational> = (0..=half).map(|j| term(&left_b, j)).collect();
    let right: Vec<Rational> = (0..=half).map(|k| term(&right_b, k)).collect();
    let mut entries = vec![Rational::zero(); order + 1];
    for (l, slot) in entries.iter_mut().rev().enumerate() {
        let lo = l.saturating_sub(half);
        let hi = l.min(half);
        *slot = (lo..=hi).map(|j| &left[j] * &right[l - j]).sum();
    }
    Ok(ExactVector::new(entries))
}

/// Polynomial part of `z^(2N+1) (z-1)^-(N+1) f(v; 1-1/z)`, which equals
/// `f(T_N v; z)`.
pub fn taction_image(order: usize, v: &ExactVector) -> Result<DensePoly<Rational>> {
    let (quot, _) = taction_split(order, v)?;
    Ok(quot)
}

/// `z^(N+1) * z^N f(v; 1-1/z)` divided by `(z-1)^(N+1)`: (quotient, remainder).
pub(crate) fn taction_split(order: usize, v: &ExactVector) -> Result<(DensePoly<Rational>, DensePoly<Rational>)> {
    if v.order() != order {
        return Err(Error::LengthMismatch { order, got: v.order() + 1 });
    }
    let f = gen_poly(v);
    let numerator = mobius_substitute(&f, MobiusMap::OneMinusInverse, order)?.shift(order + 1);
    let divisor = DensePoly::from_ints(&[-1, 1]).pow(order + 1);
    Ok(numerator.div_rem_monic(&divisor))
}

/// `(z-1)^N f(v; z/(z-1))`.
fn z_over_z_minus_one(order: usize, f: &DensePoly<Rational>) -> Result<DensePoly<Rational>> {
    let scaled = mobius_substitute(f, MobiusMap::ZOverZMinusOne, order)?;
    Ok(if order % 2 == 0 { scaled } else { scaled.neg() })
}

/// `f(B_N^* v; z) = (z-1)^N f(v; z/(z-1))`.
pub fn b_adjoint_identity_check(order: usize, v: &ExactVector) -> Result<bool> {
    let lhs = gen_poly(&binomial_adjoint_apply(order, v)?);
    Ok(lhs == z_over_z_minus_one(order, &gen_poly(v))?)
}

/// For a `lambda`-eigenvector of `T_N`:
/// `lambda f(v; z) = (z-1)^N f(B_N v; z/(z-1))`.
pub fn eigen_relation_check(order: usize, v: &ExactVector, lambda: &Rational) -> Result<bool> {
    if pascal_apply(order, v)? != v.scale(lambda) {
        return Err(Error::NotAnEigenvector { order });
    }
    let lhs = gen_poly(v).scale(lambda);
    let rhs = z_over_z_minus_one(order, &gen_poly(&binomial_apply(order, v)?))?;
    Ok(lhs == rhs)
}

/// `2F1(-N/2,-3N/2-1;-N;z) = P(z)(1-z)^(N+1) + (-1)^(N/2) P(1-z) z^(N+1)`
/// with `P = 2F1(-N/2,N/2+1;-N;·)`.
pub fn helper_identity_check(order: usize) -> Result<bool> {
    let p = legendre_factor(order)?;
    let lhs = pfaff_factor(order)?;
    let one_minus_z = DensePoly::from_ints(&[1, -1]);
    let mut second = reflect(&p).shift(order + 1);
    if (order / 2) % 2 == 1 {
        second = second.neg();
    }
    let rhs = p.mul(&one_minus_z.pow(order + 1)).add(&second);
    Ok(lhs == rhs)
}

/// Whether `2F1(-N/2, N/2+1; -N; z)` reads the same backwards.
pub fn legendre_factor_is_palindromic(order: usize) -> Result<bool> {
    let p = legendre_factor(order)?;
    let d = order / 2;
    Ok(p.reversed(d) == p)
}
