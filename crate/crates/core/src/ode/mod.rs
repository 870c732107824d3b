//! The third-order operator annihilated by generating functions of `J_N`
//! eigenvectors, its reduction to a symmetric square, and the explicit
//! solution basis built from `P(z) = 2F1(-N/2, N/2+1; -N; z)`.

mod extended;
mod operator;

use crate::error::Result;
use crate::genfun::{legendre_factor, reflect, DensePoly};
use crate::ring::{q, Rational};

pub use extended::ExtendedFunction;
pub use operator::{symmetric_square, symmetric_square_root, DifferentialOperator};

/// `(N^2 + 2N)/2`, the eigenvalue of `J_N` on the eigenvalue-one line of `T_N`.
pub fn distinguished_eigenvalue(order: usize) -> Rational {
    let n = order as i64;
    q(n * n + 2 * n, 2)
}

fn p(coeffs: &[i64]) -> ExtendedFunction {
    ExtendedFunction::from_ints(coeffs)
}

/// `y ↦ z^2(1-z)^2 y''' + 3z(1-z)((N-1)z-N) y''
///      + N((2N-5)z^2 + (2-5N)z + 2N+1) y' + N((2N+1)z + N^2+N+1) y - mu y`.
pub fn third_order_operator(order: usize, mu: &Rational) -> DifferentialOperator {
    let n = order as i64;
    let c3 = ExtendedFunction::monomial(2, 2);
    // 3z(1-z)((N-1)z - N) = -3N z + (3N + 3(N-1)) z^2 - 3(N-1) z^3
    let c2 = p(&[0, -3 * n, 3 * n + 3 * (n - 1), -3 * (n - 1)]);
    let c1 = p(&[n * (2 * n + 1), n * (2 - 5 * n), n * (2 * n - 5)]);
    let c0 = p(&[n * (n * n + n + 1), n * (2 * n + 1)]).sub(&ExtendedFunction::constant(mu.clone()));
    DifferentialOperator::new(vec![c0, c1, c2, c3])
}

/// `z^(-(N+1))`-conjugated, monic form of [`third_order_operator`]: the operator
/// `y ↦ B(z^(N+1) y) / (z^(N+1) z^2 (1-z)^2)`.
pub fn conjugated_operator(order: usize, mu: &Rational) -> DifferentialOperator {
    let g = ExtendedFunction::monomial(order as i64 + 1, 0);
    third_order_operator(order, mu)
        .conjugate(&g)
        .and_then(|op| op.monic())
        .expect("z^(N+1) and z^2 (1-z)^2 are invertible")
}

/// The monic third-order operator written out in closed form:
/// `∂^3 - 3(2z-1)/(z(1-z)) ∂^2 + ((M-6)/(z(1-z)) - M/(z^2(1-z)^2)) ∂
///  + M/(z^2(1-z)) - mu/(z^2(1-z)^2)` with `M = N^2 + 2N`.
pub fn closed_form_conjugated_operator(order: usize, mu: &Rational) -> DifferentialOperator {
    let n = order as i64;
    let m = Rational::from(n * n + 2 * n);
    let u2 = ExtendedFunction::new(DensePoly::from_ints(&[-1, 2]), -1, -1).scale(&Rational::from(-3));
    let u1 = ExtendedFunction::monomial(-1, -1)
        .scale(&(&m - &Rational::from(6)))
        .sub(&ExtendedFunction::monomial(-2, -2).scale(&m));
    let u0 = ExtendedFunction::monomial(-2, -1).scale(&m).sub(&ExtendedFunction::monomial(-2, -2).scale(mu));
    DifferentialOperator::new(vec![u0, u1, u2, ExtendedFunction::one()])
}

/// `L = ∂^2 + (1-2z)/(z(1-z)) ∂ - (M(z^2-z+1) + 1)/(4 z^2 (1-z)^2)`.
pub fn legendre_type_operator(order: usize) -> DifferentialOperator {
    let n = order as i64;
    let m = n * n + 2 * n;
    let v1 = ExtendedFunction::new(DensePoly::from_ints(&[1, -2]), -1, -1);
    let v0 = ExtendedFunction::new(DensePoly::from_ints(&[m + 1, -m, m]), -2, -2).scale(&q(-1, 4));
    DifferentialOperator::new(vec![v0, v1, ExtendedFunction::one()])
}

/// Returns the second-order `L` with `L^(s2)` equal to the conjugated
/// third-order operator, or `None` when no such `L` exists.
pub fn symmetric_square_criterion(order: usize, mu: &Rational) -> Option<DifferentialOperator> {
    symmetric_square_root(&conjugated_operator(order, mu))
}

/// `(y1, y2, y3)` = `((z/(1-z))^(N+1) P(1-z)^2, P(1-z) P(z), ((1-z)/z)^(N+1) P(z)^2)`.
pub fn gensoln_basis(order: usize) -> Result<[ExtendedFunction; 3]> {
    let pz = legendre_factor(order)?;
    let p1 = reflect(&pz);
    let e = order as i64 + 1;
    Ok([
        ExtendedFunction::new(p1.mul(&p1), e, -e),
        ExtendedFunction::poly(p1.mul(&pz)),
        ExtendedFunction::new(pz.mul(&pz), -e, e),
    ])
}

/// The homogeneous operator at `mu = M/2`, cleared of denominators by `z^2 (1-z)^2`.
pub fn cleared_gensoln_operator(order: usize) -> DifferentialOperator {
    closed_form_conjugated_operator(order, &distinguished_eigenvalue(order))
        .scale_left(&ExtendedFunction::monomial(2, 2))
}

/// Whether all three basis functions are annihilated exactly.
pub fn gensoln_basis_check(order: usize) -> Result<bool> {
    let op = cleared_gensoln_operator(order);
    Ok(gensoln_basis(order)?.iter().all(|y| op.apply(y).is_zero()))
}

/// `B(z^(N+1) z^j) = z^(N+1) z^2 (1-z)^2 S(z^j)` for `j <= N+3`, with `B`
/// at `mu = M/2` and `S` the closed-form conjugated operator.
pub fn substitution_conjugate_check(order: usize) -> bool {
    let mu = distinguished_eigenvalue(order);
    let b = third_order_operator(order, &mu);
    let s = closed_form_conjugated_operator(order, &mu);
    let e = order as i64 + 1;
    let lift = ExtendedFunction::monomial(e + 2, 2);
    (0..=order as i64 + 3).all(|j| {
        let y = ExtendedFunction::monomial(j, 0);
        b.apply(&ExtendedFunction::monomial(j + e, 0)) == lift.mul(&s.apply(&y))
    })
}

/// Apply [`third_order_operator`] to a polynomial.
pub fn apply_third_order(order: usize, mu: &Rational, f: &DensePoly<Rational>) -> DensePoly<Rational> {
    let out = third_order_operator(order, mu).apply(&ExtendedFunction::poly(f.clone()));
    out.as_poly().expect("polynomial coefficients map polynomials to polynomials")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::eigen_poly;

    #[test]
    fn third_order_examples() {
        let f = DensePoly::from_ints(&[1, -1, -2]);
        assert!(apply_third_order(2, &Rational::from(4), &f).is_zero());
        // without the -mu term the operator returns 4f
        assert_eq!(apply_third_order(2, &Rational::zero(), &f), DensePoly::from_ints(&[4, -4, -8]));
        assert!(apply_third_order(5, &q(3, 7), &DensePoly::zero()).is_zero());
        assert!(apply_third_order(4, &Rational::from(12), &eigen_poly(4).unwrap()).is_zero());
    }

    #[test]
    fn conjugation_matches_closed_form() {
        for n in [0usize, 1, 2, 5, 6] {
            for mu in [Rational::zero(), q(7, 3), distinguished_eigenvalue(n)] {
                assert_eq!(conjugated_operator(n, &mu), closed_form_conjugated_operator(n, &mu), "N={n} mu={mu}");
            }
        }
    }

    #[test]
    fn criterion_examples() {
        assert_eq!(symmetric_square_criterion(4, &Rational::from(12)), Some(legendre_type_operator(4)));
        assert_eq!(symmetric_square_criterion(4, &Rational::zero()), None);
        assert!(symmetric_square_criterion(2, &Rational::from(4)).is_some());
    }

    #[test]
    fn legendre_type_square_is_conjugated_operator() {
        for n in [0usize, 2, 4, 10] {
            let mu = distinguished_eigenvalue(n);
            assert_eq!(symmetric_square(&legendre_type_operator(n)), closed_form_conjugated_operator(n, &mu));
        }
    }

    #[test]
    fn gensoln_examples() {
        for n in [0usize, 2, 8] {
            assert!(gensoln_basis_check(n).unwrap(), "N={n}");
        }
    }

    #[test]
    fn substitution_examples() {
        for n in [0usize, 2, 6] {
            assert!(substitution_conjugate_check(n), "N={n}");
        }
    }
}
