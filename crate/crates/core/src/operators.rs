//! Matrix-free actions of the symmetric Pascal matrix `T_N`, the commuting
//! Jacobi matrix `J_N`, and the binomial transform `B_N` (with its adjoint)
//! on exact rational vectors.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{binomial, Rational};

/// A vector `(v_0, ..., v_N)` of exact rationals; its order is `N = len - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ExactVector(Vec<Rational>);

impl ExactVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        assert!(!entries.is_empty(), "an order-N vector has N+1 >= 1 entries");
        ExactVector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        ExactVector::new(entries.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn zeros(order: usize) -> Self {
        ExactVector(vec![Rational::zero(); order + 1])
    }

    /// Standard basis vector `e_k` of order `N`.
    pub fn basis(order: usize, k: usize) -> Self {
        let mut v = ExactVector::zeros(order);
        v.0[k] = Rational::one();
        v
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Self {
        ExactVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    fn expect_order(&self, order: usize) -> Result<()> {
        if self.0.len() != order + 1 {
            return Err(Error::LengthMismatch { order, got: self.0.len() });
        }
        Ok(())
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OperatorKind {
    Pascal,
    Jacobi,
    BinomialForward,
    BinomialAdjoint,
}

/// One of the four structured matrices at a fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    pub order: usize,
}

impl OperatorSpec {
    pub fn new(kind: OperatorKind, order: usize) -> Self {
        OperatorSpec { kind, order }
    }

    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector> {
        match self.kind {
            OperatorKind::Pascal => pascal_apply(self.order, v),
            OperatorKind::Jacobi => jacobi_apply(self.order, v),
            OperatorKind::BinomialForward => binomial_apply(self.order, v),
            OperatorKind::BinomialAdjoint => binomial_adjoint_apply(self.order, v),
        }
    }

    /// Entry `(j, k)` straight from the defining formula.
    pub fn entry(&self, j: usize, k: usize) -> Rational {
        let n = self.order;
        let sign = |e: usize, x: BigInt| if e % 2 == 0 { x } else { -x };
        let x = match self.kind {
            OperatorKind::Pascal => binomial((j + k) as u64, j as i64),
            OperatorKind::Jacobi if j == k => jacobi_diag(n, j as i64),
            OperatorKind::Jacobi if j + 1 == k => jacobi_offdiag(n, k as i64),
            OperatorKind::Jacobi if k + 1 == j => jacobi_offdiag(n, j as i64),
            OperatorKind::Jacobi => BigInt::from(0),
            OperatorKind::BinomialForward => sign(k, binomial(j as u64, k as i64)),
            OperatorKind::BinomialAdjoint => sign(j, binomial(k as u64, j as i64)),
        };
        Rational::from(x)
    }

    /// Dense row-major materialization from the entry formulas.
    pub fn dense(&self) -> Vec<Vec<Rational>> {
        let n = self.order;
        (0..=n).map(|j| (0..=n).map(|k| self.entry(j, k)).collect()).collect()
    }
}

/// Off-diagonal entry `a(n) = (N+1)^2 n - n^3` of `J_N`.
pub fn jacobi_offdiag(order: usize, n: i64) -> BigInt {
    let s = BigInt::from(order as i64 + 1);
    let n = BigInt::from(n);
    &s * &s * &n - &n * &n * &n
}

/// Diagonal entry `b(n) = 2n^3 + 3n^2 + 2n - (N+1)^2 n` of `J_N`.
pub fn jacobi_diag(order: usize, n: i64) -> BigInt {
    let s = BigInt::from(order as i64 + 1);
    let n = BigInt::from(n);
    BigInt::from(2) * &n * &n * &n + BigInt::from(3) * &n * &n + BigInt::from(2) * &n - &s * &s * &n
}

/// `(T_N v)_j = sum_k C(j+k, j) v_k`.
pub fn pascal_apply(order: usize, v: &ExactVector) -> Result<ExactVector> {
    v.expect_order(order)?;
    let mut out = Vec::with_capacity(order + 1);
    for j in 0..=order {
        // C(j+k, j) for k = 0, 1, ... via C(j+k+1, j) = C(j+k, j) (j+k+1)/(k+1)
        let mut c = BigInt::from(1);
        let mut acc = Rational::zero();
        for (k, x) in v.entries().iter().enumerate() {
            if !x.is_zero() {
                acc += &(x * &Rational::from(c.clone()));
            }
            c = c * (j + k + 1) / (k + 1);
        }
        out.push(acc);
    }
    Ok(ExactVector(out))
}

/// Tridiagonal action of `J_N`.
pub fn jacobi_apply(order: usize, v: &ExactVector) -> Result<ExactVector> {
    v.expect_order(order)?;
    let e = v.entries();
    let out = (0..=order)
        .map(|n| {
            let mut acc = Rational::from(jacobi_diag(order, n as i64)) * &e[n];
            if n > 0 {
                acc += &(Rational::from(jacobi_offdiag(order, n as i64)) * &e[n - 1]);
            }
            if n < order {
                acc += &(Rational::from(jacobi_offdiag(order, n as i64 + 1)) * &e[n + 1]);
            }
            acc
        })
        .collect();
    Ok(ExactVector(out))
}

/// `(B_N v)_j = sum_k (-1)^k C(j, k) v_k`.
pub fn binomial_apply(order: usize, v: &ExactVector) -> Result<ExactVector> {
    v.expect_order(order)?;
    let out = (0..=order)
        .map(|j| {
            v.entries()[..=j]
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| {
                    let c = Rational::from(binomial(j as u64, k as i64));
                    if k % 2 == 0 {
                        x * &c
                    } else {
                        -(x * &c)
                    }
                })
                .sum()
        })
        .collect();
    Ok(ExactVector(out))
}

/// `(B_N^* v)_j = sum_k (-1)^j C(k, j) v_k`.
pub fn binomial_adjoint_apply(order: usize, v: &ExactVector) -> Result<ExactVector> {
    v.expect_order(order)?;
    let out = (0..=order)
        .map(|j| {
            let s: Rational = v.entries()[j..]
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| x * &Rational::from(binomial((j + i) as u64, j as i64)))
                .sum();
            if j % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect();
    Ok(ExactVector(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StructureIdentity {
    /// `B_N^2 = I`
    BinomialInvolution,
    /// `T_N = B_N B_N^*`
    Cholesky,
    /// `T_N J_N = J_N T_N`
    Commutation,
    /// `B_N T_N B_N T_N = I`
    Conjugation,
}

impl StructureIdentity {
    pub const ALL: [StructureIdentity; 4] = [
        StructureIdentity::BinomialInvolution,
        StructureIdentity::Cholesky,
        StructureIdentity::Commutation,
        StructureIdentity::Conjugation,
    ];

    /// Returns `(lhs e_k, rhs e_k)`.
    fn sides(&self, order: usize, e: &ExactVector) -> Result<(ExactVector, ExactVector)> {
        let t = |v: &ExactVector| pascal_apply(order, v);
        let j = |v: &ExactVector| jacobi_apply(order, v);
        let b = |v: &ExactVector| binomial_apply(order, v);
        let bs = |v: &ExactVector| binomial_adjoint_apply(order, v);
        Ok(match self {
            StructureIdentity::BinomialInvolution => (b(&b(e)?)?, e.clone()),
            StructureIdentity::Cholesky => (t(e)?, b(&bs(e)?)?),
            StructureIdentity::Commutation => (t(&j(e)?)?, j(&t(e)?)?),
            StructureIdentity::Conjugation => (b(&t(&b(&t(e)?)?)?)?, e.clone()),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureFailure {
    pub identity: StructureIdentity,
    pub basis_index: usize,
    pub lhs: ExactVector,
    pub rhs: ExactVector,
}

/// Check one structural identity on every standard basis vector; the
/// failure reported is the one with the lowest basis index.
pub fn identity_check(identity: StructureIdentity, order: usize) -> std::result::Result<(), StructureFailure> {
    let failure = (0..=order)
        .into_par_iter()
        .map(|k| {
            let (lhs, rhs) = identity.sides(order, &ExactVector::basis(order, k)).expect("orders agree");
            (k, lhs, rhs)
        })
        .filter(|(_, lhs, rhs)| lhs != rhs)
        .min_by_key(|(k, _, _)| *k);
    match failure {
        Some((basis_index, lhs, rhs)) => Err(StructureFailure { identity, basis_index, lhs, rhs }),
        None => Ok(()),
    }
}

/// Check the four structural identities on every standard basis vector.
/// Returns the first failure in (identity, basis index) order.
pub fn structure_checks(order: usize) -> std::result::Result<(), StructureFailure> {
    StructureIdentity::ALL.into_iter().try_for_each(|identity| identity_check(identity, order))
}
