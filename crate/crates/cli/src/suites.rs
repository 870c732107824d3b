//! One exact check per (suite, N). Each returns a witness string on failure.

use prolate_core::genfun::{
    eigen_poly, eigen_relation_check, eigen_vector, gen_poly, helper_identity_check, legendre_factor_is_palindromic,
    taction_image,
};
use prolate_core::ode::{
    apply_third_order, distinguished_eigenvalue, gensoln_basis_check, legendre_type_operator,
    substitution_conjugate_check, symmetric_square_criterion,
};
use prolate_core::operators::{identity_check, jacobi_apply, pascal_apply, StructureFailure, StructureIdentity};
use prolate_core::{ExactVector, Rational, Result};

use crate::args::Suite;

fn structure(identity: StructureIdentity, n: usize) -> Option<String> {
    identity_check(identity, n).err().map(|StructureFailure { identity, basis_index, lhs, rhs }| {
        format!("{identity:?} fails on e_{basis_index}: {lhs} vs {rhs}")
    })
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}

pub fn check(suite: Suite, n: usize) -> Result<Option<String>> {
    Ok(match suite {
        Suite::Pascal => {
            let v = eigen_vector(n)?;
            let tv = pascal_apply(n, &v)?;
            require(tv == v, || format!("T v = {tv} for v = {v}"))
        }
        Suite::Jacobi => {
            let v = eigen_vector(n)?;
            let jv = jacobi_apply(n, &v)?;
            let lambda = distinguished_eigenvalue(n);
            require(jv == v.scale(&lambda), || format!("J v = {jv}, expected {lambda} * {v}"))
                .or_else(|| structure(StructureIdentity::Commutation, n))
        }
        Suite::Binomial => structure(StructureIdentity::BinomialInvolution, n)
            .or_else(|| structure(StructureIdentity::Conjugation, n))
            .or(if n % 2 == 0 {
                let v = eigen_vector(n)?;
                require(eigen_relation_check(n, &v, &Rational::one())?, || {
                    format!("f(v; z) != (z-1)^N f(B v; z/(z-1)) for v = {v}")
                })
            } else {
                None
            }),
        Suite::Cholesky => structure(StructureIdentity::Cholesky, n),
        Suite::Ode => {
            let f = eigen_poly(n)?;
            let residual = apply_third_order(n, &distinguished_eigenvalue(n), &f);
            require(residual.is_zero(), || format!("residual {residual}"))
                .or_else(|| require(substitution_conjugate_check(n), || "conjugated operator mismatch".into()))
        }
        Suite::SymmetricSquare => {
            let m = distinguished_eigenvalue(n);
            let nn = Rational::from((n * n) as i64);
            let mut witness = None;
            for mu in [Rational::zero(), Rational::one(), m.clone(), nn] {
                let found = symmetric_square_criterion(n, &mu);
                let expected = mu == m;
                if found.is_some() != expected {
                    witness = Some(format!(
                        "mu = {mu}: criterion returned {}",
                        if found.is_some() { "L" } else { "nothing" }
                    ));
                    break;
                }
                if let Some(l) = found {
                    if l != legendre_type_operator(n) {
                        witness = Some(format!("mu = {mu}: L = {l}"));
                        break;
                    }
                }
            }
            witness
        }
        Suite::Gensoln => require(gensoln_basis_check(n)?, || "a basis function is not annihilated".into()),
        Suite::Helper => require(helper_identity_check(n)?, || "helper identity fails".into())
            .or(require(legendre_factor_is_palindromic(n)?, || "2F1(-N/2,N/2+1;-N;z) is not palindromic".into())),
        Suite::FunctionalEq => {
            // both sides are linear in v, so the basis vectors settle it
            let mut witness = None;
            for k in 0..=n {
                let e = ExactVector::basis(n, k);
                let lhs = taction_image(n, &e)?;
                let rhs = gen_poly(&pascal_apply(n, &e)?);
                if lhs != rhs {
                    witness = Some(format!("e_{k}: {lhs} vs {rhs}"));
                    break;
                }
            }
            witness
        }
    })
}
