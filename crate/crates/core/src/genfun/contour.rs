//! Numerical evaluation of the contour integral
//!
//! ```text
//! (1/2πi) ∫_{Re w = 1/2} f(v; w) / (w^(N+1) (1-w)^(N+1) (1 - z + zw)) dw
//! ```
//!
//! by the trapezoid rule on `w = 1/2 + it`. The integrand has a simple pole at
//! `w* = 1 - 1/z`, which sits left of the line exactly when `|z - 1| < 1`.
//! Inside that disk the integral reproduces `f(T_N v; z)`; outside it picks up
//! the residue at `w*` and equals minus the proper-fraction part of
//! `z^(2N+1) (z-1)^-(N+1) f(v; 1-1/z)`. [`contour_closed_form`] gives the
//! exact value on either side.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::operators::ExactVector;
use crate::ring::Rational;

use super::{gen_poly, taction_split, DensePoly};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    /// Half-width `T` of the truncated line `t ∈ [-T, T]`; chosen from the
    /// tail bound when `None`.
    pub truncation: Option<f64>,
    /// Initial trapezoid step, halved until successive values agree.
    pub initial_step: f64,
    pub tolerance: f64,
    pub max_halvings: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature { truncation: None, initial_step: 0.25, tolerance: 1e-8, max_halvings: 14 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourEstimate {
    pub value: Complex64,
    /// Step-halving difference plus the analytic tail bound.
    pub error: f64,
    pub truncation: f64,
    pub step: f64,
}

/// Whether `z` lies where the contour integral equals `f(T_N v; z)`:
/// the open disk `|z - 1| < 1`, together with `z = 0`.
pub fn in_validity_disk(z: Complex64) -> bool {
    z == Complex64::new(0.0, 0.0) || (z - 1.0).norm() < 1.0
}

fn horner(coeffs: &[Complex64], w: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * w + c)
}

fn to_complex(f: &DensePoly<Rational>) -> Vec<Complex64> {
    f.coeffs().iter().map(|c| Complex64::new(c.to_f64(), 0.0)).collect()
}

/// Exact value of the contour integral at `z` (off the circle `|z-1| = 1`),
/// evaluated in floating point from exact polynomials.
pub fn contour_closed_form(order: usize, v: &ExactVector, z: Complex64) -> Result<Complex64> {
    let (quot, rem) = taction_split(order, v)?;
    let poly_part = horner(&to_complex(&quot), z);
    if in_validity_disk(z) {
        return Ok(poly_part);
    }
    Ok(-horner(&to_complex(&rem), z) / (z - 1.0).powu(order as u32 + 1))
}

fn tail_bound(order: usize, abs_sum: f64, z: Complex64, t: f64) -> Option<f64> {
    if t < 1.0 {
        return None;
    }
    let n = order as f64;
    let c = abs_sum * 1.25f64.powf(n / 2.0);
    let a = (Complex64::new(1.0, 0.0) - z / 2.0).norm();
    let zn = z.norm();
    if zn == 0.0 {
        // |1 - z + zw| = 1: integrand <= c t^-(N+2)
        Some(2.0 * c / ((n + 1.0) * t.powf(n + 1.0)) / (2.0 * PI))
    } else if zn * t >= 2.0 * a {
        // |1 - z + zw| >= |z| t / 2: integrand <= (2c/|z|) t^-(N+3)
        Some(2.0 * (2.0 * c / zn) / ((n + 2.0) * t.powf(n + 2.0)) / (2.0 * PI))
    } else {
        None
    }
}

/// Trapezoid approximation of the contour integral at `z`.
pub fn integral_operator_numeric(
    order: usize,
    v: &ExactVector,
    z: Complex64,
    quad: &Quadrature,
) -> Result<ContourEstimate> {
    if v.order() != order {
        return Err(Error::LengthMismatch { order, got: v.order() + 1 });
    }
    if order < 1 {
        return Err(Error::InvalidArgument("contour quadrature needs N >= 1".into()));
    }
    let one = Complex64::new(1.0, 0.0);
    if z.norm() > 0.0 {
        let pole = one - one / z;
        if (pole.re - 0.5).abs() < 1e-12 {
            return Err(Error::ContourSingularity { distance: (pole.re - 0.5).abs() * z.norm() });
        }
    }

    let coeffs = to_complex(&gen_poly(v));
    let abs_sum: f64 = v.entries().iter().map(|x| x.to_f64().abs()).sum();
    let target_tail = quad.tolerance / 10.0;
    let (truncation, tail) = match quad.truncation {
        Some(t) => (t, tail_bound(order, abs_sum, z, t).unwrap_or(f64::INFINITY)),
        None => {
            let mut t = 64.0;
            loop {
                match tail_bound(order, abs_sum, z, t) {
                    Some(b) if b <= target_tail => break (t, b),
                    _ if t > 1e7 => break (t, tail_bound(order, abs_sum, z, t).unwrap_or(f64::INFINITY)),
                    _ => t *= 2.0,
                }
            }
        }
    };

    let np1 = order as u32 + 1;
    let integrand = |t: f64| -> Result<Complex64> {
        let w = Complex64::new(0.5, t);
        let lin = one - z + z * w;
        if lin.norm() < quad.tolerance {
            return Err(Error::ContourSingularity { distance: lin.norm() });
        }
        Ok(horner(&coeffs, w) / (w.powu(np1) * (one - w).powu(np1) * lin) / (2.0 * PI))
    };
    let trapezoid = |nodes: usize| -> Result<Complex64> {
        let h = 2.0 * truncation / nodes as f64;
        let values =
            (0..=nodes).into_par_iter().map(|i| integrand(-truncation + i as f64 * h)).collect::<Result<Vec<_>>>()?;
        let inner: Complex64 = values[1..nodes].iter().sum();
        Ok((inner + (values[0] + values[nodes]) * 0.5) * h)
    };

    let mut nodes = ((2.0 * truncation / quad.initial_step).ceil() as usize).max(2);
    nodes += nodes % 2;
    let mut previous = trapezoid(nodes)?;
    let mut diff = f64::INFINITY;
    for _ in 0..quad.max_halvings {
        nodes *= 2;
        let current = trapezoid(nodes)?;
        diff = (current - previous).norm();
        previous = current;
        if diff <= quad.tolerance / 10.0 {
            break;
        }
    }
    Ok(ContourEstimate { value: previous, error: diff + tail, truncation, step: 2.0 * truncation / nodes as f64 })
}
