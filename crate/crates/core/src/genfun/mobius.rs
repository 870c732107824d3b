use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{ModInt, Rational, Ring};

use super::DensePoly;

/// Scaled Möbius substitutions `f ↦ den(z)^d f(num(z)/den(z))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MobiusMap {
    /// `z ↦ 1 - z` (no scale)
    OneMinus,
    /// `z ↦ z/(z-1)`, scaled by `(1-z)^d`
    ZOverZMinusOne,
    /// `z ↦ 1 - 1/z`, scaled by `z^d`
    OneMinusInverse,
    /// `z ↦ 1/z`, scaled by `z^d`
    Inverse,
}

impl MobiusMap {
    /// `(num, den)` as linear polynomials `(a + bz, c + ez)`.
    fn fraction<R: Ring>(&self, unit: &R) -> (DensePoly<R>, DensePoly<R>) {
        let zero = unit.zero_like();
        let one = unit.one_like();
        let lin = |a: &R, b: &R| DensePoly::linear(a.clone(), b.clone());
        match self {
            MobiusMap::OneMinus => (lin(&one, &-one.clone()), lin(&one, &zero)),
            // z/(z-1) = -z/(1-z)
            MobiusMap::ZOverZMinusOne => (lin(&zero, &-one.clone()), lin(&one, &-one.clone())),
            // 1 - 1/z = (z-1)/z
            MobiusMap::OneMinusInverse => (lin(&-one.clone(), &one), lin(&zero, &one)),
            MobiusMap::Inverse => (lin(&one, &zero), lin(&zero, &one)),
        }
    }
}

/// The six fractional linear maps permuting `{0, 1, ∞}`, evaluated pointwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AnharmonicMap {
    Identity,
    OneMinus,
    Inverse,
    InverseOfOneMinus,
    OneMinusInverse,
    ZOverZMinusOne,
}

impl AnharmonicMap {
    pub const ALL: [AnharmonicMap; 6] = [
        AnharmonicMap::Identity,
        AnharmonicMap::OneMinus,
        AnharmonicMap::Inverse,
        AnharmonicMap::InverseOfOneMinus,
        AnharmonicMap::OneMinusInverse,
        AnharmonicMap::ZOverZMinusOne,
    ];

    /// Image of `z ∉ {0, 1}`; `None` if `z` is 0 or 1.
    pub fn apply(&self, z: ModInt) -> Option<ModInt> {
        let one = z.one_like();
        let inv = z.inverse()?;
        let inv_one_minus = (one - z).inverse()?;
        Some(match self {
            AnharmonicMap::Identity => z,
            AnharmonicMap::OneMinus => one - z,
            AnharmonicMap::Inverse => inv,
            AnharmonicMap::InverseOfOneMinus => inv_one_minus,
            AnharmonicMap::OneMinusInverse => one - inv,
            AnharmonicMap::ZOverZMinusOne => z * (z - one).inverse()?,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            AnharmonicMap::Identity => "z",
            AnharmonicMap::OneMinus => "1-z",
            AnharmonicMap::Inverse => "1/z",
            AnharmonicMap::InverseOfOneMinus => "1/(1-z)",
            AnharmonicMap::OneMinusInverse => "1-1/z",
            AnharmonicMap::ZOverZMinusOne => "z/(z-1)",
        }
    }
}

/// Apply a scaled substitution with scale degree `scale`:
/// `sum_k f_k num^k den^(scale-k)`.
pub fn mobius_substitute<R: Ring>(f: &DensePoly<R>, map: MobiusMap, scale: usize) -> Result<DensePoly<R>> {
    let degree = f.degree().unwrap_or(0);
    if scale < degree {
        return Err(Error::NonPolynomialResult { degree, scale });
    }
    let unit = f.coeff(0).one_like();
    let (num, den) = map.fraction(&unit);
    let mut out = f.zero_like();
    let mut num_pow = f.one_like();
    for k in 0..=degree {
        let c = f.coeff(k);
        if !c.is_zero_elem() {
            out = out.add(&num_pow.mul(&den.pow(scale - k)).scale(&c));
        }
        num_pow = num_pow.mul(&num);
    }
    Ok(out.trimmed())
}

/// Convenience for rational polynomials: `f(1-z)`.
pub fn reflect(f: &DensePoly<Rational>) -> DensePoly<Rational> {
    let d = f.degree().unwrap_or(0);
    mobius_substitute(f, MobiusMap::OneMinus, d).expect("scale equals degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q, Modulus};

    #[test]
    fn inverse_reverses_coefficients() {
        let f = DensePoly::from_ints(&[1, -1, -2]);
        assert_eq!(mobius_substitute(&f, MobiusMap::Inverse, 2).unwrap(), DensePoly::from_ints(&[-2, -1, 1]));
    }

    #[test]
    fn constant_under_every_map() {
        let one = DensePoly::from_ints(&[1]);
        for map in [MobiusMap::OneMinus, MobiusMap::ZOverZMinusOne, MobiusMap::OneMinusInverse, MobiusMap::Inverse] {
            assert_eq!(mobius_substitute(&one, map, 0).unwrap(), one);
        }
    }

    #[test]
    fn z_over_z_minus_one_matches_pointwise() {
        let f = DensePoly::from_ints(&[1, 1]);
        let g = mobius_substitute(&f, MobiusMap::ZOverZMinusOne, 1).unwrap();
        assert_eq!(g, DensePoly::from_ints(&[1, -2]));
        for z in [q(2, 1), q(-3, 1), q(1, 3), q(5, 7), q(-9, 4)] {
            let one = Rational::one();
            let w = &z / &(&z - &one);
            assert_eq!(g.eval(&z), (&one - &z) * f.eval(&w));
        }
    }

    #[test]
    fn scale_below_degree_is_rejected() {
        let f = DensePoly::from_ints(&[1, 0, 3]);
        assert_eq!(
            mobius_substitute(&f, MobiusMap::Inverse, 1),
            Err(Error::NonPolynomialResult { degree: 2, scale: 1 })
        );
    }

    #[test]
    fn anharmonic_maps_form_orbit() {
        let m = Modulus::new(13, 1).unwrap();
        let z = ModInt::new(5, m);
        let mut images: Vec<u64> = AnharmonicMap::ALL.iter().map(|g| g.apply(z).unwrap().value()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 6);
        assert!(AnharmonicMap::Inverse.apply(ModInt::new(0, m)).is_none());
        assert!(AnharmonicMap::OneMinus.apply(ModInt::new(1, m)).is_none());
    }
}
