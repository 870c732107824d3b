//! Point counts on the Legendre family `E_z: y^2 = x(x-1)(x-z)` over `F_p`,
//! the Hasse polynomial, and the congruences linking both to the
//! eigenvalue-one generating function at `N = p - 1`.

use rayon::prelude::*;
use serde::Serialize;

use crate::check::Verdict;
use crate::error::{Error, Result};
use crate::genfun::{eigen_vector, gen_poly, legendre_factor, pfaff_factor, AnharmonicMap, DensePoly};
use crate::ring::{binomial, is_odd_prime, legendre_unchecked, ModInt, Modulus, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CurveCount {
    pub p: u64,
    pub z: u64,
    pub points: u64,
    pub trace: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupersingularReport {
    pub p: u64,
    /// `z` with `H_p(z) ≡ 0 (mod p)`, ascending.
    pub roots: Vec<u64>,
    /// `z` whose trace of Frobenius is divisible by `p`, ascending.
    pub trace_divisible: Vec<u64>,
    /// Roots agree with the trace-divisible set and every root has trace 0.
    pub consistent: bool,
}

fn validate(p: u64, z: u64) -> Result<()> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let z = z % p;
    if z == 0 || z == 1 {
        return Err(Error::SingularCurve { p, z });
    }
    Ok(())
}

fn modulus(p: u64) -> Result<Modulus> {
    Modulus::new(p, 1)
}

/// Quadratic character of every residue mod `p`, by Euler's criterion.
struct CharacterTable {
    p: u64,
    chi: Vec<i8>,
}

impl CharacterTable {
    fn new(p: u64) -> Self {
        CharacterTable { p, chi: (0..p).map(|x| legendre_unchecked(x as i64, p)).collect() }
    }

    /// `sum_x chi(x(x-1)(x-z))`.
    fn period(&self, z: u64) -> i64 {
        let p = self.p as u128;
        let z = z as u128;
        (0..p)
            .map(|x| {
                let v = x * ((x + p - 1) % p) % p * ((x + p - z) % p) % p;
                self.chi[v as usize] as i64
            })
            .sum()
    }

    fn count(&self, z: u64) -> CurveCount {
        let period = self.period(z);
        let points = (1 + self.p as i64 + period) as u64;
        CurveCount { p: self.p, z, points, trace: -period }
    }
}

/// `#E_z(F_p) = 1 + sum_x (1 + chi(x(x-1)(x-z)))`.
pub fn count_points(p: u64, z: u64) -> Result<CurveCount> {
    validate(p, z)?;
    let z = z % p;
    let period: i64 = (0..p)
        .map(|x| {
            let v = (x as u128 * ((x + p - 1) % p) as u128 % p as u128) * ((x + p - z) % p) as u128 % p as u128;
            legendre_unchecked(v as i64, p) as i64
        })
        .sum();
    let points = (1 + p as i64 + period) as u64;
    Ok(CurveCount { p, z, points, trace: p as i64 + 1 - points as i64 })
}

/// Brute-force count over all `(x, y)`; for cross-checking small `p`.
pub fn count_points_naive(p: u64, z: u64) -> Result<CurveCount> {
    validate(p, z)?;
    let z = z % p;
    let mut affine = 0u64;
    for x in 0..p {
        let rhs = x * ((x + p - 1) % p) % p * ((x + p - z) % p) % p;
        affine += (0..p).filter(|y| y * y % p == rhs).count() as u64;
    }
    let points = affine + 1;
    Ok(CurveCount { p, z, points, trace: p as i64 + 1 - points as i64 })
}

/// The finite-field period `sum_x phi(x(x-1)(x-z))`, equal to `points - 1 - p`.
pub fn period_2p1(p: u64, z: u64) -> Result<i64> {
    validate(p, z)?;
    Ok(CharacterTable::new(p).period(z % p))
}

/// Counts for every nonsingular `z = 2, ..., p-1`, in ascending `z`.
pub fn sweep(p: u64) -> Result<Vec<CurveCount>> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let table = CharacterTable::new(p);
    Ok((2..p).into_par_iter().map(|z| table.count(z)).collect())
}

/// `H_p(z) = sum_k C((p-1)/2, k)^2 z^k` reduced mod `p`.
pub fn hasse_poly(p: u64) -> Result<DensePoly<ModInt>> {
    let m = modulus(p)?;
    let half = (p - 1) / 2;
    let coeffs = (0..=half)
        .map(|k| {
            let c = binomial(half, k as i64);
            let r = (&c * &c) % p;
            ModInt::from_u64(u64::try_from(&r).expect("reduced"), m)
        })
        .collect();
    Ok(DensePoly::new(coeffs))
}

/// Generating function of the eigenvalue-one vector at `N = p - 1`, mod `p`.
pub fn reduced_generating_function(p: u64) -> Result<DensePoly<ModInt>> {
    let m = modulus(p)?;
    gen_poly(&eigen_vector(p as usize - 1)?).reduce_mod(m)
}

/// `(-1)^((p-1)/2) H_p(z) ≡ 1 - #E_z (mod p)` for every nonsingular `z`.
pub fn hasse_check(p: u64) -> Result<Verdict> {
    let m = modulus(p)?;
    let h = hasse_poly(p)?;
    let sign = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
    let witness = sweep(p)?.into_iter().find_map(|c| {
        let lhs = h.eval(&ModInt::from_u64(c.z, m)) * ModInt::new(sign, m);
        let rhs = ModInt::new(1 - c.points as i64, m);
        (lhs != rhs).then(|| format!("z={}: (-1)^((p-1)/2) H_p(z) = {lhs}, 1 - #E = {rhs}", c.z))
    });
    Ok(Verdict::from_witness("hasse", witness))
}

/// `f(v; z) ≡ (#E_z(F_p) - 1)^2 (mod p)` for every nonsingular `z`.
pub fn point_count_check(p: u64) -> Result<Verdict> {
    let m = modulus(p)?;
    let f = reduced_generating_function(p)?;
    let witness = sweep(p)?.into_iter().find_map(|c| {
        let lhs = f.eval(&ModInt::from_u64(c.z, m));
        let rhs = ModInt::from_u64(c.points - 1, m).pow(2);
        (lhs != rhs).then(|| format!("z={}: f(z) = {lhs}, (#E-1)^2 = {rhs}", c.z))
    });
    Ok(Verdict::from_witness("point-count", witness))
}

fn poly_mismatch(a: &DensePoly<ModInt>, b: &DensePoly<ModInt>) -> Option<String> {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len)
        .find(|&i| a.coeff(i) != b.coeff(i))
        .map(|i| format!("coefficient of z^{i}: {} vs {}", a.coeff(i), b.coeff(i)))
}

/// `2F1(-N/2,-3N/2-1;-N;z) ≡ 2F1(-N/2,N/2+1;-N;z) (mod p)` at `N = p - 1`.
pub fn pfaff_congruence_check(p: u64) -> Result<Verdict> {
    let m = modulus(p)?;
    let n = p as usize - 1;
    let lhs = pfaff_factor(n)?.reduce_mod(m)?;
    let rhs = legendre_factor(n)?.reduce_mod(m)?;
    Ok(Verdict::from_witness("pfaff-congruence", poly_mismatch(&lhs, &rhs)))
}

/// `H_p(z) ≡ 2F1(-N/2,N/2+1;-N;z) (mod p)` at `N = p - 1`.
pub fn hasse_hyp_congruence_check(p: u64) -> Result<Verdict> {
    let m = modulus(p)?;
    let h = hasse_poly(p)?;
    let f = legendre_factor(p as usize - 1)?.reduce_mod(m)?;
    Ok(Verdict::from_witness("hasse-hypergeometric", poly_mismatch(&h, &f)))
}

/// The reduced generating function is constant on every orbit of the six
/// anharmonic maps.
pub fn mobius_orbit_check(p: u64) -> Result<Verdict> {
    let m = modulus(p)?;
    let f = reduced_generating_function(p)?;
    let witness = (2..p).find_map(|z| {
        let z = ModInt::from_u64(z, m);
        let base = f.eval(&z);
        AnharmonicMap::ALL.iter().find_map(|g| {
            let image = g.apply(z).expect("z is not 0 or 1");
            let value = f.eval(&image);
            (value != base).then(|| format!("z={z}: f(z) = {base}, f({}) = {value}", g.name()))
        })
    });
    Ok(Verdict::from_witness("mobius-orbit", witness))
}

/// Roots of `H_p` in `F_p \ {0, 1}`, cross-checked against point counts.
pub fn supersingular_scan(p: u64) -> Result<SupersingularReport> {
    let m = modulus(p)?;
    let h = hasse_poly(p)?;
    let counts = sweep(p)?;
    let roots: Vec<u64> = (2..p).filter(|&z| h.eval(&ModInt::from_u64(z, m)).is_zero_elem()).collect();
    let trace_divisible: Vec<u64> = counts.iter().filter(|c| c.trace % p as i64 == 0).map(|c| c.z).collect();
    let consistent = roots == trace_divisible && roots.iter().all(|&z| counts[(z - 2) as usize].trace == 0);
    Ok(SupersingularReport { p, roots, trace_divisible, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_examples() {
        assert_eq!(count_points(3, 2).unwrap(), CurveCount { p: 3, z: 2, points: 4, trace: 0 });
        assert_eq!(count_points(5, 2).unwrap(), CurveCount { p: 5, z: 2, points: 8, trace: -2 });
        // 3 = 1/2 in F_5: E_3 is the quadratic twist of E_2, so the trace flips sign
        assert_eq!(count_points(5, 3).unwrap(), CurveCount { p: 5, z: 3, points: 4, trace: 2 });
        assert_eq!(count_points(5, 3), count_points_naive(5, 3));
    }

    #[test]
    fn rejects_singular_and_bad_primes() {
        assert_eq!(count_points(5, 1), Err(Error::SingularCurve { p: 5, z: 1 }));
        assert_eq!(count_points(5, 5), Err(Error::SingularCurve { p: 5, z: 0 }));
        assert_eq!(count_points(4, 2), Err(Error::NotOddPrime(4)));
        assert_eq!(count_points(2, 3), Err(Error::NotOddPrime(2)));
        assert!(period_2p1(7, 0).is_err());
    }

    #[test]
    fn period_examples() {
        assert_eq!(period_2p1(3, 2).unwrap(), 0);
        assert_eq!(period_2p1(5, 2).unwrap(), 2);
        for c in sweep(13).unwrap() {
            assert_eq!(period_2p1(13, c.z).unwrap(), -c.trace);
        }
    }

    #[test]
    fn character_sum_matches_naive_enumeration() {
        for p in [3u64, 5, 7, 11, 13] {
            for z in 2..p {
                assert_eq!(count_points(p, z).unwrap(), count_points_naive(p, z).unwrap());
            }
            assert_eq!(sweep(p).unwrap(), (2..p).map(|z| count_points(p, z).unwrap()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn hasse_poly_examples() {
        let vals = |p| hasse_poly(p).unwrap().coeffs().iter().map(|c| c.value()).collect::<Vec<_>>();
        assert_eq!(vals(3), vec![1, 1]);
        assert_eq!(vals(5), vec![1, 4, 1]);
        assert_eq!(vals(11)[0], 1);
    }

    #[test]
    fn congruence_checks_small_primes() {
        for p in [3u64, 5, 7, 11, 13] {
            assert!(hasse_check(p).unwrap().pass, "hasse p={p}");
            assert!(point_count_check(p).unwrap().pass, "C p={p}");
            assert!(pfaff_congruence_check(p).unwrap().pass, "pfaff p={p}");
            assert!(hasse_hyp_congruence_check(p).unwrap().pass, "H p={p}");
            assert!(mobius_orbit_check(p).unwrap().pass, "G p={p}");
        }
    }

    #[test]
    fn point_count_witnesses() {
        let f3 = reduced_generating_function(3).unwrap();
        let m3 = Modulus::new(3, 1).unwrap();
        assert_eq!(f3.eval(&ModInt::new(2, m3)).value(), 0);
        let f5 = reduced_generating_function(5).unwrap();
        let m5 = Modulus::new(5, 1).unwrap();
        assert_eq!(f5.eval(&ModInt::new(2, m5)).value(), 4);
    }

    #[test]
    fn supersingular_examples() {
        let r3 = supersingular_scan(3).unwrap();
        assert_eq!(r3.roots, vec![2]);
        assert!(r3.consistent);
        let r5 = supersingular_scan(5).unwrap();
        assert!(r5.roots.is_empty());
        assert!(r5.consistent);
        assert!(supersingular_scan(7).unwrap().consistent);
    }
}
