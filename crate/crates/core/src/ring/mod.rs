//! Exact scalars: rationals, residues modulo prime powers, and the handful of
//! combinatorial functions everything else is built from.

mod modint;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use modint::{ModInt, Modulus};
pub use rational::{q, Rational};

/// A commutative ring whose elements know enough about themselves to produce
/// the ring's zero and one (residues carry their modulus).
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn from_int_like(&self, n: i64) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn from_int_like(&self, n: i64) -> Self {
        Rational::from(n)
    }
}

impl Ring for ModInt {
    fn zero_like(&self) -> Self {
        ModInt::zero(self.modulus())
    }
    fn one_like(&self) -> Self {
        ModInt::one(self.modulus())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn from_int_like(&self, n: i64) -> Self {
        ModInt::new(n, self.modulus())
    }
}

/// Trial division; fine for the moduli this crate sweeps over.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn is_odd_prime(n: u64) -> bool {
    n != 2 && is_prime(n)
}

/// Legendre symbol `(a/p)` by Euler's criterion. `(0/p) = 0`.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(legendre_unchecked(a, p))
}

pub(crate) fn legendre_unchecked(a: i64, p: u64) -> i8 {
    let a = a.rem_euclid(p as i64) as u128;
    if a == 0 {
        return 0;
    }
    let m = p as u128;
    let mut base = a;
    let mut exp = (p - 1) / 2;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    if acc == 1 {
        1
    } else {
        debug_assert_eq!(acc, m - 1);
        -1
    }
}

/// Rising factorial `q(q+1)...(q+k-1)`.
pub fn pochhammer(q: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = q.clone();
    let one = Rational::one();
    for _ in 0..k {
        acc *= &term;
        term += &one;
    }
    acc
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Reduce a rational into `Z/p^n`; fails when `p` divides the denominator.
pub fn rational_to_mod(x: &Rational, modulus: Modulus) -> Result<ModInt> {
    let m = BigInt::from(modulus.value());
    let den = ModInt::from_u64(to_u64(&x.denom().mod_floor(&m)), modulus);
    let inv = den.inverse().ok_or_else(|| Error::NonInvertibleDenominator {
        denominator: x.denom().to_string(),
        modulus: modulus.value(),
    })?;
    let num = ModInt::from_u64(to_u64(&x.numer().mod_floor(&m)), modulus);
    Ok(num * inv)
}

fn to_u64(n: &BigInt) -> u64 {
    debug_assert!(!n.is_negative());
    u64::try_from(n).expect("residue fits in u64")
}
