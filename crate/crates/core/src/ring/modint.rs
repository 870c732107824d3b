use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

use super::is_odd_prime;

/// The modulus `p^n` of a residue ring, with its prime and level kept alongside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    prime: u64,
    level: u32,
    value: u64,
}

impl Modulus {
    pub fn new(prime: u64, level: u32) -> Result<Self> {
        if !is_odd_prime(prime) {
            return Err(Error::NotOddPrime(prime));
        }
        if level == 0 {
            return Err(Error::InvalidArgument("level must be at least 1".into()));
        }
        let value = prime
            .checked_pow(level)
            .filter(|m| *m < (1 << 62))
            .ok_or_else(|| Error::InvalidArgument(format!("{prime}^{level} is too large")))?;
        Ok(Modulus { prime, level, value })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn value(&self) -> u64 {
        self.value
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 1 {
            write!(f, "{}", self.prime)
        } else {
            write!(f, "{}^{}", self.prime, self.level)
        }
    }
}

/// Residue in `Z/p^n`. Arithmetic between residues of different moduli panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: Modulus,
}

impl ModInt {
    pub fn new(value: i64, modulus: Modulus) -> Self {
        let m = modulus.value as i64;
        ModInt { value: value.rem_euclid(m) as u64, modulus }
    }

    pub fn from_u64(value: u64, modulus: Modulus) -> Self {
        ModInt { value: value % modulus.value, modulus }
    }

    pub fn zero(modulus: Modulus) -> Self {
        ModInt { value: 0, modulus }
    }

    pub fn one(modulus: Modulus) -> Self {
        ModInt { value: 1, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        self.value % self.modulus.prime != 0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let m = self.modulus.value as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        ModInt { value: acc as u64, modulus: self.modulus }
    }

    /// Inverse via the extended Euclidean algorithm; `None` when `p` divides the value.
    pub fn inverse(self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let m = self.modulus.value as i128;
        let (mut old_r, mut r) = (self.value as i128, m);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let quot = old_r / r;
            (old_r, r) = (r, old_r - quot * r);
            (old_s, s) = (s, old_s - quot * s);
        }
        debug_assert_eq!(old_r, 1);
        Some(ModInt { value: old_s.rem_euclid(m) as u64, modulus: self.modulus })
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn centered(&self) -> i64 {
        let m = self.modulus.value;
        if self.value > m / 2 {
            self.value as i64 - m as i64
        } else {
            self.value as i64
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "mixed-modulus arithmetic: {} vs {}", self.modulus, other.modulus);
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: ModInt) -> ModInt {
        self.check(&rhs);
        let m = self.modulus.value;
        let s = self.value + rhs.value;
        ModInt { value: if s >= m { s - m } else { s }, modulus: self.modulus }
    }
}

impl Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: ModInt) -> ModInt {
        self.check(&rhs);
        let m = self.modulus.value;
        let value = if self.value >= rhs.value { self.value - rhs.value } else { self.value + m - rhs.value };
        ModInt { value, modulus: self.modulus }
    }
}

impl Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: ModInt) -> ModInt {
        self.check(&rhs);
        let m = self.modulus.value as u128;
        ModInt { value: (self.value as u128 * rhs.value as u128 % m) as u64, modulus: self.modulus }
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        let value = if self.value == 0 { 0 } else { self.modulus.value - self.value };
        ModInt { value, modulus: self.modulus }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_two_mod_five() {
        let m = Modulus::new(5, 1).unwrap();
        assert_eq!(ModInt::new(2, m).inverse().unwrap().value(), 3);
    }

    #[test]
    fn non_units_have_no_inverse() {
        let m = Modulus::new(3, 2).unwrap();
        assert!(ModInt::new(6, m).inverse().is_none());
        assert_eq!(ModInt::new(2, m).inverse().unwrap().value(), 5);
    }

    #[test]
    fn negative_values_wrap() {
        let m = Modulus::new(7, 1).unwrap();
        assert_eq!(ModInt::new(-1, m).value(), 6);
        assert_eq!(ModInt::new(-1, m).centered(), -1);
    }

    #[test]
    fn modulus_rejects_even_and_composite() {
        assert_eq!(Modulus::new(2, 1), Err(Error::NotOddPrime(2)));
        assert_eq!(Modulus::new(9, 1), Err(Error::NotOddPrime(9)));
        assert!(Modulus::new(3, 0).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed-modulus")]
    fn mixed_moduli_panic() {
        let a = ModInt::new(1, Modulus::new(3, 1).unwrap());
        let b = ModInt::new(1, Modulus::new(5, 1).unwrap());
        let _ = a + b;
    }
}
