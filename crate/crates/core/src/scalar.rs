//! Exact coefficient fields.
//!
//! Arithmetic goes through a field *context* rather than through operator
//! traits on the elements, so a prime field can carry its modulus at runtime.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("denominator of {0} vanishes in the field")]
    ZeroDenominator(BigRational),
}

/// A field with exact, decidable equality.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    /// Image of a rational number, if its denominator is invertible.
    fn from_ratio(&self, q: &BigRational) -> Result<Self::Elem, ScalarError>;

    /// A rational representative, used for printing and re-parsing.
    fn to_ratio(&self, x: &Self::Elem) -> BigRational;

    fn sub(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.add(x, &self.neg(y))
    }

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_ratio(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers have unit denominator")
    }

    fn display<'a>(&'a self, x: &'a Self::Elem) -> ScalarDisplay<'a, Self> {
        ScalarDisplay { field: self, elem: x }
    }
}

pub struct ScalarDisplay<'a, F: Field> {
    field: &'a F,
    elem: &'a F::Elem,
}

impl<F: Field> fmt::Display for ScalarDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.to_ratio(self.elem))
    }
}

/// The rational numbers with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }

    fn add(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x + y
    }

    fn neg(&self, x: &BigRational) -> BigRational {
        -x
    }

    fn mul(&self, x: &BigRational, y: &BigRational) -> BigRational {
        x * y
    }

    fn from_ratio(&self, q: &BigRational) -> Result<BigRational, ScalarError> {
        Ok(q.clone())
    }

    fn to_ratio(&self, x: &BigRational) -> BigRational {
        x.clone()
    }
}

/// The prime field `Z/pZ`, elements stored as residues in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce(&self, n: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        n.mod_floor(&m).to_u64().expect("residue fits in u64")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    fn inv(&self, x: u64) -> Option<u64> {
        (x != 0).then(|| self.pow(x, self.p - 2))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 + *y as u128) % self.p as u128) as u64
    }

    fn neg(&self, x: &u64) -> u64 {
        if *x == 0 {
            0
        } else {
            self.p - x
        }
    }

    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.p as u128) as u64
    }

    fn from_ratio(&self, q: &BigRational) -> Result<u64, ScalarError> {
        let num = self.reduce(q.numer());
        let den = self.reduce(q.denom());
        let inv = self.inv(den).ok_or_else(|| ScalarError::ZeroDenominator(q.clone()))?;
        Ok(self.mul(&num, &inv))
    }

    fn to_ratio(&self, x: &u64) -> BigRational {
        BigRational::from_integer(BigInt::from(*x))
    }
}

/// Splits a rational into sign and magnitude; used by printers that write
/// signs as separate `+`/`-` tokens.
pub(crate) fn sign_and_abs(q: &BigRational) -> (bool, BigRational) {
    (q.is_negative(), q.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(7).is_ok());
        assert_eq!(PrimeField::new(9), Err(ScalarError::NotPrime(9)));
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn prime_field_fractions() {
        let f = PrimeField::new(7).unwrap();
        // 2/3 = 2 * 5 = 10 = 3 (mod 7)
        assert_eq!(f.from_ratio(&q(2, 3)).unwrap(), 3);
        assert_eq!(f.from_ratio(&q(-1, 1)).unwrap(), 6);
        assert!(matches!(f.from_ratio(&q(1, 7)), Err(ScalarError::ZeroDenominator(_))));
        let x = f.from_ratio(&q(3, 5)).unwrap();
        assert_eq!(f.mul(&x, &f.from_int(5)), 3);
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Rationals;
        let a = q(1, 3);
        let b = q(1, 6);
        assert_eq!(f.add(&a, &b), q(1, 2));
        assert_eq!(f.sub(&a, &a), f.zero());
        assert!(f.is_one(&f.mul(&q(2, 3), &q(3, 2))));
    }
}
