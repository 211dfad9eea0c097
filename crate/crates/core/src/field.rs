//! Exact scalars: arbitrary-precision rationals and prime fields.
//!
//! Rationals are kept in lowest terms with positive denominator (the
//! canonical form maintained by `num::BigRational`), so equality is
//! structural. Prime-field elements are canonical representatives in
//! `[0, p)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

/// The ground field of a computation: ℚ or 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

/// A single exact scalar. All scalars of one matrix/algebra share a
/// [`FieldSpec`]; mixing fields is a caller bug and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting non-primes.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if is_prime_u64(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::InvalidParams(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Mod(1),
        }
    }

    /// Embeds a signed integer.
    pub fn int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod(m % p)
            }
        }
    }

    /// Embeds a rational n/d. Over 𝔽_p the denominator must be invertible.
    pub fn ratio(&self, n: i64, d: i64) -> Result<Scalar> {
        if d == 0 {
            return Err(Error::Invalid("zero denominator".into()));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            ))),
            FieldSpec::PrimeField(_) => {
                let den = self.int(d);
                if self.is_zero(&den) {
                    return Err(Error::Invalid(format!(
                        "denominator {d} vanishes in {self}"
                    )));
                }
                Ok(self.mul(&self.int(n), &self.inv(&den)?))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(m) => *m == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(m) => *m == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::Invalid("division by zero".into()));
        }
        Ok(match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => Scalar::Mod(pow_mod(*x, p - 2, *p)),
            _ => panic!("scalar/field mismatch"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// The canonical integer representative of a prime-field element.
    pub fn lift(&self, a: &Scalar) -> BigInt {
        match a {
            Scalar::Mod(m) => BigInt::from(*m),
            Scalar::Rat(r) => {
                debug_assert!(r.is_integer());
                r.to_integer()
            }
        }
    }

    /// All field elements that can be eigenvalue candidates for the
    /// splitting search: small integers and halves over ℚ, everything
    /// (up to a scan cap) over 𝔽_p.
    pub fn eigenvalue_candidates(&self) -> Vec<Scalar> {
        match self {
            FieldSpec::Rationals => {
                let mut out = vec![self.zero()];
                for n in 1..=24i64 {
                    out.push(self.int(n));
                    out.push(self.int(-n));
                }
                for n in [1i64, -1, 3, -3, 5, -5] {
                    out.push(self.ratio(n, 2).unwrap());
                }
                out
            }
            FieldSpec::PrimeField(p) => {
                let cap = (*p).min(1024);
                (0..cap).map(Scalar::Mod).collect()
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(m) => write!(f, "{m}"),
        }
    }
}

impl Scalar {
    /// Numerator and denominator as bigints (denominator 1 over 𝔽_p).
    pub fn as_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rat(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Mod(m) => (BigInt::from(*m), BigInt::one()),
        }
    }

    pub fn rat_abs_num_den_bits(&self) -> usize {
        match self {
            Scalar::Rat(r) => (r.numer().abs().bits() + r.denom().bits()) as usize,
            Scalar::Mod(_) => 64,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc: u128 = 1;
    let m = modulus as u128;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

/// Deterministic Miller–Rabin, valid for all u64 inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let q = FieldSpec::Rationals;
        let a = q.ratio(2, -4).unwrap();
        let b = q.ratio(-1, 2).unwrap();
        assert_eq!(a, b);
        if let Scalar::Rat(r) = &a {
            assert!(r.denom().is_positive());
        }
    }

    #[test]
    fn prime_field_arithmetic_is_canonical() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let a = f5.int(-3);
        assert_eq!(a, Scalar::Mod(2));
        assert_eq!(f5.mul(&a, &f5.int(3)), Scalar::Mod(1));
        assert_eq!(f5.inv(&f5.int(2)).unwrap(), Scalar::Mod(3));
    }

    #[test]
    fn primality() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(97).is_ok());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err());
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
    }

    #[test]
    fn exact_division() {
        let q = FieldSpec::Rationals;
        let x = q.div(&q.int(3), &q.int(2)).unwrap();
        assert_eq!(x, q.ratio(3, 2).unwrap());
    }
}
