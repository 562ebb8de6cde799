//! Integer number theory behind the period formulas.
//!
//! Orders are found by a linear scan with a running product. That keeps the
//! computation independent of any factorisation of the group order.

use crate::error::{Error, Result};

/// Largest modulus accepted by the order routines.
pub const MAX_MODULUS: u64 = 1 << 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Least `exponent >= 1` with `base^exponent ≡ ±1`, and which sign was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemiOrder {
    pub exponent: u64,
    pub sign: Sign,
}

impl SemiOrder {
    /// Full multiplicative order implied by the semi-order.
    pub fn order(&self) -> u64 {
        match self.sign {
            Sign::Plus => self.exponent,
            Sign::Minus => 2 * self.exponent,
        }
    }
}

pub fn gcd(a: u64, b: u64) -> Result<u64> {
    if a == 0 && b == 0 {
        return Err(Error::GcdOfZeros);
    }
    Ok(crate::perm::gcd_u64(a, b))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn check_args(base: u64, modulus: u64) -> Result<()> {
    if base < 2 {
        return Err(Error::BadBase(base));
    }
    if !(2..=MAX_MODULUS).contains(&modulus) {
        return Err(Error::BadModulus(modulus));
    }
    if crate::perm::gcd_u64(base, modulus) != 1 {
        return Err(Error::NotCoprime { base, modulus });
    }
    Ok(())
}

/// Least `r >= 1` with `base^r ≡ 1 (mod modulus)`.
pub fn multiplicative_order(base: u64, modulus: u64) -> Result<u64> {
    check_args(base, modulus)?;
    let b = base % modulus;
    let mut acc = b;
    let mut r = 1;
    while acc != 1 % modulus {
        acc = mul_mod(acc, b, modulus);
        r += 1;
    }
    Ok(r)
}

/// Least `u >= 1` with `base^u ≡ 1` or `base^u ≡ -1 (mod modulus)`.
pub fn semi_order(base: u64, modulus: u64) -> Result<SemiOrder> {
    check_args(base, modulus)?;
    let b = base % modulus;
    let minus_one = modulus - 1;
    let mut acc = b;
    let mut u = 1;
    loop {
        // Modulus 2 has 1 ≡ -1; report it as +1.
        if acc == 1 {
            return Ok(SemiOrder {
                exponent: u,
                sign: Sign::Plus,
            });
        }
        if acc == minus_one {
            return Ok(SemiOrder {
                exponent: u,
                sign: Sign::Minus,
            });
        }
        acc = mul_mod(acc, b, modulus);
        u += 1;
    }
}

/// Euler's totient by trial division.
pub fn euler_phi(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::BadModulus(0));
    }
    let mut rest = m;
    let mut phi = m;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            while rest.is_multiple_of(d) {
                rest /= d;
            }
            phi -= phi / d;
        }
        d += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}
