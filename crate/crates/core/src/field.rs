//! Arithmetic in the prime field `F_p`.
//!
//! Elements are plain `u32` canonical representatives in `[0, p)`. The modulus
//! is capped below 2^31 so every product fits in a `u64` before reduction.

use core::fmt;

use crate::error::{Error, Result};

/// A prime `p < 2^31`, checked by trial division at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn as_u64(self) -> u64 {
        self.0 as u64
    }

    /// Maps any integer, including negative ones, to `[0, p)`.
    #[inline]
    pub fn normalize(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.0 as u64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.0 as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.0 as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, base: u32, mut exp: u64) -> u32 {
        let p = self.0 as u64;
        let mut acc = 1 % p;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.0;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }

    /// All field elements `0, 1, …, p−1` in order.
    pub fn elements(self) -> core::ops::Range<u32> {
        0..self.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `≤ limit`, by a sieve of Eratosthenes.
pub fn primes_up_to(limit: u32) -> alloc::vec::Vec<u32> {
    let limit = limit as usize;
    if limit < 2 {
        return alloc::vec::Vec::new();
    }
    let mut composite = alloc::vec![false; limit + 1];
    let mut out = alloc::vec::Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// `base^exp` saturating at `u128::MAX`.
pub fn saturating_pow(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
