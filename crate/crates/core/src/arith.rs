//! Exact nonnegative-integer helpers.
//!
//! Everything works on `u64`; callers that need products or squares beyond
//! that width use the `checked_*` helpers here, which report overflow instead
//! of wrapping.

use crate::error::{Error, Result};

/// Greatest common divisor by the Euclidean remainder loop.
///
/// `gcd(0, y) == y`, so the function is total on `u64`.
pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

pub fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// `true` iff `g` divides `x`. Zero is divisible by everything.
///
/// # Panics
/// If `g == 0`.
pub fn divides(g: u64, x: u64) -> bool {
    assert!(g != 0, "divisor must be positive");
    x.is_multiple_of(g)
}

/// Largest `s` with `s * s <= x`, by integer Newton iteration.
pub fn isqrt_floor(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    // Start above the root; Newton decreases monotonically from there.
    let mut s = 1u64 << ((64 - x.leading_zeros()).div_ceil(2));
    loop {
        let next = (s + x / s) / 2;
        if next >= s {
            return s;
        }
        s = next;
    }
}

pub(crate) fn checked_mul(x: u64, y: u64, what: &'static str) -> Result<u64> {
    x.checked_mul(y).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_add(x: u64, y: u64, what: &'static str) -> Result<u64> {
    x.checked_add(y).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_pow(x: u64, e: u32, what: &'static str) -> Result<u64> {
    x.checked_pow(e).ok_or(Error::Overflow(what))
}
