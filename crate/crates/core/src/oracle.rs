//! Independent checks on the generator: classification of arbitrary
//! triples, exhaustive scans, and Euclid's formula as a second enumeration.
//!
//! None of these use the gap decomposition, so agreement with
//! [`generate_all`](crate::generate_all) is meaningful.

use std::collections::BTreeSet;

use crate::arith::{checked_add, checked_mul, gcd, gcd3};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::generator::Triple;

/// Default cap on `n` for [`brute_force_by_d`].
pub const DEFAULT_SCAN_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    NotDpt,
    ReducibleDpt,
    Idpt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleVerdict {
    pub kind: VerdictKind,
    /// `gcd(a, b, c)`; only meaningful when `kind != NotDpt`.
    pub gcd: u64,
}

impl TripleVerdict {
    pub fn is_idpt(&self) -> bool {
        self.kind == VerdictKind::Idpt
    }
}

/// Classify `(a, b, c)` in any order: the two smallest are taken as legs.
pub fn classify(a: u64, b: u64, c: u64) -> Result<TripleVerdict> {
    let mut sides = [a, b, c];
    sides.sort_unstable();
    let [x, y, z] = sides.map(u128::from);
    let legs = (x * x)
        .checked_add(y * y)
        .ok_or(Error::Overflow("a^2 + b^2"))?;
    // z^2 cannot overflow u128 for z < 2^64.
    let g = gcd3(a, b, c);
    let kind = if x == 0 || legs != z * z {
        VerdictKind::NotDpt
    } else if g == 1 {
        VerdictKind::Idpt
    } else {
        VerdictKind::ReducibleDpt
    };
    Ok(TripleVerdict { kind, gcd: g })
}

pub fn is_idpt(t: Triple) -> bool {
    classify(t.a, t.b, t.c).is_ok_and(|v| v.is_idpt())
}

/// All primitive triples with `a <= a_max` and `a < b < c`, by scanning every
/// divisor `g < a` of `a^2 = g * (2b + g)`.
pub fn brute_force_by_a(a_max: u64) -> BTreeSet<Triple> {
    brute_force_by_a_with(a_max, Execution::default())
}

pub fn brute_force_by_a_with(a_max: u64, exec: Execution) -> BTreeSet<Triple> {
    if a_max < 3 {
        return BTreeSet::new();
    }
    exec.map_range(3..=a_max, triples_with_leg)
        .into_iter()
        .flatten()
        .collect()
}

fn triples_with_leg(a: u64) -> Vec<Triple> {
    let sq = a as u128 * a as u128;
    let mut out = Vec::new();
    for gap in 1..a as u128 {
        if !sq.is_multiple_of(gap) {
            continue;
        }
        let sum = sq / gap;
        if sum <= gap || !(sum - gap).is_multiple_of(2) {
            continue;
        }
        let b = (sum - gap) / 2;
        let c = b + gap;
        if b <= a as u128 {
            continue;
        }
        let (Ok(b), Ok(c)) = (u64::try_from(b), u64::try_from(c)) else {
            continue;
        };
        let t = Triple::new(a, b, c);
        if is_idpt(t) {
            out.push(t);
        }
    }
    out
}

/// A triple found by the `n`-scan in [`brute_force_by_d`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScannedTriple {
    pub n: u64,
    pub triple: Triple,
}

/// Scan `n = 1, 2, ..., cap` for `d | 2n^2`, build `(2n+d, 2n+2n^2/d, b+d)`
/// and keep the primitive ones with `a < b`, up to `max_count`.
///
/// If the cap is reached with nothing found the result is
/// [`Error::ScanCapReached`], which is not a proof that none exist. If it is
/// reached after some finds, those are returned.
pub fn brute_force_by_d(d: u64, max_count: usize, cap: u64) -> Result<Vec<ScannedTriple>> {
    if d == 0 {
        return Err(Error::Zero { what: "d" });
    }
    let mut found = Vec::new();
    for n in 1..=cap {
        if found.len() >= max_count {
            break;
        }
        let two_n_sq = checked_mul(2, checked_mul(n, n, "n^2")?, "2n^2")?;
        if two_n_sq % d != 0 {
            continue;
        }
        let two_n = 2 * n;
        let a = checked_add(two_n, d, "a")?;
        let b = checked_add(two_n, two_n_sq / d, "b")?;
        let c = checked_add(b, d, "c")?;
        let t = Triple::new(a, b, c);
        if a < b && is_idpt(t) {
            found.push(ScannedTriple { n, triple: t });
        }
    }
    if found.is_empty() && max_count > 0 {
        return Err(Error::ScanCapReached { d, cap });
    }
    Ok(found)
}

/// All primitive triples with hypotenuse `c <= c_max` from Euclid's formula
/// `(m^2 - n^2, 2mn, m^2 + n^2)`, `m > n >= 1`, `gcd(m, n) = 1`, `m - n` odd.
/// Legs are reordered so the smaller comes first.
pub fn euclid_enumerate(c_max: u64) -> BTreeSet<Triple> {
    let mut out = BTreeSet::new();
    let mut m = 2u64;
    while m * m < c_max {
        for n in (1..m).rev().step_by(2) {
            // n runs over m-1, m-3, ..., so m - n is odd.
            let c = m * m + n * n;
            if c > c_max || gcd(m, n) != 1 {
                continue;
            }
            let (x, y) = (m * m - n * n, 2 * m * n);
            out.insert(Triple::new(x.min(y), x.max(y), c));
        }
        m += 1;
    }
    out
}

/// Euclid's enumeration restricted to shorter leg `a <= a_max`.
///
/// A primitive triple with shorter leg `a` has `c <= (a^2 + 1) / 2`, so it is
/// enough to enumerate hypotenuses up to that bound and filter.
pub fn euclid_by_a(a_max: u64) -> BTreeSet<Triple> {
    let c_max = (a_max as u128 * a_max as u128).div_ceil(2);
    let c_max = u64::try_from(c_max).unwrap_or(u64::MAX);
    euclid_enumerate(c_max)
        .into_iter()
        .filter(|t| t.a <= a_max)
        .collect()
}

/// Sum of the `d` consecutive odd numbers starting at `2b + 1`, added term by
/// term. Equals `(b + d)^2 - b^2`.
pub fn odd_run_sum(b: u64, d: u64) -> Result<u64> {
    if b == 0 {
        return Err(Error::Zero { what: "b" });
    }
    (1..=d).try_fold(0u64, |acc, i| {
        let term = checked_add(checked_mul(2, b - 1 + i, "odd term")?, 1, "odd term")?;
        checked_add(acc, term, "odd run sum")
    })
}
