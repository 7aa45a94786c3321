//! Prime sieve and canonical prime factorizations.

use std::fmt;
use std::sync::OnceLock;

use crate::arith::{checked_mul, checked_pow, isqrt_floor};
use crate::error::{Error, Result};

/// Canonical factorization `p1^e1 * p2^e2 * ...` of a number greater than 1.
///
/// Primes are strictly ascending and every exponent is at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFactorization {
    entries: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    /// Builds a factorization from `(prime, exponent)` pairs, checking the
    /// ordering and exponent invariants. Primality of the bases is trusted.
    pub fn from_entries(entries: Vec<(u64, u32)>) -> Option<Self> {
        let ascending = entries.windows(2).all(|w| w[0].0 < w[1].0);
        let positive = entries.iter().all(|&(p, e)| p >= 2 && e >= 1);
        (ascending && positive && !entries.is_empty()).then_some(Self { entries })
    }

    pub fn entries(&self) -> &[(u64, u32)] {
        &self.entries
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.iter().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.entries
            .binary_search_by_key(&p, |&(q, _)| q)
            .map_or(0, |i| self.entries[i].1)
    }

    pub fn reconstruct(&self) -> Result<u64> {
        self.entries.iter().try_fold(1u64, |acc, &(p, e)| {
            checked_mul(
                acc,
                checked_pow(p, e, "prime power")?,
                "factorization product",
            )
        })
    }
}

/// Formats as `2^4 · 3^1 · 7^2`.
impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" · ")?;
            }
            write!(f, "{p}^{e}")?;
        }
        Ok(())
    }
}

/// Primes up to a fixed limit, computed once by the sieve of Eratosthenes.
///
/// Read-only after construction, so one sieve can be shared across threads.
#[derive(Debug, Clone)]
pub struct Sieve {
    limit: u64,
    primes: Vec<u64>,
}

impl Sieve {
    pub fn new(limit: u64) -> Self {
        let len = usize::try_from(limit).expect("sieve limit exceeds address space") + 1;
        let mut composite = vec![false; len];
        let mut primes = Vec::new();
        for i in 2..len {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i.saturating_mul(i);
            while j < len {
                composite[j] = true;
                j += i;
            }
        }
        Self { limit, primes }
    }

    /// A sieve large enough to factorize every `g <= max_value` by trial
    /// division alone.
    pub fn for_values_up_to(max_value: u64) -> Self {
        Self::new(isqrt_floor(max_value))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Trial division by the sieved primes up to `isqrt(g)`. A cofactor left
    /// over after that is prime. If the sieve is too small for `g`, division
    /// continues with odd candidates past the limit.
    pub fn factorize(&self, g: u64) -> Result<PrimeFactorization> {
        if g < 2 {
            return Err(Error::FactorizeBelowTwo(g));
        }
        let mut rest = g;
        let mut entries = Vec::new();
        let mut take = |p: u64, rest: &mut u64| {
            let mut e = 0;
            while (*rest).is_multiple_of(p) {
                *rest /= p;
                e += 1;
            }
            if e > 0 {
                entries.push((p, e));
            }
        };

        let mut exhausted = true;
        for &p in &self.primes {
            if p > rest / p {
                exhausted = false;
                break;
            }
            take(p, &mut rest);
        }
        if exhausted {
            if self.limit < 2 {
                take(2, &mut rest);
            }
            let mut p = (self.limit + 1).max(3) | 1;
            while p <= rest / p {
                take(p, &mut rest);
                p += 2;
            }
        }
        if rest > 1 {
            entries.push((rest, 1));
        }
        Ok(PrimeFactorization { entries })
    }
}

/// All primes `p <= n_max`, ascending.
pub fn primes_up_to(n_max: u64) -> Vec<u64> {
    Sieve::new(n_max).primes
}

/// Process-wide sieve up to 2^16, enough to factorize any `g < 2^32` by
/// sieved primes alone. Built on first use, read-only afterwards.
pub(crate) fn shared_sieve() -> &'static Sieve {
    static SHARED: OnceLock<Sieve> = OnceLock::new();
    SHARED.get_or_init(|| Sieve::new(1 << 16))
}

/// Canonical factorization of `g >= 2`.
pub fn factorize(g: u64) -> Result<PrimeFactorization> {
    shared_sieve().factorize(g)
}

pub fn reconstruct(pf: &PrimeFactorization) -> Result<u64> {
    pf.reconstruct()
}

/// Exponent of `p` in `pf`, zero when `p` does not occur.
pub fn exponent_of(pf: &PrimeFactorization, p: u64) -> u32 {
    pf.exponent_of(p)
}
