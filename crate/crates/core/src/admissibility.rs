//! Which gaps `d = c - b` admit primitive triples, and the decomposition
//! `d = f * n_fact^2` the generator runs on.
//!
//! A gap `d > 1` is admissible iff the exponent of 2 in its factorization is
//! odd (when 2 divides `d`) and every odd prime has an even exponent. `d = 1`
//! is admissible as a special case. Equivalently, `d` is an odd square or
//! twice a square.

use crate::arith::{checked_mul, checked_pow, isqrt_floor};
use crate::error::{Error, Result};
use crate::factor::{shared_sieve, Sieve};

/// An admissible gap `d`, decomposed.
///
/// `reduced_factors` lists every prime of `d` with its reduced exponent `k`:
/// `(e - 1) / 2` for the prime 2 and `e / 2` for odd primes. A `k` of zero is
/// kept (for `d = 2` or `d = 18` the prime 2 has `k = 0`), so
/// `prime_divisors` is always exactly the set of primes dividing `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DParams {
    d: u64,
    f: u64,
    reduced_factors: Vec<(u64, u32)>,
    n_fact: u64,
}

impl DParams {
    pub fn d(&self) -> u64 {
        self.d
    }

    /// 2 when `d` is even, else 1.
    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn reduced_factors(&self) -> &[(u64, u32)] {
        &self.reduced_factors
    }

    /// Product of `p^k` over `reduced_factors`; `d = f * n_fact^2`.
    pub fn n_fact(&self) -> u64 {
        self.n_fact
    }

    /// Primes dividing `d`, ascending. Empty iff `d = 1`.
    pub fn prime_divisors(&self) -> impl ExactSizeIterator<Item = u64> + '_ {
        self.reduced_factors.iter().map(|&(p, _)| p)
    }

    /// `true` iff no prime divisor of `d` divides `r`.
    pub fn is_coprime_to(&self, r: u64) -> bool {
        self.prime_divisors().all(|p| !r.is_multiple_of(p))
    }
}

/// Decompose `d` using primes from `sieve`. Lets batch callers share one
/// sieve across many gaps.
pub fn decompose_with(sieve: &Sieve, d: u64) -> Result<DParams> {
    match d {
        0 => Err(Error::Zero { what: "d" }),
        1 => Ok(DParams {
            d: 1,
            f: 1,
            reduced_factors: Vec::new(),
            n_fact: 1,
        }),
        _ => {
            let pf = sieve.factorize(d)?;
            let mut reduced_factors = Vec::with_capacity(pf.entries().len());
            let mut n_fact = 1u64;
            for &(p, e) in pf.entries() {
                let ok = if p == 2 { e % 2 == 1 } else { e % 2 == 0 };
                if !ok {
                    return Err(Error::Inadmissible {
                        d,
                        prime: p,
                        exponent: e,
                    });
                }
                let k = if p == 2 { (e - 1) / 2 } else { e / 2 };
                n_fact = checked_mul(n_fact, checked_pow(p, k, "n_fact")?, "n_fact")?;
                reduced_factors.push((p, k));
            }
            Ok(DParams {
                d,
                f: if d.is_multiple_of(2) { 2 } else { 1 },
                reduced_factors,
                n_fact,
            })
        }
    }
}

/// Decompose an admissible `d` into `f`, the reduced exponents and `n_fact`.
///
/// Fails with [`Error::Inadmissible`] naming the first prime whose exponent
/// has the wrong parity; no primitive triple has such a gap.
pub fn decompose(d: u64) -> Result<DParams> {
    decompose_with(shared_sieve(), d)
}

pub fn is_admissible(d: u64) -> bool {
    decompose(d).is_ok()
}

/// All admissible `d <= bound`, ascending. Built from the odd squares and
/// twice the squares rather than by factorizing each candidate.
pub fn admissible_ds_up_to(bound: u64) -> Vec<u64> {
    let mut ds: Vec<u64> = (1..=isqrt_floor(bound))
        .step_by(2)
        .map(|m| m * m)
        .chain((1..=isqrt_floor(bound / 2)).map(|m| 2 * m * m))
        .collect();
    ds.sort_unstable();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factorize;

    const BELOW_100: [u64; 12] = [1, 2, 8, 9, 18, 25, 32, 49, 50, 72, 81, 98];

    #[test]
    fn admissible_below_100() {
        let found: Vec<u64> = (1..100).filter(|&d| is_admissible(d)).collect();
        assert_eq!(found, BELOW_100);
        assert_eq!(admissible_ds_up_to(100), BELOW_100);
    }

    #[test]
    fn admissible_examples() {
        assert!(!is_admissible(4));
        assert!(is_admissible(729));
        assert!(!is_admissible(0));
        assert_eq!(admissible_ds_up_to(1), [1]);
        let up_to_3000 = admissible_ds_up_to(3000);
        assert!(up_to_3000.contains(&2048));
        assert!(up_to_3000.contains(&2401));
    }

    #[test]
    fn decompose_examples() {
        let eight = decompose(8).unwrap();
        assert_eq!((eight.f(), eight.n_fact()), (2, 2));
        assert_eq!(eight.reduced_factors(), [(2, 1)]);

        let eighteen = decompose(18).unwrap();
        assert_eq!((eighteen.f(), eighteen.n_fact()), (2, 3));
        assert_eq!(eighteen.reduced_factors(), [(2, 0), (3, 1)]);
        assert_eq!(eighteen.f() * eighteen.n_fact().pow(2), 18);

        let one = decompose(1).unwrap();
        assert_eq!((one.f(), one.n_fact()), (1, 1));
        assert!(one.reduced_factors().is_empty());
        assert_eq!(one.prime_divisors().len(), 0);
    }

    #[test]
    fn decompose_reports_failing_prime() {
        assert_eq!(
            decompose(4),
            Err(Error::Inadmissible {
                d: 4,
                prime: 2,
                exponent: 2
            })
        );
        assert_eq!(
            decompose(2 * 27),
            Err(Error::Inadmissible {
                d: 54,
                prime: 3,
                exponent: 3
            })
        );
        assert_eq!(
            decompose(3),
            Err(Error::Inadmissible {
                d: 3,
                prime: 3,
                exponent: 1
            })
        );
        assert_eq!(decompose(0), Err(Error::Zero { what: "d" }));
    }

    #[test]
    fn characterization_matches_factorization() {
        let listed = admissible_ds_up_to(100_000);
        let sieve = Sieve::for_values_up_to(100_000);
        let by_factor: Vec<u64> = (1..=100_000)
            .filter(|&d| decompose_with(&sieve, d).is_ok())
            .collect();
        assert_eq!(listed, by_factor);
    }

    #[test]
    fn decompose_invariants_up_to_1e5() {
        let sieve = Sieve::for_values_up_to(100_000);
        for d in admissible_ds_up_to(100_000) {
            let dp = decompose_with(&sieve, d).unwrap();
            assert_eq!(dp.f() * dp.n_fact() * dp.n_fact(), d);
            let has_two = dp.prime_divisors().any(|p| p == 2);
            assert_eq!(dp.f() == 2, has_two);
            assert_eq!(d == 1, dp.reduced_factors().is_empty());
            if d > 1 {
                let pf = factorize(d).unwrap();
                assert!(dp.prime_divisors().eq(pf.primes()));
                for &(p, e) in pf.entries() {
                    if p == 2 {
                        assert_eq!(e % 2, 1);
                    } else {
                        assert_eq!(e % 2, 0);
                    }
                }
            }
        }
    }
}
