//! Generation and verification of irreducible Pythagorean triples.
//!
//! A primitive triple `(a, b, c)` with `a < b < c` is parameterised here by the
//! gap `d = c - b` between hypotenuse and longer leg. Only some `d` admit
//! primitive triples at all ([`is_admissible`]); for those, [`decompose`]
//! writes `d = f * n_fact^2` with `f` in `{1, 2}`, and every primitive triple
//! with that gap is
//!
//! ```text
//! n = n_fact * r
//! a = 2n + d
//! b = 2n + 2r^2 / f
//! c = b + d
//! ```
//!
//! for exactly those `r` with `2r^2 > f * d` and `gcd(r, d) = 1`.
//!
//! ```
//! use idpt::{generate_for_d, GenConfig};
//!
//! let triples = generate_for_d(8, &GenConfig::count(2)).unwrap();
//! let legs: Vec<_> = triples.iter().map(|t| (t.a, t.b, t.c)).collect();
//! assert_eq!(legs, [(20, 21, 29), (28, 45, 53)]);
//! ```
//!
//! The [`oracle`] module holds independent brute-force and Euclid-formula
//! enumerations used to cross-check the generator.

pub mod admissibility;
pub mod arith;
mod error;
pub mod exec;
pub mod factor;
pub mod generator;
pub mod oracle;

pub use admissibility::{admissible_ds_up_to, decompose, is_admissible, DParams};
pub use arith::{divides, gcd, gcd3, isqrt_floor};
pub use error::{Error, Result};
pub use exec::Execution;
pub use factor::{exponent_of, factorize, primes_up_to, reconstruct, PrimeFactorization, Sieve};
pub use generator::{
    family_first, family_second, generate_all, generate_for_d, next_valid_r, r_min, triple_for,
    GenConfig, GeneratedTriple, Limit, Order, Triple,
};
pub use oracle::{classify, TripleVerdict, VerdictKind};
