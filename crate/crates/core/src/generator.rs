//! Enumeration of primitive triples for a fixed gap `d`, and across all gaps
//! up to a bound on the shorter leg.

use crate::admissibility::{admissible_ds_up_to, decompose, decompose_with, DParams};
use crate::arith::{checked_add, checked_mul, isqrt_floor};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::factor::Sieve;

/// A bare `(a, b, c)` with no provenance attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Triple {
    pub const fn new(a: u64, b: u64, c: u64) -> Self {
        Self { a, b, c }
    }
}

impl From<(u64, u64, u64)> for Triple {
    fn from((a, b, c): (u64, u64, u64)) -> Self {
        Self { a, b, c }
    }
}

/// A primitive triple together with the parameters that produced it.
///
/// Always `a^2 + b^2 = c^2`, `a < b < c`, `gcd(a, b, c) = 1`, `d = c - b`,
/// `a = 2n + d` and `n = n_fact(d) * r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratedTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub n: u64,
    pub r: u64,
}

impl GeneratedTriple {
    pub fn triple(&self) -> Triple {
        Triple::new(self.a, self.b, self.c)
    }
}

/// Where an enumeration stops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    /// Emit this many triples.
    MaxCount(usize),
    /// Emit every triple whose shorter leg `a` is at most this. Bounds below
    /// 3 give an empty result.
    AMax(u64),
}

/// Output ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    /// By gap `d`, then by `r`. For a single `d` this is generation order.
    #[default]
    ByR,
    /// By `(a, b)` ascending.
    ByLegs,
}

impl Order {
    fn sort(self, triples: &mut [GeneratedTriple]) {
        match self {
            Order::ByR => triples.sort_unstable_by_key(|t| (t.d, t.r)),
            Order::ByLegs => triples.sort_unstable_by_key(|t| (t.a, t.b)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub limit: Limit,
    pub order: Order,
}

impl GenConfig {
    pub fn count(max_count: usize) -> Self {
        Self {
            limit: Limit::MaxCount(max_count),
            order: Order::default(),
        }
    }

    pub fn a_max(a_max: u64) -> Self {
        Self {
            limit: Limit::AMax(a_max),
            order: Order::default(),
        }
    }

    pub fn with_order(self, order: Order) -> Self {
        Self { order, ..self }
    }
}

/// Smallest `r` with `2r^2 > f*d`, i.e. the first `r` giving `a < b`.
///
/// For admissible `d`, `f*d/2` is never a perfect square, so this equals
/// `ceil(sqrt(f*d/2))`.
pub fn r_min(dp: &DParams) -> u64 {
    let fd = dp.f() as u128 * dp.d() as u128;
    // f*d/2 <= d, so it fits in u64.
    let mut r = isqrt_floor((fd / 2) as u64);
    while 2 * (r as u128) * (r as u128) <= fd {
        r += 1;
    }
    r
}

/// Smallest valid `r >= max(from, r_min)`: one sharing no prime with `d`.
/// Every `r` is valid for `d = 1`.
pub fn next_valid_r(dp: &DParams, from: u64) -> Result<u64> {
    let mut r = from.max(r_min(dp));
    while !dp.is_coprime_to(r) {
        r = checked_add(r, 1, "r")?;
    }
    Ok(r)
}

/// The `(a, b, c)` given by the parameterisation at `r`, with no check that
/// `r` is valid. Skipped values of `r` yield reducible triples here.
pub fn formula_triple(dp: &DParams, r: u64) -> Result<Triple> {
    let n = checked_mul(dp.n_fact(), r, "n")?;
    let two_n = checked_mul(2, n, "2n")?;
    let r_sq = checked_mul(r, r, "r^2")?;
    // 2n^2/d reduces to 2r^2/f.
    let quotient = if dp.f() == 2 {
        r_sq
    } else {
        checked_mul(2, r_sq, "2r^2")?
    };
    let a = checked_add(two_n, dp.d(), "a")?;
    let b = checked_add(two_n, quotient, "b")?;
    let c = checked_add(b, dp.d(), "c")?;
    Ok(Triple { a, b, c })
}

/// The primitive triple for gap `dp.d()` at parameter `r`.
///
/// `r` must be at least [`r_min`] and share no prime with `d`.
pub fn triple_for(dp: &DParams, r: u64) -> Result<GeneratedTriple> {
    let invalid = |reason| Error::InvalidR {
        d: dp.d(),
        r,
        reason,
    };
    if r < r_min(dp) {
        return Err(invalid("below r_min, so a >= b"));
    }
    if !dp.is_coprime_to(r) {
        return Err(invalid("shares a prime with d, so the triple is reducible"));
    }
    let Triple { a, b, c } = formula_triple(dp, r)?;
    Ok(GeneratedTriple {
        a,
        b,
        c,
        d: dp.d(),
        n: dp.n_fact() * r,
        r,
    })
}

/// Unbounded stream of the triples for one gap, in increasing `r`.
///
/// Yields `Err` once on overflow and then ends; everything yielded before the
/// error is valid.
#[derive(Debug, Clone)]
pub struct TripleStream {
    dp: DParams,
    next_from: Option<u64>,
}

impl TripleStream {
    pub fn new(dp: DParams) -> Self {
        Self {
            dp,
            next_from: Some(1),
        }
    }

    pub fn params(&self) -> &DParams {
        &self.dp
    }
}

impl Iterator for TripleStream {
    type Item = Result<GeneratedTriple>;

    fn next(&mut self) -> Option<Self::Item> {
        let from = self.next_from.take()?;
        let step = next_valid_r(&self.dp, from).and_then(|r| {
            let t = triple_for(&self.dp, r)?;
            Ok((r, t))
        });
        match step {
            Ok((r, t)) => {
                self.next_from = r.checked_add(1);
                Some(Ok(t))
            }
            Err(e) => Some(Err(e)),
        }
    }
}

/// Stream for `d` bounded by `limit`. Fails up front if `d` is inadmissible.
pub fn stream_for_d(
    d: u64,
    limit: Limit,
) -> Result<Box<dyn Iterator<Item = Result<GeneratedTriple>>>> {
    let stream = TripleStream::new(decompose(d)?);
    Ok(match limit {
        Limit::MaxCount(count) => Box::new(stream.take(count)),
        Limit::AMax(a_max) => Box::new(stream.take_while(move |t| match t {
            Ok(t) => t.a <= a_max,
            Err(_) => true,
        })),
    })
}

/// The primitive triples with gap `d`, starting at `r_min`, up to `cfg.limit`.
pub fn generate_for_d(d: u64, cfg: &GenConfig) -> Result<Vec<GeneratedTriple>> {
    let mut triples = stream_for_d(d, cfg.limit)?.collect::<Result<Vec<_>>>()?;
    cfg.order.sort(&mut triples);
    Ok(triples)
}

/// Every primitive triple with shorter leg `a <= a_max`, each exactly once,
/// sorted by `(a, b)`.
pub fn generate_all(a_max: u64) -> Result<Vec<GeneratedTriple>> {
    generate_all_with(a_max, Order::ByLegs, Execution::default())
}

/// [`generate_all`] with explicit ordering and execution strategy. Gaps are
/// evaluated independently (in parallel under [`Execution::Parallel`]), then
/// merged and sorted.
pub fn generate_all_with(
    a_max: u64,
    order: Order,
    exec: Execution,
) -> Result<Vec<GeneratedTriple>> {
    if a_max < 3 {
        return Ok(Vec::new());
    }
    // a = 2n + d with n >= 1, so d <= a_max - 2.
    let ds = admissible_ds_up_to(a_max - 2);
    let sieve = Sieve::for_values_up_to(a_max);
    let per_d = exec.map(&ds, |&d| triples_for_gap_up_to(&sieve, d, a_max));
    let mut all = Vec::new();
    for chunk in per_d {
        all.extend(chunk?);
    }
    order.sort(&mut all);
    Ok(all)
}

fn triples_for_gap_up_to(sieve: &Sieve, d: u64, a_max: u64) -> Result<Vec<GeneratedTriple>> {
    let dp = decompose_with(sieve, d)?;
    let mut out = Vec::new();
    for t in TripleStream::new(dp) {
        let t = t?;
        if t.a > a_max {
            break;
        }
        out.push(t);
    }
    Ok(out)
}

/// `(2n+1, 2n^2+2n, 2n^2+2n+1)`, the triples with `c - b = 1`.
pub fn family_first(n: u64) -> Result<GeneratedTriple> {
    if n == 0 {
        return Err(Error::Zero { what: "n" });
    }
    let two_n = checked_mul(2, n, "2n")?;
    let a = checked_add(two_n, 1, "a")?;
    let b = checked_add(checked_mul(two_n, n, "2n^2")?, two_n, "b")?;
    let c = checked_add(b, 1, "c")?;
    Ok(GeneratedTriple {
        a,
        b,
        c,
        d: 1,
        n,
        r: n,
    })
}

/// `(2n+2, n^2+2n, n^2+2n+2)` for odd `n >= 3`, the triples with `c - b = 2`.
pub fn family_second(n: u64) -> Result<GeneratedTriple> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::SecondFamilyIndex(n));
    }
    let two_n = checked_mul(2, n, "2n")?;
    let a = checked_add(two_n, 2, "a")?;
    let b = checked_add(checked_mul(n, n, "n^2")?, two_n, "b")?;
    let c = checked_add(b, 2, "c")?;
    Ok(GeneratedTriple {
        a,
        b,
        c,
        d: 2,
        n,
        r: n,
    })
}

/// `r = (a - d) / (2 * n_fact(d))` recovered from a triple's legs, if the
/// division is exact.
pub fn recover_r(dp: &DParams, a: u64) -> Option<u64> {
    let m = a.checked_sub(dp.d())?;
    let step = 2 * dp.n_fact();
    (m % step == 0).then(|| m / step)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;

    fn abc(t: &GeneratedTriple) -> (u64, u64, u64) {
        (t.a, t.b, t.c)
    }

    fn dp(d: u64) -> DParams {
        decompose(d).unwrap()
    }

    #[test]
    fn r_min_examples() {
        assert_eq!(r_min(&dp(2)), 2);
        assert_eq!(r_min(&dp(8)), 3);
        assert_eq!(r_min(&dp(512)), 23);
        assert_eq!(r_min(&dp(1)), 1);
        assert_eq!(r_min(&dp(9)), 3);
        assert_eq!(r_min(&dp(2401)), 35);
        let oracle = (1..).find(|r| 2 * r * r > 36).unwrap();
        assert_eq!(oracle, 5);
        assert_eq!(r_min(&dp(18)), oracle);
    }

    #[test]
    fn r_min_matches_scan() {
        for d in admissible_ds_up_to(20_000) {
            let p = dp(d);
            let scan = (1u64..).find(|r| 2 * r * r > p.f() * d).unwrap();
            assert_eq!(r_min(&p), scan, "d={d}");
        }
    }

    #[test]
    fn next_valid_r_examples() {
        let run = |d, from, k| {
            let p = dp(d);
            let mut r = from;
            (0..k)
                .map(|_| {
                    let v = next_valid_r(&p, r).unwrap();
                    r = v + 1;
                    v
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(run(2, 2, 4), [3, 5, 7, 9]);
        assert_eq!(run(9, 3, 4), [4, 5, 7, 8]);
        assert_eq!(run(18, 1, 4), [5, 7, 11, 13]);
        assert_eq!(run(1, 1, 3), [1, 2, 3]);
        // from above r_min is respected
        assert_eq!(run(8, 40, 1), [41]);
    }

    #[test]
    fn triple_for_examples() {
        assert_eq!(abc(&triple_for(&dp(1), 1).unwrap()), (3, 4, 5));
        assert_eq!(abc(&triple_for(&dp(1), 2).unwrap()), (5, 12, 13));
        assert_eq!(abc(&triple_for(&dp(8), 3).unwrap()), (20, 21, 29));
        assert_eq!(abc(&triple_for(&dp(8), 5).unwrap()), (28, 45, 53));
        assert_eq!(abc(&triple_for(&dp(9), 4).unwrap()), (33, 56, 65));

        let t = triple_for(&dp(18), 5).unwrap();
        assert_eq!(abc(&t), (48, 55, 73));
        assert_eq!(48u64 * 48 + 55 * 55, 73 * 73);
        assert_eq!(gcd(gcd(48, 55), 73), 1);
        assert_eq!((t.d, t.n, t.r), (18, 15, 5));
    }

    #[test]
    fn triple_for_rejects_invalid_r() {
        assert!(matches!(
            triple_for(&dp(8), 2),
            Err(Error::InvalidR { d: 8, r: 2, .. })
        ));
        assert!(matches!(
            triple_for(&dp(8), 4),
            Err(Error::InvalidR { d: 8, r: 4, .. })
        ));
        assert!(matches!(
            triple_for(&dp(18), 6),
            Err(Error::InvalidR { d: 18, r: 6, .. })
        ));
    }

    #[test]
    fn triple_for_reports_overflow() {
        let p = dp(2);
        assert_eq!(triple_for(&p, u64::MAX), Err(Error::Overflow("2n")));
        // Here b = 2^64 - 1 fits but c = b + 2 does not.
        assert_eq!(triple_for(&p, (1 << 32) - 1), Err(Error::Overflow("c")));
        assert!(triple_for(&p, (1 << 32) - 3).is_ok());
        assert!(matches!(
            triple_for(&p, (1 << 32) + 1),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn stream_stops_after_overflow() {
        let p = dp(2);
        let mut stream = TripleStream {
            dp: p,
            next_from: Some((1 << 32) - 3),
        };
        assert!(stream.next().unwrap().is_ok());
        assert!(matches!(stream.next(), Some(Err(Error::Overflow(_)))));
        assert!(stream.next().is_none());
    }

    #[test]
    fn generate_for_d_examples() {
        let legs = |d, k| -> Vec<_> {
            generate_for_d(d, &GenConfig::count(k))
                .unwrap()
                .iter()
                .map(abc)
                .collect()
        };
        assert_eq!(
            legs(2, 4),
            [(8, 15, 17), (12, 35, 37), (16, 63, 65), (20, 99, 101)]
        );
        assert_eq!(
            legs(32, 4),
            [
                (88, 105, 137),
                (104, 153, 185),
                (120, 209, 241),
                (136, 273, 305)
            ]
        );
        assert_eq!(legs(49, 2), [(119, 120, 169), (133, 156, 205)]);
        let seventy_two = generate_for_d(72, &GenConfig::count(1)).unwrap();
        assert_eq!(abc(&seventy_two[0]), (204, 253, 325));
        assert_eq!(seventy_two[0].r, 11);
    }

    #[test]
    fn generate_for_d_first_family() {
        let got = generate_for_d(1, &GenConfig::count(20)).unwrap();
        for (i, t) in got.iter().enumerate() {
            assert_eq!(*t, family_first(i as u64 + 1).unwrap());
        }
    }

    #[test]
    fn generate_for_d_with_a_max() {
        let got = generate_for_d(8, &GenConfig::a_max(44)).unwrap();
        assert_eq!(
            got.iter().map(|t| t.a).collect::<Vec<_>>(),
            [20, 28, 36, 44]
        );
        assert!(generate_for_d(8, &GenConfig::a_max(19)).unwrap().is_empty());
        assert!(generate_for_d(1, &GenConfig::a_max(2)).unwrap().is_empty());
    }

    #[test]
    fn generate_for_d_rejects_inadmissible() {
        assert!(matches!(
            generate_for_d(4, &GenConfig::count(1)),
            Err(Error::Inadmissible { d: 4, .. })
        ));
    }

    #[test]
    fn generate_all_small() {
        let four: Vec<_> = generate_all(4).unwrap().iter().map(abc).collect();
        assert_eq!(four, [(3, 4, 5)]);
        // a <= 5 admits (5, 12, 13) as well.
        let five: Vec<_> = generate_all(5).unwrap().iter().map(abc).collect();
        assert_eq!(five, [(3, 4, 5), (5, 12, 13)]);
        assert!(generate_all(2).unwrap().is_empty());
        assert!(generate_all(0).unwrap().is_empty());

        let twenty = generate_all(20).unwrap();
        assert_eq!(twenty.len(), 14);
        assert!(twenty.iter().any(|t| abc(t) == (20, 21, 29) && t.d == 8));
        assert!(twenty.iter().any(|t| abc(t) == (20, 99, 101) && t.d == 2));
        assert!(twenty
            .windows(2)
            .all(|w| (w[0].a, w[0].b) < (w[1].a, w[1].b)));
        assert!(twenty.iter().all(|t| t.c - t.b == t.d));
    }

    #[test]
    fn generate_all_orders() {
        let by_r = generate_all_with(300, Order::ByR, Execution::Sequential).unwrap();
        assert!(by_r.windows(2).all(|w| (w[0].d, w[0].r) < (w[1].d, w[1].r)));
        let mut by_legs = generate_all(300).unwrap();
        assert_eq!(by_r.len(), by_legs.len());
        by_legs.sort_unstable_by_key(|t| (t.d, t.r));
        assert_eq!(by_r, by_legs);
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq = generate_all_with(5_000, Order::ByLegs, Execution::Sequential).unwrap();
        let def = generate_all_with(5_000, Order::ByLegs, Execution::default()).unwrap();
        assert_eq!(seq, def);
    }

    #[test]
    fn families_match_parameterisation() {
        assert_eq!(abc(&family_first(3).unwrap()), (7, 24, 25));
        assert_eq!(abc(&family_first(1).unwrap()), (3, 4, 5));
        assert_eq!(abc(&family_second(3).unwrap()), (8, 15, 17));
        for n in 1..200 {
            assert_eq!(family_first(n).unwrap(), triple_for(&dp(1), n).unwrap());
        }
        for n in (3..200).step_by(2) {
            assert_eq!(family_second(n).unwrap(), triple_for(&dp(2), n).unwrap());
        }
    }

    #[test]
    fn family_errors() {
        assert_eq!(family_second(4), Err(Error::SecondFamilyIndex(4)));
        assert_eq!(family_second(1), Err(Error::SecondFamilyIndex(1)));
        assert_eq!(family_first(0), Err(Error::Zero { what: "n" }));
        assert!(matches!(
            family_first(u64::MAX / 2),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn boundary_is_tight() {
        for d in admissible_ds_up_to(10_000) {
            let p = dp(d);
            let lo = r_min(&p);
            let t = formula_triple(&p, lo).unwrap();
            assert!(t.a < t.b, "d={d}");
            assert!(2 * (lo - 1) * (lo - 1) <= p.f() * d, "d={d}");
            if lo > 1 {
                let below = formula_triple(&p, lo - 1).unwrap();
                assert!(below.a >= below.b, "d={d}");
            }
        }
    }

    #[test]
    fn provenance_is_recoverable() {
        for t in generate_all(2_000).unwrap() {
            let p = dp(t.c - t.b);
            assert_eq!(recover_r(&p, t.a), Some(t.r));
            assert_eq!(gcd(t.r, t.d), 1);
        }
    }
}
