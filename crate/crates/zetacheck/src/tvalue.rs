//! Closed-form t values and the ordinal relation they satisfy.
//!
//! For the m-th prime p the table value is
//! `t = acos(-sqrt(p) / (m(m+1))) / ln p`, and for the eta-th non-prime c
//! (c >= 2) the positive branch `t = acos(+sqrt(c) / (eta(eta+1))) / ln c`.
//! The non-prime 1 carries an infinity sentinel. Feeding such a t back into
//! `F = sqrt(p) / cos(t ln p)` gives `F = -m(m+1)` on the prime branch, so
//! `m^2 + m + F = 0` and the ordinal can be recovered as
//! `m = (-1 + sqrt(1 - 4F)) / 2`.
//!
//! Every prime t lies strictly inside the band `(t0, 2 t0)` with
//! `t0 = pi / (2 ln p)`: the cosine vanishes at t0, so F blows up there,
//! and at `2 t0 = pi / ln p` the recovered ordinal is stationary. Non-prime
//! t values land strictly below t0 on the positive branch.

use crate::primes::{is_prime_trial, Kind, Sieve};
use crate::{Error, Result};
use std::f64::consts::PI;

/// |cos(t ln p)| below this is treated as sitting on the cosine zero t0.
pub const COS_EPS: f64 = 1e-12;

/// Fractional parts beyond this trigger the rounding warning in
/// [`pi_via_relation`].
pub const ROUNDING_WARN: f64 = 1e-3;

/// A per-number table value. `t` is `f64::INFINITY` exactly when the subject
/// is the non-prime 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TValue {
    pub subject: u64,
    pub ordinal: u64,
    pub kind: Kind,
    pub t: f64,
}

/// Band edges: t0 = pi/(2 ln p) where the cosine vanishes, and 2 t0 where
/// the recovered ordinal is stationary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TBand {
    pub p: u64,
    pub t0: f64,
    pub stationary: f64,
}

/// F = sqrt(p) / cos(t ln p) at a given point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FValue {
    pub p: u64,
    pub t: f64,
    pub f: f64,
}

/// Inputs for the subscript recurrence: the F value at the origin index and
/// the subscript offset k >= 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecurrenceQuery {
    pub f_start: f64,
    pub k: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Result of the pi(x) demonstration: the recovered ordinal before and after
/// rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiViaRelation {
    pub count: u64,
    pub estimate: f64,
    pub rounding_warning: bool,
}

fn arccos_ratio(subject: u64, ordinal: u64) -> Result<f64> {
    let prod = ordinal as f64 * (ordinal as f64 + 1.0);
    let x = (subject as f64).sqrt() / prod;
    if x > 1.0 {
        return Err(Error::ArccosDomain {
            subject,
            ordinal,
            next: ordinal + 1,
        });
    }
    Ok(x)
}

/// t value of the m-th prime p (negative branch).
pub fn t_prime(m: u64, p: u64) -> Result<TValue> {
    if p < 2 {
        return Err(Error::Domain(format!("p = {p} is below the prime domain")));
    }
    if m == 0 {
        return Err(Error::Domain("prime ordinal m must be >= 1".into()));
    }
    let x = arccos_ratio(p, m)?;
    Ok(TValue {
        subject: p,
        ordinal: m,
        kind: Kind::Prime,
        t: (-x).acos() / (p as f64).ln(),
    })
}

/// t value of the eta-th non-prime c (positive branch); c = 1 yields the
/// infinity sentinel.
pub fn t_nonprime(eta: u64, c: u64) -> Result<TValue> {
    if eta == 0 {
        return Err(Error::Domain("non-prime ordinal eta must be >= 1".into()));
    }
    if c == 1 {
        return Ok(TValue {
            subject: 1,
            ordinal: eta,
            kind: Kind::NonPrime,
            t: f64::INFINITY,
        });
    }
    if c == 0 {
        return Err(Error::Domain("non-prime subject must be >= 1".into()));
    }
    if is_prime_trial(c) {
        return Err(Error::Misclassification { c });
    }
    let x = arccos_ratio(c, eta)?;
    Ok(TValue {
        subject: c,
        ordinal: eta,
        kind: Kind::NonPrime,
        t: x.acos() / (c as f64).ln(),
    })
}

/// F = sqrt(p) / cos(t ln p); errors out within [`COS_EPS`] of the
/// cosine zero instead of returning huge values.
pub fn f_value(p: u64, t: f64) -> Result<FValue> {
    if p < 2 {
        return Err(Error::Domain(format!("p = {p} is below the prime domain")));
    }
    let c = (t * (p as f64).ln()).cos();
    if c.abs() < COS_EPS {
        return Err(Error::NearSingularity { p, t });
    }
    Ok(FValue {
        p,
        t,
        f: (p as f64).sqrt() / c,
    })
}

/// m^2 + m + F; vanishes exactly when (m, p, t) sit on the relation locus.
pub fn relation_residual(m: u64, p: u64, t: f64) -> Result<f64> {
    let f = f_value(p, t)?;
    let mf = m as f64;
    Ok(mf * mf + mf + f.f)
}

/// Recover a (real-valued) ordinal from an F value: (-1 + sqrt(1 - 4F)) / 2.
pub fn ordinal_from_f(f: f64) -> Result<f64> {
    let disc = 1.0 - 4.0 * f;
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant { f, disc });
    }
    Ok((-1.0 + disc.sqrt()) / 2.0)
}

/// Recover the ordinal from (p, t); equals m exactly when (p, t) lie on the
/// relation locus. Fails with a negative discriminant when t is below the
/// cosine zero t0.
pub fn m_from_pt(p: u64, t: f64) -> Result<f64> {
    ordinal_from_f(f_value(p, t)?.f)
}

/// The band (t0, 2 t0) for a given p >= 2.
pub fn t_band(p: u64) -> Result<TBand> {
    if p < 2 {
        return Err(Error::Domain(format!("t band requires p >= 2, got {p}")));
    }
    let lnp = (p as f64).ln();
    Ok(TBand {
        p,
        t0: PI / (2.0 * lnp),
        stationary: PI / lnp,
    })
}

/// Whether a prime-branch t value lies strictly inside its band.
pub fn band_membership(entry: &TValue) -> Result<bool> {
    if entry.kind != Kind::Prime {
        return Err(Error::Domain(format!(
            "band membership is defined for prime entries, got non-prime {}",
            entry.subject
        )));
    }
    let band = t_band(entry.subject)?;
    Ok(band.t0 < entry.t && entry.t < band.stationary)
}

/// One row of the limit diagnostics: the ratio t_m / t0 and difference
/// t_m - t0 for the m-th prime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitEntry {
    pub m: u64,
    pub ratio: f64,
    pub diff: f64,
}

/// Ratio and difference sequences for m = 1..=m_max; the tails approach 1
/// and 0 respectively.
pub fn limit_profile(m_max: u64, sieve: &Sieve) -> Result<Vec<LimitEntry>> {
    let primes = sieve.primes();
    if m_max == 0 || m_max as usize > primes.len() {
        return Err(Error::Range {
            lo: 1,
            hi: m_max,
            limit: primes.len() as u64,
        });
    }
    (1..=m_max)
        .map(|m| {
            let p = primes[m as usize - 1];
            let t = t_prime(m, p)?.t;
            let band = t_band(p)?;
            Ok(LimitEntry {
                m,
                ratio: t / band.t0,
                diff: t - band.t0,
            })
        })
        .collect()
}

/// Shift an F value by k subscripts: forward computes
/// `F - k sqrt(1 - 4F) - k^2`. Backward is the exact inverse,
/// `F + k sqrt(1 - 4F) - k^2`, which is the forward step with k negated
/// (sqrt(1 - 4 F_fwd) = sqrt(1 - 4F) + 2k collapses the round trip to the
/// identity).
pub fn recurrence_shift(q: RecurrenceQuery, direction: Direction) -> Result<f64> {
    if q.k == 0 {
        return Err(Error::Domain("recurrence offset k must be >= 1".into()));
    }
    let disc = 1.0 - 4.0 * q.f_start;
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant { f: q.f_start, disc });
    }
    let k = q.k as f64;
    Ok(match direction {
        Direction::Forward => q.f_start - k * disc.sqrt() - k * k,
        Direction::Backward => q.f_start + k * disc.sqrt() - k * k,
    })
}

/// Every prime p <= search_limit admissible for ordinal m (sqrt(p) <= m(m+1))
/// together with the unique in-band t solving the relation. The length of
/// the result measures how far the relation is from pinning down a single
/// prime for the ordinal.
pub fn admissible_primes(m: u64, search_limit: u64, sieve: &Sieve) -> Result<Vec<(u64, f64)>> {
    if search_limit > sieve.limit() {
        return Err(Error::Range {
            lo: 2,
            hi: search_limit,
            limit: sieve.limit(),
        });
    }
    let prod = m as f64 * (m as f64 + 1.0);
    let mut out = Vec::new();
    for &p in sieve.primes() {
        if p > search_limit {
            break;
        }
        if (p as f64).sqrt() <= prod {
            out.push((p, t_prime(m, p)?.t));
        }
    }
    Ok(out)
}

/// The pi(x) demonstration: take the largest prime p <= x, its tabulated t,
/// recover the ordinal and round it. Must agree with the sieve count.
pub fn pi_via_relation(x: u64, sieve: &Sieve) -> Result<PiViaRelation> {
    if x < 2 {
        return Err(Error::Domain(format!(
            "pi_via_relation requires x >= 2, got {x}"
        )));
    }
    if x > sieve.limit() {
        return Err(Error::Range {
            lo: 2,
            hi: x,
            limit: sieve.limit(),
        });
    }
    let idx = sieve.primes().partition_point(|&p| p <= x);
    let m = idx as u64; // number of primes <= x, also the ordinal of the largest
    let p = sieve.primes()[idx - 1];
    let t = t_prime(m, p)?.t;
    let estimate = m_from_pt(p, t)?;
    let count = estimate.round();
    Ok(PiViaRelation {
        count: count as u64,
        estimate,
        rounding_warning: (estimate - count).abs() > ROUNDING_WARN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::Sieve;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (|d| = {})", (a - b).abs());
    }

    #[test]
    fn prime_branch_values() {
        close(t_prime(1, 2).unwrap().t, 3.3992701063703954, 1e-12);
        close(t_prime(2, 3).unwrap().t, 1.6963574117515417, 1e-12);
        close(t_prime(17, 59).unwrap().t, 0.3913883732744893, 1e-12);
        close(t_prime(25, 97).unwrap().t, 0.346_677_419_189_345_4, 1e-12);
        close(t_prime(1000, 7919).unwrap().t, 0.17498960559003882, 1e-12);
    }

    #[test]
    fn nonprime_branch_values() {
        close(t_nonprime(2, 4).unwrap().t, 0.8879495234665518, 1e-12);
        close(t_nonprime(3, 6).unwrap().t, 0.7619479171620645, 1e-12);
        close(t_nonprime(5, 9).unwrap().t, 0.6693120588593804, 1e-12);
        assert!(t_nonprime(1, 1).unwrap().t.is_infinite());
    }

    #[test]
    fn nonprime_rejects_primes_and_prime_rejects_bad_domain() {
        assert!(matches!(
            t_nonprime(3, 7),
            Err(Error::Misclassification { c: 7 })
        ));
        assert!(matches!(t_prime(1, 1), Err(Error::Domain(_))));
        // sqrt(5) > 1*2: outside the arccos domain for m = 1
        assert!(matches!(t_prime(1, 5), Err(Error::ArccosDomain { .. })));
    }

    #[test]
    fn f_value_on_the_locus() {
        let t = t_prime(1, 2).unwrap().t;
        close(f_value(2, t).unwrap().f, -2.0, 1e-9);
        let t = t_prime(2, 3).unwrap().t;
        close(f_value(3, t).unwrap().f, -6.0, 1e-9);
        let t = t_nonprime(2, 4).unwrap().t;
        close(f_value(4, t).unwrap().f, 6.0, 1e-9);
    }

    #[test]
    fn f_value_rejects_cosine_zero() {
        let t0 = t_band(2).unwrap().t0;
        assert!(matches!(
            f_value(2, t0),
            Err(Error::NearSingularity { p: 2, .. })
        ));
    }

    #[test]
    fn relation_residual_examples() {
        // table-rounded t (10 decimals) leaves a residual well below 1e-5
        let r = relation_residual(1, 2, 3.3992701060).unwrap();
        assert!(r.abs() < 1e-8, "residual {r}");
        let r = relation_residual(25, 97, 0.3466774192).unwrap();
        assert!(r.abs() < 1e-5, "residual {r}");
        // an arbitrary off-locus t does not vanish
        let r = relation_residual(1, 2, 1.0).unwrap();
        assert!(r.abs() > 1.0, "residual {r}");
    }

    #[test]
    fn ordinal_recovery() {
        close(ordinal_from_f(-2.0).unwrap(), 1.0, 0.0);
        close(m_from_pt(2, 3.3992701060).unwrap(), 1.0, 1e-6);
        let t = t_prime(1000, 7919).unwrap().t;
        close(m_from_pt(7919, t).unwrap(), 1000.0, 1e-6);
    }

    #[test]
    fn ordinal_recovery_rejects_t_below_t0() {
        // 0.1749699303 < t0(7919), so F is positive and the discriminant negative
        assert!(matches!(
            m_from_pt(7919, 0.1749699303),
            Err(Error::NegativeDiscriminant { .. })
        ));
    }

    #[test]
    fn band_values() {
        let b = t_band(2).unwrap();
        close(b.t0, 2.266_180_070_913_597, 1e-12);
        assert_eq!(b.stationary, 2.0 * b.t0);
        close(t_band(3).unwrap().t0, 1.4298004336900636, 1e-12);
        close(t_band(1511).unwrap().t0, 0.21457421506541727, 1e-12);
        assert!(t_band(1).is_err());
    }

    #[test]
    fn band_membership_examples() {
        assert!(band_membership(&t_prime(1, 2).unwrap()).unwrap());
        assert!(band_membership(&t_prime(240, 1511).unwrap()).unwrap());
        let np = t_nonprime(2, 4).unwrap();
        assert!(band_membership(&np).is_err());
    }

    #[test]
    fn limit_profile_shrinks() {
        let sieve = Sieve::new(7919).unwrap();
        let profile = limit_profile(1000, &sieve).unwrap();
        // first entry: ratio is exactly 3/2 (acos(-sqrt(2)/2) = 3 pi / 4)
        close(profile[0].ratio, 1.5, 1e-12);
        close(profile[0].diff, 1.1330900354567985, 1e-10);
        // row m = 100 difference, p = 541
        close(profile[99].diff, 3.6592406891884675e-4, 1e-12);
        // tail approaches (1, 0)
        let last = profile.last().unwrap();
        assert!(last.diff < 1e-4 && last.diff > 0.0);
        assert!((last.ratio - 1.0).abs() < 1e-3);
    }

    #[test]
    fn recurrence_forward_backward() {
        let fwd = recurrence_shift(
            RecurrenceQuery {
                f_start: -2.0,
                k: 1,
            },
            Direction::Forward,
        )
        .unwrap();
        assert_eq!(fwd, -6.0);
        let back = recurrence_shift(
            RecurrenceQuery {
                f_start: -6.0,
                k: 1,
            },
            Direction::Backward,
        )
        .unwrap();
        assert_eq!(back, -2.0);
        // F = -m(m+1) shifts to -(m+k)(m+k+1) exactly: sqrt(1+4m(m+1)) = 2m+1
        for (m, k) in [(3u64, 5u64), (10, 90), (77, 23), (500, 500)] {
            let f = -((m * (m + 1)) as f64);
            let shifted =
                recurrence_shift(RecurrenceQuery { f_start: f, k }, Direction::Forward).unwrap();
            let want = -(((m + k) * (m + k + 1)) as f64);
            assert_eq!(shifted, want, "m={m} k={k}");
        }
    }

    #[test]
    fn recurrence_rejects_negative_discriminant() {
        assert!(matches!(
            recurrence_shift(RecurrenceQuery { f_start: 0.5, k: 1 }, Direction::Forward),
            Err(Error::NegativeDiscriminant { .. })
        ));
    }

    #[test]
    fn admissible_prime_scan() {
        let sieve = Sieve::new(1000).unwrap();
        let one = admissible_primes(1, 2, &sieve).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].0, 2);
        let m1 = admissible_primes(1, 100, &sieve).unwrap();
        assert_eq!(m1.iter().map(|&(p, _)| p).collect::<Vec<_>>(), [2, 3]);
        let m2 = admissible_primes(2, 100, &sieve).unwrap();
        assert_eq!(m2.len(), 11); // primes up to 36
        for &(p, t) in &m2 {
            let band = t_band(p).unwrap();
            assert!(band.t0 < t && t <= band.stationary, "p={p} out of band");
        }
    }

    #[test]
    fn pi_demonstration_matches_sieve() {
        let sieve = Sieve::new(7919).unwrap();
        for x in [10u64, 100, 1000, 7919] {
            let got = pi_via_relation(x, &sieve).unwrap();
            assert_eq!(got.count, sieve.prime_pi(x).unwrap(), "x={x}");
            assert!(
                !got.rounding_warning,
                "unexpected rounding warning at x={x}"
            );
        }
    }
}
