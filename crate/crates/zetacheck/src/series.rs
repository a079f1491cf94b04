//! Truncated Dirichlet-series machinery and the series audits built on it.
//!
//! Real-axis zeta partial sums carry an integral tail correction
//! `X^(1-s)/(s-1) + X^(-s)/2`, which puts them within ~X^(-s) of the true
//! value. Prime and non-prime sums are raw truncations so that residuals of
//! claimed identities stay honest; the prime zeta additionally reports both
//! a rigorous tail bound (the integral bound on the full integer tail) and a
//! prime-density tail estimate `E1((s-1) ln X)` used by the log-zeta
//! expansion, where the mu = 1 term genuinely needs it.
//!
//! Two expansions of log zeta (the prime-power series and the Mercator
//! series in zeta - 1) are true identities and verify to 1e-8 at the default
//! truncation; the power-matching consequences claimed between them do not
//! hold, and [`power_identity_residual`] measures by how much without suppressing
//! anything.

use crate::primes::Sieve;
use crate::sum::{sum_indexed, sum_indexed_complex};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Cutoffs shared by the series operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationSpec {
    /// Summation cutoff X for n, p, c <= X.
    pub term_limit: u64,
    /// Highest prime-power order mu in the log-zeta expansion.
    pub mu_max: u32,
    /// Highest power of (zeta - 1) in the Mercator series.
    pub mercator_order: u32,
}

impl Default for TruncationSpec {
    fn default() -> Self {
        TruncationSpec {
            term_limit: 1_000_000,
            mu_max: 20,
            mercator_order: 40,
        }
    }
}

impl TruncationSpec {
    fn validate(&self) -> Result<()> {
        if self.term_limit == 0 || self.mu_max == 0 || self.mercator_order == 0 {
            return Err(Error::Domain("truncation cutoffs must all be >= 1".into()));
        }
        Ok(())
    }
}

/// Raw truncated prime zeta plus its tail figures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimeZetaPartial {
    /// sum over primes p <= X of p^(-sigma), raw truncation.
    pub sum: f64,
    /// Rigorous upper bound on the discarded tail (integral bound on the
    /// full integer tail, which dominates the prime tail).
    pub tail_bound: f64,
    /// Prime-density estimate of the discarded tail, E1((sigma-1) ln X).
    pub tail_estimate: f64,
}

/// Truncated complex sums over primes / all naturals / non-primes at one
/// shared cutoff. omega + lambda = zeta termwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTriplet {
    pub omega: Complex64,
    pub zeta: Complex64,
    pub lambda: Complex64,
    pub cutoff: u64,
}

/// Partial Basel sum and the coefficient-contrast figures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselCheck {
    pub n_terms: u64,
    /// sum of 1/k^2 for k <= n.
    pub partial: f64,
    /// 1/3! = 1/6.
    pub coeff_lhs: f64,
    /// sum of 1/(k pi)^2 for k <= n.
    pub coeff_rhs_partial: f64,
}

/// Running partial sums of sum_p p^(-1/2) cos(t ln p) at logarithmically
/// spaced cutoffs.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeCosineSum {
    pub sum: f64,
    pub trace: Vec<(u64, f64)>,
}

fn require_convergent(sigma: f64) -> Result<()> {
    if sigma <= 1.0 {
        return Err(Error::Divergence { sigma });
    }
    Ok(())
}

fn primes_up_to(sieve: &Sieve, limit: u64) -> Result<&[u64]> {
    if limit > sieve.limit() {
        return Err(Error::Range {
            lo: 2,
            hi: limit,
            limit: sieve.limit(),
        });
    }
    let cut = sieve.primes().partition_point(|&p| p <= limit);
    Ok(&sieve.primes()[..cut])
}

/// Exponential integral E1(x) for x > 0. Power series below 1, modified
/// Lentz continued fraction above.
pub fn exp_integral_e1(x: f64) -> f64 {
    assert!(x > 0.0, "E1 requires x > 0");
    if x <= 1.0 {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)
        const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..64 {
            let kf = k as f64;
            term *= -x / kf;
            let add = -term / kf;
            sum += add;
            if add.abs() < 1e-18 * sum.abs().max(1e-300) {
                break;
            }
        }
        -EULER_GAMMA - x.ln() + sum
    } else {
        // e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..200u32 {
            let a = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        h * (-x).exp()
    }
}

/// Truncated real-axis zeta with integral tail correction.
pub fn zeta_real_partial(sigma: f64, spec: &TruncationSpec) -> Result<f64> {
    require_convergent(sigma)?;
    spec.validate()?;
    let x = spec.term_limit;
    let xf = x as f64;
    let body = sum_indexed(1, x, |n| (n as f64).powf(-sigma));
    Ok(body + xf.powf(1.0 - sigma) / (sigma - 1.0) + xf.powf(-sigma) / 2.0)
}

/// Raw truncated prime zeta with reported tail figures.
pub fn prime_zeta_partial(
    sigma: f64,
    spec: &TruncationSpec,
    sieve: &Sieve,
) -> Result<PrimeZetaPartial> {
    require_convergent(sigma)?;
    spec.validate()?;
    if spec.term_limit < 2 {
        return Err(Error::Domain(
            "prime sums need term_limit >= 2 (no primes below 2)".into(),
        ));
    }
    let primes = primes_up_to(sieve, spec.term_limit)?;
    let sum = sum_indexed(0, primes.len() as u64 - 1, |i| {
        (primes[i as usize] as f64).powf(-sigma)
    });
    let xf = spec.term_limit as f64;
    Ok(PrimeZetaPartial {
        sum,
        tail_bound: xf.powf(1.0 - sigma) / (sigma - 1.0),
        tail_estimate: exp_integral_e1((sigma - 1.0) * xf.ln()),
    })
}

/// Truncated Euler product over primes p <= X; converges to zeta(sigma) from
/// below. Single sequential pass for a deterministic factor order.
pub fn euler_product_partial(sigma: f64, spec: &TruncationSpec, sieve: &Sieve) -> Result<f64> {
    require_convergent(sigma)?;
    spec.validate()?;
    let primes = primes_up_to(sieve, spec.term_limit)?;
    let mut prod = 1.0;
    for &p in primes {
        prod /= 1.0 - (p as f64).powf(-sigma);
    }
    Ok(prod)
}

/// log zeta(sigma) via the prime-power expansion
/// sum_{mu} (1/mu) sum_p p^(-mu sigma), each prime sum tail-estimated.
pub fn log_zeta_prime_expansion(sigma: f64, spec: &TruncationSpec, sieve: &Sieve) -> Result<f64> {
    require_convergent(sigma)?;
    spec.validate()?;
    let mut acc = 0.0;
    for mu in 1..=spec.mu_max {
        let pz = prime_zeta_partial(mu as f64 * sigma, spec, sieve)?;
        acc += (pz.sum + pz.tail_estimate) / mu as f64;
    }
    Ok(acc)
}

/// log zeta(sigma) via the alternating Mercator series in (zeta - 1).
pub fn log_zeta_mercator(sigma: f64, spec: &TruncationSpec) -> Result<f64> {
    let z = zeta_real_partial(sigma, spec)? - 1.0;
    if z.abs() >= 1.0 {
        return Err(Error::ConvergenceRadius { magnitude: z.abs() });
    }
    let mut acc = 0.0;
    let mut power = 1.0;
    for k in 1..=spec.mercator_order {
        power *= z;
        let term = power / k as f64;
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Residual of the claimed identity sum_p p^(-mu sigma) = -(1 - zeta)^mu:
/// returns LHS + (1 - zeta(sigma))^mu with a raw prime sum. For mu = 1 this
/// is simultaneously sum_p p^(-sigma) - (zeta(sigma) - 1). Nonzero values
/// are the finding, not an error.
pub fn power_identity_residual(
    sigma: f64,
    mu: u32,
    spec: &TruncationSpec,
    sieve: &Sieve,
) -> Result<f64> {
    if mu == 0 {
        return Err(Error::Domain("power order mu must be >= 1".into()));
    }
    let lhs = prime_zeta_partial(mu as f64 * sigma, spec, sieve)?.sum;
    let zeta = zeta_real_partial(sigma, spec)?;
    Ok(lhs + (1.0 - zeta).powi(mu as i32))
}

/// sum_p p^(-1/2) cos(t ln p) over p <= X, with running partials recorded at
/// powers of ten and at the cutoff itself.
pub fn prime_cosine_sum(t: f64, spec: &TruncationSpec, sieve: &Sieve) -> Result<PrimeCosineSum> {
    spec.validate()?;
    let primes = primes_up_to(sieve, spec.term_limit)?;
    let mut marks: Vec<u64> = std::iter::successors(Some(10u64), |&c| c.checked_mul(10))
        .take_while(|&c| c < spec.term_limit)
        .collect();
    marks.push(spec.term_limit);

    let mut trace = Vec::with_capacity(marks.len());
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut mark_iter = marks.iter().copied().peekable();
    for &p in primes {
        while mark_iter.peek().is_some_and(|&m| p > m) {
            trace.push((mark_iter.next().unwrap(), sum + comp));
        }
        let pf = p as f64;
        let v = pf.sqrt().recip() * (t * pf.ln()).cos();
        let fresh = sum + v;
        comp += if sum.abs() >= v.abs() {
            (sum - fresh) + v
        } else {
            (v - fresh) + sum
        };
        sum = fresh;
    }
    let total = sum + comp;
    for m in mark_iter {
        trace.push((m, total));
    }
    Ok(PrimeCosineSum { sum: total, trace })
}

/// Raw truncated complex sums over primes, all naturals and non-primes at a
/// shared cutoff. The three sums are accumulated independently; the exact
/// partition omega + lambda = zeta is a checkable property, not an identity
/// wired into the computation.
pub fn series_triplet(s: Complex64, cutoff: u64, sieve: &Sieve) -> Result<SeriesTriplet> {
    if cutoff == 0 {
        return Err(Error::Domain("cutoff must be >= 1".into()));
    }
    if cutoff > sieve.limit() {
        return Err(Error::Range {
            lo: 1,
            hi: cutoff,
            limit: sieve.limit(),
        });
    }
    let term = |n: u64| (-s * (n as f64).ln()).exp();
    let zero = Complex64::new(0.0, 0.0);
    let omega = sum_indexed_complex(1, cutoff, |n| {
        if n > 1 && sieve.is_prime(n) {
            term(n)
        } else {
            zero
        }
    });
    let lambda = sum_indexed_complex(1, cutoff, |n| {
        if n == 1 || !sieve.is_prime(n) {
            term(n)
        } else {
            zero
        }
    });
    let zeta = sum_indexed_complex(1, cutoff, term);
    Ok(SeriesTriplet {
        omega,
        zeta,
        lambda,
        cutoff,
    })
}

/// Partial Basel sum and Euler's coefficient contrast: 1/3! against
/// sum 1/(k pi)^2.
pub fn basel_partial(n_terms: u64) -> Result<BaselCheck> {
    if n_terms == 0 {
        return Err(Error::Domain("basel partial requires n >= 1".into()));
    }
    let partial = sum_indexed(1, n_terms, |k| {
        let kf = k as f64;
        1.0 / (kf * kf)
    });
    let coeff_rhs_partial = sum_indexed(1, n_terms, |k| {
        let kp = k as f64 * PI;
        1.0 / (kp * kp)
    });
    Ok(BaselCheck {
        n_terms,
        partial,
        coeff_lhs: 1.0 / 6.0,
        coeff_rhs_partial,
    })
}

/// Partial sine product prod_{k<=K} (1 - x^2/(k pi)^2); converges to
/// sin(x)/x with O(1/K) error.
pub fn sin_product_partial(x: f64, k_factors: u64) -> Result<f64> {
    if k_factors == 0 {
        return Err(Error::Domain("sine product requires K >= 1".into()));
    }
    let x2 = x * x;
    let mut prod = 1.0;
    for k in 1..=k_factors {
        let kp = k as f64 * PI;
        prod *= 1.0 - x2 / (kp * kp);
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn sieve() -> Sieve {
        Sieve::new(1_000_000).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol,
            "{a} vs {b} (|d| = {:.3e})",
            (a - b).abs()
        );
    }

    #[test]
    fn e1_reference_points() {
        close(exp_integral_e1(1.0), 0.21938393439552027, 1e-15);
        close(exp_integral_e1(10.0), 4.156_968_929_685_325e-6, 1e-18);
        close(exp_integral_e1(13.8155), 6.777_319_978_155_99e-8, 1e-19);
        close(exp_integral_e1(0.1), 1.8229239584193906, 1e-13);
    }

    #[test]
    fn zeta_partial_reference_values() {
        let spec = TruncationSpec::default();
        let z2 = zeta_real_partial(2.0, &spec).unwrap();
        close(z2, 1.6449340668492264, 1e-13);
        close(z2, PI * PI / 6.0, 1e-7);
        close(
            zeta_real_partial(4.0, &spec).unwrap(),
            PI.powi(4) / 90.0,
            1e-9,
        );
        let z50 = zeta_real_partial(50.0, &spec).unwrap();
        close(z50, 1.0 + 2f64.powi(-50), 5e-16);
        // stated accuracy boundary: within 1e-8 already at X = 1e4
        let coarse = TruncationSpec {
            term_limit: 10_000,
            ..spec
        };
        close(
            zeta_real_partial(2.0, &coarse).unwrap(),
            PI * PI / 6.0,
            1e-8,
        );
    }

    #[test]
    fn zeta_partial_rejects_divergent_sigma() {
        let spec = TruncationSpec::default();
        assert!(matches!(
            zeta_real_partial(1.0, &spec),
            Err(Error::Divergence { .. })
        ));
        assert!(zeta_real_partial(0.5, &spec).is_err());
    }

    #[test]
    fn prime_sums_need_at_least_one_prime() {
        let sv = Sieve::new(100).unwrap();
        let one = TruncationSpec {
            term_limit: 1,
            ..TruncationSpec::default()
        };
        assert!(matches!(
            prime_zeta_partial(2.0, &one, &sv),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn prime_zeta_values_and_tail() {
        let sv = sieve();
        let spec = TruncationSpec::default();
        let p2 = prime_zeta_partial(2.0, &spec, &sv).unwrap();
        close(p2.sum, 0.452_247_352_265_374_1, 1e-12);
        close(p2.sum, 0.4522474, 1e-6);
        // true tail is 6.78e-8; the bound must cover it without being wild
        assert!(p2.tail_bound >= 6.7e-8 && p2.tail_bound <= 1.1e-6);
        close(p2.tail_estimate, 6.777_243_556_629_622e-8, 1e-13);

        let p4 = prime_zeta_partial(4.0, &spec, &sv).unwrap();
        close(p4.sum, 0.076_993_139_764_246_85, 1e-12);

        let tiny = TruncationSpec {
            term_limit: 5,
            ..TruncationSpec::default()
        };
        close(
            prime_zeta_partial(2.0, &tiny, &sv).unwrap().sum,
            0.25 + 1.0 / 9.0 + 0.04,
            1e-15,
        );
    }

    #[test]
    fn euler_product_tracks_zeta() {
        let sv = sieve();
        let spec = TruncationSpec::default();
        let prod2 = euler_product_partial(2.0, &spec, &sv).unwrap();
        close(prod2, 1.6449339553616866, 2e-12);
        let z2 = zeta_real_partial(2.0, &spec).unwrap();
        assert!((prod2 - z2).abs() <= 1e-6);
        assert!(prod2 < z2, "product approaches zeta from below");
        close(
            euler_product_partial(3.0, &spec, &sv).unwrap(),
            1.2020569031595943,
            1e-6,
        );
        let two = TruncationSpec {
            term_limit: 2,
            ..TruncationSpec::default()
        };
        close(
            euler_product_partial(2.0, &two, &sv).unwrap(),
            4.0 / 3.0,
            1e-15,
        );
    }

    #[test]
    fn prime_power_expansion_is_a_true_identity() {
        let sv = sieve();
        let spec = TruncationSpec::default();
        for sigma in [2.0, 3.0, 4.0] {
            let lhs = log_zeta_prime_expansion(sigma, &spec, &sv).unwrap();
            let rhs = zeta_real_partial(sigma, &spec).unwrap().ln();
            close(lhs, rhs, 1e-8);
        }
        close(
            log_zeta_prime_expansion(2.0, &spec, &sv).unwrap(),
            0.497_700_302_467_475_3,
            1e-12,
        );
        // first term alone reproduces the (tail-estimated) prime zeta
        let one = TruncationSpec {
            mu_max: 1,
            ..TruncationSpec::default()
        };
        close(
            log_zeta_prime_expansion(2.0, &one, &sv).unwrap(),
            0.4522474200410655,
            1e-7,
        );
        let lhs10 = log_zeta_prime_expansion(10.0, &spec, &sv).unwrap();
        close(lhs10, zeta_real_partial(10.0, &spec).unwrap().ln(), 1e-10);
    }

    #[test]
    fn mercator_expansion_is_a_true_identity() {
        let spec = TruncationSpec::default();
        for sigma in [2.0, 3.0, 4.0] {
            let lhs = log_zeta_mercator(sigma, &spec).unwrap();
            close(lhs, zeta_real_partial(sigma, &spec).unwrap().ln(), 1e-8);
        }
        let one = TruncationSpec {
            mercator_order: 1,
            ..TruncationSpec::default()
        };
        close(
            log_zeta_mercator(2.0, &one).unwrap(),
            0.6449340668492264,
            1e-12,
        );
        assert!(matches!(
            log_zeta_mercator(1.2, &TruncationSpec::default()),
            Err(Error::ConvergenceRadius { .. })
        ));
    }

    #[test]
    fn power_identity_residuals_do_not_vanish() {
        let sv = sieve();
        let spec = TruncationSpec::default();
        let r1 = power_identity_residual(2.0, 1, &spec, &sv).unwrap();
        close(r1, -0.192_686_714_583_852_3, 1e-9);
        assert!(r1.abs() > 0.19);
        let r2 = power_identity_residual(2.0, 2, &spec, &sv).unwrap();
        close(r2, 0.49293309034692932, 1e-9);
        assert!(r2.abs() > 0.3);
        // stability across truncation levels
        let lower = TruncationSpec {
            term_limit: 100_000,
            ..TruncationSpec::default()
        };
        let r1_lo = power_identity_residual(2.0, 1, &lower, &sv).unwrap();
        assert!((r1 - r1_lo).abs() < 1e-5);
        // both sides vanish for large sigma
        let r50 = power_identity_residual(50.0, 1, &spec, &sv).unwrap();
        assert!(r50.abs() < 1e-12);
    }

    #[test]
    fn prime_cosine_control_values() {
        let sv = sieve();
        let hundred = TruncationSpec {
            term_limit: 100,
            ..TruncationSpec::default()
        };
        let c = prime_cosine_sum(0.0, &hundred, &sv).unwrap();
        close(c.sum, 5.536_481_852_598_516, 1e-10);
        close(c.sum, 5.5365, 1e-3);
        assert_eq!(c.trace.last().unwrap().0, 100);
        close(c.trace.last().unwrap().1, c.sum, 0.0);
        let two = TruncationSpec {
            term_limit: 2,
            ..TruncationSpec::default()
        };
        close(
            prime_cosine_sum(0.0, &two, &sv).unwrap().sum,
            std::f64::consts::FRAC_1_SQRT_2,
            1e-15,
        );
    }

    #[test]
    fn prime_cosine_trace_is_deterministic() {
        let sv = sieve();
        let spec = TruncationSpec {
            term_limit: 7919,
            ..TruncationSpec::default()
        };
        let a = prime_cosine_sum(14.134725, &spec, &sv).unwrap();
        let b = prime_cosine_sum(14.134725, &spec, &sv).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.trace.len(), 4); // 10, 100, 1000, 7919
        let cutoffs: Vec<u64> = a.trace.iter().map(|&(c, _)| c).collect();
        assert_eq!(cutoffs, [10, 100, 1000, 7919]);
    }

    #[test]
    fn triplet_partition_holds() {
        let sv = sieve();
        let t = series_triplet(Complex64::new(2.0, 0.0), 1_000_000, &sv).unwrap();
        close(t.omega.re, 0.452_247_352_265_374_1, 1e-12);
        close(t.zeta.re, 1.6449330668487264, 1e-12);
        close(t.lambda.re, 1.1926857145833523, 1e-12);
        let gap = (t.omega + t.lambda - t.zeta).norm();
        assert!(gap <= 1e-12 * t.zeta.norm());

        let one = series_triplet(Complex64::new(0.7, 3.3), 1, &sv).unwrap();
        assert_eq!(one.omega, Complex64::new(0.0, 0.0));
        assert_eq!(one.zeta, Complex64::new(1.0, 0.0));
        assert_eq!(one.lambda, Complex64::new(1.0, 0.0));

        let s = Complex64::new(0.5, 14.134725);
        let t = series_triplet(s, 7919, &sv).unwrap();
        let gap = (t.omega + t.lambda - t.zeta).norm();
        assert!(gap <= 1e-12 * t.zeta.norm());
    }

    #[test]
    fn basel_partials() {
        let b3 = basel_partial(3).unwrap();
        close(b3.partial, 49.0 / 36.0, 1e-15);
        let b1000 = basel_partial(1000).unwrap();
        close(b1000.partial, 1.643_934_566_681_56, 1e-13);
        close(b1000.coeff_rhs_partial, 0.166_565_396_126_729_3, 1e-13);
        close(b1000.coeff_rhs_partial, b1000.partial / (PI * PI), 1e-15);
        assert!((b1000.coeff_rhs_partial - b1000.coeff_lhs).abs() <= 2e-4);
        let b = basel_partial(1_000_000).unwrap();
        assert!((b.partial - PI * PI / 6.0).abs() <= 1e-6);
    }

    #[test]
    fn sine_product_convergence() {
        assert_eq!(sin_product_partial(0.0, 17).unwrap(), 1.0);
        assert_eq!(sin_product_partial(PI, 5).unwrap(), 0.0);
        let v = sin_product_partial(FRAC_PI_2, 10_000).unwrap();
        close(v, 0.636_635_687_265_074_5, 1e-11);
        let target = 2.0 / PI;
        assert!((v - target).abs() <= 1e-4);
        let err1 = (v - target).abs();
        let err2 = (sin_product_partial(FRAC_PI_2, 20_000).unwrap() - target).abs();
        let ratio = err1 / err2;
        assert!((1.8..=2.2).contains(&ratio), "ratio {ratio}");
    }
}
