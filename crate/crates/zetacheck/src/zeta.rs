//! Independent numerical evaluation of zeta on and near the critical line,
//! and location of its nontrivial zeros.
//!
//! Two methods are implemented and cross-checked against each other:
//!
//! * [`zeta_eta`] — the alternating series sum (-1)^(n-1) n^(-s) accelerated
//!   with Chebyshev-derived binomial weights (Borwein's algorithm), divided
//!   by (1 - 2^(1-s)). The remainder shrinks like (3 + sqrt(8))^(-n), with
//!   an e^(pi |t| / 2) growth factor that the term-count policy
//!   [`default_eta_terms`] keeps ahead of.
//! * [`zeta_em`] — Euler-Maclaurin: a direct sum below the cutoff, the
//!   integral and half-term corrections, and even-order Bernoulli terms.
//!
//! Zero location scans the real signal Re(e^(i theta(t)) zeta(1/2 + it))
//! for sign changes; theta uses the Stirling asymptotic, whose error is far
//! below pi/2 for t >= 1, so bracket signs are trustworthy even where the
//! rotation is slightly off.

use crate::sum::sum_indexed_complex;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Which evaluation path produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    EtaAccelerated,
    EulerMaclaurin,
}

/// A zeta evaluation with an honest error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub s: Complex64,
    pub value: Complex64,
    pub method: Method,
    pub est_error: f64,
}

/// A refined sign-change bracket on the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroBracket {
    pub t_lo: f64,
    pub t_hi: f64,
    pub refined_t: f64,
    /// |zeta(1/2 + i refined_t)| after refinement.
    pub residual: f64,
}

/// Zero scan output: the refined brackets in increasing t order plus a
/// completeness heuristic.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroScan {
    pub zeros: Vec<ZeroBracket>,
    /// Main-term density estimate theta(t_max)/pi + 1 of how many zeros the
    /// scan range should contain.
    pub expected_count: f64,
    pub completeness_warning: Option<String>,
}

/// Acceleration term count that keeps the eta remainder below 1e-9 through
/// |t| around 60: max(64, ceil(3 |t|) + 32).
pub fn default_eta_terms(t_abs: f64) -> usize {
    64.max((3.0 * t_abs).ceil() as usize + 32)
}

// d_n grows like (3 + sqrt 8)^n; past ~400 terms it overflows f64.
const ETA_TERMS_CAP: usize = 380;

fn check_not_pole(s: Complex64) -> Result<()> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole);
    }
    Ok(())
}

/// Accelerated alternating-series evaluation, valid for Re(s) > 0.
pub fn zeta_eta(s: Complex64, n_terms: usize) -> Result<EvalResult> {
    check_not_pole(s)?;
    if s.re <= 0.0 {
        return Err(Error::UnsupportedSigma { sigma: s.re });
    }
    if n_terms < 16 {
        return Err(Error::Domain(format!(
            "eta acceleration needs at least 16 terms, got {n_terms}"
        )));
    }
    let n = n_terms.min(ETA_TERMS_CAP);

    // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built by recurrence
    let nf = n as f64;
    let mut term = 1.0 / nf;
    let mut running = term;
    let mut d = Vec::with_capacity(n + 1);
    d.push(nf * running);
    for i in 1..=n {
        let i_f = i as f64;
        term *= 4.0 * (nf + i_f - 1.0) * (nf - i_f + 1.0) / ((2.0 * i_f - 1.0) * (2.0 * i_f));
        running += term;
        d.push(nf * running);
    }
    let d_n = d[n];

    let mut sum = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for (k, d_k) in d.iter().take(n).enumerate() {
        sum += sign * (d_k - d_n) * (-s * ((k + 1) as f64).ln()).exp();
        sign = -sign;
    }
    let eta = -sum / d_n;
    let denom = Complex64::new(1.0, 0.0) - ((1.0 - s) * std::f64::consts::LN_2).exp();

    let t_abs = s.im.abs();
    let value = eta / denom;
    // remainder bound for the eta series, a roundoff floor, and the
    // cancellation error of the denominator itself (absolute ~eps, so
    // relative eps/|denom|, felt by the quotient scaled with |value|)
    let bound =
        3.0 * (1.0 + 2.0 * t_abs) * (PI * t_abs / 2.0 - nf * (3f64 + 8f64.sqrt()).ln()).exp();
    let est_error = (bound + 1e-13 * (1.0 + eta.norm())) / denom.norm()
        + value.norm() * 4.0 * f64::EPSILON / denom.norm();
    Ok(EvalResult {
        s,
        value,
        method: Method::EtaAccelerated,
        est_error,
    })
}

/// B_{2k} / (2k)! for 2k = 2, 4, ..., 14.
const B2K_OVER_FACT: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
];

/// Euler-Maclaurin evaluation with `cutoff` directly summed terms and
/// Bernoulli corrections up to order `bernoulli_order` (even, 2..=12).
pub fn zeta_em(s: Complex64, cutoff: usize, bernoulli_order: usize) -> Result<EvalResult> {
    check_not_pole(s)?;
    if !(2..=12).contains(&bernoulli_order) || !bernoulli_order.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "bernoulli order must be even and within 2..=12, got {bernoulli_order}"
        )));
    }
    let t_abs = s.im.abs();
    if (cutoff as f64) <= t_abs / 2.0 + 10.0 {
        return Err(Error::AccuracyCutoff { cutoff, t_abs });
    }
    let nf = cutoff as f64;

    let body = sum_indexed_complex(1, cutoff as u64 - 1, |n| (-s * (n as f64).ln()).exp());
    let mut total = body + ((1.0 - s) * nf.ln()).exp() / (s - 1.0) + (-s * nf.ln()).exp() / 2.0;

    let mut poch = s; // s (s+1) ... (s + 2k - 2)
    let mut npow = ((-s - 1.0) * nf.ln()).exp();
    for k in 1..=bernoulli_order / 2 {
        total += B2K_OVER_FACT[k - 1] * poch * npow;
        poch *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        npow /= nf * nf;
    }
    let omitted = B2K_OVER_FACT[bernoulli_order / 2] * poch * npow;
    // remainder bound: first omitted term times |s + 2K + 1| / (sigma + 2K + 1)
    let shift = (bernoulli_order + 1) as f64;
    let remainder = omitted.norm() * (s + shift).norm() / (s.re + shift);

    // magnitude of everything summed, for the roundoff floor
    let abs_mass = if s.re == 1.0 {
        1.0 + nf.ln()
    } else {
        1.0 + (nf.powf(1.0 - s.re) - 1.0) / (1.0 - s.re)
    };
    let est_error = remainder + 8.0 * f64::EPSILON * abs_mass.abs();
    Ok(EvalResult {
        s,
        value: total,
        method: Method::EulerMaclaurin,
        est_error,
    })
}

/// Euler-Maclaurin parameters adequate for residual checks along the scan
/// range: cutoff max(50, ceil(2.5 |t|) + 20), order 8.
pub fn default_em_params(t_abs: f64) -> (usize, usize) {
    (50.max((2.5 * t_abs).ceil() as usize + 20), 8)
}

/// Stirling asymptotic for the phase theta(t); adequate above t = 1 and far
/// inside +-pi/2 everywhere the scan looks.
pub fn theta(t: f64) -> Result<f64> {
    if t <= 0.0 {
        return Err(Error::Domain(format!("theta requires t > 0, got {t}")));
    }
    Ok(t / 2.0 * (t / (2.0 * PI)).ln() - t / 2.0 - PI / 8.0 + 1.0 / (48.0 * t))
}

/// Hardy-style real signal Re(e^(i theta(t)) zeta(1/2 + it)).
pub fn hardy_z(t: f64) -> Result<f64> {
    let z = zeta_eta(Complex64::new(0.5, t), default_eta_terms(t.abs()))?;
    let phase = Complex64::new(0.0, theta(t)?).exp();
    Ok((phase * z.value).re)
}

const SCAN_START: f64 = 1.0;

/// Scan (0, t_max] for critical-line zeros: grid the Hardy signal, bisect
/// each sign change, then polish with secant steps. Returns zeros in
/// increasing order plus a density-based completeness check.
pub fn locate_zeros(t_max: f64, scan_step: f64, tol: f64) -> Result<ZeroScan> {
    if !(scan_step > 0.0 && scan_step <= 0.5) {
        return Err(Error::Domain(format!(
            "scan step must be in (0, 0.5], got {scan_step}"
        )));
    }
    if tol < 1e-12 {
        return Err(Error::Domain(format!(
            "refinement tolerance must be >= 1e-12, got {tol}"
        )));
    }
    if t_max <= 0.0 {
        return Err(Error::Domain(format!(
            "t_max must be positive, got {t_max}"
        )));
    }

    let mut zeros = Vec::new();
    if t_max > SCAN_START {
        let steps = ((t_max - SCAN_START) / scan_step).ceil() as u64;
        let grid: Vec<f64> = (0..=steps)
            .map(|i| (SCAN_START + i as f64 * scan_step).min(t_max))
            .collect();
        let values = eval_grid(&grid)?;
        for i in 0..steps as usize {
            if values[i] * values[i + 1] < 0.0 {
                zeros.push(refine_bracket(grid[i], grid[i + 1], values[i], tol)?);
            }
        }
    }

    let expected_count = if t_max >= 2.0 * PI {
        theta(t_max)? / PI + 1.0
    } else {
        0.0
    };
    let completeness_warning = if expected_count - zeros.len() as f64 > 0.75 {
        Some(format!(
            "density estimate expects about {expected_count:.2} zeros below {t_max} but the scan found {}; \
             a smaller scan step may separate merged brackets",
            zeros.len()
        ))
    } else {
        None
    };
    Ok(ZeroScan {
        zeros,
        expected_count,
        completeness_warning,
    })
}

#[cfg(feature = "parallel")]
fn eval_grid(grid: &[f64]) -> Result<Vec<f64>> {
    use rayon::prelude::*;
    grid.par_iter().map(|&t| hardy_z(t)).collect()
}

#[cfg(not(feature = "parallel"))]
fn eval_grid(grid: &[f64]) -> Result<Vec<f64>> {
    grid.iter().map(|&t| hardy_z(t)).collect()
}

fn refine_bracket(t_lo: f64, t_hi: f64, z_lo: f64, tol: f64) -> Result<ZeroBracket> {
    let (mut lo, mut hi) = (t_lo, t_hi);
    let mut f_lo = z_lo;
    let mut mid = 0.5 * (lo + hi);
    while hi - lo > tol {
        mid = 0.5 * (lo + hi);
        let f_mid = hardy_z(mid)?;
        if f_mid == 0.0 {
            break;
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }

    // a few secant steps sharpen the bisection result well below tol
    let mut a = lo;
    let mut fa = hardy_z(a)?;
    let mut b = mid.clamp(lo, hi);
    if b == a {
        b = hi;
    }
    let mut fb = hardy_z(b)?;
    for _ in 0..3 {
        let denom = fb - fa;
        if denom == 0.0 {
            break;
        }
        let c = b - fb * (b - a) / denom;
        if !c.is_finite() || c <= t_lo || c >= t_hi {
            break;
        }
        a = b;
        fa = fb;
        b = c;
        fb = hardy_z(b)?;
    }
    let refined_t = b;
    let residual = zeta_eta(Complex64::new(0.5, refined_t), default_eta_terms(refined_t))?
        .value
        .norm();
    Ok(ZeroBracket {
        t_lo,
        t_hi,
        refined_t,
        residual,
    })
}

/// Raw truncated Dirichlet sum, exposed for sanity tests of the evaluators.
pub fn dirichlet_partial(s: Complex64, cutoff: u64) -> Complex64 {
    sum_indexed_complex(1, cutoff, |n| (-s * (n as f64).ln()).exp())
}
