//! Property tests for the structural invariants: partition exactness and
//! ordinal gaplessness, the relation round trip, band strictness, the
//! recurrence closure, emission round trips, and two-method zeta agreement
//! at randomized points.

use num_complex::Complex64;
use proptest::prelude::*;
use std::sync::OnceLock;
use zetacheck::primes::{is_prime_trial, Kind, Sieve};
use zetacheck::tables::{emit_table, generate_rows, parse_table, Format, Layout};
use zetacheck::tvalue::{
    recurrence_shift, relation_residual, t_band, t_nonprime, t_prime, Direction, RecurrenceQuery,
};
use zetacheck::zeta::{default_em_params, default_eta_terms, zeta_em, zeta_eta};

fn sieve() -> &'static Sieve {
    static SIEVE: OnceLock<Sieve> = OnceLock::new();
    SIEVE.get_or_init(|| Sieve::new(20_000).expect("sieve"))
}

proptest! {
    #[test]
    fn partition_and_classification(x in 1u64..=10_000) {
        let sv = sieve();
        let primes = sv.prime_pi(x).unwrap();
        let nonprimes = x - primes;
        let c = sv.classify_natural(x).unwrap();
        match c.kind {
            Kind::Prime => {
                prop_assert!(is_prime_trial(x));
                prop_assert_eq!(c.ordinal, primes);
            }
            Kind::NonPrime => {
                prop_assert!(!is_prime_trial(x));
                prop_assert_eq!(c.ordinal, nonprimes);
            }
        }
    }

    #[test]
    fn star_round_trip_and_band(m in 1u64..=1000) {
        let p = sieve().nth_prime(m).unwrap();
        let t = t_prime(m, p).unwrap().t;
        let scale = (m * (m + 1)) as f64;
        prop_assert!(relation_residual(m, p, t).unwrap().abs() <= 1e-9 * scale);
        let band = t_band(p).unwrap();
        prop_assert!(band.t0 < t && t < band.stationary);
    }

    #[test]
    fn nonprime_t_sits_below_t0(n in 2u64..=7919) {
        let sv = sieve();
        let c = sv.classify_natural(n).unwrap();
        if c.kind == Kind::NonPrime {
            let t = t_nonprime(c.ordinal, n).unwrap().t;
            let band = t_band(n).unwrap();
            prop_assert!(0.0 < t && t < band.t0);
        }
    }

    #[test]
    fn recurrence_closure(f_scale in 1e-6f64..1e6, k in 1u64..=1000) {
        let f = -f_scale;
        let fwd = recurrence_shift(RecurrenceQuery { f_start: f, k }, Direction::Forward).unwrap();
        let back = recurrence_shift(RecurrenceQuery { f_start: fwd, k }, Direction::Backward).unwrap();
        prop_assert!((back - f).abs() <= 1e-12 * f.abs().max(1.0));
    }

    #[test]
    fn emission_round_trips(start in 1u64..=1500, len in 1u64..=120, fmt in 0usize..3, layout in 0usize..2) {
        let format = [Format::Tsv, Format::Csv, Format::Markdown][fmt];
        let layout = [Layout::Mixed, Layout::PrimesOnly][layout];
        let rows = generate_rows(start, start + len, sieve()).unwrap();
        if layout == Layout::PrimesOnly && !rows.iter().any(|r| r.kind == Kind::Prime) {
            return Ok(()); // nothing to emit in this window
        }
        let doc = emit_table(&rows, format, layout).unwrap();
        let back = parse_table(&doc, format, layout).unwrap();
        let doc2 = emit_table(&back, format, layout).unwrap();
        prop_assert_eq!(doc, doc2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn two_methods_agree_within_estimates(sigma in 0.5f64..=3.0, t in -40.0f64..=40.0) {
        let s = Complex64::new(sigma, t);
        if s == Complex64::new(1.0, 0.0) {
            return Ok(());
        }
        let a = zeta_eta(s, default_eta_terms(t.abs())).unwrap();
        let (cutoff, order) = default_em_params(t.abs());
        let b = zeta_em(s, cutoff, order).unwrap();
        let gap = (a.value - b.value).norm();
        prop_assert!(
            gap <= a.est_error + b.est_error,
            "s = {}: gap {:.3e} > est {:.3e}",
            s, gap, a.est_error + b.est_error
        );
    }

    #[test]
    fn conjugate_symmetry(sigma in 0.5f64..=3.0, t in 0.1f64..=40.0) {
        let s = Complex64::new(sigma, t);
        let a = zeta_eta(s, default_eta_terms(t)).unwrap().value;
        let ac = zeta_eta(s.conj(), default_eta_terms(t)).unwrap().value;
        prop_assert!((ac - a.conj()).norm() <= 1e-12 * a.norm().max(1e-30));
        let (cutoff, order) = default_em_params(t);
        let b = zeta_em(s, cutoff, order).unwrap().value;
        let bc = zeta_em(s.conj(), cutoff, order).unwrap().value;
        prop_assert!((bc - b.conj()).norm() <= 1e-12 * b.norm().max(1e-30));
    }
}
