//! Deterministic prime sieving, prime/non-prime classification and ordinal
//! indexing. Non-primes include 1, so the non-prime sequence starts
//! 1, 4, 6, 8, 9, 10, 12, ...

use crate::{Error, Result};

/// Whether a natural number is prime or non-prime (1 counts as non-prime).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Prime,
    NonPrime,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Prime => write!(f, "prime"),
            Kind::NonPrime => write!(f, "nonprime"),
        }
    }
}

/// The m-th prime, 1-based: (1, 2), (2, 3), (3, 5), ...
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeEntry {
    pub m: u64,
    pub p: u64,
}

/// The eta-th non-prime, 1-based: (1, 1), (2, 4), (3, 6), ...
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositeEntry {
    pub eta: u64,
    pub c: u64,
}

/// A natural number together with its kind and 1-based ordinal within that
/// kind (m for primes, eta for non-primes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub n: u64,
    pub kind: Kind,
    pub ordinal: u64,
}

/// Immutable Eratosthenes sieve with a packed bit array and an index of all
/// primes up to the limit. Built once, then shared read-only; every query is
/// pure.
#[derive(Debug, Clone)]
pub struct Sieve {
    limit: u64,
    composite: Vec<u64>,
    primes: Vec<u64>,
}

impl Sieve {
    pub fn new(limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(Error::SieveLimit(limit));
        }
        let words = (limit as usize + 64) / 64;
        let mut composite = vec![0u64; words];
        let set = |bits: &mut [u64], i: usize| bits[i / 64] |= 1 << (i % 64);
        set(&mut composite, 0);
        set(&mut composite, 1);
        let mut i = 2usize;
        while i * i <= limit as usize {
            if composite[i / 64] & (1 << (i % 64)) == 0 {
                let mut j = i * i;
                while j <= limit as usize {
                    set(&mut composite, j);
                    j += i;
                }
            }
            i += 1;
        }
        let primes = (2..=limit)
            .filter(|&n| composite[n as usize / 64] & (1 << (n % 64)) == 0)
            .collect();
        Ok(Sieve {
            limit,
            composite,
            primes,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primality lookup; `n` must not exceed the sieve limit.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(
            n <= self.limit,
            "is_prime({n}) beyond sieve limit {}",
            self.limit
        );
        self.composite[n as usize / 64] & (1 << (n % 64)) == 0
    }

    /// All primes up to the limit, in increasing order.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// (ordinal, prime) pairs for every prime up to the limit.
    pub fn prime_entries(&self) -> Vec<PrimeEntry> {
        self.primes
            .iter()
            .enumerate()
            .map(|(i, &p)| PrimeEntry { m: i as u64 + 1, p })
            .collect()
    }

    /// (ordinal, value) pairs for the non-primes up to the limit, starting
    /// with (1, 1).
    pub fn nonprime_entries(&self) -> impl Iterator<Item = CompositeEntry> + '_ {
        (1..=self.limit)
            .filter(|&n| !self.is_prime(n))
            .enumerate()
            .map(|(i, c)| CompositeEntry {
                eta: i as u64 + 1,
                c,
            })
    }

    /// The m-th prime (1-based), if it is within the sieve.
    pub fn nth_prime(&self, m: u64) -> Option<u64> {
        if m == 0 {
            return None;
        }
        self.primes.get(m as usize - 1).copied()
    }

    /// pi(x): the number of primes <= x.
    pub fn prime_pi(&self, x: u64) -> Result<u64> {
        if x == 0 {
            return Err(Error::Domain("prime count requires x >= 1".into()));
        }
        if x > self.limit {
            return Err(Error::Range {
                lo: 1,
                hi: x,
                limit: self.limit,
            });
        }
        Ok(self.primes.partition_point(|&p| p <= x) as u64)
    }

    /// Kind and within-kind ordinal of `n`. The ordinal of n=1 is eta=1.
    pub fn classify_natural(&self, n: u64) -> Result<Classification> {
        if n == 0 {
            return Err(Error::Domain("classification requires n >= 1".into()));
        }
        if n > self.limit {
            return Err(Error::Range {
                lo: 1,
                hi: n,
                limit: self.limit,
            });
        }
        let pi = self.primes.partition_point(|&p| p <= n) as u64;
        if n > 1 && self.is_prime(n) {
            Ok(Classification {
                n,
                kind: Kind::Prime,
                ordinal: pi,
            })
        } else {
            Ok(Classification {
                n,
                kind: Kind::NonPrime,
                ordinal: n - pi,
            })
        }
    }
}

/// Trial-division primality, independent of any sieve. Used as a cross-check
/// oracle and for inputs that do not warrant building a sieve.
pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
