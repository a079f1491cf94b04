//! Deterministic block-pairwise summation.
//!
//! Terms are grouped into fixed blocks of 4096 consecutive indices; each
//! block is summed sequentially with Neumaier compensation and the block
//! partials are combined by a pairwise tree in index order. The parallel
//! path distributes whole blocks over rayon and collects the partials back
//! in order, so the sequential and parallel results are bit-identical and
//! reruns are byte-reproducible.

use num_complex::Complex64;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Block width for the pairwise reduction. Fixed so that the reduction tree
/// does not depend on thread count.
pub const BLOCK_SIZE: u64 = 4096;

#[derive(Clone, Copy, Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    #[inline]
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    fn value(self) -> f64 {
        self.sum + self.comp
    }
}

#[inline]
fn block_partial<F: Fn(u64) -> f64>(lo: u64, hi: u64, f: &F) -> f64 {
    let mut acc = Neumaier::default();
    for i in lo..=hi {
        acc.add(f(i));
    }
    acc.value()
}

#[inline]
fn block_partial_complex<F: Fn(u64) -> Complex64>(lo: u64, hi: u64, f: &F) -> Complex64 {
    let mut re = Neumaier::default();
    let mut im = Neumaier::default();
    for i in lo..=hi {
        let v = f(i);
        re.add(v.re);
        im.add(v.im);
    }
    Complex64::new(re.value(), im.value())
}

fn combine_pairwise(parts: &[f64]) -> f64 {
    match parts.len() {
        0 => 0.0,
        1 => parts[0],
        n => {
            let (a, b) = parts.split_at(n / 2);
            combine_pairwise(a) + combine_pairwise(b)
        }
    }
}

fn combine_pairwise_complex(parts: &[Complex64]) -> Complex64 {
    match parts.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => parts[0],
        n => {
            let (a, b) = parts.split_at(n / 2);
            combine_pairwise_complex(a) + combine_pairwise_complex(b)
        }
    }
}

fn blocks(lo: u64, hi: u64) -> impl Iterator<Item = (u64, u64)> {
    let mut start = lo;
    std::iter::from_fn(move || {
        if start > hi {
            return None;
        }
        let end = (start + BLOCK_SIZE - 1).min(hi);
        let b = (start, end);
        start = end + 1;
        Some(b)
    })
}

/// Sequential reference path: sum f(i) for i in lo..=hi.
pub fn sum_indexed_seq<F: Fn(u64) -> f64>(lo: u64, hi: u64, f: F) -> f64 {
    if lo > hi {
        return 0.0;
    }
    let parts: Vec<f64> = blocks(lo, hi)
        .map(|(a, b)| block_partial(a, b, &f))
        .collect();
    combine_pairwise(&parts)
}

/// Parallel path; identical block structure, partials collected in index
/// order before the pairwise combine.
#[cfg(feature = "parallel")]
pub fn sum_indexed_par<F: Fn(u64) -> f64 + Sync>(lo: u64, hi: u64, f: F) -> f64 {
    if lo > hi {
        return 0.0;
    }
    let spans: Vec<(u64, u64)> = blocks(lo, hi).collect();
    let parts: Vec<f64> = spans
        .par_iter()
        .map(|&(a, b)| block_partial(a, b, &f))
        .collect();
    combine_pairwise(&parts)
}

/// Sum f(i) for i in lo..=hi, parallel when the feature is enabled.
pub fn sum_indexed<F: Fn(u64) -> f64 + Sync>(lo: u64, hi: u64, f: F) -> f64 {
    #[cfg(feature = "parallel")]
    {
        sum_indexed_par(lo, hi, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sum_indexed_seq(lo, hi, f)
    }
}

pub fn sum_indexed_complex_seq<F: Fn(u64) -> Complex64>(lo: u64, hi: u64, f: F) -> Complex64 {
    if lo > hi {
        return Complex64::new(0.0, 0.0);
    }
    let parts: Vec<Complex64> = blocks(lo, hi)
        .map(|(a, b)| block_partial_complex(a, b, &f))
        .collect();
    combine_pairwise_complex(&parts)
}

#[cfg(feature = "parallel")]
pub fn sum_indexed_complex_par<F: Fn(u64) -> Complex64 + Sync>(
    lo: u64,
    hi: u64,
    f: F,
) -> Complex64 {
    if lo > hi {
        return Complex64::new(0.0, 0.0);
    }
    let spans: Vec<(u64, u64)> = blocks(lo, hi).collect();
    let parts: Vec<Complex64> = spans
        .par_iter()
        .map(|&(a, b)| block_partial_complex(a, b, &f))
        .collect();
    combine_pairwise_complex(&parts)
}

pub fn sum_indexed_complex<F: Fn(u64) -> Complex64 + Sync>(lo: u64, hi: u64, f: F) -> Complex64 {
    #[cfg(feature = "parallel")]
    {
        sum_indexed_complex_par(lo, hi, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sum_indexed_complex_seq(lo, hi, f)
    }
}
