//! Compensated summation and the deterministic parallel reduction used by
//! every quadrature and sum in this crate.

use crate::scalar::Scalar;
use rayon::prelude::*;

/// Kahan accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum<S: Scalar> {
    sum: S,
    compensation: S,
}

impl<S: Scalar> KahanSum<S> {
    pub fn new() -> Self {
        Self { sum: S::ZERO, compensation: S::ZERO }
    }

    #[inline]
    pub fn add(&mut self, value: S) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> S {
        self.sum
    }

    pub fn sum_iter<I: IntoIterator<Item = S>>(iter: I) -> S {
        let mut k = Self::new();
        for v in iter {
            k.add(v);
        }
        k.value()
    }
}

/// Fixed chunk length for the parallel reduction. Results are bit-identical
/// for any worker count because chunk boundaries depend only on the input
/// length and chunks are combined in index order.
pub const REDUCTION_CHUNK: usize = 1024;

/// Maps `f` over `0..n` in parallel and sums the results reproducibly:
/// each fixed-size chunk is Kahan-summed sequentially, then the per-chunk
/// partial sums are Kahan-combined in chunk order on one thread.
pub fn chunked_sum<S, F>(n: usize, f: F) -> S
where
    S: Scalar,
    F: Fn(usize) -> S + Sync + Send,
{
    let chunks: Vec<S> = (0..n.div_ceil(REDUCTION_CHUNK))
        .into_par_iter()
        .map(|c| {
            let lo = c * REDUCTION_CHUNK;
            let hi = ((c + 1) * REDUCTION_CHUNK).min(n);
            let mut k = KahanSum::new();
            for i in lo..hi {
                k.add(f(i));
            }
            k.value()
        })
        .collect();
    KahanSum::sum_iter(chunks)
}

/// Same reduction for complex terms (real and imaginary parts compensated
/// independently).
pub fn chunked_sum_complex<F>(n: usize, f: F) -> num_complex::Complex<f64>
where
    F: Fn(usize) -> num_complex::Complex<f64> + Sync + Send,
{
    let chunks: Vec<(f64, f64)> = (0..n.div_ceil(REDUCTION_CHUNK))
        .into_par_iter()
        .map(|c| {
            let lo = c * REDUCTION_CHUNK;
            let hi = ((c + 1) * REDUCTION_CHUNK).min(n);
            let mut re = KahanSum::new();
            let mut im = KahanSum::new();
            for i in lo..hi {
                let z = f(i);
                re.add(z.re);
                im.add(z.im);
            }
            (re.value(), im.value())
        })
        .collect();
    let mut re = KahanSum::new();
    let mut im = KahanSum::new();
    for (r, i) in chunks {
        re.add(r);
        im.add(i);
    }
    num_complex::Complex::new(re.value(), im.value())
}
