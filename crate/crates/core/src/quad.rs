//! Quadrature: Gauss-Legendre panels and adaptive Simpson, the two error
//! profiles used to cross-validate every integral in the crate.

use crate::kahan::{chunked_sum, KahanSum};
use crate::scalar::Scalar;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[-1, 1]`,
/// by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x)
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

static GL_CACHE: Lazy<Mutex<HashMap<usize, (Vec<f64>, Vec<f64>)>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn gl_cached(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut cache = GL_CACHE.lock().unwrap();
    cache.entry(n).or_insert_with(|| gauss_legendre(n)).clone()
}

/// Composite Gauss-Legendre integration of `f` over `[a, b]` with `panels`
/// equal panels of `order` points each. Deterministic parallel reduction.
pub fn integrate_gl<F>(f: F, a: f64, b: f64, panels: usize, order: usize) -> f64
where
    F: Fn(f64) -> f64 + Sync + Send,
{
    assert!(panels >= 1 && b >= a);
    let (nodes, weights) = gl_cached(order);
    let h = (b - a) / panels as f64;
    chunked_sum(panels, |p| {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut k = KahanSum::new();
        for (x, w) in nodes.iter().zip(weights.iter()) {
            k.add(w * f(mid + half * x));
        }
        k.value() * half
    })
}

/// Result of an adaptive Simpson pass.
#[derive(Clone, Copy, Debug)]
pub struct SimpsonResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

/// Adaptive Simpson on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> SimpsonResult
where
    F: Fn(f64) -> f64,
{
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        m: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
        evals: &mut u64,
        err: &mut f64,
    ) -> f64 {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        *evals += 2;
        let h = b - a;
        let left = h / 12.0 * (fa + 4.0 * flm + fm);
        let right = h / 12.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            *err += delta.abs() / 15.0;
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1, evals, err)
            + recurse(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1, evals, err)
    }

    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut evals = 3u64;
    let mut err = 0.0;
    let value = recurse(&f, a, fa, b, fb, m, fm, whole, tol, 40, &mut evals, &mut err);
    SimpsonResult { value, error_estimate: err, evaluations: evals }
}

/// Tensor-product average of `|g|` powers etc. is built in the callers; this
/// helper returns the panel-equal-weight average of `f` over `[a, b]` with a
/// uniform (periodic trapezoid) grid of `n` points, exact for trigonometric
/// polynomials of degree `< n` with period `b - a`.
pub fn periodic_average<S: Scalar, F>(f: F, a: S, b: S, n: usize) -> S
where
    F: Fn(S) -> S,
{
    let h = (b - a) / S::from_f64(n as f64);
    let mut k = KahanSum::new();
    for i in 0..n {
        k.add(f(a + h * S::from_f64(i as f64)));
    }
    k.value() / S::from_f64(n as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl8_matches_reference_nodes() {
        let (nodes, weights) = gauss_legendre(8);
        let ref_nodes = [
            -0.9602898564975362,
            -0.7966664774136267,
            -0.5255324099163290,
            -0.1834346424956498,
            0.1834346424956498,
            0.5255324099163290,
            0.7966664774136267,
            0.9602898564975362,
        ];
        let ref_weights = [
            0.1012285362903763,
            0.2223810344533745,
            0.3137066458778873,
            0.3626837833783620,
            0.3626837833783620,
            0.3137066458778873,
            0.2223810344533745,
            0.1012285362903763,
        ];
        for i in 0..8 {
            assert!((nodes[i] - ref_nodes[i]).abs() < 1e-14);
            assert!((weights[i] - ref_weights[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn gl_integrates_polynomials_exactly() {
        // degree 15 is exact for 8-point GL
        let f = |x: f64| 3.0 * x.powi(15) - x.powi(8) + 2.0 * x;
        let got = integrate_gl(f, -1.0, 1.0, 1, 8);
        let exact = -2.0 / 9.0;
        assert!((got - exact).abs() < 1e-14);
    }

    #[test]
    fn simpson_oscillatory() {
        let f = |x: f64| (10.0 * x).sin() * x;
        let r = adaptive_simpson(f, 0.0, 3.0, 1e-10);
        // integral of x sin(10x): sin(10x)/100 - x cos(10x)/10
        let exact = (30.0f64).sin() / 100.0 - 3.0 * (30.0f64).cos() / 10.0;
        assert!((r.value - exact).abs() < 1e-9);
    }

    #[test]
    fn periodic_average_exact_for_trig_polys() {
        let f = |x: f64| 1.5 + (2.0 * std::f64::consts::PI * 3.0 * x).cos();
        let avg = periodic_average(f, 0.0, 1.0, 16);
        assert!((avg - 1.5).abs() < 1e-14);
    }
}
