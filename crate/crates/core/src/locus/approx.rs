//! Floating-point root approximations used only to propose exact
//! candidates. Every candidate is confirmed by exact evaluation, so a poor
//! approximation can only cost a missed root, never a wrong one.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::gaussint::GaussInt;

const MAX_ITERS: usize = 500;

fn to_c64(a: &GaussInt) -> Option<Complex64> {
    let c = Complex64::new(a.re.to_f64()?, a.im.to_f64()?);
    (c.re.is_finite() && c.im.is_finite()).then_some(c)
}

fn horner(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// All complex roots of the polynomial with ascending coefficients
/// `coeffs` by Aberth iteration, or `None` if it fails to converge.
pub(crate) fn roots(coeffs: &[GaussInt]) -> Option<Vec<Complex64>> {
    let c: Vec<Complex64> = coeffs.iter().map(to_c64).collect::<Option<_>>()?;
    let n = c.len().checked_sub(1)?;
    if n == 0 || c[n].is_zero() {
        return None;
    }
    let lc = c[n];
    let monic: Vec<Complex64> = c.iter().map(|x| x / lc).collect();
    let radius = 1.0 + monic[..n].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..MAX_ITERS {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (p, dp) = horner(&monic, z[k]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                return None;
            }
            z[k] -= step;
            moved = moved.max(step.norm() / (1.0 + z[k].norm()));
        }
        if moved < 1e-15 {
            return Some(z);
        }
    }
    Some(z)
}

/// Gaussian integers near `lc · r` for each approximate root `r`. For a
/// polynomial over `Z[i]` every root in `Q(i)` has this form divided by `lc`.
pub(crate) fn scaled_candidates(coeffs: &[GaussInt]) -> Vec<GaussInt> {
    let Some(lc) = coeffs.last().and_then(to_c64) else { return Vec::new() };
    let Some(rs) = roots(coeffs) else { return Vec::new() };
    let mut out = Vec::new();
    for r in rs {
        let w = lc * r;
        if w.norm() > 1e15 {
            continue;
        }
        let (re, im) = (w.re.round() as i64, w.im.round() as i64);
        out.push(GaussInt::new(re, im));
    }
    out.sort();
    out.dedup();
    out
}
