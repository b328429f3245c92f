//! Reduction of `Q(i)[z]` modulo a Gaussian prime above `p = 10⁹ + 9`.
//!
//! `p ≡ 1 (mod 4)`, so `i` maps to a square root of `−1` in `F_p`. When the
//! leading coefficients survive the reduction, the degree of the modular
//! gcd bounds the degree of the true gcd from above, which certifies
//! coprimality cheaply.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::field::GaussianRational;

const P: u64 = 1_000_000_009;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b);
        }
        b = mul(b, b);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn sqrt_minus_one() -> u64 {
    static I: OnceLock<u64> = OnceLock::new();
    *I.get_or_init(|| {
        (2..).map(|c| pow(c, (P - 1) / 4)).find(|&r| mul(r, r) == P - 1).expect("p = 1 mod 4")
    })
}

fn reduce_int(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = if r < BigInt::zero() { r + BigInt::from(P) } else { r };
    r.to_u64().expect("reduced below p")
}

fn reduce_rational(r: &num_rational::BigRational) -> Option<u64> {
    let d = reduce_int(r.denom());
    (d != 0).then(|| mul(reduce_int(r.numer()), inv(d)))
}

fn reduce_coeff(c: &GaussianRational) -> Option<u64> {
    let re = reduce_rational(c.re())?;
    let im = reduce_rational(c.im())?;
    Some((re + mul(im, sqrt_minus_one())) % P)
}

/// Image of the coefficient list, or `None` if a denominator vanishes or
/// the leading coefficient reduces to zero.
fn reduce(coeffs: &[GaussianRational]) -> Option<Vec<u64>> {
    let v: Vec<u64> = coeffs.iter().map(reduce_coeff).collect::<Option<_>>()?;
    (*v.last()? != 0).then_some(v)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lb = inv(*b.last().expect("nonempty"));
        let db = b.len() - 1;
        while a.len() > db {
            let c = mul(*a.last().expect("nonempty"), lb);
            let shift = a.len() - 1 - db;
            for (j, &x) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + P - mul(c, x)) % P;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// `true` only when `a` and `b` are certainly coprime over `Q(i)`.
pub(crate) fn certainly_coprime(a: &[GaussianRational], b: &[GaussianRational]) -> bool {
    match (reduce(a), reduce(b)) {
        (Some(x), Some(y)) => gcd_degree(x, y) == 0,
        _ => false,
    }
}
