//! Just enough Gaussian-integer arithmetic to enumerate the divisors that
//! the rational root theorem over `Z[i]` needs.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Trial division bound; cofactors beyond it are assumed prime.
const TRIAL_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    pub fn mul(&self, o: &Self) -> Self {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// `self / d` when the division is exact in `Z[i]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        let t = self.mul(&d.conj());
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi })
    }

    /// The four associates `u·self` for units `u ∈ {1, i, −1, −i}`.
    pub fn associates(&self) -> [Self; 4] {
        let i = GaussInt::new(0, 1);
        let a1 = self.mul(&i);
        let a2 = a1.mul(&i);
        let a3 = a2.mul(&i);
        [self.clone(), a1, a2, a3]
    }
}

/// Rational prime factorization of `n > 0` by trial division. Returns
/// `None` if a cofactor above `TRIAL_LIMIT²` remains, since its primality is
/// then unknown.
fn factor_u128(mut n: u128) -> Option<Vec<(u128, u32)>> {
    let mut out = Vec::new();
    let mut p: u128 = 2;
    while p * p <= n && p <= TRIAL_LIMIT as u128 {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if p * p <= n {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}

/// `x + iy` with `x² + y² = p` for a prime `p ≡ 1 (mod 4)`.
fn sum_of_two_squares(p: u128) -> Option<GaussInt> {
    let mut x: u128 = 1;
    while x * x < p {
        let rest = p - x * x;
        let y = rest.sqrt();
        if y * y == rest {
            return Some(GaussInt::new(BigInt::from(x), BigInt::from(y)));
        }
        x += 1;
    }
    None
}

/// Divisors of `a ≠ 0` in `Z[i]`, one per associate class.
///
/// `None` when the norm could not be factored within the trial-division
/// budget; callers then skip the candidate search.
pub(crate) fn divisors(a: &GaussInt) -> Option<Vec<GaussInt>> {
    debug_assert!(!a.is_zero());
    let norm = a.norm().to_u128()?;
    let mut rest = a.clone();
    // each entry: list of prime powers to choose one from
    let mut choices: Vec<Vec<GaussInt>> = Vec::new();
    for (p, _) in factor_u128(norm)? {
        let primes: Vec<GaussInt> = if p == 2 {
            vec![GaussInt::new(1, 1)]
        } else if p % 4 == 3 {
            vec![GaussInt::new(BigInt::from(p), 0)]
        } else {
            let pi = sum_of_two_squares(p)?;
            let pi_bar = pi.conj();
            vec![pi, pi_bar]
        };
        for pi in primes {
            let mut k = 0;
            let mut powers = vec![GaussInt::one()];
            while let Some(q) = rest.div_exact(&pi) {
                rest = q;
                k += 1;
                powers.push(powers[k - 1].mul(&pi));
            }
            choices.push(powers);
        }
    }
    debug_assert!(rest.norm().is_one());
    let mut out = vec![GaussInt::one()];
    for powers in choices {
        let mut next = Vec::with_capacity(out.len() * powers.len());
        for d in &out {
            for pw in &powers {
                next.push(d.mul(pw));
            }
        }
        out = next;
    }
    Some(out.into_iter().map(normalize_associate).collect())
}

/// Representative with `re > 0, im ≥ 0`.
fn normalize_associate(a: GaussInt) -> GaussInt {
    a.associates()
        .into_iter()
        .find(|x| x.re.is_positive() && !x.im.is_negative())
        .expect("nonzero Gaussian integer has a first-quadrant associate")
}
