//! Diagonalization of lower triangular 2×2 functions
//! `Ξ = [[z^{k₁}/q₁, 0], [d/q₂, z^{k₂}/q₂]]` with `q₁ | q₂` and `deg d < k₂`.
//!
//! With `d = z^{k₁₂} d₀`, `d₀(0) ≠ 0` and `s = k₂ − k₁₂`, the Bezout pair
//! `d₀ p₁ + z^s p₂ = 1` with `deg p₁ < s` gives a polynomial unimodular
//! `Ω₊`. The minus side `Ω₋` is a minus unit exactly when
//! `k₁ + deg(q₂/q₁) + deg p₁ ≤ k₁₂`.

use super::WHFactorization;
use crate::error::{Error, Result};
use crate::matpoly::MatPoly;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::ratmat::RatMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonalization2x2 {
    pub k1: usize,
    pub k2: usize,
    /// `None` when `d = 0`.
    pub k12: Option<usize>,
    pub p1: Polynomial,
    pub p2: Polynomial,
    pub omega_minus: RatMatrix,
    /// `Ω₋ Ξ Ω₊`.
    pub middle: Vec<RationalFunction>,
    pub omega_plus: RatMatrix,
}

impl Diagonalization2x2 {
    /// Rewrites `Ξ = Ω₋⁻¹ diag(middle) Ω₊⁻¹` as a factorization with `k = 0`.
    pub fn to_factorization(&self) -> Result<WHFactorization> {
        let mut circ = Vec::with_capacity(2);
        let mut powers = Vec::with_capacity(2);
        for r in &self.middle {
            let (v, rest) = r.num().strip_z();
            circ.push(RationalFunction::new(rest, r.den().clone())?);
            powers.push(Polynomial::z_pow(v));
        }
        Ok(WHFactorization {
            k: 0,
            omega_minus: self.omega_minus.inverse()?,
            omega_circ: circ,
            p0: MatPoly::diagonal(&powers),
            omega_plus: self.omega_plus.inverse()?,
        })
    }
}

fn shape(msg: &str) -> Error {
    Error::ShapeMismatch(msg.into())
}

/// `z^k` if `p` is exactly a monic monomial.
fn monomial_power(p: &Polynomial) -> Option<usize> {
    let (v, rest) = p.strip_z();
    rest.is_one().then_some(v)
}

fn poly(p: Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p)
}

pub fn diagonalize_2x2(xi: &RatMatrix) -> Result<Diagonalization2x2> {
    if xi.size() != 2 {
        return Err(shape("expected a 2x2 matrix"));
    }
    if !xi.get(0, 1).is_zero() {
        return Err(shape("entry (1,2) must vanish"));
    }
    let (a, b, c) = (xi.get(0, 0), xi.get(1, 0), xi.get(1, 1));
    let k1 = monomial_power(a.num()).ok_or_else(|| shape("entry (1,1) must be z^k1/q1"))?;
    let k2 = monomial_power(c.num()).ok_or_else(|| shape("entry (2,2) must be z^k2/q2"))?;
    let (q1, q2) = (a.den().clone(), c.den().clone());
    let q0 = q2.div_exact(&q1).map_err(|_| shape("q1 must divide q2"))?;
    let d = if b.is_zero() {
        Polynomial::zero()
    } else {
        &q2.div_exact(b.den()).map_err(|_| shape("entry (2,1) must have denominator dividing q2"))? * b.num()
    };

    if d.is_zero() {
        return Ok(Diagonalization2x2 {
            k1,
            k2,
            k12: None,
            p1: Polynomial::zero(),
            p2: Polynomial::zero(),
            omega_minus: RatMatrix::identity(2),
            middle: vec![a.clone(), c.clone()],
            omega_plus: RatMatrix::identity(2),
        });
    }
    if d.degree_or_zero() >= k2 {
        return Err(shape("deg d must be below k2"));
    }
    let (k12, d0) = d.strip_z();
    let s = k2 - k12;
    let p1 = d0.inverse_mod_z_pow(s)?;
    let p2 = (&Polynomial::one() - &(&d0 * &p1)).div_exact(&Polynomial::z_pow(s))?;
    let lhs = k1 + q0.degree_or_zero() + p1.degree_or_zero();
    if lhs > k12 {
        return Err(Error::ConditionFailed(format!(
            "k1 + deg(q2/q1) + deg p1 = {lhs} exceeds k12 = {k12}"
        )));
    }

    let omega_plus = MatPoly::new(vec![
        vec![Polynomial::z_pow(s).scale(&(-1).into()), p1.clone()],
        vec![d0, p2.clone()],
    ])?
    .to_rational();
    let corner = &poly(&(&Polynomial::z_pow(k1) * &p1) * &q0) * &RationalFunction::z_pow(-(k12 as i64));
    let omega_minus = RatMatrix::new(vec![
        vec![RationalFunction::constant((-1).into()), corner],
        vec![RationalFunction::zero(), RationalFunction::one()],
    ])?;
    let middle = vec![
        RationalFunction::new(Polynomial::z_pow(k1 + k2 - k12), q1)?,
        RationalFunction::new(Polynomial::z_pow(k12), q2)?,
    ];
    let got = RatMatrix::product(&[&omega_minus, xi, &omega_plus])?;
    if got != RatMatrix::diagonal(&middle) {
        return Err(Error::InvalidFactorization(format!("Omega_minus * Xi * Omega_plus = {got}")));
    }
    Ok(Diagonalization2x2 { k1, k2, k12: Some(k12), p1, p2, omega_minus, middle, omega_plus })
}
