//! Matrices of rational functions.

use crate::error::{Error, Result};
use crate::matpoly::{MatPoly, Matrix, RingElem};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

pub type RatMatrix = Matrix<RationalFunction>;

impl Matrix<RationalFunction> {
    /// Monic lcm of all entry denominators.
    pub fn common_denominator(&self) -> Polynomial {
        self.entries().fold(Polynomial::one(), |acc, r| acc.lcm(r.den()))
    }

    /// `(L, L·A)` with `L` the common denominator, so `A = (L·A)/L`.
    pub fn split_denominator(&self) -> (Polynomial, MatPoly) {
        let l = self.common_denominator();
        let p = self.map(|r| {
            let cof = l.div_exact(r.den()).expect("lcm is a multiple");
            r.num() * &cof
        });
        (l, p)
    }

    pub fn is_polynomial(&self) -> bool {
        self.entries().all(RationalFunction::is_polynomial)
    }

    pub fn to_polynomial(&self) -> Option<MatPoly> {
        self.is_polynomial().then(|| self.map(|r| r.num().clone()))
    }

    /// Exact inverse via the adjugate of the cleared polynomial matrix.
    pub fn inverse(&self) -> Result<Self> {
        let (l, p) = self.split_denominator();
        let d = p.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let adj = p.adjugate();
        adj.try_map(|a| RationalFunction::new(a * &l, d.clone()))
    }

    /// Entrywise `A(1/z)`.
    pub fn at_reciprocal(&self) -> Self {
        self.map(|r| {
            let n = RationalFunction::reciprocal_argument(r.num());
            let d = RationalFunction::reciprocal_argument(r.den());
            n.checked_div(&d).expect("nonzero denominator stays nonzero")
        })
    }

    pub fn scale_fn(&self, c: &RationalFunction) -> Self {
        self.map(|r| RingElem::mul(r, c))
    }

    /// Whether `factors[0] · factors[1] ⋯ = target`, decided on cleared
    /// denominators so that no gcd is ever taken.
    pub fn product_equals(factors: &[&RatMatrix], target: &RatMatrix) -> Result<bool> {
        let mut num = MatPoly::identity(target.size());
        let mut den = Polynomial::one();
        for f in factors {
            let (l, m) = f.split_denominator();
            num = num.mul(&m)?;
            den = &den * &l;
        }
        let (lt, mt) = target.split_denominator();
        Ok(num.scale(&lt) == mt.scale(&den))
    }
}

impl Matrix<Polynomial> {
    /// `A(1/z)` as a rational matrix.
    pub fn at_reciprocal(&self) -> RatMatrix {
        self.map(RationalFunction::reciprocal_argument)
    }
}
