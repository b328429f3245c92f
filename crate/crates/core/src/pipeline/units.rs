//! Minus and plus units: invertible rational matrix functions whose poles,
//! and those of their inverse, avoid the outside or the closed disk.

use crate::error::{Error, Result};
use crate::locus::{split_by_circle, CircleSplit};
use crate::ratmat::RatMatrix;

fn all_entries(r: &RatMatrix, ok: impl Fn(&crate::RationalFunction) -> Result<bool>) -> Result<bool> {
    for e in r.entries() {
        if !ok(e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn den_split_ok(e: &crate::RationalFunction, accept: impl Fn(&CircleSplit) -> bool) -> Result<bool> {
    if e.den().is_constant() {
        return Ok(true);
    }
    Ok(accept(&split_by_circle(e.den())?))
}

/// Poles only in the open disk and finite at infinity.
pub fn is_minus_function(r: &RatMatrix) -> Result<bool> {
    all_entries(r, |e| {
        Ok(e.is_proper() && den_split_ok(e, |s| s.circ.is_one() && s.plus.is_one())?)
    })
}

/// No poles in the closed disk.
pub fn is_plus_function(r: &RatMatrix) -> Result<bool> {
    all_entries(r, |e| den_split_ok(e, |s| s.minus.is_one() && s.circ.is_one()))
}

/// Both function classes are closed under sums and products, so `adj R` is
/// in the class whenever `R` is, and `R⁻¹ = adj R / det R` is in it iff
/// `1/det R` is. This avoids forming the inverse.
fn with_inverse(r: &RatMatrix, test: fn(&RatMatrix) -> Result<bool>) -> Result<bool> {
    let det = r.det();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    if !test(r)? {
        return Ok(false);
    }
    test(&RatMatrix::diagonal(&[det.inv()?]))
}

/// `R` and `R⁻¹` are both minus functions.
pub fn is_minus_unit(r: &RatMatrix) -> Result<bool> {
    with_inverse(r, is_minus_function)
}

/// `R` and `R⁻¹` are both plus functions.
pub fn is_plus_unit(r: &RatMatrix) -> Result<bool> {
    with_inverse(r, is_plus_function)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{MatPoly, Polynomial, RationalFunction};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn golden_units() {
        let minus = RatMatrix::new(vec![
            vec![rf(&[-1, -1], &[0, 1]), rf(&[-1], &[0, 0, 1])],
            vec![rf(&[1], &[1]), rf(&[1, -1], &[0, 1])],
        ])
        .unwrap();
        assert!(is_minus_unit(&minus).unwrap());
        assert!(!is_plus_unit(&minus).unwrap());
        let plus = MatPoly::from_int_rows(&[&[&[0, -1], &[-1]], &[&[1], &[]]]).unwrap().to_rational();
        assert!(is_plus_unit(&plus).unwrap());
        assert!(!is_minus_unit(&plus).unwrap());
    }

    #[test]
    fn circle_pole_is_neither() {
        let r = MatPoly::diagonal(&[p(&[-1, 1]), p(&[1])]).to_rational();
        assert!(!is_plus_unit(&r).unwrap());
        assert!(!is_minus_unit(&r).unwrap());
    }

    #[test]
    fn agrees_with_explicit_inverse() {
        // [[1, 1/(z−2)], [0, (z−1/2)/z]] is a plus function but its inverse
        // has the pole z/(z−1/2) inside, so it is not a plus unit
        let half = crate::GaussianRational::ratio(1, 2);
        let r = RatMatrix::new(vec![
            vec![RationalFunction::one(), rf(&[1], &[-2, 1])],
            vec![RationalFunction::zero(), RationalFunction::new(Polynomial::linear(&half), p(&[0, 1])).unwrap()],
        ])
        .unwrap();
        assert!(!is_plus_unit(&r).unwrap());
        assert!(is_minus_function(&r.inverse().unwrap()).unwrap() == is_minus_unit(&r).unwrap());
    }

    #[test]
    fn singular_rejected() {
        let r = MatPoly::diagonal(&[p(&[1]), p(&[])]).to_rational();
        assert_eq!(is_plus_unit(&r), Err(Error::SingularMatrix));
    }
}
