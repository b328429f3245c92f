//! Fredholm verdict and index of the Toeplitz-like operator with symbol `Ω`,
//! read off a factorization `Ω = z^{−k} Ω₋ Ω∘ P₀ Ω₊`.
//!
//! Writing `Ω∘ = diag(s_j/q_j)` in lowest terms, the operator is Fredholm
//! exactly when every `s_j` is constant, and then its index is
//! `m·k + Σ deg q_j − Σ n_j`.

use crate::error::{Error, Result};
use crate::pipeline::{verify_structure, wh_factorize, RatMatFun, WHFactorization};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FredholmReport {
    pub is_fredholm: bool,
    /// Present iff `is_fredholm`.
    pub index: Option<i64>,
    pub m: usize,
    pub k: usize,
    pub q_degrees: Vec<usize>,
    pub n_exponents: Vec<usize>,
    /// Monic nonconstant numerators `s_j` of `Ω∘`.
    pub witnesses: Vec<Polynomial>,
}

pub fn fredholm_report(fact: &WHFactorization) -> Result<FredholmReport> {
    let checks = verify_structure(fact);
    if !checks.all_passed() {
        let failed: Vec<String> = checks.failures().map(|c| format!("{} ({})", c.name, c.detail)).collect();
        return Err(Error::InvalidFactorization(failed.join("; ")));
    }
    let m = fact.size();
    let n_exponents = fact.n_exponents().expect("checked by verify_structure");
    let q_degrees: Vec<usize> = fact.omega_circ.iter().map(|r| r.den().degree_or_zero()).collect();
    let witnesses: Vec<Polynomial> =
        fact.omega_circ.iter().filter(|r| !r.num().is_constant()).map(|r| r.num().monic()).collect();
    let is_fredholm = witnesses.is_empty();
    let index = is_fredholm.then(|| {
        let q: usize = q_degrees.iter().sum();
        let n: usize = n_exponents.iter().sum();
        (m * fact.k + q) as i64 - n as i64
    });
    Ok(FredholmReport { is_fredholm, index, m, k: fact.k, q_degrees, n_exponents, witnesses })
}

pub fn fredholm_of(omega: &RatMatFun) -> Result<FredholmReport> {
    let (fact, _) = wh_factorize(omega)?;
    fredholm_report(&fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{MatPoly, RatMatrix, RationalFunction};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rf(n: Polynomial, d: Polynomial) -> RationalFunction {
        RationalFunction::new(n, d).unwrap()
    }

    fn xi() -> RatMatFun {
        let zm1 = p(&[-1, 1]);
        RatMatFun::from_entries(vec![
            vec![rf(p(&[1]), zm1.pow(3)), RationalFunction::zero()],
            vec![rf(Polynomial::z_pow(2), zm1.pow(4)), rf(Polynomial::z_pow(5), zm1.pow(4))],
        ])
        .unwrap()
    }

    #[test]
    fn section5_not_fredholm() {
        let om = RatMatFun::from_entries(vec![
            vec![RationalFunction::one(), rf(p(&[1]), p(&[-1, 1]))],
            vec![RationalFunction::zero(), RationalFunction::one()],
        ])
        .unwrap();
        let r = fredholm_of(&om).unwrap();
        assert!(!r.is_fredholm);
        assert_eq!(r.index, None);
        assert_eq!(r.witnesses, vec![p(&[-1, 1])]);
    }

    #[test]
    fn example_xi_index_two() {
        let r = fredholm_of(&xi()).unwrap();
        assert!(r.is_fredholm);
        assert_eq!(r.index, Some(2));
    }

    #[test]
    fn both_hand_factorizations_agree() {
        let zm1 = p(&[-1, 1]);
        let circ = vec![rf(p(&[1]), zm1.pow(3)), rf(p(&[1]), zm1.pow(4))];
        let a = WHFactorization {
            k: 0,
            omega_minus: RatMatrix::identity(2),
            omega_circ: circ.clone(),
            p0: MatPoly::new(vec![vec![p(&[1]), p(&[])], vec![Polynomial::z_pow(2), Polynomial::z_pow(5)]]).unwrap(),
            omega_plus: RatMatrix::identity(2),
        };
        let minus = RatMatrix::new(vec![
            vec![RationalFunction::constant((-1).into()), rf(zm1.clone(), Polynomial::z_pow(2))],
            vec![RationalFunction::zero(), RationalFunction::one()],
        ])
        .unwrap();
        let plus = MatPoly::from_int_rows(&[&[&[0, 0, 0, -1], &[1]], &[&[1], &[]]]).unwrap().to_rational();
        let b = WHFactorization {
            k: 0,
            omega_minus: minus.inverse().unwrap(),
            omega_circ: circ,
            p0: MatPoly::diagonal(&[Polynomial::z_pow(3), Polynomial::z_pow(2)]),
            omega_plus: plus.inverse().unwrap(),
        };
        assert_eq!(a.product().unwrap(), xi().omega);
        assert_eq!(b.product().unwrap(), xi().omega);
        let (ra, rb) = (fredholm_report(&a).unwrap(), fredholm_report(&b).unwrap());
        assert_eq!(ra.n_exponents, vec![0, 5]);
        assert_eq!(rb.n_exponents, vec![3, 2]);
        assert_eq!(ra.index, Some(2));
        assert_eq!(rb.index, Some(2));
    }

    #[test]
    fn unit_determinant_counterexample() {
        let (zp, zm) = (p(&[1, 1]), p(&[-1, 1]));
        let om = RatMatFun::from_matrix(RatMatrix::diagonal(&[rf(zp.clone(), zm.clone()), rf(zm, zp)])).unwrap();
        assert!(om.omega.det().is_one());
        let r = fredholm_of(&om).unwrap();
        assert!(!r.is_fredholm);
        assert_eq!(r.witnesses, vec![p(&[-1, 0, 1])]);
    }

    #[test]
    fn trivial_cases() {
        let id = fredholm_of(&RatMatFun::from_matrix(RatMatrix::identity(2)).unwrap()).unwrap();
        assert_eq!((id.is_fredholm, id.index), (true, Some(0)));
        let one = fredholm_of(&RatMatFun::from_entries(vec![vec![rf(p(&[1]), p(&[-1, 1]))]]).unwrap()).unwrap();
        assert_eq!(one.index, Some(1));
    }

    #[test]
    fn invalid_factorization_rejected() {
        let f = WHFactorization {
            k: 0,
            omega_minus: MatPoly::diagonal(&[Polynomial::z(), p(&[1])]).to_rational(),
            omega_circ: vec![RationalFunction::one(); 2],
            p0: MatPoly::identity(2),
            omega_plus: RatMatrix::identity(2),
        };
        assert!(matches!(fredholm_report(&f), Err(Error::InvalidFactorization(_))));
    }
}
