//! `F = Q · R` with `Q` lower triangular, `det Q = zⁿ` and `det R(0) ≠ 0`.
//!
//! Row `z`-powers are pulled out first. While `R(0)` is singular, the first
//! row of `R(0)` depending on the rows above it is replaced by that
//! vanishing combination divided by its `z`-power, and `Q` absorbs the
//! inverse row operation followed by the `z`-power on the right. Each step
//! only changes row `k` of `Q`, so the entries left of the diagonal keep a
//! degree below the diagonal degree of their row.

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::matpoly::{MatPoly, Matrix, RingElem};
use crate::poly::Polynomial;
use crate::report::VerificationReport;

/// One recorded step. The first step is the row extraction and has no `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularStep {
    pub q: MatPoly,
    pub r: MatPoly,
    /// Unit lower-triangular `L` whose row `k` holds the `α` coefficients.
    pub l: Option<Matrix<GaussianRational>>,
    /// Row index (0-based) of the dependency and the extracted power.
    pub k: Option<usize>,
    pub ell: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSplit {
    pub q: MatPoly,
    pub r: MatPoly,
    pub n_exponents: Vec<usize>,
    pub steps: Vec<TriangularStep>,
}

/// Largest `v` with `z^v` dividing every entry of row `i`.
fn row_valuation(a: &MatPoly, i: usize) -> usize {
    a.row(i).iter().filter_map(Polynomial::z_valuation).min().unwrap_or(0)
}

fn divide_row_by_z(a: &mut MatPoly, i: usize, v: usize) {
    if v == 0 {
        return;
    }
    for c in 0..a.size() {
        let coeffs = a.get(i, c).coeffs();
        let lowered = Polynomial::new(coeffs[v.min(coeffs.len())..].to_vec());
        a.set(i, c, lowered);
    }
}

/// First `k` for which rows `0..=k` of `rows` are dependent, together with
/// coefficients `α` (length `k`) such that `Σ αᵢ rowᵢ + row_k = 0`.
fn first_dependency(rows: &Matrix<GaussianRational>) -> Option<(usize, Vec<GaussianRational>)> {
    let m = rows.size();
    // reduced rows: (pivot column, vector, combination of original rows)
    let mut basis: Vec<(usize, Vec<GaussianRational>, Vec<GaussianRational>)> = Vec::new();
    for k in 0..m {
        let mut w = rows.row(k).to_vec();
        let mut comb = vec![GaussianRational::zero(); m];
        comb[k] = GaussianRational::one();
        for (pc, v, c) in &basis {
            if w[*pc].is_zero() {
                continue;
            }
            let factor = &w[*pc] / &v[*pc];
            for j in 0..m {
                w[j] = &w[j] - &(&factor * &v[j]);
                comb[j] = &comb[j] - &(&factor * &c[j]);
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(pc) => basis.push((pc, w, comb)),
            None => {
                comb.truncate(k);
                return Some((k, comb));
            }
        }
    }
    None
}

pub fn qr_split_at_zero(f: &MatPoly) -> Result<TriangularSplit> {
    let m = f.size();
    // every step raises sum n_j, which is at most deg det F <= the sum of row degrees
    let mut bound = 0;
    for i in 0..m {
        bound += f.row(i).iter().filter_map(Polynomial::degree).max().ok_or(Error::SingularMatrix)?;
    }
    let mut r = f.clone();
    let mut exps = vec![0usize; m];
    for (i, e) in exps.iter_mut().enumerate() {
        *e = row_valuation(&r, i);
        divide_row_by_z(&mut r, i, *e);
    }
    let mut q = MatPoly::diagonal(&exps.iter().map(|&e| Polynomial::z_pow(e)).collect::<Vec<_>>());
    let mut steps = vec![TriangularStep { q: q.clone(), r: r.clone(), l: None, k: None, ell: 0 }];

    while let Some((k, alpha)) = first_dependency(&r.at_zero()) {
        let mut l = Matrix::<GaussianRational>::identity(m);
        for (i, a) in alpha.iter().enumerate() {
            l.set(k, i, a.clone());
        }
        for (i, a) in alpha.iter().enumerate() {
            r.add_row_multiple(k, i, &Polynomial::constant(a.clone()));
            q.add_col_multiple(i, k, &Polynomial::constant(-a));
        }
        if r.row(k).iter().all(Polynomial::is_zero) {
            return Err(Error::SingularMatrix);
        }
        let ell = row_valuation(&r, k);
        divide_row_by_z(&mut r, k, ell);
        q.scale_col(k, &Polynomial::z_pow(ell));
        exps[k] += ell;
        if exps.iter().sum::<usize>() > bound {
            return Err(Error::SingularMatrix);
        }
        steps.push(TriangularStep { q: q.clone(), r: r.clone(), l: Some(l), k: Some(k), ell });
    }
    Ok(TriangularSplit { q, r, n_exponents: exps, steps })
}

pub fn verify_triangular_split(f: &MatPoly, s: &TriangularSplit) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let m = f.size();
    let sized = s.q.size() == m && s.r.size() == m && s.n_exponents.len() == m;
    rep.push("sizes", sized, "");
    if !sized {
        return rep;
    }
    rep.push("product", s.q.mul(&s.r).is_ok_and(|p| p == *f), "Q·R = F");
    rep.push("lower_triangular", s.q.is_lower_triangular(), "");
    let diag_ok = (0..m).all(|j| *s.q.get(j, j) == Polynomial::z_pow(s.n_exponents[j]));
    rep.push("diagonal_powers", diag_ok, format!("n = {:?}", s.n_exponents));
    let degrees_ok =
        (0..m).all(|i| (0..i).all(|j| s.q.get(i, j).degree().is_none_or(|d| d < s.n_exponents[i])));
    rep.push("degree_bounds", degrees_ok, "entries left of the diagonal below the row's diagonal degree");
    let n = f.det().z_valuation();
    let sum: usize = s.n_exponents.iter().sum();
    rep.push("exponent_sum", n == Some(sum), format!("sum n_j = {sum}"));
    rep.push("r_regular_at_zero", !s.r.at_zero().det().is_zero(), "det R(0) != 0");
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn p3() -> MatPoly {
        // [[−1, −1], [z(1−z)²(1+z), z(1−z−z²)]]
        let a = &(&Polynomial::z() * &p(&[1, -1]).pow(2)) * &p(&[1, 1]);
        let b = &Polynomial::z() * &p(&[1, -1, -1]);
        MatPoly::new(vec![vec![p(&[-1]), p(&[-1])], vec![a, b]]).unwrap()
    }

    #[test]
    fn golden_trace() {
        let s = qr_split_at_zero(&p3()).unwrap();
        let qs: Vec<MatPoly> = s.steps.iter().map(|st| st.q.clone()).collect();
        assert_eq!(qs.len(), 4);
        assert_eq!(qs[0], MatPoly::diagonal(&[p(&[1]), p(&[0, 1])]));
        assert_eq!(qs[1], MatPoly::new(vec![vec![p(&[1]), p(&[])], vec![p(&[0, -1]), p(&[0, 0, 1])]]).unwrap());
        assert_eq!(qs[2], MatPoly::new(vec![vec![p(&[1]), p(&[])], vec![p(&[0, -1, 1]), p(&[0, 0, 0, 1])]]).unwrap());
        assert_eq!(
            qs[3],
            MatPoly::new(vec![vec![p(&[1]), p(&[])], vec![p(&[0, -1, 1, 1]), Polynomial::z_pow(4)]]).unwrap()
        );
        let l1 = s.steps[1].l.as_ref().unwrap();
        assert_eq!(l1.get(1, 0), &GaussianRational::from_int(1));
        assert_eq!(s.steps[2].l.as_ref().unwrap().get(1, 0), &GaussianRational::from_int(-1));
        assert_eq!(s.r, MatPoly::from_int_rows(&[&[&[-1], &[-1]], &[&[1], &[]]]).unwrap());
        assert_eq!(s.n_exponents, vec![0, 4]);
        assert!(verify_triangular_split(&p3(), &s).all_passed());
    }

    #[test]
    fn regular_input_is_untouched() {
        let f = MatPoly::from_int_rows(&[&[&[1, 1], &[2]], &[&[0, 3], &[1]]]).unwrap();
        let s = qr_split_at_zero(&f).unwrap();
        assert_eq!(s.q, MatPoly::identity(2));
        assert_eq!(s.r, f);
    }

    #[test]
    fn pure_row_powers() {
        let f = MatPoly::diagonal(&[Polynomial::z_pow(2), Polynomial::z()]);
        let s = qr_split_at_zero(&f).unwrap();
        assert_eq!(s.q, f);
        assert_eq!(s.r, MatPoly::identity(2));
        assert_eq!(s.steps.len(), 1);
    }

    #[test]
    fn singular_rejected() {
        let f = MatPoly::from_int_rows(&[&[&[1], &[1]], &[&[1], &[1]]]).unwrap();
        assert_eq!(qr_split_at_zero(&f), Err(Error::SingularMatrix));
    }

    #[test]
    fn verify_catches_bad_degree_and_scaled_r() {
        let f = p3();
        let mut s = qr_split_at_zero(&f).unwrap();
        let mut bad = s.clone();
        bad.q.set(1, 0, Polynomial::z_pow(5));
        assert_eq!(verify_triangular_split(&f, &bad).passed("degree_bounds"), Some(false));
        s.r = s.r.scale_const(&GaussianRational::from_int(3));
        assert_eq!(verify_triangular_split(&f, &s).passed("product"), Some(false));
    }

    #[test]
    fn idempotent_on_r() {
        let s = qr_split_at_zero(&p3()).unwrap();
        let again = qr_split_at_zero(&s.r).unwrap();
        assert_eq!(again.q, MatPoly::identity(2));
    }

    #[test]
    fn three_by_three_dependency() {
        // rows at 0: (1,0,0), (0,1,0), (1,1,0)+z·(...)
        let f = MatPoly::new(vec![
            vec![p(&[1]), p(&[]), p(&[])],
            vec![p(&[]), p(&[1]), p(&[])],
            vec![p(&[1]), p(&[1]), p(&[0, 1])],
        ])
        .unwrap();
        let s = qr_split_at_zero(&f).unwrap();
        assert!(verify_triangular_split(&f, &s).all_passed(), "{}", verify_triangular_split(&f, &s));
        assert_eq!(s.n_exponents, vec![0, 0, 1]);
    }
}
