//! Independent checks of a claimed factorization.

use super::units::{is_minus_unit, is_plus_unit};
use super::{RatMatFun, WHFactorization};
use crate::error::Result;
use crate::locus::split_by_circle;
use crate::matpoly::{MatPoly, RingElem};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::report::VerificationReport;
use crate::smith::{regional_smith, Region};

fn push_result(rep: &mut VerificationReport, name: &str, r: Result<bool>, detail: &str) {
    match r {
        Ok(b) => rep.push(name, b, detail),
        Err(e) => rep.push(name, false, format!("{}: {e}", e.name())),
    }
}

fn only_circle_roots(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    if p.is_constant() {
        return Ok(true);
    }
    let s = split_by_circle(p)?;
    Ok(s.minus.is_one() && s.plus.is_one())
}

fn no_roots_in_closed_disk(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    if p.is_constant() {
        return Ok(true);
    }
    let s = split_by_circle(p)?;
    Ok(s.minus.is_one() && s.circ.is_one())
}

fn p0_shape(p0: &MatPoly, k: usize) -> (bool, String) {
    let m = p0.size();
    if !p0.is_lower_triangular() {
        return (false, "P0 is not lower triangular".into());
    }
    let Some(n) = p0.z_power_diagonal() else {
        return (false, "diagonal of P0 is not a list of z-powers".into());
    };
    let total: usize = n.iter().sum();
    if p0.det() != Polynomial::z_pow(total) {
        return (false, "det P0 is not z^(sum n_j)".into());
    }
    let bounded = (0..m).all(|i| (0..i).all(|j| p0.get(i, j).degree().is_none_or(|d| d < n[i])));
    if !bounded {
        return (false, "entry left of the diagonal has degree >= the row's diagonal degree".into());
    }
    if k > 0 && p0.at_zero().entries().all(|c| c.is_zero()) {
        return (false, "k > 0 but P0(0) = 0".into());
    }
    (true, format!("n = {n:?}"))
}

/// Shape checks that need only the factorization: the unit properties,
/// circle-only `Ω∘`, and the triangular normal form of `P₀`.
pub fn verify_structure(fact: &WHFactorization) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let m = fact.size();
    let sized = fact.omega_minus.size() == m && fact.omega_plus.size() == m && fact.omega_circ.len() == m;
    rep.push("sizes", sized, format!("m = {m}"));
    if !sized {
        return rep;
    }
    push_result(&mut rep, "minus_unit", is_minus_unit(&fact.omega_minus), "Omega_minus and its inverse are minus functions");
    push_result(&mut rep, "plus_unit", is_plus_unit(&fact.omega_plus), "Omega_plus and its inverse are plus functions");
    let circ = fact.omega_circ.iter().try_fold(true, |acc, r| {
        Ok(acc && !r.is_zero() && only_circle_roots(r.num())? && only_circle_roots(r.den())?)
    });
    push_result(&mut rep, "circle_diagonal", circ, "zeros and poles of Omega_circ lie on the unit circle");
    let (ok, detail) = p0_shape(&fact.p0, fact.k);
    rep.push("p0_normal_form", ok, detail);
    rep
}

/// All checks of `fact` against `omega`: the structural ones plus the
/// product identity, agreement of `q∘Ω∘` with the on-circle Smith
/// diagonal, and the polynomial forms of the outer factors.
pub fn verify_wh(omega: &RatMatFun, fact: &WHFactorization) -> VerificationReport {
    let mut rep = VerificationReport::new();
    push_result(&mut rep, "product", fact.reproduces(&omega.omega), "z^-k Omega_minus Omega_circ P0 Omega_plus = Omega");
    let structure = verify_structure(fact);
    let sized = structure.passed("sizes") == Some(true) && fact.size() == omega.size();
    for c in structure.checks {
        rep.push(&c.name, c.passed, c.detail);
    }
    if !sized {
        return rep;
    }

    let split = match split_by_circle(&omega.q) {
        Ok(s) => s,
        Err(e) => {
            rep.push("denominator_split", false, format!("{}: {e}", e.name()));
            return rep;
        }
    };
    let q_circ = RationalFunction::from_poly(split.circ.clone());
    let smith_circ = regional_smith(&omega.p1, Region::OnCircle).map(|s| {
        let ours: Vec<RationalFunction> = fact.omega_circ.iter().map(|r| r * &q_circ).collect();
        ours.iter().zip(&s.d).all(|(a, d)| a.as_polynomial() == Some(d))
    });
    push_result(&mut rep, "circle_smith", smith_circ, "q_circ * Omega_circ = on-circle Smith diagonal of P1");

    let q_plus = RationalFunction::from_poly(split.plus.scale(&split.constant));
    let p_plus = fact.omega_plus.scale_fn(&q_plus).to_polynomial();
    let dm = split.minus.degree_or_zero() as i64;
    let minus_scale = &RationalFunction::z_pow(-dm) * &RationalFunction::from_poly(split.minus.clone());
    let p_minus = fact.omega_minus.scale_fn(&minus_scale).at_reciprocal().to_polynomial();
    let outer = match (&p_plus, &p_minus) {
        (Some(pp), Some(pm)) => {
            no_roots_in_closed_disk(&pp.det()).and_then(|a| Ok(a && no_roots_in_closed_disk(&pm.det())?))
        }
        _ => Ok(false),
    };
    push_result(&mut rep, "outer_polynomials", outer, "q+ Omega_plus and the reflected q- Omega_minus are polynomial with det nonvanishing on the closed disk");
    rep
}
