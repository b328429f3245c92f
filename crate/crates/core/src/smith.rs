//! Smith decompositions `P = E · diag(d) · F`, classical and relative to a
//! region of the plane.
//!
//! Diagonals are ordered so that each entry divides its predecessor,
//! `d_{j+1} | d_j`, which is the reverse of the more common convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::locus::split_by_circle;
use crate::matpoly::MatPoly;
use crate::poly::Polynomial;
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    InsideDisk,
    OnCircle,
    OutsideDisk,
    WholePlane,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::InsideDisk => "inside",
            Region::OnCircle => "circle",
            Region::OutsideDisk => "outside",
            Region::WholePlane => "plane",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub e: MatPoly,
    pub d: Vec<Polynomial>,
    pub f: MatPoly,
    /// `None` for the classical form.
    pub region: Option<Region>,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> MatPoly {
        MatPoly::diagonal(&self.d)
    }

    pub fn product(&self) -> MatPoly {
        MatPoly::product(&[&self.e, &self.diagonal(), &self.f]).expect("sizes agree")
    }
}

/// A diagonal `d = minus · circ · plus` split by root location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleDiagonal {
    pub minus: Vec<Polynomial>,
    pub circ: Vec<Polynomial>,
    pub plus: Vec<Polynomial>,
}

impl CircleDiagonal {
    pub fn part(&self, region: Region) -> Vec<Polynomial> {
        match region {
            Region::InsideDisk => self.minus.clone(),
            Region::OnCircle => self.circ.clone(),
            Region::OutsideDisk => self.plus.clone(),
            Region::WholePlane => {
                (0..self.minus.len()).map(|j| &(&self.minus[j] * &self.circ[j]) * &self.plus[j]).collect()
            }
        }
    }
}

/// Splits every (monic) entry of `d` by root location.
pub fn split_diagonal(d: &[Polynomial]) -> Result<CircleDiagonal> {
    let mut out = CircleDiagonal { minus: vec![], circ: vec![], plus: vec![] };
    for dj in d {
        let s = split_by_circle(dj)?;
        out.minus.push(s.minus);
        out.circ.push(s.circ);
        out.plus.push(s.plus);
    }
    Ok(out)
}

/// Classical Smith form by elementary operations.
///
/// Works from the bottom-right corner up. The pivot is a nonzero entry of
/// minimal degree in the active block, preferring the corner itself and then
/// row-major order. Each entry of the pivot row and column is cleared by
/// Euclid's algorithm against the pivot, with every nonzero remainder
/// swapped into the pivot slot. An inner entry the pivot does not divide is
/// folded into the pivot row and the block is reduced again. `E` and `F`
/// are updated with the inverse operations so that `P = E·A·F` holds
/// throughout. At the end `det F = 1`.
pub fn smith_decompose(p: &MatPoly) -> Result<SmithDecomposition> {
    let m = p.size();
    let mut a = p.clone();
    let mut e = MatPoly::identity(m);
    let mut f = MatPoly::identity(m);
    // F changes only by shears and row swaps, so det F = ±1
    let mut f_det_negative = false;
    for t in (0..m).rev() {
        loop {
            let (pi, pj) = pick_pivot(&a, t).ok_or(Error::SingularMatrix)?;
            a.swap_rows(pi, t);
            e.swap_cols(pi, t);
            a.swap_cols(pj, t);
            f.swap_rows(pj, t);
            f_det_negative ^= pj != t;
            make_pivot_monic(&mut a, &mut e, t)?;

            // Euclid on the pivot column and column c until the pivot divides
            // a[t][c]; each remainder is swapped into the pivot slot.
            for c in (0..t).rev() {
                loop {
                    let (q, r) = a.get(t, c).div_rem(a.get(t, t))?;
                    a.add_col_multiple(c, t, &-&q);
                    f.add_row_multiple(t, c, &q);
                    if r.is_zero() {
                        break;
                    }
                    a.swap_cols(c, t);
                    f.swap_rows(c, t);
                    f_det_negative ^= true;
                    make_pivot_monic(&mut a, &mut e, t)?;
                }
            }
            let mut dirty = false;
            for r in (0..t).rev() {
                loop {
                    let (q, rem) = a.get(r, t).div_rem(a.get(t, t))?;
                    a.add_row_multiple(r, t, &-&q);
                    e.add_col_multiple(t, r, &q);
                    if rem.is_zero() {
                        break;
                    }
                    a.swap_rows(r, t);
                    e.swap_cols(r, t);
                    make_pivot_monic(&mut a, &mut e, t)?;
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            let pivot = a.get(t, t).clone();
            let bad = (0..t).rev().flat_map(|r| (0..t).rev().map(move |c| (r, c))).find(|&(r, c)| {
                !pivot.divides(a.get(r, c))
            });
            match bad {
                Some((r, _)) => {
                    a.add_row_multiple(t, r, &Polynomial::one());
                    e.add_col_multiple(r, t, &-Polynomial::one());
                }
                None => break,
            }
        }
    }
    let mut d = Vec::with_capacity(m);
    for i in 0..m {
        let entry = a.get(i, i);
        let lc = entry.leading_coeff();
        e.scale_col(i, &Polynomial::constant(lc));
        d.push(entry.monic());
    }
    if f_det_negative {
        f.scale_row(0, &-Polynomial::one());
        e.scale_col(0, &-Polynomial::one());
    }
    Ok(SmithDecomposition { e, d, f, region: None })
}

fn make_pivot_monic(a: &mut MatPoly, e: &mut MatPoly, t: usize) -> Result<()> {
    let lc = a.get(t, t).leading_coeff();
    if lc != GaussianRational::from_int(1) {
        a.scale_row(t, &Polynomial::constant(lc.inv()?));
        e.scale_col(t, &Polynomial::constant(lc));
    }
    Ok(())
}

fn pick_pivot(a: &MatPoly, t: usize) -> Option<(usize, usize)> {
    let corner = a.get(t, t).degree().map(|d| (d, (t, t)));
    let rest = (0..=t)
        .flat_map(|i| (0..=t).map(move |j| (i, j)))
        .filter_map(|(i, j)| a.get(i, j).degree().map(|d| (d, (i, j))));
    // min_by_key keeps the first of equal keys, so the corner wins ties
    corner.into_iter().chain(rest).min_by_key(|&(d, _)| d).map(|(_, ij)| ij)
}

/// Invariant factors `D_r / D_{r−1}` from the gcds `D_r` of all `r × r`
/// minors, returned so that each divides its predecessor.
pub fn smith_invariants_via_minors(p: &MatPoly) -> Result<Vec<Polynomial>> {
    let m = p.size();
    if p.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let mut prev = Polynomial::one();
    let mut out = Vec::with_capacity(m);
    for r in 1..=m {
        let g = p.minors(r).iter().fold(Polynomial::zero(), |acc, x| acc.gcd(x));
        out.push(g.div_exact(&prev)?);
        prev = g;
    }
    out.reverse();
    Ok(out)
}

/// Smith form relative to `region`: the classical diagonal keeps only its
/// roots in the region and the rest is folded into `F`.
pub fn regional_smith(p: &MatPoly, region: Region) -> Result<SmithDecomposition> {
    let mut s = smith_decompose(p)?;
    s.region = Some(region);
    if region == Region::WholePlane {
        return Ok(s);
    }
    let split = split_diagonal(&s.d)?;
    let kept = split.part(region);
    for (j, dj) in s.d.iter().enumerate() {
        let off = dj.div_exact(&kept[j])?;
        s.f.scale_row(j, &off);
    }
    s.d = kept;
    Ok(s)
}

fn has_no_roots_in(p: &Polynomial, region: Option<Region>) -> Result<bool> {
    match region {
        None | Some(Region::WholePlane) => Ok(p.is_constant() && !p.is_zero()),
        Some(r) => {
            if p.is_zero() {
                return Ok(false);
            }
            let split = split_by_circle(p)?;
            Ok(match r {
                Region::InsideDisk => split.minus.is_one(),
                Region::OnCircle => split.circ.is_one(),
                Region::OutsideDisk => split.plus.is_one(),
                Region::WholePlane => unreachable!(),
            })
        }
    }
}

/// Checks a (possibly regional) Smith decomposition of `p`.
pub fn verify_smith(p: &MatPoly, s: &SmithDecomposition) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let sized = s.e.size() == p.size() && s.f.size() == p.size() && s.d.len() == p.size();
    rep.push("sizes", sized, "");
    if !sized {
        return rep;
    }
    rep.push("product", s.product() == *p, "E·diag(d)·F = P");
    for (name, mat) in [("det_e", &s.e), ("det_f", &s.f)] {
        let det = mat.det();
        match has_no_roots_in(&det, s.region) {
            Ok(ok) => rep.push(name, ok, format!("det = {det}")),
            Err(e) => rep.push(name, false, e.to_string()),
        }
    }
    rep.push("monic", s.d.iter().all(Polynomial::is_monic), "");
    let chain = s.d.windows(2).all(|w| w[1].divides(&w[0]));
    rep.push("divisibility", chain, "d_{j+1} divides d_j");
    let expected = smith_invariants_via_minors(p).and_then(|inv| match s.region {
        None | Some(Region::WholePlane) => Ok(inv),
        Some(r) => Ok(split_diagonal(&inv)?.part(r)),
    });
    match expected {
        Ok(inv) => rep.push("invariants", inv == s.d, format!("minors give {}", fmt_list(&inv))),
        Err(e) => rep.push("invariants", false, e.to_string()),
    }
    rep
}

pub(crate) fn fmt_list(v: &[Polynomial]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}
