//! Wiener–Hopf type factorization `Ω = z^{−k} Ω₋ Ω∘ P₀ Ω₊` of a rational
//! matrix function whose poles may lie on the unit circle.
//!
//! The construction runs in four steps: split `1/q` by root location,
//! take the Smith form of `P₁ = qΩ`, reflect the inside/on-circle part
//! through `z ↦ 1/z` and take its Smith form, and finally split the
//! remaining `z`-power structure into a lower triangular `P₀`.

mod diag2x2;
mod units;
mod verify;

pub use diag2x2::{diagonalize_2x2, Diagonalization2x2};
pub use units::{is_minus_function, is_minus_unit, is_plus_function, is_plus_unit};
pub use verify::{verify_structure, verify_wh};

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::locus::{split_q_inverse, QInverseSplit};
use crate::matpoly::MatPoly;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::ratmat::RatMatrix;
use crate::report::VerificationReport;
use crate::smith::{smith_decompose, split_diagonal, CircleDiagonal, SmithDecomposition};
use crate::triangular::{qr_split_at_zero, TriangularSplit};

/// `Ω` together with `q`, the monic lcm of its denominators, and `P₁ = qΩ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatFun {
    pub omega: RatMatrix,
    pub q: Polynomial,
    pub p1: MatPoly,
}

impl RatMatFun {
    pub fn from_matrix(omega: RatMatrix) -> Result<Self> {
        let (q, p1) = omega.split_denominator();
        if p1.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(RatMatFun { omega, q, p1 })
    }

    pub fn from_entries(rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        Self::from_matrix(RatMatrix::new(rows)?)
    }

    pub fn size(&self) -> usize {
        self.omega.size()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WHFactorization {
    pub k: usize,
    pub omega_minus: RatMatrix,
    /// Diagonal of `Ω∘`.
    pub omega_circ: Vec<RationalFunction>,
    pub p0: MatPoly,
    pub omega_plus: RatMatrix,
}

impl WHFactorization {
    pub fn size(&self) -> usize {
        self.p0.size()
    }

    /// `z^{−k} Ω₋ Ω∘ P₀ Ω₊`.
    pub fn product(&self) -> Result<RatMatrix> {
        let circ = RatMatrix::diagonal(&self.omega_circ);
        let prod = RatMatrix::product(&[&self.omega_minus, &circ, &self.p0.to_rational(), &self.omega_plus])?;
        Ok(prod.scale_fn(&RationalFunction::z_pow(-(self.k as i64))))
    }

    /// Whether the product equals `omega`, without forming it.
    pub fn reproduces(&self, omega: &RatMatrix) -> Result<bool> {
        if omega.size() != self.size() {
            return Ok(false);
        }
        let scalar = RatMatrix::identity(self.size()).scale_fn(&RationalFunction::z_pow(-(self.k as i64)));
        let circ = RatMatrix::diagonal(&self.omega_circ);
        let p0 = self.p0.to_rational();
        RatMatrix::product_equals(&[&scalar, &self.omega_minus, &circ, &p0, &self.omega_plus], omega)
    }

    /// Exponents `n_j` of the diagonal `z`-powers of `P₀`, if it has that form.
    pub fn n_exponents(&self) -> Option<Vec<usize>> {
        self.p0.z_power_diagonal()
    }
}

/// Every intermediate object of the construction, plus a check per
/// defining identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineTrace {
    pub q: Polynomial,
    pub kappa: i64,
    pub q_split: QInverseSplit,
    pub p1: MatPoly,
    pub smith1: SmithDecomposition,
    pub d1: CircleDiagonal,
    pub n: usize,
    pub p2: MatPoly,
    pub smith2: SmithDecomposition,
    pub d2: CircleDiagonal,
    pub rho: Vec<usize>,
    pub eta: Vec<usize>,
    pub d2_circ_tilde: Vec<Polynomial>,
    pub d2_minus_tilde: Vec<Polynomial>,
    pub k_shift: usize,
    pub p3: MatPoly,
    pub split3: TriangularSplit,
    /// `N − K + κ`.
    pub exponent: i64,
    pub checks: VerificationReport,
}

fn diag_rational(d: &[Polynomial]) -> RatMatrix {
    MatPoly::diagonal(d).to_rational()
}

fn diag_reciprocal(d: &[Polynomial]) -> RatMatrix {
    RatMatrix::diagonal(&d.iter().map(RationalFunction::reciprocal_argument).collect::<Vec<_>>())
}

fn elementwise_product(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

fn is_unimodular(m: &MatPoly) -> bool {
    let d = m.det();
    d.is_constant() && !d.is_zero()
}

/// Moves common `z`-powers of `P₀` into `k` so that `k > 0` forces
/// `P₀(0) ≠ 0`.
fn normalize_k(k: usize, p0: MatPoly) -> (usize, MatPoly) {
    if k == 0 {
        return (0, p0);
    }
    let j = p0.entries().filter_map(Polynomial::z_valuation).min().unwrap_or(0);
    if j == 0 {
        return (k, p0);
    }
    let take = j.min(k);
    let lowered = p0.map(|p| Polynomial::new(p.coeffs()[take.min(p.coeffs().len())..].to_vec()));
    (k - take, lowered)
}

/// Runs the four-step construction. Every defining identity of the
/// construction is checked exactly; a failed identity is reported as
/// `InvalidFactorization`.
pub fn wh_factorize(omega: &RatMatFun) -> Result<(WHFactorization, PipelineTrace)> {
    let m = omega.size();
    let mut checks = VerificationReport::new();

    // Step 1
    let q = omega.q.clone();
    let q_split = split_q_inverse(&q)?;
    let kappa = q_split.kappa;
    checks.push(
        "step1.q_inverse",
        (&q_split.product() * &RationalFunction::from_poly(q.clone())).is_one(),
        "z^kappa * w- * wo * w+ * q = 1",
    );

    // Step 2
    let p1 = omega.p1.clone();
    let smith1 = smith_decompose(&p1)?;
    let d1 = split_diagonal(&smith1.d)?;
    checks.push("step2.smith", smith1.product() == p1, "E1 D1 F1 = P1");
    checks.push("step2.unimodular", is_unimodular(&smith1.e) && is_unimodular(&smith1.f), "det E1, det F1 constant");

    // Step 3
    let inner = smith1.e.mul(&MatPoly::diagonal(&elementwise_product(&d1.minus, &d1.circ)))?;
    let n = inner.degree().expect("nonsingular product is nonzero");
    let p2 = inner.reverse(n)?;
    let outer_plus = MatPoly::diagonal(&d1.plus).mul(&smith1.f)?;
    let reflection = p2.reverse(n)? == inner && inner.mul(&outer_plus)? == p1;
    checks.push("step3.reflection", reflection, "P1 = z^N P2(1/z) D1+ F1");

    let smith2 = smith_decompose(&p2)?;
    let d2 = split_diagonal(&smith2.d)?;
    checks.push("step3.smith", smith2.product() == p2, "E2 D2 F2 = P2");
    let rho: Vec<usize> = d2.minus.iter().map(|d| d.strip_z().0).collect();
    let minus_pure = d2.minus.iter().zip(&rho).all(|(d, &r)| *d == Polynomial::z_pow(r));
    checks.push("step3.minus_at_zero", minus_pure, "D2- = diag(z^rho_j)");

    let eta: Vec<usize> = d2.circ.iter().map(Polynomial::degree_or_zero).collect();
    let c0: Vec<GaussianRational> = d2.circ.iter().map(Polynomial::at_zero).collect();
    let mut d2_circ_tilde = Vec::with_capacity(m);
    let mut d2_minus_tilde = Vec::with_capacity(m);
    for j in 0..m {
        let inv = c0[j].inv()?;
        d2_circ_tilde.push(d2.circ[j].reverse(eta[j], false)?.scale(&inv));
        d2_minus_tilde.push(Polynomial::monomial(c0[j].clone(), eta[j]));
    }
    let tilde_ok = (0..m).all(|j| {
        let lhs = RationalFunction::reciprocal_argument(&d2.circ[j]);
        let rhs = &RationalFunction::from_poly(d2_circ_tilde[j].clone())
            * &RationalFunction::reciprocal_argument(&d2_minus_tilde[j]);
        lhs == rhs
    });
    checks.push("step3.circ_reflection", tilde_ok, "D2o(1/z) = D~2o(z) D~2-(1/z)");

    // Step 4
    // D~2-(1/z) D2-(1/z) F2(1/z) has row i equal to c_i rev(F2)_i / z^(f + eta_i + rho_i)
    let f = smith2.f.degree().expect("unimodular factor is nonzero");
    let rev_f2 = smith2.f.reverse(f)?;
    let row_shift: Vec<usize> = (0..m).map(|i| f + eta[i] + rho[i]).collect();
    let k_shift = (0..m)
        .flat_map(|i| {
            let s = row_shift[i];
            rev_f2.row(i).iter().filter_map(move |e| e.z_valuation().map(|v| s.saturating_sub(v)))
        })
        .max()
        .unwrap_or(0);
    let p3 = MatPoly::from_fn(m, |i, j| {
        let e = rev_f2.get(i, j).scale(&c0[i]);
        let up = k_shift as i64 - row_shift[i] as i64;
        if e.is_zero() {
            e
        } else if up >= 0 {
            e.shift(up as usize)
        } else {
            Polynomial::new(e.coeffs()[(-up) as usize..].to_vec())
        }
    });
    let det3 = p3.det();
    let (val3, det_rest) = det3.strip_z();
    let det3_ok = det_rest.is_constant() && !det_rest.is_zero();
    checks.push("step4.det_p3", det3_ok, format!("det P3 = {det3}"));
    let split3 = qr_split_at_zero(&p3)?;
    checks.push("step4.split", split3.q.mul(&split3.r)? == p3, "Q3 F3 = P3");
    // det F3 = det P3 / det Q3, and det Q3 = z^(sum n_j) when Q3 has its normal shape
    let q3_shape = split3.q.is_lower_triangular()
        && split3.q.z_power_diagonal().is_some_and(|n| n.iter().sum::<usize>() == val3);
    checks.push("step4.f3_unimodular", det3_ok && q3_shape, "det F3 constant");

    // Assembly
    let e2_rec = smith2.e.at_reciprocal();
    let d2_plus_rec = diag_reciprocal(&d2.plus);
    let plus_tail = split3.r.mul(&outer_plus)?.to_rational();
    let exponent = n as i64 - k_shift as i64 + kappa;
    let (k, p0) = if exponent <= 0 {
        normalize_k((-exponent) as usize, split3.q.clone())
    } else {
        (0, split3.q.map(|p| p.shift(exponent as usize)))
    };
    let omega_minus = e2_rec.mul(&d2_plus_rec)?.scale_fn(&q_split.omega_minus);
    let omega_circ: Vec<RationalFunction> =
        d2_circ_tilde.iter().map(|d| &q_split.omega_circ * &RationalFunction::from_poly(d.clone())).collect();
    let omega_plus = plus_tail.scale_fn(&q_split.omega_plus);
    let fact = WHFactorization { k, omega_minus, omega_circ, p0, omega_plus };
    let reproduced = fact.reproduces(&omega.omega)?;
    checks.push("assembly.omega", reproduced, "z^-k W- Wo P0 W+ = Omega");
    if !reproduced {
        // the omega identity implies this one, so it only runs to localize a failure
        let circ_tilde = diag_rational(&d2_circ_tilde);
        let scalar = RatMatrix::identity(m).scale_fn(&RationalFunction::z_pow(n as i64 - k_shift as i64));
        let assembled = RatMatrix::product_equals(
            &[&scalar, &e2_rec, &d2_plus_rec, &circ_tilde, &split3.q.to_rational(), &plus_tail],
            &p1.to_rational(),
        )?;
        checks.push("assembly.p1", assembled, "P1 = z^(N-K) E2(1/z) D2+(1/z) D~2o Q3 F3 D1+ F1");
    }

    let trace = PipelineTrace {
        q,
        kappa,
        q_split,
        p1,
        smith1,
        d1,
        n,
        p2,
        smith2,
        d2,
        rho,
        eta,
        d2_circ_tilde,
        d2_minus_tilde,
        k_shift,
        p3,
        split3,
        exponent,
        checks,
    };
    if !trace.checks.all_passed() {
        let failed: Vec<&str> = trace.checks.failures().map(|c| c.name.as_str()).collect();
        return Err(Error::InvalidFactorization(format!("construction identities failed: {}", failed.join(", "))));
    }
    Ok((fact, trace))
}
