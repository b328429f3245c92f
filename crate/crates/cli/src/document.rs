//! Input documents and the JSON wire format.
//!
//! Polynomials are arrays of coefficient strings in ascending powers of `z`,
//! each in the `a/b+c/di` form. Rational functions are `{"num", "den"}`
//! pairs of such arrays. Field order is fixed by the struct definitions.

use serde::{Deserialize, Serialize};
use whfact_core::{
    Check, CircleDiagonal, Diagonalization2x2, FredholmReport, GaussianRational, MatPoly, Matrix, PipelineTrace,
    Polynomial, QInverseSplit, RatMatFun, RatMatrix, RationalFunction, SmithDecomposition, TriangularSplit,
    WHFactorization,
};

use crate::parse::{parse_rational_function, ParseError};

/// `{"size": m, "entries": [["1", "1/(z-1)"], ["0", "1"]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    pub size: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("entry ({row}, {col}): {source}")]
    Entry { row: usize, col: usize, source: ParseError },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Domain(#[from] whfact_core::Error),
}

impl InputDocument {
    pub fn from_matrix(omega: &RatMatrix) -> Self {
        InputDocument {
            size: omega.size(),
            entries: omega.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

/// Parses every entry and builds `Ω = P₁/q`.
pub fn parse_matrix(doc: &InputDocument) -> Result<RatMatFun, DocumentError> {
    let m = doc.size;
    if m == 0 || doc.entries.len() != m {
        return Err(DocumentError::Shape(format!("expected {m} rows, found {}", doc.entries.len())));
    }
    let mut rows = Vec::with_capacity(m);
    for (i, row) in doc.entries.iter().enumerate() {
        if row.len() != m {
            return Err(DocumentError::Shape(format!("row {i} has {} entries, expected {m}", row.len())));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, s)| parse_rational_function(s).map_err(|source| DocumentError::Entry { row: i, col: j, source }))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    Ok(RatMatFun::from_entries(rows)?)
}

/// Failure to decode a wire value back into exact objects.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct DecodeError(pub String);

pub fn poly_to_wire(p: &Polynomial) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

pub fn poly_from_wire(c: &[String]) -> Result<Polynomial, DecodeError> {
    let coeffs = c
        .iter()
        .map(|s| s.parse::<GaussianRational>().map_err(|e| DecodeError(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Polynomial::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunWire {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl RatFunWire {
    pub fn new(r: &RationalFunction) -> Self {
        RatFunWire { num: poly_to_wire(r.num()), den: poly_to_wire(r.den()) }
    }

    pub fn decode(&self) -> Result<RationalFunction, DecodeError> {
        RationalFunction::new(poly_from_wire(&self.num)?, poly_from_wire(&self.den)?)
            .map_err(|e| DecodeError(e.to_string()))
    }
}

pub fn matpoly_to_wire(a: &MatPoly) -> Vec<Vec<Vec<String>>> {
    a.rows().iter().map(|r| r.iter().map(poly_to_wire).collect()).collect()
}

pub fn matpoly_from_wire(rows: &[Vec<Vec<String>>]) -> Result<MatPoly, DecodeError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|c| poly_from_wire(c)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::new(rows).map_err(|e| DecodeError(e.to_string()))
}

pub fn ratmat_to_wire(a: &RatMatrix) -> Vec<Vec<RatFunWire>> {
    a.rows().iter().map(|r| r.iter().map(RatFunWire::new).collect()).collect()
}

pub fn ratmat_from_wire(rows: &[Vec<RatFunWire>]) -> Result<RatMatrix, DecodeError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(RatFunWire::decode).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::new(rows).map_err(|e| DecodeError(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationWire {
    pub k: usize,
    #[serde(rename = "Omega_minus")]
    pub omega_minus: Vec<Vec<RatFunWire>>,
    #[serde(rename = "Omega_circ")]
    pub omega_circ: Vec<RatFunWire>,
    #[serde(rename = "P0")]
    pub p0: Vec<Vec<Vec<String>>>,
    #[serde(rename = "Omega_plus")]
    pub omega_plus: Vec<Vec<RatFunWire>>,
}

impl FactorizationWire {
    pub fn new(f: &WHFactorization) -> Self {
        FactorizationWire {
            k: f.k,
            omega_minus: ratmat_to_wire(&f.omega_minus),
            omega_circ: f.omega_circ.iter().map(RatFunWire::new).collect(),
            p0: matpoly_to_wire(&f.p0),
            omega_plus: ratmat_to_wire(&f.omega_plus),
        }
    }

    pub fn decode(&self) -> Result<WHFactorization, DecodeError> {
        Ok(WHFactorization {
            k: self.k,
            omega_minus: ratmat_from_wire(&self.omega_minus)?,
            omega_circ: self.omega_circ.iter().map(RatFunWire::decode).collect::<Result<_, _>>()?,
            p0: matpoly_from_wire(&self.p0)?,
            omega_plus: ratmat_from_wire(&self.omega_plus)?,
        })
    }
}

/// Compact text such as `z-1` or `z^2+1`.
pub fn compact(p: &Polynomial) -> String {
    p.to_string().replace(' ', "")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FredholmWire {
    pub is_fredholm: bool,
    pub index: Option<i64>,
    pub m: usize,
    pub k: usize,
    pub q_degrees: Vec<usize>,
    pub n_exponents: Vec<usize>,
    pub witnesses: Vec<String>,
}

impl FredholmWire {
    pub fn new(r: &FredholmReport) -> Self {
        FredholmWire {
            is_fredholm: r.is_fredholm,
            index: r.index,
            m: r.m,
            k: r.k,
            q_degrees: r.q_degrees.clone(),
            n_exponents: r.n_exponents.clone(),
            witnesses: r.witnesses.iter().map(compact).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithWire {
    pub region: String,
    pub q: Vec<String>,
    #[serde(rename = "E")]
    pub e: Vec<Vec<Vec<String>>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<String>>,
    #[serde(rename = "F")]
    pub f: Vec<Vec<Vec<String>>>,
}

impl SmithWire {
    pub fn new(q: &Polynomial, s: &SmithDecomposition) -> Self {
        SmithWire {
            region: s.region.map_or_else(|| "plane".to_string(), |r| r.to_string()),
            q: poly_to_wire(q),
            e: matpoly_to_wire(&s.e),
            d: s.d.iter().map(poly_to_wire).collect(),
            f: matpoly_to_wire(&s.f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckWire {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub fn checks_to_wire(checks: &[Check]) -> Vec<CheckWire> {
    checks.iter().map(|c| CheckWire { name: c.name.clone(), passed: c.passed, detail: c.detail.clone() }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSplitWire {
    pub kappa: i64,
    pub omega_minus: RatFunWire,
    pub omega_circ: RatFunWire,
    pub omega_plus: RatFunWire,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircleDiagonalWire {
    pub minus: Vec<Vec<String>>,
    pub circ: Vec<Vec<String>>,
    pub plus: Vec<Vec<String>>,
}

impl CircleDiagonalWire {
    fn new(d: &CircleDiagonal) -> Self {
        let f = |v: &[Polynomial]| v.iter().map(poly_to_wire).collect();
        CircleDiagonalWire { minus: f(&d.minus), circ: f(&d.circ), plus: f(&d.plus) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitStepWire {
    #[serde(rename = "Q")]
    pub q: Vec<Vec<Vec<String>>>,
    #[serde(rename = "R")]
    pub r: Vec<Vec<Vec<String>>>,
    #[serde(rename = "L")]
    pub l: Option<Vec<Vec<String>>>,
    pub row: Option<usize>,
    pub ell: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularWire {
    #[serde(rename = "Q")]
    pub q: Vec<Vec<Vec<String>>>,
    #[serde(rename = "R")]
    pub r: Vec<Vec<Vec<String>>>,
    pub n_exponents: Vec<usize>,
    pub steps: Vec<SplitStepWire>,
}

impl TriangularWire {
    fn new(s: &TriangularSplit) -> Self {
        TriangularWire {
            q: matpoly_to_wire(&s.q),
            r: matpoly_to_wire(&s.r),
            n_exponents: s.n_exponents.clone(),
            steps: s
                .steps
                .iter()
                .map(|st| SplitStepWire {
                    q: matpoly_to_wire(&st.q),
                    r: matpoly_to_wire(&st.r),
                    l: st.l.as_ref().map(|l| l.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()),
                    row: st.k,
                    ell: st.ell,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceWire {
    pub q: Vec<String>,
    pub q_split: QSplitWire,
    #[serde(rename = "P1")]
    pub p1: Vec<Vec<Vec<String>>>,
    pub smith1: SmithWire,
    #[serde(rename = "D1")]
    pub d1: CircleDiagonalWire,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "P2")]
    pub p2: Vec<Vec<Vec<String>>>,
    pub smith2: SmithWire,
    #[serde(rename = "D2")]
    pub d2: CircleDiagonalWire,
    pub rho: Vec<usize>,
    pub eta: Vec<usize>,
    #[serde(rename = "D2_circ_tilde")]
    pub d2_circ_tilde: Vec<Vec<String>>,
    #[serde(rename = "D2_minus_tilde")]
    pub d2_minus_tilde: Vec<Vec<String>>,
    #[serde(rename = "K")]
    pub k_shift: usize,
    #[serde(rename = "P3")]
    pub p3: Vec<Vec<Vec<String>>>,
    pub split3: TriangularWire,
    /// `N − K + κ`.
    pub exponent: i64,
    pub checks: Vec<CheckWire>,
}

impl TraceWire {
    pub fn new(t: &PipelineTrace) -> Self {
        let one = Polynomial::one();
        let qs: &QInverseSplit = &t.q_split;
        TraceWire {
            q: poly_to_wire(&t.q),
            q_split: QSplitWire {
                kappa: qs.kappa,
                omega_minus: RatFunWire::new(&qs.omega_minus),
                omega_circ: RatFunWire::new(&qs.omega_circ),
                omega_plus: RatFunWire::new(&qs.omega_plus),
            },
            p1: matpoly_to_wire(&t.p1),
            smith1: SmithWire::new(&one, &t.smith1),
            d1: CircleDiagonalWire::new(&t.d1),
            n: t.n,
            p2: matpoly_to_wire(&t.p2),
            smith2: SmithWire::new(&one, &t.smith2),
            d2: CircleDiagonalWire::new(&t.d2),
            rho: t.rho.clone(),
            eta: t.eta.clone(),
            d2_circ_tilde: t.d2_circ_tilde.iter().map(poly_to_wire).collect(),
            d2_minus_tilde: t.d2_minus_tilde.iter().map(poly_to_wire).collect(),
            k_shift: t.k_shift,
            p3: matpoly_to_wire(&t.p3),
            split3: TriangularWire::new(&t.split3),
            exponent: t.exponent,
            checks: checks_to_wire(&t.checks.checks),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorOutput {
    pub factorization: FactorizationWire,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceWire>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diag2x2Wire {
    pub k1: usize,
    pub k2: usize,
    pub k12: Option<usize>,
    pub p1: Vec<String>,
    pub p2: Vec<String>,
    #[serde(rename = "Omega_minus")]
    pub omega_minus: Vec<Vec<RatFunWire>>,
    pub middle: Vec<RatFunWire>,
    #[serde(rename = "Omega_plus")]
    pub omega_plus: Vec<Vec<RatFunWire>>,
}

impl Diag2x2Wire {
    pub fn new(d: &Diagonalization2x2) -> Self {
        Diag2x2Wire {
            k1: d.k1,
            k2: d.k2,
            k12: d.k12,
            p1: poly_to_wire(&d.p1),
            p2: poly_to_wire(&d.p2),
            omega_minus: ratmat_to_wire(&d.omega_minus),
            middle: d.middle.iter().map(RatFunWire::new).collect(),
            omega_plus: ratmat_to_wire(&d.omega_plus),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyWire {
    pub all_passed: bool,
    pub checks: Vec<CheckWire>,
}
