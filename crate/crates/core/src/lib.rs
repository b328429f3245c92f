//! Exact Wiener–Hopf factorization of rational matrix functions over the
//! Gaussian rationals `Q(i)`.

pub mod error;
pub mod field;
pub mod fredholm;
pub mod locus;
pub mod matpoly;
mod modp;
pub mod pipeline;
pub mod poly;
pub mod ratfun;
pub mod ratmat;
pub mod report;
pub mod smith;
pub mod triangular;

pub use error::{Error, Result};
pub use field::GaussianRational;
pub use fredholm::{fredholm_of, fredholm_report, FredholmReport};
pub use locus::{
    certify_locus, factor_located, factor_over_qi, locate_linear, schur_cohn_inside_count, split_by_circle,
    split_q_inverse, CircleSplit, FactoredPolynomial, LocatedFactor, QInverseSplit, QiFactorization, RootLocus,
};
pub use matpoly::{MatPoly, Matrix, RingElem};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use ratmat::RatMatrix;
pub use report::{Check, VerificationReport};
pub use smith::{
    regional_smith, smith_decompose, smith_invariants_via_minors, split_diagonal, verify_smith, CircleDiagonal, Region,
    SmithDecomposition,
};
pub use triangular::{qr_split_at_zero, verify_triangular_split, TriangularSplit, TriangularStep};
pub use pipeline::{
    diagonalize_2x2, is_minus_function, is_minus_unit, is_plus_function, is_plus_unit, verify_structure, verify_wh,
    wh_factorize, Diagonalization2x2, PipelineTrace, RatMatFun, WHFactorization,
};
