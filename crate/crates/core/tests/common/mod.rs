#![allow(dead_code)]

use proptest::prelude::*;
use whfact_core::{GaussianRational, MatPoly, Polynomial, RatMatFun, RatMatrix, RationalFunction};

/// Roots of the allowed linear factors: 0, ±1, ±i, ±1/2, ±2.
pub fn factor(idx: usize) -> Polynomial {
    let root = match idx {
        0 => GaussianRational::from_int(0),
        1 => GaussianRational::from_int(1),
        2 => GaussianRational::from_int(-1),
        3 => GaussianRational::i(),
        4 => -GaussianRational::i(),
        5 => GaussianRational::ratio(1, 2),
        6 => GaussianRational::ratio(-1, 2),
        7 => GaussianRational::from_int(2),
        _ => GaussianRational::from_int(-2),
    };
    Polynomial::linear(&root)
}

pub const FACTORS: usize = 9;

/// Fixed seed for the property suites. Exact arithmetic has rare slow cases,
/// so a stable seed keeps the suite time predictable.
pub const SEED: u64 = 0x5eed_2026;

pub fn product(idxs: &[usize]) -> Polynomial {
    idxs.iter().fold(Polynomial::one(), |acc, &i| &acc * &factor(i))
}

/// (zero?, constant, numerator factors, denominator factors)
pub type EntryPlan = (bool, i64, Vec<usize>, Vec<usize>);

pub fn entry_strategy() -> impl Strategy<Value = EntryPlan> {
    sized_entry_strategy(2)
}

/// Entries with at most `max_factors` linear factors above and below.
pub fn sized_entry_strategy(max_factors: usize) -> impl Strategy<Value = EntryPlan> {
    (
        prop::bool::weighted(0.25),
        prop_oneof![Just(1i64), Just(-1), Just(2), Just(3)],
        prop::collection::vec(0..FACTORS, 0..=max_factors),
        prop::collection::vec(0..FACTORS, 0..=max_factors),
    )
}

pub fn build_entry((zero, c, num, den): &EntryPlan) -> RationalFunction {
    if *zero {
        return RationalFunction::zero();
    }
    let n = product(num).scale(&GaussianRational::from_int(*c));
    RationalFunction::new(n, product(den)).unwrap()
}

/// `E · diag(d) · F` with polynomial unimodular shears `E`, `F`, so every
/// invariant factor of `qΩ` is a product of the allowed linear factors.
#[derive(Clone, Debug)]
pub struct OmegaPlan {
    pub diag: Vec<EntryPlan>,
    pub left: Vec<(usize, usize, Vec<i64>)>,
    pub right: Vec<(usize, usize, Vec<i64>)>,
}

/// 3×3 cases get fewer factors and shears: the exact transforms of the
/// pipeline grow quickly with the degree of `qΩ`.
pub fn omega_strategy() -> impl Strategy<Value = OmegaPlan> {
    (2usize..=3).prop_flat_map(|m| {
        let (factors, shears) = if m == 2 { (2, 2) } else { (1, 2) };
        let nonzero = sized_entry_strategy(factors).prop_map(|(_, c, n, d)| (false, c, n, d));
        (prop::collection::vec(nonzero, m), sized_shear_strategy(shears), sized_shear_strategy(shears))
            .prop_map(|(diag, left, right)| OmegaPlan { diag, left, right })
    })
}

pub fn poly_shears(m: usize, shears: &[(usize, usize, Vec<i64>)]) -> MatPoly {
    let mut u = MatPoly::identity(m);
    for (i, j, c) in shears {
        let (i, j) = (i % m, j % m);
        if i != j {
            u.add_row_multiple(i, j, &small_poly(c));
        }
    }
    u
}

pub fn build_omega(plan: &OmegaPlan) -> RatMatFun {
    let m = plan.diag.len();
    let d = RatMatrix::diagonal(&plan.diag.iter().map(build_entry).collect::<Vec<_>>());
    let e = poly_shears(m, &plan.left).to_rational();
    let f = poly_shears(m, &plan.right).transpose().to_rational();
    RatMatFun::from_matrix(RatMatrix::product(&[&e, &d, &f]).unwrap()).unwrap()
}

fn small_poly(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(coeffs)
}

/// Product of elementary plus units: polynomial shears, a permutation and
/// a scalar (z − 2)/(z + 2).
pub fn plus_unit(m: usize, shears: &[(usize, usize, Vec<i64>)], scalar: bool) -> RatMatrix {
    let mut r = poly_shears(m, shears).to_rational();
    if scalar {
        let s = RationalFunction::new(small_poly(&[-2, 1]), small_poly(&[2, 1])).unwrap();
        r = r.scale_fn(&s);
    }
    r
}

/// Product of elementary minus units: shears by polynomials in 1/z and a
/// scalar (z − 1/2)/z.
pub fn minus_unit(m: usize, shears: &[(usize, usize, Vec<i64>)], scalar: bool) -> RatMatrix {
    let mut u = RatMatrix::identity(m);
    for (i, j, c) in shears {
        let (i, j) = (i % m, j % m);
        if i != j {
            let f = RationalFunction::new(small_poly(c), Polynomial::z_pow(c.len().saturating_sub(1))).unwrap();
            u.add_row_multiple(i, j, &f);
        }
    }
    if scalar {
        let s = RationalFunction::new(Polynomial::linear(&GaussianRational::ratio(1, 2)), Polynomial::z()).unwrap();
        u = u.scale_fn(&s);
    }
    u
}

pub fn shear_strategy() -> impl Strategy<Value = Vec<(usize, usize, Vec<i64>)>> {
    sized_shear_strategy(2)
}

pub fn sized_shear_strategy(max: usize) -> impl Strategy<Value = Vec<(usize, usize, Vec<i64>)>> {
    prop::collection::vec((0usize..3, 0usize..3, prop::collection::vec(-2i64..=2, 1..=2)), 1..=max)
}

/// Nonsingular polynomial matrix `E · diag(d) · F` with `d_j` products of
/// the allowed linear factors and polynomial shears `E`, `F`.
#[derive(Clone, Debug)]
pub struct MatPolyPlan {
    pub diag: Vec<Vec<usize>>,
    pub left: Vec<(usize, usize, Vec<i64>)>,
    pub right: Vec<(usize, usize, Vec<i64>)>,
}

pub fn matpoly_strategy() -> impl Strategy<Value = MatPolyPlan> {
    (2usize..=3).prop_flat_map(|m| {
        let max = if m == 2 { 3 } else { 2 };
        (
            prop::collection::vec(prop::collection::vec(0..FACTORS, 0..=max), m),
            sized_shear_strategy(2),
            sized_shear_strategy(2),
        )
            .prop_map(|(diag, left, right)| MatPolyPlan { diag, left, right })
    })
}

pub fn build_matpoly(plan: &MatPolyPlan) -> MatPoly {
    let m = plan.diag.len();
    let d = MatPoly::diagonal(&plan.diag.iter().map(|f| product(f)).collect::<Vec<_>>());
    let e = poly_shears(m, &plan.left);
    let f = poly_shears(m, &plan.right).transpose();
    MatPoly::product(&[&e, &d, &f]).unwrap()
}

/// Multiplicity of `root` as a zero of `p ≠ 0`.
pub fn multiplicity(p: &Polynomial, root: &GaussianRational) -> usize {
    let lin = Polynomial::linear(root);
    let mut p = p.clone();
    let mut k = 0;
    while lin.divides(&p) {
        p = p.div_exact(&lin).unwrap();
        k += 1;
    }
    k
}

/// Nonzero roots of the allowed factors.
pub fn nonzero_roots() -> Vec<GaussianRational> {
    (1..FACTORS).map(|i| -factor(i).at_zero()).collect()
}

/// (n exponents, fill coefficients, shears of the regular factor)
pub type PlantedPlan = (Vec<usize>, Vec<Vec<i64>>, Vec<(usize, usize, Vec<i64>)>);

/// Lower-triangular `Q₀` with diagonal `z^{n_i}` and fill of degree below `n_i`.
pub fn planted_q(n: &[usize], fill: &[Vec<i64>]) -> MatPoly {
    let m = n.len();
    let mut fill = fill.iter().cycle();
    MatPoly::from_fn(m, |i, j| {
        if i == j {
            Polynomial::z_pow(n[i])
        } else if j < i {
            let c: Vec<i64> = fill.next().unwrap().iter().take(n[i]).copied().collect();
            Polynomial::from_ints(&c)
        } else {
            Polynomial::zero()
        }
    })
}

pub fn planted_strategy() -> impl Strategy<Value = PlantedPlan> {
    (2usize..=3).prop_flat_map(|m| {
        (
            prop::collection::vec(0usize..=3, m),
            prop::collection::vec(prop::collection::vec(-2i64..=2, 0..=3), 1..=3),
            shear_strategy(),
        )
    })
}
