//! Root location relative to the unit circle and the splitting of scalar
//! polynomials into inside, on-circle and outside parts.

mod approx;
mod gaussint;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use gaussint::GaussInt;

/// Where the roots of a factor lie. Zero counts as inside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootLocus {
    InsideDisk,
    OnCircle,
    OutsideDisk,
}

impl fmt::Display for RootLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootLocus::InsideDisk => "InsideDisk",
            RootLocus::OnCircle => "OnCircle",
            RootLocus::OutsideDisk => "OutsideDisk",
        })
    }
}

/// `|root|²` against 1, exactly.
pub fn locate_linear(root: &GaussianRational) -> RootLocus {
    match root.norm().cmp(&BigRational::one()) {
        std::cmp::Ordering::Less => RootLocus::InsideDisk,
        std::cmp::Ordering::Equal => RootLocus::OnCircle,
        std::cmp::Ordering::Greater => RootLocus::OutsideDisk,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocatedFactor {
    pub factor: Polynomial,
    pub multiplicity: usize,
    pub locus: RootLocus,
}

/// `constant · ∏ factorᵢ^multiplicityᵢ`, factors sorted by degree and then
/// by coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPolynomial {
    pub constant: GaussianRational,
    pub factors: Vec<LocatedFactor>,
}

impl FactoredPolynomial {
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.constant.clone());
        for f in &self.factors {
            acc = &acc * &f.factor.pow(f.multiplicity as u32);
        }
        acc
    }

    /// Product of the factors carrying `locus`, monic.
    pub fn part(&self, locus: RootLocus) -> Polynomial {
        self.factors
            .iter()
            .filter(|f| f.locus == locus)
            .map(|f| f.factor.pow(f.multiplicity as u32))
            .product()
    }
}

/// Output of the `Q(i)` root search before residuals are certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QiFactorization {
    pub constant: GaussianRational,
    /// Linear factors `z − r` with `r ∈ Q(i)`, plus `z` itself.
    pub linear: Vec<LocatedFactor>,
    /// Monic squarefree factors with no root in `Q(i)`, with multiplicity.
    pub residual: Vec<(Polynomial, usize)>,
}

fn sort_factors(v: &mut [LocatedFactor]) {
    v.sort_by(|a, b| {
        a.factor
            .degree()
            .cmp(&b.factor.degree())
            .then_with(|| a.factor.coeffs().cmp(b.factor.coeffs()))
    });
}

/// Scales `p` to coefficients in `Z[i]`.
fn integral_coeffs(p: &Polynomial) -> Vec<GaussInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let l = BigRational::from_integer(l);
    p.coeffs()
        .iter()
        .map(|c| {
            let re = c.re() * &l;
            let im = c.im() * &l;
            GaussInt { re: re.to_integer(), im: im.to_integer() }
        })
        .collect()
}

fn to_field(a: &GaussInt) -> GaussianRational {
    GaussianRational::new(BigRational::from_integer(a.re.clone()), BigRational::from_integer(a.im.clone()))
}

/// Above this many rational-root-theorem candidates only the numerically
/// proposed ones are tried.
const DIVISOR_CANDIDATE_LIMIT: usize = 4096;

fn try_root(rest: &mut Polynomial, roots: &mut Vec<GaussianRational>, r: GaussianRational) {
    if rest.degree_or_zero() > 0 && rest.eval(&r).is_zero() {
        *rest = rest.div_exact(&Polynomial::linear(&r)).expect("root divides");
        roots.push(r);
    }
}

/// Roots in `Q(i)` of a squarefree `p` with `p(0) ≠ 0`, and the cofactor.
///
/// Candidates come first from rounding `lc · r` for numerical roots `r`;
/// the full divisor enumeration runs on what is left when it is small.
fn qi_roots(p: &Polynomial) -> (Vec<GaussianRational>, Polynomial) {
    let mut rest = p.clone();
    let mut roots = Vec::new();
    if rest.degree_or_zero() == 0 {
        return (roots, rest);
    }
    let ints = integral_coeffs(&rest);
    let lc = to_field(ints.last().expect("nonconstant"));
    for w in approx::scaled_candidates(&ints) {
        try_root(&mut rest, &mut roots, &to_field(&w) / &lc);
    }
    if rest.degree_or_zero() == 0 {
        return (roots, rest);
    }
    let ints = integral_coeffs(&rest);
    let (Some(nums), Some(dens)) =
        (gaussint::divisors(&ints[0]), gaussint::divisors(ints.last().expect("nonconstant")))
    else {
        return (roots, rest);
    };
    if nums.len() * 4 * dens.len() > DIVISOR_CANDIDATE_LIMIT {
        return (roots, rest);
    }
    let mut candidates = BTreeSet::new();
    for u in &nums {
        for ua in u.associates() {
            for v in &dens {
                candidates.insert(&to_field(&ua) / &to_field(v));
            }
        }
    }
    for r in candidates {
        if rest.degree_or_zero() == 0 {
            break;
        }
        try_root(&mut rest, &mut roots, r);
    }
    (roots, rest)
}

/// Extracts every linear factor over `Q(i)`; what remains is left for
/// [`certify_locus`].
pub fn factor_over_qi(p: &Polynomial) -> Result<QiFactorization> {
    if p.is_zero() {
        return Err(Error::PreconditionViolated("cannot factor the zero polynomial".into()));
    }
    let constant = p.leading_coeff();
    let (v, core) = p.strip_z();
    let mut linear = Vec::new();
    let mut residual = Vec::new();
    if v > 0 {
        linear.push(LocatedFactor { factor: Polynomial::z(), multiplicity: v, locus: RootLocus::InsideDisk });
    }
    for (f, m) in core.squarefree() {
        let (roots, rest) = qi_roots(&f);
        for r in roots {
            linear.push(LocatedFactor { factor: Polynomial::linear(&r), multiplicity: m, locus: locate_linear(&r) });
        }
        if !rest.is_constant() {
            residual.push((rest.monic(), m));
        }
    }
    sort_factors(&mut linear);
    residual.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs())));
    Ok(QiFactorization { constant, linear, residual })
}

/// Number of roots of `p` strictly inside the unit disk, by the Schur–Cohn
/// reflection recursion. Needs `p` free of roots on the circle.
///
/// A step with `|a₀| = |aₙ|` stalls the plain recursion. Such steps are
/// non-generic, so on a stall the count is retried on `(z − c)·p` for a few
/// fixed `c` off the circle before giving up.
pub fn schur_cohn_inside_count(p: &Polynomial) -> Result<usize> {
    let err = match schur_cohn_raw(p) {
        Ok(k) => return Ok(k),
        Err(e) => e,
    };
    let shifts = [
        GaussianRational::ratio(1, 2),
        GaussianRational::from_int(2),
        GaussianRational::complex(1, 3, 1, 5),
        GaussianRational::complex(3, 1, 2, 1),
        GaussianRational::ratio(-2, 7),
        GaussianRational::complex(-5, 2, 1, 3),
    ];
    for c in shifts {
        let inside = locate_linear(&c) == RootLocus::InsideDisk;
        if let Ok(k) = schur_cohn_raw(&(&Polynomial::linear(&c) * p)) {
            return Ok(if inside { k - 1 } else { k });
        }
    }
    Err(err)
}

fn schur_cohn_raw(p: &Polynomial) -> Result<usize> {
    let singular = || Error::SingularSchurCohn { factor: p.to_string() };
    // inside(p) = offset + sign·inside(current)
    let mut cur = p.clone();
    let mut offset: i64 = 0;
    let mut sign: i64 = 1;
    loop {
        let n = match cur.degree() {
            None => return Err(singular()),
            Some(0) => return Ok(offset as usize),
            Some(n) => n,
        };
        let a0 = cur.at_zero();
        let an = cur.leading_coeff();
        let delta = a0.norm() - an.norm();
        let t = &cur.scale(&a0.conj()) - &cur.conj_reverse().scale(&an);
        if delta.is_zero() || t.is_zero() {
            return Err(singular());
        }
        if delta < BigRational::zero() {
            offset += sign * n as i64;
            sign = -sign;
        }
        cur = t;
    }
}

/// Common locus of all roots of a squarefree `p`, certified exactly.
///
/// Splits off `g = gcd(p, p*)` where `p*` is the conjugate reversal; roots
/// of `g` come in pairs `α, 1/ᾱ` or lie on the circle. A self-reciprocal
/// `g` has every root on the circle iff its derivative has all `deg g − 1`
/// roots inside the closed disk.
pub fn certify_locus(p: &Polynomial) -> Result<RootLocus> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::PreconditionViolated(format!("{p} has no roots to locate"))),
    };
    let p = p.monic();
    let mixed = || Error::MixedLocationFactor { factor: p.to_string() };
    let (v, core) = p.strip_z();
    if v > 0 {
        if core.is_constant() || certify_locus(&core)? == RootLocus::InsideDisk {
            return Ok(RootLocus::InsideDisk);
        }
        return Err(mixed());
    }
    let g = p.gcd(&p.conj_reverse());
    if g.is_constant() {
        let inside = schur_cohn_inside_count(&p)?;
        return match inside {
            0 => Ok(RootLocus::OutsideDisk),
            k if k == n => Ok(RootLocus::InsideDisk),
            _ => Err(mixed()),
        };
    }
    if g.degree_or_zero() == n {
        // Cohn: a self-inversive polynomial has all roots on T iff its
        // derivative has all roots in the closed disk. A singular step means
        // the derivative touches T, which cannot happen for squarefree p with
        // all roots on T, so that case is mixed as well.
        return match schur_cohn_inside_count(&p.derivative()) {
            Ok(k) if k == n - 1 => Ok(RootLocus::OnCircle),
            _ => Err(mixed()),
        };
    }
    let h = p.div_exact(&g)?;
    let lg = certify_locus(&g).map_err(|_| mixed())?;
    let lh = certify_locus(&h).map_err(|e| if matches!(e, Error::SingularSchurCohn { .. }) { e } else { mixed() })?;
    if lg == lh {
        Ok(lg)
    } else {
        Err(mixed())
    }
}

/// Full located factorization: `Q(i)` roots plus certified residuals.
pub fn factor_located(p: &Polynomial) -> Result<FactoredPolynomial> {
    let qi = factor_over_qi(p)?;
    let mut factors = qi.linear;
    for (f, m) in qi.residual {
        let locus = certify_locus(&f)?;
        factors.push(LocatedFactor { factor: f, multiplicity: m, locus });
    }
    sort_factors(&mut factors);
    Ok(FactoredPolynomial { constant: qi.constant, factors })
}

/// `p = constant · minus · circ · plus` with monic parts whose roots lie
/// inside, on and outside the unit circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleSplit {
    pub constant: GaussianRational,
    pub minus: Polynomial,
    pub circ: Polynomial,
    pub plus: Polynomial,
}

pub fn split_by_circle(p: &Polynomial) -> Result<CircleSplit> {
    let f = factor_located(p)?;
    Ok(CircleSplit {
        constant: f.constant.clone(),
        minus: f.part(RootLocus::InsideDisk),
        circ: f.part(RootLocus::OnCircle),
        plus: f.part(RootLocus::OutsideDisk),
    })
}

/// `1/q = z^κ · ω₋ · ω∘ · ω₊`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInverseSplit {
    pub kappa: i64,
    pub omega_minus: RationalFunction,
    pub omega_circ: RationalFunction,
    pub omega_plus: RationalFunction,
}

impl QInverseSplit {
    pub fn product(&self) -> RationalFunction {
        &(&(&RationalFunction::z_pow(self.kappa) * &self.omega_minus) * &self.omega_circ) * &self.omega_plus
    }
}

/// κ = −deg q₋, ω₋ = z^{deg q₋}/q₋, ω∘ = 1/q∘, and ω₊ = 1/(c·q₊) carries the
/// leading coefficient so the product is exactly `1/q`.
pub fn split_q_inverse(q: &Polynomial) -> Result<QInverseSplit> {
    let s = split_by_circle(q)?;
    let dm = s.minus.degree_or_zero();
    Ok(QInverseSplit {
        kappa: -(dm as i64),
        omega_minus: RationalFunction::new(Polynomial::z_pow(dm), s.minus)?,
        omega_circ: RationalFunction::new(Polynomial::one(), s.circ)?,
        omega_plus: RationalFunction::new(Polynomial::one(), s.plus.scale(&s.constant))?,
    })
}
