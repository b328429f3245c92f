//! Scalar rational functions in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::poly::Polynomial;

/// `num / den` with `gcd(num, den) = 1` and `den` monic. The zero function
/// is `0 / 1`. Every constructor normalizes, so `==` is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Cancels common factors and moves the denominator's leading
    /// coefficient into the numerator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            Ok(RationalFunction { num, den })
        } else {
            let inv = lc.inv()?;
            Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
        }
    }

    /// `num / den` for coprime parts; only the denominator is made monic.
    fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lc.inv().expect("nonzero denominator");
        RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    /// `z^k` for any integer `k`.
    pub fn z_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Polynomial::z_pow(k as usize))
        } else {
            RationalFunction { num: Polynomial::one(), den: Polynomial::z_pow((-k) as usize) }
        }
    }

    /// `p(1/z)` written as `z^{deg p} p(1/z) / z^{deg p}`.
    pub fn reciprocal_argument(p: &Polynomial) -> Self {
        let d = p.degree_or_zero();
        let num = p.reverse(d, false).expect("degree fits");
        Self::new(num, Polynomial::z_pow(d)).expect("nonzero denominator")
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Finite at infinity: `deg num ≤ deg den`.
    pub fn is_proper(&self) -> bool {
        self.num.degree() <= self.den.degree()
    }

    /// Is this a polynomial in `1/z`, i.e. `den = z^a` and `deg num ≤ a`?
    pub fn is_polynomial_in_inverse(&self) -> bool {
        let (v, rest) = self.den.strip_z();
        rest.is_one() && self.num.degree().is_none_or(|d| d <= v)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        // coprime parts stay coprime under powers
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn eval(&self, x: &GaussianRational) -> Result<GaussianRational> {
        self.num.eval(x).checked_div(&self.den.eval(x))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl<'b> Add<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'b RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        // with g = gcd(d1, d2), only gcd(numerator, g) can cancel
        let g = self.den.gcd(&rhs.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        RationalFunction::from_coprime(num, &(&a * &b) * &g)
    }
}

impl<'b> Sub<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'b RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'b RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        // operands are reduced, so cross cancellation suffices
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RationalFunction::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

fn cancel(num: &Polynomial, den: &Polynomial) -> (Polynomial, Polynomial) {
    let g = num.gcd(den);
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

fn needs_parens(p: &Polynomial) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
}

/// `num` alone for polynomials, otherwise `(num)/(den)` with parentheses
/// only where a sum needs them.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            let s = p.to_string();
            if needs_parens(p) || s.starts_with('-') || s.contains('*') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
