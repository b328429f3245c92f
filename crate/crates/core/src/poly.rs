//! Dense univariate polynomials over `Q(i)` in the variable `z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::GaussianRational;

/// Coefficients in ascending order: `coeffs[j]` multiplies `z^j`.
///
/// The zero polynomial is the empty vector and has no degree; `Option`'s
/// ordering (`None < Some(_)`) makes it smaller than every real degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    /// `c·z^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// `z^k`.
    pub fn z_pow(k: usize) -> Self {
        Self::monomial(GaussianRational::one(), k)
    }

    /// The monic linear factor `z - root`.
    pub fn linear(root: &GaussianRational) -> Self {
        Polynomial { coeffs: vec![-root, GaussianRational::one()] }
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    pub fn coeff(&self, j: usize) -> GaussianRational {
        self.coeffs.get(j).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.coeffs.last().cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Constant term `p(0)`.
    pub fn at_zero(&self) -> GaussianRational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Scaled to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn conj(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(GaussianRational::conj).collect() }
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * &GaussianRational::from_int(j as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Multiplicity of the root `0`; `None` for the zero polynomial.
    pub fn z_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Splits `p = z^v · p̂` with `p̂(0) ≠ 0`.
    pub fn strip_z(&self) -> (usize, Polynomial) {
        match self.z_valuation() {
            None => (0, Self::zero()),
            Some(v) => (v, Polynomial { coeffs: self.coeffs[v..].to_vec() }),
        }
    }

    /// Long division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = divisor.leading_coeff().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::PreconditionViolated(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        // z-power shortcut: gcd(z^k, p) = z^{min(k, val p)}
        for (a, b) in [(self, other), (other, self)] {
            let (k, rest) = a.strip_z();
            if rest.is_constant() {
                return Self::z_pow(k.min(b.z_valuation().unwrap_or(k)));
            }
        }
        if crate::modp::certainly_coprime(&self.coeffs, &other.coeffs) {
            return Self::one();
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Monic least common multiple; zero if either argument is zero.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self * &other.div_exact(&g).expect("gcd divides")).monic()
    }

    /// Squarefree decomposition (Yun). Returns monic, pairwise coprime,
    /// squarefree `(fᵢ, mᵢ)` with `p = lc(p)·∏ fᵢ^mᵢ`, ordered by
    /// multiplicity.
    pub fn squarefree(&self) -> Vec<(Polynomial, usize)> {
        let f = self.monic();
        if f.is_constant() {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut mult = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            let b_next = b.div_exact(&a).expect("gcd divides");
            let c_next = d.div_exact(&a).expect("gcd divides");
            d = &c_next - &b_next.derivative();
            if !a.is_constant() {
                out.push((a, mult));
            }
            b = b_next;
            mult += 1;
        }
        out
    }

    /// `z^n · p(1/z)`, optionally with conjugated coefficients. The
    /// conjugated reversal maps a root `α ≠ 0` to `1/ᾱ`.
    pub fn reverse(&self, n: usize, conjugate: bool) -> Result<Polynomial> {
        let Some(d) = self.degree() else {
            return Ok(Self::zero());
        };
        if n < d {
            return Err(Error::ReverseDegreeTooSmall { degree: d, requested: n });
        }
        let mut coeffs = vec![GaussianRational::zero(); n - d];
        coeffs.extend(self.coeffs.iter().rev().map(|c| if conjugate { c.conj() } else { c.clone() }));
        Ok(Self::new(coeffs))
    }

    /// `z^{deg p} · conj(p(1/z̄))`.
    pub fn conj_reverse(&self) -> Polynomial {
        self.reverse(self.degree_or_zero(), true).expect("degree fits")
    }

    /// `u` with `deg u < s` and `p·u ≡ 1 (mod z^s)`; needs `p(0) ≠ 0`.
    pub fn inverse_mod_z_pow(&self, s: usize) -> Result<Polynomial> {
        let c0 = self.at_zero();
        let c0_inv = c0.inv().map_err(|_| {
            Error::PreconditionViolated(format!("{self} vanishes at 0, no inverse modulo z^{s}"))
        })?;
        let mut u: Vec<GaussianRational> = Vec::with_capacity(s);
        for k in 0..s {
            let mut acc = if k == 0 { GaussianRational::one() } else { GaussianRational::zero() };
            for j in 1..=k {
                acc -= &(&self.coeff(j) * &u[k - j]);
            }
            u.push(&acc * &c0_inv);
        }
        Ok(Self::new(u))
    }
}

impl<'b> Add<&'b Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'b Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl<'b> Sub<&'b Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'b Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, GaussianRational::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Polynomial::new(coeffs)
    }
}

/// Coefficients as `(re, im)` integer pairs over one common denominator.
fn integral_parts(coeffs: &[GaussianRational]) -> (Vec<(BigInt, BigInt)>, BigInt) {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let scale = |r: &BigRational| r.numer() * (&l / r.denom());
    (coeffs.iter().map(|c| (scale(c.re()), scale(c.im()))).collect(), l)
}

impl<'b> Mul<&'b Polynomial> for &Polynomial {
    type Output = Polynomial;
    /// Convolution over `Z[i]` after clearing denominators, so the only
    /// gcds are the final reductions.
    fn mul(self, rhs: &'b Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (a, la) = integral_parts(&self.coeffs);
        let (b, lb) = integral_parts(&rhs.coeffs);
        let len = a.len() + b.len() - 1;
        let mut re = vec![BigInt::zero(); len];
        let mut im = vec![BigInt::zero(); len];
        for (i, (ar, ai)) in a.iter().enumerate() {
            let (ar_zero, ai_zero) = (ar.is_zero(), ai.is_zero());
            if ar_zero && ai_zero {
                continue;
            }
            for (j, (br, bi)) in b.iter().enumerate() {
                if !ar_zero {
                    if !br.is_zero() {
                        re[i + j] += ar * br;
                    }
                    if !bi.is_zero() {
                        im[i + j] += ar * bi;
                    }
                }
                if !ai_zero {
                    if !bi.is_zero() {
                        re[i + j] -= ai * bi;
                    }
                    if !br.is_zero() {
                        im[i + j] += ai * br;
                    }
                }
            }
        }
        let den = la * lb;
        let coeffs = re
            .into_iter()
            .zip(im)
            .map(|(r, i)| GaussianRational::new(BigRational::new(r, den.clone()), BigRational::new(i, den.clone())))
            .collect();
        Polynomial::new(coeffs)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

/// Coefficient as it appears inside an expression; complex values are
/// parenthesized and imaginary parts written with `*i` when fractional so
/// that the output re-parses to the same value.
pub(crate) fn coeff_expr(c: &GaussianRational) -> String {
    use num_traits::Signed;
    if c.is_real() {
        return c.to_string();
    }
    let im = c.im();
    let im_abs = im.abs();
    let im_str = if im_abs.is_one() {
        "i".to_string()
    } else if im_abs.is_integer() {
        format!("{}i", im_abs.numer())
    } else {
        format!("{}/{}*i", im_abs.numer(), im_abs.denom())
    };
    let sign = if im.is_negative() { "-" } else { "" };
    if c.re().is_zero() {
        format!("({sign}{im_str})")
    } else {
        let sign = if im.is_negative() { "-" } else { "+" };
        format!("({}{sign}{im_str})", GaussianRational::from_real(c.re().clone()))
    }
}

/// Human-readable expression such as `z^3 + z^2 - z` or `(1+i)*z - 1/2`.
/// The output is accepted by the CLI's expression parser.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_real() && c.re().is_negative();
            let mag = if negative { -c } else { c.clone() };
            let sep = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let body = if k == 0 {
                coeff_expr(&mag)
            } else if mag.is_one() {
                var
            } else {
                format!("{}*{var}", coeff_expr(&mag))
            };
            write!(f, "{sep}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
