//! Exact arithmetic on integer-coefficient polynomials in a single variable `a`.
//!
//! Coefficients are arbitrary-precision integers stored densely in ascending
//! degree order. The zero polynomial stores an empty coefficient list.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("quotient or remainder has non-integer coefficients")]
    NonIntegerQuotient,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Dense integer polynomial, canonical form: no trailing zero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The variable `a` itself.
    pub fn var() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `a^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `a^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Quotient and remainder with `degree(rem) < degree(divisor)`.
    ///
    /// Monic divisors use synthetic division over the integers; otherwise the
    /// division runs over the rationals and fails if the results are not
    /// integer polynomials.
    pub fn divrem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly), PolyError> {
        let d = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        if self.degree().map_or(true, |n| n < d) {
            return Ok((IntPoly::zero(), self.clone()));
        }
        if divisor.is_monic() {
            let n = self.degree().unwrap();
            let mut rem = self.coeffs.clone();
            let mut quo = vec![BigInt::zero(); n - d + 1];
            for i in (d..=n).rev() {
                let q = std::mem::replace(&mut rem[i], BigInt::zero());
                if q.is_zero() {
                    continue;
                }
                for (j, c) in divisor.coeffs.iter().enumerate().take(d) {
                    rem[i - d + j] -= &q * c;
                }
                quo[i - d] = q;
            }
            rem.truncate(d);
            return Ok((IntPoly::from_coeffs(quo), IntPoly::from_coeffs(rem)));
        }
        // Non-monic: divide over Q, then insist on integrality.
        let lc = divisor.leading_coeff();
        let n = self.degree().unwrap();
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut quo = vec![BigRational::zero(); n - d + 1];
        for i in (d..=n).rev() {
            let q = std::mem::replace(&mut rem[i], BigRational::zero())
                / BigRational::from_integer(lc.clone());
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate().take(d) {
                rem[i - d + j] -= &q * BigRational::from_integer(c.clone());
            }
            quo[i - d] = q;
        }
        rem.truncate(d);
        let to_int = |v: Vec<BigRational>| -> Result<IntPoly, PolyError> {
            let coeffs = v
                .into_iter()
                .map(|r| {
                    if r.is_integer() {
                        Ok(r.to_integer())
                    } else {
                        Err(PolyError::NonIntegerQuotient)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(IntPoly::from_coeffs(coeffs))
        };
        Ok((to_int(quo)?, to_int(rem)?))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NonIntegerQuotient)
        }
    }

    /// p(q(a)) by Horner over the outer coefficients.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPoly::constant(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Gcd of the coefficients, with the sign of the leading coefficient.
    /// Content of the zero polynomial is zero.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading_coeff().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Divides out the content; the result has positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let content = self.content();
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Decimal coefficient strings, ascending by degree.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! owned_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add, add; Sub, sub; Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "a")?;
                    } else {
                        write!(f, "a^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Pseudo-remainder: rem(lc(q)^(deg p - deg q + 1) * p, q), all over the integers.
fn pseudo_rem(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let d = q.degree().expect("nonzero divisor");
    let lc = q.leading_coeff();
    let mut rem = p.clone();
    while let Some(n) = rem.degree() {
        if n < d {
            break;
        }
        let coef = rem.leading_coeff();
        rem = &rem.scale(&lc) - &q.scale(&coef).shift(n - d);
        debug_assert!(rem.degree().map_or(true, |m| m < n));
    }
    rem
}

/// Primitive gcd over the rationals: positive leading coefficient, content 1.
pub fn gcd_primitive(p: &IntPoly, q: &IntPoly) -> Result<IntPoly, PolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::BothZero);
    }
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
    Ok(a)
}

/// Square-free decomposition: `input = content * prod factor_i ^ mult_i`
/// with the factors pairwise coprime, square-free, primitive, positive-leading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (factor, mult) in &self.factors {
            for _ in 0..*mult {
                acc = &acc * factor;
            }
        }
        acc
    }
}

/// Yun's algorithm on the primitive part.
pub fn squarefree_decomposition(p: &IntPoly) -> Result<SquarefreeDecomposition, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let content = p.content();
    let f = p.primitive_part();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { content, factors });
    }
    let df = f.derivative();
    let g = gcd_primitive(&f, &df)?;
    let mut c = f.div_exact(&g)?;
    let mut d = &df.div_exact(&g)? - &c.derivative();
    let mut mult = 1u32;
    while c.degree() != Some(0) {
        let a = gcd_primitive(&c, &d)?;
        if a.degree() != Some(0) {
            factors.push((a.clone(), mult));
        }
        c = c.div_exact(&a)?;
        d = &d.div_exact(&a)? - &c.derivative();
        mult += 1;
    }
    Ok(SquarefreeDecomposition { content, factors })
}
