use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::SymError;
use crate::gcd::poly_gcd;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;

/// Quotient of polynomials, reduced by their gcd, with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, SymError> {
        num.ring().check_same(den.ring())?;
        if den.is_zero() {
            return Err(SymError::ZeroDenominator);
        }
        if num.is_zero() {
            let one = Polynomial::one(num.ring());
            return Ok(RationalFunction { num, den: one });
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lc = den.leading_coeff();
        let inv = lc.recip()?;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let one = Polynomial::one(p.ring());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::from_poly(Polynomial::zero(ring))
    }

    pub fn ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn numer(&self) -> &Polynomial {
        &self.num
    }

    pub fn denom(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial value when the denominator is constant.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        if self.is_polynomial() {
            let c = self.den.constant_term();
            Some(self.num.scale(&c.recip().expect("nonzero")))
        } else {
            None
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, SymError> {
        self.ring().check_same(rhs.ring())?;
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone());
        }
        Self::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, SymError> {
        self.ring().check_same(rhs.ring())?;
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, SymError> {
        self.ring().check_same(rhs.ring())?;
        if rhs.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn recip(&self) -> Result<Self, SymError> {
        if self.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Quotient-rule partial derivative.
    pub fn diff(&self, var: usize) -> Self {
        let n = &(&self.num.diff(var) * &self.den) - &(&self.num * &self.den.diff(var));
        Self::new(n, self.den.pow(2)).expect("nonzero denominator")
    }

    pub fn evaluate(&self, assignment: &HashMap<String, Rational>) -> Result<Rational, SymError> {
        let d = self.den.evaluate(assignment)?;
        if d.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Ok(self.num.evaluate(assignment)? / d)
    }

    /// Replace a variable by a rational function.
    pub fn substitute(&self, var: usize, value: &RationalFunction) -> Result<Self, SymError> {
        let num = substitute_poly(&self.num, var, value)?;
        let den = substitute_poly(&self.den, var, value)?;
        num.try_div(&den)
    }
}

/// `p` with `var` replaced by a rational function.
pub fn substitute_poly(
    p: &Polynomial,
    var: usize,
    value: &RationalFunction,
) -> Result<RationalFunction, SymError> {
    p.ring().check_same(value.ring())?;
    let coeffs = p.coeffs_in(var);
    let mut acc = RationalFunction::zero(p.ring());
    for c in coeffs.iter().rev() {
        acc = acc
            .try_mul(value)?
            .try_add(&RationalFunction::from_poly(c.clone()))?;
    }
    Ok(acc)
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_add(&-rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_div(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        &self / &rhs
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    fn ring() -> Ring {
        Ring::new(&["H", "beta"]).unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        let r = ring();
        RationalFunction::new(parse(&r, n).unwrap(), parse(&r, d).unwrap()).unwrap()
    }

    #[test]
    fn reduced_with_monic_denominator() {
        let q = rf("H^2 - beta^2", "-2*H + 2*beta");
        assert!(q.is_polynomial());
        assert_eq!(q.numer().to_string(), "-1/2*beta - 1/2*H");
        assert_eq!(q.denom().to_string(), "1");
        let r = rf("H", "3*H*beta + 3");
        assert!(r.denom().leading_coeff().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        let r = ring();
        let e = RationalFunction::new(Polynomial::one(&r), Polynomial::zero(&r));
        assert!(matches!(e, Err(SymError::ZeroDenominator)));
    }

    #[test]
    fn field_operations() {
        let a = rf("1", "H - beta");
        let b = rf("1", "H + beta");
        let s = &a + &b;
        assert_eq!(s, rf("2*H", "H^2 - beta^2"));
        assert!((&s - &s).is_zero());
        assert_eq!(&(&a * &b) / &a, b);
        let d = a.diff(0);
        assert_eq!(d, rf("-1", "(H - beta)^2"));
    }

    #[test]
    fn substitution() {
        let r = ring();
        let p = parse(&r, "beta^2 + H").unwrap();
        let v = rf("1", "H");
        let out = substitute_poly(&p, 1, &v).unwrap();
        assert_eq!(out, rf("H^3 + 1", "H^2"));
    }
}
