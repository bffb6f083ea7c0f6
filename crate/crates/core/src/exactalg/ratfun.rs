use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{Integer, Polynomial, Var};
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials in the same variable.
///
/// Canonical form: `gcd(num, den)` is a unit, the denominator is nonzero and
/// its leading coefficient is positive. Zero is `0/1`. With this form,
/// equality of rational functions is structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        ratfun_normalize(num, den)
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let den = Polynomial::one(p.var());
        RationalFunction { num: p, den }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(Polynomial::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(Polynomial::one(var))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    /// The numerator, if the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let num = self.num.try_mul(&other.den)?.try_add(&other.num.try_mul(&self.den)?)?;
        ratfun_normalize(num, self.den.try_mul(&other.den)?)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.negated())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        ratfun_normalize(self.num.try_mul(&other.num)?, self.den.try_mul(&other.den)?)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        ratfun_normalize(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inverse()?)
    }

    pub fn negated(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    /// `f(-var)`.
    pub fn negate_var(&self) -> Self {
        ratfun_normalize(self.num.negate_var(), self.den.negate_var())
            .expect("denominator stays nonzero under var -> -var")
    }

    pub fn pow(&self, e: u32) -> Self {
        // powers of a reduced fraction stay reduced
        let mut r = RationalFunction { num: self.num.pow(e), den: self.den.pow(e) };
        if r.num.is_zero() {
            r.den = Polynomial::one(self.var());
        }
        r
    }
}

/// Builds the canonical representative of `num / den`.
pub fn ratfun_normalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
    if num.var() != den.var() {
        return Err(Error::VariableMismatch { left: num.var(), right: den.var() });
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero(num.var()));
    }
    let g = num.gcd(&den)?;
    let mut num = num.exact_div(&g)?;
    let mut den = den.exact_div(&g)?;
    if den.leading_coeff().is_some_and(Signed::is_negative) {
        num = -num;
        den = -den;
    }
    Ok(RationalFunction { num, den })
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Deserialize)]
struct RatRepr {
    num: Polynomial,
    den: Polynomial,
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RatRepr::deserialize(d)?;
        ratfun_normalize(repr.num, repr.den).map_err(serde::de::Error::custom)
    }
}

impl super::Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::zero(self.var())
    }

    fn one_like(&self) -> Self {
        RationalFunction::one(self.var())
    }

    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("rational function addition")
    }

    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("rational function subtraction")
    }

    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("rational function multiplication")
    }

    fn neg(&self) -> Self {
        self.negated()
    }

    fn lift_integer(&self, value: &Integer) -> Self {
        RationalFunction::from_poly(Polynomial::constant(self.var(), value.clone()))
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Var::T, c)
    }

    #[test]
    fn normalize_examples() {
        let r = ratfun_normalize(t(&[-1, 0, 1]), t(&[-1, 1])).unwrap();
        assert_eq!((r.num(), r.den()), (&t(&[1, 1]), &t(&[1])));
        let r = ratfun_normalize(t(&[]), t(&[5, 1])).unwrap();
        assert_eq!((r.num(), r.den()), (&t(&[]), &t(&[1])));
        let r = ratfun_normalize(t(&[2, 2]), t(&[-2])).unwrap();
        assert_eq!((r.num(), r.den()), (&t(&[-1, -1]), &t(&[1])));
        assert_eq!(ratfun_normalize(t(&[1]), t(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form_makes_equality_structural() {
        // (2t+2)/(4t^2-4) == 1/(2t-2)
        let a = ratfun_normalize(t(&[2, 2]), t(&[-4, 0, 4])).unwrap();
        let b = ratfun_normalize(t(&[-1]), t(&[2, -2])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "(1)/(-2+2t)");
    }

    #[test]
    fn field_operations() {
        let a = ratfun_normalize(t(&[1]), t(&[1, 1])).unwrap();
        let b = ratfun_normalize(t(&[0, 1]), t(&[1, 1])).unwrap();
        assert_eq!(a.try_add(&b).unwrap(), RationalFunction::one(Var::T));
        assert_eq!(a.try_mul(&a.inverse().unwrap()).unwrap(), RationalFunction::one(Var::T));
        assert_eq!(a.try_sub(&a).unwrap(), RationalFunction::zero(Var::T));
        assert_eq!(RationalFunction::zero(Var::T).inverse(), Err(Error::DivisionByZero));
        let c = b.negate_var();
        assert_eq!(c, ratfun_normalize(t(&[0, 1]), t(&[-1, 1])).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let a = ratfun_normalize(t(&[0, 3]), t(&[2, 2])).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(a, back);
    }
}
