use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Integer;
use crate::error::{Error, Result};

/// Name of a polynomial's indeterminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "t")]
    T,
    #[serde(rename = "q")]
    Q,
}

impl Var {
    pub fn symbol(self) -> char {
        match self {
            Var::T => 't',
            Var::Q => 'q',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(Var::T),
            "q" => Ok(Var::Q),
            other => Err(Error::Parse(format!("unknown variable {other:?}"))),
        }
    }
}

/// Dense univariate polynomial with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `var^i`. The highest stored coefficient
/// is never zero; the zero polynomial stores no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct Polynomial {
    var: Var,
    coeffs: Vec<Integer>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: Var,
    coeffs: Vec<String>,
}

impl From<Polynomial> for PolyRepr {
    fn from(p: Polynomial) -> Self {
        PolyRepr { var: p.var, coeffs: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl TryFrom<PolyRepr> for Polynomial {
    type Error = Error;

    fn try_from(repr: PolyRepr) -> Result<Self> {
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<Integer>().map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(repr.var, coeffs))
    }
}

impl Polynomial {
    pub fn new(var: Var, mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { var, coeffs }
    }

    pub fn from_i64s(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        Polynomial { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Integer::one())
    }

    pub fn constant(var: Var, c: Integer) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^power`.
    pub fn monomial(var: Var, c: Integer, power: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); power + 1];
        coeffs[power] = c;
        Self::new(var, coeffs)
    }

    /// The polynomial `var` itself.
    pub fn var_power(var: Var, power: usize) -> Self {
        Self::monomial(var, Integer::one(), power)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    /// Coefficient of `var^power`, zero beyond the degree.
    pub fn coeff(&self, power: usize) -> Integer {
        self.coeffs.get(power).cloned().unwrap_or_else(Integer::zero)
    }

    /// Degree, with `None` standing for the degree of the zero polynomial
    /// (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    /// Same polynomial with the variable renamed.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    fn check_var(&self, other: &Polynomial) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Polynomial::new(self.var, coeffs))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Polynomial::new(self.var, coeffs))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.var));
        }
        let mut coeffs = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Polynomial::new(self.var, coeffs))
    }

    pub fn scale(&self, c: &Integer) -> Polynomial {
        Polynomial::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { var: self.var, coeffs }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides every coefficient by `c`, failing unless all divide exactly.
    pub fn exact_div_integer(&self, c: &Integer) -> Result<Polynomial> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible { dividend: self.to_string(), divisor: c.to_string() });
            }
            coeffs.push(q);
        }
        Ok(Polynomial::new(self.var, coeffs))
    }

    /// Exact quotient `self / divisor` in `Z[var]`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_var(divisor)?;
        let Some(db) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let not_divisible =
            || Error::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() };
        let lead = divisor.coeffs[db].clone();
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok(Polynomial::zero(self.var));
        };
        if da < db {
            return Err(not_divisible());
        }
        let mut quot = vec![Integer::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        Ok(Polynomial::new(self.var, quot))
    }

    /// Pseudo-remainder of `self` by a nonzero `divisor`:
    /// `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`, up to the
    /// power of the leading coefficient actually needed.
    pub fn pseudo_rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_var(divisor)?;
        let Some(db) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead = &divisor.coeffs[db];
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            let top = rem.coeffs[dr].clone();
            rem = &rem.scale(lead) - &divisor.scale(&top).shift(dr - db);
        }
        Ok(rem)
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Integer {
        self.coeffs.iter().fold(Integer::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.exact_div_integer(&c).expect("content divides every coefficient")
    }

    /// Greatest common divisor in `Z[var]`, normalized to a positive leading
    /// coefficient (zero only when both inputs are zero).
    ///
    /// Content and primitive parts are handled separately; the primitive parts
    /// go through a Euclidean remainder sequence in which each pseudo-remainder
    /// is cleared back to its primitive part.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_var(other)?;
        if self.is_zero() {
            return Ok(other.normalize_sign());
        }
        if other.is_zero() {
            return Ok(self.normalize_sign());
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b)?;
            a = b;
            b = r.primitive_part();
        }
        Ok(a.primitive_part().scale(&content))
    }

    fn normalize_sign(&self) -> Polynomial {
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            -self
        } else {
            self.clone()
        }
    }

    /// Value at `var = x`, by Horner's rule.
    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * x + c)
    }

    /// `p(-var)`: negates the odd-power coefficients.
    pub fn negate_var(&self) -> Polynomial {
        let coeffs =
            self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect();
        Polynomial::new(self.var, coeffs)
    }

    /// `p(var^2)`: moves coefficient `i` to index `2i`.
    pub fn square_var(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Integer::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Polynomial::new(self.var, coeffs)
    }

    /// True when the coefficient sequence reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Parses the canonical text form, e.g. `1+2t+4t^2-t^3` or `-t^3` or `0`.
    ///
    /// The variable is taken from the terms; a constant (or `0`) gets
    /// `default_var`. Whitespace is ignored and a term may carry an explicit
    /// `*` between coefficient and variable.
    pub fn parse(text: &str, default_var: Var) -> Result<Polynomial> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = |why: &str| Error::Parse(format!("{why} in polynomial {text:?}"));
        let mut var: Option<Var> = None;
        let mut coeffs: Vec<Integer> = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
            } else if i > 0 {
                return Err(bad("missing sign between terms"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut c = if start == i {
                Integer::one()
            } else {
                s[start..i].parse::<Integer>().map_err(|_| bad("bad coefficient"))?
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut power = 0usize;
            if i < bytes.len() && (bytes[i] == b't' || bytes[i] == b'q') {
                let v = if bytes[i] == b't' { Var::T } else { Var::Q };
                if var.is_some_and(|w| w != v) {
                    return Err(bad("mixed variables"));
                }
                var = Some(v);
                i += 1;
                power = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let ps = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    power = s[ps..i].parse().map_err(|_| bad("bad exponent"))?;
                }
            } else if start == i {
                return Err(bad("empty term"));
            }
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Integer::zero());
            }
            coeffs[power] += c;
        }
        Ok(Polynomial::new(var.unwrap_or(default_var), coeffs))
    }
}

impl fmt::Display for Polynomial {
    /// Ascending powers with explicit signs: `1+2t+4t^2-t^3`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let abs = c.abs();
            if power == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{power}", self.var)?,
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl super::Ring for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.var)
    }

    fn one_like(&self) -> Self {
        Polynomial::one(self.var)
    }

    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn lift_integer(&self, value: &Integer) -> Self {
        Polynomial::constant(self.var, value.clone())
    }

    /// Only the constants `1` and `-1` are units in `Z[var]`.
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && self.coeffs[0].abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

/// Checked product.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.try_mul(b)
}

/// Exact quotient; a nonzero remainder is reported with both operands.
pub fn poly_exact_div(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.exact_div(b)
}

/// Substitution rules for the polynomial variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Substitution {
    /// `var -> -var`
    Negate,
    /// `var -> var^2`
    Square,
    /// `var -> constant`
    Constant(Integer),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Substituted {
    Polynomial(Polynomial),
    Integer(Integer),
}

pub fn poly_substitute(p: &Polynomial, rule: &Substitution) -> Substituted {
    match rule {
        Substitution::Negate => Substituted::Polynomial(p.negate_var()),
        Substitution::Square => Substituted::Polynomial(p.square_var()),
        Substitution::Constant(c) => Substituted::Integer(p.eval(c)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Var::T, c)
    }

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Var::Q, c)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(poly_mul(&t(&[1, 1]), &t(&[1, 1, 1])).unwrap(), t(&[1, 2, 2, 1]));
        let p = t(&[3, 0, -2, 7]);
        assert_eq!(poly_mul(&p, &t(&[1])).unwrap(), p);
        assert_eq!(poly_mul(&q(&[1, 1]), &q(&[1, -1])).unwrap(), q(&[1, 0, -1]));
    }

    #[test]
    fn mul_variable_mismatch() {
        let err = poly_mul(&t(&[1, 1]), &q(&[1, 1])).unwrap_err();
        assert_eq!(err, Error::VariableMismatch { left: Var::T, right: Var::Q });
    }

    #[test]
    fn exact_div_examples() {
        // (1+q^2)(1+q+q^2) = 1+q+2q^2+q^3+q^4
        assert_eq!(poly_exact_div(&q(&[1, 1, 2, 1, 1]), &q(&[1, 1, 1])).unwrap(), q(&[1, 0, 1]));
        let p = q(&[5, -3, 0, 2]);
        assert_eq!(poly_exact_div(&p, &p).unwrap(), q(&[1]));
        match poly_exact_div(&q(&[1, 1]), &q(&[1, 1, 1])) {
            Err(Error::NotDivisible { dividend, divisor }) => {
                assert_eq!(dividend, "1+q");
                assert_eq!(divisor, "1+q+q^2");
            }
            other => panic!("expected NotDivisible, got {other:?}"),
        }
        assert_eq!(poly_exact_div(&q(&[1]), &q(&[])), Err(Error::DivisionByZero));
        assert!(poly_exact_div(&q(&[1, 2]), &q(&[2])).is_err());
        assert_eq!(poly_exact_div(&q(&[]), &q(&[2, 1])).unwrap(), q(&[]));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(
            poly_substitute(&t(&[1, 1, 1]), &Substitution::Negate),
            Substituted::Polynomial(t(&[1, -1, 1]))
        );
        assert_eq!(
            poly_substitute(&t(&[1, 1]), &Substitution::Square),
            Substituted::Polynomial(t(&[1, 0, 1]))
        );
        assert_eq!(
            poly_substitute(&t(&[1, 2, 4, 2, 1]), &Substitution::Constant(Integer::from(-1))),
            Substituted::Integer(Integer::from(2))
        );
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        assert_eq!(t(&[]).degree(), None);
        assert_eq!(t(&[0, 0, 0]).degree(), None);
        assert!(t(&[0, 0]).coeffs().is_empty());
        assert_eq!(t(&[0, 3]).degree(), Some(1));
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(t(&[1, 2, 4, 2, 1]).to_string(), "1+2t+4t^2+2t^3+t^4");
        assert_eq!(t(&[0, 0, 0, -1]).to_string(), "-t^3");
        assert_eq!(t(&[]).to_string(), "0");
        assert_eq!(t(&[-1, -1]).to_string(), "-1-t");
        assert_eq!(q(&[0, 0, 1, 1, 1]).to_string(), "q^2+q^3+q^4");
    }

    #[test]
    fn parse_canonical_form() {
        for s in ["1+2t+4t^2+2t^3+t^4", "-t^3", "0", "-1-t", "12-7t^5", "t"] {
            assert_eq!(Polynomial::parse(s, Var::T).unwrap().to_string(), s);
        }
        assert_eq!(Polynomial::parse("q^2 + q^3", Var::T).unwrap().var(), Var::Q);
        assert_eq!(Polynomial::parse("2*t + t", Var::T).unwrap(), t(&[0, 3]));
        assert!(Polynomial::parse("1+", Var::T).is_err());
        assert!(Polynomial::parse("t+q", Var::T).is_err());
        assert!(Polynomial::parse("2t3", Var::T).is_err());
        assert!(Polynomial::parse("", Var::T).is_err());
    }

    #[test]
    fn json_form() {
        let p = t(&[1, 2, 2, 1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"var":"t","coeffs":["1","2","2","1"]}"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        let big: Polynomial =
            serde_json::from_str(r#"{"var":"q","coeffs":["123456789012345678901234567890","0"]}"#).unwrap();
        assert_eq!(big.degree(), Some(0));
        assert!(serde_json::from_str::<Polynomial>(r#"{"var":"x","coeffs":[]}"#).is_err());
    }

    #[test]
    fn gcd_cases() {
        // (t-1)(t+1) and (t-1)(t+2)
        let a = t(&[-1, 0, 1]);
        let b = t(&[-2, 1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), t(&[-1, 1]));
        assert_eq!(t(&[2, 2]).gcd(&t(&[-2])).unwrap(), t(&[2]));
        assert_eq!(t(&[6, 4]).gcd(&t(&[9, 6])).unwrap(), t(&[3, 2]));
        assert_eq!(t(&[]).gcd(&t(&[0, -3])).unwrap(), t(&[0, 3]));
        assert_eq!(t(&[1, 1]).gcd(&t(&[1, 0, 1])).unwrap(), t(&[1]));
    }

    #[test]
    fn eval_and_palindrome() {
        let p = t(&[1, 2, 4, 2, 1]);
        assert_eq!(p.eval(&Integer::from(1)), Integer::from(10));
        assert!(p.is_palindromic());
        assert!(!t(&[1, 2]).is_palindromic());
    }
}
