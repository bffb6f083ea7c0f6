use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::Ring;
use crate::error::{Error, Result};

/// Power series in `z` known up to and including `z^order`.
///
/// Always stores exactly `order + 1` coefficients; every operation truncates
/// eagerly at the order of its operands. Binary operations require equal
/// orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

/// Substitutions for the series variable `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesSubstitution {
    /// `z -> -z`
    NegateZ,
    /// `z -> z^2`, keeping the order: odd slots are zero-filled and input
    /// coefficients beyond `order / 2` are dropped.
    SquareZ,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        TruncatedSeries { coeffs }
    }

    /// Series of the given order from a prefix, padding with zeros or
    /// dropping the excess as needed. `sample` fixes the coefficient ring.
    pub fn from_prefix(mut coeffs: Vec<R>, order: usize, sample: &R) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, sample.zero_like());
        TruncatedSeries { coeffs }
    }

    /// The constant series `c`.
    pub fn constant(c: R, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// The polynomial `c0 + c1 z + ...` in `z`, truncated to `order`.
    pub fn from_z_poly(z_coeffs: &[R], order: usize) -> Self {
        assert!(!z_coeffs.is_empty());
        Self::from_prefix(z_coeffs.to_vec(), order, &z_coeffs[0])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, power: usize) -> &R {
        &self.coeffs[power]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, R::add))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.zip_with(other, R::sub))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero())
                    .fold(self.coeffs[0].zero_like(), |acc, i| {
                        acc.add(&self.coeffs[i].mul(&other.coeffs[k - i]))
                    })
            })
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Multiplies by `z^k`, dropping what falls beyond the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let n = self.order();
        let coeffs = (0..=n).map(|i| if i < k { zero.clone() } else { self.coeffs[i - k].clone() }).collect();
        TruncatedSeries { coeffs }
    }

    /// Drops the first `k` coefficients, dividing by `z^k`. The order drops
    /// by `k`. Panics if `k > order`.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(k <= self.order(), "cannot shift below order 0");
        TruncatedSeries { coeffs: self.coeffs[k..].to_vec() }
    }

    /// Prefix up to `order`; panics if `order` exceeds the current order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn map_into<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Reciprocal series; requires a unit constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = c0.unit_inverse().ok_or_else(|| Error::NotInvertible { constant: c0.to_string() })?;
        let n = self.order();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            // sum_{i=1..k} f_i g_{k-i} + f_0 g_k = 0
            let acc = (1..=k).fold(c0.zero_like(), |acc, i| acc.add(&self.coeffs[i].mul(&out[k - i])));
            out.push(acc.neg().mul(&inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn substitute(&self, rule: SeriesSubstitution) -> Self {
        match rule {
            SeriesSubstitution::NegateZ => TruncatedSeries {
                coeffs: self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                    .collect(),
            },
            SeriesSubstitution::SquareZ => {
                let zero = self.coeffs[0].zero_like();
                let coeffs = (0..=self.order())
                    .map(|i| if i % 2 == 0 { self.coeffs[i / 2].clone() } else { zero.clone() })
                    .collect();
                TruncatedSeries { coeffs }
            }
        }
    }

    pub fn is_one(&self) -> bool {
        let one = self.coeffs[0].one_like();
        self.coeffs[0] == one && self.coeffs[1..].iter().all(R::is_zero)
    }
}

/// Checked Cauchy product.
pub fn series_mul<R: Ring>(f: &TruncatedSeries<R>, g: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.try_mul(g)
}

pub fn series_invert<R: Ring>(f: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>> {
    f.invert()
}

pub fn series_substitute<R: Ring>(f: &TruncatedSeries<R>, rule: SeriesSubstitution) -> TruncatedSeries<R> {
    f.substitute(rule)
}

impl<R: Ring> fmt::Display for TruncatedSeries<R> {
    /// `c0 + (c1)z + (c2)z^2 + O(z^{N+1})`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl<R: Serialize> Serialize for TruncatedSeries<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TruncatedSeries", 2)?;
        st.serialize_field("order", &(self.coeffs.len() - 1))?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Integer, Polynomial, Var};

    fn t(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Var::T, c)
    }

    fn zs(c: &[i64]) -> TruncatedSeries<Integer> {
        TruncatedSeries::new(c.iter().map(|&x| Integer::from(x)).collect())
    }

    #[test]
    fn mul_examples() {
        let f = TruncatedSeries::new(vec![t(&[1]), t(&[0, 1]), t(&[2, 0, 3])]);
        let one = TruncatedSeries::constant(t(&[1]), 2);
        assert_eq!(series_mul(&f, &one).unwrap(), f);
        assert_eq!(series_mul(&zs(&[1, 1, 0]), &zs(&[1, -1, 0])).unwrap(), zs(&[1, 0, -1]));
        assert_eq!(
            series_mul(&zs(&[1, 1]), &zs(&[1, 1, 0])),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(series_invert(&zs(&[1, 0, 0])).unwrap(), zs(&[1, 0, 0]));
        assert_eq!(series_invert(&zs(&[1, -1, 0, 0])).unwrap(), zs(&[1, 1, 1, 1]));
        assert_eq!(series_invert(&zs(&[-1, 1])).unwrap(), zs(&[-1, -1]));
        let f = TruncatedSeries::new(vec![t(&[1, 1]), t(&[1])]);
        assert_eq!(series_invert(&f), Err(Error::NotInvertible { constant: "1+t".into() }));
        assert!(series_invert(&zs(&[2, 1])).is_err());
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(series_substitute(&zs(&[1, 1, 1]), SeriesSubstitution::NegateZ), zs(&[1, -1, 1]));
        assert_eq!(series_substitute(&zs(&[1, 1, 0, 0]), SeriesSubstitution::SquareZ), zs(&[1, 0, 1, 0]));
        // overflow beyond order / 2 is dropped
        assert_eq!(
            series_substitute(&zs(&[1, 2, 3, 4, 5]), SeriesSubstitution::SquareZ),
            zs(&[1, 0, 2, 0, 3])
        );
    }

    #[test]
    fn shifts() {
        let f = zs(&[1, 2, 3]);
        assert_eq!(f.shift_up(1), zs(&[0, 1, 2]));
        assert_eq!(f.shift_up(5), zs(&[0, 0, 0]));
        assert_eq!(f.shift_down(1), zs(&[2, 3]));
        assert_eq!(f.truncate(0), zs(&[1]));
    }

    #[test]
    fn json_form() {
        let f = TruncatedSeries::new(vec![t(&[1]), t(&[1, 1])]);
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"order":1,"coeffs":[{"var":"t","coeffs":["1"]},{"var":"t","coeffs":["1","1"]}]}"#
        );
    }

    #[test]
    fn display() {
        let f = TruncatedSeries::new(vec![t(&[1]), t(&[]), t(&[1, 1])]);
        assert_eq!(f.to_string(), "1 + (1+t)z^2 + O(z^3)");
    }
}
