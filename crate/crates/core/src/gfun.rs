//! Truncated generating functions and identity checks.
//!
//! Four series are built as finite prefixes in `z` with coefficients in
//! `Z[t]`:
//!
//! | tag      | coefficient of `z^n` |
//! |----------|----------------------|
//! | `bigC`   | `C_n(t)`             |
//! | `bigG`   | `C_{n+1}(t)`         |
//! | `smallc` | `c_n(t)`             |
//! | `smallg` | `c_{n+1}(t)`         |
//!
//! Each [`Identity`] is checked by building both sides with series
//! arithmetic and comparing every coefficient structurally. The closed forms
//! of `C(t, z)` and `G(t, z)` involving square roots are never evaluated;
//! they are certified through the quadratic equations they solve
//! ([`Identity::Eq15`], [`Identity::Eq20`]).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, Integer, Polynomial, SeriesSubstitution, TruncatedSeries, Var};
use crate::narayana::{c_poly, narayana_poly};

pub type PolySeries = TruncatedSeries<Polynomial>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesTag {
    BigC,
    BigG,
    SmallC,
    SmallG,
}

impl SeriesTag {
    pub fn name(self) -> &'static str {
        match self {
            SeriesTag::BigC => "bigC",
            SeriesTag::BigG => "bigG",
            SeriesTag::SmallC => "smallc",
            SeriesTag::SmallG => "smallg",
        }
    }

    fn coefficient(self, n: usize) -> Polynomial {
        match self {
            SeriesTag::BigC => narayana_poly(n),
            SeriesTag::BigG => narayana_poly(n + 1),
            SeriesTag::SmallC => c_poly(n),
            SeriesTag::SmallG => c_poly(n + 1),
        }
    }
}

impl FromStr for SeriesTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bigC" | "C" => Ok(SeriesTag::BigC),
            "bigG" | "G" => Ok(SeriesTag::BigG),
            "smallc" | "c" => Ok(SeriesTag::SmallC),
            "smallg" | "g" => Ok(SeriesTag::SmallG),
            other => Err(Error::usage(format!("unknown series {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesFamily {
    pub tag: SeriesTag,
    pub series: PolySeries,
}

impl SeriesFamily {
    pub fn order(&self) -> usize {
        self.series.order()
    }
}

pub fn build_series(tag: SeriesTag, order: usize) -> SeriesFamily {
    let coeffs = (0..=order).map(|n| tag.coefficient(n)).collect();
    SeriesFamily { tag, series: TruncatedSeries::new(coeffs) }
}

fn series(tag: SeriesTag, order: usize) -> PolySeries {
    build_series(tag, order).series
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `C = 1 - z(t-1)C + tzC^2`
    Eq15,
    /// `1/C = 1 + (t-1)z - tzC`
    Eq16,
    /// `G = (C - 1)/z`
    Eq18,
    /// `G = 1/(1 - (1+t)z - tz^2 G)`
    Eq19,
    /// `G = 1 + (1+t)zG + tz^2 G^2`
    Eq20,
    /// `(1 - (1+t)z) c(t,z) = 1 - zt C(t^2, z^2)`
    Eq23,
    /// `(1 - (1+t)z) c(t,z) = 1 - tz c(-t,-z) c(t,z)`
    Eq24,
    /// `c(t,z) c(-t,-z) = C(t^2, z^2)`
    Eq25,
    /// `g = 1 + (1+t)zg - tz^2 G(t^2, z^2)`
    Eq27,
    /// `g(t,z) g(t,-z) = G(t^2, z^2)`
    Eq28,
    /// `[z^n] g(1,z) = binom(n+1, floor((n+1)/2))`
    GAt1,
    /// `g(-1,z) = C(1, z^2)`
    GAtM1,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Eq15,
        Identity::Eq16,
        Identity::Eq18,
        Identity::Eq19,
        Identity::Eq20,
        Identity::Eq23,
        Identity::Eq24,
        Identity::Eq25,
        Identity::Eq27,
        Identity::Eq28,
        Identity::GAt1,
        Identity::GAtM1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Eq15 => "eq15",
            Identity::Eq16 => "eq16",
            Identity::Eq18 => "eq18",
            Identity::Eq19 => "eq19",
            Identity::Eq20 => "eq20",
            Identity::Eq23 => "eq23",
            Identity::Eq24 => "eq24",
            Identity::Eq25 => "eq25",
            Identity::Eq27 => "eq27",
            Identity::Eq28 => "eq28",
            Identity::GAt1 => "g_at_1",
            Identity::GAtM1 => "g_at_m1",
        }
    }

    /// Both sides of the identity as series of the given order.
    pub fn sides(self, order: usize) -> Result<(PolySeries, PolySeries)> {
        let t = Polynomial::var_power(Var::T, 1);
        let one = Polynomial::one(Var::T);
        let t_minus_1 = &t - &one;
        let one_plus_t = &t + &one;
        let unit = TruncatedSeries::constant(one.clone(), order);
        // 1 - (1+t)z
        let linear = TruncatedSeries::from_z_poly(&[one.clone(), -&one_plus_t], order);

        let sides = match self {
            Identity::Eq15 => {
                let c = series(SeriesTag::BigC, order);
                let rhs = unit
                    .try_sub(&c.shift_up(1).scale(&t_minus_1))?
                    .try_add(&c.try_mul(&c)?.shift_up(1).scale(&t))?;
                (c, rhs)
            }
            Identity::Eq16 => {
                let c = series(SeriesTag::BigC, order);
                let lhs = c.invert()?;
                let rhs = TruncatedSeries::from_z_poly(&[one.clone(), t_minus_1.clone()], order)
                    .try_sub(&c.shift_up(1).scale(&t))?;
                (lhs, rhs)
            }
            Identity::Eq18 => {
                let g = series(SeriesTag::BigG, order);
                let c = series(SeriesTag::BigC, order + 1);
                let rhs = c.try_sub(&TruncatedSeries::constant(one.clone(), order + 1))?.shift_down(1);
                (g, rhs)
            }
            Identity::Eq19 => {
                let g = series(SeriesTag::BigG, order);
                let denom = linear.try_sub(&g.shift_up(2).scale(&t))?;
                let rhs = denom.invert()?;
                (g, rhs)
            }
            Identity::Eq20 => {
                let g = series(SeriesTag::BigG, order);
                let rhs = unit
                    .try_add(&g.shift_up(1).scale(&one_plus_t))?
                    .try_add(&g.try_mul(&g)?.shift_up(2).scale(&t))?;
                (g, rhs)
            }
            Identity::Eq23 => {
                let c = series(SeriesTag::SmallC, order);
                let lhs = linear.try_mul(&c)?;
                let big = squared_args(&series(SeriesTag::BigC, order));
                let rhs = unit.try_sub(&big.shift_up(1).scale(&t))?;
                (lhs, rhs)
            }
            Identity::Eq24 => {
                let c = series(SeriesTag::SmallC, order);
                let lhs = linear.try_mul(&c)?;
                let mirrored = negated_args(&c);
                let rhs = unit.try_sub(&mirrored.try_mul(&c)?.shift_up(1).scale(&t))?;
                (lhs, rhs)
            }
            Identity::Eq25 => {
                let c = series(SeriesTag::SmallC, order);
                let lhs = c.try_mul(&negated_args(&c))?;
                let rhs = squared_args(&series(SeriesTag::BigC, order));
                (lhs, rhs)
            }
            Identity::Eq27 => {
                let g = series(SeriesTag::SmallG, order);
                let big = squared_args(&series(SeriesTag::BigG, order));
                let rhs =
                    unit.try_add(&g.shift_up(1).scale(&one_plus_t))?.try_sub(&big.shift_up(2).scale(&t))?;
                (g, rhs)
            }
            Identity::Eq28 => {
                let g = series(SeriesTag::SmallG, order);
                let lhs = g.try_mul(&g.substitute(SeriesSubstitution::NegateZ))?;
                let rhs = squared_args(&series(SeriesTag::BigG, order));
                (lhs, rhs)
            }
            Identity::GAt1 => {
                let g = series(SeriesTag::SmallG, order);
                let lhs = g.map(|p| Polynomial::constant(Var::T, p.eval(&Integer::from(1))));
                let rhs = TruncatedSeries::new(
                    (0..=order as i64)
                        .map(|n| Polynomial::constant(Var::T, binomial(n + 1, (n + 1) / 2)))
                        .collect(),
                );
                (lhs, rhs)
            }
            Identity::GAtM1 => {
                let g = series(SeriesTag::SmallG, order);
                let lhs = g.map(|p| Polynomial::constant(Var::T, p.eval(&Integer::from(-1))));
                let rhs = series(SeriesTag::BigC, order)
                    .map(|p| Polynomial::constant(Var::T, p.eval(&Integer::from(1))))
                    .substitute(SeriesSubstitution::SquareZ);
                (lhs, rhs)
            }
        };
        Ok(sides)
    }
}

/// `f(t, z) -> f(t^2, z^2)`.
fn squared_args(f: &PolySeries) -> PolySeries {
    f.map(Polynomial::square_var).substitute(SeriesSubstitution::SquareZ)
}

/// `f(t, z) -> f(-t, -z)`.
fn negated_args(f: &PolySeries) -> PolySeries {
    f.map(Polynomial::negate_var).substitute(SeriesSubstitution::NegateZ)
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown identity {s:?}")))
    }
}

impl Serialize for Identity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum IdentityStatus {
    Pass,
    Fail { power: usize, lhs: Polynomial, rhs: Polynomial },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub order: usize,
    #[serde(flatten)]
    pub status: IdentityStatus,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == IdentityStatus::Pass
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            IdentityStatus::Pass => write!(f, "{} pass at order {}", self.identity, self.order),
            IdentityStatus::Fail { power, lhs, rhs } => {
                write!(f, "{} FAIL at z^{power} (order {}): lhs {lhs}, rhs {rhs}", self.identity, self.order)
            }
        }
    }
}

/// Compares two prefixes coefficient by coefficient.
pub fn compare(identity: Identity, lhs: &PolySeries, rhs: &PolySeries) -> Result<IdentityReport> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch { left: lhs.order(), right: rhs.order() });
    }
    let status = lhs.coeffs().iter().zip(rhs.coeffs()).enumerate().find(|(_, (a, b))| a != b).map_or(
        IdentityStatus::Pass,
        |(power, (a, b))| IdentityStatus::Fail { power, lhs: a.clone(), rhs: b.clone() },
    );
    Ok(IdentityReport { identity, order: lhs.order(), status })
}

/// Checks one identity through `z^order`. Requires `order >= 2`.
pub fn verify_identity(identity: Identity, order: usize) -> Result<IdentityReport> {
    if order < 2 {
        return Err(Error::usage(format!("identity checks need order >= 2, got {order}")));
    }
    let (lhs, rhs) = identity.sides(order)?;
    compare(identity, &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Var::T, c)
    }

    #[test]
    fn build_examples() {
        let c = build_series(SeriesTag::SmallC, 3);
        assert_eq!(c.series.coeffs(), &[t(&[1]), t(&[1]), t(&[1, 1]), t(&[1, 1, 1])]);
        assert_eq!(build_series(SeriesTag::BigC, 0).series.coeffs(), &[t(&[1])]);
        let g = build_series(SeriesTag::SmallG, 2);
        assert_eq!(g.series.coeffs(), &[t(&[1]), t(&[1, 1]), t(&[1, 1, 1])]);
        assert_eq!(build_series(SeriesTag::BigG, 2).series.coeffs()[2], t(&[1, 3, 1]));
    }

    #[test]
    fn eq23_at_order_one_by_hand() {
        // c_1 - (1+t) c_0 = -t = -t C_0(t^2)
        let (lhs, rhs) = Identity::Eq23.sides(1).unwrap();
        assert_eq!(lhs.coeffs(), &[t(&[1]), t(&[0, -1])]);
        assert_eq!(rhs.coeffs(), lhs.coeffs());
    }

    #[test]
    fn eq25_low_order() {
        let (lhs, rhs) = Identity::Eq25.sides(4).unwrap();
        // C(t^2, z^2) through z^4: 1 + z^2 + (1+t^2) z^4
        assert_eq!(rhs.coeffs(), &[t(&[1]), t(&[]), t(&[1]), t(&[]), t(&[1, 0, 1])]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn g_at_minus_one_is_interleaved_catalan() {
        let (lhs, rhs) = Identity::GAtM1.sides(6).unwrap();
        let expected: Vec<Polynomial> = [1, 0, 1, 0, 2, 0, 5].iter().map(|&c| t(&[c])).collect();
        assert_eq!(lhs.coeffs(), expected.as_slice());
        assert_eq!(rhs.coeffs(), expected.as_slice());
        assert!(verify_identity(Identity::GAtM1, 6).unwrap().passed());
    }

    #[test]
    fn every_identity_passes_at_order_20() {
        for id in Identity::ALL {
            let report = verify_identity(id, 20).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn passing_is_stable_under_smaller_orders() {
        for id in Identity::ALL {
            for order in 2..=12 {
                assert!(verify_identity(id, order).unwrap().passed(), "{id} at {order}");
            }
        }
    }

    #[test]
    fn broken_identity_reports_first_failing_power() {
        // drop the factor t from the right side of eq23
        let c = series(SeriesTag::SmallC, 6);
        let one = Polynomial::one(Var::T);
        let linear = TruncatedSeries::from_z_poly(&[one.clone(), t(&[-1, -1])], 6);
        let lhs = linear.try_mul(&c).unwrap();
        let big = squared_args(&series(SeriesTag::BigC, 6));
        let rhs = TruncatedSeries::constant(one, 6).try_sub(&big.shift_up(1)).unwrap();
        let report = compare(Identity::Eq23, &lhs, &rhs).unwrap();
        assert_eq!(report.status, IdentityStatus::Fail { power: 1, lhs: t(&[0, -1]), rhs: t(&[-1]) });
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["status"], "fail");
        assert_eq!(json["power"], 1);
        assert_eq!(json["lhs"]["coeffs"][1], "-1");
    }

    #[test]
    fn report_json_shape() {
        let report = verify_identity(Identity::Eq25, 20).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"identity":"eq25","order":20,"status":"pass"}"#
        );
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(verify_identity(Identity::Eq15, 1), Err(Error::Usage(_))));
        assert!("eq99".parse::<Identity>().is_err());
        assert_eq!("g_at_m1".parse::<Identity>().unwrap(), Identity::GAtM1);
    }
}
