//! Narayana numbers and polynomials, the type-B Narayana polynomials
//! `W_n(t)`, and the `q = -1` specialization `c_n(t)`.
//!
//! `c_n(t)` is available through three code paths that never share
//! intermediate results:
//!
//! - [`c_poly`]: the closed form `v(n, k)` for the coefficients,
//! - [`c_poly_recursive`]: the even/odd recursion
//!   `c_{2n} = (1+t) c_{2n-1}`, `c_{2n+1} = (1+t) c_{2n} - t C_n(t^2)`,
//! - [`crate::qcomb::specialize_row`] at `q = -1`.
//!
//! For odd index there is a fourth, [`c_odd_closed`]:
//! `c_{2n+1}(t) = W_n(t^2) + n t C_n(t^2)`. The frequently quoted form without
//! the factor `t` on the second summand ([`c_odd_printed`]) does not
//! reproduce `c_3` or `c_5`; it is kept only so tests can show that.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, catalan, Integer, Polynomial, Var};

/// The polynomial families indexed by `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Catalan numbers `C_n` as constant polynomials.
    CatalanC,
    /// Narayana polynomials `C_n(t)`.
    NarayanaPoly,
    /// Type-B Narayana polynomials `W_n(t)`.
    NarayanaB,
    /// `c_n(t) = C_n(t; -1)`.
    SmallC,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::CatalanC, Family::NarayanaPoly, Family::NarayanaB, Family::SmallC];

    pub fn name(self) -> &'static str {
        match self {
            Family::CatalanC => "catalan_C",
            Family::NarayanaPoly => "narayana_poly",
            Family::NarayanaB => "narayana_B",
            Family::SmallC => "small_c",
        }
    }

    pub fn member(self, n: usize) -> Polynomial {
        match self {
            Family::CatalanC => Polynomial::constant(Var::T, catalan(n as u64)),
            Family::NarayanaPoly => narayana_poly(n),
            Family::NarayanaB => narayana_b_poly(n),
            Family::SmallC => c_poly(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan_C" | "catalan" => Ok(Family::CatalanC),
            "narayana_poly" | "narayana" | "C" => Ok(Family::NarayanaPoly),
            "narayana_B" | "narayana_b" | "W" => Ok(Family::NarayanaB),
            "small_c" | "c" => Ok(Family::SmallC),
            other => Err(Error::usage(format!("unknown family {other:?}"))),
        }
    }
}

/// The first `len` members of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySequence {
    pub family: Family,
    pub entries: Vec<Polynomial>,
}

impl PolySequence {
    pub fn build(family: Family, len: usize) -> Self {
        PolySequence { family, entries: (0..len).map(|n| family.member(n)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn t_poly(coeffs: Vec<Integer>) -> Polynomial {
    Polynomial::new(Var::T, coeffs)
}

/// `N_{n,k} = binom(n,k) binom(n-1,k) / (k+1)`; zero outside `0 <= k <= n-1`.
pub fn narayana_number(n: usize, k: i64) -> Integer {
    let n = n as i64;
    if n < 1 || k < 0 || k > n - 1 {
        return Integer::zero();
    }
    binomial(n, k) * binomial(n - 1, k) / Integer::from(k + 1)
}

/// `C_n(t) = sum_k N_{n,k} t^k`, with `C_0 = 1`.
pub fn narayana_poly(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one(Var::T);
    }
    t_poly((0..n as i64).map(|k| narayana_number(n, k)).collect())
}

/// `W_n(t) = sum_k binom(n,k)^2 t^k`.
pub fn narayana_b_poly(n: usize) -> Polynomial {
    let n = n as i64;
    t_poly((0..=n).map(|k| binomial(n, k).pow(2)).collect())
}

/// `v(n, k) = binom(floor((n-1)/2), floor(k/2)) * binom(floor(n/2), floor((k+1)/2))`,
/// the coefficient of `t^k` in `c_n(t)`. Requires `n >= 1`; zero for `k < 0`.
pub fn v_coeff(n: usize, k: i64) -> Integer {
    if n == 0 || k < 0 {
        return Integer::zero();
    }
    let n = n as i64;
    binomial((n - 1) / 2, k / 2) * binomial(n / 2, (k + 1) / 2)
}

/// `c_n(t) = sum_{k=0..n} v(n,k) t^k`, with `c_0 = 1`.
pub fn c_poly(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one(Var::T);
    }
    t_poly((0..=n as i64).map(|k| v_coeff(n, k)).collect())
}

/// `c_n(t)` from the even/odd recursion, starting at `c_0 = c_1 = 1`.
pub fn c_poly_recursive(n: usize) -> Polynomial {
    let one_plus_t = Polynomial::from_i64s(Var::T, &[1, 1]);
    let mut c = Polynomial::one(Var::T);
    for m in 2..=n {
        c = if m % 2 == 0 {
            &one_plus_t * &c
        } else {
            let half = (m - 1) / 2;
            let correction = narayana_poly(half).square_var().shift(1);
            &(&one_plus_t * &c) - &correction
        };
    }
    c
}

/// `c_{2n+1}(t) = W_n(t^2) + n t C_n(t^2)`.
pub fn c_odd_closed(n: usize) -> Polynomial {
    let even = narayana_b_poly(n).square_var();
    let odd = narayana_poly(n).square_var().shift(1).scale(&Integer::from(n));
    &even + &odd
}

/// `W_n(t^2) + n C_n(t^2)`, without the factor `t`. Not equal to
/// `c_{2n+1}` for `n >= 1`.
pub fn c_odd_printed(n: usize) -> Polynomial {
    let even = narayana_b_poly(n).square_var();
    let odd = narayana_poly(n).square_var().scale(&Integer::from(n));
    &even + &odd
}

/// `c_{2n+1}(t) = sum_k binom(n,k)^2 t^{2k} + sum_k binom(n,k) binom(n,k+1) t^{2k+1}`.
pub fn c_odd_two_sum(n: usize) -> Polynomial {
    let n = n as i64;
    let mut coeffs = vec![Integer::zero(); 2 * n as usize + 2];
    for k in 0..=n {
        let i = 2 * k as usize;
        coeffs[i] = binomial(n, k).pow(2);
        coeffs[i + 1] = binomial(n, k) * binomial(n, k + 1);
    }
    t_poly(coeffs)
}

/// `sum_k binom(n,k) binom(n,k+1) t^k`, which equals `n C_n(t)`.
pub fn adjacent_binomial_poly(n: usize) -> Polynomial {
    let n = n as i64;
    t_poly((0..=n).map(|k| binomial(n, k) * binomial(n, k + 1)).collect())
}

/// `c_n(1)` and `c_n(-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValues {
    pub at_one: Integer,
    pub at_minus_one: Integer,
}

/// `c_n(1) = binom(n, floor(n/2))`; `c_n(-1)` is `0` for even `n >= 2` and
/// the Catalan number `C_{(n-1)/2}` for odd `n` (and `1` for `n = 0`).
///
/// Both closed forms are checked against direct evaluation of [`c_poly`].
pub fn special_values(n: usize) -> Result<SpecialValues> {
    let at_one = binomial(n as i64, n as i64 / 2);
    let at_minus_one = match n {
        0 => Integer::one(),
        _ if n.is_multiple_of(2) => Integer::zero(),
        _ => catalan((n as u64 - 1) / 2),
    };
    let c = c_poly(n);
    let direct_one = c.eval(&Integer::one());
    let direct_minus_one = c.eval(&Integer::from(-1));
    if direct_one != at_one || direct_minus_one != at_minus_one {
        return Err(Error::Internal(format!(
            "c_{n}(±1): closed forms ({at_one}, {at_minus_one}) vs evaluation ({direct_one}, {direct_minus_one})"
        )));
    }
    Ok(SpecialValues { at_one, at_minus_one })
}
