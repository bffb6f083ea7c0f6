//! q-integers, Gaussian binomial coefficients and q-Narayana coefficients.
//!
//! The bivariate q-Narayana polynomial `C_n(t; q)` is represented as a row of
//! polynomials in `q` indexed by the power of `t` ([`QNarayanaRow`]).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Integer, Polynomial, Var};

/// `[n] = 1 + q + ... + q^(n-1)`, with `[0] = 0`.
pub fn q_int(n: usize) -> Polynomial {
    Polynomial::new(Var::Q, vec![Integer::one(); n])
}

/// Table of Gaussian binomials `[n choose k]_q` for `0 <= k <= n <= max_n`,
/// filled by the q-Pascal recurrence
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
#[derive(Debug, Clone)]
pub struct QBinomialTable {
    rows: Vec<Vec<Polynomial>>,
}

impl QBinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Polynomial>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Polynomial::one(Var::Q)]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k == 0 { Polynomial::zero(Var::Q) } else { prev[k - 1].clone() };
                    let right = prev.get(k).map(|p| p.shift(k)).unwrap_or_else(|| Polynomial::zero(Var::Q));
                    &left + &right
                })
                .collect();
            rows.push(row);
        }
        QBinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[n choose k]_q`, zero when `k < 0` or `k > n`. Panics if `n` is
    /// beyond the table.
    pub fn get(&self, n: i64, k: i64) -> Polynomial {
        if n < 0 || k < 0 || k > n {
            return Polynomial::zero(Var::Q);
        }
        self.rows[n as usize][k as usize].clone()
    }
}

/// Gaussian binomial `[n choose k]_q`; zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> Polynomial {
    if n < 0 || k < 0 || k > n {
        return Polynomial::zero(Var::Q);
    }
    QBinomialTable::new(n as usize).get(n, k)
}

fn narayana_coeff_with(table: &QBinomialTable, n: usize, k: i64) -> Result<Polynomial> {
    let n_i = n as i64;
    if k < 0 || k > n_i {
        return Ok(Polynomial::zero(Var::Q));
    }
    let ku = k as usize;
    let numer = &table.get(n_i, k) * &table.get(n_i - 1, k);
    let quotient = numer.exact_div(&q_int(ku + 1)).map_err(internal)?;
    Ok(quotient.shift(ku * ku + ku))
}

fn internal(e: Error) -> Error {
    Error::Internal(e.to_string())
}

/// Coefficient `N_{n,k}(q)` of `t^k` in the q-Narayana polynomial:
/// `q^(k^2+k) [n choose k] [n-1 choose k] / [k+1]`.
///
/// Zero for `k < 0` or `k >= n`. Requires `n >= 1`.
pub fn q_narayana_coeff(n: usize, k: i64) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::usage("q_narayana_coeff needs n >= 1"));
    }
    narayana_coeff_with(&QBinomialTable::new(n), n, k)
}

/// The q-Narayana polynomial `C_n(t; q)` as its row of `t`-coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QNarayanaRow {
    pub n: usize,
    /// `entries[k] = N_{n,k}(q)` for `k = 0..max(n-1, 0)`.
    pub entries: Vec<Polynomial>,
}

impl QNarayanaRow {
    pub fn compute(n: usize) -> Result<Self> {
        if n == 0 {
            return Ok(QNarayanaRow { n, entries: vec![Polynomial::one(Var::Q)] });
        }
        let table = QBinomialTable::new(n);
        // Sum over k = 0..n; the k = n term must vanish.
        let mut entries =
            (0..=n as i64).map(|k| narayana_coeff_with(&table, n, k)).collect::<Result<Vec<_>>>()?;
        let top = entries.pop().expect("n + 1 entries");
        if !top.is_zero() {
            return Err(Error::Internal(format!("N_{{{n},{n}}}(q) = {top}, expected 0")));
        }
        Ok(QNarayanaRow { n, entries })
    }

    /// `C_n(1; q)`, the sum of the row.
    pub fn sum(&self) -> Polynomial {
        self.entries.iter().fold(Polynomial::zero(Var::Q), |acc, p| &acc + p)
    }

    /// Evaluates every entry at `q = q0`.
    pub fn specialize(&self, q0: &Integer) -> Vec<Integer> {
        self.entries.iter().map(|p| p.eval(q0)).collect()
    }
}

/// q-Catalan number `[2n choose n]_q / [n+1]_q`, checked against the sum of
/// the q-Narayana row.
pub fn q_catalan(n: usize) -> Result<Polynomial> {
    let quotient = q_binomial(2 * n as i64, n as i64).exact_div(&q_int(n + 1)).map_err(internal)?;
    let row_sum = QNarayanaRow::compute(n)?.sum();
    if row_sum != quotient {
        return Err(Error::Internal(format!(
            "q-Catalan {n}: quotient {quotient} differs from row sum {row_sum}"
        )));
    }
    Ok(quotient)
}

/// `N_{n,k}(q0)` for `k = 0..n-1`.
pub fn specialize_row(n: usize, q0: i64) -> Result<Vec<Integer>> {
    if n == 0 {
        return Err(Error::usage("specialize_row needs n >= 1"));
    }
    Ok(QNarayanaRow::compute(n)?.specialize(&Integer::from(q0)))
}

/// Whether every coefficient of `p` is non-negative.
pub fn has_nonnegative_coeffs(p: &Polynomial) -> bool {
    p.coeffs().iter().all(|c| *c >= Integer::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::binomial;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Var::Q, c)
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(0), q(&[]));
        assert_eq!(q_int(1), q(&[1]));
        assert_eq!(q_int(3), q(&[1, 1, 1]));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), q(&[1, 1]));
        assert_eq!(q_binomial(4, 2), q(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 7), q(&[]));
        assert_eq!(q_binomial(5, -1), q(&[]));
        assert_eq!(q_binomial(0, 0), q(&[1]));
    }

    #[test]
    fn q_binomial_product_formula_oracle() {
        // [n]! / ([k]! [n-k]!) computed with exact division
        let fact = |m: usize| (1..=m).fold(q(&[1]), |acc, i| &acc * &q_int(i));
        for n in 0..=10usize {
            for k in 0..=n {
                let expected = fact(n).exact_div(&(&fact(k) * &fact(n - k))).unwrap();
                assert_eq!(q_binomial(n as i64, k as i64), expected, "[{n} {k}]");
            }
        }
    }

    #[test]
    fn q_binomial_structure() {
        let table = QBinomialTable::new(20);
        for n in 0..=20i64 {
            for k in 0..=n {
                let p = table.get(n, k);
                if n <= 12 {
                    assert_eq!(p, table.get(n, n - k), "symmetry [{n} {k}]");
                }
                assert_eq!(p.degree(), Some((k * (n - k)) as usize), "degree [{n} {k}]");
                assert_eq!(p.eval(&Integer::from(1)), binomial(n, k), "q=1 [{n} {k}]");
            }
        }
    }

    #[test]
    fn q_narayana_examples() {
        assert_eq!(q_narayana_coeff(2, 1).unwrap(), q(&[0, 0, 1]));
        assert_eq!(q_narayana_coeff(3, 1).unwrap(), q(&[0, 0, 1, 1, 1]));
        for n in 1..8 {
            assert_eq!(q_narayana_coeff(n, 0).unwrap(), q(&[1]));
            assert_eq!(q_narayana_coeff(n, n as i64).unwrap(), q(&[]));
            assert_eq!(q_narayana_coeff(n, -1).unwrap(), q(&[]));
        }
        assert!(matches!(q_narayana_coeff(0, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn q_catalan_examples() {
        assert_eq!(q_catalan(0).unwrap(), q(&[1]));
        assert_eq!(q_catalan(2).unwrap(), q(&[1, 0, 1]));
        assert_eq!(q_catalan(3).unwrap(), q(&[1, 0, 1, 1, 1, 0, 1]));
        for n in 0..=10 {
            let c = q_catalan(n).unwrap();
            assert_eq!(c.eval(&Integer::from(1)), crate::exactalg::catalan(n as u64));
        }
    }

    #[test]
    fn rows_have_nonnegative_entries() {
        for n in 1..=10 {
            let row = QNarayanaRow::compute(n).unwrap();
            assert_eq!(row.entries.len(), n);
            assert!(row.entries[0].is_one());
            assert!(row.entries.iter().all(has_nonnegative_coeffs));
        }
    }

    #[test]
    fn specialize_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| Integer::from(x)).collect::<Vec<_>>();
        assert_eq!(specialize_row(4, -1).unwrap(), ints(&[1, 2, 2, 1]));
        assert_eq!(specialize_row(4, 1).unwrap(), ints(&[1, 6, 6, 1]));
        assert_eq!(specialize_row(1, -1).unwrap(), ints(&[1]));
        assert_eq!(specialize_row(1, 7).unwrap(), ints(&[1]));
    }
}
