//! Exact coefficient arithmetic.
//!
//! Everything bottoms out in [`Integer`] (an arbitrary-precision signed
//! integer). [`Polynomial`] is a dense univariate polynomial over the
//! integers in a named variable, [`RationalFunction`] is a reduced quotient
//! of two polynomials, and [`TruncatedSeries`] is a power series in `z`
//! known up to a fixed order, generic over any [`Ring`].

mod poly;
mod ratfun;
mod ring;
mod series;

pub use poly::{poly_exact_div, poly_mul, poly_substitute, Polynomial, Substituted, Substitution, Var};
pub use ratfun::{ratfun_normalize, RationalFunction};
pub use ring::Ring;
pub use series::{series_invert, series_mul, series_substitute, SeriesSubstitution, TruncatedSeries};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

/// Binomial coefficient `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Integer {
    use num_traits::{One, Zero};
    if n < 0 || k < 0 || k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Integer {
    let n = n as i64;
    binomial(2 * n, n) / Integer::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_matches_pascal_triangle() {
        let mut row = vec![Integer::from(1)];
        for n in 0..25i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize], "binom({n},{k})");
            }
            assert_eq!(binomial(n, -1), Integer::from(0));
            assert_eq!(binomial(n, n + 1), Integer::from(0));
            let mut next = vec![Integer::from(1); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn first_catalan_numbers() {
        let expected = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), Integer::from(*c));
        }
    }
}
