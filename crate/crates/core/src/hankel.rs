//! Hankel determinants and Jacobi continued fractions.
//!
//! If a power series with constant term 1 expands as
//!
//! ```text
//! f(z) = 1 / (1 - s_0 z - t_0 z^2 / (1 - s_1 z - t_1 z^2 / (1 - ...)))
//! ```
//!
//! with every `t_k` nonzero, the Hankel determinants of its coefficients are
//! `d_n = prod_{j=1}^{n-1} prod_{k=0}^{j-1} t_k`. This module computes both
//! sides independently: determinants by fraction-free elimination (checked
//! against cofactor expansion), and the `t_k` by peeling levels off the
//! series over the field of rational functions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{Integer, Polynomial, RationalFunction, TruncatedSeries, Var};
use crate::gfun::{build_series, SeriesTag};
use crate::narayana::{Family, PolySequence};

/// Largest dimension accepted by [`det_cofactor`].
pub const COFACTOR_MAX_DIM: usize = 6;

/// Square matrix of polynomials in one variable, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    var: Var,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let dim = rows.len();
        let var = rows.first().and_then(|r| r.first()).map_or(Var::T, Polynomial::var);
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::usage(format!("row of length {} in a {dim}x{dim} matrix", row.len())));
            }
            for p in row {
                if p.var() != var {
                    return Err(Error::VariableMismatch { left: var, right: p.var() });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { dim, var, entries })
    }

    pub fn identity(var: Var, dim: usize) -> Self {
        let entries = (0..dim * dim)
            .map(|i| if i / dim == i % dim { Polynomial::one(var) } else { Polynomial::zero(var) })
            .collect();
        PolyMatrix { dim, var, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        self.entries.chunks(self.dim.max(1)).map(<[Polynomial]>::to_vec).collect()
    }
}

/// `(seq[i + j + shift])` for `0 <= i, j < n`.
pub fn hankel_matrix(seq: &PolySequence, n: usize, shift: usize) -> Result<PolyMatrix> {
    if shift > 1 {
        return Err(Error::usage(format!("shift must be 0 or 1, got {shift}")));
    }
    if n > 0 && seq.len() < 2 * n - 1 + shift {
        return Err(Error::usage(format!(
            "{}x{n} Hankel matrix with shift {shift} needs {} terms of {}, have {}",
            n,
            2 * n - 1 + shift,
            seq.family,
            seq.len()
        )));
    }
    let rows = (0..n).map(|i| (0..n).map(|j| seq.entries[i + j + shift].clone()).collect()).collect();
    PolyMatrix::new(rows)
}

/// Determinant by fraction-free (Bareiss) elimination.
///
/// After step `k` every entry of the trailing block is a `(k+1)`-minor of
/// the input, so the division by the previous pivot is exact in `Z[t]`. A
/// zero pivot is replaced by a lower row with a nonzero entry in the pivot
/// column (flipping the sign); if there is none the determinant is zero.
pub fn det_bareiss(m: &PolyMatrix) -> Result<Polynomial> {
    let n = m.dim;
    if n == 0 {
        return Ok(Polynomial::one(m.var));
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev_pivot = Polynomial::one(m.var);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Polynomial::zero(m.var)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = cross.exact_div(&prev_pivot).map_err(|e| Error::Internal(e.to_string()))?;
            }
            a[i][k] = Polynomial::zero(m.var);
        }
        prev_pivot = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant by Laplace expansion along the first row; only for
/// dimension at most [`COFACTOR_MAX_DIM`].
pub fn det_cofactor(m: &PolyMatrix) -> Result<Polynomial> {
    if m.dim > COFACTOR_MAX_DIM {
        return Err(Error::usage(format!(
            "cofactor expansion limited to dimension {COFACTOR_MAX_DIM}, got {}",
            m.dim
        )));
    }
    let cols: Vec<usize> = (0..m.dim).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace(m: &PolyMatrix, row: usize, cols: &[usize]) -> Polynomial {
    if cols.is_empty() {
        return Polynomial::one(m.var);
    }
    let mut acc = Polynomial::zero(m.var);
    for (idx, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &laplace(m, row + 1, &rest);
        acc = if idx % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// One line of a Hankel table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HankelRow {
    pub n: usize,
    pub shift: usize,
    pub family: Family,
    pub determinant: Polynomial,
    pub expected: Polynomial,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl HankelRow {
    pub const CSV_HEADER: &'static str = "n,shift,family,determinant,expected,match";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n, self.shift, self.family, self.determinant, self.expected, self.matches
        )
    }
}

impl fmt::Display for HankelRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} shift {} n={}: det = {}, expected {} [{}]",
            self.family,
            self.shift,
            self.n,
            self.determinant,
            self.expected,
            if self.matches { "match" } else { "MISMATCH" }
        )
    }
}

/// Predicted value of the `n x n` Hankel determinant: `t^binom(n,2)`, except
/// `(-t)^binom(n,2)` for the shifted `c_n` sequence.
pub fn expected_hankel(family: Family, shift: usize, n: usize) -> Result<Polynomial> {
    let exponent = n * n.saturating_sub(1) / 2;
    let base = match (family, shift) {
        (Family::NarayanaPoly, 0 | 1) | (Family::SmallC, 0) => Integer::from(1),
        (Family::SmallC, 1) => Integer::from(-1),
        (Family::NarayanaPoly | Family::SmallC, s) => {
            return Err(Error::usage(format!("shift must be 0 or 1, got {s}")))
        }
        (other, _) => return Err(Error::usage(format!("no Hankel prediction for {other}"))),
    };
    Ok(Polynomial::monomial(Var::T, base.pow(exponent as u32), exponent))
}

/// Determinants for `n = 1..=max_n` beside their predicted values.
pub fn hankel_table(family: Family, shift: usize, max_n: usize) -> Result<Vec<HankelRow>> {
    expected_hankel(family, shift, 0)?;
    let seq = PolySequence::build(family, 2 * max_n + 1);
    (1..=max_n)
        .map(|n| {
            let determinant = det_bareiss(&hankel_matrix(&seq, n, shift)?)?;
            let expected = expected_hankel(family, shift, n)?;
            let matches = determinant == expected;
            Ok(HankelRow { n, shift, family, determinant, expected, matches })
        })
        .collect()
}

/// Jacobi continued fraction coefficients.
///
/// `t` holds the extracted levels `t_0..t_{depth-1}`. `s` holds
/// `s_0..s_{depth-1}` plus, when the series was long enough, the next
/// diagonal coefficient `s_depth`. If `terminated` is set, the last `t` is
/// zero: the series is the finite fraction ending at that level and nothing
/// deeper was extracted. Every other `t_k` is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JFraction {
    pub s: Vec<RationalFunction>,
    pub t: Vec<RationalFunction>,
    pub terminated: bool,
}

impl JFraction {
    pub fn depth(&self) -> usize {
        self.t.len()
    }

    fn var(&self) -> Var {
        self.s.first().map_or(Var::T, RationalFunction::var)
    }
}

/// Peels `depth` levels off `f = 1 / (1 - s z - t z^2 f')`.
///
/// Requires constant term 1 and `order >= 2 * depth + 1`. Stops early at the
/// first zero `t_k`.
pub fn jfraction_extract(series: &TruncatedSeries<RationalFunction>, depth: usize) -> Result<JFraction> {
    let var = series.coeff(0).var();
    let one = RationalFunction::one(var);
    if *series.coeff(0) != one {
        return Err(Error::usage(format!(
            "J-fraction extraction needs constant term 1, got {}",
            series.coeff(0)
        )));
    }
    if series.order() < 2 * depth + 1 {
        return Err(Error::usage(format!(
            "depth {depth} needs series order >= {}, got {}",
            2 * depth + 1,
            series.order()
        )));
    }
    let mut f = series.clone();
    let mut s = Vec::with_capacity(depth + 1);
    let mut t = Vec::with_capacity(depth);
    for _ in 0..depth {
        let order = f.order();
        // h = 1 - 1/f = s z + t z^2 f'
        let h = TruncatedSeries::constant(one.clone(), order).try_sub(&f.invert()?)?;
        let s_k = h.coeff(1).clone();
        let rest =
            h.try_sub(&TruncatedSeries::from_z_poly(&[RationalFunction::zero(var), s_k.clone()], order))?;
        let t_k = rest.coeff(2).clone();
        s.push(s_k);
        if t_k.is_zero() {
            t.push(t_k);
            return Ok(JFraction { s, t, terminated: true });
        }
        let t_inv = t_k.inverse()?;
        t.push(t_k);
        f = rest.shift_down(2).scale(&t_inv);
    }
    if f.order() >= 1 {
        let h = TruncatedSeries::constant(one.clone(), f.order()).try_sub(&f.invert()?)?;
        s.push(h.coeff(1).clone());
    }
    Ok(JFraction { s, t, terminated: false })
}

/// Evaluates the continued fraction bottom-up as a series of the given
/// order. With `d` levels and the trailing `s_d` present, the result is exact
/// through `z^(2d+1)`.
pub fn jfraction_to_series(jf: &JFraction, order: usize) -> Result<TruncatedSeries<RationalFunction>> {
    let var = jf.var();
    let one = RationalFunction::one(var);
    let unit = TruncatedSeries::constant(one.clone(), order);
    let mut tail = match jf.s.get(jf.t.len()) {
        Some(s_last) => TruncatedSeries::from_z_poly(&[one.clone(), s_last.negated()], order).invert()?,
        None => unit.clone(),
    };
    for k in (0..jf.t.len()).rev() {
        let linear = TruncatedSeries::from_z_poly(&[one.clone(), jf.s[k].negated()], order);
        let denom = linear.try_sub(&tail.shift_up(2).scale(&jf.t[k]))?;
        tail = denom.invert()?;
    }
    Ok(tail)
}

/// `prod_{j=1}^{n-1} prod_{k=0}^{j-1} t_k`, i.e. `prod_k t_k^(n-1-k)`.
pub fn hankel_product_formula(t_seq: &[RationalFunction], n: usize) -> Result<RationalFunction> {
    let var = t_seq.first().map_or(Var::T, RationalFunction::var);
    let needed = n.saturating_sub(1);
    if t_seq.len() < needed {
        return Err(Error::usage(format!(
            "dimension {n} needs t_0..t_{}, have {} coefficients",
            needed.saturating_sub(1),
            t_seq.len()
        )));
    }
    let mut acc = RationalFunction::one(var);
    for j in 1..n {
        for t_k in &t_seq[..j] {
            acc = acc.try_mul(t_k)?;
        }
    }
    Ok(acc)
}

/// The closed forms `(s_k, t_k)`: for `g`, `((-1)^k (1+t), -t)`; for `c`,
/// `s_0 = 1`, `s_k = (-1)^k (1-t)` for `k >= 1` and `t_k = t`.
pub fn expected_jfraction(tag: SeriesTag, k: usize) -> Result<(RationalFunction, RationalFunction)> {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let (s, t) = match tag {
        SeriesTag::SmallG => {
            (Polynomial::from_i64s(Var::T, &[sign, sign]), Polynomial::from_i64s(Var::T, &[0, -1]))
        }
        SeriesTag::SmallC => (
            if k == 0 { Polynomial::one(Var::T) } else { Polynomial::from_i64s(Var::T, &[sign, -sign]) },
            Polynomial::from_i64s(Var::T, &[0, 1]),
        ),
        other => return Err(Error::usage(format!("no J-fraction closed form for {}", other.name()))),
    };
    Ok((RationalFunction::from_poly(s), RationalFunction::from_poly(t)))
}

/// Prefix of a generating function over `Q(t)`, long enough for `depth`
/// levels.
pub fn family_series(tag: SeriesTag, depth: usize) -> TruncatedSeries<RationalFunction> {
    build_series(tag, 2 * depth + 1).series.map_into(|p| RationalFunction::from_poly(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Var::T, c)
    }

    fn rf(c: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(t(c))
    }

    fn matrix(rows: &[&[&[i64]]]) -> PolyMatrix {
        PolyMatrix::new(rows.iter().map(|r| r.iter().map(|c| t(c)).collect()).collect()).unwrap()
    }

    #[test]
    fn hankel_matrix_examples() {
        let c = PolySequence::build(Family::SmallC, 8);
        assert_eq!(hankel_matrix(&c, 2, 0).unwrap(), matrix(&[&[&[1], &[1]], &[&[1], &[1, 1]]]));
        assert_eq!(hankel_matrix(&c, 1, 0).unwrap(), matrix(&[&[&[1]]]));
        let nar = PolySequence::build(Family::NarayanaPoly, 8);
        assert_eq!(hankel_matrix(&nar, 2, 1).unwrap(), matrix(&[&[&[1], &[1, 1]], &[&[1, 1], &[1, 3, 1]]]));
        assert!(matches!(hankel_matrix(&c, 5, 0), Err(Error::Usage(_))));
        assert!(matches!(hankel_matrix(&c, 2, 2), Err(Error::Usage(_))));
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_bareiss(&matrix(&[&[&[1], &[1]], &[&[1], &[1, 1]]])).unwrap(), t(&[0, 1]));
        assert_eq!(det_bareiss(&PolyMatrix::identity(Var::T, 4)).unwrap(), t(&[1]));
        assert_eq!(det_bareiss(&matrix(&[&[&[1], &[1, 1]], &[&[1, 1], &[1, 3, 1]]])).unwrap(), t(&[0, 1]));
        // zero pivot with a swap
        assert_eq!(det_bareiss(&matrix(&[&[&[], &[1]], &[&[1], &[]]])).unwrap(), t(&[-1]));
        // zero pivot column
        assert_eq!(det_bareiss(&matrix(&[&[&[], &[1]], &[&[], &[2, 1]]])).unwrap(), t(&[]));
        assert_eq!(det_bareiss(&PolyMatrix::identity(Var::T, 0)).unwrap(), t(&[1]));
    }

    #[test]
    fn cofactor_examples() {
        assert_eq!(det_cofactor(&matrix(&[&[&[3, 1]]])).unwrap(), t(&[3, 1]));
        assert_eq!(det_cofactor(&matrix(&[&[&[], &[1]], &[&[1], &[]]])).unwrap(), t(&[-1]));
        assert!(matches!(det_cofactor(&PolyMatrix::identity(Var::T, 7)), Err(Error::Usage(_))));
    }

    #[test]
    fn table_examples() {
        let rows = hankel_table(Family::SmallC, 0, 2).unwrap();
        assert_eq!((rows[1].n, &rows[1].determinant, rows[1].matches), (2, &t(&[0, 1]), true));
        let rows = hankel_table(Family::SmallC, 1, 2).unwrap();
        assert_eq!((&rows[1].determinant, &rows[1].expected), (&t(&[0, -1]), &t(&[0, -1])));
        for family in [Family::SmallC, Family::NarayanaPoly] {
            for shift in 0..2 {
                let first = &hankel_table(family, shift, 1).unwrap()[0];
                assert_eq!((first.n, &first.determinant, first.matches), (1, &t(&[1]), true));
            }
        }
        assert!(hankel_table(Family::NarayanaB, 0, 3).is_err());
        assert_eq!(hankel_table(Family::SmallC, 1, 3).unwrap()[2].to_csv(), "3,1,small_c,-t^3,-t^3,true");
    }

    #[test]
    fn extraction_examples() {
        let g = jfraction_extract(&family_series(SeriesTag::SmallG, 2), 2).unwrap();
        assert_eq!(&g.s[..2], &[rf(&[1, 1]), rf(&[-1, -1])]);
        assert_eq!(g.t[0], rf(&[0, -1]));
        let c = jfraction_extract(&family_series(SeriesTag::SmallC, 2), 2).unwrap();
        assert_eq!(&c.s[..2], &[rf(&[1]), rf(&[-1, 1])]);
        assert_eq!(c.t[0], rf(&[0, 1]));
        let geometric = TruncatedSeries::new(vec![rf(&[1]); 6]);
        let jf = jfraction_extract(&geometric, 2).unwrap();
        assert_eq!(
            (jf.s.clone(), jf.t.clone(), jf.depth(), jf.terminated),
            (vec![rf(&[1])], vec![rf(&[])], 1, true)
        );
        assert_eq!(jfraction_to_series(&jf, 5).unwrap(), geometric);
    }

    #[test]
    fn extraction_errors() {
        let bad = TruncatedSeries::new(vec![rf(&[2]), rf(&[1]), rf(&[1])]);
        assert!(matches!(jfraction_extract(&bad, 1), Err(Error::Usage(_))));
        let short = family_series(SeriesTag::SmallC, 1);
        assert!(matches!(jfraction_extract(&short, 2), Err(Error::Usage(_))));
    }

    #[test]
    fn reconstruction_examples() {
        let empty = JFraction { s: vec![], t: vec![], terminated: false };
        assert!(jfraction_to_series(&empty, 4).unwrap().is_one());
        let g = JFraction {
            s: vec![rf(&[1, 1]), rf(&[-1, -1]), rf(&[1, 1])],
            t: vec![rf(&[0, -1]), rf(&[0, -1])],
            terminated: false,
        };
        assert_eq!(jfraction_to_series(&g, 4).unwrap(), family_series(SeriesTag::SmallG, 2).truncate(4));
        let c = JFraction {
            s: vec![rf(&[1]), rf(&[-1, 1]), rf(&[1, -1])],
            t: vec![rf(&[0, 1]), rf(&[0, 1])],
            terminated: false,
        };
        assert_eq!(jfraction_to_series(&c, 4).unwrap(), family_series(SeriesTag::SmallC, 2).truncate(4));
    }

    #[test]
    fn product_formula_examples() {
        assert_eq!(hankel_product_formula(&vec![rf(&[0, 1]); 3], 4).unwrap(), rf(&[0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(hankel_product_formula(&vec![rf(&[0, -1]); 2], 3).unwrap(), rf(&[0, 0, 0, -1]));
        assert_eq!(hankel_product_formula(&[], 1).unwrap(), rf(&[1]));
        assert!(hankel_product_formula(&[rf(&[0, 1])], 3).is_err());
    }

    #[test]
    fn closed_forms_hold_to_depth_8() {
        for tag in [SeriesTag::SmallC, SeriesTag::SmallG] {
            let jf = jfraction_extract(&family_series(tag, 8), 8).unwrap();
            assert!(!jf.terminated);
            for k in 0..8 {
                let (s, t) = expected_jfraction(tag, k).unwrap();
                assert_eq!((&jf.s[k], &jf.t[k]), (&s, &t), "{} level {k}", tag.name());
            }
            assert_eq!(jf.s[8], expected_jfraction(tag, 8).unwrap().0);
        }
    }
}
