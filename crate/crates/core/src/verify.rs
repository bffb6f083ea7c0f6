//! Registry of every check behind `qnarayana verify`.
//!
//! Checks are listed once in [`registry`] and run independently; results
//! always come back in registry order. Stored coefficient lists (the first
//! terms of `c_n` and `C_n`) live in [`Fixtures`] so that a corrupted fixture
//! is caught by the same run.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dyckoracle::{enumerate_dyck, qt_distribution, symmetric_valley_distribution};
use crate::error::{Error, Result};
use crate::exactalg::{binomial, catalan, Integer, Polynomial, RationalFunction, Var};
use crate::gfun::{verify_identity, Identity, IdentityReport, SeriesTag};
use crate::hankel::{
    det_bareiss, det_cofactor, expected_jfraction, family_series, hankel_matrix, hankel_product_formula,
    hankel_table, jfraction_extract, jfraction_to_series, PolyMatrix,
};
use crate::narayana::{
    adjacent_binomial_poly, c_odd_closed, c_odd_two_sum, c_poly, c_poly_recursive, narayana_number,
    narayana_poly, v_coeff, Family, PolySequence,
};
use crate::qcomb::{q_binomial, q_int, QNarayanaRow};

const SMALL_C_FIRST_TERMS: [&str; 6] = ["1", "1", "1+t", "1+t+t^2", "1+2t+2t^2+t^3", "1+2t+4t^2+2t^3+t^4"];
const NARAYANA_FIRST_TERMS: [&str; 6] =
    ["1", "1", "1+t", "1+3t+t^2", "1+6t+6t^2+t^3", "1+10t+20t^2+10t^3+t^4"];

/// Seed for the random determinant cross-check.
pub const RANDOM_MATRIX_SEED: u64 = 0x5eed_cafe;

/// Stored first terms of `c_n(t)` and `C_n(t)`, `n = 0, 1, ...`.
///
/// Serialized as `{"small_c": ["1", "1", "1+t", ...], "narayana": [...]}`
/// with polynomials in canonical text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixtures {
    pub small_c: Vec<Polynomial>,
    pub narayana: Vec<Polynomial>,
}

#[derive(Serialize, Deserialize)]
struct FixturesRepr {
    small_c: Vec<String>,
    narayana: Vec<String>,
}

impl Default for Fixtures {
    fn default() -> Self {
        let parse = |terms: &[&str]| {
            terms.iter().map(|s| Polynomial::parse(s, Var::T).expect("stored fixture parses")).collect()
        };
        Fixtures { small_c: parse(&SMALL_C_FIRST_TERMS), narayana: parse(&NARAYANA_FIRST_TERMS) }
    }
}

impl Fixtures {
    pub fn from_json(text: &str) -> Result<Self> {
        let repr: FixturesRepr =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixtures: {e}")))?;
        let parse =
            |terms: &[String]| terms.iter().map(|s| Polynomial::parse(s, Var::T)).collect::<Result<Vec<_>>>();
        Ok(Fixtures { small_c: parse(&repr.small_c)?, narayana: parse(&repr.narayana)? })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let repr = FixturesRepr {
            small_c: self.small_c.iter().map(ToString::to_string).collect(),
            narayana: self.narayana.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string_pretty(&repr).expect("fixtures serialize")
    }
}

/// Bounds used by the registered checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Truncation order of the generating-function identities.
    pub order: usize,
    /// Largest `n` for the route and palindromicity checks on `c_n`.
    pub route_max_n: usize,
    /// Largest `n` for the odd-index closed forms of `c_{2n+1}`.
    pub odd_max_n: usize,
    pub hankel_max_n: usize,
    pub cofactor_max_n: usize,
    pub random_matrices: usize,
    pub jfraction_depth: usize,
    pub product_max_n: usize,
    pub qt_max_n: usize,
    pub symmetric_max_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            order: 20,
            route_max_n: 20,
            odd_max_n: 10,
            hankel_max_n: 7,
            cofactor_max_n: 5,
            random_matrices: 500,
            jfraction_depth: 8,
            product_max_n: 6,
            qt_max_n: 8,
            symmetric_max_n: 12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Fixtures,
    Routes,
    Identities,
    Hankel,
    Jfraction,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    FirstTermsSmallC,
    FirstTermsNarayana,
    RouteRecursive,
    RouteQSpecialization,
    OddClosedForm,
    OddTwoSum,
    Palindromic,
    AdjacentBinomials,
    NarayanaRowSums,
    ValuesAtOne,
    ValuesAtMinusOne,
    QCatalanSum,
    Identity(Identity),
    HankelTable(Family, usize),
    BareissVsCofactorHankel,
    BareissVsCofactorRandom,
    JFractionClosedForm(SeriesTag),
    ProductFormula,
    JFractionRoundTrip,
    OracleQ,
    OracleSymmetric,
}

/// Every check, in report order.
pub fn registry() -> Vec<Check> {
    let mut checks = vec![
        Check::FirstTermsSmallC,
        Check::FirstTermsNarayana,
        Check::RouteRecursive,
        Check::RouteQSpecialization,
        Check::OddClosedForm,
        Check::OddTwoSum,
        Check::Palindromic,
        Check::AdjacentBinomials,
        Check::NarayanaRowSums,
        Check::ValuesAtOne,
        Check::ValuesAtMinusOne,
        Check::QCatalanSum,
    ];
    checks.extend(Identity::ALL.into_iter().map(Check::Identity));
    for family in [Family::NarayanaPoly, Family::SmallC] {
        for shift in 0..2 {
            checks.push(Check::HankelTable(family, shift));
        }
    }
    checks.extend([
        Check::BareissVsCofactorHankel,
        Check::BareissVsCofactorRandom,
        Check::JFractionClosedForm(SeriesTag::SmallG),
        Check::JFractionClosedForm(SeriesTag::SmallC),
        Check::ProductFormula,
        Check::JFractionRoundTrip,
        Check::OracleQ,
        Check::OracleSymmetric,
    ]);
    checks
}

impl Check {
    pub fn name(&self) -> String {
        match self {
            Check::FirstTermsSmallC => "first_terms_c".into(),
            Check::FirstTermsNarayana => "first_terms_narayana".into(),
            Check::RouteRecursive => "route_recursive".into(),
            Check::RouteQSpecialization => "route_q_specialization".into(),
            Check::OddClosedForm => "odd_closed_form".into(),
            Check::OddTwoSum => "odd_two_sum".into(),
            Check::Palindromic => "palindromic".into(),
            Check::AdjacentBinomials => "adjacent_binomials".into(),
            Check::NarayanaRowSums => "narayana_row_sums".into(),
            Check::ValuesAtOne => "values_at_one".into(),
            Check::ValuesAtMinusOne => "values_at_minus_one".into(),
            Check::QCatalanSum => "q_catalan_sum".into(),
            Check::Identity(id) => id.name().into(),
            Check::HankelTable(family, shift) => {
                let f = if *family == Family::SmallC { "c" } else { "narayana" };
                format!("hankel_{f}_shift{shift}")
            }
            Check::BareissVsCofactorHankel => "bareiss_vs_cofactor_hankel".into(),
            Check::BareissVsCofactorRandom => "bareiss_vs_cofactor_random".into(),
            Check::JFractionClosedForm(tag) => format!("jfraction_{}", tag.name()),
            Check::ProductFormula => "product_formula".into(),
            Check::JFractionRoundTrip => "jfraction_round_trip".into(),
            Check::OracleQ => "oracle_q_narayana".into(),
            Check::OracleSymmetric => "oracle_symmetric".into(),
        }
    }

    pub fn group(&self) -> Group {
        match self {
            Check::FirstTermsSmallC | Check::FirstTermsNarayana => Group::Fixtures,
            Check::Identity(_) => Group::Identities,
            Check::HankelTable(..) | Check::BareissVsCofactorHankel | Check::BareissVsCofactorRandom => {
                Group::Hankel
            }
            Check::JFractionClosedForm(_) | Check::ProductFormula | Check::JFractionRoundTrip => {
                Group::Jfraction
            }
            Check::OracleQ | Check::OracleSymmetric => Group::Oracle,
            _ => Group::Routes,
        }
    }

    pub fn by_name(name: &str) -> Result<Check> {
        registry()
            .into_iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::usage(format!("unknown check {name:?}")))
    }

    pub fn run(&self, fixtures: &Fixtures, config: &VerifyConfig) -> CheckOutcome {
        let mut report = None;
        let result = match self {
            Check::Identity(id) => verify_identity(*id, config.order).map(|r| {
                let outcome = if r.passed() { Ok(format!("order {}", r.order)) } else { Err(r.to_string()) };
                report = Some(r);
                outcome
            }),
            other => other.evaluate(fixtures, config),
        };
        let (passed, detail) = match result {
            Ok(Ok(detail)) => (true, detail),
            Ok(Err(mismatch)) => (false, mismatch),
            Err(e) => (false, format!("error: {e}")),
        };
        CheckOutcome { name: self.name(), group: self.group(), passed, detail, report }
    }

    /// `Ok(Ok(summary))` on success, `Ok(Err(first mismatch))` on failure.
    fn evaluate(&self, fixtures: &Fixtures, config: &VerifyConfig) -> Result<Outcome> {
        match self {
            Check::FirstTermsSmallC => Ok(compare_fixture("c", &fixtures.small_c, c_poly)),
            Check::FirstTermsNarayana => Ok(compare_fixture("C", &fixtures.narayana, narayana_poly)),
            Check::RouteRecursive => {
                Ok(all_n(0..=config.route_max_n, |n| eq(format!("c_{n}"), &c_poly(n), &c_poly_recursive(n))))
            }
            Check::RouteQSpecialization => try_all_n(1..=config.route_max_n, |n| {
                let row = QNarayanaRow::compute(n)?;
                let specialized = Polynomial::new(Var::T, row.specialize(&Integer::from(-1)));
                Ok(eq(format!("c_{n} vs C_{n}(t;-1)"), &c_poly(n), &specialized))
            }),
            Check::OddClosedForm => Ok(all_n(0..=config.odd_max_n, |n| {
                eq(format!("c_{}", 2 * n + 1), &c_poly(2 * n + 1), &c_odd_closed(n))
            })),
            Check::OddTwoSum => Ok(all_n(0..=config.odd_max_n, |n| {
                eq(format!("c_{}", 2 * n + 1), &c_poly(2 * n + 1), &c_odd_two_sum(n))
            })),
            Check::Palindromic => Ok(all_n(0..=config.route_max_n, |n| {
                let c = c_poly(n);
                if c.is_palindromic() {
                    Ok(())
                } else {
                    Err(format!("c_{n} = {c} is not palindromic"))
                }
            })),
            Check::AdjacentBinomials => Ok(all_n(0..=12, |n| {
                eq(format!("n C_{n}"), &narayana_poly(n).scale(&Integer::from(n)), &adjacent_binomial_poly(n))
            })),
            Check::NarayanaRowSums => Ok(all_n(0..=15, |n| {
                let sum: Integer = (0..n as i64).map(|k| narayana_number(n, k)).sum();
                let expected = if n == 0 { Integer::from(1) } else { sum };
                eq_int(format!("sum_k N_{{{n},k}}"), &catalan(n as u64), &expected)
            })),
            Check::ValuesAtOne => Ok(all_n(0..=config.route_max_n, |n| {
                eq_int(
                    format!("c_{n}(1)"),
                    &binomial(n as i64, n as i64 / 2),
                    &c_poly(n).eval(&Integer::from(1)),
                )
            })),
            Check::ValuesAtMinusOne => Ok(all_n(0..=config.odd_max_n, |n| {
                let minus_one = Integer::from(-1);
                if n >= 1 {
                    eq_int(format!("c_{}(-1)", 2 * n), &Integer::from(0), &c_poly(2 * n).eval(&minus_one))?;
                }
                eq_int(
                    format!("c_{}(-1)", 2 * n + 1),
                    &catalan(n as u64),
                    &c_poly(2 * n + 1).eval(&minus_one),
                )
            })),
            Check::QCatalanSum => try_all_n(0..=10, |n| {
                let quotient = q_binomial(2 * n as i64, n as i64).exact_div(&q_int(n + 1))?;
                let sum = QNarayanaRow::compute(n)?.sum();
                Ok(eq(format!("q-Catalan {n}"), &quotient, &sum))
            }),
            Check::Identity(_) => unreachable!("identities carry their own report"),
            Check::HankelTable(family, shift) => {
                let rows = hankel_table(*family, *shift, config.hankel_max_n)?;
                Ok(match rows.iter().find(|r| !r.matches) {
                    Some(r) => Err(r.to_string()),
                    None => Ok(format!("n = 1..{} match", config.hankel_max_n)),
                })
            }
            Check::BareissVsCofactorHankel => {
                let mut count = 0;
                for family in [Family::NarayanaPoly, Family::SmallC] {
                    let seq = PolySequence::build(family, 2 * config.cofactor_max_n + 1);
                    for shift in 0..2 {
                        for n in 1..=config.cofactor_max_n {
                            let m = hankel_matrix(&seq, n, shift)?;
                            if let Err(e) = same_det(&m)? {
                                return Ok(Err(format!("{family} shift {shift} n = {n}: {e}")));
                            }
                            count += 1;
                        }
                    }
                }
                Ok(Ok(format!("{count} Hankel matrices agree")))
            }
            Check::BareissVsCofactorRandom => {
                let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_MATRIX_SEED);
                for i in 0..config.random_matrices {
                    let m = random_matrix(&mut rng, 5, 3, 5);
                    if let Err(e) = same_det(&m)? {
                        return Ok(Err(format!("random matrix #{i}: {e}")));
                    }
                }
                Ok(Ok(format!("{} random matrices agree", config.random_matrices)))
            }
            Check::JFractionClosedForm(tag) => {
                let depth = config.jfraction_depth;
                let jf = jfraction_extract(&family_series(*tag, depth), depth)?;
                if jf.terminated {
                    return Ok(Err(format!("expansion stopped at depth {}", jf.depth())));
                }
                for k in 0..depth {
                    let (s, t) = expected_jfraction(*tag, k)?;
                    if jf.s[k] != s || jf.t[k] != t {
                        return Ok(Err(format!(
                            "level {k}: extracted (s, t) = ({}, {}), expected ({s}, {t})",
                            jf.s[k], jf.t[k]
                        )));
                    }
                }
                Ok(Ok(format!("s_k, t_k match for k < {depth}")))
            }
            Check::ProductFormula => {
                let max_n = config.product_max_n;
                for (tag, family, shift) in
                    [(SeriesTag::SmallC, Family::SmallC, 0), (SeriesTag::SmallG, Family::SmallC, 1)]
                {
                    let jf = jfraction_extract(&family_series(tag, max_n), max_n)?;
                    let seq = PolySequence::build(family, 2 * max_n + 1);
                    for n in 1..=max_n {
                        let det = det_bareiss(&hankel_matrix(&seq, n, shift)?)?;
                        let product = hankel_product_formula(&jf.t, n)?;
                        if product != RationalFunction::from_poly(det.clone()) {
                            return Ok(Err(format!(
                                "{} n = {n}: product {product}, determinant {det}",
                                tag.name()
                            )));
                        }
                    }
                }
                Ok(Ok(format!("product of t_k equals d_n for n <= {max_n}")))
            }
            Check::JFractionRoundTrip => {
                let depth = config.jfraction_depth;
                for tag in [SeriesTag::SmallC, SeriesTag::SmallG] {
                    let f = family_series(tag, depth);
                    let jf = jfraction_extract(&f, depth)?;
                    let back = jfraction_to_series(&jf, 2 * depth + 1)?;
                    if back != f.truncate(2 * depth + 1) {
                        return Ok(Err(format!("{} does not round-trip at depth {depth}", tag.name())));
                    }
                }
                Ok(Ok(format!("depth {depth}")))
            }
            Check::OracleQ => {
                for n in 1..=config.qt_max_n {
                    let dist = qt_distribution(n)?;
                    let row = QNarayanaRow::compute(n)?;
                    let expected: BTreeMap<usize, Polynomial> = row
                        .entries
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| !p.is_zero())
                        .map(|(k, p)| (k, p.clone()))
                        .collect();
                    if dist != expected {
                        return Ok(Err(format!("n = {n}: enumerated {dist:?}, formula {expected:?}")));
                    }
                    let count = enumerate_dyck(n)?.count();
                    if Integer::from(count) != catalan(n as u64) {
                        return Ok(Err(format!("n = {n}: {count} paths")));
                    }
                    for (k, p) in &dist {
                        let at_one = p.eval(&Integer::from(1));
                        if at_one != narayana_number(n, *k as i64) {
                            return Ok(Err(format!("n = {n}, k = {k}: q = 1 gives {at_one}")));
                        }
                    }
                }
                Ok(Ok(format!("maj by valleys equals N_{{n,k}}(q) for n <= {}", config.qt_max_n)))
            }
            Check::OracleSymmetric => {
                for n in 1..=config.symmetric_max_n {
                    let dist = symmetric_valley_distribution(n)?;
                    let expected: BTreeMap<usize, Integer> = (0..=n)
                        .map(|k| (k, v_coeff(n, k as i64)))
                        .filter(|(_, v)| *v != Integer::from(0))
                        .collect();
                    if dist != expected {
                        return Ok(Err(format!("n = {n}: enumerated {dist:?}, v(n, k) gives {expected:?}")));
                    }
                    let total: Integer = dist.values().sum();
                    if total != binomial(n as i64, n as i64 / 2) {
                        return Ok(Err(format!("n = {n}: {total} symmetric paths")));
                    }
                }
                Ok(Ok(format!("symmetric valleys equal v(n, k) for n <= {}", config.symmetric_max_n)))
            }
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

type Outcome = std::result::Result<String, String>;

fn eq(what: String, expected: &Polynomial, computed: &Polynomial) -> std::result::Result<(), String> {
    if expected == computed {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, computed {computed}"))
    }
}

fn eq_int(what: String, expected: &Integer, computed: &Integer) -> std::result::Result<(), String> {
    if expected == computed {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, computed {computed}"))
    }
}

fn all_n(
    range: std::ops::RangeInclusive<usize>,
    f: impl Fn(usize) -> std::result::Result<(), String>,
) -> Outcome {
    let summary = format!("n = {}..{}", range.start(), range.end());
    for n in range {
        f(n)?;
    }
    Ok(summary)
}

fn try_all_n(
    range: std::ops::RangeInclusive<usize>,
    f: impl Fn(usize) -> Result<std::result::Result<(), String>>,
) -> Result<Outcome> {
    let summary = format!("n = {}..{}", range.start(), range.end());
    for n in range {
        if let Err(e) = f(n)? {
            return Ok(Err(e));
        }
    }
    Ok(Ok(summary))
}

fn compare_fixture(label: &str, stored: &[Polynomial], compute: impl Fn(usize) -> Polynomial) -> Outcome {
    for (n, expected) in stored.iter().enumerate() {
        eq(format!("{label}_{n}"), expected, &compute(n))?;
    }
    Ok(format!("{} stored terms", stored.len()))
}

fn same_det(m: &PolyMatrix) -> Result<std::result::Result<(), String>> {
    let a = det_bareiss(m)?;
    let b = det_cofactor(m)?;
    Ok(if a == b { Ok(()) } else { Err(format!("Bareiss {a}, cofactor {b}")) })
}

/// Random square matrix of dimension `1..=max_dim` with entries of degree at
/// most `max_degree` and coefficients in `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, max_degree: usize, bound: i64) -> PolyMatrix {
    let dim = rng.gen_range(1..=max_dim);
    let rows = (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let deg = rng.gen_range(0..=max_degree);
                    let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
                    Polynomial::from_i64s(Var::T, &coeffs)
                })
                .collect()
        })
        .collect();
    PolyMatrix::new(rows).expect("square matrix in t")
}

/// Result of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub group: Group,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<IdentityReport>,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {:<28} {}", self.name, self.detail)
    }
}

/// Runs the checks on scoped threads and returns outcomes in input order.
pub fn run_checks(checks: &[Check], fixtures: &Fixtures, config: &VerifyConfig) -> Vec<CheckOutcome> {
    std::thread::scope(|scope| {
        let handles: Vec<_> =
            checks.iter().map(|check| scope.spawn(move || check.run(fixtures, config))).collect();
        handles
            .into_iter()
            .zip(checks)
            .map(|(h, check)| {
                h.join().unwrap_or_else(|_| CheckOutcome {
                    name: check.name(),
                    group: check.group(),
                    passed: false,
                    detail: "check panicked".into(),
                    report: None,
                })
            })
            .collect()
    })
}
