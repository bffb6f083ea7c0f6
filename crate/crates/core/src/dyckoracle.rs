//! Brute-force Dyck path enumeration.
//!
//! Conventions used throughout:
//!
//! - A valley is a position `i` (1-based) with step `i` = `D` and step
//!   `i+1` = `U`. The major index `maj` is the sum of the valley positions.
//!   With this convention the generating function of paths with `k` valleys
//!   by `q^maj` is exactly `N_{n,k}(q)`; 0-based positions or peak-based
//!   descents already disagree at semi-length 2.
//! - A path is symmetric when it equals its reverse-complement (read right
//!   to left with `U` and `D` swapped), i.e. it is its own mirror image.
//!
//! Paths are streamed in lexicographic order with `U < D`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{Integer, Polynomial, Var};

/// Largest semi-length accepted by [`enumerate_dyck`] (`Catalan(12) = 208012`).
pub const MAX_DYCK_N: usize = 12;
/// Largest semi-length accepted by [`qt_distribution`].
pub const MAX_QT_N: usize = 10;
/// Largest semi-length accepted by the symmetric enumerators.
pub const MAX_SYMMETRIC_N: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    fn flipped(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }
}

/// A balanced word over `{U, D}` whose prefixes never have more `D` than `U`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for s in &steps {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Parse("path dips below the axis".into()));
            }
        }
        if height != 0 {
            return Err(Error::Parse("path does not return to the axis".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semi_length(&self) -> usize {
        self.steps.len() / 2
    }

    /// The path read right to left with `U` and `D` swapped.
    pub fn reverse_complement(&self) -> DyckPath {
        DyckPath { steps: self.steps.iter().rev().map(|s| s.flipped()).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.steps.len();
        (0..n / 2).all(|i| self.steps[i] == self.steps[n - 1 - i].flipped())
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                other => Err(Error::Parse(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathStats {
    pub valleys: usize,
    pub maj: usize,
}

pub fn path_stats(p: &DyckPath) -> PathStats {
    let (valleys, maj) = p
        .steps
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::D && w[1] == Step::U)
        .fold((0, 0), |(v, m), (i, _)| (v + 1, m + i + 1));
    PathStats { valleys, maj }
}

/// Lexicographic stream of all Dyck paths of one semi-length.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    n: usize,
    next: Option<Vec<Step>>,
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let current = self.next.take()?;
        self.next = dyck_successor(&current, self.n);
        Some(DyckPath { steps: current })
    }
}

/// Next Dyck word in lexicographic order: turn the rightmost `U` that can
/// become `D` into `D`, then complete with all remaining `U`s and `D`s.
fn dyck_successor(w: &[Step], n: usize) -> Option<Vec<Step>> {
    let mut ups = w.iter().filter(|s| **s == Step::U).count();
    let mut downs = w.len() - ups;
    for i in (0..w.len()).rev() {
        // counts now describe w[..=i]
        if w[i] == Step::U {
            ups -= 1;
            // prefix w[..i] has `ups` ups and `downs` downs
            if ups > downs && downs < n {
                let mut next = w[..i].to_vec();
                next.push(Step::D);
                next.extend(std::iter::repeat_n(Step::U, n - ups));
                next.extend(std::iter::repeat_n(Step::D, n - downs - 1));
                return Some(next);
            }
        } else {
            downs -= 1;
        }
    }
    None
}

/// Streams every Dyck path of semi-length `n`, `n <= 12`.
pub fn enumerate_dyck(n: usize) -> Result<DyckPaths> {
    if n > MAX_DYCK_N {
        return Err(Error::usage(format!("Dyck enumeration limited to n <= {MAX_DYCK_N}, got {n}")));
    }
    let mut first = vec![Step::U; n];
    first.extend(std::iter::repeat_n(Step::D, n));
    Ok(DyckPaths { n, next: Some(first) })
}

/// Lexicographic stream of the symmetric Dyck paths of one semi-length.
///
/// A symmetric path is determined by its first half: any word of length `n`
/// that never dips below the axis. The stream walks those halves and mirrors
/// each one.
#[derive(Debug, Clone)]
pub struct SymmetricPaths {
    next: Option<Vec<Step>>,
}

impl Iterator for SymmetricPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let half = self.next.take()?;
        self.next = half_successor(&half);
        let mut steps = half.clone();
        steps.extend(half.iter().rev().map(|s| s.flipped()));
        Some(DyckPath { steps })
    }
}

fn half_successor(w: &[Step]) -> Option<Vec<Step>> {
    let mut height: i64 = w.iter().map(|s| if *s == Step::U { 1 } else { -1 }).sum();
    for i in (0..w.len()).rev() {
        height -= if w[i] == Step::U { 1 } else { -1 };
        // height is now that of w[..i]
        if w[i] == Step::U && height >= 1 {
            let mut next = w[..i].to_vec();
            next.push(Step::D);
            next.resize(w.len(), Step::U);
            return Some(next);
        }
    }
    None
}

/// Streams every symmetric Dyck path of semi-length `n`, `n <= 14`.
pub fn enumerate_symmetric(n: usize) -> Result<SymmetricPaths> {
    if n > MAX_SYMMETRIC_N {
        return Err(Error::usage(format!(
            "symmetric enumeration limited to n <= {MAX_SYMMETRIC_N}, got {n}"
        )));
    }
    Ok(SymmetricPaths { next: Some(vec![Step::U; n]) })
}

/// `k -> sum over paths with k valleys of q^maj`, `n <= 10`.
pub fn qt_distribution(n: usize) -> Result<BTreeMap<usize, Polynomial>> {
    if n > MAX_QT_N {
        return Err(Error::usage(format!("q-distribution limited to n <= {MAX_QT_N}, got {n}")));
    }
    let mut counts: BTreeMap<usize, Vec<Integer>> = BTreeMap::new();
    for path in enumerate_dyck(n)? {
        let stats = path_stats(&path);
        let row = counts.entry(stats.valleys).or_default();
        if row.len() <= stats.maj {
            row.resize(stats.maj + 1, Integer::zero());
        }
        row[stats.maj] += 1;
    }
    Ok(counts.into_iter().map(|(k, c)| (k, Polynomial::new(Var::Q, c))).collect())
}

/// `k -> number of symmetric paths with k valleys`, `n <= 14`.
pub fn symmetric_valley_distribution(n: usize) -> Result<BTreeMap<usize, Integer>> {
    let mut counts: BTreeMap<usize, Integer> = BTreeMap::new();
    for path in enumerate_symmetric(n)? {
        *counts.entry(path_stats(&path).valleys).or_default() += 1;
    }
    Ok(counts)
}
