//! Exact arithmetic for q-Narayana polynomials and their `q = -1`
//! specialization `c_n(t)`.
//!
//! The crate computes every object by at least two independent routes and
//! exposes checkers that confront them: closed forms against recursions,
//! truncated generating-function identities, Hankel determinants against
//! Jacobi continued fractions, and algebraic counts against brute-force
//! Dyck path enumeration.
//!
//! Module map:
//!
//! - [`exactalg`]: integers, dense polynomials, rational functions and
//!   truncated power series.
//! - [`qcomb`]: q-integers, Gaussian binomials and the q-Narayana
//!   coefficients `N_{n,k}(q)`.
//! - [`narayana`]: Narayana, type-B Narayana and `c_n(t)` polynomials.
//! - [`gfun`]: generating-function identity checks.
//! - [`hankel`]: Hankel determinants and J-fraction extraction.
//! - [`dyckoracle`]: Dyck path enumeration and statistics.
//! - [`verify`]: the registry of checks behind `qnarayana verify`.
//! - [`cli`]: argument parsing and command execution.

pub mod cli;
pub mod dyckoracle;
pub mod error;
pub mod exactalg;
pub mod gfun;
pub mod hankel;
pub mod narayana;
pub mod qcomb;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{Integer, Polynomial, RationalFunction, Ring, TruncatedSeries, Var};
