//! Exact computation of tame symbols, ramification of symbol algebras and
//! power-residue reciprocity over `Q`, `R(y)`, `F_p(y)` and complete local
//! rings of plane curves.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: scalar fields (`Q`, `F_p`, `F_{p^d}`, `Q(sqrt s)`, `F_p(T)`)
//! - [`poly`]: univariate and bivariate polynomials, factoring over `F_p`,
//!   Sturm isolation of real roots, and the text grammar
//! - [`places`]: places, valuations, residues and divisors
//! - [`symbols`]: tame symbols, Hilbert symbols, residue symbols and the
//!   reciprocity checks
//! - [`series`]: truncated power series, Hensel lifting, germ
//!   parametrisations and residue certificates
//! - [`cli`]: the command-line front end and the scripted worked examples
//!
//! ```
//! use reciprocity::symbols::reciprocity_check_q;
//! use reciprocity::arith::Rational;
//!
//! let report = reciprocity_check_q(&Rational::from_integer(3.into()), &Rational::from_integer(7.into())).unwrap();
//! assert!(report.satisfied);
//! ```

pub mod arith;
pub mod cli;
pub mod error;
pub mod places;
pub mod poly;
pub mod series;
pub mod symbols;

pub use error::{Error, Result};
