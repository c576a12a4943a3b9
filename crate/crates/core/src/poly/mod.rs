//! Polynomials over the scalar fields.
//!
//! [`UniPoly`] is the dense univariate workhorse (gcd, factoring, residue
//! computations); [`Polynomial`] is the sparse bivariate carrier for curve
//! equations and parsed input.

mod bivariate;
mod factor;
mod parse;
pub mod sample;
pub mod sturm;
mod univariate;

pub use bivariate::{Polynomial, Var};
pub use factor::{distinct_degree, factor, is_irreducible, squarefree_decomposition, FactoredPolynomial};
pub use parse::parse_polynomial;
pub use sturm::{sign_at_root, squarefree_part, sturm_isolate, IsolatedRealRoot};
pub use univariate::UniPoly;

pub(crate) use bivariate::monomial_text;
pub(crate) use univariate::render_terms;

use crate::arith::Field;
use crate::error::Result;

/// Monic gcd of two polynomials that must both be univariate in the same
/// variable.
pub fn gcd<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
    let v = if a.uses(Var::X) || b.uses(Var::X) { Var::X } else { Var::Y };
    let ua = a.to_univariate(v)?;
    let ub = b.to_univariate(v)?;
    Ok(Polynomial::from_univariate(&ua.gcd(&ub), v))
}
