//! Tame symbols, ramification of symbol algebras, Hilbert and power-residue
//! symbols, and the reciprocity checks built on them.
//!
//! A symbol algebra `(alpha, beta)_q` ramifies at a place exactly when its
//! tame symbol is not a `q`-th power in the residue field there. Residue
//! classes are kept as field elements modulo `q`-th powers rather than as
//! the cyclic extensions they define.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, Field, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::poly::UniPoly;

mod function_field;
mod hilbert;
mod real;
mod residue;

pub use function_field::{
    example0_driver, ramification_divisor, ramifies, scan_places, tame_symbol, weil_reciprocity_check,
};
pub use hilbert::{hilbert_at_two_by_search, hilbert_symbol_q, reciprocity_check_q, tame_symbol_q};
pub use real::{ramification_divisor_real, ramifies_real, reciprocity_check_real, scan_real_places, tame_symbol_real};
pub use residue::{
    qth_power_residue, qth_power_residue_fp, qth_power_residue_rational, qth_power_residue_real, reduce_mod_p,
    square_in_quadratic_function_field, BaseField,
};

/// The pair `(alpha, beta)_q` over `k(y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolAlgebra<F: Field> {
    pub alpha: UniPoly<F>,
    pub beta: UniPoly<F>,
    pub q: u32,
}

/// Fields over which symbol algebras of degree `q` can be formed: `q` is
/// invertible and a primitive `q`-th root of unity exists.
pub trait SymbolBase: Field {
    fn has_qth_roots_of_unity(&self, q: u32) -> bool;
}

impl SymbolBase for PrimeField {
    fn has_qth_roots_of_unity(&self, q: u32) -> bool {
        (self.modulus() - 1) % q as u64 == 0
    }
}

impl SymbolBase for Rationals {
    fn has_qth_roots_of_unity(&self, q: u32) -> bool {
        q == 2
    }
}

impl<F: SymbolBase> SymbolAlgebra<F> {
    pub fn new(alpha: UniPoly<F>, beta: UniPoly<F>, q: u32) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::ZeroElement);
        }
        let field = alpha.field();
        if !is_prime(q as u64) || field.characteristic() == q as u64 {
            return Err(Error::Precondition(format!("q = {q} must be a prime invertible in the base field")));
        }
        if !field.has_qth_roots_of_unity(q) {
            return Err(Error::Precondition(format!("base field lacks a primitive {q}-th root of unity")));
        }
        Ok(Self { alpha, beta, q })
    }
}

impl<F: Field> fmt::Display for SymbolAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})_{}", self.alpha, self.beta, self.q)
    }
}

/// The residue class of `(alpha, beta)_q` at one place and whether it is
/// a `q`-th power there.
#[derive(Clone, Debug, PartialEq)]
pub struct RamificationDatum<P, V> {
    pub place: P,
    pub residue_class: V,
    pub trivial: bool,
}

impl<P: fmt::Display, V: fmt::Display> RamificationDatum<P, V> {
    pub fn entry(&self) -> PlaceEntry {
        PlaceEntry { place: self.place.to_string(), symbol_value: self.residue_class.to_string(), trivial: self.trivial }
    }
}

/// One row of a report's place table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceEntry {
    pub place: String,
    pub symbol_value: String,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub statement: String,
    pub value: String,
}

/// A consequence checked alongside the main constraint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedIdentity {
    pub statement: String,
    pub holds: bool,
}

/// Local data of a symbol at every scanned place together with the global
/// constraint they must satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReciprocityReport {
    pub algebra: String,
    pub places: Vec<PlaceEntry>,
    pub constraint: Constraint,
    pub satisfied: bool,
    pub derived_identities: Vec<DerivedIdentity>,
}

impl ReciprocityReport {
    /// The constraint holds and so does every derived identity.
    pub fn all_hold(&self) -> bool {
        self.satisfied && self.derived_identities.iter().all(|d| d.holds)
    }
}

pub(crate) fn sign_text(s: i8) -> String {
    if s >= 0 { "1" } else { "-1" }.to_string()
}
