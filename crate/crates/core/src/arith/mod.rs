//! Exact scalar arithmetic.
//!
//! Every coefficient field and residue field used by the crate implements
//! [`Field`]: the rationals, prime fields `F_p`, extension fields `F_{p^d}`,
//! quadratic number fields `Q(sqrt s)` and the rational function field
//! `F_p(T)`. A field value is a lightweight *context* (for example the
//! modulus `p`) and elements are plain data interpreted through it, so a
//! polynomial or series carries its field once rather than per coefficient.
//!
//! Real numbers are never represented in floating point. Data "over R" is
//! rational-coefficient data inspected through exact sign tests in
//! [`crate::poly::sturm`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

mod finite_field;
mod function_field;
mod prime_field;
mod quadratic;
mod rational;
mod roots;

pub use finite_field::{is_qth_power_finite_field, FiniteField, FiniteFieldElement, FiniteFieldLike};
pub use function_field::{is_square_in_rational_function_field, RationalFunction, RationalFunctionField};
pub use prime_field::PrimeField;
pub use quadratic::{is_qth_power_quadratic_field, QuadraticField, QuadraticFieldElement};
pub use rational::{
    integer_nth_root, is_prime, is_qth_power_rational, is_square_rational, legendre_symbol, prime_factors,
    Rational, Rationals,
};
pub use roots::{find_qth_root_of_unity, qth_root_in_prime_field, RootOfUnityContext};

/// A field given by a context value; elements are interpreted relative to it.
pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + fmt::Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of a rational number, `None` when its denominator vanishes.
    fn from_rational(&self, r: &Rational) -> Option<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// Text form of an element in the polynomial grammar. Compound
    /// values come back parenthesised; negative rationals carry a
    /// leading `-`.
    fn render(&self, a: &Self::Elem) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow_big(a, &BigUint::from(e))
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        let mut result = self.one();
        let mut base = a.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = self.mul(&result, &base);
            }
            if i + 1 < bits {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// `a^e` for a signed exponent; `None` if `a = 0` and `e < 0`.
    fn pow_signed(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow(&ai, e.unsigned_abs()))
        }
    }
}

pub(crate) fn big_pow(base: u64, exp: u32) -> BigUint {
    let mut r = BigUint::one();
    for _ in 0..exp {
        r *= base;
    }
    r
}
