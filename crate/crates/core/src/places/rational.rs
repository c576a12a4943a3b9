//! Places of `Q`: the rational primes and the real place.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::Divisor;
use crate::arith::{prime_factors, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RationalPlace {
    Prime(BigUint),
    Real,
}

impl RationalPlace {
    pub fn prime(p: u64) -> Self {
        Self::Prime(BigUint::from(p))
    }
}

impl fmt::Display for RationalPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Prime(p) => write!(f, "p:{p}"),
            Self::Real => f.write_str("real"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigUint) -> i64 {
    let p = BigInt::from(p.clone());
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && n.is_multiple_of(&p) {
        n /= &p;
        v += 1;
    }
    v
}

/// The `p`-adic valuation.
pub fn valuation_q(a: &Rational, place: &RationalPlace) -> Result<i64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    match place {
        RationalPlace::Prime(p) => Ok(int_valuation(a.numer(), p) - int_valuation(a.denom(), p)),
        RationalPlace::Real => Err(Error::RealPlaceHasNoValuation),
    }
}

/// `p`-adic unit part `a / p^nu(a)`.
pub fn unit_part(a: &Rational, p: &BigUint) -> Result<Rational> {
    let v = valuation_q(a, &RationalPlace::Prime(p.clone()))?;
    let pk = Rational::from_integer(BigInt::from(p.pow(v.unsigned_abs() as u32)));
    Ok(if v >= 0 { a / pk } else { a * pk })
}

/// Image of a `p`-adic unit in `F_p`.
pub fn residue_q(a: &Rational, p: &BigUint) -> Result<BigUint> {
    let v = valuation_q(a, &RationalPlace::Prime(p.clone()))?;
    if v != 0 {
        return Err(Error::NonzeroValuation(v));
    }
    let pi = BigInt::from(p.clone());
    let n = a.numer().mod_floor(&pi);
    let d = a.denom().mod_floor(&pi);
    let d_inv = d.modpow(&(&pi - 2), &pi);
    Ok((n * d_inv).mod_floor(&pi).magnitude().clone())
}

/// Primes dividing the numerator or the denominator, with valuations.
pub fn divisor_of_q(a: &Rational) -> Result<Divisor<RationalPlace>> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut d = Divisor::new();
    for (p, e) in prime_factors(a.numer().magnitude()) {
        d.add(RationalPlace::Prime(p), e as i64);
    }
    for (p, e) in prime_factors(a.denom().magnitude()) {
        d.add(RationalPlace::Prime(p), -(e as i64));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn valuations_and_residues() {
        assert_eq!(valuation_q(&q(12, 1), &RationalPlace::prime(2)), Ok(2));
        assert_eq!(valuation_q(&q(5, 18), &RationalPlace::prime(3)), Ok(-2));
        assert_eq!(valuation_q(&q(1, 1), &RationalPlace::Real), Err(Error::RealPlaceHasNoValuation));
        assert_eq!(residue_q(&q(5, 1), &BigUint::from(3u32)), Ok(BigUint::from(2u32)));
        assert_eq!(residue_q(&q(-1, 2), &BigUint::from(5u32)), Ok(BigUint::from(2u32)));
        assert_eq!(unit_part(&q(-24, 5), &BigUint::from(2u32)), Ok(q(-3, 5)));
    }

    #[test]
    fn divisor_of_rational() {
        let d = divisor_of_q(&q(12, 35)).unwrap();
        assert_eq!(d.get(&RationalPlace::prime(2)), 2);
        assert_eq!(d.get(&RationalPlace::prime(7)), -1);
        assert_eq!(d.len(), 4);
    }
}
