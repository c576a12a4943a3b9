use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Field;

/// Arbitrary-precision rational number, always stored in lowest terms
/// with a positive denominator.
pub type Rational = BigRational;

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_rational(&self, r: &Rational) -> Option<Rational> {
        Some(r.clone())
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn render(&self, a: &Rational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Exact `k`-th root of a natural number, if it is a perfect `k`-th power.
pub fn integer_nth_root(n: &BigUint, k: u32) -> Option<BigUint> {
    let r = n.nth_root(k);
    if &num_traits::pow(r.clone(), k as usize) == n {
        Some(r)
    } else {
        None
    }
}

/// True iff `r` is the square of a rational number.
pub fn is_square_rational(r: &Rational) -> bool {
    if r.is_negative() {
        return false;
    }
    if r.is_zero() {
        return true;
    }
    integer_nth_root(r.numer().magnitude(), 2).is_some() && integer_nth_root(r.denom().magnitude(), 2).is_some()
}

/// True iff `r = b^q` for some rational `b`. Zero counts as a power.
pub fn is_qth_power_rational(r: &Rational, q: u32) -> bool {
    if r.is_zero() {
        return true;
    }
    if q % 2 == 0 && r.is_negative() {
        return false;
    }
    integer_nth_root(r.numer().magnitude(), q).is_some() && integer_nth_root(r.denom().magnitude(), q).is_some()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorisation by trial division, smallest prime first.
pub fn prime_factors(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out = Vec::new();
    let mut m = n.clone();
    if m.is_zero() {
        return out;
    }
    let mut d = BigUint::from(2u32);
    while &d * &d <= m {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !m.is_one() {
        out.push((m, 1));
    }
    out
}

/// Legendre symbol `(a/p)` for an odd prime `p` by Euler's criterion;
/// returns 0 when `p | a`.
pub fn legendre_symbol(a: &BigInt, p: &BigUint) -> i8 {
    let pi = BigInt::from_biguint(Sign::Plus, p.clone());
    let r = a.mod_floor(&pi).to_biguint().expect("nonnegative residue");
    if r.is_zero() {
        return 0;
    }
    let e = (p - 1u32) >> 1;
    let v = r.modpow(&e, p);
    if v.is_one() {
        1
    } else {
        debug_assert_eq!(v, p - 1u32);
        -1
    }
}

pub(crate) fn rational_mod_prime(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64()?;
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let f = super::PrimeField::new(p);
    f.div(&n, &d)
}
