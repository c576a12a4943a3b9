use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{sign_text, Constraint, DerivedIdentity, PlaceEntry, ReciprocityReport};
use crate::arith::{is_prime, legendre_symbol, Field, Rational, Rationals};
use crate::error::{Error, Result};
use crate::places::rational::{divisor_of_q, residue_q, unit_part, valuation_q, RationalPlace};

/// Tame symbol of `(a, b)` at an odd prime `p`, as an element of `F_p`.
pub fn tame_symbol_q(a: &Rational, b: &Rational, p: &BigUint) -> Result<BigUint> {
    if p == &BigUint::from(2u32) {
        return Err(Error::WildPlace);
    }
    let place = RationalPlace::Prime(p.clone());
    let va = valuation_q(a, &place)?;
    let vb = valuation_q(b, &place)?;
    let u = unit_part(a, p)?;
    let v = unit_part(b, p)?;
    let mut gamma = Rationals.pow_signed(&u, vb).expect("unit") * Rationals.pow_signed(&v, -va).expect("unit");
    if (va * vb) % 2 != 0 {
        gamma = -gamma;
    }
    residue_q(&gamma, p)
}

/// Residue mod 8 of an odd 2-adic unit `n/d`; `1/d = d` mod 8.
fn unit_mod8(u: &Rational) -> u32 {
    let eight = BigInt::from(8);
    (u.numer() * u.denom()).mod_floor(&eight).to_u32().expect("small")
}

/// The Hilbert symbol `(a, b)_v` over `Q`, `v` a prime or the real place.
pub fn hilbert_symbol_q(a: &Rational, b: &Rational, place: &RationalPlace) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroElement);
    }
    let p = match place {
        RationalPlace::Real => return Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        RationalPlace::Prime(p) => p,
    };
    if p == &BigUint::from(2u32) {
        let alpha = valuation_q(a, place)?;
        let beta = valuation_q(b, place)?;
        let u = unit_mod8(&unit_part(a, p)?);
        let v = unit_mod8(&unit_part(b, p)?);
        let eps = |w: u32| ((w - 1) / 2) as i64 % 2;
        let omega = |w: u32| ((w * w - 1) / 8) as i64 % 2;
        let e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return Ok(if e.rem_euclid(2) == 0 { 1 } else { -1 });
    }
    let gamma = tame_symbol_q(a, b, p)?;
    Ok(legendre_symbol(&BigInt::from(gamma), p))
}

fn as_odd_prime(r: &Rational) -> Option<u64> {
    if !r.is_integer() || !r.is_positive() {
        return None;
    }
    let n = r.to_integer().to_u64()?;
    (n > 2 && is_prime(n)).then_some(n)
}

/// The product formula for `(a, b)_2` over all places of `Q`; for distinct
/// odd primes also the quadratic reciprocity identity.
pub fn reciprocity_check_q(a: &Rational, b: &Rational) -> Result<ReciprocityReport> {
    let mut places: Vec<RationalPlace> = Vec::new();
    for r in [a, b] {
        for (p, _) in divisor_of_q(r)?.entries() {
            if !places.contains(p) {
                places.push(p.clone());
            }
        }
    }
    let two = RationalPlace::prime(2);
    if !places.contains(&two) {
        places.push(two);
    }
    places.push(RationalPlace::Real);
    let mut product = 1i8;
    let mut entries = Vec::new();
    let mut local = Vec::new();
    for place in &places {
        let s = hilbert_symbol_q(a, b, place)?;
        product *= s;
        local.push((place.clone(), s));
        entries.push(PlaceEntry { place: place.to_string(), symbol_value: sign_text(s), trivial: s == 1 });
    }
    let mut derived = Vec::new();
    if let (Some(p), Some(q)) = (as_odd_prime(a), as_odd_prime(b)) {
        if p != q {
            let at = |n: u64| local.iter().find(|(pl, _)| *pl == RationalPlace::prime(n)).map(|(_, s)| *s).unwrap();
            // (p, q)_q = (p/q) and (p, q)_p = (q/p)
            let lhs = at(q) * at(p);
            let e = ((p - 1) / 2) * ((q - 1) / 2);
            let rhs = if e % 2 == 0 { 1 } else { -1 };
            derived.push(DerivedIdentity {
                statement: format!("({p}/{q})({q}/{p}) = {} = (-1)^({}*{})", sign_text(lhs), (p - 1) / 2, (q - 1) / 2),
                holds: lhs == rhs,
            });
        }
    }
    Ok(ReciprocityReport {
        algebra: format!("({}, {})_2 over Q", Rationals.render(a), Rationals.render(b)),
        places: entries,
        constraint: Constraint { statement: "product of Hilbert symbols over all places = 1".into(), value: sign_text(product) },
        satisfied: product == 1,
        derived_identities: derived,
    })
}

/// Whether `z^2 = a x^2 + b y^2` has a solution mod `2^k` with one of
/// `x, y, z` odd; used as an independent oracle for the symbol at 2.
pub fn hilbert_at_two_by_search(a: i64, b: i64, k: u32) -> i8 {
    let m = 1i64 << k;
    let sq: Vec<i64> = (0..m).map(|t| t * t % m).collect();
    let mut is_square = vec![false; m as usize];
    let mut odd_square = vec![false; m as usize];
    for (t, s) in sq.iter().enumerate() {
        is_square[*s as usize] = true;
        if t % 2 == 1 {
            odd_square[*s as usize] = true;
        }
    }
    let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
    for x in 0..m {
        for y in 0..m {
            let rhs = ((a * sq[x as usize] + b * sq[y as usize]) % m) as usize;
            let unit_xy = x % 2 == 1 || y % 2 == 1;
            if (unit_xy && is_square[rhs]) || odd_square[rhs] {
                return 1;
            }
        }
    }
    -1
}
