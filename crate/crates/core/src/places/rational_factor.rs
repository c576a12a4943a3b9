use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{prime_factors, Rational, Rationals};
use crate::error::{Error, Result};
use crate::poly::{squarefree_part, UniPoly};

type QPoly = UniPoly<Rationals>;

/// Monic irreducible factors over `Q` of polynomials whose irreducible
/// factors have degree at most two: linear factors come from the rational
/// root theorem and a leftover must be a single quadratic.
pub fn factor_over_rationals(a: &QPoly) -> Result<Vec<(QPoly, u32)>> {
    if a.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let mut rest = squarefree_part(a);
    let mut primes = Vec::new();
    for r in rational_roots(&rest) {
        let lin = UniPoly::linear_root(Rationals, &r);
        rest = rest.exact_div(&lin);
        primes.push(lin);
    }
    match rest.degree() {
        Some(0) => {}
        Some(2) => primes.push(rest.monic()),
        _ => return Err(Error::Unfactorable(format!("{a} has an irreducible factor of degree above 2 over Q"))),
    }
    Ok(primes
        .into_iter()
        .map(|p| {
            let (m, _) = a.split_off(&p);
            (p, m)
        })
        .collect())
}

/// Distinct rational roots, increasing.
fn rational_roots(a: &QPoly) -> Vec<Rational> {
    let ints = integer_coefficients(a);
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        roots.push(Rational::zero());
    }
    let (c0, cn) = (&ints[low], ints.last().expect("nonzero"));
    for p in divisors(c0.magnitude()) {
        for q in divisors(cn.magnitude()) {
            if !p.gcd(&q).is_one() {
                continue;
            }
            for sign in [1, -1] {
                let r = Rational::new(BigInt::from(p.clone()) * sign, BigInt::from(q.clone()));
                if a.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Rational roots when the extreme integer coefficients are small enough
/// to factor quickly; otherwise none are reported.
pub(crate) fn small_rational_roots(a: &QPoly) -> Vec<Rational> {
    if a.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let ints = integer_coefficients(a);
    let limit = BigInt::from(10u64.pow(12));
    let low = ints.iter().find(|c| !c.is_zero()).expect("nonzero");
    if low.abs() > limit || ints.last().expect("nonzero").abs() > limit {
        return Vec::new();
    }
    rational_roots(a)
}

fn integer_coefficients(a: &QPoly) -> Vec<BigInt> {
    let l = a.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    a.coeffs().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut out = vec![BigUint::one()];
    for (p, e) in prime_factors(n) {
        let mut next = Vec::new();
        for d in &out {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= &p;
            }
        }
        out = next;
    }
    out
}
