//! Seeded random polynomials for the scripted examples and the property
//! sweeps. Callers own the generator, so a seed fixes every draw.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use super::UniPoly;
use crate::arith::{Field, PrimeField, Rational, Rationals};

/// Uniform coefficients of degree at most `max_degree`; may be zero.
pub fn random_fp<R: Rng>(rng: &mut R, field: PrimeField, max_degree: usize) -> UniPoly<PrimeField> {
    let p = field.modulus();
    UniPoly::new(field, (0..=max_degree).map(|_| rng.random_range(0..p)).collect())
}

/// Monic of exact degree `degree`.
pub fn random_monic_fp<R: Rng>(rng: &mut R, field: PrimeField, degree: usize) -> UniPoly<PrimeField> {
    let mut coeffs: Vec<u64> = (0..degree).map(|_| rng.random_range(0..field.modulus())).collect();
    coeffs.push(1);
    UniPoly::new(field, coeffs)
}

/// `n/d` with `|n| <= bound` and `1 <= d <= bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let n = rng.random_range(-bound..=bound);
    let d = rng.random_range(1..=bound);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients from [`random_rational`], degree at most `max_degree`.
pub fn random_q<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> UniPoly<Rationals> {
    UniPoly::new(Rationals, (0..=max_degree).map(|_| random_rational(rng, bound)).collect())
}

/// A monic prime of `R[y]` with rational coefficients: `y - a`, or
/// `y^2 + b y + c` with `b^2 < 4c`.
pub fn random_real_prime<R: Rng>(rng: &mut R, bound: i64) -> UniPoly<Rationals> {
    let one = Rationals.one();
    if rng.random_bool(0.5) {
        return UniPoly::new(Rationals, vec![random_rational(rng, bound), one]);
    }
    loop {
        let (b, c) = (random_rational(rng, bound), random_rational(rng, bound));
        if (&b * &b - Rational::from_integer(4.into()) * &c) < Rational::zero() {
            return UniPoly::new(Rationals, vec![c, b, one]);
        }
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn seeded_draws_repeat() {
        let k = PrimeField::new(13);
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (random_fp(&mut rng, k, 4), random_real_prime(&mut rng, 20))
        };
        assert_eq!(draw(7), draw(7));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = random_real_prime(&mut rng, 20);
            assert!(p.is_monic() && matches!(p.degree(), Some(1 | 2)));
            assert_eq!(random_monic_fp(&mut rng, k, 3).degree(), Some(3));
        }
    }
}
