use num_traits::Zero;

use super::{
    qth_power_residue_real, sign_text, Constraint, DerivedIdentity, RamificationDatum, ReciprocityReport, SymbolAlgebra,
};
use crate::arith::{Rational, Rationals};
use crate::error::{Error, Result};
use crate::places::real::{real_places, unit_sign, RealModelPlace};
use crate::poly::UniPoly;

type QPoly = UniPoly<Rationals>;

pub type RealDatum = RamificationDatum<RealModelPlace, Sign>;

/// A class in `R^* / R^*2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sign(pub i8);

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&sign_text(self.0))
    }
}

/// Sign of the tame symbol at a real place; this is its whole class in
/// `R^* / R^*2`.
pub fn tame_symbol_real(alpha: &QPoly, beta: &QPoly, place: &RealModelPlace) -> Result<i8> {
    let (a, su) = unit_sign(alpha, place)?;
    let (b, sv) = unit_sign(beta, place)?;
    let mut s = 1i8;
    if (a * b) % 2 != 0 {
        s = -s;
    }
    if b % 2 != 0 {
        s *= su;
    }
    if a % 2 != 0 {
        s *= sv;
    }
    Ok(s)
}

pub fn ramifies_real(alg: &SymbolAlgebra<Rationals>, place: &RealModelPlace) -> Result<RealDatum> {
    let s = tame_symbol_real(&alg.alpha, &alg.beta, place)?;
    Ok(RamificationDatum { place: place.clone(), residue_class: Sign(s), trivial: alg.q % 2 == 1 || s > 0 })
}

/// Data at every real root of `alpha beta` and at infinity.
pub fn scan_real_places(alg: &SymbolAlgebra<Rationals>) -> Result<Vec<RealDatum>> {
    real_places(&[&alg.alpha, &alg.beta]).iter().map(|p| ramifies_real(alg, p)).collect()
}

pub fn ramification_divisor_real(alg: &SymbolAlgebra<Rationals>) -> Result<Vec<RealDatum>> {
    Ok(scan_real_places(alg)?.into_iter().filter(|d| !d.trivial).collect())
}

/// Monic and irreducible over `R`: linear, or quadratic with negative
/// discriminant.
fn is_real_prime(p: &QPoly) -> bool {
    if !p.is_monic() {
        return false;
    }
    match p.degree() {
        Some(1) => true,
        Some(2) => {
            let (c, b) = (p.coeff(0), p.coeff(1));
            &b * &b - Rational::from_integer(4.into()) * c < Rational::zero()
        }
        _ => false,
    }
}

/// Over `R(y)` the ramified real places of a quaternion symbol come in
/// pairs. For distinct monic real primes, also checks
/// `(alpha/beta)(beta/alpha) = (-1)^(deg alpha deg beta)`.
pub fn reciprocity_check_real(alpha: &QPoly, beta: &QPoly) -> Result<ReciprocityReport> {
    if alpha == beta {
        return Err(Error::DistinctPrimesRequired);
    }
    let alg = SymbolAlgebra::new(alpha.clone(), beta.clone(), 2)?;
    let data = scan_real_places(&alg)?;
    let ramified = data.iter().filter(|d| !d.trivial).count();
    let mut derived = Vec::new();
    if is_real_prime(alpha) && is_real_prime(beta) {
        let ab = qth_power_residue_real(alpha, beta, 2)?;
        let ba = qth_power_residue_real(beta, alpha, 2)?;
        let (da, db) = (alpha.degree().unwrap(), beta.degree().unwrap());
        let rhs = if (da * db) % 2 == 0 { 1 } else { -1 };
        derived.push(DerivedIdentity {
            statement: format!("(alpha/beta)(beta/alpha) = ({})({}) = (-1)^({da}*{db})", sign_text(ab), sign_text(ba)),
            holds: ab * ba == rhs,
        });
    }
    Ok(ReciprocityReport {
        algebra: format!("{alg} over R(y)"),
        places: data.iter().map(|d| d.entry()).collect(),
        constraint: Constraint {
            statement: "number of ramified real places is even".into(),
            value: ramified.to_string(),
        },
        satisfied: ramified % 2 == 0,
        derived_identities: derived,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        UniPoly::new(Rationals, c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    #[test]
    fn two_lines() {
        let alg = SymbolAlgebra::new(qp(&[0, 1]), qp(&[-1, 1]), 2).unwrap();
        let d = ramification_divisor_real(&alg).unwrap();
        let places: Vec<_> = d.iter().map(|d| d.place.to_string()).collect();
        assert_eq!(places, vec!["prime:y", "inf"]);
        let r = reciprocity_check_real(&qp(&[0, 1]), &qp(&[-1, 1])).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.derived_identities[0].statement, "(alpha/beta)(beta/alpha) = (1)(-1) = (-1)^(1*1)");
    }

    #[test]
    fn line_and_conic() {
        let r = reciprocity_check_real(&qp(&[-1, 1]), &qp(&[1, 0, 1])).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.derived_identities[0].statement, "(alpha/beta)(beta/alpha) = (1)(1) = (-1)^(1*2)");
        assert_eq!(reciprocity_check_real(&qp(&[0, 1]), &qp(&[0, 1])), Err(Error::DistinctPrimesRequired));
    }
}
