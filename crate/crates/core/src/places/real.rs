//! Places of `R(y)` for data with rational coefficients.
//!
//! A real place is a real root of some rational polynomial, carried as an
//! [`IsolatedRealRoot`]; the valuation of a polynomial there is the order of
//! the first nonvanishing derivative and the residue of a unit is known
//! only through its sign, which is all that `R^* / R^*2` sees. Complex
//! places have residue field `C`, where every class is trivial, so they are
//! never enumerated.

use std::fmt;

use super::rational_factor::small_rational_roots;
use super::Divisor;
use crate::arith::Rationals;
use crate::error::{Error, Result};
use crate::poly::sturm::sign;
use crate::poly::{sign_at_root, squarefree_part, sturm_isolate, IsolatedRealRoot, UniPoly};

type QPoly = UniPoly<Rationals>;

#[derive(Clone, Debug, PartialEq)]
pub enum RealModelPlace {
    Root(IsolatedRealRoot),
    Infinite,
}

impl fmt::Display for RealModelPlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Root(r) => write!(f, "{r}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

/// The real places where any of the polynomials vanishes, in increasing
/// order, followed by the infinite place. A rational root is labelled by
/// its linear prime, any other root by the squarefree part of the first
/// input vanishing there.
pub fn real_places(polys: &[&QPoly]) -> Vec<RealModelPlace> {
    let product = polys.iter().filter(|p| !p.is_zero()).fold(UniPoly::one(Rationals), |acc, p| &acc * p);
    let rational: Vec<_> = polys.iter().flat_map(|p| small_rational_roots(&squarefree_part(p))).collect();
    let mut out: Vec<_> = sturm_isolate(&product)
        .into_iter()
        .map(|root| {
            if let Some(r) = rational.iter().find(|r| root.contains(r)) {
                return RealModelPlace::Root(root.with_poly(UniPoly::linear_root(Rationals, r)));
            }
            let label = polys
                .iter()
                .map(|p| squarefree_part(p))
                .find(|p| p.degree().unwrap_or(0) > 0 && sign_at_root(p, &root) == 0)
                .expect("root of some input");
            RealModelPlace::Root(root.with_poly(label))
        })
        .collect();
    out.push(RealModelPlace::Infinite);
    out
}

/// Valuation and sign of the unit part. At a root the local parameter is
/// `y - xi`, at infinity it is `1/y`.
pub fn unit_sign(a: &QPoly, place: &RealModelPlace) -> Result<(i64, i8)> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    match place {
        RealModelPlace::Infinite => Ok((-(a.degree().unwrap() as i64), sign(&a.lc()))),
        RealModelPlace::Root(root) => {
            let mut d = a.clone();
            let mut k = 0;
            loop {
                let s = sign_at_root(&d, root);
                if s != 0 {
                    return Ok((k, s));
                }
                d = d.derivative();
                k += 1;
            }
        }
    }
}

pub fn valuation_real(a: &QPoly, place: &RealModelPlace) -> Result<i64> {
    unit_sign(a, place).map(|(v, _)| v)
}

/// Sign of the residue of a unit.
pub fn residue_sign(a: &QPoly, place: &RealModelPlace) -> Result<i8> {
    let (v, s) = unit_sign(a, place)?;
    if v != 0 {
        return Err(Error::NonzeroValuation(v));
    }
    Ok(s)
}

/// Real part of the divisor of `a`: its real roots with multiplicities and
/// the infinite place.
pub fn divisor_of_real(a: &QPoly) -> Result<Divisor<RealModelPlace>> {
    let mut d = Divisor::new();
    for place in real_places(&[a]) {
        let v = valuation_real(a, &place)?;
        d.add(place, v);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn qp(c: &[i64]) -> QPoly {
        UniPoly::new(Rationals, c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    #[test]
    fn valuation_at_irrational_root() {
        // (y^2 - 2)^2 (y - 1) vanishes to order 2 at sqrt 2
        let a = &qp(&[-2, 0, 1]).pow(2) * &qp(&[-1, 1]);
        let places = real_places(&[&a]);
        assert_eq!(places.len(), 4);
        let orders: Vec<i64> = places.iter().map(|p| valuation_real(&a, p).unwrap()).collect();
        assert_eq!(orders, vec![2, 1, 2, -5]);
        let d = divisor_of_real(&a).unwrap();
        assert_eq!(d.len(), 4);
    }

    #[test]
    fn unit_signs() {
        let places = real_places(&[&qp(&[0, 1])]);
        assert_eq!(residue_sign(&qp(&[-1, 0, 1]), &places[0]), Ok(-1));
        assert_eq!(unit_sign(&qp(&[0, 0, -3]), &places[0]), Ok((2, -1)));
        assert_eq!(unit_sign(&qp(&[5, 0, -3]), &RealModelPlace::Infinite), Ok((-2, -1)));
    }
}
