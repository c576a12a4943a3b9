//! Places, valuations, residues and divisors.
//!
//! Three ambient fields are covered:
//!
//! - `k(y)` for a [`ConstantField`] `k` (`F_p` or `Q`): places are monic
//!   irreducible polynomials plus the infinite place with local parameter
//!   `1/y`. Residue classes are stored as `value mod modulus`; the infinite
//!   place uses the modulus `y` with a constant value.
//! - `R(y)` in the exact model of [`real`]: real roots isolated by Sturm
//!   sequences plus the infinite place.
//! - `Q` itself in [`rational`]: rational primes and the real place.

use std::fmt;

use crate::arith::{
    is_qth_power_finite_field, is_qth_power_quadratic_field, is_qth_power_rational, Field, FiniteField,
    PrimeField, QuadraticField, QuadraticFieldElement, Rational, RationalFunction, Rationals,
};
use crate::error::{Error, Result};
use crate::poly::{factor, UniPoly};

pub mod rational;
pub mod real;

mod rational_factor;

pub use rational_factor::factor_over_rationals;

/// A place of `k(y)`.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctionFieldPlace<F: Field> {
    /// A monic irreducible polynomial of `k[y]`.
    Finite(UniPoly<F>),
    Infinite,
}

impl<F: Field> FunctionFieldPlace<F> {
    /// `[k(x) : k]`.
    pub fn degree(&self) -> usize {
        match self {
            Self::Finite(p) => p.degree().expect("nonzero prime"),
            Self::Infinite => 1,
        }
    }
}

impl<F: Field> fmt::Display for FunctionFieldPlace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(p) => write!(f, "prime:{p}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

/// Which field a residue class lives in.
#[derive(Clone, Debug, PartialEq)]
pub enum ResidueFieldDescriptor {
    /// `F_p[y]/(modulus)`, of order `p^deg`.
    Finite { p: u64, modulus: String },
    Rationals,
    RealModel,
    ComplexModel,
    /// `Q(theta)` with `theta^2 = s`.
    QuadraticNumberField(Rational),
}

/// An element of the residue field `k[y]/(modulus)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueClass<F: Field> {
    pub modulus: UniPoly<F>,
    pub value: UniPoly<F>,
}

impl<F: Field> ResidueClass<F> {
    pub fn mul(&self, other: &Self) -> Self {
        Self { modulus: self.modulus.clone(), value: self.value.mulmod(&other.value, &self.modulus) }
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }
}

impl<F: Field> fmt::Display for ResidueClass<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_constant() {
            f.write_str(&self.value.field().render(&self.value.coeff(0)))
        } else {
            write!(f, "{} mod ({})", self.value, self.modulus)
        }
    }
}

/// Constant fields whose polynomial rings we can factor and whose residue
/// fields admit a `q`-th power test.
pub trait ConstantField: Field {
    /// Monic irreducible factors of `a` with multiplicities.
    fn factor_places(&self, a: &UniPoly<Self>) -> Result<Vec<(UniPoly<Self>, u32)>>;

    /// Whether the residue class is a `q`-th power in its residue field.
    fn residue_is_qth_power(&self, r: &ResidueClass<Self>, q: u32) -> Result<bool>;

    fn residue_field(&self, modulus: &UniPoly<Self>) -> ResidueFieldDescriptor;
}

impl ConstantField for PrimeField {
    fn factor_places(&self, a: &UniPoly<Self>) -> Result<Vec<(UniPoly<Self>, u32)>> {
        Ok(factor(a, 0).factors)
    }

    fn residue_is_qth_power(&self, r: &ResidueClass<Self>, q: u32) -> Result<bool> {
        if r.modulus.degree() == Some(1) {
            return Ok(is_qth_power_finite_field(self, &r.value.coeff(0), q as u64));
        }
        let k = FiniteField::new_unchecked(r.modulus.clone());
        Ok(is_qth_power_finite_field(&k, &r.value, q as u64))
    }

    fn residue_field(&self, modulus: &UniPoly<Self>) -> ResidueFieldDescriptor {
        ResidueFieldDescriptor::Finite { p: self.modulus(), modulus: modulus.to_string() }
    }
}

impl ConstantField for Rationals {
    fn factor_places(&self, a: &UniPoly<Self>) -> Result<Vec<(UniPoly<Self>, u32)>> {
        factor_over_rationals(a)
    }

    fn residue_is_qth_power(&self, r: &ResidueClass<Self>, q: u32) -> Result<bool> {
        match r.modulus.degree() {
            Some(1) => Ok(is_qth_power_rational(&r.value.coeff(0), q)),
            Some(2) => {
                let (k, gamma) = quadratic_residue(r)?;
                is_qth_power_quadratic_field(&k, &gamma, q)
            }
            Some(d) => Err(Error::UnsupportedDegree(d as u32)),
            None => Err(Error::DivisionByZero),
        }
    }

    fn residue_field(&self, modulus: &UniPoly<Self>) -> ResidueFieldDescriptor {
        if modulus.degree() == Some(2) {
            let b = modulus.coeff(1) / modulus.coeff(2);
            let c = modulus.coeff(0) / modulus.coeff(2);
            let s = &b * &b / Rational::from_integer(4.into()) - c;
            ResidueFieldDescriptor::QuadraticNumberField(s)
        } else {
            ResidueFieldDescriptor::Rationals
        }
    }
}

/// For the monic quadratic `y^2 + b y + c`, `theta = y + b/2` satisfies
/// `theta^2 = b^2/4 - c`.
fn quadratic_residue(r: &ResidueClass<Rationals>) -> Result<(QuadraticField, QuadraticFieldElement)> {
    let m = r.modulus.monic();
    let half_b = m.coeff(1) / Rational::from_integer(2.into());
    let s = &half_b * &half_b - m.coeff(0);
    let k = QuadraticField::new(s)?;
    let (v0, v1) = (r.value.coeff(0), r.value.coeff(1));
    Ok((k, QuadraticFieldElement::new(v0 - &v1 * &half_b, v1)))
}

/// A finitely supported map from places to nonzero integers.
#[derive(Clone, Debug, PartialEq)]
pub struct Divisor<P> {
    entries: Vec<(P, i64)>,
}

impl<P: PartialEq> Divisor<P> {
    pub fn new() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn add(&mut self, place: P, n: i64) {
        if let Some(entry) = self.entries.iter_mut().find(|(p, _)| *p == place) {
            entry.1 += n;
        } else {
            self.entries.push((place, n));
        }
        self.entries.retain(|(_, n)| *n != 0);
    }

    pub fn get(&self, place: &P) -> i64 {
        self.entries.iter().find(|(p, _)| p == place).map_or(0, |(_, n)| *n)
    }

    pub fn entries(&self) -> &[(P, i64)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

impl<P: PartialEq> Default for Divisor<P> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Divisor<FunctionFieldPlace<F>> {
    /// `sum n_x [k(x):k]`.
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|(p, n)| n * p.degree() as i64).sum()
    }
}

impl<P: fmt::Display> fmt::Display for Divisor<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(p, n)| format!("{p}: {n}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `nu(a)` at a place of `k(y)`; `nu_inf = deg(den) - deg(num)`.
pub fn valuation<F: Field>(a: &RationalFunction<F>, place: &FunctionFieldPlace<F>) -> Result<i64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(match place {
        FunctionFieldPlace::Finite(p) => {
            a.numer().split_off(p).0 as i64 - a.denom().split_off(p).0 as i64
        }
        FunctionFieldPlace::Infinite => a.denom().degree().unwrap() as i64 - a.numer().degree().unwrap() as i64,
    })
}

/// Image of a unit at the place in its residue field.
pub fn residue<F: Field>(a: &RationalFunction<F>, place: &FunctionFieldPlace<F>) -> Result<ResidueClass<F>> {
    let v = valuation(a, place)?;
    if v != 0 {
        return Err(Error::NonzeroValuation(v));
    }
    let field = a.numer().field().clone();
    Ok(match place {
        FunctionFieldPlace::Finite(p) => {
            let num = a.numer().rem(p)?;
            let den = a.denom().invmod(p).expect("unit at the place");
            ResidueClass { modulus: p.clone(), value: num.mulmod(&den, p) }
        }
        FunctionFieldPlace::Infinite => {
            let c = field.div(&a.numer().lc(), &a.denom().lc()).expect("nonzero");
            ResidueClass { modulus: UniPoly::x(field.clone()), value: UniPoly::constant(field, c) }
        }
    })
}

/// All places where `a` has nonzero valuation, the infinite place last.
pub fn divisor_of<F: ConstantField>(a: &RationalFunction<F>) -> Result<Divisor<FunctionFieldPlace<F>>> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let field = a.numer().field();
    let mut d = Divisor::new();
    for (part, sign) in [(a.numer(), 1), (a.denom(), -1)] {
        if part.degree().unwrap_or(0) > 0 {
            for (p, m) in field.factor_places(part)? {
                d.add(FunctionFieldPlace::Finite(p), sign * m as i64);
            }
        }
    }
    d.add(FunctionFieldPlace::Infinite, valuation(a, &FunctionFieldPlace::Infinite)?);
    Ok(d)
}

/// The places dividing any of the given polynomials, plus the infinite
/// place, without duplicates.
pub fn support<F: ConstantField>(polys: &[&UniPoly<F>]) -> Result<Vec<FunctionFieldPlace<F>>> {
    let mut out: Vec<FunctionFieldPlace<F>> = Vec::new();
    for a in polys {
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (p, _) in a.field().factor_places(a)? {
            let place = FunctionFieldPlace::Finite(p);
            if !out.contains(&place) {
                out.push(place);
            }
        }
    }
    out.push(FunctionFieldPlace::Infinite);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> UniPoly<PrimeField> {
        let f = PrimeField::new(p);
        UniPoly::new(f, c.iter().map(|&v| f.elem(v)).collect())
    }

    fn qp(c: &[i64]) -> UniPoly<Rationals> {
        UniPoly::new(Rationals, c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    #[test]
    fn valuations() {
        let a = RationalFunction::from_poly(qp(&[0, -1, 1]));
        assert_eq!(valuation(&a, &FunctionFieldPlace::Finite(qp(&[0, 1]))), Ok(1));
        let b = RationalFunction::from_poly(qp(&[1, 0, 0, 1]));
        assert_eq!(valuation(&b, &FunctionFieldPlace::Infinite), Ok(-3));
        let zero = RationalFunction::from_poly(qp(&[]));
        assert_eq!(valuation(&zero, &FunctionFieldPlace::Infinite), Err(Error::ZeroElement));
    }

    #[test]
    fn divisors() {
        let a = RationalFunction::from_poly(fp(5, &[-1, 0, 1]));
        let d = divisor_of(&a).unwrap();
        assert_eq!(d.get(&FunctionFieldPlace::Finite(fp(5, &[-1, 1]))), 1);
        assert_eq!(d.get(&FunctionFieldPlace::Finite(fp(5, &[1, 1]))), 1);
        assert_eq!(d.get(&FunctionFieldPlace::Infinite), -2);
        assert_eq!(d.len(), 3);
        assert_eq!(d.degree(), 0);
        assert!(divisor_of(&RationalFunction::from_poly(fp(5, &[1]))).unwrap().is_empty());
        let y = divisor_of(&RationalFunction::from_poly(qp(&[0, 1]))).unwrap();
        assert_eq!(y.entries(), &[(FunctionFieldPlace::Finite(qp(&[0, 1])), 1), (FunctionFieldPlace::Infinite, -1)]);
    }

    #[test]
    fn residues() {
        let a = RationalFunction::from_poly(qp(&[1, 0, 1]));
        let r = residue(&a, &FunctionFieldPlace::Finite(qp(&[-1, 1]))).unwrap();
        assert_eq!(r.value, qp(&[2]));
        let b = RationalFunction::new(qp(&[-1, 1]), qp(&[0, 1]));
        assert_eq!(residue(&b, &FunctionFieldPlace::Infinite).unwrap().value, qp(&[1]));
        assert_eq!(residue(&b, &FunctionFieldPlace::Finite(qp(&[0, 1]))), Err(Error::NonzeroValuation(-1)));
    }

    #[test]
    fn quadratic_residue_field_over_q() {
        let m = qp(&[1, 0, 1]);
        let three = ResidueClass { modulus: m.clone(), value: qp(&[3]) };
        assert_eq!(Rationals.residue_is_qth_power(&three, 2), Ok(false));
        let minus_one = ResidueClass { modulus: m.clone(), value: qp(&[-1]) };
        assert_eq!(Rationals.residue_is_qth_power(&minus_one, 2), Ok(true));
        // 2y = (1 + y)^2 mod y^2 + 1
        let two_y = ResidueClass { modulus: m, value: qp(&[0, 2]) };
        assert_eq!(Rationals.residue_is_qth_power(&two_y, 2), Ok(true));
    }
}
