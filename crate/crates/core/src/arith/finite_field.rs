use num_bigint::BigUint;
use num_traits::Zero;

use super::{big_pow, Field, PrimeField, Rational};
use crate::error::{Error, Result};
use crate::poly::{is_irreducible, UniPoly};

/// Element of `F_p[y]/(g)`: a polynomial of degree below `deg g`.
pub type FiniteFieldElement = UniPoly<PrimeField>;

/// The extension field `F_{p^d} = F_p[y]/(g)` for a monic irreducible `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteField {
    base: PrimeField,
    modulus: UniPoly<PrimeField>,
}

impl FiniteField {
    pub fn new(modulus: UniPoly<PrimeField>) -> Result<Self> {
        let base = *modulus.field();
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::Precondition("modulus must have positive degree".into()));
        }
        let modulus = modulus.monic();
        if !is_irreducible(&modulus) {
            return Err(Error::Precondition(format!("{} is reducible over F_{}", modulus, base.modulus())));
        }
        Ok(Self { base, modulus })
    }

    /// Skips the irreducibility test; the caller guarantees it.
    pub(crate) fn new_unchecked(modulus: UniPoly<PrimeField>) -> Self {
        Self { base: *modulus.field(), modulus: modulus.monic() }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn modulus(&self) -> &UniPoly<PrimeField> {
        &self.modulus
    }

    pub fn degree(&self) -> u32 {
        self.modulus.degree().expect("nonzero modulus") as u32
    }

    pub fn reduce(&self, a: &UniPoly<PrimeField>) -> FiniteFieldElement {
        a.rem(&self.modulus).expect("monic modulus")
    }

    pub fn embed(&self, c: u64) -> FiniteFieldElement {
        UniPoly::constant(self.base, c)
    }

    /// `N(a) = a^((p^d - 1)/(p - 1))`, an element of `F_p`.
    pub fn norm(&self, a: &FiniteFieldElement) -> u64 {
        let p = self.base.modulus();
        let e = (self.order() - 1u32) / (p - 1);
        let n = self.pow_big(a, &e);
        debug_assert!(n.degree().unwrap_or(0) == 0);
        n.coeff(0)
    }
}

/// Fields with finitely many elements.
pub trait FiniteFieldLike: Field {
    fn order(&self) -> BigUint;
}

impl FiniteFieldLike for PrimeField {
    fn order(&self) -> BigUint {
        BigUint::from(self.modulus())
    }
}

impl FiniteFieldLike for FiniteField {
    fn order(&self) -> BigUint {
        big_pow(self.base.modulus(), self.degree())
    }
}

/// Euler's criterion: `a` is a `q`-th power iff `a^((N-1)/q) = 1` when
/// `q | N - 1`; every element is a `q`-th power otherwise. Zero counts.
pub fn is_qth_power_finite_field<F: FiniteFieldLike>(field: &F, a: &F::Elem, q: u64) -> bool {
    if field.is_zero(a) {
        return true;
    }
    let n = field.order() - 1u32;
    if !(&n % q).is_zero() {
        return true;
    }
    field.is_one(&field.pow_big(a, &(n / q)))
}

impl Field for FiniteField {
    type Elem = FiniteFieldElement;

    fn zero(&self) -> Self::Elem {
        UniPoly::zero(self.base)
    }

    fn one(&self) -> Self::Elem {
        UniPoly::one(self.base)
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(self.base.elem(n))
    }

    fn from_rational(&self, r: &Rational) -> Option<Self::Elem> {
        self.base.from_rational(r).map(|c| self.embed(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a - b
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(&(a * b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        -a
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.invmod(&self.modulus)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    fn render(&self, a: &Self::Elem) -> String {
        if a.degree().unwrap_or(0) == 0 {
            a.coeff(0).to_string()
        } else {
            format!("({a})")
        }
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        a.degree() == Some(0) && a.coeff(0) == 1
    }
}

impl FiniteField {
    /// All elements, in lexicographic coefficient order. Only sensible for
    /// small fields.
    pub fn elements(&self) -> Vec<FiniteFieldElement> {
        let p = self.base.modulus();
        let d = self.degree() as usize;
        let total = p.pow(d as u32);
        (0..total)
            .map(|mut k| {
                let mut c = Vec::with_capacity(d);
                for _ in 0..d {
                    c.push(k % p);
                    k /= p;
                }
                UniPoly::new(self.base, c)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> UniPoly<PrimeField> {
        let f = PrimeField::new(p);
        UniPoly::new(f, c.iter().map(|&v| f.elem(v)).collect())
    }

    #[test]
    fn cubes_in_f7() {
        let f = PrimeField::new(7);
        assert!(!is_qth_power_finite_field(&f, &2, 3));
        assert!(is_qth_power_finite_field(&f, &6, 3));
        assert!(is_qth_power_finite_field(&f, &1, 3));
        assert!(is_qth_power_finite_field(&f, &0, 3));
    }

    #[test]
    fn f9_arithmetic() {
        // F_9 = F_3[y]/(y^2 + 1)
        let k = FiniteField::new(fp(3, &[1, 0, 1])).unwrap();
        assert_eq!(k.order(), BigUint::from(9u32));
        let y = fp(3, &[0, 1]);
        assert!(k.is_one(&k.neg(&k.mul(&y, &y))));
        // every element of F_3 is a square in F_9
        assert!(is_qth_power_finite_field(&k, &k.embed(2), 2));
        assert!(!is_qth_power_finite_field(&k, &y, 4) || is_qth_power_finite_field(&k, &y, 2));
        for a in k.elements().iter().skip(1) {
            assert!(k.is_one(&k.mul(a, &k.inv(a).unwrap())));
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let k = FiniteField::new(fp(5, &[2, 0, 1])).unwrap(); // y^2 + 2 irreducible mod 5
        let els = k.elements();
        for a in els.iter().step_by(3) {
            for b in els.iter().step_by(5) {
                let lhs = k.norm(&k.mul(a, b));
                let rhs = k.base().mul(&k.norm(a), &k.norm(b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(FiniteField::new(fp(5, &[1, 0, 1])).is_err());
    }
}
