use num_traits::{Signed, Zero};

use super::rational::is_square_rational;
use super::{Field, Rational};
use crate::error::{Error, Result};

/// `c + d*theta` in `Q(theta)`, `theta^2 = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFieldElement {
    pub c: Rational,
    pub d: Rational,
}

impl QuadraticFieldElement {
    pub fn new(c: Rational, d: Rational) -> Self {
        Self { c, d }
    }
}

/// The quadratic number field `Q(theta)` with `theta^2 = s`, `s` not a
/// rational square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticField {
    s: Rational,
}

impl QuadraticField {
    pub fn new(s: Rational) -> Result<Self> {
        if is_square_rational(&s) {
            return Err(Error::Precondition(format!("{s} is a rational square")));
        }
        Ok(Self { s })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn theta(&self) -> QuadraticFieldElement {
        QuadraticFieldElement::new(Rational::zero(), Rational::from_integer(1.into()))
    }

    pub fn norm(&self, a: &QuadraticFieldElement) -> Rational {
        &a.c * &a.c - &self.s * &a.d * &a.d
    }
}

impl Field for QuadraticField {
    type Elem = QuadraticFieldElement;

    fn zero(&self) -> Self::Elem {
        QuadraticFieldElement::new(Rational::zero(), Rational::zero())
    }

    fn one(&self) -> Self::Elem {
        QuadraticFieldElement::new(Rational::from_integer(1.into()), Rational::zero())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        QuadraticFieldElement::new(Rational::from_integer(n.into()), Rational::zero())
    }

    fn from_rational(&self, r: &Rational) -> Option<Self::Elem> {
        Some(QuadraticFieldElement::new(r.clone(), Rational::zero()))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadraticFieldElement::new(&a.c + &b.c, &a.d + &b.d)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadraticFieldElement::new(&a.c - &b.c, &a.d - &b.d)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        QuadraticFieldElement::new(&a.c * &b.c + &self.s * &a.d * &b.d, &a.c * &b.d + &a.d * &b.c)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        QuadraticFieldElement::new(-&a.c, -&a.d)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let n = self.norm(a);
        if n.is_zero() {
            return None;
        }
        Some(QuadraticFieldElement::new(&a.c / &n, -&a.d / &n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.c.is_zero() && a.d.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn render(&self, a: &Self::Elem) -> String {
        let r = super::Rationals;
        if a.d.is_zero() {
            return r.render(&a.c);
        }
        format!("({} + {}*sqrt({}))", r.render(&a.c), r.render(&a.d), r.render(&self.s))
    }
}

/// Square test in `Q(theta)` via the norm: for `d = 0`, `c` or `c/s` must
/// be a rational square; otherwise `c^2 - s d^2 = r^2` with `r >= 0` and
/// one of `(c +- r)/2` a rational square. Only `q = 2` is supported.
pub fn is_qth_power_quadratic_field(field: &QuadraticField, gamma: &QuadraticFieldElement, q: u32) -> Result<bool> {
    if q != 2 {
        return Err(Error::UnsupportedDegree(q));
    }
    let QuadraticFieldElement { c, d } = gamma;
    if d.is_zero() {
        return Ok(is_square_rational(c) || is_square_rational(&(c / field.s())));
    }
    let n = field.norm(gamma);
    if !is_square_rational(&n) {
        return Ok(false);
    }
    let r = rational_sqrt(&n).expect("square norm");
    debug_assert!(!r.is_negative());
    let two = Rational::from_integer(2.into());
    for cand in [(c + &r) / &two, (c - &r) / &two] {
        if let Some(a) = rational_sqrt(&cand) {
            if a.is_zero() {
                continue;
            }
            // b = d / 2a must then satisfy s b^2 = c - a^2
            let b = d / (&two * &a);
            debug_assert_eq!(field.s() * &b * &b, c - &a * &a);
            return Ok(true);
        }
    }
    Ok(false)
}

pub(crate) fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if !is_square_rational(r) {
        return None;
    }
    let n = super::integer_nth_root(r.numer().magnitude(), 2)?;
    let d = super::integer_nth_root(r.denom().magnitude(), 2)?;
    Some(Rational::new(n.into(), d.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn gaussian_squares() {
        let k = QuadraticField::new(q(-1)).unwrap();
        let two_theta = QuadraticFieldElement::new(q(0), q(2));
        assert!(is_qth_power_quadratic_field(&k, &two_theta, 2).unwrap());
        assert!(!is_qth_power_quadratic_field(&k, &k.from_i64(3), 2).unwrap());
        assert!(is_qth_power_quadratic_field(&k, &k.zero(), 2).unwrap());
        // -4 = (2 theta)^2
        assert!(is_qth_power_quadratic_field(&k, &k.from_i64(-4), 2).unwrap());
        assert_eq!(is_qth_power_quadratic_field(&k, &k.one(), 3), Err(Error::UnsupportedDegree(3)));
    }

    #[test]
    fn square_of_generic_element_detected() {
        let k = QuadraticField::new(q(5)).unwrap();
        let a = QuadraticFieldElement::new(Rational::new(3.into(), 7.into()), Rational::new((-2).into(), 5.into()));
        assert!(is_qth_power_quadratic_field(&k, &k.mul(&a, &a), 2).unwrap());
        assert!(!is_qth_power_quadratic_field(&k, &k.theta(), 2).unwrap());
    }

    #[test]
    fn square_rational_is_rejected_as_modulus() {
        assert!(QuadraticField::new(q(4)).is_err());
    }
}
