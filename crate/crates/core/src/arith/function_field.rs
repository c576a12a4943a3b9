use super::{is_qth_power_finite_field, Field, PrimeField, Rational};
use crate::poly::{factor, UniPoly};

/// A quotient `num/den` of univariate polynomials, kept with `den` monic and
/// `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<F: Field> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RationalFunction<F> {
    /// Panics if `den` is zero.
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self { den: UniPoly::one(num.field().clone()), num };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let lc = den.lc();
        let f = den.field().clone();
        let lci = f.inv(&lc).expect("nonzero leading coefficient");
        Self { num: num.scale(&lci), den: den.scale(&lci) }
    }

    pub fn from_poly(num: UniPoly<F>) -> Self {
        let den = UniPoly::one(num.field().clone());
        Self { num, den }
    }

    pub fn numer(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&(&self.num * &other.den) + &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&(&self.num * &other.den) - &(&other.num * &self.den), &self.den * &other.den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }

    pub fn neg(&self) -> Self {
        Self { num: -&self.num, den: self.den.clone() }
    }
}

/// The rational function field `F_p(T)`, used as a constant field for
/// function fields in a second variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalFunctionField {
    base: PrimeField,
}

impl RationalFunctionField {
    pub fn new(base: PrimeField) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// The transcendental `T`.
    pub fn generator(&self) -> RationalFunction<PrimeField> {
        RationalFunction::from_poly(UniPoly::x(self.base))
    }

    pub fn from_poly(&self, p: UniPoly<PrimeField>) -> RationalFunction<PrimeField> {
        RationalFunction::from_poly(p)
    }
}

impl Field for RationalFunctionField {
    type Elem = RationalFunction<PrimeField>;

    fn zero(&self) -> Self::Elem {
        RationalFunction::from_poly(UniPoly::zero(self.base))
    }

    fn one(&self) -> Self::Elem {
        RationalFunction::from_poly(UniPoly::one(self.base))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        RationalFunction::from_poly(UniPoly::constant(self.base, self.base.elem(n)))
    }

    fn from_rational(&self, r: &Rational) -> Option<Self::Elem> {
        self.base.from_rational(r).map(|c| RationalFunction::from_poly(UniPoly::constant(self.base, c)))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.inv()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        self.base.modulus()
    }

    fn render(&self, a: &Self::Elem) -> String {
        let n = a.num.display_var("T");
        if a.den.degree() == Some(0) {
            if a.num.degree().unwrap_or(0) == 0 {
                n
            } else {
                format!("({n})")
            }
        } else {
            format!("(({n})/({}))", a.den.display_var("T"))
        }
    }
}

/// `u` is a square in `F_p(x)` iff every irreducible factor of its
/// numerator and denominator occurs to an even power and the leading
/// coefficient is a square in `F_p`.
pub fn is_square_in_rational_function_field(u: &RationalFunction<PrimeField>) -> bool {
    if u.is_zero() {
        return true;
    }
    let f = *u.numer().field();
    for part in [u.numer(), u.denom()] {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let fac = factor(part, 0);
        if fac.factors.iter().any(|(_, m)| m % 2 == 1) {
            return false;
        }
    }
    // den is monic, so the residual constant is lc(num)
    is_qth_power_finite_field(&f, &u.numer().lc(), 2)
}
