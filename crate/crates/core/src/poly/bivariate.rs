use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::univariate::render_terms;
use super::UniPoly;
use crate::arith::Field;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
        }
    }

    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

/// Sparse polynomial in `x` and `y`; keys are `(deg_x, deg_y)` and no
/// stored coefficient is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    terms: BTreeMap<(u32, u32), F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F) -> Self {
        Self { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::monomial(field, c, 0, 0)
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::constant(field, one)
    }

    pub fn monomial(field: F, c: F::Elem, i: u32, j: u32) -> Self {
        let mut p = Self::zero(field);
        p.add_term(i, j, c);
        p
    }

    pub fn var(field: F, v: Var) -> Self {
        let one = field.one();
        match v {
            Var::X => Self::monomial(field, one, 1, 0),
            Var::Y => Self::monomial(field, one, 0, 1),
        }
    }

    pub fn from_terms(field: F, terms: impl IntoIterator<Item = ((u32, u32), F::Elem)>) -> Self {
        let mut p = Self::zero(field);
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Embed a univariate polynomial as a polynomial in `v`.
    pub fn from_univariate(u: &UniPoly<F>, v: Var) -> Self {
        let terms = u.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            (if v == Var::X { (k, 0) } else { (0, k) }, c.clone())
        });
        Self::from_terms(u.field().clone(), terms)
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: F::Elem) {
        let f = &self.field;
        let entry = self.terms.entry((i, j)).or_insert_with(|| f.zero());
        *entry = f.add(entry, &c);
        if f.is_zero(entry) {
            self.terms.remove(&(i, j));
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> F::Elem {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|&(i, j)| if v == Var::X { i > 0 } else { j > 0 })
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| if v == Var::X { i } else { j }).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Least total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(&(i, j), _)| i + j == d).map(|(&k, c)| (k, c.clone()));
        Self::from_terms(self.field.clone(), terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::from_terms(self.field.clone(), self.terms.iter().map(|(&k, a)| (k, self.field.mul(a, c))))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exchange `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        Self::from_terms(self.field.clone(), self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    pub fn eval(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.terms
            .iter()
            .fold(f.zero(), |acc, (&(i, j), c)| f.add(&acc, &f.mul(c, &f.mul(&f.pow(x, i as u64), &f.pow(y, j as u64)))))
    }

    /// Substitute a constant for one variable.
    pub fn specialize(&self, v: Var, value: &F::Elem) -> UniPoly<F> {
        let f = &self.field;
        let mut out = Polynomial::zero(f.clone());
        for (&(i, j), c) in &self.terms {
            let (e, keep) = if v == Var::X { (i, (0, j)) } else { (j, (i, 0)) };
            out.add_term(keep.0, keep.1, f.mul(c, &f.pow(value, e as u64)));
        }
        out.to_univariate(v.other()).expect("one variable left")
    }

    /// The univariate view in `v`; fails if the other variable occurs.
    pub fn to_univariate(&self, v: Var) -> Result<UniPoly<F>> {
        if self.uses(v.other()) {
            return Err(Error::MultivariateInput);
        }
        let n = self.degree_in(v).map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![self.field.zero(); n];
        for (&(i, j), c) in &self.terms {
            coeffs[if v == Var::X { i } else { j } as usize] = c.clone();
        }
        Ok(UniPoly::new(self.field.clone(), coeffs))
    }

    /// The polynomial as a univariate polynomial in `main` whose
    /// coefficients are univariate polynomials in the other variable.
    pub fn coefficients_in(&self, main: Var) -> Vec<UniPoly<F>> {
        let other = main.other();
        let n = self.degree_in(main).map_or(0, |d| d as usize + 1);
        let mut parts = vec![Polynomial::zero(self.field.clone()); n];
        for (&(i, j), c) in &self.terms {
            let (m, o) = if main == Var::X { (i, j) } else { (j, i) };
            let key = if other == Var::X { (o, 0) } else { (0, o) };
            parts[m as usize].add_term(key.0, key.1, c.clone());
        }
        parts.into_iter().map(|p| p.to_univariate(other).expect("single variable")).collect()
    }

    pub fn from_coefficients_in(field: F, main: Var, coeffs: &[UniPoly<F>]) -> Self {
        let mut out = Self::zero(field);
        for (m, c) in coeffs.iter().enumerate() {
            for (o, a) in c.coeffs().iter().enumerate() {
                let (i, j) = if main == Var::X { (m as u32, o as u32) } else { (o as u32, m as u32) };
                out.add_term(i, j, a.clone());
            }
        }
        out
    }

    /// Division with remainder in the main variable `v`; the leading
    /// coefficient of `b` in `v` must be a nonzero constant.
    pub fn divmod(&self, b: &Self, v: Var) -> Result<(Self, Self)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let bc = b.coefficients_in(v);
        let db = bc.len() - 1;
        let lead = &bc[db];
        if !lead.is_constant() {
            return Err(Error::NonInvertibleLeading);
        }
        let inv = self.field.inv(&lead.coeff(0)).ok_or(Error::NonInvertibleLeading)?;
        let mut r = self.coefficients_in(v);
        let zero = UniPoly::zero(self.field.clone());
        let mut q = vec![zero.clone(); r.len().saturating_sub(db)];
        for k in (db..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = r[k].scale(&inv);
            for (j, bj) in bc.iter().enumerate() {
                r[k - db + j] = &r[k - db + j] - &(&c * bj);
            }
            q[k - db] = c;
        }
        r.truncate(db.min(r.len()));
        Ok((
            Self::from_coefficients_in(self.field.clone(), v, &q),
            Self::from_coefficients_in(self.field.clone(), v, &r),
        ))
    }

    /// Monic in `v` after dividing by the leading coefficient, which must be
    /// a constant.
    pub fn monic_in(&self, v: Var) -> Result<Self> {
        let c = self.coefficients_in(v);
        let lead = c.last().ok_or(Error::ZeroElement)?;
        if !lead.is_constant() {
            return Err(Error::NonInvertibleLeading);
        }
        let inv = self.field.inv(&lead.coeff(0)).ok_or(Error::NonInvertibleLeading)?;
        Ok(self.scale(&inv))
    }

    /// Map coefficients into another field.
    pub fn map_field<G: Field>(&self, target: G, mut f: impl FnMut(&F::Elem) -> G::Elem) -> Polynomial<G> {
        Polynomial::from_terms(target.clone(), self.terms.iter().map(|(&k, c)| (k, f(c))))
    }
}

pub(crate) fn monomial_text(i: u32, j: u32) -> String {
    let part = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    match (part("x", i), part("y", j)) {
        (a, b) if a.is_empty() => b,
        (a, b) if b.is_empty() => a,
        (a, b) => format!("{a}*{b}"),
    }
}

/// Canonical order: descending `y` degree, then descending `x` degree.
impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by(|a, b| (b.0 .1, b.0 .0).cmp(&(a.0 .1, a.0 .0)));
        let text = render_terms(&self.field, keys.into_iter().map(|(k, c)| (c, *k)), |(i, j)| monomial_text(i, j));
        f.write_str(&text)
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn add(self, rhs: Self) -> Polynomial<F> {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn sub(self, rhs: Self) -> Polynomial<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn neg(self) -> Polynomial<F> {
        Polynomial::from_terms(self.field.clone(), self.terms.iter().map(|(&k, c)| (k, self.field.neg(c))))
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;

    fn mul(self, rhs: Self) -> Polynomial<F> {
        let f = &self.field;
        let mut out = Polynomial::zero(f.clone());
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, f.mul(a, b));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rational, Rationals};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn xy() -> (Polynomial<Rationals>, Polynomial<Rationals>) {
        (Polynomial::var(Rationals, Var::X), Polynomial::var(Rationals, Var::Y))
    }

    #[test]
    fn display_and_views() {
        let (x, y) = xy();
        let one = Polynomial::one(Rationals);
        let g = &(&y * &y) - &(&x * &(&(&x * &x) - &one));
        assert_eq!(g.to_string(), "y^2 - x^3 + x");
        assert_eq!(g.to_univariate(Var::Y), Err(Error::MultivariateInput));
        let c = g.coefficients_in(Var::Y);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0].display_var("x"), "-x^3 + x");
        assert_eq!(Polynomial::from_coefficients_in(Rationals, Var::Y, &c), g);
        assert_eq!(g.specialize(Var::X, &q(2)).to_string(), "y^2 - 6");
    }

    #[test]
    fn divmod_examples() {
        let (_, y) = xy();
        let one = Polynomial::one(Rationals);
        let (qq, r) = (&(&y * &y) - &one).divmod(&y, Var::Y).unwrap();
        assert_eq!((qq, r), (y.clone(), -&one));
        let (qq, r) = (&(&y * &y) + &one).divmod(&(&y - &one), Var::Y).unwrap();
        assert_eq!(qq, &y + &one);
        assert_eq!(r, Polynomial::constant(Rationals, q(2)));
        let y3 = y.pow(3);
        assert_eq!(y3.divmod(&y3, Var::Y).unwrap(), (one.clone(), Polynomial::zero(Rationals)));
        assert_eq!(one.divmod(&Polynomial::zero(Rationals), Var::Y), Err(Error::DivisionByZero));
    }

    #[test]
    fn bivariate_division_reconstructs() {
        let f = PrimeField::new(13);
        let x = Polynomial::var(f, Var::X);
        let y = Polynomial::var(f, Var::Y);
        let a = &(&y.pow(3) * &x) + &(&x.pow(2) * &y);
        let b = &y.pow(2) - &x;
        let (qq, r) = a.divmod(&b, Var::Y).unwrap();
        assert_eq!(&(&qq * &b) + &r, a);
        assert!(r.degree_in(Var::Y).unwrap_or(0) < 2);
    }
}
