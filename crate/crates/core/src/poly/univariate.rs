use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;

use crate::arith::Field;
use crate::error::{Error, Result};

/// Dense univariate polynomial over a field, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The variable itself.
    pub fn x(field: F) -> Self {
        Self::monomial(field.clone(), field.one(), 1)
    }

    pub fn monomial(field: F, c: F::Elem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    /// `x - a`.
    pub fn linear_root(field: F, a: &F::Elem) -> Self {
        let c = field.neg(a);
        Self::new(field.clone(), vec![c, field.one()])
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.lc()).expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { field: self.field.clone(), coeffs }
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(self.field.clone(), c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs =
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect();
        Self::new(f.clone(), coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division; the divisor's leading coefficient must be
    /// invertible (always true over a field unless the divisor is zero).
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lc_inv = f.inv(&b.lc()).ok_or(Error::NonInvertibleLeading)?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut q = vec![f.zero(); r.len() - db];
        for i in (db..r.len()).rev() {
            if f.is_zero(&r[i]) {
                continue;
            }
            let c = f.mul(&r[i], &lc_inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                let t = f.mul(&c, bj);
                r[i - db + j] = f.sub(&r[i - db + j], &t);
            }
            q[i - db] = c;
        }
        r.truncate(db);
        Ok((Self::new(f.clone(), q), Self::new(f.clone(), r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        self.divrem(b).map(|(_, r)| r)
    }

    /// Quotient of an exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, b: &Self) -> Self {
        let (q, r) = self.divrem(b).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g = gcd(self, other)`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(f.clone()), Self::zero(f.clone()));
        let (mut t0, mut t1) = (Self::zero(f.clone()), Self::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(&r0.lc()).expect("nonzero");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse modulo `m`, if `gcd(self, m) = 1`.
    pub fn invmod(&self, m: &Self) -> Option<Self> {
        let a = self.rem(m).ok()?;
        let (g, s, _) = a.xgcd(m);
        if g.is_one() {
            s.rem(m).ok()
        } else {
            None
        }
    }

    pub fn mulmod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m).expect("nonzero modulus")
    }

    pub fn powmod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = Self::one(self.field.clone()).rem(m).expect("nonzero modulus");
        let mut base = self.rem(m).expect("nonzero modulus");
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mulmod(&base, m);
            }
            if i + 1 < bits {
                base = base.mulmod(&base, m);
            }
        }
        result
    }

    /// Multiplicity of `p` (of positive degree) as a divisor of `self != 0`,
    /// together with the cofactor.
    pub fn split_off(&self, p: &Self) -> (u32, Self) {
        let mut e = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(p).expect("nonzero divisor");
            if !r.is_zero() || cur.is_zero() {
                return (e, cur);
            }
            cur = q;
            e += 1;
        }
    }

    /// Render in the polynomial grammar with the given variable name.
    pub fn display_var(&self, var: &str) -> String {
        let terms = self.coeffs.iter().enumerate().rev().map(|(i, c)| (c, i));
        render_terms(&self.field, terms, |i| monomial_text(var, i))
    }
}

fn monomial_text(var: &str, i: usize) -> String {
    match i {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{i}"),
    }
}

/// Shared printer: `terms` yields (coefficient, key) in print order and
/// `mono` renders the monomial for a key (empty for the constant term).
pub(crate) fn render_terms<'a, F: Field + 'a, K>(
    field: &F,
    terms: impl Iterator<Item = (&'a F::Elem, K)>,
    mono: impl Fn(K) -> String,
) -> String {
    let mut out = String::new();
    for (c, k) in terms {
        if field.is_zero(c) {
            continue;
        }
        let text = field.render(c);
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        let m = mono(k);
        let body = if m.is_empty() {
            mag
        } else if mag == "1" {
            m
        } else {
            format!("{mag}*{m}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("y"))
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn add(self, rhs: Self) -> UniPoly<F> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => f.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::new(f.clone(), coeffs)
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn sub(self, rhs: Self) -> UniPoly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn neg(self) -> UniPoly<F> {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        UniPoly { field: self.field.clone(), coeffs }
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;

    fn mul(self, rhs: Self) -> UniPoly<F> {
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f.clone());
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UniPoly::new(f.clone(), out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rational, Rationals};

    fn qp(c: &[i64]) -> UniPoly<Rationals> {
        UniPoly::new(Rationals, c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    fn fp(p: u64, c: &[i64]) -> UniPoly<PrimeField> {
        let f = PrimeField::new(p);
        UniPoly::new(f, c.iter().map(|&v| f.elem(v)).collect())
    }

    #[test]
    fn division_examples() {
        let (q, r) = qp(&[-1, 0, 1]).divrem(&qp(&[0, 1])).unwrap();
        assert_eq!((q, r), (qp(&[0, 1]), qp(&[-1])));
        let (q, r) = qp(&[1, 0, 1]).divrem(&qp(&[-1, 1])).unwrap();
        assert_eq!((q, r), (qp(&[1, 1]), qp(&[2])));
        let (q, r) = qp(&[0, 0, 0, 1]).divrem(&qp(&[0, 0, 0, 1])).unwrap();
        assert_eq!((q, r), (qp(&[1]), qp(&[])));
        assert_eq!(qp(&[1]).divrem(&qp(&[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(qp(&[-1, 0, 1]).gcd(&qp(&[-1, 1])), qp(&[-1, 1]));
        assert_eq!(qp(&[1, 0, 1]).gcd(&qp(&[-1, 0, 1])), qp(&[1]));
        assert_eq!(qp(&[]).gcd(&qp(&[0, 1])), qp(&[0, 1]));
        assert_eq!(qp(&[]).gcd(&qp(&[])), qp(&[]));
    }

    #[test]
    fn xgcd_bezout() {
        let a = fp(7, &[1, 2, 0, 3]);
        let b = fp(7, &[4, 0, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(g.is_monic());
    }

    #[test]
    fn printer() {
        assert_eq!(qp(&[-2, 5, -4, 1]).to_string(), "y^3 - 4*y^2 + 5*y - 2");
        assert_eq!(fp(7, &[5, 5, 3, 1]).to_string(), "y^3 + 3*y^2 + 5*y + 5");
        assert_eq!(qp(&[]).to_string(), "0");
        assert_eq!(qp(&[0, -1]).to_string(), "-y");
        let half = UniPoly::new(Rationals, vec![Rational::new(1.into(), 2.into()), Rational::from_integer((-1).into())]);
        assert_eq!(half.display_var("x"), "-x + 1/2");
    }

    #[test]
    fn powmod_matches_repeated_multiplication() {
        let m = fp(5, &[2, 0, 1]);
        let a = fp(5, &[1, 3]);
        let mut acc = fp(5, &[1]);
        for _ in 0..13 {
            acc = acc.mulmod(&a, &m);
        }
        assert_eq!(a.powmod(&BigUint::from(13u32), &m), acc);
    }

    #[test]
    fn split_off_multiplicity() {
        let p = qp(&[-1, 1]);
        let f = &p.pow(3) * &qp(&[1, 0, 1]);
        let (e, rest) = f.split_off(&p);
        assert_eq!(e, 3);
        assert_eq!(rest, qp(&[1, 0, 1]));
    }
}
