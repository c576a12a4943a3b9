use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use super::newton::{newton_inverse, newton_qth_root, SeriesArith};
use crate::arith::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::poly::{monomial_text, render_terms, Polynomial, UniPoly, Var};

/// Which completion of `k[x, y]` a series lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesRing {
    /// `k[[x, y]]`, truncated by total degree.
    Local,
    /// `k[x][[y]]`, truncated by the exponent of `y`.
    YAdic,
    /// `k[y][[x]]`, truncated by the exponent of `x`.
    XAdic,
}

impl SeriesRing {
    /// Size of the monomial `x^i y^j` in the ideal that defines the ring.
    pub fn weight(self, i: u32, j: u32) -> u32 {
        match self {
            Self::Local => i + j,
            Self::YAdic => j,
            Self::XAdic => i,
        }
    }

    /// The ring after exchanging `x` and `y`.
    pub fn swapped(self) -> Self {
        match self {
            Self::Local => Self::Local,
            Self::YAdic => Self::XAdic,
            Self::XAdic => Self::YAdic,
        }
    }

    /// The variable whose powers define the ideal, for the mixed rings.
    pub fn series_var(self) -> Option<Var> {
        match self {
            Self::Local => None,
            Self::YAdic => Some(Var::Y),
            Self::XAdic => Some(Var::X),
        }
    }

    fn error_term(self, n: u32) -> String {
        match self {
            Self::Local => format!("O((x, y)^{n})"),
            Self::YAdic => format!("O(y^{n})"),
            Self::XAdic => format!("O(x^{n})"),
        }
    }
}

impl fmt::Display for SeriesRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Local => "k[[x,y]]",
            Self::YAdic => "k[x][[y]]",
            Self::XAdic => "k[y][[x]]",
        })
    }
}

impl FromStr for SeriesRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace(' ', "").as_str() {
            "local" | "k[[x,y]]" => Ok(Self::Local),
            "yadic" | "k[x][[y]]" => Ok(Self::YAdic),
            "xadic" | "k[y][[x]]" => Ok(Self::XAdic),
            _ => Err(Error::Usage(format!("unknown ring `{s}`; expected local, yadic or xadic"))),
        }
    }
}

/// An element of one of the rings of [`SeriesRing`] known modulo the
/// `N`-th power of its ideal. No stored term has weight `N` or more.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    field: PrimeField,
    ring: SeriesRing,
    precision: u32,
    terms: BTreeMap<(u32, u32), u64>,
}

impl TruncatedSeries {
    pub fn zero(field: PrimeField, ring: SeriesRing, precision: u32) -> Self {
        Self { field, ring, precision, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        field: PrimeField,
        ring: SeriesRing,
        precision: u32,
        terms: impl IntoIterator<Item = ((u32, u32), u64)>,
    ) -> Self {
        let mut s = Self::zero(field, ring, precision);
        for ((i, j), c) in terms {
            s.add_term(i, j, c);
        }
        s
    }

    pub fn from_polynomial(g: &Polynomial<PrimeField>, ring: SeriesRing, precision: u32) -> Self {
        Self::from_terms(*g.field(), ring, precision, g.terms().map(|(&k, &c)| (k, c)))
    }

    pub fn constant(field: PrimeField, ring: SeriesRing, precision: u32, c: u64) -> Self {
        Self::from_terms(field, ring, precision, [((0, 0), c)])
    }

    pub fn var(field: PrimeField, ring: SeriesRing, precision: u32, v: Var) -> Self {
        let key = if v == Var::X { (1, 0) } else { (0, 1) };
        Self::from_terms(field, ring, precision, [(key, 1)])
    }

    fn add_term(&mut self, i: u32, j: u32, c: u64) {
        if self.ring.weight(i, j) >= self.precision {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry = f.add(entry, &(c % f.modulus()));
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ring(&self) -> SeriesRing {
        self.ring
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn coeff(&self, i: u32, j: u32) -> u64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &u64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least weight of a stored term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| self.ring.weight(i, j)).min()
    }

    /// The stored terms as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial<PrimeField> {
        Polynomial::from_terms(self.field, self.terms.iter().map(|(&k, &c)| (k, c)))
    }

    pub fn truncate(&self, precision: u32) -> Self {
        let n = precision.min(self.precision);
        Self::from_terms(self.field, self.ring, n, self.terms.iter().map(|(&k, &c)| (k, c)))
    }

    /// The same terms read at a higher precision. Callers use this only
    /// where the missing terms may be taken to be zero, as for the cofactor
    /// of a certificate whose products with it are known further out.
    pub(crate) fn assume_precision(&self, precision: u32) -> Self {
        Self { precision, ..self.clone() }
    }

    pub fn swap_vars(&self) -> Self {
        let terms = self.terms.iter().map(|(&(i, j), &c)| ((j, i), c));
        Self::from_terms(self.field, self.ring.swapped(), self.precision, terms)
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        Self::from_terms(f, self.ring, self.precision, self.terms.iter().map(|(&k, a)| (k, f.mul(a, &c))))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.field, self.ring, self.precision, 1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        newton_inverse(self)
    }

    pub fn qth_root(&self, q: u32, r0: Option<u64>) -> Result<Self> {
        newton_qth_root(self, q, r0)
    }

    /// Coefficient of `v^k` as a polynomial in the other variable, where
    /// `v` is the series variable of a mixed ring.
    pub fn layer(&self, k: u32) -> UniPoly<PrimeField> {
        let v = self.ring.series_var().expect("mixed ring");
        let mut coeffs = Vec::new();
        for (&(i, j), &c) in &self.terms {
            let (along, across) = if v == Var::Y { (j, i) } else { (i, j) };
            if along == k {
                if coeffs.len() <= across as usize {
                    coeffs.resize(across as usize + 1, 0);
                }
                coeffs[across as usize] = c;
            }
        }
        UniPoly::new(self.field, coeffs)
    }

    fn check_compatible(&self, other: &Self) {
        assert!(self.ring == other.ring && self.field == other.field, "series from different rings");
    }

    /// `self / g` for a series known to be divisible by `g`. The quotient
    /// is determined to the precision of `self` less the order of `g`.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_compatible(g);
        match self.ring {
            SeriesRing::Local => self.exact_div_local(g),
            SeriesRing::YAdic => self.exact_div_y_adic(g),
            SeriesRing::XAdic => Ok(self.swap_vars().exact_div_y_adic(&g.swap_vars())?.swap_vars()),
        }
    }

    fn exact_div_y_adic(&self, g: &Self) -> Result<Self> {
        let n = self.precision.min(g.precision);
        let d = g.order().ok_or(Error::DivisionByZero)?;
        let not_divisible = || Error::NotDivisible(self.to_string());
        if self.order().is_some_and(|o| o < d) {
            return Err(not_divisible());
        }
        let gl: Vec<_> = (0..n).map(|k| g.layer(k)).collect();
        let mut quotient: Vec<UniPoly<PrimeField>> = Vec::new();
        for j in 0..n.saturating_sub(d) {
            let mut r = self.layer(j + d);
            for i in 1..=j {
                r = &r - &(&gl[(d + i) as usize] * &quotient[(j - i) as usize]);
            }
            let (q, rem) = r.divrem(&gl[d as usize])?;
            if !rem.is_zero() {
                return Err(not_divisible());
            }
            quotient.push(q);
        }
        let terms = quotient
            .iter()
            .enumerate()
            .flat_map(|(j, q)| q.coeffs().iter().enumerate().map(move |(i, &c)| ((i as u32, j as u32), c)));
        Ok(Self::from_terms(self.field, self.ring, n.saturating_sub(d), terms))
    }

    /// Homogeneous parts of degree `m` are read as polynomials in `z = y/x`,
    /// which turns products of forms into products of polynomials.
    fn exact_div_local(&self, g: &Self) -> Result<Self> {
        let n = self.precision.min(g.precision);
        let d = g.order().ok_or(Error::DivisionByZero)?;
        let not_divisible = || Error::NotDivisible(self.to_string());
        if self.order().is_some_and(|o| o < d) {
            return Err(not_divisible());
        }
        let form = |s: &Self, m: u32| {
            let mut coeffs = vec![0; m as usize + 1];
            for (&(i, j), &c) in &s.terms {
                if i + j == m {
                    coeffs[j as usize] = c;
                }
            }
            UniPoly::new(self.field, coeffs)
        };
        let gf: Vec<_> = (0..n).map(|m| form(g, m)).collect();
        let mut quotient: Vec<UniPoly<PrimeField>> = Vec::new();
        for j in 0..n.saturating_sub(d) {
            let mut r = form(self, j + d);
            for i in 1..=j {
                r = &r - &(&gf[(d + i) as usize] * &quotient[(j - i) as usize]);
            }
            let (q, rem) = r.divrem(&gf[d as usize])?;
            if !rem.is_zero() || q.degree().is_some_and(|e| e > j as usize) {
                return Err(not_divisible());
            }
            quotient.push(q);
        }
        let terms = quotient.iter().enumerate().flat_map(|(m, q)| {
            q.coeffs().iter().enumerate().map(move |(k, &c)| (((m - k) as u32, k as u32), c))
        });
        Ok(Self::from_terms(self.field, self.ring, n.saturating_sub(d), terms))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.iter().collect();
        let ring = self.ring;
        keys.sort_by_key(|(&(i, j), _)| (ring.weight(i, j), i + j, j));
        let body = render_terms(&self.field, keys.into_iter().map(|(k, c)| (c, *k)), |(i, j)| monomial_text(i, j));
        let tail = self.ring.error_term(self.precision);
        if body == "0" {
            f.write_str(&tail)
        } else {
            write!(f, "{body} + {tail}")
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        self.check_compatible(rhs);
        let n = self.precision.min(rhs.precision);
        let terms = self.terms.iter().chain(rhs.terms.iter()).map(|(&k, &c)| (k, c));
        TruncatedSeries::from_terms(self.field, self.ring, n, terms)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        let f = self.field;
        TruncatedSeries::from_terms(f, self.ring, self.precision, self.terms.iter().map(|(&k, c)| (k, f.neg(c))))
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.check_compatible(rhs);
        let f = self.field;
        let n = self.precision.min(rhs.precision);
        let mut out = TruncatedSeries::zero(f, self.ring, n);
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, f.mul(a, b));
            }
        }
        out
    }
}

impl SeriesArith for TruncatedSeries {
    fn base(&self) -> PrimeField {
        self.field
    }

    fn prec(&self) -> u32 {
        self.precision
    }

    /// A unit of `k[[x, y]]` has a nonzero constant term; in the mixed
    /// rings the weight-zero layer must be a unit of `k[x]` or `k[y]`.
    fn unit_constant(&self) -> Result<u64> {
        let initial: Vec<_> = self.terms.iter().filter(|(&(i, j), _)| self.ring.weight(i, j) == 0).collect();
        match initial.as_slice() {
            [(&(0, 0), &c)] => Ok(c),
            [] => Err(Error::NonUnit(format!("{self} has no constant term"))),
            _ => Err(Error::NonUnit(format!("initial part of {self} is not a unit of the coefficient ring"))),
        }
    }

    fn scalar(&self, c: u64) -> Self {
        Self::constant(self.field, self.ring, self.precision, c)
    }

    fn product(&self, other: &Self) -> Self {
        self * other
    }

    fn difference(&self, other: &Self) -> Self {
        self - other
    }

    fn scaled(&self, c: u64) -> Self {
        self.scale(c)
    }
}

/// `u^(-1)` to the precision of `u` by Newton iteration.
pub fn series_invert(u: &TruncatedSeries) -> Result<TruncatedSeries> {
    u.inverse()
}

/// A `q`-th root of `u` by Newton iteration from `r0`, or from the least
/// `q`-th root of the constant term in `F_p` when `r0` is `None`.
pub fn series_qth_root(u: &TruncatedSeries, q: u32, r0: Option<u64>) -> Result<TruncatedSeries> {
    u.qth_root(q, r0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ser(text: &str, p: u64, ring: SeriesRing, n: u32) -> TruncatedSeries {
        let f = PrimeField::new(p);
        TruncatedSeries::from_polynomial(&parse_polynomial(text, &f).unwrap(), ring, n)
    }

    #[test]
    fn geometric_series() {
        let u = ser("1 - x", 13, SeriesRing::XAdic, 4);
        assert_eq!(series_invert(&u).unwrap().to_string(), "1 + x + x^2 + x^3 + O(x^4)");
        let u = ser("-1 + x", 13, SeriesRing::XAdic, 3);
        assert_eq!(series_invert(&u).unwrap().to_string(), "12 + 12*x + 12*x^2 + O(x^3)");
    }

    #[test]
    fn non_units_refused() {
        let u = ser("x^2 - 1 + y", 13, SeriesRing::YAdic, 4);
        assert!(matches!(series_invert(&u), Err(Error::NonUnit(_))));
        let u = ser("x + y", 13, SeriesRing::Local, 4);
        assert!(matches!(series_invert(&u), Err(Error::NonUnit(_))));
    }

    #[test]
    fn roots_in_each_ring() {
        let u = ser("-1 + x", 13, SeriesRing::XAdic, 2);
        assert_eq!(series_qth_root(&u, 2, Some(5)).unwrap().to_string(), "5 + 4*x + O(x^2)");
        let u = ser("1 + x", 7, SeriesRing::XAdic, 2);
        assert_eq!(series_qth_root(&u, 3, None).unwrap().to_string(), "1 + 5*x + O(x^2)");
        let one = ser("1", 11, SeriesRing::Local, 5);
        assert_eq!(series_qth_root(&one, 5, None).unwrap(), one);
        let u = ser("4 + x*y + y^3", 13, SeriesRing::YAdic, 6);
        let s = series_qth_root(&u, 2, None).unwrap();
        assert_eq!(&s * &s, u);
    }

    #[test]
    fn precision_is_the_minimum() {
        let a = ser("1 + x", 13, SeriesRing::Local, 5);
        let b = ser("1 + y", 13, SeriesRing::Local, 3);
        assert_eq!((&a * &b).precision(), 3);
        assert_eq!((&a * &b).to_string(), "1 + x + y + x*y + O((x, y)^3)");
    }

    #[test]
    fn exact_division() {
        for ring in [SeriesRing::Local, SeriesRing::YAdic, SeriesRing::XAdic] {
            let g = ser("y^2 - x^3 + x", 13, ring, 8);
            let t = ser("3 + x*y - 2*y^5", 13, ring, 8);
            let q = (&g * &t).exact_div(&g).unwrap();
            let expected = t.truncate(q.precision());
            assert_eq!(q, expected, "{ring}");
        }
        let a = ser("x + 1", 13, SeriesRing::Local, 6);
        let g = ser("x + y", 13, SeriesRing::Local, 6);
        assert!(matches!(a.exact_div(&g), Err(Error::NotDivisible(_))));
    }
}
