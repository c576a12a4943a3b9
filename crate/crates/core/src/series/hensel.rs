use super::{PowerSeries, SeriesRing, TruncatedSeries};
use crate::arith::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::poly::{factor, Polynomial, UniPoly, Var};

/// A polynomial in the lifted variable whose coefficients are power series
/// in the series variable: the `k[[y]][x]` view of `k[x][[y]]`.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct SeriesPoly {
    field: PrimeField,
    precision: u32,
    coeffs: Vec<PowerSeries>,
}

impl SeriesPoly {
    fn new(field: PrimeField, precision: u32, mut coeffs: Vec<PowerSeries>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { field, precision, coeffs }
    }

    fn from_uni(u: &UniPoly<PrimeField>, precision: u32) -> Self {
        let f = *u.field();
        Self::new(f, precision, u.coeffs().iter().map(|&c| PowerSeries::constant(f, c, precision)).collect())
    }

    /// Read a `y`-adic series as a polynomial in `x`.
    fn from_y_adic(s: &TruncatedSeries) -> Self {
        let (f, n) = (s.field(), s.precision());
        let mut coeffs: Vec<Vec<u64>> = Vec::new();
        for (&(i, j), &c) in s.terms() {
            if coeffs.len() <= i as usize {
                coeffs.resize(i as usize + 1, Vec::new());
            }
            let layer = &mut coeffs[i as usize];
            if layer.len() <= j as usize {
                layer.resize(j as usize + 1, 0);
            }
            layer[j as usize] = c;
        }
        Self::new(f, n, coeffs.into_iter().map(|c| PowerSeries::new(f, c, n)).collect())
    }

    fn to_y_adic(&self) -> TruncatedSeries {
        let terms = self.coeffs.iter().enumerate().flat_map(|(i, c)| {
            c.coeffs().iter().enumerate().map(move |(j, &a)| ((i as u32, j as u32), a))
        });
        TruncatedSeries::from_terms(self.field, SeriesRing::YAdic, self.precision, terms)
    }

    fn zero_series(&self) -> PowerSeries {
        PowerSeries::zero(self.field, self.precision)
    }

    fn coeff(&self, k: usize) -> PowerSeries {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.zero_series())
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.field, self.precision, (0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.field, self.precision, (0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::new(self.field, self.precision, Vec::new());
        }
        let mut out = vec![self.zero_series(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.field, self.precision, out)
    }

    /// Division with remainder by a polynomial whose leading coefficient is 1.
    fn divrem_monic(&self, d: &Self) -> (Self, Self) {
        let m = d.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() <= m {
            return (Self::new(self.field, self.precision, Vec::new()), self.clone());
        }
        let mut quot = vec![self.zero_series(); rem.len() - m];
        for k in (0..quot.len()).rev() {
            let c = rem[k + m].clone();
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * di);
            }
            quot[k] = c;
        }
        rem.truncate(m);
        (Self::new(self.field, self.precision, quot), Self::new(self.field, self.precision, rem))
    }
}

/// `unit * prod factors`, each factor monic in the lifted variable.
#[derive(Clone, Debug, PartialEq)]
pub struct HenselFactorization {
    pub unit: u64,
    pub factors: Vec<TruncatedSeries>,
}

impl HenselFactorization {
    pub fn product(&self) -> TruncatedSeries {
        let first = &self.factors[0];
        let start = TruncatedSeries::constant(first.field(), first.ring(), first.precision(), self.unit);
        self.factors.iter().fold(start, |acc, f| &acc * f)
    }
}

/// One quadratic Hensel step: from `G = AB`, `SA + TB = 1` modulo `y^k`
/// to the same modulo `y^2k`, with `B` monic.
fn hensel_step(g: &SeriesPoly, a: &mut SeriesPoly, b: &mut SeriesPoly, s: &mut SeriesPoly, t: &mut SeriesPoly) {
    let one = SeriesPoly::new(g.field, g.precision, vec![PowerSeries::constant(g.field, 1, g.precision)]);
    let e = g.sub(&a.mul(b));
    let (q, r) = s.mul(&e).divrem_monic(b);
    let a_new = a.add(&t.mul(&e)).add(&q.mul(a));
    let b_new = b.add(&r);
    let err = s.mul(&a_new).add(&t.mul(&b_new)).sub(&one);
    let (c, d) = s.mul(&err).divrem_monic(&b_new);
    *s = s.sub(&d);
    *t = t.sub(&t.mul(&err)).sub(&c.mul(&a_new));
    *a = a_new;
    *b = b_new;
}

fn lift(g: &SeriesPoly, base: &[UniPoly<PrimeField>]) -> Result<Vec<SeriesPoly>> {
    if base.len() == 1 {
        return Ok(vec![g.clone()]);
    }
    let field = g.field;
    let (left, right) = base.split_at(base.len() / 2);
    let prod = |fs: &[UniPoly<PrimeField>]| fs.iter().fold(UniPoly::one(field), |acc, f| &acc * f);
    let (a0, b0) = (prod(left), prod(right));
    let (h, s0, t0) = a0.xgcd(&b0);
    if !h.is_one() {
        return Err(Error::NonCoprimeFactors);
    }
    let n = g.precision;
    let (mut a, mut b) = (SeriesPoly::from_uni(&a0, n), SeriesPoly::from_uni(&b0, n));
    let (mut s, mut t) = (SeriesPoly::from_uni(&s0, n), SeriesPoly::from_uni(&t0, n));
    let mut k = 1;
    while k < n {
        hensel_step(g, &mut a, &mut b, &mut s, &mut t);
        k *= 2;
    }
    let mut out = lift(&a, left)?;
    out.extend(lift(&b, right)?);
    Ok(out)
}

/// Lift `g = c * prod base` modulo the ideal to a factorization in the
/// mixed ring, to precision `n`. The base factors must be pairwise coprime
/// polynomials in the lifted variable and `g` must have constant leading
/// coefficient in that variable.
pub fn hensel_factor_lift(
    g: &Polynomial<PrimeField>,
    base: &[UniPoly<PrimeField>],
    ring: SeriesRing,
    n: u32,
) -> Result<HenselFactorization> {
    match ring {
        SeriesRing::Local => Err(Error::Unsupported("Hensel lifting needs a y-adic or x-adic ring".into())),
        SeriesRing::XAdic => {
            let lifted = hensel_factor_lift(&g.swap_vars(), base, SeriesRing::YAdic, n)?;
            Ok(HenselFactorization { unit: lifted.unit, factors: lifted.factors.iter().map(|f| f.swap_vars()).collect() })
        }
        SeriesRing::YAdic => lift_y_adic(g, base, n),
    }
}

fn lift_y_adic(g: &Polynomial<PrimeField>, base: &[UniPoly<PrimeField>], n: u32) -> Result<HenselFactorization> {
    let field = *g.field();
    if base.is_empty() || base.iter().any(|b| b.degree().unwrap_or(0) == 0) {
        return Err(Error::Precondition("base factors must be nonconstant".into()));
    }
    let d = g.degree_in(Var::X).unwrap_or(0);
    let top: Vec<_> = g.terms().filter(|(&(i, _), _)| i == d).collect();
    let unit = match top.as_slice() {
        [(&(_, 0), &c)] if d > 0 => c,
        _ => return Err(Error::NonInvertibleLeading),
    };
    let base: Vec<_> = base.iter().map(|b| b.monic()).collect();
    for (i, a) in base.iter().enumerate() {
        if base[i + 1..].iter().any(|b| !a.gcd(b).is_one()) {
            return Err(Error::NonCoprimeFactors);
        }
    }
    let residue = g.specialize(Var::Y, &0);
    let expected = base.iter().fold(UniPoly::constant(field, unit), |acc, b| &acc * b);
    if residue != expected {
        return Err(Error::Mismatch(format!("base factors multiply to {} but g is {} modulo y", expected.display_var("x"), residue.display_var("x"))));
    }
    let inv = field.inv(&unit).expect("nonzero");
    let monic = SeriesPoly::from_y_adic(&TruncatedSeries::from_polynomial(&g.scale(&inv), SeriesRing::YAdic, n));
    let factors = lift(&monic, &base)?.iter().map(SeriesPoly::to_y_adic).collect();
    Ok(HenselFactorization { unit, factors })
}

/// Factor `g` modulo the ideal over `F_p`, group each prime with its
/// multiplicity, and lift.
pub fn hensel_lift_auto(g: &Polynomial<PrimeField>, ring: SeriesRing, n: u32) -> Result<HenselFactorization> {
    let v = ring.series_var().ok_or_else(|| Error::Unsupported("Hensel lifting needs a y-adic or x-adic ring".into()))?;
    let residue = g.specialize(v, &0);
    if residue.is_zero() {
        return Err(Error::Precondition(format!("g vanishes modulo {}", v.name())));
    }
    let base: Vec<_> = factor(&residue, 0).factors.into_iter().map(|(p, m)| p.pow(m)).collect();
    hensel_factor_lift(g, &base, ring, n)
}
