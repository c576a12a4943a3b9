use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::newton::{newton_inverse, newton_qth_root, SeriesArith};
use crate::arith::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::poly::{render_terms, UniPoly};

/// `sum c_k t^k + O(t^N)` over `F_p`; exactly `N` coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl PowerSeries {
    pub fn new(field: PrimeField, mut coeffs: Vec<u64>, precision: u32) -> Self {
        coeffs.resize(precision as usize, 0);
        let p = field.modulus();
        for c in &mut coeffs {
            *c %= p;
        }
        Self { field, coeffs }
    }

    pub fn zero(field: PrimeField, precision: u32) -> Self {
        Self::new(field, Vec::new(), precision)
    }

    pub fn constant(field: PrimeField, c: u64, precision: u32) -> Self {
        Self::new(field, vec![c], precision)
    }

    /// The series variable itself.
    pub fn t(field: PrimeField, precision: u32) -> Self {
        Self::new(field, vec![0, 1], precision)
    }

    pub fn from_poly(u: &UniPoly<PrimeField>, precision: u32) -> Self {
        Self::new(*u.field(), u.coeffs().to_vec(), precision)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn precision(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero at or beyond the precision.
    pub fn coeff(&self, k: u32) -> u64 {
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `t`-adic order; `None` when zero to the stored precision.
    pub fn order(&self) -> Option<u32> {
        self.coeffs.iter().position(|&c| c != 0).map(|k| k as u32)
    }

    pub fn truncate(&self, precision: u32) -> Self {
        Self::new(self.field, self.coeffs[..self.coeffs.len().min(precision as usize)].to_vec(), precision.min(self.precision()))
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        Self { field: f, coeffs: self.coeffs.iter().map(|a| f.mul(a, &c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.field, 1, self.precision());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `t^k`; the precision grows by `k`.
    pub fn shift_up(&self, k: u32) -> Self {
        let mut coeffs = vec![0; k as usize];
        coeffs.extend_from_slice(&self.coeffs);
        Self { field: self.field, coeffs }
    }

    /// Divide by `t^k`, which must divide the series; the precision drops
    /// by `k`.
    pub fn shift_down(&self, k: u32) -> Result<Self> {
        let k = k as usize;
        if k > self.coeffs.len() || self.coeffs[..k].iter().any(|&c| c != 0) {
            return Err(Error::NotDivisible(format!("{self} by t^{k}")));
        }
        Ok(Self { field: self.field, coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn inverse(&self) -> Result<Self> {
        newton_inverse(self)
    }

    /// A `q`-th root by Newton iteration from `r0`, or from the least root
    /// of the constant term in `F_p` when `r0` is `None`.
    pub fn qth_root(&self, q: u32, r0: Option<u64>) -> Result<Self> {
        newton_qth_root(self, q, r0)
    }

    pub fn display_var(&self, var: &str) -> String {
        let body = render_terms(&self.field, self.coeffs.iter().zip(0u32..), |k| match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        });
        let tail = format!("O({var}^{})", self.precision());
        if body == "0" {
            tail
        } else {
            format!("{body} + {tail}")
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&u64, &u64) -> u64) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| op(&self.coeffs[k], &other.coeffs[k])).collect();
        Self { field: self.field, coeffs }
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("t"))
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: Self) -> PowerSeries {
        let f = self.field;
        self.zip_with(rhs, |a, b| f.add(a, b))
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: Self) -> PowerSeries {
        let f = self.field;
        self.zip_with(rhs, |a, b| f.sub(a, b))
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        let f = self.field;
        PowerSeries { field: f, coeffs: self.coeffs.iter().map(|a| f.neg(a)).collect() }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: Self) -> PowerSeries {
        let f = self.field;
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![0u64; n];
        for (i, a) in self.coeffs.iter().enumerate().take(n).filter(|(_, a)| **a != 0) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        PowerSeries { field: f, coeffs }
    }
}

impl SeriesArith for PowerSeries {
    fn base(&self) -> PrimeField {
        self.field
    }

    fn prec(&self) -> u32 {
        self.precision()
    }

    fn unit_constant(&self) -> Result<u64> {
        match self.coeff(0) {
            0 => Err(Error::NonUnit(self.to_string())),
            c => Ok(c),
        }
    }

    fn scalar(&self, c: u64) -> Self {
        Self::constant(self.field, c, self.precision())
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

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(p: u64, c: &[i64], n: u32) -> PowerSeries {
        let f = PrimeField::new(p);
        PowerSeries::new(f, c.iter().map(|&v| f.elem(v)).collect(), n)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = ps(13, &[1, -1], 4);
        assert_eq!(a.inverse().unwrap(), ps(13, &[1, 1, 1, 1], 4));
        assert_eq!(a.to_string(), "1 + 12*t + O(t^4)");
        assert_eq!(PowerSeries::zero(PrimeField::new(5), 3).to_string(), "O(t^3)");
        assert_eq!(ps(7, &[0, 0, 3, 1], 4).shift_down(2).unwrap(), ps(7, &[3, 1], 2));
        assert!(ps(7, &[0, 1], 4).shift_down(2).is_err());
        assert_eq!(ps(7, &[0, 0, 3], 4).order(), Some(2));
    }

    #[test]
    fn roots() {
        assert_eq!(ps(13, &[-1, 1], 2).qth_root(2, Some(5)).unwrap(), ps(13, &[5, 4], 2));
        assert_eq!(ps(7, &[1, 1], 2).qth_root(3, None).unwrap(), ps(7, &[1, 5], 2));
        assert_eq!(ps(5, &[2, 1], 4).qth_root(2, None), Err(Error::NoInitialRoot { q: 2 }));
    }
}
