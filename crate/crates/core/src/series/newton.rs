//! Newton iteration shared by the univariate and bivariate series types.
//! Every step doubles the number of correct terms, so `ceil(log2 N)`
//! steps at full precision reach precision `N`.

use crate::arith::{qth_root_in_prime_field, Field, PrimeField};
use crate::error::{Error, Result};

pub(crate) trait SeriesArith: Clone {
    fn base(&self) -> PrimeField;
    fn prec(&self) -> u32;
    /// The constant term, provided the initial part is a nonzero scalar.
    fn unit_constant(&self) -> Result<u64>;
    fn scalar(&self, c: u64) -> Self;
    fn product(&self, other: &Self) -> Self;
    fn difference(&self, other: &Self) -> Self;
    fn scaled(&self, c: u64) -> Self;
}

fn steps(precision: u32) -> u32 {
    let mut k = 1;
    let mut n = 0;
    while k < precision {
        k *= 2;
        n += 1;
    }
    n
}

/// `r <- r (2 - u r)` from the inverse of the constant term.
pub(crate) fn newton_inverse<S: SeriesArith>(u: &S) -> Result<S> {
    let f = u.base();
    let c = u.unit_constant()?;
    let mut r = u.scalar(f.inv(&c).expect("nonzero"));
    let two = u.scalar(2 % f.modulus());
    for _ in 0..steps(u.prec()) {
        r = r.product(&two.difference(&u.product(&r)));
    }
    Ok(r)
}

/// `s <- s - (s^q - u) / (q s^(q-1))` from a root of the constant term.
pub(crate) fn newton_qth_root<S: SeriesArith>(u: &S, q: u32, r0: Option<u64>) -> Result<S> {
    let f = u.base();
    let qf = f.elem(q as i64);
    if qf == 0 {
        return Err(Error::Precondition(format!("q = {q} is not invertible in F_{}", f.modulus())));
    }
    let c = u.unit_constant()?;
    let r0 = match r0 {
        Some(r) if f.pow(&(r % f.modulus()), q as u64) == c => r % f.modulus(),
        Some(r) => return Err(Error::Precondition(format!("{r}^{q} is not the constant term {c}"))),
        None => qth_root_in_prime_field(&f, c, q as u64).ok_or(Error::NoInitialRoot { q })?,
    };
    let mut s = u.scalar(r0);
    for _ in 0..steps(u.prec()) {
        let mut s_pow = u.scalar(1);
        for _ in 0..q - 1 {
            s_pow = s_pow.product(&s);
        }
        let residual = s_pow.product(&s).difference(u);
        let correction = residual.product(&newton_inverse(&s_pow.scaled(qf))?);
        s = s.difference(&correction);
    }
    Ok(s)
}
