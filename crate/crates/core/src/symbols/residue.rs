use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, is_square_in_rational_function_field, Field, PrimeField, RationalFunction, Rationals};
use crate::error::{Error, Result};
use crate::places::{factor_over_rationals, ConstantField, ResidueClass};
use crate::poly::{factor, sign_at_root, squarefree_decomposition, sturm_isolate, Polynomial, UniPoly, Var};

/// The constant field a command works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    /// `Q`, with places of `Q(y)` of degree at most two.
    Rationals,
    /// `R`, through rational-coefficient data and exact sign tests.
    Real,
    Prime(u64),
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => f.write_str("q"),
            Self::Real => f.write_str("r"),
            Self::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for BaseField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(Self::Rationals),
            "r" => Ok(Self::Real),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Usage(format!("unknown field `{s}`; expected q, r or fp:<p>")))?;
                if !is_prime(p) {
                    return Err(Error::Usage(format!("{p} is not prime")));
                }
                Ok(Self::Prime(p))
            }
        }
    }
}

fn check_coprime<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> Result<()> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !f.gcd(g).is_one() {
        return Err(Error::NonCoprime);
    }
    Ok(())
}

fn sign(b: bool) -> i8 {
    if b {
        1
    } else {
        -1
    }
}

/// `(f/g)_q` over `F_p`: `+1` iff `f` is a `q`-th power modulo every prime
/// factor of `g`. Repeated factors need no extra test since a simple root
/// mod `pi` lifts when `q` is invertible.
pub fn qth_power_residue_fp(f: &UniPoly<PrimeField>, g: &UniPoly<PrimeField>, q: u32) -> Result<i8> {
    check_coprime(f, g)?;
    let field = *g.field();
    for (pi, _) in factor(g, 0).factors {
        let r = ResidueClass { value: f.rem(&pi)?, modulus: pi };
        if !field.residue_is_qth_power(&r, q)? {
            return Ok(-1);
        }
    }
    Ok(1)
}

/// `(f/g)_q` over `R`: for `q = 2`, `+1` iff `f > 0` at every real root of
/// `g`; every real number is an odd power.
pub fn qth_power_residue_real(f: &UniPoly<Rationals>, g: &UniPoly<Rationals>, q: u32) -> Result<i8> {
    check_coprime(f, g)?;
    if q % 2 == 1 {
        return Ok(1);
    }
    Ok(sign(sturm_isolate(g).iter().all(|root| sign_at_root(f, root) > 0)))
}

/// `(f/g)_q` over `Q`; prime factors of `g` must have degree at most two.
pub fn qth_power_residue_rational(f: &UniPoly<Rationals>, g: &UniPoly<Rationals>, q: u32) -> Result<i8> {
    check_coprime(f, g)?;
    for (pi, _) in factor_over_rationals(g)? {
        let r = ResidueClass { value: f.rem(&pi)?, modulus: pi };
        if !Rationals.residue_is_qth_power(&r, q)? {
            return Ok(-1);
        }
    }
    Ok(1)
}

/// `(f/g)_q` for polynomials in `y` given over `Q` and read in `field`.
pub fn qth_power_residue(f: &Polynomial<Rationals>, g: &Polynomial<Rationals>, q: u32, field: BaseField) -> Result<i8> {
    let (fu, gu) = (f.to_univariate(Var::Y)?, g.to_univariate(Var::Y)?);
    match field {
        BaseField::Rationals => qth_power_residue_rational(&fu, &gu, q),
        BaseField::Real => qth_power_residue_real(&fu, &gu, q),
        BaseField::Prime(p) => {
            let k = PrimeField::try_new(p)?;
            qth_power_residue_fp(&reduce_mod_p(&fu, k)?, &reduce_mod_p(&gu, k)?, q)
        }
    }
}

/// Image of a rational polynomial in `F_p[y]`.
pub fn reduce_mod_p(a: &UniPoly<Rationals>, field: PrimeField) -> Result<UniPoly<PrimeField>> {
    let coeffs = a
        .coeffs()
        .iter()
        .map(|c| field.from_rational(c).ok_or_else(|| Error::CoefficientNotInField(c.to_string())))
        .collect::<Result<_>>()?;
    Ok(UniPoly::new(field, coeffs))
}

/// Whether `u` is a square in `F_p(x)[y]/(y^2 - g)`. Writing a root as
/// `a + b y` forces `ab = 0`, so `u` must be a square or `g` times a
/// square in `F_p(x)`.
pub fn square_in_quadratic_function_field(u: &RationalFunction<PrimeField>, g: &UniPoly<PrimeField>) -> Result<bool> {
    let field = *g.field();
    if field.modulus() == 2 {
        return Err(Error::Unsupported("characteristic 2".into()));
    }
    if u.is_zero() {
        return Err(Error::ZeroElement);
    }
    if g.is_zero() || squarefree_decomposition(&g.monic()).iter().any(|(_, m)| *m > 1) {
        return Err(Error::NotSquarefree(g.display_var("x")));
    }
    let ug = u.mul(&RationalFunction::from_poly(g.clone()));
    Ok(is_square_in_rational_function_field(u) || is_square_in_rational_function_field(&ug))
}
