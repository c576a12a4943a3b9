use num_bigint::BigUint;

use super::{
    qth_power_residue_fp, sign_text, Constraint, DerivedIdentity, PlaceEntry, RamificationDatum, ReciprocityReport,
    SymbolAlgebra, SymbolBase,
};
use crate::arith::{is_qth_power_finite_field, Field, FiniteField, PrimeField, RootOfUnityContext};
use crate::error::{Error, Result};
use crate::places::{support, ConstantField, FunctionFieldPlace, ResidueClass};
use crate::poly::UniPoly;

pub type FunctionFieldDatum<F> = RamificationDatum<FunctionFieldPlace<F>, ResidueClass<F>>;

/// Valuation of `a` and the residue of `a / pi^nu` for the local
/// parameter `pi` (`1/y` at infinity), with the residue field modulus.
fn local_unit<F: Field>(a: &UniPoly<F>, place: &FunctionFieldPlace<F>) -> Result<(i64, ResidueClass<F>)> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(match place {
        FunctionFieldPlace::Finite(p) => {
            let (k, rest) = a.split_off(p);
            (k as i64, ResidueClass { modulus: p.clone(), value: rest.rem(p)? })
        }
        FunctionFieldPlace::Infinite => {
            let f = a.field().clone();
            (-(a.degree().unwrap() as i64), ResidueClass { modulus: UniPoly::x(f.clone()), value: UniPoly::constant(f, a.lc()) })
        }
    })
}

fn residue_pow<F: Field>(r: &ResidueClass<F>, e: i64) -> ResidueClass<F> {
    let base = if e < 0 { r.value.invmod(&r.modulus).expect("unit residue") } else { r.value.clone() };
    ResidueClass { modulus: r.modulus.clone(), value: base.powmod(&BigUint::from(e.unsigned_abs()), &r.modulus) }
}

/// `(-1)^(ab) alpha^b / beta^a` reduced at the place, `a = nu(alpha)`,
/// `b = nu(beta)`.
pub fn tame_symbol<F: Field>(
    alpha: &UniPoly<F>,
    beta: &UniPoly<F>,
    place: &FunctionFieldPlace<F>,
) -> Result<ResidueClass<F>> {
    let (a, u) = local_unit(alpha, place)?;
    let (b, v) = local_unit(beta, place)?;
    let mut gamma = residue_pow(&u, b).mul(&residue_pow(&v, -a));
    if (a * b) % 2 != 0 {
        gamma.value = -&gamma.value;
    }
    Ok(gamma)
}

pub fn ramifies<F: ConstantField + SymbolBase>(
    alg: &SymbolAlgebra<F>,
    place: &FunctionFieldPlace<F>,
) -> Result<FunctionFieldDatum<F>> {
    let gamma = tame_symbol(&alg.alpha, &alg.beta, place)?;
    let trivial = alg.alpha.field().residue_is_qth_power(&gamma, alg.q)?;
    Ok(RamificationDatum { place: place.clone(), residue_class: gamma, trivial })
}

/// Data at every place dividing `alpha` or `beta` and at infinity.
pub fn scan_places<F: ConstantField + SymbolBase>(alg: &SymbolAlgebra<F>) -> Result<Vec<FunctionFieldDatum<F>>> {
    support(&[&alg.alpha, &alg.beta])?.iter().map(|p| ramifies(alg, p)).collect()
}

/// The places where the algebra ramifies.
pub fn ramification_divisor<F: ConstantField + SymbolBase>(
    alg: &SymbolAlgebra<F>,
) -> Result<Vec<FunctionFieldDatum<F>>> {
    Ok(scan_places(alg)?.into_iter().filter(|d| !d.trivial).collect())
}

fn norm_to_prime_field(r: &ResidueClass<PrimeField>) -> u64 {
    if r.modulus.degree() == Some(1) {
        r.value.coeff(0)
    } else {
        FiniteField::new_unchecked(r.modulus.clone()).norm(&r.value)
    }
}

/// Weil reciprocity over `F_p(y)`: the norms to `F_p` of the tame symbols
/// at all places multiply to 1.
pub fn weil_reciprocity_check(alpha: &UniPoly<PrimeField>, beta: &UniPoly<PrimeField>) -> Result<ReciprocityReport> {
    let field = *alpha.field();
    let mut product = 1u64;
    let mut places = Vec::new();
    for place in support(&[alpha, beta])? {
        let gamma = tame_symbol(alpha, beta, &place)?;
        let n = norm_to_prime_field(&gamma);
        product = field.mul(&product, &n);
        places.push(PlaceEntry { place: place.to_string(), symbol_value: format!("{gamma} (norm {n})"), trivial: n == 1 });
    }
    Ok(ReciprocityReport {
        algebra: format!("({alpha}, {beta}) over F_{}(y)", field.modulus()),
        places,
        constraint: Constraint { statement: "product of norms of tame symbols = 1".into(), value: product.to_string() },
        satisfied: product == 1,
        derived_identities: Vec::new(),
    })
}

/// Force a `q`-th power law out of `(alpha, beta)_q` with
/// `alpha = (y-1)^(q-1)(y-omega)` and `beta = y + alpha f`: `alpha` is not
/// a `q`-th power mod `beta`, and the ramification the place `y - omega`
/// carries must be balanced at a place dividing `beta`.
pub fn example0_driver(q: u32, p: u64, omega: u64, f: &UniPoly<PrimeField>) -> Result<ReciprocityReport> {
    RootOfUnityContext::new(p, q as u64)?;
    let field = PrimeField::try_new(p)?;
    let omega = omega % p;
    if is_qth_power_finite_field(&field, &omega, q as u64) {
        return Err(Error::Precondition(format!("omega = {omega} is a {q}-th power in F_{p}")));
    }
    let y = UniPoly::x(field);
    let one = UniPoly::one(field);
    let alpha = &(&y - &one).pow(q - 1) * &UniPoly::linear_root(field, &omega);
    let beta = &y + &(&alpha * f);
    let residue = qth_power_residue_fp(&alpha, &beta, q)?;
    let alg = SymbolAlgebra::new(alpha.clone(), beta.clone(), q)?;
    let data = scan_places(&alg)?;
    let y_minus_one = FunctionFieldPlace::Finite(UniPoly::linear_root(field, &1));
    let divides_beta = |d: &FunctionFieldDatum<PrimeField>| match &d.place {
        FunctionFieldPlace::Finite(pi) => pi.divides(&beta),
        FunctionFieldPlace::Infinite => false,
    };
    let over_beta = data.iter().any(|d| !d.trivial && divides_beta(d));
    let clean = data
        .iter()
        .filter(|d| !d.trivial)
        .all(|d| d.place != FunctionFieldPlace::Infinite && d.place != y_minus_one);
    Ok(ReciprocityReport {
        algebra: alg.to_string(),
        places: data.iter().map(|d| d.entry()).collect(),
        constraint: Constraint { statement: format!("(alpha/beta)_{q} = -1"), value: sign_text(residue) },
        satisfied: residue == -1,
        derived_identities: vec![
            DerivedIdentity { statement: "ramified at a place dividing beta".into(), holds: over_beta },
            DerivedIdentity { statement: "unramified at infinity and at y - 1".into(), holds: clean },
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> UniPoly<PrimeField> {
        let f = PrimeField::new(p);
        UniPoly::new(f, c.iter().map(|&v| f.elem(v)).collect())
    }

    #[test]
    fn tame_symbol_at_infinity() {
        let g = tame_symbol(&fp(5, &[0, 1]), &fp(5, &[-1, 1]), &FunctionFieldPlace::Infinite).unwrap();
        assert_eq!(g.value, fp(5, &[4]));
    }

    #[test]
    fn tame_symbol_of_units_is_one() {
        let place = FunctionFieldPlace::Finite(fp(7, &[0, 1]));
        let g = tame_symbol(&fp(7, &[3, 1]), &fp(7, &[5, 0, 1]), &place).unwrap();
        assert_eq!(g.value, fp(7, &[1]));
    }

    #[test]
    fn weil_examples() {
        let r = weil_reciprocity_check(&fp(5, &[0, 1]), &fp(5, &[-1, 1])).unwrap();
        assert!(r.satisfied);
        let values: Vec<_> = r.places.iter().map(|e| e.symbol_value.clone()).collect();
        assert_eq!(values, vec!["4 (norm 4)", "1 (norm 1)", "4 (norm 4)"]);
        let r = weil_reciprocity_check(&fp(5, &[0, 1]), &fp(5, &[0, 1])).unwrap();
        assert!(r.satisfied);
        assert!(weil_reciprocity_check(&fp(5, &[2]), &fp(5, &[3])).unwrap().satisfied);
    }

    #[test]
    fn example0_cases() {
        let r = example0_driver(3, 7, 2, &fp(7, &[])).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.constraint.value, "-1");
        assert!(matches!(example0_driver(3, 7, 1, &fp(7, &[])), Err(Error::Precondition(_))));
        assert!(example0_driver(2, 5, 2, &fp(5, &[1])).unwrap().all_hold());
    }
}
