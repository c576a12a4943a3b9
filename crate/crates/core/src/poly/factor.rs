use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::UniPoly;
use crate::arith::{big_pow, prime_factors, Field, PrimeField};

/// `unit * prod(factor^multiplicity)`, factors monic irreducible and
/// pairwise distinct, sorted by degree and then coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredPolynomial<F: Field> {
    pub unit: F::Elem,
    pub factors: Vec<(UniPoly<F>, u32)>,
}

impl<F: Field> FactoredPolynomial<F> {
    pub fn expand(&self, field: &F) -> UniPoly<F> {
        let mut acc = UniPoly::constant(field.clone(), self.unit.clone());
        for (p, e) in &self.factors {
            acc = &acc * &p.pow(*e);
        }
        acc
    }
}

/// Complete factorisation over `F_p`: squarefree split, distinct-degree
/// split, then randomised equal-degree splitting driven by `seed`.
pub fn factor(g: &UniPoly<PrimeField>, seed: u64) -> FactoredPolynomial<PrimeField> {
    let unit = g.lc();
    let mut factors = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return FactoredPolynomial { unit, factors };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (part, mult) in squarefree_decomposition(&g.monic()) {
        for (chunk, d) in distinct_degree(&part) {
            for f in equal_degree(&chunk, d, &mut rng) {
                factors.push((f, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| poly_key(a).cmp(&poly_key(b)));
    FactoredPolynomial { unit, factors }
}

fn poly_key(p: &UniPoly<PrimeField>) -> (usize, Vec<u64>) {
    (p.coeffs().len(), p.coeffs().iter().rev().copied().collect())
}

/// Monic squarefree parts `(h_i, i)` with `g = prod h_i^i`; `g` monic.
pub fn squarefree_decomposition(g: &UniPoly<PrimeField>) -> Vec<(UniPoly<PrimeField>, u32)> {
    let field = *g.field();
    let p = field.modulus();
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = g.gcd(&g.derivative());
    let mut w = g.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_one() {
        // c is a p-th power: in F_p the p-th root keeps every p-th coefficient
        let root: Vec<u64> = c.coeffs().iter().step_by(p as usize).copied().collect();
        let root = UniPoly::new(field, root);
        for (h, m) in squarefree_decomposition(&root) {
            out.push((h, m * p as u32));
        }
    }
    out
}

/// Products `(h_d, d)` of all irreducible factors of degree `d` of the
/// squarefree monic `f`.
pub fn distinct_degree(f: &UniPoly<PrimeField>) -> Vec<(UniPoly<PrimeField>, usize)> {
    let field = *f.field();
    let p = BigUint::from(field.modulus());
    let x = UniPoly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.powmod(&p, &rest);
        let g = (&h - &x).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest).expect("nonzero");
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree().filter(|&n| n > 0) {
        out.push((rest, n));
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of
/// degree `d`; the trace map replaces the power map in characteristic 2.
fn equal_degree(f: &UniPoly<PrimeField>, d: usize, rng: &mut ChaCha8Rng) -> Vec<UniPoly<PrimeField>> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.clone()];
    }
    let field = *f.field();
    let p = field.modulus();
    let exp = (big_pow(p, d as u32) - 1u32) / 2u32;
    loop {
        let a = UniPoly::new(field, (0..n).map(|_| rng.random_range(0..p)).collect());
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.mulmod(&t, f);
                acc = &acc + &t;
            }
            acc
        } else {
            &a.powmod(&exp, f) - &UniPoly::one(field)
        };
        let g = b.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.exact_div(&g), d, rng));
            return out;
        }
    }
}

/// Rabin's test: `g` of degree `n` is irreducible iff `x^(p^n) = x` mod `g`
/// and `gcd(x^(p^(n/r)) - x, g) = 1` for every prime `r | n`.
pub fn is_irreducible(g: &UniPoly<PrimeField>) -> bool {
    let n = match g.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let g = g.monic();
    let field = *g.field();
    let p = field.modulus();
    let x = UniPoly::x(field);
    let frob = |k: usize| {
        let mut h = x.clone();
        for _ in 0..k {
            h = h.powmod(&BigUint::from(p), &g);
        }
        h
    };
    for (r, _) in prime_factors(&BigUint::from(n)) {
        let r: usize = r.try_into().expect("small");
        if !(&frob(n / r) - &x).gcd(&g).is_one() {
            return false;
        }
    }
    (&frob(n) - &x).rem(&g).expect("nonzero").is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, c: &[i64]) -> UniPoly<PrimeField> {
        let f = PrimeField::new(p);
        UniPoly::new(f, c.iter().map(|&v| f.elem(v)).collect())
    }

    #[test]
    fn fourth_roots_of_unity_mod_5() {
        let fac = factor(&fp(5, &[-1, 0, 0, 0, 1]), 1);
        let roots: Vec<_> = fac.factors.iter().map(|(f, m)| (f.coeff(0), *m)).collect();
        assert_eq!(roots, vec![(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert!(fac.factors.iter().all(|(f, _)| f.degree() == Some(1)));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&fp(3, &[1, 0, 1])));
        assert!(!is_irreducible(&fp(3, &[-1, 0, 1])));
        assert!(!is_irreducible(&fp(5, &[1, 0, 1])));
        assert!(is_irreducible(&fp(2, &[1, 1, 0, 0, 1])));
        assert!(!is_irreducible(&fp(2, &[1, 0, 1, 0, 1])));
        let fac = factor(&fp(3, &[1, 0, 1]), 0);
        assert_eq!(fac.factors, vec![(fp(3, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn repeated_and_inseparable_factors() {
        assert_eq!(factor(&fp(5, &[0, 0, 1]), 0).factors, vec![(fp(5, &[0, 1]), 2)]);
        // (y^2 + y + 1)^2 * (y + 1)^3 over F_2
        let g = &fp(2, &[1, 1, 1]).pow(2) * &fp(2, &[1, 1]).pow(3);
        let fac = factor(&g, 3);
        assert_eq!(fac.factors, vec![(fp(2, &[1, 1]), 3), (fp(2, &[1, 1, 1]), 2)]);
        // y^5 + 1 = (y + 1)^5 over F_5
        let g = &fp(5, &[1, 0, 0, 0, 0, 1]) * &fp(5, &[2, 1]);
        assert_eq!(fac_expand(&g, 9), g);
    }

    fn fac_expand(g: &UniPoly<PrimeField>, seed: u64) -> UniPoly<PrimeField> {
        factor(g, seed).expand(g.field())
    }

    #[test]
    fn equal_degree_split_in_char_two() {
        // x^4 + x + 1 and x^4 + x^3 + 1 are both irreducible quartics
        let g = &fp(2, &[1, 1, 0, 0, 1]) * &fp(2, &[1, 0, 0, 1, 1]);
        let fac = factor(&g, 11);
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.expand(g.field()), g);
    }
}
