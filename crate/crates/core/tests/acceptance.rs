//! The eight acceptance criteria, each checked against an oracle that does
//! not share code with the routine under test. Prints one line per
//! criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reciprocity::arith::{
    is_prime, is_qth_power_finite_field, Field, FiniteField, PrimeField, Rational, Rationals,
};
use reciprocity::places::real::{valuation_real, RealModelPlace};
use reciprocity::places::rational::RationalPlace;
use reciprocity::places::FunctionFieldPlace;
use reciprocity::poly::sample::{random_fp, random_q, random_rational, random_real_prime};
use reciprocity::poly::{factor, is_irreducible, parse_polynomial, UniPoly};
use reciprocity::series::{
    hensel_lift_auto, normalization_certificate, qth_power_in_germ, residue_certificate, split_node, verify_certificate,
    CertificateBody, Orientation, PowerVerdict, SeriesRing, TruncatedSeries,
};
use reciprocity::symbols::{
    example0_driver, hilbert_at_two_by_search, hilbert_symbol_q, qth_power_residue_real, ramification_divisor,
    ramification_divisor_real, reciprocity_check_q, reciprocity_check_real, scan_real_places, weil_reciprocity_check,
    SymbolAlgebra,
};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Euler's criterion.
fn euler(a: u64, p: u64) -> i8 {
    if modpow(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn qp(c: &[i64]) -> UniPoly<Rationals> {
    UniPoly::new(Rationals, c.iter().map(|&v| int(v)).collect())
}

fn quadratic_reciprocity() -> Verdict {
    let primes: Vec<u64> = (3..=199).filter(|&n| is_prime(n)).collect();
    let mut pairs = 0;
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            let report = reciprocity_check_q(&int(p as i64), &int(q as i64)).map_err(|e| format!("({p}, {q}): {e}"))?;
            ensure(report.satisfied, || format!("({p}, {q}): Hilbert product {}", report.constraint.value))?;
            ensure(report.derived_identities.iter().all(|d| d.holds), || format!("({p}, {q}): derived identity fails"))?;
            // (p, q)_q = (p/q) and (p, q)_p = (q/p) for distinct odd primes.
            let at = |r: u64| hilbert_symbol_q(&int(p as i64), &int(q as i64), &RationalPlace::prime(r)).unwrap();
            let (pq, qp) = (euler(p, q), euler(q, p));
            ensure(at(q) == pq && at(p) == qp, || format!("({p}, {q}): symbols disagree with Euler's criterion"))?;
            let sign = if ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 { 1 } else { -1 };
            ensure(pq * qp == sign, || format!("({p}, {q}): Euler values violate the law"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} prime pairs, Hilbert product +1 and (p/q)(q/p) matches Euler's criterion"))
}

fn real_law() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut n = 0;
    while n < 500 {
        let (a, b) = (random_real_prime(&mut rng, 20), random_real_prime(&mut rng, 20));
        if a == b {
            continue;
        }
        let ab = qth_power_residue_real(&a, &b, 2).map_err(|e| e.to_string())?;
        let ba = qth_power_residue_real(&b, &a, 2).map_err(|e| e.to_string())?;
        let expected = if (a.degree().unwrap() * b.degree().unwrap()) % 2 == 0 { 1 } else { -1 };
        ensure(ab * ba == expected, || format!("alpha = {a}, beta = {b}: ({ab})({ba}) != {expected}"))?;
        let report = reciprocity_check_real(&a, &b).map_err(|e| e.to_string())?;
        ensure(report.all_hold(), || format!("alpha = {a}, beta = {b}: report fails"))?;
        n += 1;
    }
    Ok(format!("{n} pairs of distinct monic real primes satisfy (alpha/beta)(beta/alpha) = (-1)^(deg alpha deg beta)"))
}

fn example8_family() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let alpha = qp(&[-1, 0, 1]);
    let (plus, minus) = (qp(&[1, 1]), qp(&[-1, 1]));
    for _ in 0..100 {
        let d = rng.random_range(0..=4);
        let f = random_q(&mut rng, d, 20);
        let beta = &qp(&[0, 1]) + &(&alpha * &f);
        let r = qth_power_residue_real(&alpha, &beta, 2).map_err(|e| e.to_string())?;
        ensure(r == -1, || format!("f = {f}: residue {r}"))?;
        let alg = SymbolAlgebra::new(alpha.clone(), beta.clone(), 2).map_err(|e| e.to_string())?;
        let divisor = ramification_divisor_real(&alg).map_err(|e| e.to_string())?;
        let at = |pi: &UniPoly<Rationals>, p: &RealModelPlace| {
            matches!(p, RealModelPlace::Root(_)) && valuation_real(pi, p).is_ok_and(|v| v > 0)
        };
        ensure(divisor.iter().all(|d| d.place != RealModelPlace::Infinite), || format!("f = {f}: ramified at infinity"))?;
        ensure(!divisor.iter().any(|d| at(&minus, &d.place)), || format!("f = {f}: ramified at y - 1"))?;
        ensure(divisor.iter().any(|d| at(&plus, &d.place)), || format!("f = {f}: unramified at y + 1"))?;
        ensure(divisor.iter().any(|d| at(&beta, &d.place)), || format!("f = {f}: nothing over beta"))?;
    }
    Ok("100 polynomials f: (y^2 - 1 / y + (y^2 - 1) f) = -1, ramified at y + 1 and over beta, not at y - 1 or infinity".into())
}

/// Least nonzero element that is not a `q`-th power, by enumeration.
fn non_power(p: u64, q: u64) -> u64 {
    let powers: Vec<u64> = (1..p).map(|b| modpow(b, q, p)).collect();
    (2..p).find(|w| !powers.contains(w)).expect("q divides p - 1")
}

fn example0_family() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (q, p) in [(3u32, 7u64), (3, 13), (5, 11)] {
        let omega = non_power(p, q as u64);
        let field = PrimeField::new(p);
        for _ in 0..50 {
            let d = rng.random_range(0..=4);
            let f = random_fp(&mut rng, field, d);
            let report = example0_driver(q, p, omega, &f).map_err(|e| format!("q = {q}, p = {p}: {e}"))?;
            ensure(report.constraint.value == "-1", || format!("q = {q}, p = {p}, f = {f}: residue {}", report.constraint.value))?;
            ensure(report.derived_identities[0].holds, || format!("q = {q}, p = {p}, f = {f}: no ramified place over beta"))?;
        }
    }
    Ok("(q, p) in {(3, 7), (3, 13), (5, 11)}, 50 polynomials each: residue -1 and ramification over beta".into())
}

fn nonzero_fp<R: Rng>(rng: &mut R, k: PrimeField) -> UniPoly<PrimeField> {
    loop {
        let d = rng.random_range(0..=5);
        let a = random_fp(rng, k, d);
        if !a.is_zero() {
            return a;
        }
    }
}

fn weil() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in [5, 13] {
        let k = PrimeField::new(p);
        for _ in 0..200 {
            let (a, b) = (nonzero_fp(&mut rng, k), nonzero_fp(&mut rng, k));
            let report = weil_reciprocity_check(&a, &b).map_err(|e| e.to_string())?;
            ensure(report.satisfied, || format!("F_{p}: ({a}, {b}) norm product {}", report.constraint.value))?;
        }
    }
    Ok("200 pairs each over F_5(y) and F_13(y): norm product 1".into())
}

/// A nonzero rational constant times one or two real primes.
fn factorable_real<R: Rng>(rng: &mut R) -> UniPoly<Rationals> {
    let mut c = random_rational(rng, 20);
    while c == int(0) {
        c = random_rational(rng, 20);
    }
    let mut out = UniPoly::constant(Rationals, c);
    for _ in 0..rng.random_range(1..=2) {
        out = &out * &random_real_prime(rng, 20);
    }
    out
}

fn parity() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let (a, b) = (factorable_real(&mut rng), factorable_real(&mut rng));
        let alg = SymbolAlgebra::new(a.clone(), b.clone(), 2).map_err(|e| e.to_string())?;
        let data = scan_real_places(&alg).map_err(|e| e.to_string())?;
        let ramified = data.iter().filter(|d| !d.trivial).count();
        ensure(ramified % 2 == 0, || format!("({a}, {b})_2: {ramified} ramified real places"))?;
    }
    let alg = SymbolAlgebra::new(qp(&[3]), qp(&[1, 0, 1]), 2).map_err(|e| e.to_string())?;
    let divisor = ramification_divisor(&alg).map_err(|e| e.to_string())?;
    ensure(divisor.len() == 1 && divisor[0].place == FunctionFieldPlace::Finite(qp(&[1, 0, 1])), || {
        format!("(3, y^2 + 1)_2 over Q(y) ramifies at {} places", divisor.len())
    })?;
    Ok("200 algebras over R(y) with even real ramification; (3, y^2 + 1)_2 over Q(y) ramifies at one place".into())
}

fn series_certificates() -> Verdict {
    let k = PrimeField::new(13);
    let n = 16;
    let poly = |s: &str| parse_polynomial(s, &k).unwrap();
    let err = |e: reciprocity::Error| e.to_string();
    let (f, g) = (poly("x"), poly("y^2 - x*(x^2 - 1)"));

    for ring in [SeriesRing::Local, SeriesRing::XAdic] {
        let cert = residue_certificate(&f, &g, ring, 2, n, Orientation::ResidueOfF).map_err(err)?;
        ensure(verify_certificate(&cert), || format!("certificate in {ring} fails"))?;
    }

    let lift = hensel_lift_auto(&g, SeriesRing::YAdic, n).map_err(err)?;
    ensure(lift.factors.len() == 3, || "g does not split into three factors".into())?;
    ensure(lift.product() == TruncatedSeries::from_polynomial(&g, SeriesRing::YAdic, n), || "product of factors differs from g".into())?;
    for gi in &lift.factors {
        let gp = gi.to_polynomial();
        let a = qth_power_in_germ(&gp, &f, SeriesRing::YAdic, 2, n).map_err(err)?.verdict;
        let b = qth_power_in_germ(&f, &gp, SeriesRing::YAdic, 2, n).map_err(err)?.verdict;
        ensure(a.is_power() && b.is_power(), || format!("factor {gi}: ({a}, {b})"))?;
    }

    let cusp = poly("y^2 - x^3");
    let verdict = qth_power_in_germ(&f, &cusp, SeriesRing::Local, 2, n).map_err(err)?.verdict;
    ensure(verdict == PowerVerdict::PowerOnlyInNormalization, || format!("cusp verdict {verdict}"))?;
    let laurent = normalization_certificate(&f, &cusp, 2, n, Orientation::ResidueOfF).map_err(err)?;
    let CertificateBody::Laurent { s, t } = &laurent.body else { return Err("cusp certificate is not exact".into()) };
    // Independent check of x - (y/x)^2 = (y^2 - x^3)(-1/x^2): multiply through by x^2.
    let lhs = &(&f * &poly("x^2")) - &poly("y^2");
    let rhs = &cusp * &poly("-1");
    ensure(s.numer == poly("y") && s.denom == f && t.numer == poly("-1") && t.denom == poly("x^2"), || format!("{laurent}"))?;
    ensure(lhs == rhs && verify_certificate(&laurent), || "Laurent identity fails".into())?;

    let node = poly("y^2 - x^2*(x - 1)");
    for gi in split_node(&node, n).map_err(err)? {
        let gp = gi.to_polynomial();
        let a = qth_power_in_germ(&gp, &f, SeriesRing::Local, 2, n).map_err(err)?.verdict;
        let b = qth_power_in_germ(&f, &gp, SeriesRing::Local, 2, n).map_err(err)?.verdict;
        ensure(!a.is_power() && !b.is_power(), || format!("node branch: ({a}, {b})"))?;
    }
    for ring in [SeriesRing::YAdic, SeriesRing::XAdic] {
        let gf = qth_power_in_germ(&node, &f, ring, 2, n).map_err(err)?.verdict;
        let fg = qth_power_in_germ(&f, &node, ring, 2, n).map_err(err)?.verdict;
        ensure(gf.is_power() && !fg.is_power(), || format!("node in {ring}: (g/f) {gf}, (f/g) {fg}"))?;
    }
    Ok("Examples 2, 3, 6, 9 and 10 at N = 16 over F_13".into())
}

/// Monic polynomials of degree `d` over `F_p`, coefficients enumerated.
fn monics(k: PrimeField, d: usize) -> impl Iterator<Item = UniPoly<PrimeField>> {
    let p = k.modulus();
    (0..p.pow(d as u32)).map(move |mut n| {
        let mut c: Vec<u64> = (0..d).map(|_| {
            let r = n % p;
            n /= p;
            r
        }).collect();
        c.push(1);
        UniPoly::new(k, c)
    })
}

/// Factorization by trial division against irreducibles found by sieving.
fn trial_division(g: &UniPoly<PrimeField>, irreducibles: &[UniPoly<PrimeField>]) -> Vec<(Vec<u64>, u32)> {
    let mut rest = g.clone();
    let mut out = Vec::new();
    for pi in irreducibles {
        let mut e = 0;
        while rest.degree().unwrap_or(0) > 0 && pi.divides(&rest) {
            rest = rest.exact_div(pi);
            e += 1;
        }
        if e > 0 {
            out.push((pi.coeffs().to_vec(), e));
        }
    }
    assert_eq!(rest.degree(), Some(0), "trial division left {rest}");
    out.sort();
    out
}

fn element_index(a: &UniPoly<PrimeField>, p: u64) -> usize {
    a.coeffs().iter().rev().fold(0, |acc, &c| acc * p as usize + c as usize)
}

fn oracles() -> Verdict {
    // Factoring over F_5.
    let k = PrimeField::new(5);
    let mut irreducibles: Vec<UniPoly<PrimeField>> = Vec::new();
    let mut checked = 0;
    for d in 1..=5 {
        for g in monics(k, d) {
            let reducible = irreducibles.iter().any(|pi| 2 * pi.degree().unwrap() <= d && pi.divides(&g));
            let mut ours: Vec<(Vec<u64>, u32)> = factor(&g, 0).factors.iter().map(|(p, e)| (p.coeffs().to_vec(), *e)).collect();
            ours.sort();
            let expected = if reducible { trial_division(&g, &irreducibles) } else { vec![(g.coeffs().to_vec(), 1)] };
            ensure(ours == expected, || format!("factor({g}) disagrees with trial division"))?;
            if !reducible {
                irreducibles.push(g);
            }
            checked += 1;
        }
    }

    // q-th powers in every field with at most 3000 elements.
    let mut fields = 0;
    for p in (2..=3000u64).filter(|&n| is_prime(n)) {
        let mut size = p;
        let mut d = 1;
        while size <= 3000 {
            for q in [2u64, 3, 5] {
                if d == 1 {
                    let f = PrimeField::new(p);
                    let mut powers = vec![false; p as usize];
                    for b in 0..p {
                        powers[modpow(b, q, p) as usize] = true;
                    }
                    for a in 0..p {
                        ensure(is_qth_power_finite_field(&f, &a, q) == powers[a as usize], || format!("F_{p}: {a}, q = {q}"))?;
                    }
                } else {
                    let base = PrimeField::new(p);
                    let modulus = monics(base, d).find(|m| is_irreducible(m)).expect("irreducible exists");
                    let f = FiniteField::new(modulus).map_err(|e| e.to_string())?;
                    let elements = f.elements();
                    let mut powers = vec![false; size as usize];
                    for b in &elements {
                        powers[element_index(&f.pow(b, q), p)] = true;
                    }
                    for a in &elements {
                        ensure(is_qth_power_finite_field(&f, a, q) == powers[element_index(a, p)], || format!("F_{p}^{d}: {a}, q = {q}"))?;
                    }
                }
            }
            fields += 1;
            size *= p;
            d += 1;
        }
    }

    // The symbol at 2 on odd integers in [-63, 63].
    let mut pairs = 0;
    for a in (-63i64..=63).filter(|a| a % 2 != 0) {
        for b in (-63i64..=63).filter(|b| b % 2 != 0) {
            let ours = hilbert_symbol_q(&int(a), &int(b), &RationalPlace::prime(2)).map_err(|e| e.to_string())?;
            ensure(ours == hilbert_at_two_by_search(a, b, 6), || format!("(a, b) = ({a}, {b})"))?;
            pairs += 1;
        }
    }
    Ok(format!("{checked} factorizations over F_5, {fields} fields for q in {{2, 3, 5}}, {pairs} unit pairs at 2"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict, Duration); 8] = [
        ("quadratic reciprocity over Q", quadratic_reciprocity, Duration::from_secs(10)),
        ("reciprocity over the real model", real_law, Duration::from_secs(5)),
        ("y^2 - 1 is not a square modulo beta", example8_family, Duration::from_secs(60)),
        ("q-th power law over F_p(y)", example0_family, Duration::from_secs(60)),
        ("Weil reciprocity", weil, Duration::from_secs(60)),
        ("parity over R(y), its failure over Q(y)", parity, Duration::from_secs(60)),
        ("series certificates", series_certificates, Duration::from_secs(5)),
        ("oracle equivalence", oracles, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let over = if elapsed > *budget { format!(", over the {}s target", budget.as_secs()) } else { String::new() };
        match verdict {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} ({:.2}s{over})", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failures += 1;
                println!("criterion {} FAIL  {name}: {why} ({:.2}s)", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
