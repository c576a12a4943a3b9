//! Over `R(y)` a quaternion symbol ramifies at an even number of real
//! points. For monic real primes this gives
//! `(alpha/beta)(beta/alpha) = (-1)^(deg alpha deg beta)`.

use reciprocity::arith::{Rational, Rationals};
use reciprocity::poly::UniPoly;
use reciprocity::symbols::reciprocity_check_real;

fn poly(c: &[i64]) -> UniPoly<Rationals> {
    UniPoly::new(Rationals, c.iter().map(|&v| Rational::from_integer(v.into())).collect())
}

fn main() {
    let pairs = [
        (poly(&[0, 1]), poly(&[-1, 1])),
        (poly(&[-1, 1]), poly(&[1, 0, 1])),
        (poly(&[1, 0, 1]), poly(&[2, 2, 1])),
    ];
    for (alpha, beta) in &pairs {
        let report = reciprocity_check_real(alpha, beta).expect("distinct primes");
        println!("{}", report.algebra);
        for place in &report.places {
            let mark = if place.trivial { "" } else { "  <- ramified" };
            println!("  {:24} {}{mark}", place.place, place.symbol_value);
        }
        for d in &report.derived_identities {
            println!("  {}: {}", d.statement, d.holds);
        }
    }
}
