//! Hilbert symbols of `(p, q)` at every place of `Q`, and the Legendre law
//! that falls out of their product being 1.

use reciprocity::arith::Rational;
use reciprocity::symbols::reciprocity_check_q;

fn main() {
    let (p, q) = (Rational::from_integer(3.into()), Rational::from_integer(7.into()));
    let report = reciprocity_check_q(&p, &q).expect("3 and 7 are nonzero");
    println!("{}", report.algebra);
    for place in &report.places {
        println!("  {:8} {}", place.place, place.symbol_value);
    }
    println!("{} = {}", report.constraint.statement, report.constraint.value);
    for d in &report.derived_identities {
        println!("{} ({})", d.statement, if d.holds { "holds" } else { "fails" });
    }
}
