//! Tame symbols and ramification divisors over `F_p(y)` and `Q(y)`.
//!
//! Over `Q(y)` the algebra `(3, y^2 + 1)_2` ramifies at the single place
//! `y^2 + 1`: its residue field `Q(i)` does not contain `sqrt 3`, and no
//! second place balances it.

use reciprocity::arith::{PrimeField, Rational, Rationals};
use reciprocity::places::FunctionFieldPlace;
use reciprocity::poly::{parse_polynomial, UniPoly, Var};
use reciprocity::symbols::{ramification_divisor, scan_places, tame_symbol, SymbolAlgebra};

fn main() {
    let k = PrimeField::new(7);
    let parse = |s: &str| parse_polynomial(s, &k).unwrap().to_univariate(Var::Y).unwrap();
    let (alpha, beta) = (parse("(y - 1)^2*(y - 3)"), parse("y"));
    let at_y = FunctionFieldPlace::Finite(parse("y"));
    println!("tame symbol of ({alpha}, {beta}) at y: {}", tame_symbol(&alpha, &beta, &at_y).unwrap());
    let alg = SymbolAlgebra::new(alpha, beta, 3).unwrap();
    for d in scan_places(&alg).unwrap() {
        println!("  {:16} {:8} {}", d.place.to_string(), d.residue_class.to_string(), if d.trivial { "trivial" } else { "ramified" });
    }

    let q = |c: &[i64]| UniPoly::new(Rationals, c.iter().map(|&v| Rational::from_integer(v.into())).collect());
    let alg = SymbolAlgebra::new(q(&[3]), q(&[1, 0, 1]), 2).unwrap();
    let divisor = ramification_divisor(&alg).unwrap();
    println!("{alg} ramifies at {} place(s):", divisor.len());
    for d in divisor {
        println!("  {}", d.place);
    }
}
