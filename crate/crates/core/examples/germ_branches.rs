//! Branches of plane curve germs at the origin, and whether `x` has a
//! square root along them: the smooth point, the cusp (only in the
//! normalization) and the node (on neither branch).

use reciprocity::arith::PrimeField;
use reciprocity::poly::parse_polynomial;
use reciprocity::series::{germ_parametrize, qth_power_in_germ, SeriesRing};

fn main() {
    let k = PrimeField::new(13);
    let x = parse_polynomial("x", &k).unwrap();
    for text in ["y^2 - x*(x^2 - 1)", "y^2 - x^3", "y^2 - x^2*(x - 1)"] {
        let g = parse_polynomial(text, &k).unwrap();
        println!("{text}");
        for b in germ_parametrize(&g, None, 8).unwrap() {
            println!("  {b}");
        }
        let a = qth_power_in_germ(&x, &g, SeriesRing::Local, 2, 16).unwrap();
        println!("  x: {}{}", a.verdict, a.witness.map(|w| format!(" ({w})")).unwrap_or_default());
    }
}
