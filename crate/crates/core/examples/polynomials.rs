//! The polynomial layer: parsing, factoring over `F_p`, and exact real root
//! isolation over `Q`.

use reciprocity::arith::{PrimeField, Rationals};
use reciprocity::poly::{factor, parse_polynomial, sturm_isolate, Var};

fn main() {
    let k = PrimeField::new(5);
    let g = parse_polynomial("y^6 - 1", &k).unwrap().to_univariate(Var::Y).unwrap();
    let factored = factor(&g, 0);
    print!("{g} = {}", factored.unit);
    for (p, e) in &factored.factors {
        print!(" * ({p})^{e}");
    }
    println!();

    let h = parse_polynomial("y^3 - 2*y - 1/3", &Rationals).unwrap().to_univariate(Var::Y).unwrap();
    for mut root in sturm_isolate(&h) {
        for _ in 0..20 {
            root.refine();
        }
        let (lo, hi) = root.interval();
        println!("root of {h} in [{lo}, {hi}]");
    }
}
