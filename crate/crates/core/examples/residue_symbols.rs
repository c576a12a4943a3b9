//! `(f/g)_q`: is `f` a `q`-th power modulo `g`? Over `Q`, over the real
//! model and over `F_p`; and the elliptic-curve case in two variables, where
//! `x` is not a square modulo `y^2 - x(x^2 - 1)` even though `y^2` is a
//! square modulo `x`.

use reciprocity::arith::{PrimeField, RationalFunction, Rationals};
use reciprocity::poly::{parse_polynomial, UniPoly};
use reciprocity::symbols::{qth_power_residue, square_in_quadratic_function_field, BaseField};

fn main() {
    let parse = |s: &str| parse_polynomial(s, &Rationals).unwrap();
    for (f, g, field) in [
        ("y^2 - 1", "y", BaseField::Real),
        ("y^2 - 1", "y", BaseField::Rationals),
        ("2", "y^2 + 1", BaseField::Prime(7)),
        ("y + 2", "y^2 + 1", BaseField::Prime(13)),
    ] {
        let v = qth_power_residue(&parse(f), &parse(g), 2, field).unwrap();
        println!("({f} / {g})_2 over {field} = {v}");
    }

    let k = PrimeField::new(13);
    let cubic = UniPoly::new(k, vec![0, 12, 0, 1]);
    let x = RationalFunction::from_poly(UniPoly::x(k));
    let square = square_in_quadratic_function_field(&x, &cubic).unwrap();
    println!("x is a square modulo y^2 - x(x^2 - 1) over F_13: {square}");
}
