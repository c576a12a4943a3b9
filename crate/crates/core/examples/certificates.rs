//! Explicit witnesses `x - s^2 = g t` for `g = y^2 - x(x^2 - 1)` in each
//! completion, and the exact identity for the cusp where `s = y/x` lives
//! only in the normalization.

use reciprocity::arith::PrimeField;
use reciprocity::poly::parse_polynomial;
use reciprocity::series::{normalization_certificate, residue_certificate, verify_certificate, Orientation, SeriesRing};

fn main() {
    let k = PrimeField::new(13);
    let f = parse_polynomial("x", &k).unwrap();
    let g = parse_polynomial("y^2 - x*(x^2 - 1)", &k).unwrap();
    for ring in [SeriesRing::Local, SeriesRing::YAdic, SeriesRing::XAdic] {
        let cert = residue_certificate(&f, &g, ring, 2, 8, Orientation::ResidueOfF).unwrap();
        println!("{cert}\n  verified: {}", verify_certificate(&cert));
    }

    let cusp = parse_polynomial("y^2 - x^3", &k).unwrap();
    match residue_certificate(&f, &cusp, SeriesRing::Local, 2, 16, Orientation::ResidueOfF) {
        Err(e) => println!("cusp in k[[x, y]]: {e}"),
        Ok(c) => println!("unexpected certificate {c}"),
    }
    let laurent = normalization_certificate(&f, &cusp, 2, 16, Orientation::ResidueOfF).unwrap();
    println!("{laurent}\n  verified: {}", verify_certificate(&laurent));
}
