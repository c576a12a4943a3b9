//! In `k[x][[y]]` the elliptic curve `y^2 = x(x^2 - 1)` splits into three
//! branches, one over each root of `x(x^2 - 1)` on the line `y = 0`.

use reciprocity::arith::PrimeField;
use reciprocity::poly::parse_polynomial;
use reciprocity::series::{hensel_lift_auto, SeriesRing, TruncatedSeries};

fn main() {
    let k = PrimeField::new(13);
    let g = parse_polynomial("y^2 - x*(x^2 - 1)", &k).unwrap();
    let lift = hensel_lift_auto(&g, SeriesRing::YAdic, 8).unwrap();
    println!("unit {}", lift.unit);
    for (i, f) in lift.factors.iter().enumerate() {
        println!("g_{} = {f}", i + 1);
    }
    let exact = lift.product() == TruncatedSeries::from_polynomial(&g, SeriesRing::YAdic, 8);
    println!("product matches g modulo y^8: {exact}");
}
