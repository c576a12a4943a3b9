//! A cubic power law over `F_7(y)`: with `omega = 2` not a cube,
//! `alpha = (y - 1)^2 (y - 2)` is never a cube modulo `beta = y + alpha f`.
//! The symbol `(alpha, beta)_3` ramifies at `y - 2`, is unramified at `y - 1`
//! and at infinity, so some place over `beta` must absorb it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reciprocity::arith::PrimeField;
use reciprocity::poly::sample::random_fp;
use reciprocity::symbols::example0_driver;

fn main() {
    let k = PrimeField::new(7);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        let f = random_fp(&mut rng, k, 3);
        let report = example0_driver(3, 7, 2, &f).unwrap();
        println!("f = {f}: (alpha/beta)_3 = {}", report.constraint.value);
        for p in report.places.iter().filter(|p| !p.trivial) {
            println!("  ramified at {} ({})", p.place, p.symbol_value);
        }
    }
}
