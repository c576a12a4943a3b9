//! Over `F_p(y)` the norms of the tame symbols at all places multiply to 1.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reciprocity::arith::PrimeField;
use reciprocity::poly::sample::random_monic_fp;
use reciprocity::symbols::weil_reciprocity_check;

fn main() {
    let k = PrimeField::new(13);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..5 {
        let alpha = random_monic_fp(&mut rng, k, 3);
        let beta = random_monic_fp(&mut rng, k, 2);
        let report = weil_reciprocity_check(&alpha, &beta).unwrap();
        println!("{}: product of norms = {}", report.algebra, report.constraint.value);
        for p in &report.places {
            println!("  {:20} {}", p.place, p.symbol_value);
        }
    }
}
