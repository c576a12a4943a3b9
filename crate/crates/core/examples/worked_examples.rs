//! Replays every scripted reproduction and prints its checks.
//!
//! `cargo run --example worked_examples -- ex9` runs one of them.

use reciprocity::cli::{run_example, ExampleSettings, EXAMPLE_IDS};

fn main() {
    let selected: Vec<String> = std::env::args().skip(1).collect();
    for id in EXAMPLE_IDS.iter().filter(|id| selected.is_empty() || selected.iter().any(|s| s == *id)) {
        let run = run_example(id, ExampleSettings::default()).unwrap();
        println!("{id} [{}] {}", if run.passed() { "pass" } else { "FAIL" }, run.summary);
        for c in &run.checks {
            println!("    {} {}", if c.holds { "ok  " } else { "FAIL" }, c.statement);
        }
    }
}
