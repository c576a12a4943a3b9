//! Drives the command-line front end in-process and reads its JSON report
//! back.

use reciprocity::cli::{run, Report};

fn main() {
    let out = run(["reciprocity", "reciprocity", "qr", "3", "7", "--json"]);
    let report: Report = serde_json::from_str(&out.stdout).unwrap();
    println!("exit {}; {} places; {} = {}", out.code, report.places.len(), report.constraint.statement, report.constraint.value);

    let out = run(["reciprocity", "residue", "--field", "r", "y^2 - 1", "y"]);
    print!("exit {}\n{}", out.code, out.stdout);

    let out = run(["reciprocity", "certify", "x", "y^2 - x^3"]);
    print!("exit {}\n{}", out.code, out.stdout);
}
