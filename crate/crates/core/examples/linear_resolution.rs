// Classify completely lexsegment ideals by whether their resolution is linear.

use tspread::betti::{has_linear_resolution, normalize};
use tspread::LexsegmentSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (11, 3, 3, "x1*x5*x8", "x2*x5*x8"),
        (12, 4, 3, "x1*x6*x9*x12", "x2*x5*x9*x12"),
        (8, 3, 2, "x1*x3*x7", "x1*x4*x6"),
    ];
    for (n, d, t, u, v) in cases {
        let spec = LexsegmentSpec::parse(n, d, t, u, v)?;
        let (norm, report) = normalize(&spec);
        let verdict = has_linear_resolution(&spec)?;
        println!("u={u} v={v} (t={t})");
        println!(
            "  normalized: n={} u={} v={} {report:?}",
            norm.params().n,
            norm.u(),
            norm.v()
        );
        println!("  linear: {} because {}", verdict.linear, verdict.reason);
    }

    // Non-completely segments are refused rather than guessed.
    let bad = LexsegmentSpec::parse(7, 3, 2, "x1*x5*x7", "x2*x4*x6")?;
    match has_linear_resolution(&bad) {
        Err(e) => println!("refused: {e} [{}]", e.invariant()),
        Ok(v) => println!("unexpected verdict {}", v.linear),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
