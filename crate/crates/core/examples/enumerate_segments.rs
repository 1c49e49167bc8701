// Walk M(n,d,t) in slex order and cut out a lexsegment together with its
// initial and final companions.

use tspread::{LexsegmentSpec, Params};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = Params::new(11, 3, 3);
    let (max, min) = p.extremes()?;
    println!(
        "M(11,3,3) has {} monomials, from {max} down to {min}",
        p.cardinality()
    );

    let spec = LexsegmentSpec::parse(11, 3, 3, "x1*x5*x8", "x2*x5*x8")?;
    let seg = spec.segment();
    println!(
        "L(u,v) = {} monomials ({})",
        seg.len(),
        spec.kind().as_str()
    );
    for m in &seg {
        println!("  {m}");
    }
    println!(
        "initial segment up to v: {} monomials",
        spec.initial_segment().len()
    );
    println!(
        "final segment from u: {} monomials",
        spec.final_segment().len()
    );
    assert_eq!(seg.len(), 11);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
