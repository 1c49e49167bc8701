// Closed-form Betti tables for initial, final, Veronese and completely
// lexsegment ideals, plus the Koszul cycle labels that
// count the initial-ideal entries.

use tspread::betti::{
    betti_completely_linear, betti_reversed_formula, betti_stable_formula, cycle_basis,
};
use tspread::lexsegment::veronese;
use tspread::{LexsegmentSpec, Side};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = LexsegmentSpec::parse(11, 3, 3, "x1*x5*x8", "x2*x5*x8")?;
    let t = spec.params().t;
    let tables = [
        ("I", betti_completely_linear(&spec)?),
        ("J", betti_stable_formula(&spec.initial_ideal(), t)?),
        ("T", betti_reversed_formula(&spec.final_ideal(), t)?),
        ("V", betti_stable_formula(&veronese(spec.params()), t)?),
    ];
    for (name, table) in &tables {
        println!("S/{name}:\n{}", table.to_quotient().render());
    }
    let tot: Vec<Vec<u64>> = tables.iter().map(|(_, tb)| tb.totals()).collect();
    for i in 0..tot[3].len() {
        let get = |k: usize| tot[k].get(i).copied().unwrap_or(0) as i64;
        assert_eq!(get(0), get(1) + get(2) - get(3));
    }

    let labels = cycle_basis(&spec.initial_ideal(), t, 1, Side::Initial)?;
    println!("first syzygies of J by cycle label ({}):", labels.len());
    for c in labels.iter().take(5) {
        println!("  {:?} in degree {}", c, c.degree());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
