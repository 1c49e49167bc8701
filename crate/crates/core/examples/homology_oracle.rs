// Formula-free Betti numbers from the upper Koszul simplicial complexes.

use tspread::ideal::MonomialIdeal;
use tspread::oracle::{betti_table_oracle, candidate_degrees, UpperKoszulComplex};
use tspread::{shift_sigma, PrimeField};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let field = PrimeField::default();
    let ideal = MonomialIdeal::parse("x1*x3^3, x2^4, x2^3*x3, x2^2*x3^2", 3)?;
    let candidates = candidate_degrees(&ideal);
    println!("{} candidate multidegrees", candidates.len());
    for b in &candidates {
        let k = UpperKoszulComplex::new(&ideal, b)?;
        println!(
            "  {b}: f-vector {:?}, reduced homology {:?}",
            k.f_vector(),
            k.reduced_homology(&field)
        );
    }
    let table = betti_table_oracle(&ideal, &field)?;
    println!(
        "S/I over GF({}):\n{}",
        field.characteristic(),
        table.to_quotient().render()
    );

    // The same shape survives sigma^t for every t.
    for t in 1..=3 {
        let shifted = MonomialIdeal::minimalize(
            ideal.ambient() + 3 * t,
            ideal.gens().iter().map(|g| shift_sigma(g, t)),
        )?;
        println!(
            "t={t}: totals {:?}",
            betti_table_oracle(&shifted, &field)?.totals()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
