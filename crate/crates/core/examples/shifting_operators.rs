// Successors, gap profiles and the shifting operators sigma and tau.

use tspread::monomial::{gap_profile, slex_successor};
use tspread::{shift_sigma, shift_tau, Monomial, Params};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = Params::new(11, 3, 3);
    let u = Monomial::parse("x1*x5*x8", 11)?;
    let gaps = gap_profile(&u, &p)?;
    println!("gaps of {u}: {:?}", gaps.widths);
    let next = slex_successor(&u, &p)?.expect("u is not the minimum");
    println!("successor of {u}: {next}");

    // tau lowers the spread by s and shrinks the ambient ring; sigma undoes it.
    let down = shift_tau(&u, 2)?;
    let back = shift_sigma(&down, 2);
    println!("tau^2({u}) = {down} in {} variables", down.ambient());
    println!("sigma^2 of that = {back}");
    assert_eq!(back, u);

    // sigma^t turns an arbitrary monomial into a t-spread one.
    let w = Monomial::parse("x2^2*x3^2", 3)?;
    for t in 1..=3 {
        println!("sigma^{t}({w}) = {}", shift_sigma(&w, t));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
