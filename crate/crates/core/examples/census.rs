// Sweep every lexsegment of a small family and tally the classification.

use tspread::cli::census_rows;
use tspread::Params;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, d, t) in [(7, 3, 1), (9, 3, 2)] {
        let rows = census_rows(Params::new(n, d, t))?;
        let completely = rows.iter().filter(|r| r.1).count();
        let linear = rows.iter().filter(|r| r.2 == Some(true)).count();
        println!(
            "M({n},{d},{t}): {} segments, {completely} completely, {linear} linear",
            rows.len()
        );
    }
    let out = tspread::cli::run(["tspread", "census", "-n", "6", "-d", "2", "-t", "2"]);
    print!("{}", out.stdout);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
