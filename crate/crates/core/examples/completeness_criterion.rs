// Decide whether a lexsegment ideal equals the intersection of its initial
// and final ideals, by the exchange criterion and by direct intersection.
// The criterion is exact when the segment is initial or final, or when
// `min(u) = 1 < min(v)`; the third case below sits outside that range.

use tspread::LexsegmentSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (11, 3, 3, "x1*x5*x8", "x2*x5*x8"),
        (7, 3, 2, "x1*x5*x7", "x2*x4*x6"),
        (12, 3, 3, "x2*x6*x9", "x3*x6*x9"),
        (12, 4, 2, "x2*x4*x6*x9", "x2*x4*x6*x11"),
    ];
    for (n, d, t, u, v) in cases {
        let spec = LexsegmentSpec::parse(n, d, t, u, v)?;
        let verdict = spec.is_completely_by_criterion()?;
        let direct = spec.is_completely_by_intersection();
        println!(
            "n={n} t={t} u={u} v={v}: criterion {}, intersection {direct}",
            verdict.completely
        );
        if let Some(w) = &verdict.witness {
            let failed: Vec<String> = w.failed_products.iter().map(ToString::to_string).collect();
            println!("  witness {} fails with {}", w.omega, failed.join(", "));
        }
        let decided = spec.decide_completely()?;
        println!(
            "  decided by {}: {}",
            decided.method.as_str(),
            decided.completely
        );
        assert_eq!(decided.completely, direct);
        if spec.criterion_applies() {
            assert_eq!(verdict.completely, direct);
        }
    }

    let spec = LexsegmentSpec::parse(7, 3, 2, "x1*x5*x7", "x2*x4*x6")?;
    let meet = spec.initial_ideal().intersect(&spec.final_ideal())?;
    println!(
        "J cap T = {:?}",
        meet.gens()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("generator degrees: {:?}", meet.generator_degrees());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
