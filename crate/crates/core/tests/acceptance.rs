// Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
// exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use tspread::betti::{
    betti_completely_linear, betti_reversed_formula, betti_stable_formula, cycle_basis_table,
    has_linear_resolution,
};
use tspread::lexsegment::veronese;
use tspread::oracle::{betti_table_oracle, is_linear_oracle};
use tspread::{
    shift_sigma, shift_tau, BettiTable, LexsegmentSpec, Monomial, MonomialIdeal, Params,
    PrimeField, Side,
};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {elapsed:.2?}, limit {limit:?}"),
    )
}

fn names(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(ToString::to_string).collect()
}

fn split(list: &str) -> Vec<String> {
    list.split(',').map(|s| s.trim().to_string()).collect()
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.exponents().iter().zip(b.exponents()).all(|(x, y)| x <= y)
}

fn all_pairs(p: Params) -> Vec<LexsegmentSpec> {
    let all = p.enumerate();
    let mut specs = Vec::new();
    for (a, u) in all.iter().enumerate() {
        for v in &all[a..] {
            specs.push(LexsegmentSpec::new(p, u.clone(), v.clone()).unwrap());
        }
    }
    specs
}

fn grid(ns: std::ops::RangeInclusive<usize>, d: usize, ts: &[usize]) -> Vec<Params> {
    ts.iter()
        .flat_map(|&t| ns.clone().map(move |n| Params::new(n, d, t)))
        .filter(Params::is_nonempty)
        .collect()
}

/// `I = J ∩ T` decided from pairwise lcms with a local divisibility test.
fn completely_brute_force(spec: &LexsegmentSpec) -> bool {
    let gens = spec.segment();
    let initial = spec.initial_segment();
    let fin = spec.final_segment();
    initial.iter().all(|a| {
        fin.iter()
            .all(|b| gens.iter().any(|g| divides(g, &a.lcm(b))))
    })
}

fn linear_row(values: &[u64], d: usize) -> BettiTable {
    let mut t = BettiTable::new(tspread::Convention::Ideal);
    for (i, &c) in values.iter().enumerate() {
        t.add(i, i + d, c);
    }
    t
}

fn ex24() -> LexsegmentSpec {
    LexsegmentSpec::parse(11, 3, 3, "x1*x5*x8", "x2*x5*x8").unwrap()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let spec = ex24();
    let i_list = split(
        "x1*x5*x8,x1*x5*x9,x1*x5*x10,x1*x5*x11,x1*x6*x9,x1*x6*x10,x1*x6*x11,x1*x7*x10,x1*x7*x11,x1*x8*x11,x2*x5*x8",
    );
    let j_list = split(
        "x1*x4*x7,x1*x4*x8,x1*x4*x9,x1*x4*x10,x1*x4*x11,x1*x5*x8,x1*x5*x9,x1*x5*x10,x1*x5*x11,x1*x6*x9,\
         x1*x6*x10,x1*x6*x11,x1*x7*x10,x1*x7*x11,x1*x8*x11,x2*x5*x8",
    );
    let t_list = split(
        "x1*x5*x8,x1*x5*x9,x1*x5*x10,x1*x5*x11,x1*x6*x9,x1*x6*x10,x1*x6*x11,x1*x7*x10,x1*x7*x11,x1*x8*x11,\
         x2*x5*x8,x2*x5*x9,x2*x5*x10,x2*x5*x11,x2*x6*x9,x2*x6*x10,x2*x6*x11,x2*x7*x10,x2*x7*x11,x2*x8*x11,\
         x3*x6*x9,x3*x6*x10,x3*x6*x11,x3*x7*x10,x3*x7*x11,x3*x8*x11,x4*x7*x10,x4*x7*x11,x4*x8*x11,x5*x8*x11",
    );
    ensure(names(&spec.segment()) == i_list, "I listing differs")?;
    ensure(
        names(&spec.initial_segment()) == j_list,
        "J listing differs",
    )?;
    ensure(names(&spec.final_segment()) == t_list, "T listing differs")?;
    let meet = spec
        .initial_ideal()
        .intersect(&spec.final_ideal())
        .map_err(|e| e.to_string())?;
    ensure(meet == spec.ideal(), "J ∩ T != I")?;
    ensure(
        spec.is_completely_by_criterion().unwrap().completely,
        "criterion says not completely",
    )?;
    ensure(
        spec.decide_completely().unwrap().completely,
        "decision says not completely",
    )?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "11/16/30 generators, J ∩ T = I, completely ({:.1?})",
        start.elapsed()
    ))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let spec = LexsegmentSpec::parse(7, 3, 2, "x1*x5*x7", "x2*x4*x6").unwrap();
    let meet = spec
        .initial_ideal()
        .intersect(&spec.final_ideal())
        .map_err(|e| e.to_string())?;
    let expected = MonomialIdeal::parse("x1*x5*x7, x2*x4*x6, x1*x2*x4*x7", 7).unwrap();
    ensure(
        meet == expected,
        format!("J ∩ T = {:?}", names(meet.gens())),
    )?;
    ensure(
        !spec.is_completely_by_criterion().unwrap().completely,
        "criterion says completely",
    )?;
    ensure(
        !spec.is_completely_by_intersection(),
        "intersection says completely",
    )?;
    let mut degrees = meet.generator_degrees();
    degrees.dedup();
    ensure(degrees == [3, 4], format!("degrees {degrees:?}"))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "J ∩ T = (x1x5x7, x2x4x6, x1x2x4x7), degrees {{3,4}}, not completely ({:.1?})",
        start.elapsed()
    ))
}

fn criterion_3() -> Check {
    let ok = LexsegmentSpec::parse(12, 3, 3, "x2*x6*x9", "x3*x6*x9").unwrap();
    let v = ok.is_completely_by_criterion().unwrap();
    ensure(v.completely, "exchange criterion false for n=12 t=3")?;
    let bad = LexsegmentSpec::parse(12, 4, 2, "x2*x4*x6*x9", "x2*x4*x6*x11").unwrap();
    let v = bad.is_completely_by_criterion().unwrap();
    ensure(!v.completely, "exchange criterion true for n=12 t=2")?;
    let w = v.witness.ok_or("no witness")?;
    ensure(
        w.omega.to_string() == "x2*x4*x6*x12",
        format!("witness {}", w.omega),
    )?;
    Ok("true for u=x2x6x9 v=x3x6x9; false with witness x2x4x6x12".into())
}

fn ex24_tables() -> Result<[(&'static str, MonomialIdeal, BettiTable); 4], String> {
    let spec = ex24();
    let e = |r: tspread::Result<BettiTable>| r.map_err(|e| e.to_string());
    Ok([
        ("I", spec.ideal(), e(betti_completely_linear(&spec))?),
        (
            "J",
            spec.initial_ideal(),
            e(betti_stable_formula(&spec.initial_ideal(), 3))?,
        ),
        (
            "T",
            spec.final_ideal(),
            e(betti_reversed_formula(&spec.final_ideal(), 3))?,
        ),
        (
            "V",
            veronese(spec.params()),
            e(betti_stable_formula(&veronese(spec.params()), 3))?,
        ),
    ])
}

fn criterion_4() -> Check {
    let tables = ex24_tables()?;
    let expected: [&[u64]; 4] = [
        &[11, 21, 15, 4],
        &[16, 41, 45, 24, 5],
        &[30, 85, 96, 50, 10],
        &[35, 105, 126, 70, 15],
    ];
    for ((name, _, table), want) in tables.iter().zip(expected) {
        ensure(
            *table == linear_row(want, 3),
            format!("beta({name}) = {:?}", table.totals()),
        )?;
    }
    for i in 0..=6 {
        let b = |k: usize| tables[k].2.get(i, i + 3) as i64;
        ensure(
            b(0) == b(1) + b(2) - b(3),
            format!("identity fails at i={i}"),
        )?;
    }
    Ok("I, J, T, V tables exact; beta(I) = beta(J) + beta(T) - beta(V)".into())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let field = PrimeField::new(32003).unwrap();
    for (name, ideal, table) in ex24_tables()? {
        let oracle = betti_table_oracle(&ideal, &field).map_err(|e| e.to_string())?;
        ensure(
            oracle == table,
            format!("oracle differs on {name}: {:?}", oracle.totals()),
        )?;
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!(
        "oracle over GF(32003) equals all four tables ({:.1?})",
        start.elapsed()
    ))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let specs: Vec<LexsegmentSpec> = grid(1..=9, 3, &[1, 2])
        .into_iter()
        .flat_map(all_pairs)
        .collect();
    let rows: Vec<(bool, bool, bool)> = specs
        .par_iter()
        .map(|s| {
            let criterion = s.is_completely_by_criterion().unwrap().completely;
            let intersection = s.is_completely_by_intersection();
            assert_eq!(intersection, completely_brute_force(s), "{s:?}");
            (criterion, intersection, s.criterion_applies())
        })
        .collect();
    let disagree: Vec<&(bool, bool, bool)> = rows.iter().filter(|r| r.0 != r.1).collect();
    let in_range = disagree.iter().filter(|r| r.2).count();
    let false_pos = disagree.iter().filter(|r| r.0).count();
    within(start.elapsed(), Duration::from_secs(300))?;
    let detail = format!(
        "{} pairs, {} disagreements ({} criterion-true/intersection-false, {} the reverse; {} with min(u)=1<min(v)) ({:.1?})",
        rows.len(),
        disagree.len(),
        false_pos,
        disagree.len() - false_pos,
        in_range,
        start.elapsed()
    );
    ensure(disagree.is_empty(), detail.clone())?;
    Ok(detail)
}

fn criterion_7() -> Check {
    let specs: Vec<LexsegmentSpec> = grid(1..=9, 3, &[2, 3])
        .into_iter()
        .flat_map(all_pairs)
        .collect();
    let bad = specs
        .par_iter()
        .filter(|s| {
            s.is_completely_by_criterion().unwrap().completely
                != s.shadow_condition_bprime().unwrap()
        })
        .count();
    ensure(bad == 0, format!("{bad} disagreements"))?;
    Ok(format!("{} pairs, 0 disagreements", specs.len()))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let field = PrimeField::default();
    let specs: Vec<LexsegmentSpec> = grid(1..=9, 3, &[1, 2])
        .into_iter()
        .flat_map(all_pairs)
        .filter(LexsegmentSpec::is_completely_by_intersection)
        .collect();
    let bad: Vec<String> = specs
        .par_iter()
        .filter_map(|s| {
            let claimed = has_linear_resolution(s).map(|v| v.linear);
            let oracle = is_linear_oracle(&s.ideal(), 3, &field).unwrap();
            (claimed != Ok(oracle)).then(|| format!("u={} v={} t={}", s.u(), s.v(), s.params().t))
        })
        .collect();
    within(start.elapsed(), Duration::from_secs(600))?;
    ensure(
        bad.is_empty(),
        format!("{} disagreements, first {:?}", bad.len(), bad.first()),
    )?;
    Ok(format!(
        "{} completely specs, 0 disagreements ({:.1?})",
        specs.len(),
        start.elapsed()
    ))
}

fn criterion_9() -> Check {
    let field = PrimeField::default();
    let base = MonomialIdeal::parse("x1*x3^3, x2^4, x2^3*x3, x2^2*x3^2", 3).unwrap();
    for t in 0..=3 {
        let n = 3 + 3 * t;
        let ideal =
            MonomialIdeal::minimalize(n, base.gens().iter().map(|g| shift_sigma(g, t))).unwrap();
        let table = betti_table_oracle(&ideal, &field).map_err(|e| e.to_string())?;
        ensure(
            table.totals() == [4, 3],
            format!("t={t}: totals {:?}", table.totals()),
        )?;
        ensure(
            !is_linear_oracle(&ideal, 4, &field).unwrap(),
            format!("t={t}: linear"),
        )?;
        ensure(
            table.get(1, 5) == 2 && table.get(1, 6) == 1,
            format!("t={t}: first syzygy degrees differ"),
        )?;
    }
    Ok("beta0=4, beta1=3, not 4-linear for t=0..3; first syzygies in degrees 5,5,6".into())
}

fn criterion_10() -> Check {
    let mut checked = 0usize;
    for t in 0..=3 {
        for d in 1..=3 {
            for n in 1..=9 {
                let p = Params::new(n, d, t);
                if !p.is_nonempty() || (t == 0 && n > 5) {
                    continue;
                }
                for spec in all_pairs(p) {
                    let meet = spec.initial_ideal().intersect(&spec.final_ideal()).unwrap();
                    ensure(
                        meet.generator_degrees()
                            .iter()
                            .all(|&g| g == d || g == d + 1),
                        format!("degree set outside {{d,d+1}} for {spec:?}"),
                    )?;
                    if t >= 1 {
                        let shadow = spec.tau_segment(t - 1).unwrap();
                        let image: Vec<Monomial> = spec
                            .segment()
                            .iter()
                            .map(|w| shift_tau(w, t - 1).unwrap())
                            .collect();
                        ensure(
                            image == shadow.segment(),
                            format!("interval not preserved for {spec:?}"),
                        )?;
                    }
                    checked += 1;
                }
                for w in p.iter() {
                    for s in 0..=t {
                        let back = shift_sigma(&shift_tau(&w, s).unwrap(), s);
                        ensure(back == w, format!("round trip fails for {w} s={s}"))?;
                    }
                }
                if t >= 1 {
                    let (max, min) = p.extremes().unwrap();
                    for w in p.iter() {
                        let j = LexsegmentSpec::new(p, max.clone(), w.clone())
                            .unwrap()
                            .ideal();
                        let table = cycle_basis_table(&j, t, Side::Initial, n).unwrap();
                        ensure(
                            table == betti_stable_formula(&j, t).unwrap().to_quotient(),
                            "initial cycle count",
                        )?;
                        let f = LexsegmentSpec::new(p, w.clone(), min.clone())
                            .unwrap()
                            .ideal();
                        let table = cycle_basis_table(&f, t, Side::Final, n).unwrap();
                        ensure(
                            table == betti_reversed_formula(&f, t).unwrap().to_quotient(),
                            "final cycle count",
                        )?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{checked} segments: degree set, interval preservation, round trip, cycle counts"
    ))
}

fn main() {
    let criteria: [(usize, fn() -> Check); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (k, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {k}: PASS  {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {k}: FAIL  {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
