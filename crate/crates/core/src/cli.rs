//! Command-line front end. [`run`] is pure (argv in, exit code and text out)
//! so that the binary stays a thin wrapper and golden tests can call it
//! directly.
//!
//! Exit codes: `0` success, `2` precondition violation or bad arguments,
//! `3` internal inconsistency (formula and oracle tables disagree).

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::betti::{
    betti_completely_linear, betti_reversed_formula, betti_stable_formula, has_linear_resolution,
    BettiTable,
};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::lexsegment::{veronese, CompletenessReport, LexsegmentSpec};
use crate::monomial::{shift_sigma, shift_tau, slex_successor, Monomial, Params};
use crate::oracle::{betti_table_oracle, OracleReport, PrimeField};

/// Environment variable holding the default field characteristic.
pub const FIELD_CHAR_ENV: &str = "TSPREAD_FIELD_CHAR";

#[derive(Parser, Debug)]
#[command(
    name = "tspread",
    version,
    about = "t-spread lexsegment ideals: enumeration, completeness, linearity, Betti numbers"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Characteristic of the prime field used by the homology oracle.
    #[arg(long, global = true, env = FIELD_CHAR_ENV, default_value_t = PrimeField::DEFAULT_CHAR)]
    field_char: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    d: usize,
    #[arg(short)]
    t: usize,
}

#[derive(Args, Debug, Clone)]
struct SpecArgs {
    #[arg(short)]
    n: usize,
    /// Degree; defaults to deg(u).
    #[arg(short)]
    d: Option<usize>,
    #[arg(short)]
    t: usize,
    #[arg(short)]
    u: String,
    #[arg(short)]
    v: String,
}

impl SpecArgs {
    fn spec(&self) -> Result<LexsegmentSpec> {
        let u = Monomial::parse(&self.u, self.n)?;
        let v = Monomial::parse(&self.v, self.n)?;
        let d = self.d.unwrap_or_else(|| u.degree());
        LexsegmentSpec::new(Params::new(self.n, d, self.t), u, v)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    /// I = (L_t(u,v))
    I,
    /// J = (L_t^i(v))
    J,
    /// T = (L_t^f(u))
    T,
    /// V = I_{n,d,t}
    V,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List M(n,d,t) in decreasing slex order.
    Enumerate(FamilyArgs),
    /// The next t-spread monomial below the given one.
    Successor {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        t: usize,
        monomial: String,
    },
    /// List the lexsegment L_t(u,v).
    Segment(SpecArgs),
    /// Apply σ^s or τ^s to a monomial.
    Shift {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        s: usize,
        #[arg(long, conflicts_with = "tau", required_unless_present = "tau")]
        sigma: bool,
        #[arg(long)]
        tau: bool,
        monomial: String,
    },
    /// Intersect two ideals given as comma-separated generator lists.
    Intersect {
        #[arg(short)]
        n: usize,
        a: String,
        b: String,
    },
    /// Decide whether (L_t(u,v)) is completely lexsegment.
    CheckComplete(SpecArgs),
    /// Decide whether a completely lexsegment ideal has a linear resolution.
    CheckLinear(SpecArgs),
    /// Betti table of I, J, T or V by formula, oracle, or both.
    Betti {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Which::I)]
        ideal: Which,
    },
    /// Oracle Betti table of an arbitrary monomial ideal.
    BettiOracle {
        #[arg(short)]
        n: usize,
        gens: String,
    },
    /// Classify every lexsegment of M(n,d,t).
    Census(FamilyArgs),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error[{}]: {e}\n", e.invariant()),
        },
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn lines<'a>(items: impl IntoIterator<Item = &'a Monomial>) -> String {
    items.into_iter().map(|m| format!("{m}\n")).collect()
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let json = cli.json;
    let out = match &cli.command {
        Command::Enumerate(FamilyArgs { n, d, t }) => {
            let p = Params::new(*n, *d, *t);
            let all = p.enumerate();
            if json {
                let names: Vec<String> = all.iter().map(ToString::to_string).collect();
                to_json(&json!({ "n": n, "d": d, "t": t, "count": all.len(), "monomials": names }))
            } else {
                lines(&all)
            }
        }
        Command::Successor { n, t, monomial } => {
            let m = Monomial::parse(monomial, *n)?;
            let p = Params::new(*n, m.degree(), *t);
            let next = slex_successor(&m, &p)?;
            if json {
                let next = next.as_ref().map(ToString::to_string);
                to_json(&json!({ "monomial": m.to_string(), "successor": next }))
            } else {
                match next {
                    Some(w) => format!("{w}\n"),
                    None => "none\n".to_string(),
                }
            }
        }
        Command::Segment(args) => {
            let spec = args.spec()?;
            let seg = spec.segment();
            if json {
                let Params { n, d, t } = spec.params();
                let names: Vec<String> = seg.iter().map(ToString::to_string).collect();
                to_json(&json!({
                    "n": n, "d": d, "t": t,
                    "u": spec.u().to_string(), "v": spec.v().to_string(),
                    "kind": spec.kind(), "segment": names,
                }))
            } else {
                lines(&seg)
            }
        }
        Command::Shift {
            n,
            s,
            sigma,
            monomial,
            ..
        } => {
            let m = Monomial::parse(monomial, *n)?;
            let (op, image) = if *sigma {
                ("sigma", shift_sigma(&m, *s))
            } else {
                ("tau", shift_tau(&m, *s)?)
            };
            if json {
                to_json(&json!({
                    "op": op, "s": s, "input": m.to_string(),
                    "result": image.to_string(), "n": image.ambient(),
                }))
            } else {
                format!("{image} (n={})\n", image.ambient())
            }
        }
        Command::Intersect { n, a, b } => {
            let a = MonomialIdeal::parse(a, *n)?;
            let b = MonomialIdeal::parse(b, *n)?;
            let q = a.intersect(&b)?;
            if json {
                to_json(&q)
            } else {
                lines(q.gens())
            }
        }
        Command::CheckComplete(args) => {
            let spec = args.spec()?;
            let verdict = spec.decide_completely()?;
            if json {
                to_json(&CompletenessReport::new(&spec, &verdict))
            } else {
                let mut s = format!(
                    "kind: {}\nmethod: {}\ncompletely: {}\n",
                    spec.kind().as_str(),
                    verdict.method.as_str(),
                    verdict.completely
                );
                if let Some(w) = &verdict.witness {
                    let _ = writeln!(s, "witness: {w}");
                }
                if !verdict.failed_products.is_empty() {
                    let failed: Vec<String> = verdict
                        .failed_products
                        .iter()
                        .map(ToString::to_string)
                        .collect();
                    let _ = writeln!(s, "failed products: {}", failed.join(", "));
                }
                s
            }
        }
        Command::CheckLinear(args) => {
            let spec = args.spec()?;
            let verdict = has_linear_resolution(&spec)?;
            if json {
                let norm = &verdict.normalized;
                let Params { n, d, t } = norm.params();
                to_json(&json!({
                    "linear": verdict.linear,
                    "reason": verdict.reason,
                    "normalized": { "n": n, "d": d, "t": t, "u": norm.u().to_string(), "v": norm.v().to_string() },
                    "normalization": verdict.report,
                }))
            } else {
                format!("linear: {}\nreason: {}\n", verdict.linear, verdict.reason)
            }
        }
        Command::Betti {
            spec,
            method,
            ideal,
        } => return betti_command(cli, spec, *method, *ideal),
        Command::BettiOracle { n, gens } => {
            let field = PrimeField::new(cli.field_char)?;
            let ideal = MonomialIdeal::parse(gens, *n)?;
            let table = betti_table_oracle(&ideal, &field)?;
            if json {
                to_json(&OracleReport::new(&field, table))
            } else {
                format!(
                    "method: homology, char: {}\n{}",
                    field.characteristic(),
                    table.to_quotient().render()
                )
            }
        }
        Command::Census(FamilyArgs { n, d, t }) => census(Params::new(*n, *d, *t), json),
    };
    Ok(Outcome::ok(out))
}

fn formula_table(spec: &LexsegmentSpec, which: Which) -> Result<BettiTable> {
    let t = spec.params().t;
    match which {
        Which::I => betti_completely_linear(spec),
        Which::J => betti_stable_formula(&spec.initial_ideal(), t),
        Which::T => betti_reversed_formula(&spec.final_ideal(), t),
        Which::V => betti_stable_formula(&veronese(spec.params()), t),
    }
}

fn betti_command(cli: &Cli, args: &SpecArgs, method: Method, which: Which) -> Result<Outcome> {
    let spec = args.spec()?;
    let name = format!("{which:?}");
    let ideal = match which {
        Which::I => spec.ideal(),
        Which::J => spec.initial_ideal(),
        Which::T => spec.final_ideal(),
        Which::V => veronese(spec.params()),
    };
    let formula = match method {
        Method::Formula | Method::Both => Some(formula_table(&spec, which)?.to_quotient()),
        Method::Oracle => None,
    };
    let (field, oracle) = match method {
        Method::Oracle | Method::Both => {
            let field = PrimeField::new(cli.field_char)?;
            (
                Some(field),
                Some(betti_table_oracle(&ideal, &field)?.to_quotient()),
            )
        }
        Method::Formula => (None, None),
    };
    let agree = match (&formula, &oracle) {
        (Some(f), Some(o)) => Some(f == o),
        _ => None,
    };
    let stdout = if cli.json {
        to_json(&json!({
            "ideal": name,
            "formula": formula,
            "oracle": oracle.clone().zip(field).map(|(t, f)| OracleReport::new(&f, t)),
            "agree": agree,
        }))
    } else {
        let mut s = String::new();
        if let Some(f) = &formula {
            let _ = write!(s, "Betti table of S/{name} (formula)\n{}", f.render());
        }
        if let (Some(o), Some(field)) = (&oracle, &field) {
            if !s.is_empty() {
                s.push('\n');
            }
            let _ = write!(
                s,
                "Betti table of S/{name} (oracle: homology, char {})\n{}",
                field.characteristic(),
                o.render()
            );
        }
        if let (Some(f), Some(o)) = (&formula, &oracle) {
            s.push_str("\ndiff:\n");
            let diff = table_diff(f, o);
            if diff.is_empty() {
                s.push_str("  none\n");
            }
            for line in diff {
                let _ = writeln!(s, "  {line}");
            }
        }
        s
    };
    let code = if agree == Some(false) { 3 } else { 0 };
    let stderr = if code == 3 {
        "error[formula_oracle_agreement]: tables differ\n".to_string()
    } else {
        String::new()
    };
    Ok(Outcome {
        code,
        stdout,
        stderr,
    })
}

fn table_diff(a: &BettiTable, b: &BettiTable) -> Vec<String> {
    let mut keys: Vec<(usize, usize)> = a
        .entries()
        .chain(b.entries())
        .map(|(i, j, _)| (i, j))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter(|&(i, j)| a.get(i, j) != b.get(i, j))
        .map(|(i, j)| {
            format!(
                "beta[{i},{j}]: formula {} oracle {}",
                a.get(i, j),
                b.get(i, j)
            )
        })
        .collect()
}

#[derive(Serialize)]
struct CensusRow {
    u: String,
    v: String,
    kind: &'static str,
    completely: bool,
    linear: Option<bool>,
}

/// One classification row per ordered pair `u >=slex v`.
pub fn census_rows(p: Params) -> Result<Vec<(LexsegmentSpec, bool, Option<bool>)>> {
    let all = p.enumerate();
    let mut rows = Vec::new();
    for (a, u) in all.iter().enumerate() {
        for v in &all[a..] {
            let spec = LexsegmentSpec::new(p, u.clone(), v.clone())?;
            let completely = spec.decide_completely()?.completely;
            let linear = if completely {
                Some(has_linear_resolution(&spec)?.linear)
            } else {
                None
            };
            rows.push((spec, completely, linear));
        }
    }
    Ok(rows)
}

fn census(p: Params, json: bool) -> String {
    let rows: Vec<CensusRow> = census_rows(p)
        .expect("census specs are valid by construction")
        .into_iter()
        .map(|(spec, completely, linear)| CensusRow {
            u: spec.u().to_string(),
            v: spec.v().to_string(),
            kind: spec.kind().as_str(),
            completely,
            linear,
        })
        .collect();
    if json {
        return to_json(&rows);
    }
    let mut s = String::from("u\tv\tkind\tcompletely\tlinear\n");
    for r in rows {
        let linear = r.linear.map_or("-".to_string(), |l| l.to_string());
        let _ = writeln!(
            s,
            "{}\t{}\t{}\t{}\t{}",
            r.u, r.v, r.kind, r.completely, linear
        );
    }
    s
}
