//! t-spread lexsegments `L_t(u,v)`, their ideals, and the completeness tests.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{cmp_slex, shift_tau, Monomial, Params};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentKind {
    /// Both initial and final: the whole of `M(n,d,t)`.
    Veronese,
    Initial,
    Final,
    Arbitrary,
}

impl SegmentKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SegmentKind::Veronese => "veronese",
            SegmentKind::Initial => "initial",
            SegmentKind::Final => "final",
            SegmentKind::Arbitrary => "arbitrary",
        }
    }
}

/// Endpoints `u >=slex v` of a lexsegment in `M(n,d,t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LexsegmentSpec {
    params: Params,
    u: Monomial,
    v: Monomial,
}

/// A monomial `ω` below `v` for which every exchange product fails.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub omega: Monomial,
    /// `x_{min(u)} ω / x_s` for every admissible `s`, all of them `>lex u`.
    pub failed_products: Vec<Monomial>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriterionVerdict {
    pub completely: bool,
    /// The slex-largest failing `ω`; present iff `completely` is false.
    pub witness: Option<Witness>,
}

/// How a completeness verdict was reached.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecisionMethod {
    /// The exchange criterion, inside the range where it is exact.
    Criterion,
    /// Direct comparison of `J ∩ T` with `I`.
    Intersection,
}

impl DecisionMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            DecisionMethod::Criterion => "criterion",
            DecisionMethod::Intersection => "intersection",
        }
    }
}

/// Completeness verdict from [`LexsegmentSpec::decide_completely`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Completeness {
    pub completely: bool,
    pub method: DecisionMethod,
    /// For the criterion: the failing `ω`. For the intersection: the first
    /// generator of `J ∩ T` outside `I`.
    pub witness: Option<Monomial>,
    /// Exchange products of the criterion witness; empty otherwise.
    pub failed_products: Vec<Monomial>,
}

impl LexsegmentSpec {
    pub fn new(params: Params, u: Monomial, v: Monomial) -> Result<Self> {
        params.check(&u)?;
        params.check(&v)?;
        if cmp_slex(&u, &v)? == Ordering::Less {
            return Err(Error::EndpointOrder {
                u: u.to_string(),
                v: v.to_string(),
            });
        }
        Ok(LexsegmentSpec { params, u, v })
    }

    /// Builds a spec from textual endpoints.
    pub fn parse(n: usize, d: usize, t: usize, u: &str, v: &str) -> Result<Self> {
        let params = Params::new(n, d, t);
        Self::new(params, Monomial::parse(u, n)?, Monomial::parse(v, n)?)
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn u(&self) -> &Monomial {
        &self.u
    }

    pub fn v(&self) -> &Monomial {
        &self.v
    }

    pub fn is_principal(&self) -> bool {
        self.u == self.v
    }

    pub fn kind(&self) -> SegmentKind {
        let (top, bottom) = self.params.extremes().expect("spec endpoints exist");
        match (self.u == top, self.v == bottom) {
            (true, true) => SegmentKind::Veronese,
            (true, false) => SegmentKind::Initial,
            (false, true) => SegmentKind::Final,
            (false, false) => SegmentKind::Arbitrary,
        }
    }

    fn walk(&self, from: &Monomial, to: &Monomial) -> Vec<Monomial> {
        let mut out = Vec::new();
        for w in self.params.iter_from(from).expect("endpoint in family") {
            let done = &w == to;
            out.push(w);
            if done {
                break;
            }
        }
        out
    }

    /// `L_t(u,v)` in decreasing slex order.
    pub fn segment(&self) -> Vec<Monomial> {
        self.walk(&self.u, &self.v)
    }

    /// The initial segment `L_t^i(v)`.
    pub fn initial_segment(&self) -> Vec<Monomial> {
        let (top, _) = self.params.extremes().expect("nonempty");
        self.walk(&top, &self.v)
    }

    /// The final segment `L_t^f(u)`.
    pub fn final_segment(&self) -> Vec<Monomial> {
        let (_, bottom) = self.params.extremes().expect("nonempty");
        self.walk(&self.u, &bottom)
    }

    /// `I = (L_t(u,v))`.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.params.n, self.segment()).expect("same ring")
    }

    /// `J = (L_t^i(v))`.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.params.n, self.initial_segment()).expect("same ring")
    }

    /// `T = (L_t^f(u))`.
    pub fn final_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.params.n, self.final_segment()).expect("same ring")
    }

    /// Whether every `ω <slex v` admits `s > min(u)`, `x_s | ω`, with
    /// `x_{min(u)} ω / x_s <=lex u`.
    ///
    /// Initial, final and Veronese segments are complete without a scan.
    pub fn is_completely_by_criterion(&self) -> Result<CriterionVerdict> {
        if self.kind() != SegmentKind::Arbitrary {
            return Ok(CriterionVerdict {
                completely: true,
                witness: None,
            });
        }
        let witness = exchange_scan(&self.u, &self.v, &self.params)?;
        Ok(CriterionVerdict {
            completely: witness.is_none(),
            witness,
        })
    }

    /// Whether the exchange criterion decides completeness exactly: the
    /// segment is initial or final, or `min(u) = 1 < min(v)`. Outside this
    /// range the criterion can answer either way wrongly.
    pub fn criterion_applies(&self) -> bool {
        self.kind() != SegmentKind::Arbitrary || (self.u.min_index() == 1 && self.v.min_index() > 1)
    }

    /// Decides completeness by the criterion where it applies and by the
    /// intersection otherwise.
    pub fn decide_completely(&self) -> Result<Completeness> {
        if self.criterion_applies() {
            let verdict = self.is_completely_by_criterion()?;
            let (witness, failed_products) = match verdict.witness {
                Some(w) => (Some(w.omega), w.failed_products),
                None => (None, Vec::new()),
            };
            return Ok(Completeness {
                completely: verdict.completely,
                method: DecisionMethod::Criterion,
                witness,
                failed_products,
            });
        }
        let ideal = self.ideal();
        let meet = self.initial_ideal().intersect(&self.final_ideal())?;
        let witness = meet.gens().iter().find(|g| !ideal.contains(g)).cloned();
        Ok(Completeness {
            completely: witness.is_none(),
            method: DecisionMethod::Intersection,
            witness,
            failed_products: Vec::new(),
        })
    }

    /// Computes `J ∩ T` and compares it with `I`.
    pub fn is_completely_by_intersection(&self) -> bool {
        let q = self
            .initial_ideal()
            .intersect(&self.final_ideal())
            .expect("same ring");
        q == self.ideal()
    }

    /// The same exchange condition evaluated on the squarefree shadow
    /// `τ^{t-1}(u), τ^{t-1}(v)` in `n - (d-1)(t-1)` variables.
    pub fn shadow_condition_bprime(&self) -> Result<bool> {
        if self.params.t == 0 {
            return Err(Error::InvalidParams(
                "the squarefree shadow needs t >= 1".into(),
            ));
        }
        if self.kind() != SegmentKind::Arbitrary {
            return Ok(true);
        }
        let shadow = self.tau_segment(self.params.t - 1)?;
        Ok(exchange_scan(&shadow.u, &shadow.v, &shadow.params)?.is_none())
    }

    /// Applies `τ^s` to both endpoints, `0 <= s <= t`.
    pub fn tau_segment(&self, s: usize) -> Result<LexsegmentSpec> {
        let Params { n, d, t } = self.params;
        if s > t {
            return Err(Error::ShiftOutOfRange {
                shift: s,
                reason: format!("shift exceeds the spread t = {t}"),
            });
        }
        let params = Params::new(n - (d - 1) * s, d, t - s);
        LexsegmentSpec::new(params, shift_tau(&self.u, s)?, shift_tau(&self.v, s)?)
    }
}

/// The t-spread Veronese ideal `I_{n,d,t}`.
pub fn veronese(p: Params) -> MonomialIdeal {
    MonomialIdeal::minimalize(p.n, p.iter()).expect("same ring")
}

/// Scans `ω <slex v` in decreasing order and returns the first `ω` for which
/// no `x_{min(u)} ω / x_s` with `s > min(u)` is `<=lex u`.
fn exchange_scan(u: &Monomial, v: &Monomial, p: &Params) -> Result<Option<Witness>> {
    let i1 = u.min_index();
    for omega in p.iter_below(v)? {
        let products: Vec<Monomial> = omega
            .support()
            .into_iter()
            .filter(|&s| s > i1)
            .map(|s| omega.div_var(s).expect("s in support").mul_var(i1))
            .collect();
        if !products.iter().any(|w| w.cmp_lex(u) != Ordering::Greater) {
            return Ok(Some(Witness {
                omega,
                failed_products: products,
            }));
        }
    }
    Ok(None)
}

/// Machine-readable completeness verdict.
#[derive(Clone, Debug, Serialize)]
pub struct CompletenessReport {
    pub n: usize,
    pub d: usize,
    pub t: usize,
    pub u: String,
    pub v: String,
    pub kind: SegmentKind,
    pub completely: bool,
    pub method: DecisionMethod,
    pub witness: Option<String>,
}

impl CompletenessReport {
    pub fn new(spec: &LexsegmentSpec, verdict: &Completeness) -> Self {
        let Params { n, d, t } = spec.params();
        CompletenessReport {
            n,
            d,
            t,
            u: spec.u().to_string(),
            v: spec.v().to_string(),
            kind: spec.kind(),
            completely: verdict.completely,
            method: verdict.method,
            witness: verdict.witness.as_ref().map(ToString::to_string),
        }
    }
}
