//! Graded Betti numbers by closed formulas, Koszul cycle-basis labels, the
//! normalization of lexsegment specs and the linear-resolution
//! classification of completely lexsegment ideals.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binomial::choose;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lexsegment::{LexsegmentSpec, SegmentKind};
use crate::monomial::{shift_tau, Monomial, Params};

/// Whether a table describes the ideal `I` or the quotient `S/I`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Ideal,
    Quotient,
}

/// Sparse graded Betti table `(i, j) -> β_{i,j}`; zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    convention: Convention,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(convention: Convention) -> Self {
        BettiTable {
            convention,
            entries: BTreeMap::new(),
        }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_default() += count;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_{i+1,j}(S/I) = β_{i,j}(I)` together with `β_{0,0}(S/I) = 1`.
    pub fn to_quotient(&self) -> BettiTable {
        match self.convention {
            Convention::Quotient => self.clone(),
            Convention::Ideal => {
                let mut out = BettiTable::new(Convention::Quotient);
                out.add(0, 0, 1);
                for (i, j, c) in self.entries() {
                    out.add(i + 1, j, c);
                }
                out
            }
        }
    }

    pub fn to_ideal(&self) -> BettiTable {
        match self.convention {
            Convention::Ideal => self.clone(),
            Convention::Quotient => {
                let mut out = BettiTable::new(Convention::Ideal);
                for (i, j, c) in self.entries() {
                    if i > 0 {
                        out.add(i - 1, j, c);
                    }
                }
                out
            }
        }
    }

    /// Every nonzero `β_{i,j}(I)` sits at `j = d + i`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.to_ideal().entries().all(|(i, j, _)| j == d + i)
    }

    /// Column sums `Σ_j β_{i,j}` for `i = 0..=max_i`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (i, _, c) in self.entries() {
            out[i] += c;
        }
        out
    }

    /// Entries `β_{i,i+row}` for `i = 0..=max_i`.
    pub fn row(&self, row: usize) -> Vec<u64> {
        let len = self.totals().len();
        (0..len).map(|i| self.get(i, i + row)).collect()
    }

    /// `Σ_i (-1)^i β_{i,j}` for every internal degree `j`.
    pub fn alternating_sums(&self) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (i, j, c) in self.entries() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *out.entry(j).or_insert(0) += sign * c as i64;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Layout with columns `i`, rows `j - i` and a `total:` row.
    pub fn render(&self) -> String {
        let width_cols = self.totals().len().max(1);
        let rows = self
            .entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0);
        let mut lines: Vec<(String, Vec<String>)> = Vec::new();
        lines.push((
            String::new(),
            (0..width_cols).map(|i| i.to_string()).collect(),
        ));
        let mut totals = self.totals();
        totals.resize(width_cols, 0);
        lines.push(("total:".into(), totals.iter().map(u64::to_string).collect()));
        for r in 0..=rows {
            let cells = (0..width_cols)
                .map(|i| match self.get(i, i + r) {
                    0 => ".".to_string(),
                    c => c.to_string(),
                })
                .collect();
            lines.push((format!("{r}:"), cells));
        }
        let label_w = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..width_cols)
            .map(|c| {
                lines
                    .iter()
                    .map(|(_, cells)| cells[c].len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        for (label, cells) in &lines {
            let mut line = format!("{label:>label_w$}");
            for (cell, w) in cells.iter().zip(&col_w) {
                line.push_str(&format!(" {cell:>w$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    convention: Convention,
    entries: Vec<(usize, usize, u64)>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableRepr {
            convention: self.convention,
            entries: self.entries().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableRepr::deserialize(d)?;
        let mut table = BettiTable::new(repr.convention);
        for (i, j, c) in repr.entries {
            table.add(i, j, c);
        }
        Ok(table)
    }
}

fn formula_table(ideal: &MonomialIdeal, term: impl Fn(&Monomial, usize) -> i64) -> BettiTable {
    let mut table = BettiTable::new(Convention::Ideal);
    for u in ideal.gens() {
        let j = u.degree();
        let top = term(u, j);
        for i in 0..=top.max(0) as usize {
            table.add(i, i + j, choose(top, i as i64));
        }
    }
    table
}

/// `β_{i,i+j}(I) = Σ_{u ∈ G(I)_j} C(max(u) - t(j-1) - 1, i)` for t-spread
/// strongly stable ideals.
pub fn betti_stable_formula(ideal: &MonomialIdeal, t: usize) -> Result<BettiTable> {
    if !ideal.is_strongly_stable_tspread(t, false)? {
        return Err(Error::NotStronglyStable { t, reversed: false });
    }
    let t = t as i64;
    Ok(formula_table(ideal, |u, j| {
        u.max_index() as i64 - t * (j as i64 - 1) - 1
    }))
}

/// `β_{i,i+j}(I) = Σ_{u ∈ G(I)_j} C(n - min(u) - t(j-1), i)` for ideals
/// that are t-spread strongly stable with the variable order reversed.
pub fn betti_reversed_formula(ideal: &MonomialIdeal, t: usize) -> Result<BettiTable> {
    if !ideal.is_strongly_stable_tspread(t, true)? {
        return Err(Error::NotStronglyStable { t, reversed: true });
    }
    let n = ideal.ambient() as i64;
    let t = t as i64;
    Ok(formula_table(ideal, |u, j| {
        n - u.min_index() as i64 - t * (j as i64 - 1)
    }))
}

/// Which stability (and hence which family of Koszul cycles) is used.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Classical cycles of a t-spread strongly stable ideal.
    Initial,
    /// Non-classical cycles of a reversed-order strongly stable ideal.
    Final,
}

/// Label `(u, σ)` of a Koszul cycle whose homology class is a basis
/// element of `H_i(x; S/I)`, with `|σ| = i - 1`. The indices in `σ` live in
/// the shadow ring of `τ^{t-1}(u)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleLabel {
    pub generator: Monomial,
    pub sigma: Vec<usize>,
    pub side: Side,
}

impl CycleLabel {
    /// Internal degree `deg(u) + |σ|` of the class.
    pub fn degree(&self) -> usize {
        self.generator.degree() + self.sigma.len()
    }
}

/// Enumerates the cycle labels spanning `H_i(x; S/I)`, `i >= 1`.
///
/// Initial side: `σ ∩ supp(ũ) = ∅`, `max(σ) < max(ũ)` with `ũ = τ^{t-1}(u)`.
/// Final side: `σ ∩ supp(ũ) = ∅`, `min(u) < min(σ)`,
/// `max(σ) <= n - (deg(u)-1)(t-1)`.
pub fn cycle_basis(
    ideal: &MonomialIdeal,
    t: usize,
    i: usize,
    side: Side,
) -> Result<Vec<CycleLabel>> {
    if t == 0 {
        return Err(Error::InvalidParams(
            "cycle labels are defined for t >= 1".into(),
        ));
    }
    if i == 0 {
        return Err(Error::InvalidParams(
            "homological degree must be positive".into(),
        ));
    }
    let reversed = side == Side::Final;
    if !ideal.is_strongly_stable_tspread(t, reversed)? {
        return Err(Error::NotStronglyStable { t, reversed });
    }
    let mut labels = Vec::new();
    for u in ideal.gens() {
        let shadow = shift_tau(u, t - 1)?;
        let supp = shadow.support();
        let free: Vec<usize> = match side {
            Side::Initial => (1..shadow.max_index())
                .filter(|k| !supp.contains(k))
                .collect(),
            Side::Final => (u.min_index() + 1..=shadow.ambient())
                .filter(|k| !supp.contains(k))
                .collect(),
        };
        for sigma in free.into_iter().combinations(i - 1) {
            labels.push(CycleLabel {
                generator: u.clone(),
                sigma,
                side,
            });
        }
    }
    Ok(labels)
}

/// Betti table of `S/I` assembled from cycle-label counts, `i = 1..=max_i`.
pub fn cycle_basis_table(
    ideal: &MonomialIdeal,
    t: usize,
    side: Side,
    max_i: usize,
) -> Result<BettiTable> {
    let mut table = BettiTable::new(Convention::Quotient);
    table.add(0, 0, 1);
    for i in 1..=max_i {
        for label in cycle_basis(ideal, t, i, side)? {
            table.add(i, label.degree(), 1);
        }
    }
    Ok(table)
}

/// What [`normalize`] did to a spec.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct NormalizationReport {
    /// `u = v`.
    pub principal: bool,
    /// Total number of leading variables dropped by re-indexing.
    pub reindexed_by: usize,
    /// Number of common minimal variables divided out; Betti numbers of the
    /// original ideal sit this many internal degrees higher.
    pub degree_shift: usize,
}

/// Reduces a spec without changing whether it has a linear resolution:
/// (a) `u = v` is flagged principal; (b) when `min(u) > 1` the unused
/// leading variables are dropped; (c) while `min(u) = min(v)` the common
/// variable is divided out. Steps (b) and (c) repeat until neither applies.
pub fn normalize(spec: &LexsegmentSpec) -> (LexsegmentSpec, NormalizationReport) {
    let mut report = NormalizationReport::default();
    let mut current = spec.clone();
    loop {
        if current.is_principal() {
            report.principal = true;
            break;
        }
        let Params { n, d, t } = current.params();
        let low = current.u().min_index();
        if low > 1 {
            let offset = low - 1;
            let u = current
                .u()
                .shift_down(offset)
                .expect("u avoids low variables");
            let v = current
                .v()
                .shift_down(offset)
                .expect("v <= u avoids low variables");
            current = LexsegmentSpec::new(Params::new(n - offset, d, t), u, v)
                .expect("re-indexing keeps the segment valid");
            report.reindexed_by += offset;
            continue;
        }
        if current.v().min_index() == low {
            let u = current.u().div_var(low).expect("low in supp(u)");
            let v = current.v().div_var(low).expect("low in supp(v)");
            current = LexsegmentSpec::new(Params::new(n, d - 1, t), u, v)
                .expect("dividing out a common minimum keeps the segment valid");
            report.degree_shift += 1;
            continue;
        }
        break;
    }
    (current, report)
}

/// Which branch decided the linearity of a completely lexsegment ideal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum LinearReason {
    Principal,
    Initial,
    Final,
    Veronese,
    /// `i2 = 1 + t` on the normalized spec.
    SecondIndex,
    /// `i2 > 1 + t`; compares `x1 ω / x_max(ω)` for the largest `ω < v`
    /// with `x1 x_{i2-t} ... x_{id-t}`.
    LargestBelow {
        omega: String,
        product: String,
        bound: String,
    },
}

impl fmt::Display for LinearReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearReason::Principal => f.write_str("principal ideal"),
            LinearReason::Initial => f.write_str("initial segment"),
            LinearReason::Final => f.write_str("final segment"),
            LinearReason::Veronese => f.write_str("Veronese ideal"),
            LinearReason::SecondIndex => f.write_str("second index of u is 1 + t"),
            LinearReason::LargestBelow {
                omega,
                product,
                bound,
            } => {
                write!(
                    f,
                    "largest omega below v is {omega}; x1*omega/x_max = {product} against {bound}"
                )
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearVerdict {
    pub linear: bool,
    pub reason: LinearReason,
    pub normalized: LexsegmentSpec,
    pub report: NormalizationReport,
}

/// Decides whether a completely lexsegment ideal has a linear resolution.
/// Inputs that are not completely lexsegment are refused.
pub fn has_linear_resolution(spec: &LexsegmentSpec) -> Result<LinearVerdict> {
    let verdict = spec.decide_completely()?;
    if let Some(w) = verdict.witness {
        return Err(Error::NotCompletely {
            witness: w.to_string(),
        });
    }
    let (normalized, report) = normalize(spec);
    let done = |reason| {
        Ok(LinearVerdict {
            linear: true,
            reason,
            normalized: normalized.clone(),
            report: report.clone(),
        })
    };
    if report.principal {
        return done(LinearReason::Principal);
    }
    match normalized.kind() {
        SegmentKind::Veronese => return done(LinearReason::Veronese),
        SegmentKind::Initial => return done(LinearReason::Initial),
        SegmentKind::Final => return done(LinearReason::Final),
        SegmentKind::Arbitrary => {}
    }
    let Params { n, t, .. } = normalized.params();
    let idx = normalized.u().indices();
    // Non-initial with min(u) = 1 forces d >= 2.
    let i2 = idx[1];
    if i2 == 1 + t {
        return done(LinearReason::SecondIndex);
    }
    let omega = normalized
        .params()
        .iter_below(normalized.v())?
        .next()
        .expect("a non-final segment has an element below v");
    let product = omega
        .div_var(omega.max_index())
        .expect("max in support")
        .mul_var(1);
    let bound_idx: Vec<usize> = std::iter::once(1)
        .chain(idx[1..].iter().map(|&i| i - t))
        .collect();
    let bound = Monomial::from_indices(n, &bound_idx)?;
    let linear = product.cmp_lex(&bound) != std::cmp::Ordering::Greater;
    Ok(LinearVerdict {
        linear,
        reason: LinearReason::LargestBelow {
            omega: omega.to_string(),
            product: product.to_string(),
            bound: bound.to_string(),
        },
        normalized,
        report,
    })
}

/// `β_{i,i+d}(I) = Σ_{ω ∈ L^f(u)} C(n - min ω - (d-1)t, i)
///                - Σ_{ω ∈ L^f(v), ω ≠ v} C(max ω - (d-1)t - 1, i)`
/// for a completely lexsegment ideal with a linear resolution.
pub fn betti_completely_linear(spec: &LexsegmentSpec) -> Result<BettiTable> {
    if !has_linear_resolution(spec)?.linear {
        return Err(Error::NotLinear);
    }
    let Params { n, d, t } = spec.params();
    let (n, dd, t) = (n as i64, d as i64, t as i64);
    let shift = (dd - 1) * t;
    let final_u = spec.final_segment();
    let below_v: Vec<Monomial> = spec.params().iter_below(spec.v())?.collect();
    let mut table = BettiTable::new(Convention::Ideal);
    for i in 0..=n {
        let plus: i128 = final_u
            .iter()
            .map(|w| choose(n - w.min_index() as i64 - shift, i) as i128)
            .sum();
        let minus: i128 = below_v
            .iter()
            .map(|w| choose(w.max_index() as i64 - shift - 1, i) as i128)
            .sum();
        let value = u64::try_from(plus - minus).expect("Betti numbers are nonnegative");
        table.add(i as usize, i as usize + d, value);
    }
    Ok(table)
}
