//! Monomials as dense exponent vectors, t-spread predicates, the
//! (squarefree) lexicographic orders, gap analysis, slex successors and the
//! σ/τ shifting operators.
//!
//! Variables are indexed from 1 to match the usual notation `x1, ..., xn`.

use std::cmp::Ordering;
use std::fmt;

use crate::binomial::choose;
use crate::error::{Error, Result};

/// A monomial `x1^a1 * ... * xn^an` in a polynomial ring with `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// Builds `x_{i1} * x_{i2} * ...`; repeated indices raise the exponent.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut exps = vec![0; n];
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::Parse {
                    input: format!("{indices:?}"),
                    reason: format!("index {i} outside 1..={n}"),
                });
            }
            exps[i - 1] += 1;
        }
        Ok(Monomial { exps })
    }

    pub fn variable(n: usize, i: usize) -> Result<Self> {
        Self::from_indices(n, &[i])
    }

    /// Number of variables of the ambient ring.
    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based); zero outside the ring.
    pub fn exponent(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices `i1 <= i2 <= ... <= id` with multiplicity.
    pub fn indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree());
        for (k, &e) in self.exps.iter().enumerate() {
            out.extend(std::iter::repeat_n(k + 1, e as usize));
        }
        out
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Bitmask of the support (bit `i-1` for `x_i`). Variables past the
    /// 128th are not represented, so the mask is only a divisibility
    /// prefilter in large rings.
    pub fn support_mask(&self) -> u128 {
        self.exps
            .iter()
            .take(128)
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u128, |acc, (k, _)| acc | (1u128 << k))
    }

    /// Smallest index in the support; `min(1) = 0`.
    pub fn min_index(&self) -> usize {
        self.exps.iter().position(|&e| e > 0).map_or(0, |k| k + 1)
    }

    /// Largest index in the support; `max(1) = 0`.
    pub fn max_index(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |k| k + 1)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `true` iff consecutive indices (with multiplicity) differ by at least `t`.
    /// Every monomial is 0-spread; 1-spread means squarefree.
    pub fn is_tspread(&self, t: usize) -> bool {
        let idx = self.indices();
        idx.windows(2).all(|w| w[1] - w[0] >= t)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// # Panics
    /// If the ambient rings differ.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "lcm across rings");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// `self * x_i`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial { exps }
    }

    /// `self / x_i`, or `None` when `x_i` does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponent(i) == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial { exps })
    }

    /// Pure lexicographic comparison with `x1 > x2 > ... > xn`: the monomial
    /// with the larger exponent at the first differing variable is larger.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Same monomial re-indexed by `x_i -> x_{i - offset}` in `n - offset`
    /// variables. Fails if a variable below `offset + 1` occurs.
    pub fn shift_down(&self, offset: usize) -> Result<Monomial> {
        if self.exps[..offset.min(self.exps.len())]
            .iter()
            .any(|&e| e > 0)
        {
            return Err(Error::ShiftOutOfRange {
                shift: offset,
                reason: format!("{self} uses a variable below x{}", offset + 1),
            });
        }
        Ok(Monomial {
            exps: self.exps[offset..].to_vec(),
        })
    }

    /// Parses `x1*x5*x8`, `x2^2*x3^2` or `1` as a monomial in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let s = s.trim();
        if s.is_empty() {
            return Err(err("empty input".into()));
        }
        let mut exps = vec![0u32; n];
        if s == "1" {
            return Ok(Monomial { exps });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor
                .strip_prefix('x')
                .ok_or_else(|| err(format!("factor `{factor}` does not start with `x`")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e),
                None => (body, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| err(format!("bad variable index in `{factor}`")))?;
            let exp: u32 = exp
                .parse()
                .map_err(|_| err(format!("bad exponent in `{factor}`")))?;
            if idx == 0 || idx > n {
                return Err(err(format!("variable x{idx} outside x1..x{n}")));
            }
            exps[idx - 1] += exp;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Squarefree lexicographic comparison of two monomials of equal degree:
/// `u >slex v` when the first differing index of `u` is smaller.
///
/// On monomials of a fixed degree this coincides with [`Monomial::cmp_lex`],
/// so it is also the order used on `M(n,d,0)`.
pub fn cmp_slex(u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.ambient() != v.ambient() {
        return Err(Error::AmbientMismatch {
            expected: u.ambient(),
            found: v.ambient(),
        });
    }
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch {
            left: u.degree(),
            right: v.degree(),
        });
    }
    Ok(v.indices().cmp(&u.indices()))
}

/// The parameters `(n, d, t)` of the family `M(n,d,t)` of t-spread
/// monomials of degree `d` in `n` variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Params {
    pub n: usize,
    pub d: usize,
    pub t: usize,
}

impl Params {
    pub fn new(n: usize, d: usize, t: usize) -> Self {
        Params { n, d, t }
    }

    /// `n >= 1 + (d-1)t` (and `n, d >= 1`).
    pub fn is_nonempty(&self) -> bool {
        self.n >= 1 && self.d >= 1 && self.n > (self.d - 1) * self.t
    }

    /// `|M(n,d,t)| = C(n - (d-1)(t-1), d)`, zero for an empty family.
    pub fn cardinality(&self) -> u64 {
        if !self.is_nonempty() {
            return 0;
        }
        let (n, d, t) = (self.n as i64, self.d as i64, self.t as i64);
        choose(n - (d - 1) * (t - 1), d)
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.is_nonempty() {
            Ok(())
        } else {
            Err(Error::EmptyFamily {
                n: self.n,
                d: self.d,
                t: self.t,
            })
        }
    }

    /// Checks that `m` belongs to `M(n,d,t)`.
    pub fn check(&self, m: &Monomial) -> Result<()> {
        if m.ambient() != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: m.ambient(),
            });
        }
        if m.degree() != self.d {
            return Err(Error::DegreeMismatch {
                left: m.degree(),
                right: self.d,
            });
        }
        if !m.is_tspread(self.t) {
            return Err(Error::NotTSpread {
                monomial: m.to_string(),
                t: self.t,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.check(m).is_ok()
    }

    /// `(max M(n,d,t), min M(n,d,t))` in the slex order.
    pub fn extremes(&self) -> Result<(Monomial, Monomial)> {
        self.require_nonempty()?;
        let (n, d, t) = (self.n, self.d, self.t);
        let top: Vec<usize> = (0..d).map(|j| 1 + j * t).collect();
        let bottom: Vec<usize> = (0..d).map(|j| n - (d - 1 - j) * t).collect();
        Ok((
            Monomial::from_indices(n, &top)?,
            Monomial::from_indices(n, &bottom)?,
        ))
    }

    /// All of `M(n,d,t)` in strictly decreasing slex order.
    pub fn enumerate(&self) -> Vec<Monomial> {
        self.iter().collect()
    }

    /// Iterator over `M(n,d,t)` from the maximum downwards.
    pub fn iter(&self) -> SlexIter {
        let start = self.extremes().ok().map(|(top, _)| top);
        SlexIter {
            params: *self,
            next: start,
        }
    }

    /// Iterator over the elements `<= start` (inclusive), descending.
    pub fn iter_from(&self, start: &Monomial) -> Result<SlexIter> {
        self.check(start)?;
        Ok(SlexIter {
            params: *self,
            next: Some(start.clone()),
        })
    }

    /// Iterator over the elements strictly below `start`, descending.
    pub fn iter_below(&self, start: &Monomial) -> Result<SlexIter> {
        let next = slex_successor(start, self)?;
        Ok(SlexIter {
            params: *self,
            next,
        })
    }
}

/// Descending slex walk driven by [`slex_successor`].
#[derive(Clone, Debug)]
pub struct SlexIter {
    params: Params,
    next: Option<Monomial>,
}

impl Iterator for SlexIter {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        let current = self.next.take()?;
        self.next = successor_unchecked(&current, &self.params);
        Some(current)
    }
}

/// Positions of positive gap widths of a t-spread monomial.
///
/// Position `j < d` has width `i_{j+1} - i_j - t`; the extra position `d`
/// has width `n - i_d`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GapProfile {
    pub widths: Vec<(usize, usize)>,
}

impl GapProfile {
    pub fn is_empty(&self) -> bool {
        self.widths.is_empty()
    }

    pub fn max_position(&self) -> Option<usize> {
        self.widths.last().map(|&(j, _)| j)
    }
}

fn profile_unchecked(indices: &[usize], p: &Params) -> GapProfile {
    let d = indices.len();
    let mut widths = Vec::new();
    for j in 0..d {
        let next = if j + 1 < d { indices[j + 1] } else { p.n + p.t };
        let w = next as i64 - indices[j] as i64 - p.t as i64;
        if w > 0 {
            widths.push((j + 1, w as usize));
        }
    }
    GapProfile { widths }
}

pub fn gap_profile(u: &Monomial, p: &Params) -> Result<GapProfile> {
    p.check(u)?;
    Ok(profile_unchecked(&u.indices(), p))
}

fn successor_unchecked(u: &Monomial, p: &Params) -> Option<Monomial> {
    let mut idx = u.indices();
    let pos = profile_unchecked(&idx, p).max_position()?;
    let base = idx[pos - 1] + 1;
    for (k, slot) in idx[pos - 1..].iter_mut().enumerate() {
        *slot = base + k * p.t;
    }
    Some(Monomial::from_indices(p.n, &idx).expect("successor stays inside the ring"))
}

/// The slex-largest element of `M(n,d,t)` strictly below `u`, or `None`
/// when `u` is the minimum.
pub fn slex_successor(u: &Monomial, p: &Params) -> Result<Option<Monomial>> {
    p.check(u)?;
    Ok(successor_unchecked(u, p))
}

/// `τ^s : x_{i_j} -> x_{i_j - (j-1)s}`, landing in `n - (d-1)s` variables.
/// Requires `m` to be s-spread.
pub fn shift_tau(m: &Monomial, s: usize) -> Result<Monomial> {
    let idx = m.indices();
    if idx.is_empty() {
        return Ok(m.clone());
    }
    if !m.is_tspread(s) {
        return Err(Error::ShiftOutOfRange {
            shift: s,
            reason: format!("{m} is not {s}-spread"),
        });
    }
    let d = idx.len();
    let n = m.ambient() - (d - 1) * s;
    let shifted: Vec<usize> = idx.iter().enumerate().map(|(j, &i)| i - j * s).collect();
    Monomial::from_indices(n, &shifted)
}

/// `σ^s : x_{i_j} -> x_{i_j + (j-1)s}`, landing in `n + (d-1)s` variables.
pub fn shift_sigma(m: &Monomial, s: usize) -> Monomial {
    let idx = m.indices();
    if idx.is_empty() {
        return m.clone();
    }
    let d = idx.len();
    let n = m.ambient() + (d - 1) * s;
    let shifted: Vec<usize> = idx.iter().enumerate().map(|(j, &i)| i + j * s).collect();
    Monomial::from_indices(n, &shifted).expect("σ stays inside the enlarged ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    #[test]
    fn spread_predicate() {
        assert!(m("x2*x4*x6", 6).is_tspread(2));
        assert!(!m("x2*x4*x6", 6).is_tspread(3));
        assert!(m("1", 4).is_tspread(7));
        assert!(m("x2^2*x3", 4).is_tspread(0));
        assert!(!m("x2^2*x3", 4).is_tspread(1));
    }

    #[test]
    fn min_max_of_one() {
        let one = Monomial::one(5);
        assert_eq!(one.min_index(), 0);
        assert_eq!(one.max_index(), 0);
        assert_eq!(one.to_string(), "1");
    }

    #[test]
    fn slex_comparisons() {
        use Ordering::*;
        assert_eq!(
            cmp_slex(&m("x1*x4*x7", 11), &m("x1*x5*x8", 11)).unwrap(),
            Greater
        );
        assert_eq!(
            cmp_slex(&m("x1*x5*x7", 7), &m("x2*x4*x6", 7)).unwrap(),
            Greater
        );
        assert_eq!(
            cmp_slex(&m("x1*x5*x7", 7), &m("x1*x5*x7", 7)).unwrap(),
            Equal
        );
        assert!(matches!(
            cmp_slex(&m("x1*x5", 7), &m("x1*x5*x7", 7)),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            cmp_slex(&m("x1*x5", 7), &m("x1*x5", 8)),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn lex_on_non_squarefree() {
        // x2^2*x6*x12 >lex x2*x4*x6*x9
        assert_eq!(
            m("x2^2*x6*x12", 12).cmp_lex(&m("x2*x4*x6*x9", 12)),
            Ordering::Greater
        );
        assert_eq!(
            m("x1*x2*x5", 11).cmp_lex(&m("x1*x2*x5", 11)),
            Ordering::Equal
        );
    }

    #[test]
    fn extremes_match_listings() {
        let (hi, lo) = Params::new(11, 3, 3).extremes().unwrap();
        assert_eq!(
            (hi.to_string(), lo.to_string()),
            ("x1*x4*x7".into(), "x5*x8*x11".into())
        );
        let (hi, lo) = Params::new(7, 4, 2).extremes().unwrap();
        assert_eq!(hi, lo);
        assert_eq!(hi.to_string(), "x1*x3*x5*x7");
        let (_, lo) = Params::new(12, 3, 3).extremes().unwrap();
        assert_eq!(lo.to_string(), "x6*x9*x12");
        assert!(matches!(
            Params::new(6, 3, 3).extremes(),
            Err(Error::EmptyFamily { .. })
        ));
    }

    #[test]
    fn cardinality_values() {
        assert_eq!(Params::new(11, 3, 3).cardinality(), 35);
        assert_eq!(Params::new(7, 3, 2).cardinality(), 10);
        for n in 1..9 {
            assert_eq!(Params::new(n, 1, 4).cardinality(), n as u64);
        }
        assert_eq!(Params::new(6, 3, 3).cardinality(), 0);
    }

    #[test]
    fn gap_profiles() {
        let p = Params::new(11, 3, 3);
        assert_eq!(
            gap_profile(&m("x1*x5*x8", 11), &p).unwrap().widths,
            vec![(1, 1), (3, 3)]
        );
        assert!(gap_profile(&m("x5*x8*x11", 11), &p).unwrap().is_empty());
        assert_eq!(
            gap_profile(&m("x1*x8*x11", 11), &p).unwrap().widths,
            vec![(1, 4)]
        );
        assert!(matches!(
            gap_profile(&m("x1*x2*x8", 11), &p),
            Err(Error::NotTSpread { .. })
        ));
    }

    #[test]
    fn successors() {
        let p = Params::new(11, 3, 3);
        let next = |s: &str| {
            slex_successor(&m(s, 11), &p)
                .unwrap()
                .map(|w| w.to_string())
        };
        assert_eq!(next("x1*x5*x11").as_deref(), Some("x1*x6*x9"));
        assert_eq!(next("x1*x8*x11").as_deref(), Some("x2*x5*x8"));
        assert_eq!(next("x5*x8*x11"), None);
    }

    #[test]
    fn successors_at_spread_zero() {
        // x1*x3^3 > x2^4 > x2^3*x3 > x2^2*x3^2 in degree 4, three variables.
        let p = Params::new(3, 4, 0);
        let seq: Vec<String> = p
            .iter_from(&m("x1*x3^3", 3))
            .unwrap()
            .take(4)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(seq, ["x1*x3^3", "x2^4", "x2^3*x3", "x2^2*x3^2"]);
    }

    #[test]
    fn enumeration() {
        let all = Params::new(11, 3, 3).enumerate();
        assert_eq!(all.len(), 35);
        assert_eq!(all[0].to_string(), "x1*x4*x7");
        assert_eq!(all[34].to_string(), "x5*x8*x11");
        let first: Vec<String> = Params::new(7, 3, 2).enumerate()[..7]
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(
            first,
            ["x1*x3*x5", "x1*x3*x6", "x1*x3*x7", "x1*x4*x6", "x1*x4*x7", "x1*x5*x7", "x2*x4*x6"]
        );
        assert_eq!(Params::new(7, 4, 2).enumerate().len(), 1);
        assert!(Params::new(5, 3, 3).enumerate().is_empty());
    }

    #[test]
    fn shifts() {
        let u = m("x1*x5*x8", 11);
        let t2 = shift_tau(&u, 2).unwrap();
        assert_eq!((t2.to_string(), t2.ambient()), ("x1*x3*x4".into(), 7));
        let t3 = shift_tau(&u, 3).unwrap();
        assert_eq!((t3.to_string(), t3.ambient()), ("x1*x2^2".into(), 5));
        assert_eq!(shift_sigma(&t3, 3), u);
        assert_eq!(shift_sigma(&t2, 2), u);
        assert!(matches!(
            shift_tau(&u, 4),
            Err(Error::ShiftOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_and_print() {
        for s in ["x1*x5*x8", "x2^2*x3^2", "1", "x1*x3^3"] {
            assert_eq!(m(s, 11).to_string(), s);
        }
        assert_eq!(m("x2 * x2", 3).to_string(), "x2^2");
        for bad in ["", "y1", "x0", "x12", "x1^", "x1**x2"] {
            assert!(Monomial::parse(bad, 11).is_err(), "{bad}");
        }
    }

    #[test]
    fn shift_down_reindexes() {
        let w = m("x2*x6*x9", 12).shift_down(1).unwrap();
        assert_eq!((w.to_string(), w.ambient()), ("x1*x5*x8".into(), 11));
        assert!(m("x1*x6", 12).shift_down(1).is_err());
    }
}
