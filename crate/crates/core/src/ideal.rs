//! Monomial ideals given by their minimal generating set.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Params};

/// A monomial ideal of `K[x1..xn]` stored through `G(I)`.
///
/// Generators are sorted by increasing degree, then decreasing lex. The zero
/// ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn generator_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp_lex(a))
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Reduces `gens` to a minimal generating set: deduplicated, no generator
    /// dividing another, deterministically sorted.
    pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut candidates = Vec::new();
        for g in gens {
            if g.ambient() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: g.ambient(),
                });
            }
            if seen.insert(g.clone()) {
                candidates.push(g);
            }
        }
        candidates.sort_by(generator_order);
        let mut kept: Vec<(u128, Monomial)> = Vec::new();
        for c in candidates {
            let mask = c.support_mask();
            let redundant = kept.iter().any(|(km, k)| km & !mask == 0 && k.divides(&c));
            if !redundant {
                kept.push((mask, c));
            }
        }
        Ok(MonomialIdeal {
            n,
            gens: kept.into_iter().map(|(_, g)| g).collect(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// `G(I)`.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Minimum generator degree; `None` for the zero ideal.
    pub fn indeg(&self) -> Option<usize> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// Sorted, deduplicated generator degrees.
    pub fn generator_degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.gens.iter().map(Monomial::degree).collect();
        ds.dedup();
        ds
    }

    /// `Some(d)` when every generator has degree `d`.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        match self.generator_degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.gens
            .iter()
            .any(|g| g.support_mask() & !mask == 0 && g.divides(m))
    }

    fn require_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// `A ∩ B`, generated by the pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_ring(other)?;
        let mut lcms = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                lcms.insert(a.lcm(b));
            }
        }
        MonomialIdeal::minimalize(self.n, lcms)
    }

    /// `A + B`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.require_same_ring(other)?;
        MonomialIdeal::minimalize(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `[I_d]_t`: the t-spread monomials of degree `d` lying in the ideal,
    /// in decreasing slex order.
    pub fn graded_tspread_piece(&self, d: usize, t: usize) -> Vec<Monomial> {
        Params::new(self.n, d, t)
            .iter()
            .filter(|w| self.contains(w))
            .collect()
    }

    pub fn is_tspread(&self, t: usize) -> bool {
        self.gens.iter().all(|g| g.is_tspread(t))
    }

    /// The t-spread strong stability exchange property: for every generator
    /// `u`, `j` in its support and `i < j` (or `i > j` when `reversed`) with
    /// `x_i u / x_j` t-spread of the same degree, `x_i u / x_j` lies in the
    /// ideal.
    pub fn is_strongly_stable_tspread(&self, t: usize, reversed: bool) -> Result<bool> {
        if !self.is_tspread(t) {
            return Err(Error::InvalidParams(format!("ideal is not {t}-spread")));
        }
        for u in &self.gens {
            for j in u.support() {
                let quotient = u.div_var(j).expect("j in support");
                let range: Box<dyn Iterator<Item = usize>> = if reversed {
                    Box::new(j + 1..=self.n)
                } else {
                    Box::new(1..j)
                };
                for i in range {
                    let w = quotient.mul_var(i);
                    if w.is_tspread(t) && !self.contains(&w) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Renames `x_i -> x_{perm[i-1]}` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        if perm.len() != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &k in perm {
            if k == 0 || k > self.n || std::mem::replace(&mut seen[k - 1], true) {
                return Err(Error::InvalidParams(format!(
                    "{perm:?} is not a permutation of 1..={}",
                    self.n
                )));
            }
        }
        let gens = self.gens.iter().map(|g| {
            let mut exps = vec![0; self.n];
            for (k, &e) in g.exponents().iter().enumerate() {
                exps[perm[k] - 1] = e;
            }
            Monomial::from_exponents(exps)
        });
        MonomialIdeal::minimalize(self.n, gens)
    }

    /// Parses a comma-separated generator list such as `x1*x5*x7, x2*x4*x6`.
    pub fn parse(s: &str, n: usize) -> Result<MonomialIdeal> {
        let gens = s
            .split(',')
            .map(str::trim)
            .filter(|g| !g.is_empty())
            .map(|g| Monomial::parse(g, n))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(n, gens)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    gens: Vec<String>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            n: self.n,
            gens: self.gens.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(d)?;
        let gens = repr
            .gens
            .iter()
            .map(|g| Monomial::parse(g, repr.n))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        MonomialIdeal::minimalize(repr.n, gens).map_err(serde::de::Error::custom)
    }
}
