//! Formula-free Betti numbers of monomial ideals.
//!
//! For a multidegree `b`, the upper Koszul simplicial complex `K^b(I)` has
//! as faces the squarefree `τ ⊆ supp(b)` with `x^{b-τ} ∈ I`, and
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b(I); k)`. Nonzero multigraded Betti numbers
//! only occur at lcms of subsets of `G(I)`, so those are the only
//! multidegrees visited. Homology is computed over a prime field by
//! Gaussian elimination of the simplicial boundary matrices.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{BettiTable, Convention};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Largest vertex count for which faces are enumerated.
pub const MAX_VERTICES: usize = 24;

/// `GF(p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub const DEFAULT_CHAR: u64 = 32003;

    pub fn new(p: u64) -> Result<Self> {
        let is_prime = p >= 2
            && (2..)
                .take_while(|k| k * k <= p)
                .all(|k| !p.is_multiple_of(k));
        if !is_prime || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    /// Rank of a dense matrix with entries already reduced mod `p`.
    pub fn rank(&self, mut rows: Vec<Vec<u64>>) -> usize {
        let p = self.p;
        let ncols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = self.inv(rows[rank][col]);
            for x in rows[rank][col..].iter_mut() {
                *x = *x * inv % p;
            }
            let (top, rest) = rows.split_at_mut(rank + 1);
            let prow = &top[rank];
            for row in rest.iter_mut() {
                let factor = row[col];
                if factor == 0 {
                    continue;
                }
                for (x, &y) in row[col..].iter_mut().zip(&prow[col..]) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField {
            p: Self::DEFAULT_CHAR,
        }
    }
}

/// `K^b(I)` with faces stored as bitmasks over `vertices`.
#[derive(Clone, Debug)]
pub struct UpperKoszulComplex {
    multidegree: Monomial,
    vertices: Vec<usize>,
    facets: Vec<u64>,
    /// `faces[s]` are the faces with `s` vertices; `faces[0]` holds the
    /// empty face unless the complex is void.
    faces: Vec<Vec<u64>>,
}

fn maximal_facets(ideal: &MonomialIdeal, b: &Monomial, vertices: &[usize]) -> Vec<u64> {
    let mut facets: Vec<u64> = ideal
        .gens()
        .iter()
        .filter(|g| g.divides(b))
        .map(|g| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &x)| b.exponent(x) > g.exponent(x))
                .fold(0u64, |acc, (k, _)| acc | (1 << k))
        })
        .collect();
    facets.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
    let mut maximal: Vec<u64> = Vec::new();
    for f in facets {
        if !maximal.iter().any(|m| f & !m == 0) {
            maximal.push(f);
        }
    }
    maximal
}

impl UpperKoszulComplex {
    pub fn new(ideal: &MonomialIdeal, b: &Monomial) -> Result<Self> {
        if b.ambient() != ideal.ambient() {
            return Err(Error::AmbientMismatch {
                expected: ideal.ambient(),
                found: b.ambient(),
            });
        }
        let vertices = b.support();
        if vertices.len() > MAX_VERTICES {
            return Err(Error::InvalidParams(format!(
                "multidegree {b} has {} variables; at most {MAX_VERTICES} are supported",
                vertices.len()
            )));
        }
        let facets = maximal_facets(ideal, b, &vertices);
        let k = vertices.len();
        let mut is_face = vec![false; 1 << k];
        let mut faces = vec![Vec::new(); k + 1];
        for mask in 0..(1u64 << k) {
            if facets.iter().any(|f| mask & !f == 0) {
                is_face[mask as usize] = true;
                faces[mask.count_ones() as usize].push(mask);
            }
        }
        for s in faces.iter().flatten() {
            let mut bits = *s;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                if !is_face[(s & !low) as usize] {
                    return Err(Error::NotFaceClosed(format!("{b}")));
                }
                bits &= bits - 1;
            }
        }
        Ok(UpperKoszulComplex {
            multidegree: b.clone(),
            vertices,
            facets,
            faces,
        })
    }

    pub fn multidegree(&self) -> &Monomial {
        &self.multidegree
    }

    /// `x^b ∉ I`: not even the empty face.
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Every facet shares a vertex, so the complex is contractible.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(!0u64, |acc, f| acc & f) != 0
    }

    /// Face counts by number of vertices, starting with the empty face.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Faces with `size` vertices as sorted variable indices.
    pub fn faces(&self, size: usize) -> Vec<Vec<usize>> {
        self.faces
            .get(size)
            .map(|fs| {
                fs.iter()
                    .map(|&m| {
                        (0..self.vertices.len())
                            .filter(|k| m & (1 << k) != 0)
                            .map(|k| self.vertices[k])
                            .collect()
                    })
                    .collect()
            })
            .unwrap_or_default()
    }

    /// `Σ_s (-1)^(s-1) f_s`, the reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(s, &f)| if s % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum()
    }

    fn boundary_rank(&self, size: usize, field: &PrimeField) -> usize {
        if size == 0 || size >= self.faces.len() {
            return 0;
        }
        let (cols, rows) = (&self.faces[size], &self.faces[size - 1]);
        if cols.is_empty() || rows.is_empty() {
            return 0;
        }
        let row_of: HashMap<u64, usize> = rows.iter().enumerate().map(|(r, &m)| (m, r)).collect();
        let p = field.characteristic();
        let mut matrix = vec![vec![0u64; cols.len()]; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            let mut bits = face;
            let mut position = 0;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                let r = row_of[&(face & !low)];
                matrix[r][c] = if position % 2 == 0 { 1 } else { p - 1 };
                position += 1;
                bits &= bits - 1;
            }
        }
        field.rank(matrix)
    }

    /// `dim H̃_{s-1}` for `s = 0..=|vertices|`, i.e. entry `s` is the reduced
    /// homology in dimension `s - 1`.
    pub fn reduced_homology(&self, field: &PrimeField) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.faces.len())
            .map(|s| self.boundary_rank(s, field))
            .collect();
        (0..self.faces.len())
            .map(|s| self.faces[s].len() - ranks[s] - ranks[s + 1])
            .collect()
    }
}

/// The lcm lattice of `G(I)`: all lcms of nonempty generator subsets.
pub fn candidate_degrees(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let l = m.lcm(g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp_lex(a)));
    out
}

fn in_lcm_lattice(ideal: &MonomialIdeal, b: &Monomial) -> bool {
    let divisors: Vec<&Monomial> = ideal.gens().iter().filter(|g| g.divides(b)).collect();
    match divisors.split_first() {
        None => false,
        Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, g| acc.lcm(g)) == *b,
    }
}

/// `i -> β_{i,b}(I)`, nonzero entries only.
pub fn betti_multigraded(
    ideal: &MonomialIdeal,
    b: &Monomial,
    field: &PrimeField,
) -> Result<BTreeMap<usize, u64>> {
    let mut out = BTreeMap::new();
    if b.ambient() != ideal.ambient() {
        return Err(Error::AmbientMismatch {
            expected: ideal.ambient(),
            found: b.ambient(),
        });
    }
    if !in_lcm_lattice(ideal, b) {
        return Ok(out);
    }
    let vertices = b.support();
    let facets = maximal_facets(ideal, b, &vertices);
    if facets.iter().fold(!0u64, |acc, f| acc & f) != 0 {
        return Ok(out);
    }
    let complex = UpperKoszulComplex::new(ideal, b)?;
    for (s, h) in complex.reduced_homology(field).into_iter().enumerate() {
        if h > 0 {
            out.insert(s, h as u64);
        }
    }
    Ok(out)
}

/// Total-degree Betti table of `I` (ideal convention).
pub fn betti_table_oracle(ideal: &MonomialIdeal, field: &PrimeField) -> Result<BettiTable> {
    let candidates = candidate_degrees(ideal);
    let per_degree: Vec<(usize, BTreeMap<usize, u64>)> = candidates
        .par_iter()
        .map(|b| Ok((b.degree(), betti_multigraded(ideal, b, field)?)))
        .collect::<Result<_>>()?;
    let mut table = BettiTable::new(Convention::Ideal);
    for (deg, betti) in per_degree {
        for (i, c) in betti {
            table.add(i, deg, c);
        }
    }
    Ok(table)
}

/// Linearity verdict for an ideal generated in the single degree `d`.
pub fn is_linear_oracle(ideal: &MonomialIdeal, d: usize, field: &PrimeField) -> Result<bool> {
    if ideal.equigenerated_degree() != Some(d) {
        return Err(Error::NotEquigenerated(d));
    }
    Ok(betti_table_oracle(ideal, field)?.is_linear(d))
}

/// JSON envelope for oracle output.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub method: &'static str,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub table: BettiTable,
}

impl OracleReport {
    pub fn new(field: &PrimeField, table: BettiTable) -> Self {
        OracleReport {
            method: "homology",
            characteristic: field.characteristic(),
            table,
        }
    }
}
