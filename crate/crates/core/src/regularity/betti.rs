use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{GridVar, Monomial};

/// Default budget on the number of minimal generators given to the oracle.
pub const DEFAULT_GENERATOR_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

/// Graded Betti numbers `β_{i,j}` of a quotient ring. Always holds
/// `β_{0,0} = 1`; zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<BettiEntry>", try_from = "Vec<BettiEntry>")]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    /// The table of the ring itself.
    pub fn unit() -> Self {
        BettiTable { entries: BTreeMap::from([((0, 0), 1)]) }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    fn add(&mut self, i: usize, j: usize, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta }).collect()
    }

    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Table of the tensor product of two quotients in disjoint variables.
    pub fn convolve(&self, other: &BettiTable) -> BettiTable {
        let mut out = BettiTable { entries: BTreeMap::new() };
        for (&(i, j), &a) in &self.entries {
            for (&(k, l), &b) in &other.entries {
                out.add(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl From<BettiTable> for Vec<BettiEntry> {
    fn from(t: BettiTable) -> Self {
        t.entries()
    }
}

impl TryFrom<Vec<BettiEntry>> for BettiTable {
    type Error = String;

    fn try_from(v: Vec<BettiEntry>) -> std::result::Result<Self, String> {
        let mut t = BettiTable { entries: BTreeMap::new() };
        for e in v {
            if e.j < e.i {
                return Err(format!("entry ({}, {}) below the diagonal", e.i, e.j));
            }
            t.add(e.i, e.j, e.beta);
        }
        if t.get(0, 0) != 1 {
            return Err("beta(0,0) must be 1".into());
        }
        Ok(t)
    }
}

/// Graded Betti numbers of `R/I` for a squarefree monomial ideal `I`.
///
/// For each `m` in the lcm lattice, `β_{i,m} = dim H̃_{i-2}(K_m)` where `K_m`
/// is the complex of generator subsets of `m` whose lcm is strictly smaller
/// than `m`. Ranks are computed exactly over the rationals. Non-minimal
/// generators are discarded first.
pub fn betti_oracle(gens: &[Monomial]) -> Result<BettiTable> {
    betti_oracle_with_cap(gens, DEFAULT_GENERATOR_CAP)
}

pub fn betti_oracle_with_cap(gens: &[Monomial], cap: usize) -> Result<BettiTable> {
    if let Some(g) = gens.iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NonSquarefree(g.to_string()));
    }
    let masks = squarefree_masks(gens)?;
    let s = masks.len();
    if s > cap {
        return Err(Error::CapExceeded { what: "generators", value: s, cap });
    }
    let mut lcm = vec![0u128; 1 << s];
    for sub in 1usize..(1 << s) {
        let low = sub.trailing_zeros() as usize;
        lcm[sub] = lcm[sub & (sub - 1)] | masks[low];
    }
    let lattice: BTreeSet<u128> = lcm[1..].iter().copied().collect();
    let contributions: Vec<Vec<(usize, usize, u64)>> = lattice
        .par_iter()
        .map(|&m| {
            let below = (0..s).filter(|&k| masks[k] & !m == 0).fold(0usize, |acc, k| acc | 1 << k);
            let degree = m.count_ones() as usize;
            reduced_homology(below, m, &lcm)
                .into_iter()
                .enumerate()
                .filter(|&(_, h)| h > 0)
                .map(|(q, h)| (q + 1, degree, h))
                .collect()
        })
        .collect();
    let mut table = BettiTable::unit();
    for (i, j, b) in contributions.into_iter().flatten() {
        table.add(i, j, b);
    }
    Ok(table)
}

/// Minimal generators as variable bitmasks.
fn squarefree_masks(gens: &[Monomial]) -> Result<Vec<u128>> {
    let vars: BTreeSet<GridVar> = gens.iter().flat_map(|g| g.vars()).collect();
    if vars.len() > 128 {
        return Err(Error::CapExceeded { what: "variables", value: vars.len(), cap: 128 });
    }
    let index: HashMap<GridVar, usize> = vars.into_iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut masks: Vec<u128> =
        gens.iter().map(|g| g.vars().fold(0u128, |acc, v| acc | 1 << index[&v])).collect();
    masks.sort_unstable();
    masks.dedup();
    let minimal = masks
        .iter()
        .copied()
        .filter(|&a| !masks.iter().any(|&b| b != a && b & !a == 0))
        .collect();
    Ok(minimal)
}

/// `dim H̃_q(K_m)` for `q = -1, 0, …`, returned with index `q + 1`.
fn reduced_homology(below: usize, m: u128, lcm: &[u128]) -> Vec<u64> {
    let top = below.count_ones() as usize;
    let mut faces: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    let mut sub = below;
    loop {
        if lcm[sub] != m {
            faces[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & below;
    }
    let index: Vec<HashMap<usize, usize>> = faces
        .iter()
        .map(|f| f.iter().enumerate().map(|(k, &x)| (x, k)).collect())
        .collect();
    // rank of the boundary from faces of size `size` to size `size - 1`
    let ranks: Vec<usize> = (0..=top)
        .map(|size| {
            if size == 0 || faces[size].is_empty() {
                return 0;
            }
            let rows = faces[size].iter().map(|&f| {
                let mut row: Vec<(usize, BigInt)> = Vec::with_capacity(size);
                let mut rest = f;
                let mut t = 0;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    let sign = if t % 2 == 0 { 1 } else { -1 };
                    row.push((index[size - 1][&(f & !bit)], BigInt::from(sign)));
                    t += 1;
                }
                row.sort_by_key(|&(c, _)| c);
                row
            });
            rank(rows)
        })
        .collect();
    // faces of size `q + 2` carry H̃_q
    (0..top)
        .map(|size| {
            let next = ranks.get(size + 1).copied().unwrap_or(0);
            (faces[size].len() - ranks[size] - next) as u64
        })
        .collect()
}

type Row = Vec<(usize, BigInt)>;

/// Rank over the rationals by incremental fraction-free echelon reduction;
/// each row is kept primitive.
fn rank(rows: impl Iterator<Item = Row>) -> usize {
    let mut pivots: HashMap<usize, Row> = HashMap::new();
    for mut row in rows {
        while let Some((lead, _)) = row.first() {
            let Some(p) = pivots.get(lead) else {
                pivots.insert(*lead, row);
                break;
            };
            row = eliminate(&row, p);
        }
    }
    pivots.len()
}

/// `a·row - b·pivot` cancelling the shared leading column, divided by the
/// content.
fn eliminate(row: &Row, pivot: &Row) -> Row {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let (a, b) = (a / &g, b / &g);
    let mut out: Row = Vec::with_capacity(row.len() + pivot.len());
    let (mut x, mut y) = (1, 1);
    while x < row.len() || y < pivot.len() {
        let cx = row.get(x).map(|e| e.0).unwrap_or(usize::MAX);
        let cy = pivot.get(y).map(|e| e.0).unwrap_or(usize::MAX);
        let (col, v) = if cx < cy {
            x += 1;
            (cx, &a * &row[x - 1].1)
        } else if cy < cx {
            y += 1;
            (cy, -(&b * &pivot[y - 1].1))
        } else {
            x += 1;
            y += 1;
            (cx, &a * &row[x - 1].1 - &b * &pivot[y - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    let content = out.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if !content.is_zero() && content.abs() != BigInt::from(1) {
        for e in &mut out {
            e.1 /= &content;
        }
    }
    out
}

/// Whether the Betti table of the combined ideal is the convolution of the
/// two tables and the regularities add.
pub fn convolution_check(gens1: &[Monomial], gens2: &[Monomial]) -> Result<bool> {
    convolution_check_with_cap(gens1, gens2, DEFAULT_GENERATOR_CAP)
}

pub fn convolution_check_with_cap(gens1: &[Monomial], gens2: &[Monomial], cap: usize) -> Result<bool> {
    let support = |g: &[Monomial]| g.iter().flat_map(|m| m.vars()).collect::<BTreeSet<_>>();
    if !support(gens1).is_disjoint(&support(gens2)) {
        return Err(Error::OverlappingSupports);
    }
    let t1 = betti_oracle_with_cap(gens1, cap)?;
    let t2 = betti_oracle_with_cap(gens2, cap)?;
    let both: Vec<Monomial> = gens1.iter().chain(gens2).cloned().collect();
    let t = betti_oracle_with_cap(&both, cap)?;
    Ok(t == t1.convolve(&t2) && t.regularity() == t1.regularity() + t2.regularity())
}
