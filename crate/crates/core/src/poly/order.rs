use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{GridVar, Monomial};

/// How variables are ranked against each other; a larger rank is a larger
/// variable.
#[derive(Clone)]
pub enum VarRanking {
    /// `x[i,j] > x[k,l]` iff `j > l`, or `j == l` and `i < k`.
    AntiDiagonal,
    /// Mirror image under transposition: `x[i,j] > x[k,l]` iff `i > k`, or
    /// `i == k` and `j < l`.
    AntiDiagonalTranspose,
    /// Arbitrary ranking; unlisted variables rank below every listed one.
    Explicit(Arc<HashMap<GridVar, u32>>),
}

impl VarRanking {
    fn rank(&self, v: GridVar) -> u32 {
        let (r, c) = (u32::from(v.row), u32::from(v.col));
        match self {
            VarRanking::AntiDiagonal => (c << 16) | (0xffff - r),
            VarRanking::AntiDiagonalTranspose => (r << 16) | (0xffff - c),
            VarRanking::Explicit(map) => map.get(&v).map_or(0, |&k| k + 1),
        }
    }
}

/// A monomial order: lexicographic in a variable ranking, optionally
/// refined by total degree first.
#[derive(Clone)]
pub struct TermOrder {
    name: String,
    graded: bool,
    ranking: VarRanking,
}

/// Sort key realising a [`TermOrder`]: comparing keys compares monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey {
    degree: u32,
    /// `(variable rank, exponent)`, largest variable first.
    lex: Vec<(u32, u32)>,
}

impl TermOrder {
    pub fn new(name: impl Into<String>, graded: bool, ranking: VarRanking) -> Self {
        TermOrder { name: name.into(), graded, ranking }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn key(&self, m: &Monomial) -> OrderKey {
        let mut lex: Vec<(u32, u32)> =
            m.factors().iter().map(|&(v, e)| (self.ranking.rank(v), e)).collect();
        lex.sort_unstable_by(|a, b| b.cmp(a));
        let degree = if self.graded { m.degree() } else { 0 };
        OrderKey { degree, lex }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn var_cmp(&self, a: GridVar, b: GridVar) -> Ordering {
        self.ranking.rank(a).cmp(&self.ranking.rank(b))
    }
}

impl fmt::Debug for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TermOrder({})", self.name)
    }
}

impl PartialEq for TermOrder {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.graded == other.graded
    }
}

/// The default antidiagonal order on the `n x n` grid: lexicographic with
/// columns right-to-left and, within a column, rows top-to-bottom. The lead
/// term of every minor of the generic matrix is its antidiagonal product.
pub fn antidiagonal_order(_n: usize) -> TermOrder {
    TermOrder::new("antidiag", false, VarRanking::AntiDiagonal)
}

/// Second antidiagonal order, obtained from the first by transposing.
pub fn antidiagonal_transpose_order(_n: usize) -> TermOrder {
    TermOrder::new("antidiag-transpose", false, VarRanking::AntiDiagonalTranspose)
}
