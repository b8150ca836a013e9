use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{coeff, GridVar, Monomial, Polynomial};

/// Row and column index sets of a square minor of the generic matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MinorSpec {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorSpec {
    /// Both index sets must be strictly increasing, 1-based and of equal,
    /// positive length.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        assert!(!rows.is_empty() && rows.len() == cols.len(), "minor must be square and nonempty");
        assert!(rows[0] >= 1 && cols[0] >= 1, "indices are 1-based");
        assert!(rows.windows(2).all(|p| p[0] < p[1]), "rows must increase");
        assert!(cols.windows(2).all(|p| p[0] < p[1]), "cols must increase");
        MinorSpec { rows, cols }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `(i_d, j_d)`.
    pub fn southeast_corner(&self) -> (usize, usize) {
        (*self.rows.last().unwrap(), *self.cols.last().unwrap())
    }

    /// Cells `(i_a, j_{d+1-a})` of the main antidiagonal, top row first.
    pub fn antidiagonal(&self) -> Vec<(usize, usize)> {
        let d = self.size();
        (0..d).map(|a| (self.rows[a], self.cols[d - 1 - a])).collect()
    }

    pub fn antidiagonal_monomial(&self) -> Monomial {
        Monomial::from_factors(self.antidiagonal().into_iter().map(|(i, j)| (GridVar::new(i, j), 1)))
    }

    pub fn is_subminor_of(&self, other: &MinorSpec) -> bool {
        self.rows.iter().all(|r| other.rows.contains(r)) && self.cols.iter().all(|c| other.cols.contains(c))
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "m[{{{}}},{{{}}}]", join(&self.rows), join(&self.cols))
    }
}

/// Memoised cofactor expansion of generic minors, keyed by row/column
/// bitmasks. Shared sub-minors are expanded once.
#[derive(Debug, Default)]
pub struct MinorCache {
    dets: HashMap<(u64, u64), Polynomial>,
}

impl MinorCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The minor with the sign chosen so that its antidiagonal term has
    /// coefficient +1.
    pub fn minor(&mut self, spec: &MinorSpec) -> Polynomial {
        let d = spec.size();
        let det = self.det(mask(&spec.rows), mask(&spec.cols));
        if (d * (d - 1) / 2) % 2 == 1 {
            det.scale(&coeff(-1))
        } else {
            det
        }
    }

    fn det(&mut self, rows: u64, cols: u64) -> Polynomial {
        if rows == 0 {
            return Polynomial::constant(coeff(1));
        }
        if let Some(p) = self.dets.get(&(rows, cols)) {
            return p.clone();
        }
        let top = rows.trailing_zeros() as usize + 1;
        let rest = rows & (rows - 1);
        let mut out = Polynomial::zero();
        let mut sign = 1;
        let mut bits = cols;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            let sub = self.det(rest, cols & !(1 << (c - 1)));
            let x = Monomial::var(GridVar::new(top, c));
            out = &out + &sub.mul_term(&coeff(sign), &x);
            sign = -sign;
        }
        self.dets.insert((rows, cols), out.clone());
        out
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |m, &i| {
        assert!(i <= 64, "grid larger than 64 is not supported");
        m | (1 << (i - 1))
    })
}
