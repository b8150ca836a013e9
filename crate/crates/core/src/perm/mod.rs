//! Permutations in one-line notation and the combinatorics built on them:
//! rank tables, Rothe diagrams, essential sets, pattern containment and the
//! decomposition of a diagram into parts.

mod diagram;
mod parts;
mod pattern;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use diagram::{
    diagram_components, essential_set, rank_table, rothe_diagram, Diagram, DiagramComponent,
    EssentialBox, EssentialSet, RankTable,
};
pub use parts::{dominant_of_shape, is_dominant, parts, Part};
pub use pattern::{
    contains_pattern, enumerate_avoiders, for_each_avoider, is_binomial_pattern, is_vexillary,
    is_vexillary_by_essential_chain, max_essential_rank, rank_bound_patterns, schroder,
    DEFAULT_ENUMERATION_CAP,
};

/// A permutation of `{1, ..., n}` stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{word:?} is not a bijection on 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation { word: (1..=n).collect() }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Coxeter length.
    pub fn inversions(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Embeds into `S_m` by fixing `n+1, ..., m`.
    pub fn pad(&self, m: usize) -> Permutation {
        assert!(m >= self.size(), "cannot pad S_{} into S_{m}", self.size());
        let mut word = self.word.clone();
        word.extend(self.size() + 1..=m);
        Permutation { word }
    }

    /// `1^k x self`: shifts the word up by `k` and prepends the fixed points.
    pub fn shift(&self, k: usize) -> Permutation {
        let word = (1..=k).chain(self.word.iter().map(|&v| v + k)).collect();
        Permutation { word }
    }

    /// Every permutation of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut w = current.clone();
            if next_lexicographic(&mut w) {
                next = Some(w);
            }
            Some(Permutation { word: current })
        })
    }

    /// Every permutation of `S_n` whose first entry is `first`, in
    /// lexicographic order. Used to split sweeps by prefix.
    pub fn all_with_first(n: usize, first: usize) -> impl Iterator<Item = Permutation> {
        assert!(first >= 1 && first <= n);
        let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
        let mut next = Some(rest);
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut w = current.clone();
            if next_lexicographic(&mut w) {
                next = Some(w);
            }
            let mut word = Vec::with_capacity(n);
            word.push(first);
            word.extend(current);
            Some(Permutation { word })
        })
    }
}

fn next_lexicographic(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl fmt::Display for Permutation {
    /// Comma-separated one-line notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

/// Parses comma/whitespace separated one-line notation, or a bare digit
/// string such as `31425` for `n <= 9`.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let separated = text.contains(|c: char| c == ',' || c.is_whitespace());
    let word = if separated {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    Permutation::new(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_digit_strings_and_lists() {
        let w = parse_permutation("31425").unwrap();
        assert_eq!(w.word(), &[3, 1, 4, 2, 5]);
        assert_eq!(parse_permutation("1").unwrap(), Permutation::identity(1));
        let big = parse_permutation("2,10,1,3,4,5,6,7,8,9").unwrap();
        assert_eq!(big.size(), 10);
        assert_eq!(big.at(2), 10);
        assert_eq!(parse_permutation(" 3 1 2 ").unwrap().word(), &[3, 1, 2]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(parse_permutation(""), Err(Error::EmptyInput));
        assert!(parse_permutation("112").is_err());
        assert!(parse_permutation("24").is_err());
        assert!(parse_permutation("1,x").is_err());
        assert!(parse_permutation("0").is_err());
    }

    #[test]
    fn display_round_trips() {
        let w = parse_permutation("2,10,1,3,4,5,6,7,8,9").unwrap();
        assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let all: Vec<_> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let split: usize = (1..=4).map(|f| Permutation::all_with_first(4, f).count()).sum();
        assert_eq!(split, 24);
        assert_eq!(Permutation::all(1).count(), 1);
    }

    #[test]
    fn inverse_and_shift() {
        let w = parse_permutation("31425").unwrap();
        assert_eq!(w.inverse().word(), &[2, 4, 1, 3, 5]);
        assert_eq!(w.inverse().inverse(), w);
        assert_eq!(parse_permutation("21").unwrap().shift(1).word(), &[1, 3, 2]);
        assert_eq!(w.pad(6).word(), &[3, 1, 4, 2, 5, 6]);
        assert_eq!(w.inversions(), 3);
    }
}
