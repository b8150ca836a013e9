//! Structural properties of elusive minors, checked directly on the
//! diagram and rank table.

use std::fmt;

use serde::Serialize;

use super::MinorSpec;
use crate::perm::{Diagram, RankTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaViolation {
    pub minor: MinorSpec,
    pub detail: String,
}

impl fmt::Display for LemmaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.minor, self.detail)
    }
}

/// The southeast corner `(i_d, j_d)` lies in the diagram.
pub fn check_corner_lemma(m: &MinorSpec, diagram: &Diagram) -> Option<LemmaViolation> {
    let corner = m.southeast_corner();
    (!diagram.contains(corner)).then(|| LemmaViolation {
        minor: m.clone(),
        detail: format!("southeast corner {corner:?} is outside the diagram"),
    })
}

/// For `a < d`, every diagram cell `(i_a, j)` with `j >= j_d` has
/// `r(i_a, j) >= a`; symmetrically every cell `(i, j_b)` with `i >= i_d`
/// has `r(i, j_b) >= b`.
pub fn check_rank_lemma(m: &MinorSpec, diagram: &Diagram, ranks: &RankTable) -> Vec<LemmaViolation> {
    let d = m.size();
    let (id, jd) = m.southeast_corner();
    let mut out = Vec::new();
    for a in 1..d {
        let row = m.rows[a - 1];
        for &(i, j) in diagram.cells().iter().filter(|c| c.0 == row && c.1 >= jd) {
            if ranks.get(i, j) < a {
                out.push(LemmaViolation {
                    minor: m.clone(),
                    detail: format!("r({i},{j}) = {} < {a}", ranks.get(i, j)),
                });
            }
        }
        let col = m.cols[a - 1];
        for &(i, j) in diagram.cells().iter().filter(|c| c.1 == col && c.0 >= id) {
            if ranks.get(i, j) < a {
                out.push(LemmaViolation {
                    minor: m.clone(),
                    detail: format!("r({i},{j}) = {} < {a}", ranks.get(i, j)),
                });
            }
        }
    }
    out
}

/// For a proper sub-minor `sub` of `m` that is itself a generator, every
/// antidiagonal entry of `sub`, at position `(a, b)` inside `m`, satisfies
/// `a + b <= d - 1`: weakly northwest of the `(d-2)`th antidiagonal of `m`.
pub fn check_antidiagonal_lemma(m: &MinorSpec, sub: &MinorSpec) -> Option<LemmaViolation> {
    debug_assert!(sub.is_subminor_of(m) && sub.size() < m.size());
    let d = m.size();
    let pos = |v: usize, idx: &[usize]| idx.iter().position(|&x| x == v).unwrap() + 1;
    sub.antidiagonal().into_iter().find_map(|(i, j)| {
        let (a, b) = (pos(i, &m.rows), pos(j, &m.cols));
        (a + b > d - 1).then(|| LemmaViolation {
            minor: m.clone(),
            detail: format!("sub-minor {sub} has antidiagonal entry at ({a},{b}) past antidiagonal {}", d - 2),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::elusive_minors;
    use crate::perm::{parse_permutation, rank_table, rothe_diagram};

    #[test]
    fn lemmas_hold_on_31542() {
        let w = parse_permutation("31542").unwrap();
        let (d, r) = (rothe_diagram(&w), rank_table(&w));
        let elusive = elusive_minors(&w);
        for m in &elusive {
            assert_eq!(check_corner_lemma(m, &d), None);
            assert!(check_rank_lemma(m, &d, &r).is_empty());
            for s in elusive.iter().filter(|s| s.size() < m.size() && s.is_subminor_of(m)) {
                assert_eq!(check_antidiagonal_lemma(m, s), None);
            }
        }
    }

    #[test]
    fn antidiagonal_lemma_flags_a_southeast_subminor() {
        let m = MinorSpec::new(vec![1, 2, 3], vec![1, 2, 3]);
        assert!(check_antidiagonal_lemma(&m, &MinorSpec::new(vec![1], vec![1])).is_none());
        assert!(check_antidiagonal_lemma(&m, &MinorSpec::new(vec![2], vec![1])).is_some());
        assert!(check_antidiagonal_lemma(&m, &MinorSpec::new(vec![3], vec![3])).is_some());
    }

    #[test]
    fn corner_lemma_flags_corner_outside() {
        let w = parse_permutation("31425").unwrap();
        let m = MinorSpec::new(vec![1, 2], vec![1, 2]);
        assert!(check_corner_lemma(&m, &rothe_diagram(&w)).is_some());
    }
}
