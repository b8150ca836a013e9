//! Schubert determinantal ideals: Fulton's generators, the elusive minors
//! forming a minimal Gröbner basis, the reduced Gröbner basis, and the
//! classifiers built from them.

mod lemmas;
mod minors;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{
    essential_set, is_binomial_pattern, is_vexillary, is_vexillary_by_essential_chain,
    max_essential_rank, parts, EssentialBox, EssentialSet, Part, Permutation,
};
use crate::poly::{
    antidiagonal_order, is_reduced, reduce_basis, BasisKind, GroebnerBasis, Polynomial, TermOrder,
};

pub use lemmas::{
    check_antidiagonal_lemma, check_corner_lemma, check_rank_lemma, LemmaViolation,
};
pub use minors::{MinorCache, MinorSpec};

/// Every `(r+1)`-minor of the northwest `i x j` submatrix, for each
/// essential box `(i, j)` of rank `r`. A minor belonging to several boxes is
/// listed once, under the first box in row-major order.
pub fn fulton_generators(w: &Permutation) -> Vec<(MinorSpec, EssentialBox)> {
    let mut out: Vec<(MinorSpec, EssentialBox)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for b in essential_set(w).iter() {
        let d = b.rank + 1;
        for rows in subsets(b.i, d) {
            for cols in subsets(b.j, d) {
                let spec = MinorSpec { rows: rows.clone(), cols };
                if seen.insert(spec.clone()) {
                    out.push((spec, *b));
                }
            }
        }
    }
    out
}

/// `d`-element subsets of `1..=n` in lexicographic order.
fn subsets(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < d - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= n {
        go(1, n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// A minor of size `d` attends the northwest `i' x j'` submatrix whose rank
/// bound is `r_box` when it has more than `r_box` rows inside `[i']` and all
/// `d` columns inside `[j']`, or the same with rows and columns swapped.
pub fn attends(m: &MinorSpec, (i, j): (usize, usize), r_box: usize, d: usize) -> bool {
    let rows_in = m.rows.iter().filter(|&&r| r <= i).count();
    let cols_in = m.cols.iter().filter(|&&c| c <= j).count();
    (rows_in > r_box && cols_in == d) || (rows_in == d && cols_in > r_box)
}

/// Fulton minors that attend no essential box of smaller rank than their own.
pub fn elusive_minors(w: &Permutation) -> Vec<MinorSpec> {
    let ess = essential_set(w);
    fulton_generators(w)
        .into_iter()
        .filter(|(m, b)| is_elusive(m, b.rank, &ess))
        .map(|(m, _)| m)
        .collect()
}

fn is_elusive(m: &MinorSpec, rank: usize, ess: &EssentialSet) -> bool {
    let d = rank + 1;
    ess.iter()
        .filter(|e| e.rank < rank)
        .all(|e| !attends(m, (e.i, e.j), e.rank, d))
}

/// The data of `I_w` needed by the basis constructions.
#[derive(Debug, Clone)]
pub struct SchubertIdeal {
    pub w: Permutation,
    pub essential: EssentialSet,
    pub fulton: Vec<(MinorSpec, EssentialBox)>,
    pub elusive: Vec<MinorSpec>,
    pub order: TermOrder,
}

impl SchubertIdeal {
    pub fn new(w: &Permutation, order: TermOrder) -> Self {
        SchubertIdeal {
            w: w.clone(),
            essential: essential_set(w),
            fulton: fulton_generators(w),
            elusive: elusive_minors(w),
            order,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.fulton.is_empty()
    }

    pub fn fulton_polynomials(&self, cache: &mut MinorCache) -> Vec<Polynomial> {
        self.fulton.iter().map(|(m, _)| cache.minor(m)).collect()
    }

    pub fn elusive_polynomials(&self, cache: &mut MinorCache) -> Vec<Polynomial> {
        self.elusive.iter().map(|m| cache.minor(m)).collect()
    }

    /// The elusive minors as a minimal Gröbner basis.
    pub fn elusive_basis(&self, cache: &mut MinorCache) -> GroebnerBasis {
        GroebnerBasis::from_members(self.elusive_polynomials(cache), BasisKind::Minimal, self.order.clone())
    }

    pub fn reduced_basis(&self, cache: &mut MinorCache) -> GroebnerBasis {
        reduce_basis(&self.elusive_basis(cache))
    }
}

/// Reduced Gröbner basis of `I_w` under the default antidiagonal order.
pub fn reduced_schubert_basis(w: &Permutation) -> GroebnerBasis {
    reduced_schubert_basis_with(w, antidiagonal_order(w.size()))
}

pub fn reduced_schubert_basis_with(w: &Permutation, order: TermOrder) -> GroebnerBasis {
    SchubertIdeal::new(w, order).reduced_basis(&mut MinorCache::new())
}

/// `w(i) = n - i` for `i < n`, then `n+1, n`: the member of `S_{n+1}` whose
/// basis is the variables `x[i,j]` with `i + j <= n - 1` plus `det M[n,n]`.
pub fn extremal_family(n: usize) -> Result<Permutation> {
    if n < 3 {
        return Err(Error::ExtremalTooSmall(n));
    }
    let mut word: Vec<usize> = (1..n).map(|i| n - i).collect();
    word.extend([n + 1, n]);
    Permutation::new(word)
}

/// Every member of the reduced basis has at most two terms.
pub fn is_binomial_ideal(w: &Permutation) -> bool {
    reduced_schubert_basis(w).members.iter().all(|p| p.num_terms() <= 2)
}

/// The elusive minors, made monic, already satisfy the reducedness
/// condition.
pub fn gao_yong_is_reduced(w: &Permutation) -> bool {
    gao_yong_is_reduced_with(w, antidiagonal_order(w.size()))
}

pub fn gao_yong_is_reduced_with(w: &Permutation, order: TermOrder) -> bool {
    let ideal = SchubertIdeal::new(w, order);
    let basis = ideal.elusive_basis(&mut MinorCache::new());
    is_reduced(&basis.members, &basis.order)
}

/// All classifier outputs for one permutation.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub vexillary: bool,
    pub vexillary_by_essential_chain: bool,
    pub binomial: bool,
    pub binomial_ideal: bool,
    pub gao_yong_reduced: bool,
    /// -1 when the essential set is empty.
    pub max_essential_rank: i64,
    /// Present when every component admits a part.
    pub parts: Option<Vec<Part>>,
}

pub fn classify(w: &Permutation) -> Classification {
    let order = antidiagonal_order(w.size());
    let ideal = SchubertIdeal::new(w, order);
    let mut cache = MinorCache::new();
    let elusive = ideal.elusive_basis(&mut cache);
    let reduced = reduce_basis(&elusive);
    Classification {
        vexillary: is_vexillary(w),
        vexillary_by_essential_chain: is_vexillary_by_essential_chain(w),
        binomial: is_binomial_pattern(w),
        binomial_ideal: reduced.members.iter().all(|p| p.num_terms() <= 2),
        gao_yong_reduced: is_reduced(&elusive.members, &elusive.order),
        max_essential_rank: max_essential_rank(w).map_or(-1, |r| r as i64),
        parts: parts(w).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;
    use crate::poly::{antidiagonal_order, GridVar};

    fn w(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    fn spec(rows: &[usize], cols: &[usize]) -> MinorSpec {
        MinorSpec::new(rows.to_vec(), cols.to_vec())
    }

    #[test]
    fn fulton_generators_of_31425() {
        let gens: Vec<MinorSpec> = fulton_generators(&w("31425")).into_iter().map(|g| g.0).collect();
        assert_eq!(
            gens,
            vec![
                spec(&[1], &[1]),
                spec(&[1], &[2]),
                spec(&[1, 2], &[1, 2]),
                spec(&[1, 3], &[1, 2]),
                spec(&[2, 3], &[1, 2]),
            ]
        );
    }

    #[test]
    fn fulton_generators_of_14235_and_identity() {
        let gens: Vec<MinorSpec> = fulton_generators(&w("14235")).into_iter().map(|g| g.0).collect();
        assert_eq!(gens, vec![spec(&[1, 2], &[1, 2]), spec(&[1, 2], &[1, 3]), spec(&[1, 2], &[2, 3])]);
        assert!(fulton_generators(&Permutation::identity(4)).is_empty());
    }

    #[test]
    fn fulton_counts_of_31542() {
        let gens = fulton_generators(&w("31542"));
        let by_size = |d| gens.iter().filter(|g| g.0.size() == d).count();
        assert_eq!((by_size(1), by_size(2), by_size(3)), (2, 6, 4));
    }

    #[test]
    fn attends_examples() {
        let m = spec(&[1, 2], &[1, 2]);
        assert!(attends(&m, (1, 2), 0, 2));
        assert!(!attends(&spec(&[2, 3], &[1, 2]), (1, 2), 0, 2));
        assert!(!attends(&m, (4, 4), 2, 2));
    }

    #[test]
    fn elusive_minors_of_examples() {
        assert_eq!(
            elusive_minors(&w("31425")),
            vec![spec(&[1], &[1]), spec(&[1], &[2]), spec(&[2, 3], &[1, 2])]
        );
        assert_eq!(
            elusive_minors(&w("31542")),
            vec![
                spec(&[1], &[1]),
                spec(&[1], &[2]),
                spec(&[1, 2, 3], &[1, 3, 4]),
                spec(&[1, 2, 3], &[2, 3, 4]),
                spec(&[2, 3], &[1, 2]),
                spec(&[2, 4], &[1, 2]),
                spec(&[3, 4], &[1, 2]),
            ]
        );
        assert_eq!(
            elusive_minors(&w("32154")),
            vec![spec(&[1], &[1]), spec(&[1], &[2]), spec(&[2], &[1]), spec(&[1, 2, 3, 4], &[1, 2, 3, 4])]
        );
    }

    #[test]
    fn reduced_basis_of_31542_matches_display() {
        let g = reduced_schubert_basis(&w("31542"));
        assert_eq!(g.len(), 7);
        let cubics: Vec<&Polynomial> = g.members.iter().filter(|p| p.degree() == 3).collect();
        assert_eq!(cubics.len(), 2);
        assert!(cubics.iter().all(|p| p.num_terms() == 4));
        // x14 |x21 x23; x31 x33| - x13 |x21 x24; x31 x34|, up to sign
        let x = |i, j| Polynomial::var(GridVar::new(i, j));
        let m2 = |a: (usize, usize), b: (usize, usize), c: (usize, usize), d: (usize, usize)| {
            &(&x(a.0, a.1) * &x(d.0, d.1)) - &(&x(b.0, b.1) * &x(c.0, c.1))
        };
        let shown = &(&x(1, 4) * &m2((2, 1), (2, 3), (3, 1), (3, 3)))
            - &(&x(1, 3) * &m2((2, 1), (2, 4), (3, 1), (3, 4)));
        let o = antidiagonal_order(5);
        assert!(cubics.iter().any(|p| **p == shown.monic(&o)));
        let shown2 = &(&x(1, 4) * &m2((2, 2), (2, 3), (3, 2), (3, 3)))
            - &(&x(1, 3) * &m2((2, 2), (2, 4), (3, 2), (3, 4)));
        assert!(cubics.iter().any(|p| **p == shown2.monic(&o)));
    }

    #[test]
    fn reduced_basis_of_32154_has_eight_term_quartic() {
        let g = reduced_schubert_basis(&w("32154"));
        assert_eq!(g.len(), 4);
        let quartic = g.members.iter().find(|p| p.degree() == 4).unwrap();
        assert_eq!(quartic.num_terms(), 8);
    }

    #[test]
    fn vexillary_reduced_basis_equals_elusive() {
        let v = w("31425");
        let ideal = SchubertIdeal::new(&v, antidiagonal_order(5));
        let mut cache = MinorCache::new();
        let mut elusive = ideal.elusive_basis(&mut cache).members;
        let reduced = ideal.reduced_basis(&mut cache).members;
        elusive.sort_by_key(|a| a.to_text(&ideal.order));
        let mut r = reduced.clone();
        r.sort_by_key(|a| a.to_text(&ideal.order));
        assert_eq!(elusive, r);
    }

    #[test]
    fn extremal_family_words() {
        assert_eq!(extremal_family(4).unwrap(), w("32154"));
        assert_eq!(extremal_family(3).unwrap(), w("2143"));
        assert_eq!(extremal_family(2), Err(Error::ExtremalTooSmall(2)));
    }

    #[test]
    fn classifiers() {
        assert!(is_binomial_ideal(&w("31425")));
        assert!(!is_binomial_ideal(&w("32154")));
        assert!(is_binomial_ideal(&Permutation::identity(3)));
        assert!(!gao_yong_is_reduced(&w("31542")));
        assert!(gao_yong_is_reduced(&w("14235")));
        assert!(!gao_yong_is_reduced(&w("2143")));
        let c = classify(&w("31254"));
        assert!(!c.binomial && !c.vexillary);
        assert_eq!(c.max_essential_rank, 3);
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 3), vec![vec![1, 2, 3]]);
        assert!(subsets(2, 3).is_empty());
    }
}
