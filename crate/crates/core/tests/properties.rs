use std::collections::BTreeSet;

use proptest::prelude::*;

use schubert_core::ideals::{MinorCache, SchubertIdeal};
use schubert_core::perm::{essential_set, rothe_diagram};
use schubert_core::poly::{antidiagonal_order, antidiagonal_transpose_order, coeff};
use schubert_core::regularity::{
    betti_oracle, canonical_antidiagonal, convolution_check, is_strongly_connected, max_matching, partition_graph,
    recession_witness, thicken, RecessionGraph,
};
use schubert_core::{parse_permutation, GridVar, Monomial, Partition, Permutation, Polynomial};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn partition(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=cols, 1..=rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn monomial(grid: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((1..=grid, 1..=grid, 1..=2u32), 0..=3)
        .prop_map(|f| Monomial::from_factors(f.into_iter().map(|(i, j, e)| (GridVar::new(i, j), e))))
}

fn polynomial(grid: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((monomial(grid), -6i64..=6), 0..=5)
        .prop_map(|t| Polynomial::from_terms(t.into_iter().map(|(m, c)| (m, coeff(c)))))
}

fn squarefree(row: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::btree_set(1..=5usize, 1..=3)
        .prop_map(move |s| Monomial::from_factors(s.into_iter().map(|j| (GridVar::new(row, j), 1))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_round_trips(w in permutation(8)) {
        prop_assert_eq!(parse_permutation(&w.to_string()).unwrap(), w.clone());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(rothe_diagram(&w).len(), w.inversions());
    }

    #[test]
    fn essential_boxes_lie_in_the_diagram(w in permutation(8)) {
        let d = rothe_diagram(&w);
        for b in essential_set(&w).iter() {
            prop_assert!(d.contains((b.i, b.j)));
            prop_assert!(!d.contains((b.i + 1, b.j)) && !d.contains((b.i, b.j + 1)));
        }
    }

    #[test]
    fn polynomial_ring_laws(a in polynomial(3), b in polynomial(3), c in polynomial(3)) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn text_and_json_round_trip(p in polynomial(4)) {
        let order = antidiagonal_order(4);
        prop_assert_eq!(Polynomial::parse_text(&p.to_text(&order)).unwrap(), p.clone());
        prop_assert_eq!(Polynomial::from_json(&p.to_json(&order)).unwrap(), p);
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(4), b in monomial(4), c in monomial(4)) {
        for order in [antidiagonal_order(4), antidiagonal_transpose_order(4)] {
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert!(order.cmp(&Monomial::one(), &a) != std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn reduced_leads_are_elusive_antidiagonals(w in permutation(6)) {
        let order = antidiagonal_order(w.size());
        let ideal = SchubertIdeal::new(&w, order);
        let reduced = ideal.reduced_basis(&mut MinorCache::new());
        let leads: BTreeSet<Monomial> = reduced.lead_monomials().into_iter().collect();
        let anti: BTreeSet<Monomial> = ideal.elusive.iter().map(|m| m.antidiagonal_monomial()).collect();
        prop_assert_eq!(leads, anti);
    }

    #[test]
    fn matching_equals_canonical_antidiagonal(lambda in partition(6, 6)) {
        prop_assert_eq!(max_matching(&partition_graph(&lambda)), canonical_antidiagonal(&lambda).len());
    }

    #[test]
    fn witnesses_validate(lambda in partition(8, 8)) {
        let w = recession_witness(&lambda);
        prop_assert!(w.strongly_connected);
        prop_assert_eq!(w.components, canonical_antidiagonal(&lambda).len() + 1);
        let thick = thicken(&lambda);
        prop_assert_eq!(thick.rows(), lambda.rows() + 1);
        let b = partition_graph(&thick);
        let r = RecessionGraph::new(&b, w.edges.iter().copied());
        prop_assert!(is_strongly_connected(&r));
    }

    #[test]
    fn betti_tables_have_vanishing_euler_characteristic(gens in proptest::collection::vec(squarefree(1), 1..=6)) {
        let t = betti_oracle(&gens).unwrap();
        prop_assert_eq!(t.get(0, 0), 1);
        let chi: i64 = t.entries().iter().map(|e| if e.i % 2 == 0 { e.beta as i64 } else { -(e.beta as i64) }).sum();
        prop_assert_eq!(chi, 0);
        prop_assert!(t.projective_dimension() <= 5);
    }

    #[test]
    fn disjoint_ideals_convolve(
        a in proptest::collection::vec(squarefree(1), 1..=4),
        b in proptest::collection::vec(squarefree(2), 1..=4),
    ) {
        prop_assert!(convolution_check(&a, &b).unwrap());
    }
}
