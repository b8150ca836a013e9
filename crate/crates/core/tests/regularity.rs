use schubert_core::ideals::{reduced_schubert_basis, SchubertIdeal};
use schubert_core::perm::{diagram_components, parts};
use schubert_core::poly::antidiagonal_order;
use schubert_core::regularity::{
    ads_decomposition, betti_oracle, betti_oracle_with_cap, convolution_check, regularity_decomposition,
    DEFAULT_EDGE_CAP,
};
use schubert_core::{parse_permutation, Monomial, Permutation};

fn w(s: &str) -> Permutation {
    parse_permutation(s).unwrap()
}

/// Antidiagonal leads of the elusive minors, one group per diagram component.
fn lead_groups(w: &Permutation) -> Vec<Vec<Monomial>> {
    let ideal = SchubertIdeal::new(w, antidiagonal_order(w.size()));
    let comps = diagram_components(w);
    let mut groups = vec![Vec::new(); comps.len()];
    for (m, b) in ideal.fulton.iter().filter(|(m, _)| ideal.elusive.contains(m)) {
        let k = comps.iter().position(|c| c.cells.contains(&(b.i, b.j))).unwrap();
        groups[k].push(m.antidiagonal_monomial());
    }
    groups
}

#[test]
fn oracle_on_31425_matches_decomposition() {
    let leads = reduced_schubert_basis(&w("31425")).lead_monomials();
    assert_eq!(betti_oracle(&leads).unwrap().regularity(), 1);
    assert_eq!(regularity_decomposition(&w("31425")).unwrap(), 1);
}

#[test]
fn parts_of_31425_convolve() {
    let groups = lead_groups(&w("31425"));
    assert_eq!(groups.len(), 2);
    assert_eq!(betti_oracle(&groups[0]).unwrap().regularity(), 0);
    assert_eq!(betti_oracle(&groups[1]).unwrap().regularity(), 1);
    assert!(convolution_check(&groups[0], &groups[1]).unwrap());
}

#[test]
fn two_single_box_parts() {
    // dominant 2x2 block plus single boxes (2,4) and (4,2), both of rank 1
    let v = w("351426");
    let ps = parts(&v).unwrap();
    let shapes: Vec<(usize, bool)> = ps.iter().map(|p| (p.shape.size(), p.dominant)).collect();
    assert_eq!(shapes, vec![(4, true), (1, false), (1, false)]);
    assert_eq!(regularity_decomposition(&v).unwrap(), 2);
    assert_eq!(ads_decomposition(&v, DEFAULT_EDGE_CAP).unwrap().value, 2);
    let leads = reduced_schubert_basis(&v).lead_monomials();
    assert_eq!(betti_oracle(&leads).unwrap().regularity(), 2);
    let groups = lead_groups(&v);
    let mut acc = groups[0].clone();
    for g in &groups[1..] {
        assert!(convolution_check(&acc, g).unwrap());
        acc.extend(g.iter().cloned());
    }
}

#[test]
fn dominant_permutations_have_regularity_zero() {
    for s in ["3412", "4321", "321", "2413"] {
        let v = w(s);
        if schubert_core::perm::is_dominant(&v) {
            assert_eq!(regularity_decomposition(&v).unwrap(), 0, "{s}");
            let leads = reduced_schubert_basis(&v).lead_monomials();
            assert_eq!(betti_oracle(&leads).unwrap().regularity(), 0, "{s}");
        }
    }
}

#[test]
fn staircase_part_needs_a_larger_budget() {
    let v = w("15432");
    let leads = reduced_schubert_basis(&v).lead_monomials();
    assert_eq!(leads.len(), 15);
    assert!(betti_oracle(&leads).unwrap_err().is_cap());
    let t = betti_oracle_with_cap(&leads, 16).unwrap();
    assert_eq!(t.regularity(), 3);
    assert_eq!(regularity_decomposition(&v).unwrap(), 3);
    // Gorenstein: the table is symmetric
    let pd = t.projective_dimension();
    let top = t.entries().last().unwrap().j;
    for e in t.entries() {
        assert_eq!(t.get(pd - e.i, top - e.j), e.beta);
    }
}
