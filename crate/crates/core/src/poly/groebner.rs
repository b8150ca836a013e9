use std::collections::BTreeSet;

use serde::Serialize;

use super::{reduce, OrderKey, Polynomial, TermOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Raw,
    Groebner,
    Minimal,
    Reduced,
}

/// An ordered list of monic polynomials together with the order they are
/// a basis for and how much is known about them.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub members: Vec<Polynomial>,
    pub kind: BasisKind,
    pub order: TermOrder,
}

impl GroebnerBasis {
    /// Wraps polynomials already known to form a basis of the given kind.
    /// Members are made monic; zeros are dropped.
    pub fn from_members(members: Vec<Polynomial>, kind: BasisKind, order: TermOrder) -> Self {
        let members = members
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.monic(&order))
            .collect();
        GroebnerBasis { members, kind, order }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn lead_monomials(&self) -> Vec<super::Monomial> {
        self.members
            .iter()
            .map(|p| p.leading_monomial(&self.order).unwrap().clone())
            .collect()
    }

    /// Normal form of `f` modulo the members.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.members, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        debug_assert!(self.kind >= BasisKind::Groebner);
        self.normal_form(f).is_zero()
    }
}

/// `lcm/LT(f) * f - lcm/LT(g) * g`, with leading coefficients divided out so
/// the lead terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("zero polynomial");
    let (gm, gc) = g.leading_term(order).expect("zero polynomial");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fc.recip(), &fm.quotient_of(&l).unwrap());
    let b = g.mul_term(&gc.recip(), &gm.quotient_of(&l).unwrap());
    &a - &b
}

/// Buchberger's algorithm. Pairs are processed smallest lcm first with ties
/// broken by index; pairs with coprime lead monomials are skipped. New
/// elements are appended monic, so the input generators come first in the
/// output, in input order.
pub fn buchberger(gens: &[Polynomial], order: &TermOrder) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic(order))
        .collect();
    let mut leads: Vec<_> = basis.iter().map(|p| p.leading_monomial(order).unwrap().clone()).collect();
    let mut pairs: BTreeSet<(OrderKey, usize, usize)> = BTreeSet::new();
    let push_pairs = |pairs: &mut BTreeSet<_>, leads: &[super::Monomial], j: usize| {
        for i in 0..j {
            if !leads[i].is_coprime(&leads[j]) {
                pairs.insert((order.key(&leads[i].lcm(&leads[j])), i, j));
            }
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut pairs, &leads, j);
    }
    while let Some((_, i, j)) = pairs.pop_first() {
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order);
        leads.push(r.leading_monomial(order).unwrap().clone());
        basis.push(r);
        push_pairs(&mut pairs, &leads, basis.len() - 1);
    }
    GroebnerBasis { members: basis, kind: BasisKind::Groebner, order: order.clone() }
}

/// Buchberger's criterion: every S-pair reduces to zero against `gens`.
pub fn is_groebner(gens: &[Polynomial], order: &TermOrder) -> bool {
    let gens: Vec<&Polynomial> = gens.iter().filter(|p| !p.is_zero()).collect();
    let owned: Vec<Polynomial> = gens.iter().map(|p| (*p).clone()).collect();
    for j in 0..gens.len() {
        for i in 0..j {
            let (a, b) = (
                gens[i].leading_monomial(order).unwrap(),
                gens[j].leading_monomial(order).unwrap(),
            );
            if a.is_coprime(b) {
                continue;
            }
            if !reduce(&s_polynomial(gens[i], gens[j], order), &owned, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Drops every member whose lead monomial is divisible by the lead of
/// another member (the earlier one survives among equal leads).
pub fn minimalize(g: &GroebnerBasis) -> GroebnerBasis {
    assert!(g.kind >= BasisKind::Groebner, "minimalize needs a Gröbner basis");
    let order = &g.order;
    let leads = g.lead_monomials();
    let keep: Vec<Polynomial> = (0..g.len())
        .filter(|&k| {
            !(0..g.len()).any(|h| {
                h != k && leads[h].divides(&leads[k]) && (leads[h] != leads[k] || h < k)
            })
        })
        .map(|k| g.members[k].monic(order))
        .collect();
    GroebnerBasis { members: keep, kind: BasisKind::Minimal, order: order.clone() }
}

/// The reduced Gröbner basis: minimalize, then replace each member in turn
/// by its normal form modulo the others. Members come out monic and sorted
/// by lead monomial, largest first.
pub fn reduce_basis(g: &GroebnerBasis) -> GroebnerBasis {
    let order = &g.order;
    let mut members = minimalize(g).members;
    for i in 0..members.len() {
        let current = std::mem::take(&mut members[i]);
        let others: Vec<Polynomial> =
            members.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, p)| p.clone()).collect();
        members[i] = reduce(&current, &others, order).monic(order);
    }
    members.sort_by(|a, b| {
        order.cmp(b.leading_monomial(order).unwrap(), a.leading_monomial(order).unwrap())
    });
    GroebnerBasis { members, kind: BasisKind::Reduced, order: order.clone() }
}

/// No lead monomial divides the lead of another member.
pub fn is_minimal(members: &[Polynomial], order: &TermOrder) -> bool {
    let leads: Vec<_> = members.iter().map(|p| p.leading_monomial(order).unwrap()).collect();
    (0..leads.len()).all(|a| (0..leads.len()).all(|b| a == b || !leads[a].divides(leads[b])))
}

/// Members are monic and no lead monomial divides any term of another member.
pub fn is_reduced(members: &[Polynomial], order: &TermOrder) -> bool {
    use num_traits::One;
    let monic = members.iter().all(|p| p.leading_term(order).is_some_and(|(_, c)| c.is_one()));
    let leads: Vec<_> = members.iter().map(|p| p.leading_monomial(order).unwrap()).collect();
    monic
        && (0..members.len()).all(|a| {
            (0..members.len())
                .all(|b| a == b || members[b].terms().all(|(m, _)| !leads[a].divides(m)))
        })
}
