use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Coeff, Monomial, OrderKey, Polynomial, TermOrder};

/// Result of dividing `f` by an ordered list: `f = sum q_i d_i + remainder`.
#[derive(Debug, Clone, PartialEq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

struct Divisor<'a> {
    lead: Monomial,
    lead_coeff: Coeff,
    poly: &'a Polynomial,
}

/// Multivariate division producing a full normal form: every term of the
/// working polynomial, not only its lead, is tested against the divisors'
/// lead terms, first divisor first.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &TermOrder) -> Division {
    let mut quotients = vec![Polynomial::zero(); divisors.len()];
    let remainder = run(f, divisors, order, |i, c, m| quotients[i].add_term(m, c));
    Division { quotients, remainder }
}

/// Remainder only.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: &TermOrder) -> Polynomial {
    run(f, divisors, order, |_, _, _| {})
}

fn run(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: &TermOrder,
    mut record: impl FnMut(usize, Coeff, Monomial),
) -> Polynomial {
    let divs: Vec<Divisor> = divisors
        .iter()
        .map(|d| {
            let (lead, lead_coeff) = d.leading_term(order).expect("zero divisor");
            Divisor { lead: lead.clone(), lead_coeff: lead_coeff.clone(), poly: d }
        })
        .collect();

    let mut work: BTreeMap<OrderKey, (Monomial, Coeff)> =
        f.terms().map(|(m, c)| (order.key(m), (m.clone(), c.clone()))).collect();
    let mut remainder = Polynomial::zero();

    while let Some((_, (m, c))) = work.pop_last() {
        let hit = divs
            .iter()
            .enumerate()
            .find_map(|(i, d)| d.lead.quotient_of(&m).map(|q| (i, q)));
        let Some((i, q)) = hit else {
            remainder.add_term(m, c);
            continue;
        };
        let d = &divs[i];
        let factor = &c / &d.lead_coeff;
        for (t, a) in d.poly.terms() {
            if *t == d.lead {
                continue;
            }
            let prod = t.mul(&q);
            let delta = -(&factor * a);
            let key = order.key(&prod);
            match work.get_mut(&key) {
                Some(entry) => {
                    entry.1 += delta;
                    if entry.1.is_zero() {
                        work.remove(&key);
                    }
                }
                None => {
                    work.insert(key, (prod, delta));
                }
            }
        }
        record(i, factor, q);
    }
    remainder
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{antidiagonal_order, coeff, GridVar};

    fn x(i: usize, j: usize) -> Polynomial {
        Polynomial::var(GridVar::new(i, j))
    }

    #[test]
    fn two_by_two_vanishes_mod_first_row() {
        let o = antidiagonal_order(2);
        let det = &(&x(1, 1) * &x(2, 2)) - &(&x(1, 2) * &x(2, 1));
        let d = divide(&det, &[x(1, 1), x(1, 2)], &o);
        assert!(d.remainder.is_zero());
        let rebuilt = &(&d.quotients[0] * &x(1, 1)) + &(&d.quotients[1] * &x(1, 2));
        assert_eq!(rebuilt, det);
    }

    #[test]
    fn indivisible_term_is_kept() {
        let o = antidiagonal_order(2);
        let d = divide(&x(1, 1), &[x(2, 2)], &o);
        assert_eq!(d.remainder, x(1, 1));
        assert!(d.quotients[0].is_zero());
        assert!(reduce(&Polynomial::zero(), &[x(2, 2)], &o).is_zero());
    }

    #[test]
    fn non_lead_terms_are_reduced() {
        let o = antidiagonal_order(3);
        // lead is x13; the x11 tail term must still be removed by x11
        let f = &x(1, 3) + &x(1, 1).scale(&coeff(3));
        let r = reduce(&f, &[x(1, 1)], &o);
        assert_eq!(r, x(1, 3));
    }
}
