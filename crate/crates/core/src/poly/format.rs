//! Text form `x[1,2]·x[2,1] - x[1,1]·x[2,2]` and the JSON term list.
//! Both list terms in descending order under a given term order.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Coeff, GridVar, Monomial, Polynomial, TermOrder};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    /// `[row, col, exponent]` triples, sorted by `(row, col)`.
    pub exps: Vec<[u32; 3]>,
}

pub type PolynomialJson = Vec<JsonTerm>;

impl Polynomial {
    pub fn to_text(&self, order: &TermOrder) -> String {
        let terms = self.sorted_terms(order);
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{abs}·{m}"));
            }
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Polynomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::PolynomialSyntax("empty".into()));
        }
        if compact == "0" {
            return Ok(Polynomial::zero());
        }
        let mut poly = Polynomial::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' if !first => (false, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(Error::PolynomialSyntax(format!("expected sign at {rest:?}"))),
            };
            first = false;
            let end = body
                .char_indices()
                .find(|&(_, c)| c == '+' || c == '-')
                .map_or(body.len(), |(i, _)| i);
            let (c, m) = parse_term(&body[..end])?;
            poly.add_term(m, if negative { -c } else { c });
            rest = &body[end..];
        }
        Ok(poly)
    }

    pub fn to_json(&self, order: &TermOrder) -> PolynomialJson {
        self.sorted_terms(order)
            .into_iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                exps: m
                    .factors()
                    .iter()
                    .map(|&(v, e)| [u32::from(v.row), u32::from(v.col), e])
                    .collect(),
            })
            .collect()
    }

    pub fn from_json(terms: &[JsonTerm]) -> Result<Polynomial> {
        let mut poly = Polynomial::zero();
        for t in terms {
            let c = parse_rational(&t.coeff)?;
            let m = Monomial::from_factors(t.exps.iter().map(|&[i, j, e]| {
                (GridVar::new(i as usize, j as usize), e)
            }));
            poly.add_term(m, c);
        }
        Ok(poly)
    }
}

fn parse_term(s: &str) -> Result<(Coeff, Monomial)> {
    if s.is_empty() {
        return Err(Error::PolynomialSyntax("empty term".into()));
    }
    let mut c = Coeff::one();
    let mut factors = Vec::new();
    for factor in s.split(['·', '*']) {
        if let Some(var) = factor.strip_prefix("x[") {
            let (inside, power) = var
                .split_once(']')
                .ok_or_else(|| Error::PolynomialSyntax(format!("unclosed variable {factor:?}")))?;
            let (i, j) = inside
                .split_once(',')
                .ok_or_else(|| Error::PolynomialSyntax(format!("bad variable {factor:?}")))?;
            let idx = |t: &str| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| Error::PolynomialSyntax(format!("bad index {t:?}")))
            };
            let e = match power.strip_prefix('^') {
                Some(p) => p
                    .parse::<u32>()
                    .map_err(|_| Error::PolynomialSyntax(format!("bad exponent {p:?}")))?,
                None if power.is_empty() => 1,
                None => return Err(Error::PolynomialSyntax(format!("trailing {power:?}"))),
            };
            factors.push((GridVar::new(idx(i)?, idx(j)?), e));
        } else {
            c *= parse_rational(factor)?;
        }
    }
    Ok((c, Monomial::from_factors(factors)))
}

fn parse_rational(s: &str) -> Result<Coeff> {
    let bad = || Error::PolynomialSyntax(format!("bad coefficient {s:?}"));
    let int = |t: &str| t.parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Coeff::new(int(p)?, q))
        }
        None => Ok(Coeff::from_integer(int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{antidiagonal_order, coeff};

    fn x(i: usize, j: usize) -> Polynomial {
        Polynomial::var(GridVar::new(i, j))
    }

    #[test]
    fn text_of_two_by_two_minor() {
        let o = antidiagonal_order(2);
        let det = &(&x(1, 2) * &x(2, 1)) - &(&x(1, 1) * &x(2, 2));
        assert_eq!(det.to_text(&o), "x[1,2]·x[2,1] - x[1,1]·x[2,2]");
        assert_eq!(Polynomial::parse_text(&det.to_text(&o)).unwrap(), det);
    }

    #[test]
    fn text_with_coefficients_and_powers() {
        let o = antidiagonal_order(3);
        let p = &(&x(1, 1) * &x(1, 1)).scale(&Coeff::new(3.into(), 2.into()))
            - &Polynomial::constant(coeff(5));
        let s = p.to_text(&o);
        assert_eq!(s, "3/2·x[1,1]^2 - 5");
        assert_eq!(Polynomial::parse_text(&s).unwrap(), p);
        assert_eq!(Polynomial::parse_text("-x[1,1]").unwrap(), x(1, 1).scale(&coeff(-1)));
        assert_eq!(Polynomial::zero().to_text(&o), "0");
        assert!(Polynomial::parse_text("x[1,").is_err());
        assert!(Polynomial::parse_text("1/0").is_err());
        assert!(Polynomial::parse_text("x[0,1]").is_err());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let o = antidiagonal_order(2);
        let det = &(&x(1, 2) * &x(2, 1)) - &(&x(1, 1) * &x(2, 2)).scale(&Coeff::new(1.into(), 3.into()));
        let json = serde_json::to_string(&det.to_json(&o)).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"1","exps":[[1,2,1],[2,1,1]]},{"coeff":"-1/3","exps":[[1,1,1],[2,2,1]]}]"#
        );
        let back: PolynomialJson = serde_json::from_str(&json).unwrap();
        let p = Polynomial::from_json(&back).unwrap();
        assert_eq!(p, det);
        assert_eq!(serde_json::to_string(&p.to_json(&o)).unwrap(), json);
    }
}
