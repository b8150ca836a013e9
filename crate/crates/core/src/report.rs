//! Machine-readable reports and their ASCII renderings.
//!
//! Every JSON document carries `"schema": "1"`. Field order and list order
//! are fixed so that output is byte-for-byte reproducible.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::ideals::{classify, reduced_schubert_basis_with, Classification, MinorCache, MinorSpec, SchubertIdeal};
use crate::partition::Partition;
use crate::perm::{rothe_diagram, EssentialBox, Permutation};
use crate::poly::{reduce_basis, GroebnerBasis, PolynomialJson, TermOrder};
use crate::regularity::{
    ads_decomposition, ads_regularity_of_shape, betti_oracle_with_cap, canonical_antidiagonal, rrw_regularity, thicken,
    AdsValue, BettiTable,
};

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct FultonEntry {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(rename = "box")]
    pub essential: EssentialBox,
    pub elusive: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub schema: &'static str,
    pub w: String,
    pub n: usize,
    pub order: String,
    pub diagram: Vec<(usize, usize)>,
    pub essential: Vec<EssentialBox>,
    pub fulton_count: usize,
    pub fulton: Vec<FultonEntry>,
    pub elusive: Vec<MinorSpec>,
}

pub fn ideal_report(w: &Permutation, order: &TermOrder) -> IdealReport {
    let ideal = SchubertIdeal::new(w, order.clone());
    IdealReport {
        schema: SCHEMA,
        w: w.to_string(),
        n: w.size(),
        order: order.name().to_string(),
        diagram: rothe_diagram(w).cells().iter().copied().collect(),
        essential: ideal.essential.boxes.clone(),
        fulton_count: ideal.fulton.len(),
        fulton: ideal
            .fulton
            .iter()
            .map(|(m, b)| FultonEntry {
                rows: m.rows.clone(),
                cols: m.cols.clone(),
                essential: *b,
                elusive: ideal.elusive.contains(m),
            })
            .collect(),
        elusive: ideal.elusive.clone(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberReport {
    pub degree: u32,
    pub num_terms: usize,
    pub lead: String,
    pub poly: String,
    pub terms: PolynomialJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct BasisReport {
    pub schema: &'static str,
    pub w: String,
    pub order: String,
    pub kind: String,
    pub size: usize,
    pub members: Vec<MemberReport>,
}

fn member_reports(basis: &GroebnerBasis) -> Vec<MemberReport> {
    let order = &basis.order;
    basis
        .members
        .iter()
        .map(|p| MemberReport {
            degree: p.degree(),
            num_terms: p.num_terms(),
            lead: p.leading_monomial(order).map(|m| m.to_string()).unwrap_or_default(),
            poly: p.to_text(order),
            terms: p.to_json(order),
        })
        .collect()
}

/// The elusive-minor basis, or its reduction when `reduced` is set.
pub fn basis_report(w: &Permutation, order: &TermOrder, reduced: bool) -> BasisReport {
    let ideal = SchubertIdeal::new(w, order.clone());
    let elusive = ideal.elusive_basis(&mut MinorCache::new());
    let basis = if reduced { reduce_basis(&elusive) } else { elusive };
    BasisReport {
        schema: SCHEMA,
        w: w.to_string(),
        order: order.name().to_string(),
        kind: serde_json::to_value(basis.kind).unwrap().as_str().unwrap_or_default().to_string(),
        size: basis.len(),
        members: member_reports(&basis),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub schema: &'static str,
    pub w: String,
    #[serde(flatten)]
    pub classification: Classification,
}

pub fn classify_report(w: &Permutation) -> ClassifyReport {
    ClassifyReport { schema: SCHEMA, w: w.to_string(), classification: classify(w) }
}

#[derive(Debug, Clone, Serialize)]
pub struct Flags {
    pub vexillary: bool,
    pub binomial: bool,
    pub gao_yong_reduced: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReducedMember {
    pub degree: u32,
    pub num_terms: usize,
    pub poly: String,
}

/// Everything about one permutation in a single document.
#[derive(Debug, Clone, Serialize)]
pub struct PermutationReport {
    pub schema: &'static str,
    pub w: String,
    pub diagram: Vec<(usize, usize)>,
    pub essential: Vec<EssentialBox>,
    pub fulton_count: usize,
    pub elusive: Vec<MinorSpec>,
    pub reduced: Vec<ReducedMember>,
    pub flags: Flags,
}

pub fn permutation_report(w: &Permutation, order: &TermOrder) -> PermutationReport {
    let ideal = ideal_report(w, order);
    let basis = reduced_schubert_basis_with(w, order.clone());
    let c = classify(w);
    PermutationReport {
        schema: SCHEMA,
        w: ideal.w,
        diagram: ideal.diagram,
        essential: ideal.essential,
        fulton_count: ideal.fulton_count,
        elusive: ideal.elusive,
        reduced: basis
            .members
            .iter()
            .map(|p| ReducedMember { degree: p.degree(), num_terms: p.num_terms(), poly: p.to_text(order) })
            .collect(),
        flags: Flags { vexillary: c.vexillary, binomial: c.binomial, gao_yong_reduced: c.gao_yong_reduced },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeRegularity {
    pub schema: &'static str,
    pub partition: String,
    pub canonical_antidiagonal: Vec<(usize, usize)>,
    pub thickened: String,
    pub rrw: usize,
    pub ads: AdsValue,
    pub agree: bool,
}

pub fn shape_regularity(lambda: &Partition, edge_cap: usize) -> Result<ShapeRegularity> {
    let rrw = rrw_regularity(lambda);
    let ads = ads_regularity_of_shape(lambda, edge_cap)?;
    Ok(ShapeRegularity {
        schema: SCHEMA,
        partition: lambda.to_string(),
        canonical_antidiagonal: canonical_antidiagonal(lambda).cells,
        thickened: thicken(lambda).to_string(),
        rrw,
        ads,
        agree: rrw == ads.value,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PermutationRegularity {
    pub schema: &'static str,
    pub w: String,
    pub decomposition: usize,
    pub ads: AdsValue,
    /// Regularity of the initial ideal; equals that of the ideal itself
    /// because the initial ideal is squarefree.
    pub oracle: Option<usize>,
    pub betti: Option<BettiTable>,
    pub agree: bool,
}

/// All routes for a binomial permutation. The oracle is skipped when the
/// generator budget is exceeded.
pub fn permutation_regularity(
    w: &Permutation,
    order: &TermOrder,
    edge_cap: usize,
    generator_cap: usize,
) -> Result<PermutationRegularity> {
    let decomposition = crate::regularity::regularity_decomposition(w)?;
    let ads = ads_decomposition(w, edge_cap)?;
    let leads = reduced_schubert_basis_with(w, order.clone()).lead_monomials();
    let betti = match betti_oracle_with_cap(&leads, generator_cap) {
        Ok(t) => Some(t),
        Err(e) if e.is_cap() => None,
        Err(e) => return Err(e),
    };
    let oracle = betti.as_ref().map(|t| t.regularity());
    Ok(PermutationRegularity {
        schema: SCHEMA,
        w: w.to_string(),
        decomposition,
        ads,
        oracle,
        betti,
        agree: decomposition == ads.value && oracle.is_none_or(|o| o == decomposition),
    })
}

/// Diagram grid: `X` marks the permutation, `o` a diagram cell.
pub fn render_grid(w: &Permutation) -> String {
    let d = rothe_diagram(w);
    let n = w.size();
    let mut out = String::new();
    for i in 1..=n {
        let row: Vec<&str> = (1..=n)
            .map(|j| if w.at(i) == j { "X" } else if d.contains((i, j)) { "o" } else { "." })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// A minor drawn as a bracketed array of its entries.
pub fn render_bracket(m: &MinorSpec) -> String {
    let cells: Vec<Vec<String>> = m
        .rows
        .iter()
        .map(|&i| m.cols.iter().map(|&j| format!("x[{i},{j}]")).collect())
        .collect();
    let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(0);
    cells
        .iter()
        .map(|row| {
            let body: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
            format!("| {} |\n", body.join(" "))
        })
        .collect()
}

pub fn render_ideal(r: &IdealReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "w = {}", r.w);
    out.push_str(&render_grid(&r.w.parse().expect("report holds a valid word")));
    if r.fulton.is_empty() {
        out.push_str("\nI_w is the zero ideal: the diagram is empty.\n");
        return out;
    }
    let boxes: Vec<String> = r.essential.iter().map(|b| format!("({},{}) r={}", b.i, b.j, b.rank)).collect();
    let _ = writeln!(out, "\nessential set: {}", boxes.join(", "));
    let _ = writeln!(out, "{} Fulton generators, {} elusive\n", r.fulton_count, r.elusive.len());
    for f in &r.fulton {
        let m = MinorSpec::new(f.rows.clone(), f.cols.clone());
        let tag = if f.elusive { " elusive" } else { "" };
        let _ = writeln!(out, "{m}  from ({},{}) r={}{tag}", f.essential.i, f.essential.j, f.essential.rank);
        out.push_str(&render_bracket(&m));
        out.push('\n');
    }
    out
}

pub fn render_basis(r: &BasisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "w = {}  order = {}  {} basis, {} members", r.w, r.order, r.kind, r.size);
    if r.members.is_empty() {
        out.push_str("(empty)\n");
    }
    for (k, m) in r.members.iter().enumerate() {
        let _ = writeln!(out, "g{}  degree {}, {} terms", k + 1, m.degree, m.num_terms);
        let _ = writeln!(out, "    {}", m.poly);
    }
    out
}

pub fn render_classify(r: &ClassifyReport) -> String {
    let c = &r.classification;
    let mut out = String::new();
    let _ = writeln!(out, "w = {}", r.w);
    let _ = writeln!(out, "vexillary: {}", c.vexillary);
    let _ = writeln!(out, "binomial: {}", c.binomial);
    let _ = writeln!(out, "gao_yong_reduced: {}", c.gao_yong_reduced);
    let _ = writeln!(out, "max_essential_rank: {}", c.max_essential_rank);
    match &c.parts {
        Some(parts) => {
            for p in parts {
                let kind = if p.dominant { "dominant" } else { "non-dominant" };
                let _ = writeln!(out, "part {}  shape ({})  rank {}  {kind}", p.perm, p.shape, p.rank);
            }
        }
        None => out.push_str("parts: not defined\n"),
    }
    out
}

pub fn render_shape_regularity(r: &ShapeRegularity) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "partition ({})  thickened ({})", r.partition, r.thickened);
    let _ = writeln!(out, "rrw: {}", r.rrw);
    let _ = writeln!(out, "ads: {} ({})", r.ads.value, r.ads.certification.as_str());
    let _ = writeln!(out, "agree: {}", r.agree);
    out
}

pub fn render_permutation_regularity(r: &PermutationRegularity) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "w = {}", r.w);
    let _ = writeln!(out, "decomposition: {}", r.decomposition);
    let _ = writeln!(out, "ads: {} ({})", r.ads.value, r.ads.certification.as_str());
    match r.oracle {
        Some(o) => {
            let _ = writeln!(out, "oracle: {o}");
        }
        None => out.push_str("oracle: skipped (generator budget)\n"),
    }
    let _ = writeln!(out, "agree: {}", r.agree);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;
    use crate::poly::antidiagonal_order;

    #[test]
    fn ideal_report_of_31425() {
        let w = parse_permutation("31425").unwrap();
        let r = ideal_report(&w, &antidiagonal_order(5));
        assert_eq!(r.fulton_count, 5);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], "1");
        assert_eq!(json["essential"][0], serde_json::json!({"i": 1, "j": 2, "r": 0}));
    }

    #[test]
    fn grid_and_bracket() {
        let w = parse_permutation("2143").unwrap();
        assert_eq!(render_grid(&w), "o X . .\nX . . .\n. . o X\n. . X .\n");
        let m = MinorSpec::new(vec![1, 3], vec![1, 2]);
        assert_eq!(render_bracket(&m), "| x[1,1] x[1,2] |\n| x[3,1] x[3,2] |\n");
    }

    #[test]
    fn empty_ideal_notice() {
        let r = ideal_report(&Permutation::identity(1), &antidiagonal_order(1));
        assert!(render_ideal(&r).contains("zero ideal"));
    }

    #[test]
    fn regularity_reports() {
        let lambda: Partition = "6,4,1,1,1".parse().unwrap();
        let r = shape_regularity(&lambda, 22).unwrap();
        assert_eq!((r.rrw, r.ads.value, r.agree), (3, 3, true));
        let w = parse_permutation("31425").unwrap();
        let r = permutation_regularity(&w, &antidiagonal_order(5), 22, 14).unwrap();
        assert_eq!((r.decomposition, r.oracle), (1, Some(1)));
        assert!(r.agree);
    }
}
