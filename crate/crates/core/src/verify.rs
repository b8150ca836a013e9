//! Exhaustive theorem sweeps producing machine-readable reports.
//!
//! Sweeps over `S_n` are split into jobs by size and first entry; jobs run
//! in parallel and their results are concatenated in job order, so reports
//! do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideals::{
    check_antidiagonal_lemma, check_corner_lemma, check_rank_lemma, extremal_family, fulton_generators,
    gao_yong_is_reduced, is_binomial_ideal, MinorCache, MinorSpec, SchubertIdeal,
};
use crate::partition::Partition;
use crate::perm::{
    contains_pattern, diagram_components, enumerate_avoiders, is_binomial_pattern, is_vexillary,
    is_vexillary_by_essential_chain, max_essential_rank, rank_bound_patterns, rank_table, rothe_diagram, schroder,
    Permutation,
};
use crate::poly::{
    antidiagonal_order, antidiagonal_transpose_order, buchberger, divide, is_groebner, is_reduced, reduce_basis,
    BasisKind, GridVar, GroebnerBasis, Monomial, Polynomial,
};
use crate::regularity::{
    ads_decomposition, betti_oracle_with_cap, canonical_antidiagonal, convolution_check_with_cap, max_matching, partition_graph,
    recession_connectivity, recession_witness, regularity_decomposition, thicken,
};
use crate::report::SCHEMA;

/// Generator budget of the oracle sweep; the largest binomial ideal in `S_5`
/// has 15 minimal generators.
pub const ORACLE_SWEEP_GENERATOR_CAP: usize = 16;

/// Largest sweep size accepted unless overridden.
pub const DEFAULT_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Reduced basis has as many members as the minimal one, each with at
    /// least `2^(d-1)` terms.
    Main,
    /// Elusive minors are reduced exactly for 2143-avoiders.
    Vexillary,
    /// Binomial ideals, pattern avoidance and essential rank at most one.
    Binomial,
    /// Avoider counts against the Schröder recurrence.
    Schroder,
    /// Recession connectivity of thickened partition graphs.
    Regularity,
    /// Betti oracle against the regularity formulas.
    Oracle,
    /// Structural lemmas on elusive minors.
    Lemmas,
    /// Essential rank below `k` against `k!` patterns, `k = 1, 2, 3`.
    Patterns,
    /// Fulton generators already form a Gröbner basis.
    KnutsonMiller,
    /// The extremal family attains `2^(n-1)` terms.
    Extremal,
    /// Randomised checks of the polynomial layer.
    Properties,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::Main,
        Theorem::Vexillary,
        Theorem::Binomial,
        Theorem::Schroder,
        Theorem::Regularity,
        Theorem::Oracle,
        Theorem::Lemmas,
        Theorem::Patterns,
        Theorem::KnutsonMiller,
        Theorem::Extremal,
        Theorem::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Main => "main",
            Theorem::Vexillary => "vexillary",
            Theorem::Binomial => "binomial",
            Theorem::Schroder => "schroder",
            Theorem::Regularity => "regularity",
            Theorem::Oracle => "oracle",
            Theorem::Lemmas => "lemmas",
            Theorem::Patterns => "patterns",
            Theorem::KnutsonMiller => "knutson-miller",
            Theorem::Extremal => "extremal",
            Theorem::Properties => "properties",
        }
    }

    pub fn default_n(self) -> usize {
        match self {
            Theorem::Schroder => 7,
            Theorem::Oracle | Theorem::KnutsonMiller => 5,
            _ => 6,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n: usize,
    pub max_n: usize,
    /// Worker threads; `None` uses the global pool.
    pub parallel: Option<usize>,
    pub edge_cap: usize,
    pub seed: u64,
    pub timing: bool,
}

impl VerifyOptions {
    pub fn new(theorem: Theorem) -> Self {
        VerifyOptions {
            n: theorem.default_n(),
            max_n: DEFAULT_MAX_N,
            parallel: None,
            edge_cap: crate::regularity::DEFAULT_EDGE_CAP,
            seed: 0,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRange {
    pub n_min: usize,
    pub n_max: usize,
    pub filter: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub item: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: &'static str,
    pub theorem: Theorem,
    pub range: SweepRange,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub pass: bool,
    pub summary: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

struct Sweep {
    range: SweepRange,
    checked: u64,
    counterexamples: Vec<Counterexample>,
    summary: BTreeMap<String, Value>,
}

impl Sweep {
    fn new(n_min: usize, n_max: usize, filter: Option<&str>) -> Self {
        Sweep {
            range: SweepRange { n_min, n_max, filter: filter.map(str::to_string) },
            checked: 0,
            counterexamples: Vec::new(),
            summary: BTreeMap::new(),
        }
    }

    fn fail(&mut self, item: impl ToString, detail: impl ToString) {
        self.counterexamples.push(Counterexample { item: item.to_string(), detail: detail.to_string() });
    }
}

/// Result of checking one permutation: `Err` is a counterexample; `Ok(true)`
/// marks the permutation for the per-size tally.
type Check = std::result::Result<bool, String>;

/// Runs `check` on every permutation of `S_m` for `m` in `n_min..=n_max`.
/// Returns per-size tallies of `Ok(true)` outcomes.
fn sweep_permutations(
    sweep: &mut Sweep,
    n_min: usize,
    n_max: usize,
    check: impl Fn(&Permutation) -> Check + Sync,
) -> BTreeMap<usize, u64> {
    let jobs: Vec<(usize, usize)> = (n_min..=n_max).flat_map(|m| (1..=m).map(move |f| (m, f))).collect();
    let results: Vec<(usize, u64, u64, Vec<Counterexample>)> = jobs
        .par_iter()
        .map(|&(m, first)| {
            let (mut checked, mut tally, mut bad) = (0, 0, Vec::new());
            for w in Permutation::all_with_first(m, first) {
                checked += 1;
                match check(&w) {
                    Ok(true) => tally += 1,
                    Ok(false) => {}
                    Err(detail) => bad.push(Counterexample { item: w.to_string(), detail }),
                }
            }
            (m, checked, tally, bad)
        })
        .collect();
    let mut tallies = BTreeMap::new();
    for (m, checked, tally, bad) in results {
        sweep.checked += checked;
        *tallies.entry(m).or_insert(0) += tally;
        sweep.counterexamples.extend(bad);
    }
    tallies
}

/// Runs one theorem sweep.
pub fn verify(theorem: Theorem, opts: &VerifyOptions) -> Result<VerificationReport> {
    if opts.n > opts.max_n {
        return Err(Error::CapExceeded { what: "n", value: opts.n, cap: opts.max_n });
    }
    if opts.n == 0 {
        return Err(Error::EmptyInput);
    }
    let start = Instant::now();
    let run = || match theorem {
        Theorem::Main => main_sweep(opts.n),
        Theorem::Vexillary => vexillary_sweep(opts.n),
        Theorem::Binomial => binomial_sweep(opts.n),
        Theorem::Schroder => schroder_sweep(opts.n),
        Theorem::Regularity => regularity_sweep(opts.n, opts.edge_cap),
        Theorem::Oracle => oracle_sweep(opts.n, opts.edge_cap),
        Theorem::Lemmas => lemma_sweep(opts.n),
        Theorem::Patterns => pattern_sweep(opts.n),
        Theorem::KnutsonMiller => knutson_miller_sweep(opts.n),
        Theorem::Extremal => extremal_sweep(opts.n),
        Theorem::Properties => property_sweep(opts.n, opts.seed),
    };
    let sweep = match opts.parallel {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(run)?,
        None => run()?,
    };
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(VerificationReport {
        schema: SCHEMA,
        theorem,
        range: sweep.range,
        checked: sweep.checked,
        pass: sweep.counterexamples.is_empty(),
        counterexamples: sweep.counterexamples,
        summary: sweep.summary,
        wall_time_ms: opts.timing.then_some(elapsed),
    })
}

fn main_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, None);
    let tallies = sweep_permutations(&mut sweep, 1, n, |w| {
        let order = antidiagonal_order(w.size());
        let ideal = SchubertIdeal::new(w, order.clone());
        let mut cache = MinorCache::new();
        let minimal = ideal.elusive_basis(&mut cache);
        let reduced = reduce_basis(&minimal);
        if reduced.len() != minimal.len() {
            return Err(format!("|G'| = {} but |G| = {}", reduced.len(), minimal.len()));
        }
        if !is_reduced(&reduced.members, &order) {
            return Err("reduction output is not reduced".into());
        }
        for p in &reduced.members {
            let d = p.degree();
            if p.num_terms() < 1 << (d - 1) {
                return Err(format!("degree {d} member has {} terms: {}", p.num_terms(), p.to_text(&order)));
            }
            if !minimal.contains(p) {
                return Err(format!("member {} is outside the ideal", p.to_text(&order)));
            }
        }
        for f in ideal.fulton_polynomials(&mut cache) {
            if !reduced.contains(&f) {
                return Err(format!("Fulton generator {} not generated", f.to_text(&order)));
            }
        }
        Ok(reduced.members.iter().any(|p| p.num_terms() > 2))
    });
    sweep.summary.insert("non_binomial_reduced_bases".into(), json!(tallies));
    Ok(sweep)
}

fn vexillary_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, None);
    let tallies = sweep_permutations(&mut sweep, 1, n, |w| {
        let (a, b, c) = (gao_yong_is_reduced(w), is_vexillary(w), is_vexillary_by_essential_chain(w));
        if a != b || b != c {
            return Err(format!("gao_yong_reduced {a}, avoids 2143 {b}, essential chain {c}"));
        }
        Ok(b)
    });
    sweep.summary.insert("vexillary_counts".into(), json!(tallies));
    Ok(sweep)
}

fn binomial_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, None);
    let tallies = sweep_permutations(&mut sweep, 1, n, |w| {
        let ideal = is_binomial_ideal(w);
        let pattern = is_binomial_pattern(w);
        let rank = max_essential_rank(w).is_none_or(|r| r <= 1);
        if ideal != pattern || pattern != rank {
            return Err(format!("binomial ideal {ideal}, avoids 1243/2143 {pattern}, rank <= 1 {rank}"));
        }
        Ok(pattern)
    });
    let patterns = rank_bound_patterns(2);
    for m in 1..=n {
        let expected = schroder(m - 1);
        let counted = tallies.get(&m).copied().unwrap_or(0);
        let enumerated = enumerate_avoiders(m, &patterns, m)?;
        if expected != counted.into() || counted != enumerated {
            sweep.fail(format!("S_{m}"), format!("sweep {counted}, enumeration {enumerated}, s = {expected}"));
        }
    }
    sweep.summary.insert("binomial_counts".into(), json!(tallies));
    Ok(sweep)
}

fn schroder_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, Some("avoid 1243, 2143"));
    let patterns = rank_bound_patterns(2);
    let mut counts = BTreeMap::new();
    for m in 1..=n {
        sweep.checked += 1;
        let brute = Permutation::all(m)
            .par_bridge()
            .filter(|w| patterns.iter().all(|p| p.size() > m || !contains_pattern(w, p).unwrap()))
            .count() as u64;
        let enumerated = enumerate_avoiders(m, &patterns, m)?;
        let expected = schroder(m - 1);
        if expected != brute.into() || brute != enumerated {
            sweep.fail(format!("S_{m}"), format!("brute force {brute}, enumeration {enumerated}, s = {expected}"));
        }
        counts.insert(m, enumerated);
    }
    sweep.summary.insert("avoider_counts".into(), json!(counts));
    Ok(sweep)
}

/// `n` is the box size for witness validation; the exhaustive search runs
/// on the box of size `min(n, 3)` and the matching identity on `min(n, 4)`.
fn regularity_sweep(n: usize, edge_cap: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, Some("partitions in an n x n box"));
    let nonempty = |b: usize| Partition::in_box(b, b).into_iter().filter(|l| !l.is_empty()).collect::<Vec<_>>();
    for lambda in nonempty(n.min(4)) {
        sweep.checked += 1;
        let (m, c) = (max_matching(&partition_graph(&lambda)), canonical_antidiagonal(&lambda).len());
        if m != c {
            sweep.fail(&lambda, format!("matching {m} but canonical antidiagonal {c}"));
        }
    }
    let exhaustive: Vec<_> = nonempty(n.min(3))
        .into_par_iter()
        .map(|lambda| {
            let r = recession_connectivity(&partition_graph(&thicken(&lambda)), edge_cap);
            (lambda, r)
        })
        .collect();
    for (lambda, r) in exhaustive {
        sweep.checked += 1;
        let expected = canonical_antidiagonal(&lambda).len() + 1;
        match r {
            Ok(r) if r == expected => {}
            Ok(r) => sweep.fail(&lambda, format!("r = {r}, expected {expected}")),
            Err(e) => return Err(e),
        }
    }
    for lambda in nonempty(n) {
        sweep.checked += 1;
        let w = recession_witness(&lambda);
        let expected = canonical_antidiagonal(&lambda).len() + 1;
        if !w.strongly_connected || w.components != expected {
            sweep.fail(
                &lambda,
                format!("witness strongly connected {}, {} components, expected {expected}", w.strongly_connected, w.components),
            );
        }
    }
    let example: Partition = "6,4,1,1,1".parse()?;
    if Partition::in_box(n, n).contains(&example) {
        let w = recession_witness(&example);
        sweep.summary.insert(
            "example".into(),
            json!({
                "partition": example.to_string(),
                "canonical_antidiagonal": canonical_antidiagonal(&example).len(),
                "thickened": thicken(&example).to_string(),
                "witness_components": w.components,
                "witness_strongly_connected": w.strongly_connected,
            }),
        );
    }
    Ok(sweep)
}

/// Antidiagonal lead monomials of the elusive minors, grouped by the diagram
/// component of their essential box.
fn leads_by_component(w: &Permutation) -> Vec<Vec<Monomial>> {
    let ideal = SchubertIdeal::new(w, antidiagonal_order(w.size()));
    let components = diagram_components(w);
    let mut groups = vec![Vec::new(); components.len()];
    for (m, b) in &ideal.fulton {
        if !ideal.elusive.contains(m) {
            continue;
        }
        let k = components.iter().position(|c| c.cells.contains(&(b.i, b.j))).expect("box lies in a component");
        groups[k].push(m.antidiagonal_monomial());
    }
    groups.retain(|g| !g.is_empty());
    groups
}

fn oracle_sweep(n: usize, edge_cap: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, Some("binomial"));
    let tallies = sweep_permutations(&mut sweep, 1, n, |w| {
        if !is_binomial_pattern(w) {
            return Ok(false);
        }
        let order = antidiagonal_order(w.size());
        let ideal = SchubertIdeal::new(w, order.clone());
        let basis = reduce_basis(&ideal.elusive_basis(&mut MinorCache::new()));
        let leads = basis.lead_monomials();
        let oracle = betti_oracle_with_cap(&leads, ORACLE_SWEEP_GENERATOR_CAP).map_err(|e| e.to_string())?.regularity();
        let formula = regularity_decomposition(w).map_err(|e| e.to_string())?;
        let ads = ads_decomposition(w, edge_cap).map_err(|e| e.to_string())?.value;
        if oracle != formula || formula != ads {
            return Err(format!("oracle {oracle}, decomposition {formula}, ads {ads}"));
        }
        let groups = leads_by_component(w);
        let mut acc: Vec<Monomial> = Vec::new();
        for g in groups {
            if !acc.is_empty() && !convolution_check_with_cap(&acc, &g, ORACLE_SWEEP_GENERATOR_CAP).map_err(|e| e.to_string())? {
                return Err("Betti table is not the convolution over parts".into());
            }
            acc.extend(g);
        }
        Ok(true)
    });
    let splits: usize = (1..=n)
        .flat_map(Permutation::all)
        .filter(is_binomial_pattern)
        .map(|w| leads_by_component(&w).len().saturating_sub(1))
        .sum();
    sweep.summary.insert("binomial_checked".into(), json!(tallies));
    sweep.summary.insert("convolution_splits".into(), json!(splits));
    Ok(sweep)
}

fn lemma_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, None);
    let tallies = sweep_permutations(&mut sweep, 1, n, |w| {
        let diagram = rothe_diagram(w);
        let ranks = rank_table(w);
        let elusive = crate::ideals::elusive_minors(w);
        for m in &elusive {
            if let Some(v) = check_corner_lemma(m, &diagram) {
                return Err(v.to_string());
            }
            if let Some(v) = check_rank_lemma(m, &diagram, &ranks).into_iter().next() {
                return Err(v.to_string());
            }
            for sub in elusive.iter().filter(|s| s.size() < m.size() && s.is_subminor_of(m)) {
                if let Some(v) = check_antidiagonal_lemma(m, sub) {
                    return Err(v.to_string());
                }
            }
        }
        Ok(!elusive.is_empty())
    });
    sweep.summary.insert("nonzero_ideals".into(), json!(tallies));
    Ok(sweep)
}

fn pattern_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, Some("k = 1, 2, 3"));
    let families: Vec<(usize, Vec<Permutation>)> = (1..=3).map(|k| (k, rank_bound_patterns(k))).collect();
    sweep_permutations(&mut sweep, 1, n, |w| {
        for (k, patterns) in &families {
            let avoids = patterns.iter().all(|p| p.size() > w.size() || !contains_pattern(w, p).unwrap());
            let below = max_essential_rank(w).is_none_or(|r| r < *k);
            if avoids != below {
                return Err(format!("k = {k}: avoids {avoids}, max essential rank < k {below}"));
            }
        }
        Ok(false)
    });
    Ok(sweep)
}

fn knutson_miller_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, Some("antidiag, antidiag-transpose"));
    sweep_permutations(&mut sweep, 1, n, |w| {
        let mut cache = MinorCache::new();
        let fulton: Vec<Polynomial> = fulton_generators(w).iter().map(|(m, _)| cache.minor(m)).collect();
        for order in [antidiagonal_order(w.size()), antidiagonal_transpose_order(w.size())] {
            if !is_groebner(&fulton, &order) {
                return Err(format!("Buchberger criterion fails under {}", order.name()));
            }
            if buchberger(&fulton, &order).len() != fulton.len() {
                return Err(format!("Buchberger adds elements under {}", order.name()));
            }
        }
        Ok(false)
    });
    Ok(sweep)
}

fn extremal_sweep(n: usize) -> Result<Sweep> {
    let mut sweep = Sweep::new(3, n.max(3), Some("extremal family"));
    let mut terms = BTreeMap::new();
    for m in 3..=n.max(3) {
        sweep.checked += 1;
        let w = extremal_family(m)?;
        let basis = crate::ideals::reduced_schubert_basis(&w);
        let top: Vec<&Polynomial> = basis.members.iter().filter(|p| p.degree() as usize == m).collect();
        let others_linear = basis.members.iter().all(|p| p.degree() as usize == m || p.num_terms() == 1);
        let count = top.first().map(|p| p.num_terms()).unwrap_or(0);
        if top.len() != 1 || count != 1 << (m - 1) || !others_linear {
            sweep.fail(&w, format!("{} degree-{m} members, {count} terms, others monomial {others_linear}", top.len()));
        }
        terms.insert(m, count);
    }
    sweep.summary.insert("top_degree_terms".into(), json!(terms));
    Ok(sweep)
}

const RANDOM_MINORS: usize = 200;
const RANDOM_DIVISIONS: usize = 200;
const RANDOM_BASES: usize = 50;

fn random_subset(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (1..=n).collect();
    all.shuffle(rng);
    let mut out = all[..d].to_vec();
    out.sort_unstable();
    out
}

fn random_polynomial(rng: &mut ChaCha8Rng, grid: usize, max_terms: usize) -> Polynomial {
    let terms = rng.gen_range(1..=max_terms);
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let factors: Vec<(GridVar, u32)> = (0..rng.gen_range(0..=3))
            .map(|_| (GridVar::new(rng.gen_range(1..=grid), rng.gen_range(1..=grid)), rng.gen_range(1..=2)))
            .collect();
        let mut m = Monomial::one();
        for (v, e) in factors {
            for _ in 0..e {
                m = m.mul(&Monomial::var(v));
            }
        }
        let c = loop {
            let c = rng.gen_range(-5i64..=5);
            if c != 0 {
                break c;
            }
        };
        p.add_term(m, crate::poly::coeff(c));
    }
    if p.is_zero() {
        Polynomial::var(GridVar::new(1, 1))
    } else {
        p
    }
}

/// Three randomised suites: antidiagonal lead terms of minors, the division
/// identity, and idempotence and input-order invariance of basis reduction.
/// `n` bounds the size of the sampled permutations.
fn property_sweep(n: usize, seed: u64) -> Result<Sweep> {
    let mut sweep = Sweep::new(1, n, Some(&format!("seed {seed}")));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache = MinorCache::new();
    for _ in 0..RANDOM_MINORS {
        sweep.checked += 1;
        let size = rng.gen_range(1..=8);
        let d = rng.gen_range(1..=size.min(5));
        let spec = MinorSpec::new(random_subset(&mut rng, size, d), random_subset(&mut rng, size, d));
        let p = cache.minor(&spec);
        for order in [antidiagonal_order(size), antidiagonal_transpose_order(size)] {
            let ok = p
                .leading_term(&order)
                .is_some_and(|(m, c)| *m == spec.antidiagonal_monomial() && c.is_one());
            if !ok {
                sweep.fail(&spec, format!("lead term under {} is not the antidiagonal", order.name()));
            }
        }
    }
    for k in 0..RANDOM_DIVISIONS {
        sweep.checked += 1;
        let order = if k % 2 == 0 { antidiagonal_order(3) } else { antidiagonal_transpose_order(3) };
        let f = random_polynomial(&mut rng, 3, 6);
        let divisors: Vec<Polynomial> = (0..rng.gen_range(1..=3)).map(|_| random_polynomial(&mut rng, 3, 3)).collect();
        let div = divide(&f, &divisors, &order);
        let mut total = div.remainder.clone();
        for (q, g) in div.quotients.iter().zip(&divisors) {
            total = &total + &(q * g);
        }
        let leads: Vec<&Monomial> = divisors.iter().filter_map(|g| g.leading_monomial(&order)).collect();
        let reduced = div.remainder.terms().all(|(m, _)| leads.iter().all(|l| !l.divides(m)));
        if total != f || !reduced {
            sweep.fail(f.to_text(&order), format!("reconstruction {}, remainder reduced {reduced}", total == f));
        }
    }
    let mut sampled = 0;
    while sampled < RANDOM_BASES {
        let size = rng.gen_range(3..=n.max(3));
        let mut word: Vec<usize> = (1..=size).collect();
        word.shuffle(&mut rng);
        let w = Permutation::new(word)?;
        let order = antidiagonal_order(size);
        let ideal = SchubertIdeal::new(&w, order.clone());
        if ideal.is_zero() {
            continue;
        }
        sampled += 1;
        sweep.checked += 1;
        let mut polys = ideal.elusive_polynomials(&mut cache);
        let reduced = reduce_basis(&GroebnerBasis::from_members(polys.clone(), BasisKind::Minimal, order.clone()));
        polys.shuffle(&mut rng);
        let shuffled = reduce_basis(&GroebnerBasis::from_members(polys, BasisKind::Minimal, order.clone()));
        let again = reduce_basis(&reduced);
        if again.members != reduced.members {
            sweep.fail(&w, "reduce_basis is not idempotent");
        }
        if shuffled.members != reduced.members {
            sweep.fail(&w, "reduce_basis depends on input order");
        }
    }
    Ok(sweep)
}
