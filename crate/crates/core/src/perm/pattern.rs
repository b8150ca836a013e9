use num_bigint::BigInt;
use rayon::prelude::*;

use super::{essential_set, Permutation};
use crate::error::{Error, Result};

/// Largest `n` accepted by the avoider enumeration unless overridden.
pub const DEFAULT_ENUMERATION_CAP: usize = 9;

/// Exhaustive search for indices `i_1 < ... < i_m` whose values are
/// order-isomorphic to `v`.
pub fn contains_pattern(w: &Permutation, v: &Permutation) -> Result<bool> {
    if v.size() > w.size() {
        return Err(Error::PatternTooLong { pattern: v.size(), word: w.size() });
    }
    let mut chosen = Vec::with_capacity(v.size());
    Ok(embed(w.word(), v.word(), 0, &mut chosen, None))
}

/// Backtracking embedding. `chosen` holds values of `word` already matched to
/// `pattern[..chosen.len()]`. When `last` is set, the final pattern entry must
/// be matched to that position.
fn embed(
    word: &[usize],
    pattern: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    last: Option<usize>,
) -> bool {
    let k = chosen.len();
    if k == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - k;
    let (lo, hi) = match last {
        Some(p) if remaining == 1 => (p, p + 1),
        Some(p) => (from, (p + 2).saturating_sub(remaining)),
        None => (from, word.len() + 1 - remaining),
    };
    for pos in lo..hi.max(lo) {
        let value = word[pos];
        let consistent = (0..k).all(|t| (pattern[t] < pattern[k]) == (chosen[t] < value));
        if consistent {
            chosen.push(value);
            if embed(word, pattern, pos + 1, chosen, last) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn is_vexillary(w: &Permutation) -> bool {
    let p2143 = Permutation { word: vec![2, 1, 4, 3] };
    w.size() < 4 || !contains_pattern(w, &p2143).unwrap()
}

/// Vexillarity read off the essential set: no box lies strictly southeast of
/// another, so the boxes form a chain running southwest to northeast.
pub fn is_vexillary_by_essential_chain(w: &Permutation) -> bool {
    let mut boxes: Vec<(usize, usize)> = essential_set(w).iter().map(|b| (b.i, b.j)).collect();
    // southwest first: increasing column, then decreasing row
    boxes.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    boxes.windows(2).all(|p| p[0].0 >= p[1].0 && p[0].1 <= p[1].1)
}

/// Maximum rank over the essential set, `None` when it is empty.
pub fn max_essential_rank(w: &Permutation) -> Option<usize> {
    essential_set(w).max_rank()
}

/// The `k!` patterns `v (k+2) (k+1)` with `v` in `S_k`.
pub fn rank_bound_patterns(k: usize) -> Vec<Permutation> {
    let tail = [k + 2, k + 1];
    if k == 0 {
        return vec![Permutation { word: tail.to_vec() }];
    }
    Permutation::all(k)
        .map(|v| {
            let mut word = v.word;
            word.extend(tail);
            Permutation { word }
        })
        .collect()
}

/// Avoids both 1243 and 2143.
pub fn is_binomial_pattern(w: &Permutation) -> bool {
    if w.size() < 4 {
        return true;
    }
    rank_bound_patterns(2).iter().all(|p| !contains_pattern(w, p).unwrap())
}

/// Counts permutations of `S_n` avoiding every pattern, generating prefixes
/// lexicographically and pruning any prefix that already contains a pattern.
/// The sweep is split across first entries.
pub fn enumerate_avoiders(n: usize, patterns: &[Permutation], cap: usize) -> Result<u64> {
    check_cap(n, cap)?;
    Ok((1..=n)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            walk_avoiders(n, patterns, vec![first], &mut |_| count += 1);
            count
        })
        .sum())
}

/// Streams the avoiders of `S_n` in lexicographic order.
pub fn for_each_avoider(
    n: usize,
    patterns: &[Permutation],
    cap: usize,
    mut visit: impl FnMut(&Permutation),
) -> Result<()> {
    check_cap(n, cap)?;
    walk_avoiders(n, patterns, Vec::new(), &mut visit);
    Ok(())
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { what: "n", value: n, cap });
    }
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(())
}

fn walk_avoiders(
    n: usize,
    patterns: &[Permutation],
    prefix: Vec<usize>,
    visit: &mut dyn FnMut(&Permutation),
) {
    let mut prefix = prefix;
    let mut used = vec![false; n + 1];
    for &v in &prefix {
        used[v] = true;
    }
    if !prefix.is_empty() && ends_with_pattern(&prefix, patterns) {
        return;
    }
    recurse(n, patterns, &mut prefix, &mut used, visit);
}

fn recurse(
    n: usize,
    patterns: &[Permutation],
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&Permutation),
) {
    if prefix.len() == n {
        visit(&Permutation { word: prefix.clone() });
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        if !ends_with_pattern(prefix, patterns) {
            used[v] = true;
            recurse(n, patterns, prefix, used, visit);
            used[v] = false;
        }
        prefix.pop();
    }
}

/// Does some pattern occur with its last entry at the end of `prefix`?
fn ends_with_pattern(prefix: &[usize], patterns: &[Permutation]) -> bool {
    let last = prefix.len() - 1;
    patterns.iter().any(|p| {
        p.size() <= prefix.len() && embed(prefix, p.word(), 0, &mut Vec::new(), Some(last))
    })
}

/// Large Schröder number `s_n`, from
/// `(n+1) s_n = (6n-3) s_{n-1} - (n-2) s_{n-2}` with `s_0 = 1`, `s_1 = 2`.
pub fn schroder(n: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(1), BigInt::from(2));
    if n == 0 {
        return prev;
    }
    for m in 2..=n {
        let m_big = BigInt::from(m);
        let next = (BigInt::from(6 * m - 3) * &cur - (&m_big - 2) * &prev) / (&m_big + 1);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn w(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn pattern_examples() {
        assert!(!contains_pattern(&w("31425"), &w("2143")).unwrap());
        assert!(contains_pattern(&w("2143"), &w("2143")).unwrap());
        // 1243 needs a third entry above everything else; 21543 has none
        assert!(!contains_pattern(&w("21543"), &w("1243")).unwrap());
        assert!(contains_pattern(&w("21354"), &w("1243")).unwrap());
        assert_eq!(
            contains_pattern(&w("12"), &w("123")),
            Err(Error::PatternTooLong { pattern: 3, word: 2 })
        );
    }

    #[test]
    fn vexillary_examples() {
        assert!(is_vexillary(&w("31425")));
        assert!(!is_vexillary(&w("2143")));
        // 3,1,5,4 is an occurrence of 2143
        assert!(!is_vexillary(&w("31254")));
        assert!(!is_vexillary_by_essential_chain(&w("31254")));
        assert!(is_vexillary_by_essential_chain(&w("31425")));
        assert!(!is_vexillary_by_essential_chain(&w("2143")));
    }

    #[test]
    fn essential_rank_examples() {
        assert_eq!(max_essential_rank(&w("31254")), Some(3));
        assert_eq!(max_essential_rank(&Permutation::identity(4)), None);
        assert_eq!(max_essential_rank(&w("31425")), Some(1));
    }

    #[test]
    fn binomial_pattern_examples() {
        assert!(is_binomial_pattern(&w("31425")));
        assert!(!is_binomial_pattern(&w("1243")));
        assert!(!is_binomial_pattern(&w("31542")));
    }

    #[test]
    fn rank_bound_pattern_sets() {
        let words = |k| rank_bound_patterns(k).into_iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(words(1), vec!["1,3,2"]);
        assert_eq!(words(2), vec!["1,2,4,3", "2,1,4,3"]);
        assert_eq!(rank_bound_patterns(3).len(), 6);
    }

    #[test]
    fn schroder_values() {
        let s: Vec<BigInt> = (0..=6).map(schroder).collect();
        let expected: Vec<BigInt> = [1, 2, 6, 22, 90, 394, 1806].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(s, expected);
    }

    #[test]
    fn avoider_counts() {
        let pats = rank_bound_patterns(2);
        assert_eq!(enumerate_avoiders(4, &pats, 9).unwrap(), 22);
        assert_eq!(enumerate_avoiders(1, &pats, 9).unwrap(), 1);
        assert_eq!(enumerate_avoiders(6, &pats, 9).unwrap(), 394);
        assert!(enumerate_avoiders(10, &pats, 9).unwrap_err().is_cap());
    }

    #[test]
    fn streaming_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_avoider(4, &rank_bound_patterns(2), 9, |p| seen.push(p.clone())).unwrap();
        assert_eq!(seen.len(), 22);
        assert!(seen.windows(2).all(|p| p[0] < p[1]));
        assert!(seen.iter().all(is_binomial_pattern));
    }
}
