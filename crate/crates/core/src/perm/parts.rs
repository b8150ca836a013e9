use serde::Serialize;

use super::{diagram_components, essential_set, Permutation};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Rank function vanishes on the whole essential set.
pub fn is_dominant(w: &Permutation) -> bool {
    essential_set(w).iter().all(|b| b.rank == 0)
}

/// The smallest dominant permutation whose Rothe diagram is `shape` placed
/// at the origin. Its Lehmer code is the partition itself; the empty shape
/// gives the identity of `S_1`.
pub fn dominant_of_shape(shape: &Partition) -> Permutation {
    let parts = shape.parts();
    let n = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + i + 1)
        .max()
        .unwrap_or(1);
    let mut unused: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for i in 0..n {
        let code = parts.get(i).copied().unwrap_or(0);
        word.push(unused.remove(code));
    }
    Permutation { word }
}

/// One part `1^r x v` of a diagram decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Part {
    pub perm: Permutation,
    pub shape: Partition,
    pub rank: usize,
    pub dominant: bool,
    /// Northwest cell of the originating component.
    pub corner: (usize, usize),
}

/// Splits the diagram of `w` into parts, one per connected component.
/// Refuses components that are not translated Young diagrams or whose
/// essential boxes disagree on rank.
pub fn parts(w: &Permutation) -> Result<Vec<Part>> {
    diagram_components(w)
        .into_iter()
        .map(|c| {
            let corner = c.corner();
            let rank = c.rank.ok_or(Error::UnequalComponentRank { corner })?;
            let shape = c.shape.ok_or(Error::NonYoungComponent { corner })?;
            let perm = dominant_of_shape(&shape).shift(rank);
            Ok(Part { perm, shape, rank, dominant: rank == 0, corner })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{parse_permutation, rothe_diagram};

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dominant_examples() {
        assert_eq!(dominant_of_shape(&shape(&[1])).word(), &[2, 1]);
        assert_eq!(dominant_of_shape(&shape(&[2, 2])).word(), &[3, 4, 1, 2]);
        assert_eq!(dominant_of_shape(&shape(&[2, 1])).word(), &[3, 2, 1]);
        assert!(dominant_of_shape(&Partition::empty()).is_identity());
    }

    #[test]
    fn dominant_diagram_is_the_shape() {
        for lambda in Partition::in_box(4, 4) {
            let v = dominant_of_shape(&lambda);
            assert!(is_dominant(&v), "{lambda}");
            let cells: Vec<_> = rothe_diagram(&v).cells().iter().copied().collect();
            assert_eq!(cells, lambda.cells().collect::<Vec<_>>());
        }
    }

    #[test]
    fn parts_of_31425() {
        let ps = parts(&parse_permutation("31425").unwrap()).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].shape, shape(&[2]));
        assert!(ps[0].dominant);
        assert_eq!(ps[0].perm.word(), &[3, 1, 2]);
        assert_eq!(ps[1].shape, shape(&[1]));
        assert_eq!(ps[1].rank, 1);
        assert_eq!(ps[1].perm.word(), &[1, 3, 2]);
        assert!(!ps[1].dominant);
    }

    #[test]
    fn parts_of_32154_and_identity() {
        let ps = parts(&parse_permutation("32154").unwrap()).unwrap();
        let summary: Vec<_> = ps.iter().map(|p| (p.shape.clone(), p.rank)).collect();
        assert_eq!(summary, vec![(shape(&[2, 1]), 0), (shape(&[1]), 3)]);
        assert!(parts(&Permutation::identity(4)).unwrap().is_empty());
    }
}
