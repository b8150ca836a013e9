use std::collections::BTreeSet;

use serde::Serialize;

use super::Permutation;
use crate::partition::Partition;

/// `r(i, j) = #{k <= i : w(k) <= j}`, stored row-major, indexed 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    r: Vec<usize>,
}

impl RankTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        debug_assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        self.r[(i - 1) * self.n + (j - 1)]
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.r[(i - 1) * self.n..i * self.n]
    }
}

pub fn rank_table(w: &Permutation) -> RankTable {
    let n = w.size();
    let mut r = vec![0; n * n];
    for i in 1..=n {
        for j in 1..=n {
            let above = if i > 1 { r[(i - 2) * n + (j - 1)] } else { 0 };
            r[(i - 1) * n + (j - 1)] = above + usize::from(w.at(i) <= j);
        }
    }
    RankTable { n, r }
}

/// A set of cells `(row, col)`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct Diagram {
    cells: BTreeSet<(usize, usize)>,
}

impl Diagram {
    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.cells.contains(&cell)
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn transpose(&self) -> Diagram {
        Diagram { cells: self.cells.iter().map(|&(i, j)| (j, i)).collect() }
    }
}

impl FromIterator<(usize, usize)> for Diagram {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        Diagram { cells: iter.into_iter().collect() }
    }
}

pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let n = w.size();
    let inv = w.inverse();
    let mut cells = BTreeSet::new();
    for i in 1..=n {
        for j in 1..w.at(i) {
            if i < inv.at(j) {
                cells.insert((i, j));
            }
        }
    }
    Diagram { cells }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EssentialBox {
    pub i: usize,
    pub j: usize,
    #[serde(rename = "r")]
    pub rank: usize,
}

/// Southeast corners of the Rothe diagram, with the rank at each.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct EssentialSet {
    pub boxes: Vec<EssentialBox>,
}

impl EssentialSet {
    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, EssentialBox> {
        self.boxes.iter()
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.boxes.iter().map(|b| b.rank).max()
    }
}

pub fn essential_set(w: &Permutation) -> EssentialSet {
    let d = rothe_diagram(w);
    let r = rank_table(w);
    let boxes = d
        .cells()
        .iter()
        .filter(|&&(i, j)| !d.contains((i + 1, j)) && !d.contains((i, j + 1)))
        .map(|&(i, j)| EssentialBox { i, j, rank: r.get(i, j) })
        .collect();
    EssentialSet { boxes }
}

/// A 4-connected component of a Rothe diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramComponent {
    pub cells: BTreeSet<(usize, usize)>,
    pub essential: Vec<EssentialBox>,
    /// Common rank of the essential boxes; `None` when they disagree.
    pub rank: Option<usize>,
    /// The component moved to the origin, when that is a Young diagram.
    pub shape: Option<Partition>,
}

impl DiagramComponent {
    /// Northwest-most cell (smallest row, then column).
    pub fn corner(&self) -> (usize, usize) {
        let row = self.cells.iter().map(|c| c.0).min().unwrap();
        let col = self.cells.iter().map(|c| c.1).min().unwrap();
        (row, col)
    }
}

/// Components ordered by their first cell in row-major order.
pub fn diagram_components(w: &Permutation) -> Vec<DiagramComponent> {
    let d = rothe_diagram(w);
    let e = essential_set(w);
    let mut unvisited = d.cells().clone();
    let mut out = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        unvisited.remove(&start);
        let mut stack = vec![start];
        let mut cells = BTreeSet::new();
        while let Some((i, j)) = stack.pop() {
            cells.insert((i, j));
            let neighbours = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
            for nb in neighbours {
                if unvisited.remove(&nb) {
                    stack.push(nb);
                }
            }
        }
        let essential: Vec<EssentialBox> =
            e.iter().filter(|b| cells.contains(&(b.i, b.j))).copied().collect();
        let rank = match essential.split_first() {
            Some((first, rest)) if rest.iter().all(|b| b.rank == first.rank) => Some(first.rank),
            _ => None,
        };
        let shape = young_shape(&cells);
        out.push(DiagramComponent { cells, essential, rank, shape });
    }
    out
}

fn young_shape(cells: &BTreeSet<(usize, usize)>) -> Option<Partition> {
    let top = cells.iter().map(|c| c.0).min()?;
    let left = cells.iter().map(|c| c.1).min()?;
    let bottom = cells.iter().map(|c| c.0).max()?;
    let mut parts = Vec::new();
    for row in top..=bottom {
        let len = cells.iter().filter(|c| c.0 == row).count();
        if len == 0 || !(left..left + len).all(|c| cells.contains(&(row, c))) {
            return None;
        }
        parts.push(len);
    }
    Partition::new(parts).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn w(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn rank_table_of_31425() {
        let r = rank_table(&w("31425"));
        assert_eq!(r.row(1), &[0, 0, 1, 1, 1]);
        assert_eq!(r.row(2), &[1, 1, 2, 2, 2]);
        assert_eq!(r.row(3), &[1, 1, 2, 3, 3]);
        assert_eq!(r.row(4), &[1, 2, 3, 4, 4]);
        assert_eq!(r.row(5), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn rank_table_identity_and_32154() {
        let r = rank_table(&Permutation::identity(5));
        for i in 1..=5 {
            for j in 1..=5 {
                assert_eq!(r.get(i, j), i.min(j));
            }
        }
        assert_eq!(rank_table(&w("32154")).get(4, 4), 3);
    }

    #[test]
    fn rothe_diagrams() {
        let cells = |s: &str| rothe_diagram(&w(s)).cells().iter().copied().collect::<Vec<_>>();
        assert_eq!(cells("31425"), vec![(1, 1), (1, 2), (3, 2)]);
        assert_eq!(cells("32154"), vec![(1, 1), (1, 2), (2, 1), (4, 4)]);
        assert!(rothe_diagram(&Permutation::identity(4)).is_empty());
    }

    #[test]
    fn essential_sets() {
        let ess = |s: &str| {
            essential_set(&w(s)).iter().map(|b| (b.i, b.j, b.rank)).collect::<Vec<_>>()
        };
        assert_eq!(ess("14235"), vec![(2, 3, 1)]);
        assert_eq!(ess("31254"), vec![(1, 2, 0), (4, 4, 3)]);
        assert_eq!(ess("31542"), vec![(1, 2, 0), (3, 4, 2), (4, 2, 1)]);
        assert!(essential_set(&Permutation::identity(3)).is_empty());
    }

    #[test]
    fn components_of_examples() {
        let comps = diagram_components(&w("31425"));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].cells.iter().copied().collect::<Vec<_>>(), vec![(1, 1), (1, 2)]);
        assert_eq!(comps[0].rank, Some(0));
        assert_eq!(comps[1].cells.iter().copied().collect::<Vec<_>>(), vec![(3, 2)]);
        assert_eq!(comps[1].rank, Some(1));

        let comps = diagram_components(&w("32154"));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].shape, Some(Partition::new(vec![2, 1]).unwrap()));
        assert_eq!(comps[0].rank, Some(0));
        assert_eq!(comps[1].cells.iter().copied().collect::<Vec<_>>(), vec![(4, 4)]);
        assert_eq!(comps[1].rank, Some(3));

        assert!(diagram_components(&Permutation::identity(3)).is_empty());
    }

    #[test]
    fn non_young_component_has_no_shape() {
        let cells: BTreeSet<_> = [(1, 2), (2, 1), (2, 2)].into_iter().collect();
        assert_eq!(young_shape(&cells), None);
        let cells: BTreeSet<_> = [(2, 3), (2, 4), (3, 3)].into_iter().collect();
        assert_eq!(young_shape(&cells), Some(Partition::new(vec![2, 1]).unwrap()));
    }
}
