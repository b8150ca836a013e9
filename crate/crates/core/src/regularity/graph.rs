use std::collections::BTreeSet;

use serde::Serialize;

use super::canonical_antidiagonal;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default edge budget for the exhaustive recession search.
pub const DEFAULT_EDGE_CAP: usize = 22;

/// A bipartite graph on row vertices `1..=rows` and column vertices
/// `1..=cols`. Edges are `(row, col)` pairs, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    pub rows: usize,
    pub cols: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(rows: usize, cols: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges: BTreeSet<_> = edges.into_iter().collect();
        for &(r, c) in &edges {
            assert!(r >= 1 && r <= rows && c >= 1 && c <= cols, "edge ({r},{c}) out of bounds");
        }
        BipartiteGraph { rows, cols, edges: edges.into_iter().collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows + self.cols
    }

    /// Vertex index of a row (`0..rows`) or column (`rows..rows+cols`).
    fn row_vertex(&self, r: usize) -> usize {
        r - 1
    }

    fn col_vertex(&self, c: usize) -> usize {
        self.rows + c - 1
    }

    /// Connected on all `rows + cols` vertices.
    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.edges.len()).collect();
        self.vertex_count() > 0 && components(self, &all) == 1
    }
}

/// `B_lambda`: one edge per cell of the partition.
pub fn partition_graph(lambda: &Partition) -> BipartiteGraph {
    BipartiteGraph::new(lambda.rows(), lambda.cols(), lambda.cells())
}

/// Maximum matching by augmenting paths.
pub fn max_matching(b: &BipartiteGraph) -> usize {
    let mut adj = vec![Vec::new(); b.rows + 1];
    for &(r, c) in &b.edges {
        adj[r].push(c);
    }
    let mut match_col = vec![0usize; b.cols + 1];
    fn augment(r: usize, adj: &[Vec<usize>], seen: &mut [bool], match_col: &mut [usize]) -> bool {
        for &c in &adj[r] {
            if !seen[c] {
                seen[c] = true;
                if match_col[c] == 0 || augment(match_col[c], adj, seen, match_col) {
                    match_col[c] = r;
                    return true;
                }
            }
        }
        false
    }
    (1..=b.rows)
        .filter(|&r| augment(r, &adj, &mut vec![false; b.cols + 1], &mut match_col))
        .count()
}

/// `B` with a marked edge set `S`: edges of `S` point both ways, the rest
/// point from rows to columns.
#[derive(Debug, Clone)]
pub struct RecessionGraph<'a> {
    pub graph: &'a BipartiteGraph,
    pub marked: BTreeSet<(usize, usize)>,
}

impl<'a> RecessionGraph<'a> {
    pub fn new(graph: &'a BipartiteGraph, marked: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let marked: BTreeSet<_> = marked.into_iter().collect();
        assert!(
            marked.iter().all(|e| graph.edges.binary_search(e).is_ok()),
            "marked edges must belong to the graph"
        );
        RecessionGraph { graph, marked }
    }

    fn marked_indices(&self) -> Vec<usize> {
        self.marked.iter().map(|e| self.graph.edges.binary_search(e).unwrap()).collect()
    }

    /// Connected components of the spanning subgraph `(rows ⊔ cols, S)`.
    pub fn marked_components(&self) -> usize {
        components(self.graph, &self.marked_indices())
    }
}

/// Strong connectivity of `R(S;B)` on all vertices, by forward and
/// backward reachability from one vertex.
pub fn is_strongly_connected(r: &RecessionGraph) -> bool {
    let b = r.graph;
    let marked: Vec<bool> = b.edges.iter().map(|e| r.marked.contains(e)).collect();
    strongly_connected(b, &marked)
}

fn strongly_connected(b: &BipartiteGraph, marked: &[bool]) -> bool {
    let n = b.vertex_count();
    if n == 0 {
        return true;
    }
    let mut out = vec![Vec::new(); n];
    let mut inc = vec![Vec::new(); n];
    for (k, &(r, c)) in b.edges.iter().enumerate() {
        let (u, v) = (b.row_vertex(r), b.col_vertex(c));
        out[u].push(v);
        inc[v].push(u);
        if marked[k] {
            out[v].push(u);
            inc[u].push(v);
        }
    }
    let reach_all = |adj: &[Vec<usize>]| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    };
    reach_all(&out) && reach_all(&inc)
}

/// Components of the spanning subgraph on all vertices using the listed
/// edge indices.
fn components(b: &BipartiteGraph, edge_idx: &[usize]) -> usize {
    let n = b.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for &k in edge_idx {
        let (r, c) = b.edges[k];
        let (u, v) = (find(&mut parent, b.row_vertex(r)), find(&mut parent, b.col_vertex(c)));
        if u != v {
            parent[u] = v;
            count -= 1;
        }
    }
    count
}

/// `r(B)`: the largest number of components of a marked set `S` for which
/// `R(S;B)` is strongly connected. Exhaustive over edge subsets in Gray-code
/// order, tracking vertex coverage incrementally; strong connectivity forces
/// every vertex to touch `S`, so only covering subsets are tested. Stops
/// early once the matching bound is reached.
pub fn recession_connectivity(b: &BipartiteGraph, edge_cap: usize) -> Result<usize> {
    let e = b.edges.len();
    if e > edge_cap {
        return Err(Error::CapExceeded { what: "edges", value: e, cap: edge_cap });
    }
    if !b.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let bound = max_matching(b);
    let n = b.vertex_count();
    let mut degree = vec![0usize; n];
    let mut uncovered = n;
    let mut marked = vec![false; e];
    let mut best = 0;
    let ends: Vec<(usize, usize)> =
        b.edges.iter().map(|&(r, c)| (b.row_vertex(r), b.col_vertex(c))).collect();
    for step in 1u64..(1u64 << e) {
        let k = step.trailing_zeros() as usize;
        marked[k] = !marked[k];
        let (u, v) = ends[k];
        for x in [u, v] {
            if marked[k] {
                if degree[x] == 0 {
                    uncovered -= 1;
                }
                degree[x] += 1;
            } else {
                degree[x] -= 1;
                if degree[x] == 0 {
                    uncovered += 1;
                }
            }
        }
        if uncovered != 0 {
            continue;
        }
        let idx: Vec<usize> = (0..e).filter(|&i| marked[i]).collect();
        let comps = components(b, &idx);
        if comps <= best || !strongly_connected(b, &marked) {
            continue;
        }
        best = comps;
        if best == bound {
            break;
        }
    }
    Ok(best)
}

/// An explicit marked set for the thickened graph of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecessionWitness {
    pub edges: Vec<(usize, usize)>,
    pub components: usize,
    pub strongly_connected: bool,
}

/// Marks the canonical antidiagonal of `lambda` together with the first-row
/// cells right of it and first-column cells below it, shifts all of them one
/// step southeast into the thickening, and adds the corner `(1,1)`.
pub fn recession_witness(lambda: &Partition) -> RecessionWitness {
    let k = canonical_antidiagonal(lambda).len();
    let mut inner: BTreeSet<(usize, usize)> = canonical_antidiagonal(lambda).cells.into_iter().collect();
    inner.extend((k + 1..=lambda.row_len(1)).map(|j| (1, j)));
    inner.extend((k + 1..=lambda.rows()).map(|i| (i, 1)));
    let mut edges: Vec<(usize, usize)> = inner.into_iter().map(|(i, j)| (i + 1, j + 1)).collect();
    edges.push((1, 1));
    edges.sort();
    let graph = partition_graph(&super::thicken(lambda));
    let r = RecessionGraph::new(&graph, edges.iter().copied());
    RecessionWitness {
        components: r.marked_components(),
        strongly_connected: is_strongly_connected(&r),
        edges,
    }
}
