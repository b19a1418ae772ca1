//! Simple graphs, their edge ideals, and the odd-girth threshold for
//! `I^(k) = I^k`.
//!
//! For an edge ideal, `I^(k) = I^k` for all `k ≤ n` exactly when the graph
//! has no odd cycle of length at most `2n - 1`; the first failing power is
//! `(g + 1) / 2` for odd girth `g`. The product of the vertices of an odd
//! cycle of length `2t - 1` lies in `I^(t)` but not in `I^t`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::symbolic::SymbolicIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates endpoints, orients each edge as `(low, high)`, deduplicates.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {a}")));
            }
            if a >= num_vertices || b >= num_vertices {
                return Err(Error::Invalid(format!("edge ({a}, {b}) out of range")));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Graph { num_vertices, edges: out })
    }

    pub fn cycle(n: usize) -> Self {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle needs n >= 3")
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid")
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// `(x_i x_j : ij ∈ E)`; isolated vertices stay as unused variables.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        if self.edges.is_empty() {
            return Err(Error::Invalid("edge ideal of a graph without edges".into()));
        }
        MonomialIdeal::from_supports(self.num_vertices, self.edges.iter().map(|&(a, b)| [a, b]))
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.neighbors();
        let mut color: Vec<Option<bool>> = vec![None; self.num_vertices];
        for root in 0..self.num_vertices {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are colored");
                for &v in &adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest odd cycle, `None` when bipartite.
    ///
    /// A same-layer edge `uv` in the BFS tree of `r` closes an odd walk of
    /// length `2 d(u) + 1`; the minimum over all roots is the odd girth.
    pub fn odd_girth(&self) -> Option<usize> {
        let adj = self.neighbors();
        let mut best: Option<usize> = None;
        for root in 0..self.num_vertices {
            let dist = bfs(&adj, root, 0);
            for &(u, v) in &self.edges {
                if let (Some(du), Some(dv)) = (dist[u], dist[v]) {
                    if du == dv {
                        let len = 2 * du + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Least `t` with `I^(t) ≠ I^t`, read off the odd girth.
    pub fn equality_threshold(&self) -> Option<u32> {
        self.odd_girth().map(|g| g.div_ceil(2) as u32)
    }

    /// The lexicographically least vertex sequence of a simple cycle of
    /// exactly `len` vertices: smallest vertex first, and the second vertex
    /// below the last one.
    pub fn least_cycle(&self, len: usize) -> Option<Vec<usize>> {
        if len < 3 {
            return None;
        }
        let adj = self.neighbors();
        for start in 0..self.num_vertices {
            let dist = bfs(&adj, start, start);
            let mut path = vec![start];
            let mut on_path = vec![false; self.num_vertices];
            on_path[start] = true;
            if extend_cycle(&adj, &dist, len, &mut path, &mut on_path) {
                return Some(path);
            }
        }
        None
    }

    /// Product of the vertices of the least cycle of length `2t - 1`.
    pub fn odd_cycle_witness(&self, t: u32) -> Result<Monomial> {
        let len = (2 * t as usize)
            .checked_sub(1)
            .filter(|&l| l >= 3)
            .ok_or_else(|| Error::Invalid(format!("no odd cycle of length 2t-1 for t = {t}")))?;
        let cycle =
            self.least_cycle(len).ok_or_else(|| Error::Invalid(format!("graph has no cycle of length {len}")))?;
        Ok(Monomial::from_support(self.num_vertices, cycle))
    }
}

/// BFS distances from `root` inside the vertices `>= floor`.
fn bfs(adj: &[Vec<usize>], root: usize, floor: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued");
        for &v in &adj[u] {
            if v >= floor && dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn extend_cycle(
    adj: &[Vec<usize>],
    dist: &[Option<usize>],
    len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let start = path[0];
    let u = *path.last().expect("path starts at the root");
    if path.len() == len {
        return adj[u].binary_search(&start).is_ok() && path[1] < path[len - 1];
    }
    let remaining = len - path.len();
    for &v in &adj[u] {
        if v <= start || on_path[v] {
            continue;
        }
        // v must still be able to get back to the start in time.
        match dist[v] {
            Some(d) if d <= remaining => {}
            _ => continue,
        }
        path.push(v);
        on_path[v] = true;
        if extend_cycle(adj, dist, len, path, on_path) {
            return true;
        }
        on_path[v] = false;
        path.pop();
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdRow {
    pub k: u32,
    pub predicted_equal: bool,
    pub computed_equal: bool,
    pub agree: bool,
    pub witness: Option<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub odd_girth: Option<usize>,
    pub threshold: Option<u32>,
    pub rows: Vec<ThresholdRow>,
    pub all_agree: bool,
}

/// Compares `I^(k) = I^k`, computed algebraically for `k ≤ up_to`, against
/// the odd-girth prediction.
pub fn verify_threshold(graph: &Graph, up_to: u32, limits: &Limits) -> Result<ThresholdReport> {
    if up_to > limits.max_threshold_power {
        return Err(Error::SizeGuard {
            what: "threshold verification power",
            limit: limits.max_threshold_power as usize,
        });
    }
    let ideal = graph.edge_ideal()?;
    let symbolic = SymbolicIdeal::with_limits(&ideal, *limits)?;
    let threshold = graph.equality_threshold();
    let mut rows = Vec::new();
    for k in 1..=up_to {
        let predicted_equal = threshold.is_none_or(|t| k < t);
        let check = symbolic.equals_ordinary(k)?;
        rows.push(ThresholdRow {
            k,
            predicted_equal,
            computed_equal: check.holds,
            agree: predicted_equal == check.holds,
            witness: check.witness,
        });
    }
    Ok(ThresholdReport { odd_girth: graph.odd_girth(), threshold, all_agree: rows.iter().all(|r| r.agree), rows })
}

/// One representative per isomorphism class of graphs on `n ≤ 6` vertices,
/// each in its lexicographically least labelling of the edge bitmask.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 6 {
        return Err(Error::SizeGuard { what: "graph enumeration vertices", limit: 6 });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let index_of = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let perm_tables: Vec<Vec<usize>> =
        permutations(n).into_iter().map(|p| pairs.iter().map(|&(a, b)| index_of(p[a], p[b])).collect()).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canonical = perm_tables.iter().all(|table| {
            let mut image = 0u32;
            for (bit, &to) in table.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    image |= 1 << to;
                }
            }
            image >= mask
        });
        if canonical {
            let edges = pairs.iter().enumerate().filter(|(bit, _)| mask >> bit & 1 == 1).map(|(_, &e)| e);
            out.push(Graph::new(n, edges)?);
        }
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn construction() {
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 3)]).is_err());
    }

    #[test]
    fn edge_ideals() {
        let tri = Graph::cycle(3).edge_ideal().unwrap();
        assert_eq!(tri, MonomialIdeal::from_supports(3, [[0, 1], [1, 2], [0, 2]]).unwrap());
        assert_eq!(path(2).edge_ideal().unwrap().generators().len(), 1);
        assert_eq!(Graph::cycle(5).edge_ideal().unwrap().generators().len(), 5);
        assert!(Graph::new(4, []).unwrap().edge_ideal().is_err());
    }

    #[test]
    fn bipartiteness_and_girth() {
        assert!(Graph::cycle(4).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        let forest = Graph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert!(forest.is_bipartite());
        assert_eq!(Graph::cycle(5).odd_girth(), Some(5));
        assert_eq!(Graph::cycle(4).odd_girth(), None);
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 2));
        assert_eq!(Graph::new(7, edges).unwrap().odd_girth(), Some(3));
    }

    #[test]
    fn thresholds() {
        assert_eq!(Graph::cycle(3).equality_threshold(), Some(2));
        assert_eq!(Graph::cycle(5).equality_threshold(), Some(3));
        assert_eq!(Graph::cycle(6).equality_threshold(), None);
    }

    #[test]
    fn witnesses() {
        assert_eq!(Graph::cycle(3).odd_cycle_witness(2).unwrap(), Monomial::new(vec![1, 1, 1]));
        assert_eq!(Graph::cycle(5).odd_cycle_witness(3).unwrap(), Monomial::new(vec![1; 5]));
        assert!(Graph::cycle(4).odd_cycle_witness(2).is_err());
        assert!(Graph::cycle(3).odd_cycle_witness(1).is_err());
        // Two triangles sharing vertex 2; the least one is 0-1-2.
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bowtie.least_cycle(3), Some(vec![0, 1, 2]));
        assert_eq!(bowtie.least_cycle(5), None);
    }

    #[test]
    fn threshold_reports() {
        let limits = Limits::default();
        let c5 = verify_threshold(&Graph::cycle(5), 3, &limits).unwrap();
        assert!(c5.all_agree);
        assert_eq!(c5.rows.iter().map(|r| r.computed_equal).collect::<Vec<_>>(), vec![true, true, false]);
        let c4 = verify_threshold(&Graph::cycle(4), 3, &limits).unwrap();
        assert!(c4.all_agree && c4.rows.iter().all(|r| r.computed_equal));
        let c3 = verify_threshold(&Graph::cycle(3), 2, &limits).unwrap();
        assert_eq!(c3.rows[1].witness, Some(Monomial::new(vec![1, 1, 1])));
        assert!(verify_threshold(&Graph::cycle(3), 7, &limits).unwrap_err().is_guard());
    }

    #[test]
    fn graph_counts() {
        // OEIS A000088.
        let counts: Vec<usize> = (1..=6).map(|n| nonisomorphic_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }
}
