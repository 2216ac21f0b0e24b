//! Simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count the bitmask-based solvers can address.
pub const MAX_MASK_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("edge list line {line}: {message}")]
    EdgeListSyntax { line: usize, message: String },
}

/// A simple undirected graph. Vertex ids are exactly `0..n`.
///
/// Adjacency lists are kept sorted so every traversal that walks them is
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse
    /// into a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self { n, adj, edge_count })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, adj: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Neighborhood bitmasks. Only valid for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= MAX_MASK_VERTICES, "bitmask view needs n <= 64, got {}", self.n);
        self.adj.iter().map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v))).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(None)
    }

    fn is_connected_without(&self, removed: Option<usize>) -> bool {
        let alive = self.n - usize::from(removed.is_some());
        let Some(start) = (0..self.n).find(|&v| Some(v) != removed) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut reached = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] && Some(w) != removed {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == alive
    }

    /// True iff the graph has at least three vertices, is connected, and stays
    /// connected after deleting any single vertex. `K_2` is rejected.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.is_connected_without(Some(v)))
    }

    /// True iff `seq` lists distinct vertices that induce a path in this
    /// order: consecutive vertices adjacent, no other pair adjacent.
    pub fn is_induced_path(&self, seq: &[usize]) -> bool {
        let mut seen = vec![false; self.n];
        for &v in seq {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        for (i, &u) in seq.iter().enumerate() {
            for (j, &v) in seq.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Renders the edge-list text format: a `n <count>` header followed by
    /// one `u v` line per edge, LF-terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Blank lines and `#` comments are
    /// ignored.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let syntax = |line: usize, message: String| GraphError::EdgeListSyntax { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing `n <count>` header".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", count] => count.parse::<usize>().map_err(|e| syntax(hline, format!("bad vertex count: {e}")))?,
            _ => return Err(syntax(hline, format!("expected `n <count>`, found {header:?}"))),
        };
        let mut edges = Vec::new();
        for (line, body) in lines {
            let parts: Vec<_> = body.split_whitespace().collect();
            let [u, v] = parts.as_slice() else {
                return Err(syntax(line, format!("expected `u v`, found {body:?}")));
            };
            let parse = |s: &str| s.parse::<usize>().map_err(|e| syntax(line, format!("bad vertex id {s:?}: {e}")));
            edges.push((parse(u)?, parse(v)?));
        }
        Self::new(n, edges)
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_edge_list(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}
