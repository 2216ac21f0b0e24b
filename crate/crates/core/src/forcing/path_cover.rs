//! Exact path cover number: the fewest induced paths partitioning `V(G)`.
//!
//! Backtracking always covers the smallest uncovered vertex `v` next, trying
//! every induced path through `v` in the uncovered subgraph. Each such path is
//! generated once: grow to the right of `v`, then to the left, and keep only
//! orientations whose left neighbour of `v` exceeds its right neighbour.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::ForcingError;
use crate::graph::Graph;

pub const DEFAULT_PATH_COVER_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPartition {
    pub parts: Vec<Vec<usize>>,
}

impl PathPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Parts cover `0..n` exactly once and each induces a path.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        for part in &self.parts {
            for &v in part {
                if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
            if !g.is_induced_path(part) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: Vec<Vec<usize>>,
    parts: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn cover(&mut self, uncovered: u64) {
        if uncovered == 0 {
            if self.parts.len() < self.best.len() {
                self.best = self.parts.clone();
            }
            return;
        }
        if self.parts.len() + 1 >= self.best.len() {
            return;
        }
        let v = uncovered.trailing_zeros() as usize;
        let mut path = VecDeque::from([v]);
        self.grow_right(&mut path, 1 << v, uncovered);
    }

    /// A vertex may join an end of the path if it is uncovered and adjacent
    /// to that end only.
    fn candidates(&self, end: usize, inside: u64, uncovered: u64) -> u64 {
        let mut out = 0;
        let mut pool = self.adj[end] & uncovered & !inside;
        while pool != 0 {
            let w = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            if self.adj[w] & inside == 1 << end {
                out |= 1 << w;
            }
        }
        out
    }

    fn grow_right(&mut self, path: &mut VecDeque<usize>, inside: u64, uncovered: u64) {
        self.grow_left(path, path.len() - 1, inside, uncovered);
        let mut next = self.candidates(*path.back().unwrap(), inside, uncovered);
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push_back(w);
            self.grow_right(path, inside | 1 << w, uncovered);
            path.pop_back();
        }
    }

    fn grow_left(&mut self, path: &mut VecDeque<usize>, right_len: usize, inside: u64, uncovered: u64) {
        let left_len = path.len() - 1 - right_len;
        // Positions: left part, then v at index left_len, then right part.
        let canonical = left_len == 0 || (right_len > 0 && path[left_len - 1] > path[left_len + 1]);
        if canonical {
            self.parts.push(path.iter().copied().collect());
            self.cover(uncovered & !inside);
            self.parts.pop();
        }
        let mut next = self.candidates(*path.front().unwrap(), inside, uncovered);
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push_front(w);
            self.grow_left(path, right_len, inside | 1 << w, uncovered);
            path.pop_front();
        }
    }
}

/// `P(G)` with an optimal partition, for graphs within
/// [`DEFAULT_PATH_COVER_LIMIT`] vertices.
pub fn path_cover_number(g: &Graph) -> Result<(usize, PathPartition), ForcingError> {
    path_cover_number_with_limit(g, DEFAULT_PATH_COVER_LIMIT)
}

pub fn path_cover_number_with_limit(g: &Graph, limit: usize) -> Result<(usize, PathPartition), ForcingError> {
    let n = g.vertex_count();
    let limit = limit.min(crate::graph::MAX_MASK_VERTICES);
    if n > limit {
        return Err(ForcingError::InstanceTooLarge { solver: "path cover", n, limit });
    }
    let adj = g.adjacency_masks();
    let mut search = Search { adj: &adj, best: (0..n).map(|v| vec![v]).collect(), parts: Vec::new() };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.cover(all);
    let parts = search.best;
    Ok((parts.len(), PathPartition { parts }))
}
