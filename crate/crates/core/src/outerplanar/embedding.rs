use serde::{Deserialize, Serialize};

use super::OuterplanarError;
use crate::graph::Graph;

/// A Hamiltonian outer cycle together with the chords it leaves inside.
///
/// `outer_order` is canonical: it starts at vertex 0 and runs in the direction
/// whose second vertex is the smaller of vertex 0's two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterEmbedding {
    outer_order: Vec<usize>,
    #[serde(skip)]
    position: Vec<usize>,
    chords: Vec<(usize, usize)>,
}

impl OuterEmbedding {
    /// Validates `order` as an outer cycle of `g` with pairwise non-crossing
    /// chords and returns the canonical embedding.
    pub fn from_cycle(g: &Graph, order: &[usize]) -> Result<Self, OuterplanarError> {
        let n = g.vertex_count();
        if n < 3 || order.len() != n {
            return Err(OuterplanarError::InvalidCycle(format!(
                "expected a cyclic order of all {n} vertices, got {} entries",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(OuterplanarError::InvalidCycle(format!("{order:?} is not a permutation of 0..{n}")));
            }
        }
        for i in 0..n {
            let (u, v) = (order[i], order[(i + 1) % n]);
            if !g.has_edge(u, v) {
                return Err(OuterplanarError::InvalidCycle(format!("cycle step {u}-{v} is not an edge")));
            }
        }

        let outer_order = canonical_cycle(order);
        let mut position = vec![0; n];
        for (i, &v) in outer_order.iter().enumerate() {
            position[v] = i;
        }
        let chords: Vec<_> = g
            .edges()
            .filter(|&(u, v)| {
                let d = position[u].abs_diff(position[v]);
                d != 1 && d != n - 1
            })
            .collect();
        let emb = Self { outer_order, position, chords };
        if let Some((a, b)) = emb.first_crossing() {
            return Err(OuterplanarError::CrossingChords(a, b));
        }
        Ok(emb)
    }

    pub fn outer_order(&self) -> &[usize] {
        &self.outer_order
    }

    /// Chords as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn vertex_count(&self) -> usize {
        self.outer_order.len()
    }

    /// Position of `v` along the outer cycle.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Chord endpoints as positions `(i, j)` with `i < j`.
    pub fn interval(&self, (u, v): (usize, usize)) -> (usize, usize) {
        let (a, b) = (self.position[u], self.position[v]);
        (a.min(b), a.max(b))
    }

    fn first_crossing(&self) -> Option<((usize, usize), (usize, usize))> {
        for (i, &c) in self.chords.iter().enumerate() {
            let (a, b) = self.interval(c);
            for &d in &self.chords[i + 1..] {
                let (x, y) = self.interval(d);
                if (a < x && x < b && b < y) || (x < a && a < y && y < b) {
                    return Some((c, d));
                }
            }
        }
        None
    }

    /// Re-derives the position table after deserialization.
    pub fn rebuild_positions(&mut self) {
        self.position = vec![0; self.outer_order.len()];
        for (i, &v) in self.outer_order.iter().enumerate() {
            self.position[v] = i;
        }
    }
}

/// Rotates a cyclic sequence to start at its minimum element and orients it
/// so the second entry is smaller than the last.
pub fn canonical_cycle(order: &[usize]) -> Vec<usize> {
    let n = order.len();
    let start = (0..n).min_by_key(|&i| order[i]).unwrap_or(0);
    let mut out: Vec<usize> = (0..n).map(|i| order[(start + i) % n]).collect();
    if n > 2 && out[n - 1] < out[1] {
        out[1..].reverse();
    }
    out
}

/// Enumerates Hamiltonian cycles in canonical form, in lexicographic order,
/// stopping after `limit` of them.
pub fn hamiltonian_cycles(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut found = Vec::new();
    if n < 3 || limit == 0 {
        return found;
    }
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    extend(g, &mut path, &mut used, limit, &mut found);
    found
}

fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], limit: usize, found: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let last = *path.last().expect("path starts at vertex 0");
    if path.len() == n {
        if g.has_edge(last, 0) && path[1] < path[n - 1] {
            found.push(path.clone());
        }
        return;
    }
    // Vertex 0 must keep a free neighbor to close the cycle through.
    if path.len() > 1 && !g.neighbors(0).iter().any(|&w| !used[w]) {
        return;
    }
    for &w in g.neighbors(last) {
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        extend(g, path, used, limit, found);
        path.pop();
        used[w] = false;
        if found.len() >= limit {
            return;
        }
    }
}

/// Finds the canonical Hamiltonian outer cycle of a 2-connected graph.
pub fn find_outer_cycle(g: &Graph) -> Result<Vec<usize>, OuterplanarError> {
    if !g.is_two_connected() {
        return Err(OuterplanarError::NotTwoConnected);
    }
    hamiltonian_cycles(g, 1).pop().ok_or(OuterplanarError::NoHamiltonianCycle)
}

/// Recognizes a 2-connected outerplanar graph: a Hamiltonian cycle whose
/// remaining edges pairwise do not cross.
pub fn check_outerplanar(g: &Graph) -> Result<OuterEmbedding, OuterplanarError> {
    let first = find_outer_cycle(g)?;
    let n = g.vertex_count();
    // Beyond 2n - 3 edges every Hamiltonian cycle leaves crossing chords, so
    // the first cycle already carries a witness.
    let cycles = if g.edge_count() > 2 * n - 3 { vec![first] } else { hamiltonian_cycles(g, usize::MAX) };
    let mut first_err = None;
    for cycle in cycles {
        match OuterEmbedding::from_cycle(g, &cycle) {
            Ok(emb) => return Ok(emb),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(first_err.expect("at least one Hamiltonian cycle was examined"))
}
