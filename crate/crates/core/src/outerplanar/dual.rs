use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::OuterEmbedding;

/// An inner face, listed as a cyclic vertex sequence that follows the outer
/// cycle's direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<usize>,
}

/// Two faces sharing the chord `chord` (stored with `chord.0 < chord.1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEdge {
    pub faces: (usize, usize),
    pub chord: (usize, usize),
}

/// The weak dual: inner faces joined when they share a chord.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakDual {
    pub faces: Vec<Face>,
    pub dual_edges: Vec<DualEdge>,
    adjacency: Vec<Vec<usize>>,
    /// `outer_edge_face[i]` owns the outer edge from position `i` to `i + 1`.
    outer_edge_face: Vec<usize>,
}

impl WeakDual {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn degree(&self, f: usize) -> usize {
        self.adjacency[f].len()
    }

    pub fn neighbors(&self, f: usize) -> &[usize] {
        &self.adjacency[f]
    }

    /// Face owning the outer-cycle edge that leaves position `pos`.
    pub fn outer_edge_face(&self, pos: usize) -> usize {
        self.outer_edge_face[pos]
    }

    /// Chords face `f` shares with its dual neighbors.
    pub fn shared_chords(&self, f: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dual_edges.iter().filter(move |e| e.faces.0 == f || e.faces.1 == f).map(|e| e.chord)
    }

    /// Connected with exactly `faces - 1` edges.
    pub fn is_tree(&self) -> bool {
        let k = self.faces.len();
        if k == 0 || self.dual_edges.len() != k - 1 {
            return false;
        }
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(f) = queue.pop_front() {
            for &h in &self.adjacency[f] {
                if !std::mem::replace(&mut seen[h], true) {
                    reached += 1;
                    queue.push_back(h);
                }
            }
        }
        reached == k
    }
}

/// Builds inner faces from the chord nesting. Chords become position
/// intervals; the outer edge closing the cycle acts as the root interval
/// `[0, n-1]`. Each interval's face walks from its left end to its right end,
/// jumping over directly nested intervals. Face 0 is the root face; the rest
/// follow the chords sorted by `(left asc, right desc)`.
pub fn build_weak_dual(emb: &OuterEmbedding) -> WeakDual {
    let n = emb.vertex_count();
    let order = emb.outer_order();

    let mut intervals: Vec<(usize, usize)> = emb.chords().iter().map(|&c| emb.interval(c)).collect();
    intervals.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    intervals.insert(0, (0, n - 1));

    let mut children = vec![Vec::new(); intervals.len()];
    let mut stack = vec![0usize];
    for (idx, &(a, b)) in intervals.iter().enumerate().skip(1) {
        while let Some(&top) = stack.last() {
            let (ta, tb) = intervals[top];
            if ta <= a && b <= tb {
                break;
            }
            stack.pop();
        }
        let parent = *stack.last().expect("root interval contains every chord");
        children[parent].push(idx);
        stack.push(idx);
    }

    let mut faces = Vec::with_capacity(intervals.len());
    let mut dual_edges = Vec::new();
    let mut outer_edge_face = vec![0; n];
    for (f, &(a, b)) in intervals.iter().enumerate() {
        let mut vertices = vec![order[a]];
        let mut pos = a;
        let mut next_child = children[f].iter().peekable();
        while pos < b {
            match next_child.peek() {
                Some(&&c) if intervals[c].0 == pos => {
                    let (ca, cb) = intervals[c];
                    let (u, v) = (order[ca], order[cb]);
                    dual_edges.push(DualEdge { faces: (f, c), chord: (u.min(v), u.max(v)) });
                    pos = cb;
                    next_child.next();
                }
                _ => {
                    outer_edge_face[pos] = f;
                    pos += 1;
                }
            }
            vertices.push(order[pos]);
        }
        faces.push(Face { vertices });
    }
    // The closing outer edge (n-1 -> 0) belongs to the root face.
    outer_edge_face[n - 1] = 0;

    let mut adjacency = vec![Vec::new(); faces.len()];
    for e in &dual_edges {
        adjacency[e.faces.0].push(e.faces.1);
        adjacency[e.faces.1].push(e.faces.0);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    WeakDual { faces, dual_edges, adjacency, outer_edge_face }
}

/// Classification of a weak-dual vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DualClass {
    Leaf,
    Branch,
    Limb,
    Trunk,
}

/// Leaf: degree 1, or the only face. Branch: degree 2 and adjacent to a leaf
/// or (transitively) another branch. Limb: degree 3+ and adjacent to a leaf or
/// branch. Trunk: everything else.
pub fn classify_dual(wd: &WeakDual) -> Vec<DualClass> {
    let k = wd.face_count();
    if k == 1 {
        return vec![DualClass::Leaf];
    }
    let mut class: Vec<Option<DualClass>> = (0..k).map(|f| (wd.degree(f) == 1).then_some(DualClass::Leaf)).collect();
    let marked = |c: Option<DualClass>| matches!(c, Some(DualClass::Leaf | DualClass::Branch));

    // Branch marks propagate inward along degree-2 chains.
    let mut queue: VecDeque<usize> = (0..k).filter(|&f| class[f].is_some()).collect();
    while let Some(f) = queue.pop_front() {
        for &h in wd.neighbors(f) {
            if class[h].is_none() && wd.degree(h) == 2 {
                class[h] = Some(DualClass::Branch);
                queue.push_back(h);
            }
        }
    }
    (0..k)
        .map(|f| {
            class[f].unwrap_or_else(|| {
                if wd.degree(f) >= 3 && wd.neighbors(f).iter().any(|&h| marked(class[h])) {
                    DualClass::Limb
                } else {
                    DualClass::Trunk
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::outerplanar::check_outerplanar;

    fn dual_of(g: &Graph) -> WeakDual {
        build_weak_dual(&check_outerplanar(g).unwrap())
    }

    #[test]
    fn chordless_cycle_single_face() {
        let g = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let wd = dual_of(&g);
        assert_eq!(wd.face_count(), 1);
        assert!(wd.dual_edges.is_empty());
        assert_eq!(wd.faces[0].vertices, vec![0, 1, 2, 3, 4, 5]);
        assert!(wd.is_tree());
        assert_eq!(classify_dual(&wd), vec![DualClass::Leaf]);
    }

    #[test]
    fn diamond_two_triangles() {
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let wd = dual_of(&g);
        assert_eq!(wd.face_count(), 2);
        assert_eq!(wd.dual_edges.len(), 1);
        assert_eq!(wd.dual_edges[0].chord, (0, 1));
        assert!(wd.faces.iter().all(|f| f.vertices.len() == 3));
        assert_eq!(classify_dual(&wd), vec![DualClass::Leaf; 2]);
    }

    #[test]
    fn sun3_star_dual() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]).unwrap();
        let wd = dual_of(&g);
        assert_eq!(wd.face_count(), 4);
        assert!(wd.is_tree());
        let center = (0..4).find(|&f| wd.degree(f) == 3).unwrap();
        let mut tri = wd.faces[center].vertices.clone();
        tri.sort_unstable();
        assert_eq!(tri, vec![0, 1, 2]);
        let cls = classify_dual(&wd);
        assert_eq!(cls.iter().filter(|&&c| c == DualClass::Leaf).count(), 3);
        assert_eq!(cls[center], DualClass::Limb);
    }

    #[test]
    fn fan_gives_path_dual_with_branches() {
        // Fan on the 7-cycle from vertex 0: five triangles in a row.
        let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.extend((2..6).map(|j| (0, j)));
        let wd = dual_of(&Graph::new(7, edges).unwrap());
        assert_eq!(wd.face_count(), 5);
        let cls = classify_dual(&wd);
        let leaves = (0..5).filter(|&f| wd.degree(f) == 1).count();
        assert_eq!(leaves, 2);
        for (f, &class) in cls.iter().enumerate() {
            let want = if wd.degree(f) == 1 { DualClass::Leaf } else { DualClass::Branch };
            assert_eq!(class, want);
        }
    }

    #[test]
    fn outer_edges_are_partitioned() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]).unwrap();
        let wd = dual_of(&g);
        let owned: usize = (0..wd.face_count()).map(|f| (0..6).filter(|&p| wd.outer_edge_face(p) == f).count()).sum();
        assert_eq!(owned, 6);
        // The inner triangle owns no outer edge.
        let center = (0..4).find(|&f| wd.degree(f) == 3).unwrap();
        assert!((0..6).all(|p| wd.outer_edge_face(p) != center));
    }
}
