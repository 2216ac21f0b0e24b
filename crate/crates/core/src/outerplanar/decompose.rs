use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{DualClass, OuterEmbedding, WeakDual};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimbKind {
    /// Attached to exactly one trunk cycle.
    Outer,
    /// Attached to two or more trunk cycles.
    Inner,
    /// The graph has no trunk; the whole dual is one foliage component.
    Free,
}

/// A stretch of the outer cycle owned by one limb, running from one boundary
/// vertex to the next.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub from: usize,
    pub to: usize,
    /// Leaf faces along the stretch, in outer-cycle order.
    pub leaves: Vec<usize>,
}

/// A connected component of the foliage in the weak dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limb {
    pub kind: LimbKind,
    pub faces: Vec<usize>,
    pub vertices: BTreeSet<usize>,
    /// `(trunk cycle index, shared chord)` for every dual edge into the trunk.
    pub attachments: Vec<(usize, (usize, usize))>,
    pub boundary: Vec<usize>,
    pub segments: Vec<Segment>,
}

impl Limb {
    /// Leaf faces of the limb in outer-cycle order.
    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        self.segments.iter().flat_map(|s| s.leaves.iter().copied())
    }

    pub fn leaf_count(&self) -> usize {
        self.segments.iter().map(|s| s.leaves.len()).sum()
    }
}

/// A connected component of the trunk in the weak dual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrunkCycle {
    pub faces: Vec<usize>,
    pub vertices: BTreeSet<usize>,
    /// Chords between two faces of this trunk cycle.
    pub chords: Vec<(usize, usize)>,
    pub limbs: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub foliage: BTreeSet<usize>,
    pub trunk: BTreeSet<usize>,
    pub boundary: BTreeSet<usize>,
    pub n: usize,
    pub n_leaf: usize,
    pub n_f: usize,
    pub n_t: usize,
    pub n_b: usize,
    /// Leaf faces ordered by the first position of their private vertices.
    pub leaf_order: Vec<usize>,
    pub limbs: Vec<Limb>,
    pub trunk_cycles: Vec<TrunkCycle>,
    /// Limb owning each face, if the face is in the foliage.
    pub face_limb: Vec<Option<usize>>,
}

fn components(wd: &WeakDual, member: impl Fn(usize) -> bool) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
    let k = wd.face_count();
    let mut comp = vec![None; k];
    let mut out = Vec::new();
    for start in 0..k {
        if !member(start) || comp[start].is_some() {
            continue;
        }
        let id = out.len();
        let mut faces = vec![start];
        comp[start] = Some(id);
        let mut i = 0;
        while i < faces.len() {
            let f = faces[i];
            for &h in wd.neighbors(f) {
                if member(h) && comp[h].is_none() {
                    comp[h] = Some(id);
                    faces.push(h);
                }
            }
            i += 1;
        }
        faces.sort_unstable();
        out.push(faces);
    }
    (out, comp)
}

/// Splits the graph into foliage (leaf, branch and limb faces) and trunk,
/// with per-limb attachments and outer-cycle segments.
pub fn decompose(emb: &OuterEmbedding, wd: &WeakDual, classes: &[DualClass]) -> Decomposition {
    let n = emb.vertex_count();
    let order = emb.outer_order();
    let is_trunk = |f: usize| classes[f] == DualClass::Trunk;
    let face_vertices = |faces: &[usize]| -> BTreeSet<usize> {
        faces.iter().flat_map(|&f| wd.faces[f].vertices.iter().copied()).collect()
    };

    let (limb_faces, face_limb) = components(wd, |f| !is_trunk(f));
    let (trunk_faces, face_trunk) = components(wd, is_trunk);

    let all_faces: Vec<usize> = (0..wd.face_count()).collect();
    let foliage = face_vertices(&all_faces.iter().copied().filter(|&f| !is_trunk(f)).collect::<Vec<_>>());
    let trunk = face_vertices(&all_faces.iter().copied().filter(|&f| is_trunk(f)).collect::<Vec<_>>());
    let boundary: BTreeSet<usize> = foliage.intersection(&trunk).copied().collect();

    // Private vertices of a leaf are those off its shared chord.
    let leaf_faces: Vec<usize> = all_faces.iter().copied().filter(|&f| classes[f] == DualClass::Leaf).collect();
    let first_private = |f: usize| {
        let shared: Vec<usize> = wd.shared_chords(f).flat_map(|(u, v)| [u, v]).collect();
        wd.faces[f]
            .vertices
            .iter()
            .filter(|v| !shared.contains(v))
            .map(|&v| emb.position(v))
            .min()
            .unwrap_or(usize::MAX)
    };
    let mut leaf_order = leaf_faces.clone();
    leaf_order.sort_by_key(|&f| (first_private(f), f));

    let mut limbs = Vec::with_capacity(limb_faces.len());
    for (id, faces) in limb_faces.iter().enumerate() {
        let mut attachments: Vec<(usize, (usize, usize))> = wd
            .dual_edges
            .iter()
            .filter_map(|e| {
                let (a, b) = e.faces;
                match (face_limb[a] == Some(id), face_limb[b] == Some(id)) {
                    (true, false) => Some((face_trunk[b]?, e.chord)),
                    (false, true) => Some((face_trunk[a]?, e.chord)),
                    _ => None,
                }
            })
            .collect();
        attachments.sort_unstable();
        let cycles: BTreeSet<usize> = attachments.iter().map(|&(t, _)| t).collect();
        let kind = match cycles.len() {
            0 => LimbKind::Free,
            1 => LimbKind::Outer,
            _ => LimbKind::Inner,
        };
        let mut boundary: Vec<usize> = attachments.iter().flat_map(|&(_, (u, v))| [u, v]).collect();
        boundary.sort_unstable();
        boundary.dedup();

        let owns = |p: usize| face_limb[wd.outer_edge_face(p)] == Some(id);
        let segments = segments_of(n, order, wd, classes, owns);
        limbs.push(Limb {
            kind,
            faces: faces.clone(),
            vertices: face_vertices(faces),
            attachments,
            boundary,
            segments,
        });
    }

    let trunk_cycles = trunk_faces
        .iter()
        .enumerate()
        .map(|(id, faces)| {
            let chords = wd
                .dual_edges
                .iter()
                .filter(|e| face_trunk[e.faces.0] == Some(id) && face_trunk[e.faces.1] == Some(id))
                .map(|e| e.chord)
                .collect();
            let limbs = (0..limbs.len()).filter(|&l| limbs[l].attachments.iter().any(|&(t, _)| t == id)).collect();
            TrunkCycle { faces: faces.clone(), vertices: face_vertices(faces), chords, limbs }
        })
        .collect();

    Decomposition {
        n_leaf: leaf_faces.len(),
        n_f: foliage.len(),
        n_t: trunk.len(),
        n_b: boundary.len(),
        n,
        foliage,
        trunk,
        boundary,
        leaf_order,
        limbs,
        trunk_cycles,
        face_limb,
    }
}

/// Maximal cyclic runs of outer edges owned by one limb.
fn segments_of(
    n: usize,
    order: &[usize],
    wd: &WeakDual,
    classes: &[DualClass],
    owns: impl Fn(usize) -> bool,
) -> Vec<Segment> {
    let leaves_along = |start: usize, len: usize| {
        let mut leaves: Vec<usize> = Vec::new();
        for p in (start..start + len).map(|p| p % n) {
            let f = wd.outer_edge_face(p);
            // A run covering the whole cycle can meet the root face at both ends.
            if classes[f] == DualClass::Leaf && !leaves.contains(&f) {
                leaves.push(f);
            }
        }
        leaves
    };
    if (0..n).all(&owns) {
        return vec![Segment { from: order[0], to: order[0], leaves: leaves_along(0, n) }];
    }
    let mut segments = Vec::new();
    for start in (0..n).filter(|&p| owns(p) && !owns((p + n - 1) % n)) {
        let len = (0..n).take_while(|&k| owns((start + k) % n)).count();
        segments.push(Segment { from: order[start], to: order[(start + len) % n], leaves: leaves_along(start, len) });
    }
    segments
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GeneratorSpec};
    use crate::graph::Graph;
    use crate::outerplanar::Structure;

    fn structure(g: &Graph) -> Structure {
        Structure::analyze(g).unwrap()
    }

    #[test]
    fn sun8_has_no_trunk() {
        let (g, _) = generate(&GeneratorSpec::Sun { k: 8 }).unwrap();
        let d = structure(&g).decomposition;
        assert_eq!((d.n_leaf, d.n_f, d.n_t, d.n_b), (8, 16, 0, 0));
        assert_eq!(d.limbs.len(), 1);
        assert_eq!(d.limbs[0].kind, LimbKind::Free);
        assert_eq!(d.limbs[0].leaf_count(), 8);
        assert!(d.trunk_cycles.is_empty());
    }

    #[test]
    fn cycle_is_one_leaf() {
        let (g, _) = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        let d = structure(&g).decomposition;
        assert_eq!((d.n_leaf, d.n_f, d.n_t, d.n_b), (1, 6, 0, 0));
    }

    #[test]
    fn diamond_two_leaves() {
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let d = structure(&g).decomposition;
        assert_eq!((d.n_leaf, d.n_f, d.n_t, d.n_b), (2, 4, 0, 0));
    }

    // Pentagon trunk face 0-4-5-9-10 with two limbs hung on chords 0-4 and
    // 5-9; each limb is a triangle carrying two triangular leaves.
    fn one_trunk_two_limbs() -> Graph {
        let n = 11;
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend([(0, 2), (2, 4), (0, 4), (5, 7), (7, 9), (5, 9)]);
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn single_trunk_with_outer_limbs() {
        let g = one_trunk_two_limbs();
        let s = structure(&g);
        let d = &s.decomposition;
        assert_eq!(d.trunk_cycles.len(), 1);
        assert_eq!(d.limbs.len(), 2);
        for limb in &d.limbs {
            assert_eq!(limb.kind, LimbKind::Outer);
            assert_eq!(limb.boundary.len(), 2);
            assert_eq!(limb.segments.len(), 1);
            assert_eq!(limb.leaf_count(), 2);
        }
        assert_eq!(d.boundary, BTreeSet::from([0, 4, 5, 9]));
        assert_eq!((d.n_leaf, d.n_f, d.n_t, d.n_b), (4, 10, 5, 4));
        assert_eq!(d.n, d.n_f + d.n_t - d.n_b);
    }

    #[test]
    fn every_leaf_in_exactly_one_segment() {
        // Trunkless, with the root face a leaf whose outer edges wrap past
        // position 0.
        let (g, _) = generate(&GeneratorSpec::RandomOuterplanar { n: 8, chords: 4, seed: 71 }).unwrap();
        let d = structure(&g).decomposition;
        let mut listed: Vec<usize> = d.limbs.iter().flat_map(|l| l.leaves()).collect();
        listed.sort_unstable();
        let mut want = d.leaf_order.clone();
        want.sort_unstable();
        assert_eq!(listed, want);
    }
}
