//! Constructive zero forcing sets from the foliage/trunk decomposition.
//!
//! Two adjacent vertices are coloured on every other leaf cycle, the closure
//! is run, and whenever it stalls the white trunk vertex with the largest
//! closure growth is added. Both alternation parities are tried and the
//! smaller set kept, which also covers the case where forcing around a trunk
//! cycle has to run the other way.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::limbs::{classify_limbs_under_coloring, LimbClass, LimbTagError};
use super::report::BoundsReport;
use crate::forcing::{is_forcing_set, ColorSet, ZfsCertificate};
use crate::graph::Graph;
use crate::outerplanar::{LimbKind, Structure, WeakDual};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeededLeaf {
    pub face: usize,
    pub seeds: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyTrace {
    /// Index into the leaf order where parity 0 starts.
    pub start_index: usize,
    pub parity_chosen: u8,
    /// True when parity 1 won.
    pub reversed: bool,
    pub seeded_leaves: Vec<SeededLeaf>,
    /// Trunk vertices added, in order, to get past stalls.
    pub repairs: Vec<usize>,
    pub limb_classes: Vec<LimbClass>,
    /// Seed removed by the odd-leaf refinement, if any.
    pub dropped_seed: Option<usize>,
    /// Set size reached by each parity; `None` if it stalled.
    pub parity_sizes: [Option<usize>; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyOutcome {
    pub certificate: ZfsCertificate,
    pub trace: StrategyTrace,
    /// The size bound the set was checked against.
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StrategyAnomaly {
    /// Closure stalled with no white trunk vertex left to add.
    Stalled { parity: u8, blue: usize, n: usize },
    /// The selection could not be tagged E/O+/O−.
    Untaggable { parity: u8, reason: String },
    /// The final set forces but is larger than the bound.
    BoundExceeded { size: usize, bound: usize, set: Vec<usize> },
}

impl std::fmt::Display for StrategyAnomaly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Stalled { parity, blue, n } => {
                write!(f, "parity {parity} stalled at {blue}/{n} blue with no white trunk vertex")
            }
            Self::Untaggable { parity, reason } => write!(f, "parity {parity} selection untaggable: {reason}"),
            Self::BoundExceeded { size, bound, set } => write!(f, "set {set:?} of size {size} exceeds bound {bound}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("structure does not match the graph: {0}")]
    Inconsistent(String),
    #[error("strategy anomaly: {0}")]
    Anomaly(StrategyAnomaly),
}

/// Where the alternation starts: the first leaf of the first odd-leafed outer
/// limb, so parity 0 makes it O+. Falls back to any odd segment, then to 0.
pub fn parity_start(s: &Structure) -> usize {
    let dec = &s.decomposition;
    let index_of = |f: usize| dec.leaf_order.iter().position(|&g| g == f);
    let odd_first_leaf = |outer_only: bool| {
        dec.leaf_order.iter().find_map(|&f| {
            let limb = &dec.limbs[dec.face_limb[f]?];
            if outer_only && limb.kind != LimbKind::Outer {
                return None;
            }
            let seg = limb.segments.iter().find(|seg| seg.leaves.contains(&f))?;
            (seg.leaves.len() % 2 == 1).then(|| index_of(seg.leaves[0])).flatten()
        })
    };
    odd_first_leaf(true).or_else(|| odd_first_leaf(false)).unwrap_or(0)
}

/// `⌈n_ℓ/2⌉` leaves, every other one along the leaf order from
/// `start + parity`.
pub fn leaf_selection(s: &Structure, start: usize, parity: u8) -> Vec<usize> {
    let order = &s.decomposition.leaf_order;
    let m = order.len();
    let mut picked: Vec<usize> = (0..m.div_ceil(2)).map(|j| order[(start + parity as usize + 2 * j) % m]).collect();
    picked.sort_by_key(|f| order.iter().position(|g| g == f));
    picked.dedup();
    picked
}

/// The two seeds on a leaf cycle: rotate the face so its shared chord is
/// `(f_{k-1}, f_0)`, then take `f_i` and `f_{i+1}` with `i = ⌊(k-1)/2⌋`.
pub fn leaf_seeds(wd: &WeakDual, face: usize) -> [usize; 2] {
    let verts = &wd.faces[face].vertices;
    let k = verts.len();
    let rot = wd
        .shared_chords(face)
        .next()
        .and_then(|(a, b)| {
            (0..k).find(|&i| {
                let (x, y) = (verts[(i + k - 1) % k], verts[i]);
                (x.min(y), x.max(y)) == (a, b)
            })
        })
        .unwrap_or(0);
    let i = (k - 1) / 2;
    [verts[(rot + i) % k], verts[(rot + i + 1) % k]]
}

/// Applies every available force until none is left; returns how many
/// vertices turned blue.
fn propagate(g: &Graph, blue: &mut [bool]) -> usize {
    let n = g.vertex_count();
    let mut white: Vec<usize> = (0..n).map(|v| g.neighbors(v).iter().filter(|&&w| !blue[w]).count()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| blue[v] && white[v] == 1).collect();
    let mut added = 0;
    while let Some(v) = stack.pop() {
        if white[v] != 1 {
            continue;
        }
        let w = *g.neighbors(v).iter().find(|&&w| !blue[w]).expect("counted one white neighbour");
        blue[w] = true;
        added += 1;
        for &x in g.neighbors(w) {
            white[x] -= 1;
            if blue[x] && white[x] == 1 {
                stack.push(x);
            }
        }
        if white[w] == 1 {
            stack.push(w);
        }
    }
    added
}

struct ParityRun {
    seeded: Vec<SeededLeaf>,
    repairs: Vec<usize>,
    classes: Vec<LimbClass>,
}

impl ParityRun {
    fn size(&self) -> usize {
        self.initial().len()
    }

    fn initial(&self) -> BTreeSet<usize> {
        self.seeded.iter().flat_map(|l| l.seeds).chain(self.repairs.iter().copied()).collect()
    }
}

fn run_parity(g: &Graph, s: &Structure, start: usize, parity: u8) -> Result<ParityRun, StrategyAnomaly> {
    let n = g.vertex_count();
    let dec = &s.decomposition;
    let selection = leaf_selection(s, start, parity);
    let classes = classify_limbs_under_coloring(dec, &selection.iter().copied().collect())
        .map_err(|e: LimbTagError| StrategyAnomaly::Untaggable { parity, reason: e.to_string() })?;
    let seeded: Vec<SeededLeaf> =
        selection.iter().map(|&face| SeededLeaf { face, seeds: leaf_seeds(&s.dual, face) }).collect();

    let mut blue = vec![false; n];
    for v in seeded.iter().flat_map(|l| l.seeds) {
        blue[v] = true;
    }
    let mut count = blue.iter().filter(|&&b| b).count();
    count += propagate(g, &mut blue);
    let mut repairs = Vec::new();
    while count < n {
        let mut best: Option<(usize, usize)> = None;
        for &w in dec.trunk.iter().filter(|&&w| !blue[w]) {
            let mut trial = blue.clone();
            trial[w] = true;
            let growth = 1 + propagate(g, &mut trial);
            if best.is_none_or(|(_, b)| growth > b) {
                best = Some((w, growth));
            }
        }
        let Some((w, _)) = best else {
            return Err(StrategyAnomaly::Stalled { parity, blue: count, n });
        };
        blue[w] = true;
        count += 1 + propagate(g, &mut blue);
        repairs.push(w);
    }
    Ok(ParityRun { seeded, repairs, classes })
}

fn check_consistent(g: &Graph, s: &Structure) -> Result<(), StrategyError> {
    let n = g.vertex_count();
    let emb = &s.embedding;
    let bad = |msg: String| Err(StrategyError::Inconsistent(msg));
    if emb.vertex_count() != n || s.decomposition.n != n {
        return bad(format!("structure has {} vertices, graph has {n}", emb.vertex_count()));
    }
    if g.edge_count() != n + emb.chords().len() {
        return bad(format!("graph has {} edges, embedding accounts for {}", g.edge_count(), n + emb.chords().len()));
    }
    let order = emb.outer_order();
    let on_graph =
        (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n])) && emb.chords().iter().all(|&(u, v)| g.has_edge(u, v));
    if !on_graph {
        return bad("outer cycle or chords are not edges of the graph".into());
    }
    Ok(())
}

/// Builds a zero forcing set for a 2-connected outerplanar graph and checks
/// it against `min(⌊2⌈n_ℓ/2⌉ + (n_T − n_B/2)/2⌋, ⌊n/2⌋)`. Exceeding that
/// bound, or stalling in both parities, is reported as an anomaly.
pub fn construct_strategy_zfs(g: &Graph, s: &Structure) -> Result<StrategyOutcome, StrategyError> {
    check_consistent(g, s)?;
    let dec = &s.decomposition;
    let bound = BoundsReport::from_decomposition(dec).effective_upper;
    let start = parity_start(s);

    let runs = [run_parity(g, s, start, 0), run_parity(g, s, start, 1)];
    let parity_sizes = [runs[0].as_ref().ok().map(ParityRun::size), runs[1].as_ref().ok().map(ParityRun::size)];
    let parity: u8 = match parity_sizes {
        [Some(a), Some(b)] if b < a => 1,
        [None, Some(_)] => 1,
        _ => 0,
    };
    let [r0, r1] = runs;
    let run = if parity == 0 { r0 } else { r1 }.map_err(StrategyError::Anomaly)?;

    let mut initial = run.initial();
    let mut dropped_seed = None;
    let n = g.vertex_count();
    if dec.n_t == 0 && dec.n_leaf % 2 == 1 && initial.len() > n / 2 {
        for v in run.seeded.iter().flat_map(|l| l.seeds) {
            let mut smaller = initial.clone();
            smaller.remove(&v);
            if is_forcing_set(g, &ColorSet::from_sorted(smaller.iter().copied().collect())).is_some() {
                initial = smaller;
                dropped_seed = Some(v);
                break;
            }
        }
    }

    let set = ColorSet::from_sorted(initial.into_iter().collect());
    let certificate = is_forcing_set(g, &set).expect("repair loop ends only when the set forces");
    if set.len() > bound {
        return Err(StrategyError::Anomaly(StrategyAnomaly::BoundExceeded {
            size: set.len(),
            bound,
            set: set.members().to_vec(),
        }));
    }
    let trace = StrategyTrace {
        start_index: start,
        parity_chosen: parity,
        reversed: parity == 1,
        seeded_leaves: run.seeded,
        repairs: run.repairs,
        limb_classes: run.classes,
        dropped_seed,
        parity_sizes,
    };
    Ok(StrategyOutcome { certificate, trace, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::verify_certificate;
    use crate::generate::{generate, GeneratorSpec};

    fn run(spec: GeneratorSpec) -> (Graph, StrategyOutcome) {
        let (g, emb) = generate(&spec).unwrap();
        let s = Structure::from_embedding(emb.unwrap());
        let out = construct_strategy_zfs(&g, &s).unwrap();
        verify_certificate(&g, &out.certificate).unwrap();
        (g, out)
    }

    #[test]
    fn sun8_alternating_spikes() {
        let (g, out) = run(GeneratorSpec::Sun { k: 8 });
        assert_eq!(out.certificate.size(), 8);
        assert_eq!(out.trace.seeded_leaves.len(), 4);
        assert!(out.trace.repairs.is_empty());
        for leaf in &out.trace.seeded_leaves {
            assert!(g.has_edge(leaf.seeds[0], leaf.seeds[1]));
            // Every seeded leaf is a spike triangle: one seed is its spike.
            assert!(leaf.seeds.iter().any(|&v| v >= 8));
        }
    }

    #[test]
    fn sun7_needs_refinement() {
        let (_, out) = run(GeneratorSpec::Sun { k: 7 });
        assert_eq!(out.certificate.size(), 7);
        assert!(out.trace.dropped_seed.is_some());
    }

    #[test]
    fn cycle_two_adjacent() {
        let (g, out) = run(GeneratorSpec::Cycle { n: 6 });
        let m = out.certificate.initial.members();
        assert_eq!(m.len(), 2);
        assert!(g.has_edge(m[0], m[1]));
    }

    #[test]
    fn deterministic() {
        let spec = GeneratorSpec::RandomOuterplanar { n: 20, chords: 9, seed: 11 };
        assert_eq!(run(spec).1, run(spec).1);
    }

    #[test]
    fn rejects_foreign_structure() {
        let (g, _) = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        let (_, emb) = generate(&GeneratorSpec::Sun { k: 3 }).unwrap();
        let s = Structure::from_embedding(emb.unwrap());
        assert!(matches!(construct_strategy_zfs(&g, &s), Err(StrategyError::Inconsistent(_))));
    }

    #[test]
    fn propagate_matches_closure() {
        let (g, _) = generate(&GeneratorSpec::RandomOuterplanar { n: 14, chords: 6, seed: 5 }).unwrap();
        for seeds in [[0, 1], [3, 9], [2, 7]] {
            let mut blue = vec![false; 14];
            seeds.iter().for_each(|&v| blue[v] = true);
            propagate(&g, &mut blue);
            let want = crate::forcing::closure(&g, &ColorSet::new(&g, seeds).unwrap()).0;
            let got: Vec<usize> = (0..14).filter(|&v| blue[v]).collect();
            assert_eq!(got, want.members());
        }
    }
}
