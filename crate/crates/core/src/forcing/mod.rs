//! The colour-change rule, forcing closure, and the exact solvers built on it.
//!
//! A blue vertex with exactly one white neighbour turns that neighbour blue.
//! The closure of an initial blue set is unique whatever order forces are
//! applied in, so the canonical schedule below (scan blue vertices in
//! ascending id, apply the first available force, restart) only fixes the
//! chronicle, never the result.

mod exact;
mod path_cover;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

pub use exact::{
    audit_minimality, forces_mask, zero_forcing_number, zero_forcing_number_with_limit, MinimalityAudit,
    DEFAULT_Z_LIMIT,
};
pub use path_cover::{path_cover_number, path_cover_number_with_limit, PathPartition, DEFAULT_PATH_COVER_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcingError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("instance too large for the exact {solver} solver: n = {n} exceeds the limit {limit}")]
    InstanceTooLarge { solver: &'static str, n: usize, limit: usize },
}

/// A set of blue vertices, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorSet {
    members: Vec<usize>,
}

impl ColorSet {
    pub fn new(g: &Graph, members: impl IntoIterator<Item = usize>) -> Result<Self, ForcingError> {
        let n = g.vertex_count();
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&vertex) = members.iter().find(|&&v| v >= n) {
            return Err(ForcingError::VertexOutOfRange { vertex, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { members })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self { members }
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Self { members: (0..64).filter(|&v| mask >> v & 1 == 1).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &ColorSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    fn to_flags(&self, n: usize) -> Vec<bool> {
        let mut blue = vec![false; n];
        for &v in &self.members {
            blue[v] = true;
        }
        blue
    }
}

/// One application of the colour-change rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Force {
    pub forcer: usize,
    pub forced: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ForcingChronicle {
    pub steps: Vec<Force>,
}

impl ForcingChronicle {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.steps.iter().map(|f| (f.forcer, f.forced)).collect()
    }
}

/// An initial set together with a chronicle that colours the whole graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZfsCertificate {
    pub initial: ColorSet,
    pub chronicle: ForcingChronicle,
}

impl ZfsCertificate {
    pub fn size(&self) -> usize {
        self.initial.len()
    }
}

fn unique_white(g: &Graph, blue: &[bool], v: usize) -> Option<usize> {
    let mut white = g.neighbors(v).iter().copied().filter(|&w| !blue[w]);
    let first = white.next()?;
    white.next().is_none().then_some(first)
}

/// Closure under the canonical ascending-id schedule.
pub fn closure(g: &Graph, initial: &ColorSet) -> (ColorSet, ForcingChronicle) {
    let n = g.vertex_count();
    let mut blue = initial.to_flags(n);
    let mut steps = Vec::new();
    'scan: loop {
        for v in (0..n).filter(|&v| blue[v]) {
            if let Some(w) = unique_white(g, &blue, v) {
                blue[w] = true;
                steps.push(Force { forcer: v, forced: w });
                continue 'scan;
            }
        }
        break;
    }
    let members = (0..n).filter(|&v| blue[v]).collect();
    (ColorSet::from_sorted(members), ForcingChronicle { steps })
}

/// Closure where each step applies a uniformly random force among all
/// currently available ones.
pub fn closure_random_schedule<R: Rng + ?Sized>(
    g: &Graph,
    initial: &ColorSet,
    rng: &mut R,
) -> (ColorSet, ForcingChronicle) {
    let n = g.vertex_count();
    let mut blue = initial.to_flags(n);
    let mut steps = Vec::new();
    loop {
        let available: Vec<Force> = (0..n)
            .filter(|&v| blue[v])
            .filter_map(|v| unique_white(g, &blue, v).map(|w| Force { forcer: v, forced: w }))
            .collect();
        if available.is_empty() {
            break;
        }
        let f = available[rng.random_range(0..available.len())];
        blue[f.forced] = true;
        steps.push(f);
    }
    let members = (0..n).filter(|&v| blue[v]).collect();
    (ColorSet::from_sorted(members), ForcingChronicle { steps })
}

/// Returns the certificate when `s` forces the whole graph.
pub fn is_forcing_set(g: &Graph, s: &ColorSet) -> Option<ZfsCertificate> {
    let (fin, chronicle) = closure(g, s);
    (fin.len() == g.vertex_count()).then(|| ZfsCertificate { initial: s.clone(), chronicle })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("initial vertex {0} out of range")]
    OutOfRange(usize),
    #[error("step {step}: forcer {forcer} is not blue")]
    ForcerNotBlue { step: usize, forcer: usize },
    #[error("step {step}: {forced} is not the unique white neighbour of {forcer}")]
    NotUniqueWhite { step: usize, forcer: usize, forced: usize },
    #[error("{blue} of {n} vertices blue after replay")]
    Incomplete { blue: usize, n: usize },
}

/// Replays a certificate from scratch, checking every step against the rule.
/// Shares no code with the closure routines.
pub fn verify_certificate(g: &Graph, cert: &ZfsCertificate) -> Result<(), CertificateError> {
    let n = g.vertex_count();
    let mut blue = vec![false; n];
    for &v in cert.initial.members() {
        *blue.get_mut(v).ok_or(CertificateError::OutOfRange(v))? = true;
    }
    for (step, &Force { forcer, forced }) in cert.chronicle.steps.iter().enumerate() {
        if forcer >= n || !blue[forcer] {
            return Err(CertificateError::ForcerNotBlue { step, forcer });
        }
        let whites: Vec<usize> = g.neighbors(forcer).iter().copied().filter(|&w| !blue[w]).collect();
        if whites != [forced] {
            return Err(CertificateError::NotUniqueWhite { step, forcer, forced });
        }
        blue[forced] = true;
    }
    let count = blue.iter().filter(|&&b| b).count();
    if count != n {
        return Err(CertificateError::Incomplete { blue: count, n });
    }
    Ok(())
}
