//! Recognition and structure of 2-connected outerplanar graphs: the outer
//! cycle, the weak dual, the leaf/branch/limb/trunk classification of dual
//! vertices, and the foliage/trunk/boundary decomposition.

mod decompose;
mod dual;
mod embedding;

use thiserror::Error;

pub use decompose::{decompose, Decomposition, Limb, LimbKind, Segment, TrunkCycle};
pub use dual::{build_weak_dual, classify_dual, DualClass, DualEdge, Face, WeakDual};
pub use embedding::{canonical_cycle, check_outerplanar, find_outer_cycle, hamiltonian_cycles, OuterEmbedding};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OuterplanarError {
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("no Hamiltonian cycle: the graph cannot be 2-connected outerplanar")]
    NoHamiltonianCycle,
    #[error("crossing chords {0:?} and {1:?} on the Hamiltonian outer cycle")]
    CrossingChords((usize, usize), (usize, usize)),
    #[error("invalid outer cycle: {0}")]
    InvalidCycle(String),
}

impl OuterplanarError {
    /// Short machine-friendly reason tag.
    pub fn reason(&self) -> &'static str {
        match self {
            Self::NotTwoConnected => "not 2-connected",
            Self::NoHamiltonianCycle => "no Hamiltonian cycle",
            Self::CrossingChords(..) => "crossing chords",
            Self::InvalidCycle(_) => "invalid outer cycle",
        }
    }
}

/// Everything derived from a 2-connected outerplanar graph, computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub embedding: OuterEmbedding,
    pub dual: WeakDual,
    pub classes: Vec<DualClass>,
    pub decomposition: Decomposition,
}

impl Structure {
    pub fn analyze(g: &Graph) -> Result<Self, OuterplanarError> {
        let embedding = check_outerplanar(g)?;
        Ok(Self::from_embedding(embedding))
    }

    pub fn from_embedding(embedding: OuterEmbedding) -> Self {
        let dual = build_weak_dual(&embedding);
        let classes = classify_dual(&dual);
        let decomposition = decompose(&embedding, &dual, &classes);
        Self { embedding, dual, classes, decomposition }
    }
}
