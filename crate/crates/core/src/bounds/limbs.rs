use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::outerplanar::{Decomposition, LimbKind};

/// How a limb (or inner-limb segment) sits under an alternating selection of
/// leaf faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimbTag {
    /// Even leaf count, exactly half selected.
    E,
    /// Odd leaf count, one more than half selected.
    #[serde(rename = "O+")]
    OPlus,
    /// Odd leaf count, one fewer than half selected.
    #[serde(rename = "O-")]
    OMinus,
}

impl LimbTag {
    pub fn from_counts(leaves: usize, selected: usize) -> Option<Self> {
        match (leaves % 2, 2 * selected) {
            (0, s) if s == leaves => Some(Self::E),
            (1, s) if s == leaves + 1 => Some(Self::OPlus),
            (1, s) if s + 1 == leaves => Some(Self::OMinus),
            _ => None,
        }
    }
}

impl std::fmt::Display for LimbTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::E => "E",
            Self::OPlus => "O+",
            Self::OMinus => "O-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimbClass {
    pub limb: usize,
    pub kind: LimbKind,
    /// One tag per segment; outer and free limbs have a single segment.
    pub segments: Vec<LimbTag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LimbTagError {
    #[error("face {0} is not a leaf face")]
    UnknownLeaf(usize),
    #[error(
        "selection is not alternating along the outer face ({equal_pairs} equal neighbour pairs among {leaves} leaves)"
    )]
    NotAlternating { equal_pairs: usize, leaves: usize },
    #[error("limb {limb} segment {segment}: {selected} of {leaves} leaves selected")]
    Unbalanced { limb: usize, segment: usize, leaves: usize, selected: usize },
}

/// Tags every limb segment E, O+ or O− under `selected`.
///
/// The selection must alternate along the cyclic leaf order: neighbouring
/// leaves agree in exactly `n_ℓ mod 2` places.
pub fn classify_limbs_under_coloring(
    dec: &Decomposition,
    selected: &BTreeSet<usize>,
) -> Result<Vec<LimbClass>, LimbTagError> {
    let order = &dec.leaf_order;
    if let Some(&f) = selected.iter().find(|f| !order.contains(f)) {
        return Err(LimbTagError::UnknownLeaf(f));
    }
    let m = order.len();
    let picked = |i: usize| selected.contains(&order[i % m]);
    let equal_pairs = (0..m).filter(|&i| picked(i) == picked(i + 1)).count();
    if equal_pairs != m % 2 {
        return Err(LimbTagError::NotAlternating { equal_pairs, leaves: m });
    }
    dec.limbs
        .iter()
        .enumerate()
        .map(|(limb, l)| {
            let segments = l
                .segments
                .iter()
                .enumerate()
                .map(|(segment, s)| {
                    let leaves = s.leaves.len();
                    let chosen = s.leaves.iter().filter(|f| selected.contains(f)).count();
                    LimbTag::from_counts(leaves, chosen).ok_or(LimbTagError::Unbalanced {
                        limb,
                        segment,
                        leaves,
                        selected: chosen,
                    })
                })
                .collect::<Result<_, _>>()?;
            Ok(LimbClass { limb, kind: l.kind, segments })
        })
        .collect()
}
