//! Exact zero forcing number by ascending-cardinality subset enumeration.
//!
//! Subsets of each size are visited in lexicographic order of their sorted
//! members, so the first hit is the lexicographically smallest minimum set.
//! The enumeration is split by smallest member and searched with rayon's
//! `find_map_first`, which keeps that witness regardless of scheduling.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{is_forcing_set, ColorSet, ForcingError, ZfsCertificate};
use crate::graph::{Graph, MAX_MASK_VERTICES};

pub const DEFAULT_Z_LIMIT: usize = 24;

/// Whether the blue set `mask` forces the whole graph. Forces are applied in
/// sweeps; the closure does not depend on the order.
pub fn forces_mask(adj: &[u64], mask: u64) -> bool {
    let n = adj.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut blue = mask;
    loop {
        let before = blue;
        let mut active = blue;
        while active != 0 {
            let v = active.trailing_zeros() as usize;
            active &= active - 1;
            let white = adj[v] & !blue;
            if white != 0 && white & (white - 1) == 0 {
                blue |= white;
            }
        }
        if blue == full {
            return true;
        }
        if blue == before {
            return false;
        }
    }
}

/// Visits the `k`-subsets of `lo..n` in lexicographic order, each or'ed into
/// `base`, until `hit` accepts one.
fn first_subset(n: usize, lo: usize, k: usize, base: u64, hit: &mut impl FnMut(u64) -> bool) -> Option<u64> {
    if k == 0 {
        return hit(base).then_some(base);
    }
    (lo..=n - k).find_map(|v| first_subset(n, v + 1, k - 1, base | 1 << v, hit))
}

fn min_forcing_mask(adj: &[u64], k: usize) -> Option<u64> {
    let n = adj.len();
    if k == 0 {
        return forces_mask(adj, 0).then_some(0);
    }
    (0..=n - k)
        .into_par_iter()
        .find_map_first(|first| first_subset(n, first + 1, k - 1, 1 << first, &mut |m| forces_mask(adj, m)))
}

fn check_guard(g: &Graph, limit: usize) -> Result<(), ForcingError> {
    let n = g.vertex_count();
    let limit = limit.min(MAX_MASK_VERTICES);
    if n > limit {
        return Err(ForcingError::InstanceTooLarge { solver: "zero forcing", n, limit });
    }
    Ok(())
}

/// `Z(G)` with the lexicographically smallest minimum forcing set as witness,
/// for graphs within [`DEFAULT_Z_LIMIT`] vertices.
pub fn zero_forcing_number(g: &Graph) -> Result<(usize, ZfsCertificate), ForcingError> {
    zero_forcing_number_with_limit(g, DEFAULT_Z_LIMIT)
}

/// As [`zero_forcing_number`] with a caller-chosen size guard (capped at 64).
pub fn zero_forcing_number_with_limit(g: &Graph, limit: usize) -> Result<(usize, ZfsCertificate), ForcingError> {
    check_guard(g, limit)?;
    let adj = g.adjacency_masks();
    let n = g.vertex_count();
    for k in 0..=n {
        if let Some(mask) = min_forcing_mask(&adj, k) {
            let cert = is_forcing_set(g, &ColorSet::from_mask(mask)).expect("mask search and closure agree");
            return Ok((k, cert));
        }
    }
    unreachable!("the full vertex set always forces")
}

/// Result of re-checking that no smaller set forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityAudit {
    pub z: usize,
    /// Number of `(z - 1)`-subsets examined.
    pub subsets_checked: u64,
    pub smaller_forcing_set: Option<u64>,
}

impl MinimalityAudit {
    pub fn passed(&self) -> bool {
        self.smaller_forcing_set.is_none()
    }
}

/// Exhaustively checks every `(z - 1)`-subset, independently of the search.
/// By monotonicity of closure this rules out every smaller set as well.
pub fn audit_minimality(g: &Graph, z: usize, limit: usize) -> Result<MinimalityAudit, ForcingError> {
    check_guard(g, limit)?;
    let adj = g.adjacency_masks();
    let n = g.vertex_count();
    let mut subsets_checked = 0u64;
    let smaller_forcing_set = match z.checked_sub(1) {
        None => None,
        Some(k) => first_subset(n, 0, k, 0, &mut |m| {
            subsets_checked += 1;
            forces_mask(&adj, m)
        }),
    };
    Ok(MinimalityAudit { z, subsets_checked, smaller_forcing_set })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::verify_certificate;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn small_families() {
        assert_eq!(zero_forcing_number(&path(7)).unwrap().0, 1);
        assert_eq!(zero_forcing_number(&star(4)).unwrap().0, 3);
        let (z, cert) = zero_forcing_number(&cycle(6)).unwrap();
        assert_eq!(z, 2);
        assert_eq!(cert.initial.members(), &[0, 1]);
        verify_certificate(&cycle(6), &cert).unwrap();
    }

    #[test]
    fn lexicographic_witness() {
        // In P_5 both endpoints force alone; 0 comes first.
        assert_eq!(zero_forcing_number(&path(5)).unwrap().1.initial.members(), &[0]);
        // Hub plus two leaves leaves the hub with two white neighbours, so the
        // first forcing triple is three leaves.
        assert_eq!(zero_forcing_number(&star(4)).unwrap().1.initial.members(), &[1, 2, 3]);
    }

    #[test]
    fn complete_graph() {
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(zero_forcing_number(&k5).unwrap().0, 4);
    }

    #[test]
    fn edgeless_needs_everything() {
        assert_eq!(zero_forcing_number(&Graph::empty(3)).unwrap().0, 3);
    }

    #[test]
    fn guard() {
        assert_eq!(
            zero_forcing_number(&cycle(25)).unwrap_err(),
            ForcingError::InstanceTooLarge { solver: "zero forcing", n: 25, limit: 24 }
        );
        assert_eq!(zero_forcing_number_with_limit(&cycle(25), 30).unwrap().0, 2);
    }

    #[test]
    fn minimality_audit() {
        let audit = audit_minimality(&cycle(6), 2, 24).unwrap();
        assert!(audit.passed());
        assert_eq!(audit.subsets_checked, 6);
        let wrong = audit_minimality(&cycle(6), 3, 24).unwrap();
        assert!(!wrong.passed());
        assert_eq!(wrong.smaller_forcing_set, Some(0b11));
    }

    #[test]
    fn mask_and_list_closure_agree() {
        let g = cycle(7);
        let adj = g.adjacency_masks();
        for mask in 0u64..1 << 7 {
            let s = ColorSet::from_mask(mask);
            assert_eq!(forces_mask(&adj, mask), is_forcing_set(&g, &s).is_some(), "mask {mask:b}");
        }
    }
}
