//! Deterministic generators for the graph families used in the analysis.
//!
//! Random outerplanar graphs are drawn with ChaCha8 (`rand_chacha`) seeded
//! from a `u64`, so a spec reproduces the same edge set on every platform.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::outerplanar::OuterEmbedding;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("{chords} chords requested but a {n}-cycle holds at most {max}", max = n.saturating_sub(3))]
    TooManyChords { n: usize, chords: usize },
    #[error("seed {seed}: no non-crossing chord found after {attempts} attempts")]
    LaminarExtensionFailed { seed: u64, attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Cycle {
        n: usize,
    },
    /// `k` cycle vertices `v_i = i` and `k` spikes `u_i = k + i` adjacent to
    /// `v_i` and `v_{(i+1) mod k}`.
    Sun {
        k: usize,
    },
    /// Hub `0` joined to the cycle `1..n`.
    Wheel {
        n: usize,
    },
    /// The cycle `0..n` plus `chords` pairwise non-crossing chords.
    RandomOuterplanar {
        n: usize,
        chords: usize,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<(), GenerateError> {
        let bad = |msg: String| Err(GenerateError::InvalidSpec(msg));
        match *self {
            Self::Cycle { n } if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Self::Sun { k } if k < 3 => bad(format!("sun needs k >= 3, got {k}")),
            Self::Wheel { n } if n < 4 => bad(format!("wheel needs n >= 4, got {n}")),
            Self::RandomOuterplanar { n, .. } if n < 3 => bad(format!("random-outerplanar needs n >= 3, got {n}")),
            Self::RandomOuterplanar { n, chords, .. } if chords > n - 3 => {
                Err(GenerateError::TooManyChords { n, chords })
            }
            _ => Ok(()),
        }
    }
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |i| (i, (i + 1) % n))
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Builds the graph for `spec`, plus its outer embedding for the outerplanar
/// families (cycle, sun, random-outerplanar).
pub fn generate(spec: &GeneratorSpec) -> Result<(Graph, Option<OuterEmbedding>), GenerateError> {
    spec.validate()?;
    let (g, order) = match *spec {
        GeneratorSpec::Cycle { n } => (Graph::new(n, cycle_edges(n)), Some((0..n).collect::<Vec<_>>())),
        GeneratorSpec::Sun { k } => {
            let mut edges: Vec<_> = cycle_edges(k).collect();
            for i in 0..k {
                edges.extend([(k + i, i), (k + i, (i + 1) % k)]);
            }
            let order = (0..k).flat_map(|i| [i, k + i]).collect();
            (Graph::new(2 * k, edges), Some(order))
        }
        GeneratorSpec::Wheel { n } => {
            let rim = n - 1;
            let edges = cycle_edges(rim).map(|(u, v)| (u + 1, v + 1)).chain((1..n).map(|v| (0, v)));
            (Graph::new(n, edges), None)
        }
        GeneratorSpec::RandomOuterplanar { n, chords, seed } => {
            let edges = sample_laminar_chords(n, chords, seed)?;
            (Graph::new(n, cycle_edges(n).chain(edges)), Some((0..n).collect()))
        }
    };
    let g = g.expect("generator edges are valid");
    let emb = order.map(|o| OuterEmbedding::from_cycle(&g, &o).expect("generated embedding is outerplanar"));
    Ok((g, emb))
}

/// Rejection-samples `count` chords of the `n`-cycle, each uniform among the
/// chords that keep the family non-crossing.
fn sample_laminar_chords(n: usize, count: usize, seed: u64) -> Result<Vec<(usize, usize)>, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 64 * n * n;
    let mut chords: Vec<(usize, usize)> = Vec::with_capacity(count);
    for _ in 0..count {
        let chord = (0..attempts).find_map(|_| {
            let (x, y) = (rng.random_range(0..n), rng.random_range(0..n));
            let c = (x.min(y), x.max(y));
            let is_chord = c.1 - c.0 >= 2 && c != (0, n - 1);
            (is_chord && !chords.contains(&c) && !chords.iter().any(|&d| crosses(c, d))).then_some(c)
        });
        chords.push(chord.ok_or(GenerateError::LaminarExtensionFailed { seed, attempts })?);
    }
    Ok(chords)
}

/// A seeded corpus of random 2-connected outerplanar graphs. Graph `i` gets
/// seed `base_seed + i`; its size and chord count come from a separate stream
/// seeded by `base_seed`.
pub fn random_corpus(count: usize, base_seed: u64, sizes: RangeInclusive<usize>) -> Vec<GeneratorSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(base_seed ^ 0x5EED_C0DE_u64);
    (0..count)
        .map(|i| {
            let n = rng.random_range(sizes.clone());
            let chords = rng.random_range(0..=n.saturating_sub(3));
            GeneratorSpec::RandomOuterplanar { n, chords, seed: base_seed.wrapping_add(i as u64) }
        })
        .collect()
}
