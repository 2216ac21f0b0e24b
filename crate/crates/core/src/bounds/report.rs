use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::forcing::{zero_forcing_number_with_limit, ForcingError, DEFAULT_Z_LIMIT};
use crate::graph::Graph;
use crate::outerplanar::Decomposition;

/// Leaf-count lower bound and the foliage/trunk upper bounds for one graph.
///
/// Fractional quantities are exact rationals; integer comparisons against
/// `Z(G)` use their floors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub n_leaf: usize,
    pub n_f: usize,
    pub n_t: usize,
    pub n_b: usize,
    /// `2⌈n_ℓ/2⌉ + (n_T − n_B/2)/2`.
    pub formula_value: Rational64,
    pub half_n: Rational64,
    /// `min(⌊formula_value⌋, ⌊n/2⌋)`.
    pub effective_upper: usize,
    /// `n_ℓ`.
    pub lower: usize,
    pub exact_z: Option<usize>,
}

fn ratio(x: usize) -> Rational64 {
    Rational64::from_integer(x as i64)
}

impl BoundsReport {
    pub fn from_decomposition(dec: &Decomposition) -> Self {
        let two = ratio(2);
        let formula_value = ratio(2 * dec.n_leaf.div_ceil(2)) + (ratio(dec.n_t) - ratio(dec.n_b) / two) / two;
        let half_n = ratio(dec.n) / two;
        let effective_upper = (formula_value.floor().to_integer().max(0) as usize).min(dec.n / 2);
        Self {
            n: dec.n,
            n_leaf: dec.n_leaf,
            n_f: dec.n_f,
            n_t: dec.n_t,
            n_b: dec.n_b,
            formula_value,
            half_n,
            effective_upper,
            lower: dec.n_leaf,
            exact_z: None,
        }
    }

    /// `(n_F − n_B/2)/2`, the ceiling on the leaf count.
    pub fn foliage_leaf_cap(&self) -> Rational64 {
        (ratio(self.n_f) - ratio(self.n_b) / 2) / 2
    }

    /// Whether `lower ≤ exact_z ≤ effective_upper`, when `exact_z` is known.
    pub fn sandwich_holds(&self) -> Option<bool> {
        self.exact_z.map(|z| self.lower <= z && z <= self.effective_upper)
    }
}

/// Bounds for `g`, solving `Z(G)` exactly when asked (default size guard).
pub fn bounds_report(dec: &Decomposition, g: &Graph, compute_exact: bool) -> Result<BoundsReport, ForcingError> {
    bounds_report_with_limit(dec, g, compute_exact, DEFAULT_Z_LIMIT)
}

pub fn bounds_report_with_limit(
    dec: &Decomposition,
    g: &Graph,
    compute_exact: bool,
    z_limit: usize,
) -> Result<BoundsReport, ForcingError> {
    let mut report = BoundsReport::from_decomposition(dec);
    if compute_exact {
        report.exact_z = Some(zero_forcing_number_with_limit(g, z_limit)?.0);
    }
    Ok(report)
}
