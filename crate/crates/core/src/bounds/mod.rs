//! Leaf-count bounds on `Z(G)`, E/O+/O− limb tagging, the constructive
//! strategy, and the per-graph audit that ties them together.

mod audit;
mod limbs;
mod report;
mod strategy;

pub use audit::{audit_graph, AuditOptions, AuditRow, GraphAudit, RowStatus};
pub use limbs::{classify_limbs_under_coloring, LimbClass, LimbTag, LimbTagError};
pub use num_rational::Rational64;
pub use report::{bounds_report, bounds_report_with_limit, BoundsReport};
pub use strategy::{
    construct_strategy_zfs, leaf_seeds, leaf_selection, parity_start, SeededLeaf, StrategyAnomaly, StrategyError,
    StrategyOutcome, StrategyTrace,
};
