//! Per-graph audit of the structural identities, inequalities and bounds.
//! Failures are report rows, never errors.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::report::BoundsReport;
use super::strategy::{construct_strategy_zfs, StrategyError, StrategyOutcome};
use crate::forcing::{
    path_cover_number_with_limit, zero_forcing_number_with_limit, ForcingError, PathPartition, ZfsCertificate,
    DEFAULT_PATH_COVER_LIMIT, DEFAULT_Z_LIMIT,
};
use crate::graph::Graph;
use crate::outerplanar::{OuterplanarError, Structure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditOptions {
    pub exact: bool,
    pub strategy: bool,
    pub path_cover: bool,
    pub z_limit: usize,
    pub path_cover_limit: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            exact: true,
            strategy: true,
            path_cover: true,
            z_limit: DEFAULT_Z_LIMIT,
            path_cover_limit: DEFAULT_PATH_COVER_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Pass,
    Fail,
    /// The row's hypothesis does not hold for this graph.
    NotApplicable,
    /// A needed quantity was not computed (disabled or over the size guard).
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub id: String,
    pub statement: String,
    pub status: RowStatus,
    /// The compared values, e.g. `8 <= 8`.
    pub witness: String,
    /// For inequality rows that passed: whether equality holds.
    pub tight: Option<bool>,
}

impl AuditRow {
    fn new(id: &str, statement: &str, status: RowStatus, witness: impl Into<String>) -> Self {
        Self { id: id.into(), statement: statement.into(), status, witness: witness.into(), tight: None }
    }

    fn le<T: PartialOrd + std::fmt::Display>(id: &str, statement: &str, lhs: T, rhs: T) -> Self {
        let ok = lhs <= rhs;
        let status = if ok { RowStatus::Pass } else { RowStatus::Fail };
        let op = if ok { "<=" } else { ">" };
        Self { tight: ok.then(|| lhs == rhs), ..Self::new(id, statement, status, format!("{lhs} {op} {rhs}")) }
    }

    fn skipped(id: &str, statement: &str, why: impl Into<String>) -> Self {
        Self::new(id, statement, RowStatus::Skipped, why)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphAudit {
    pub n: usize,
    pub m: usize,
    /// Why the graph is not 2-connected outerplanar, if it is not.
    pub precondition_failure: Option<String>,
    pub structure: Option<Structure>,
    pub bounds: Option<BoundsReport>,
    pub exact: Option<Result<(usize, ZfsCertificate), ForcingError>>,
    pub path_cover: Option<Result<(usize, PathPartition), ForcingError>>,
    pub strategy: Option<Result<StrategyOutcome, StrategyError>>,
    pub rows: Vec<AuditRow>,
}

impl GraphAudit {
    pub fn passed(&self) -> bool {
        self.precondition_failure.is_none() && self.rows.iter().all(|r| r.status != RowStatus::Fail)
    }

    pub fn exact_z(&self) -> Option<usize> {
        self.exact.as_ref()?.as_ref().ok().map(|(z, _)| *z)
    }

    pub fn row(&self, id: &str) -> Option<&AuditRow> {
        self.rows.iter().find(|r| r.id == id)
    }
}

fn ratio(x: usize) -> Rational64 {
    Rational64::from_integer(x as i64)
}

fn show(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Runs the audit. A graph that is not 2-connected outerplanar gets no rows;
/// its exact `Z(G)` is still computed when requested.
pub fn audit_graph(g: &Graph, opts: &AuditOptions) -> GraphAudit {
    let exact = opts.exact.then(|| zero_forcing_number_with_limit(g, opts.z_limit));
    let mut audit = GraphAudit {
        n: g.vertex_count(),
        m: g.edge_count(),
        precondition_failure: None,
        structure: None,
        bounds: None,
        exact,
        path_cover: None,
        strategy: None,
        rows: Vec::new(),
    };
    let s = match Structure::analyze(g) {
        Ok(s) => s,
        Err(e) => {
            audit.precondition_failure = Some(precondition_reason(&e));
            return audit;
        }
    };
    audit.path_cover = opts.path_cover.then(|| path_cover_number_with_limit(g, opts.path_cover_limit));
    audit.strategy = opts.strategy.then(|| construct_strategy_zfs(g, &s));

    let mut bounds = BoundsReport::from_decomposition(&s.decomposition);
    bounds.exact_z = audit.exact_z();
    audit.rows = rows(&s, &bounds, &audit);
    audit.bounds = Some(bounds);
    audit.structure = Some(s);
    audit
}

fn precondition_reason(e: &OuterplanarError) -> String {
    match e {
        OuterplanarError::CrossingChords(a, b) => format!("{}: {a:?} and {b:?}", e.reason()),
        _ => e.reason().to_string(),
    }
}

fn rows(s: &Structure, b: &BoundsReport, audit: &GraphAudit) -> Vec<AuditRow> {
    let mut rows = Vec::new();
    let tree = s.dual.is_tree();
    rows.push(AuditRow::new(
        "dual-tree",
        "the weak dual is a tree",
        if tree { RowStatus::Pass } else { RowStatus::Fail },
        format!("{} faces, {} dual edges", s.dual.face_count(), s.dual.dual_edges.len()),
    ));
    let sum = b.n_f + b.n_t - b.n_b;
    rows.push(AuditRow::new(
        "vertex-count",
        "n = n_F + n_T - n_B",
        if sum == b.n { RowStatus::Pass } else { RowStatus::Fail },
        format!("{} = {} + {} - {}", b.n, b.n_f, b.n_t, b.n_b),
    ));
    let mut leaf_cap = AuditRow::le("leaf-cap", "n_l <= (n_F - n_B/2)/2", ratio(b.n_leaf), b.foliage_leaf_cap());
    leaf_cap.witness = format!("{} vs {}", b.n_leaf, show(b.foliage_leaf_cap()));
    rows.push(leaf_cap);
    let mut formula =
        AuditRow::le("formula-cap", "2*ceil(n_l/2) + (n_T - n_B/2)/2 <= n/2 + 1", b.formula_value, b.half_n + 1);
    formula.witness = format!("{} vs {}", show(b.formula_value), show(b.half_n + 1));
    rows.push(formula);

    let exact_note = match &audit.exact {
        None => "exact solver not requested".to_string(),
        Some(Err(e)) => e.to_string(),
        Some(Ok(_)) => String::new(),
    };
    match b.exact_z {
        Some(z) => {
            rows.push(AuditRow::le("lower-bound", "n_l <= Z(G)", b.n_leaf, z));
            rows.push(AuditRow::le("half-bound", "Z(G) <= n/2", z, b.n / 2));
            rows.push(AuditRow::le(
                "formula-bound",
                "Z(G) <= floor(2*ceil(n_l/2) + (n_T - n_B/2)/2)",
                z,
                b.formula_value.floor().to_integer().max(0) as usize,
            ));
            rows.push(if b.n_leaf == 2 {
                let ok = z == 2;
                AuditRow::new(
                    "two-leaves",
                    "n_l = 2 implies Z(G) = 2",
                    if ok { RowStatus::Pass } else { RowStatus::Fail },
                    format!("Z = {z}"),
                )
            } else {
                AuditRow::new(
                    "two-leaves",
                    "n_l = 2 implies Z(G) = 2",
                    RowStatus::NotApplicable,
                    format!("n_l = {}", b.n_leaf),
                )
            });
        }
        None => {
            for (id, st) in [
                ("lower-bound", "n_l <= Z(G)"),
                ("half-bound", "Z(G) <= n/2"),
                ("formula-bound", "Z(G) <= floor(2*ceil(n_l/2) + (n_T - n_B/2)/2)"),
                ("two-leaves", "n_l = 2 implies Z(G) = 2"),
            ] {
                rows.push(AuditRow::skipped(id, st, exact_note.clone()));
            }
        }
    }

    let pc_statement = "P(G) <= Z(G)";
    rows.push(match (&audit.path_cover, b.exact_z) {
        (Some(Ok((p, _))), Some(z)) => AuditRow::le("path-cover", pc_statement, *p, z),
        (Some(Err(e)), _) => AuditRow::skipped("path-cover", pc_statement, e.to_string()),
        (None, _) => AuditRow::skipped("path-cover", pc_statement, "path cover not requested"),
        (_, None) => AuditRow::skipped("path-cover", pc_statement, exact_note),
    });

    let st_statement = "strategy set forces G within min(floor(formula), floor(n/2))";
    rows.push(match &audit.strategy {
        Some(Ok(out)) => {
            let mut row = AuditRow::le("strategy", st_statement, out.certificate.size(), out.bound);
            row.witness = format!("{} forces, size {} <= {}", row_set(out), out.certificate.size(), out.bound);
            row
        }
        Some(Err(e)) => AuditRow::new("strategy", st_statement, RowStatus::Fail, e.to_string()),
        None => AuditRow::skipped("strategy", st_statement, "strategy not requested"),
    });
    rows
}

fn row_set(out: &StrategyOutcome) -> String {
    format!("{:?}", out.certificate.initial.members())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GeneratorSpec};

    fn audit(g: &Graph) -> GraphAudit {
        audit_graph(g, &AuditOptions::default())
    }

    #[test]
    fn sun8_all_tight() {
        let (g, _) = generate(&GeneratorSpec::Sun { k: 8 }).unwrap();
        let a = audit(&g);
        assert!(a.passed(), "{:#?}", a.rows);
        assert_eq!(a.row("lower-bound").unwrap().tight, Some(true));
        assert_eq!(a.row("half-bound").unwrap().tight, Some(true));
        assert_eq!(a.row("path-cover").unwrap().status, RowStatus::Pass);
    }

    #[test]
    fn c6_lower_bound_slack() {
        let (g, _) = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        let a = audit(&g);
        assert!(a.passed());
        let row = a.row("lower-bound").unwrap();
        assert_eq!((row.status, row.tight), (RowStatus::Pass, Some(false)));
        assert_eq!(row.witness, "1 <= 2");
    }

    #[test]
    fn diamond_two_leaves_tight() {
        let g = Graph::new(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let a = audit(&g);
        assert!(a.passed());
        assert_eq!(a.row("two-leaves").unwrap().status, RowStatus::Pass);
        assert_eq!(a.row("path-cover").unwrap().witness, "2 <= 2");
    }

    #[test]
    fn k4_fails_precondition_but_keeps_z() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let a = audit(&k4);
        assert!(!a.passed());
        assert!(a.precondition_failure.as_deref().unwrap().starts_with("crossing chords"));
        assert_eq!(a.exact_z(), Some(3));
        assert!(a.rows.is_empty());
    }

    #[test]
    fn over_guard_rows_are_skipped() {
        let (g, _) = generate(&GeneratorSpec::Cycle { n: 30 }).unwrap();
        let a = audit(&g);
        assert!(a.passed());
        let row = a.row("lower-bound").unwrap();
        assert_eq!(row.status, RowStatus::Skipped);
        assert!(row.witness.contains("too large"));
    }
}
