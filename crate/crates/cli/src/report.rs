//! The per-graph report: built from an audit, rendered as JSON or as an
//! aligned text table.
//!
//! JSON keys follow struct field order. Fractions are `{"num": .., "den": ..}`
//! objects so every value round-trips exactly.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use zforce::bounds::{audit_graph, AuditOptions, AuditRow, GraphAudit, Rational64, RowStatus, SeededLeaf};
use zforce::outerplanar::{DualClass, LimbKind};
use zforce::{encode_graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl From<Rational64> for Fraction {
    fn from(r: Rational64) -> Self {
        Self { num: *r.numer(), den: *r.denom() }
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.den {
            1 => write!(f, "{}", self.num),
            d => write!(f, "{}/{d}", self.num),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outerplanarity {
    pub ok: bool,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub leaf: usize,
    pub branch: usize,
    pub limb: usize,
    pub trunk: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimbSummary {
    pub kind: LimbKind,
    pub leaves: usize,
    pub boundary: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSummary {
    pub outer_cycle: Vec<usize>,
    pub chords: Vec<(usize, usize)>,
    pub faces: usize,
    pub classes: ClassCounts,
    pub n_leaf: usize,
    pub n_f: usize,
    pub n_t: usize,
    pub n_b: usize,
    pub limbs: Vec<LimbSummary>,
    pub trunk_cycles: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSummary {
    pub lower: usize,
    pub formula: Fraction,
    pub half_n: Fraction,
    pub effective_upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverSummary {
    pub value: Option<usize>,
    pub witness: Option<Vec<Vec<usize>>>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategySummary {
    pub size: Option<usize>,
    pub set: Option<Vec<usize>>,
    pub bound: Option<usize>,
    pub parity: Option<u8>,
    pub reversed: Option<bool>,
    pub seeded_leaves: Vec<SeededLeaf>,
    pub repairs: Vec<usize>,
    /// Per limb, one tag per segment.
    pub limb_classes: Vec<Vec<String>>,
    pub dropped_seed: Option<usize>,
    /// Forcing chronicle of the set as `(forcer, forced)` pairs.
    pub chronicle: Vec<(usize, usize)>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedZ {
    pub expected: usize,
    pub matches: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub source: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub outerplanar: Outerplanarity,
    pub structure: Option<StructureSummary>,
    pub bounds: Option<BoundsSummary>,
    pub zero_forcing: Option<SolverSummary>,
    pub path_cover: Option<SolverSummary>,
    pub strategy: Option<StrategySummary>,
    pub expected_z: Option<ExpectedZ>,
    pub audit: Vec<AuditRow>,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct Flags {
    pub exact: bool,
    pub strategy: bool,
    pub max_n: usize,
}

impl Report {
    pub fn build(source: &str, g: &Graph, expected: Option<usize>, flags: Flags) -> Self {
        let opts = AuditOptions {
            exact: flags.exact,
            strategy: flags.strategy,
            path_cover: flags.exact,
            z_limit: flags.max_n,
            ..AuditOptions::default()
        };
        let audit = audit_graph(g, &opts);
        Self::from_audit(source, g, expected, &audit)
    }

    fn from_audit(source: &str, g: &Graph, expected: Option<usize>, a: &GraphAudit) -> Self {
        let structure = a.structure.as_ref().map(|s| {
            let d = &s.decomposition;
            let count = |c: DualClass| s.classes.iter().filter(|&&x| x == c).count();
            StructureSummary {
                outer_cycle: s.embedding.outer_order().to_vec(),
                chords: s.embedding.chords().to_vec(),
                faces: s.dual.face_count(),
                classes: ClassCounts {
                    leaf: count(DualClass::Leaf),
                    branch: count(DualClass::Branch),
                    limb: count(DualClass::Limb),
                    trunk: count(DualClass::Trunk),
                },
                n_leaf: d.n_leaf,
                n_f: d.n_f,
                n_t: d.n_t,
                n_b: d.n_b,
                limbs: d
                    .limbs
                    .iter()
                    .map(|l| LimbSummary { kind: l.kind, leaves: l.leaf_count(), boundary: l.boundary.clone() })
                    .collect(),
                trunk_cycles: d.trunk_cycles.len(),
            }
        });
        let bounds = a.bounds.as_ref().map(|b| BoundsSummary {
            lower: b.lower,
            formula: b.formula_value.into(),
            half_n: b.half_n.into(),
            effective_upper: b.effective_upper,
        });
        let zero_forcing = a.exact.as_ref().map(|r| match r {
            Ok((z, cert)) => {
                SolverSummary { value: Some(*z), witness: Some(vec![cert.initial.members().to_vec()]), error: None }
            }
            Err(e) => SolverSummary { value: None, witness: None, error: Some(e.to_string()) },
        });
        let path_cover = a.path_cover.as_ref().map(|r| match r {
            Ok((p, part)) => SolverSummary { value: Some(*p), witness: Some(part.parts.clone()), error: None },
            Err(e) => SolverSummary { value: None, witness: None, error: Some(e.to_string()) },
        });
        let strategy = a.strategy.as_ref().map(|r| match r {
            Ok(out) => StrategySummary {
                size: Some(out.certificate.size()),
                set: Some(out.certificate.initial.members().to_vec()),
                bound: Some(out.bound),
                parity: Some(out.trace.parity_chosen),
                reversed: Some(out.trace.reversed),
                seeded_leaves: out.trace.seeded_leaves.clone(),
                repairs: out.trace.repairs.clone(),
                limb_classes: out
                    .trace
                    .limb_classes
                    .iter()
                    .map(|c| c.segments.iter().map(ToString::to_string).collect())
                    .collect(),
                dropped_seed: out.trace.dropped_seed,
                chronicle: out.certificate.chronicle.pairs(),
                error: None,
            },
            Err(e) => StrategySummary {
                size: None,
                set: None,
                bound: None,
                parity: None,
                reversed: None,
                seeded_leaves: Vec::new(),
                repairs: Vec::new(),
                limb_classes: Vec::new(),
                dropped_seed: None,
                chronicle: Vec::new(),
                error: Some(e.to_string()),
            },
        });
        let expected_z = expected.map(|e| ExpectedZ { expected: e, matches: a.exact_z().map(|z| z == e) });
        let expected_ok = expected_z.as_ref().is_none_or(|e| e.matches != Some(false));
        Self {
            source: source.to_string(),
            graph6: encode_graph6(g).unwrap_or_default(),
            n: a.n,
            m: a.m,
            outerplanar: Outerplanarity {
                ok: a.precondition_failure.is_none(),
                reason: a.precondition_failure.clone(),
            },
            structure,
            bounds,
            zero_forcing,
            path_cover,
            strategy,
            expected_z,
            audit: a.rows.clone(),
            passed: a.rows.iter().all(|r| r.status != RowStatus::Fail) && expected_ok,
        }
    }

    /// 0 when everything passed, 1 when the graph is not 2-connected
    /// outerplanar, 2 when an audit row or the expected `Z` failed.
    pub fn exit_code(&self) -> u8 {
        if !self.passed {
            2
        } else if !self.outerplanar.ok {
            1
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut kv: Vec<(&str, String)> = vec![
            ("source", self.source.clone()),
            ("graph6", self.graph6.clone()),
            ("vertices / edges", format!("{} / {}", self.n, self.m)),
            (
                "outerplanar",
                match &self.outerplanar.reason {
                    None => "yes".into(),
                    Some(r) => format!("no ({r})"),
                },
            ),
        ];
        if let Some(s) = &self.structure {
            kv.push(("outer cycle", join(&s.outer_cycle)));
            kv.push((
                "faces",
                format!(
                    "{} (leaf {}, branch {}, limb {}, trunk {})",
                    s.faces, s.classes.leaf, s.classes.branch, s.classes.limb, s.classes.trunk
                ),
            ));
            kv.push(("n_l n_F n_T n_B", format!("{} {} {} {}", s.n_leaf, s.n_f, s.n_t, s.n_b)));
            kv.push(("limbs / trunk cycles", format!("{} / {}", s.limbs.len(), s.trunk_cycles)));
        }
        if let Some(b) = &self.bounds {
            kv.push(("lower bound n_l", b.lower.to_string()));
            kv.push(("formula / n/2", format!("{} / {}", b.formula, b.half_n)));
            kv.push(("upper bound", b.effective_upper.to_string()));
        }
        if let Some(z) = &self.zero_forcing {
            kv.push(("Z(G)", solver_text(z)));
        }
        if let Some(e) = &self.expected_z {
            let verdict = match e.matches {
                Some(true) => "match",
                Some(false) => "MISMATCH",
                None => "not checked",
            };
            kv.push(("expected Z", format!("{} ({verdict})", e.expected)));
        }
        if let Some(p) = &self.path_cover {
            kv.push(("P(G)", solver_text(p)));
        }
        if let Some(s) = &self.strategy {
            let text = match (&s.error, &s.set) {
                (Some(e), _) => e.clone(),
                (None, Some(set)) => format!(
                    "size {} <= {} {{{}}}, parity {}, {} repair(s)",
                    set.len(),
                    s.bound.unwrap_or_default(),
                    join(set),
                    s.parity.unwrap_or_default(),
                    s.repairs.len()
                ),
                (None, None) => String::new(),
            };
            kv.push(("strategy", text));
        }
        let width = kv.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &kv {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        if !self.audit.is_empty() {
            let idw = self.audit.iter().map(|r| r.id.len()).max().unwrap_or(0).max(5);
            let _ = writeln!(out, "\n{:<idw$}  {:<7}  witness", "check", "status");
            for r in &self.audit {
                let mut status = status_text(r.status).to_string();
                if r.tight == Some(true) {
                    status.push('*');
                }
                let _ = writeln!(out, "{:<idw$}  {:<7}  {}", r.id, status, r.witness);
            }
        }
        let verdict = match self.exit_code() {
            0 => "pass",
            1 => "declined",
            _ => "FAIL",
        };
        let _ = writeln!(out, "\nresult: {verdict}");
        out
    }
}

pub fn status_text(s: RowStatus) -> &'static str {
    match s {
        RowStatus::Pass => "pass",
        RowStatus::Fail => "FAIL",
        RowStatus::NotApplicable => "n/a",
        RowStatus::Skipped => "skipped",
    }
}

fn solver_text(s: &SolverSummary) -> String {
    match (s.value, &s.witness, &s.error) {
        (Some(v), Some(w), _) if w.len() == 1 => format!("{v} {{{}}}", join(&w[0])),
        (Some(v), Some(w), _) => {
            format!("{v} [{}]", w.iter().map(|p| join(p)).collect::<Vec<_>>().join(" | "))
        }
        (_, _, Some(e)) => e.clone(),
        _ => String::new(),
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
