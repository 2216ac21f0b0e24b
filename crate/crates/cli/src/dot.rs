//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use zforce::outerplanar::DualClass;
use zforce::{Graph, Structure};

pub const SEED_FILL: &str = "#4a90d9";
pub const FOLIAGE_FILL: &str = "#8fd18f";
pub const TRUNK_FILL: &str = "#b5835a";
pub const BOUNDARY_FILL: &str = "#f4a6c6";

/// An initial blue set and its forcing chronicle.
pub type Forcing<'a> = (&'a [usize], &'a [(usize, usize)]);

#[derive(Debug, Clone, Default)]
pub struct DotStyle<'a> {
    pub zfs: Option<Forcing<'a>>,
    pub structure: Option<&'a Structure>,
}

/// Renders `g` as an undirected DOT graph. With a zero forcing set, seeds are
/// filled and every other vertex is labelled with the step that forced it.
/// With a structure, vertices are coloured foliage / trunk / boundary and
/// chords are dashed.
pub fn to_dot(g: &Graph, style: &DotStyle) -> String {
    let mut attrs: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    if let Some(s) = style.structure {
        let d = &s.decomposition;
        for v in 0..g.vertex_count() {
            let fill = if d.boundary.contains(&v) {
                BOUNDARY_FILL
            } else if d.trunk.contains(&v) {
                TRUNK_FILL
            } else {
                FOLIAGE_FILL
            };
            attrs.entry(v).or_default().push(format!("style=filled, fillcolor=\"{fill}\""));
        }
    }
    if let Some((seeds, chronicle)) = style.zfs {
        for &v in seeds {
            let a = attrs.entry(v).or_default();
            a.retain(|x| !x.starts_with("style="));
            a.push(format!("style=filled, fillcolor=\"{SEED_FILL}\", fontcolor=white"));
        }
        for (step, &(u, v)) in chronicle.iter().enumerate() {
            attrs.entry(v).or_default().push(format!("xlabel=\"{}: {u}\"", step + 1));
        }
    }
    let chords: Vec<(usize, usize)> = style.structure.map(|s| s.embedding.chords().to_vec()).unwrap_or_default();

    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        match attrs.get(&v) {
            Some(a) if !a.is_empty() => {
                let _ = writeln!(out, "  {v} [{}];", a.join(", "));
            }
            _ => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        if chords.contains(&(u.min(v), u.max(v))) {
            let _ = writeln!(out, "  {u} -- {v} [style=dashed];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    if let Some(s) = style.structure {
        let leaves = s.classes.iter().filter(|&&c| c == DualClass::Leaf).count();
        let _ = writeln!(out, "  label=\"{} faces, {leaves} leaves\";", s.dual.face_count());
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use zforce::{generate, GeneratorSpec};

    #[test]
    fn plain_cycle() {
        let (g, _) = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        let dot = to_dot(&g, &DotStyle::default());
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(!dot.contains("fillcolor"));
    }

    #[test]
    fn seeds_and_order() {
        let (g, _) = generate(&GeneratorSpec::Cycle { n: 4 }).unwrap();
        let dot = to_dot(&g, &DotStyle { zfs: Some((&[0, 1], &[(0, 3), (1, 2)])), structure: None });
        assert_eq!(dot.matches(SEED_FILL).count(), 2);
        assert!(dot.contains("3 [xlabel=\"1: 0\"]"));
    }
}
