//! Named planar graphs with known zero forcing numbers, shipped as edge lists.

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub n: usize,
    pub expected_z: usize,
    pub edge_list: &'static str,
}

impl Fixture {
    pub fn graph(&self) -> Graph {
        Graph::from_edge_list(self.edge_list).expect("bundled fixture parses")
    }
}

pub const FIXTURES: [Fixture; 6] = [
    Fixture { name: "Fritsch", n: 9, expected_z: 5, edge_list: include_str!("../fixtures/fritsch.edges") },
    Fixture {
        name: "Goldner-Harary",
        n: 11,
        expected_z: 5,
        edge_list: include_str!("../fixtures/goldner_harary.edges"),
    },
    Fixture { name: "Herschel", n: 11, expected_z: 5, edge_list: include_str!("../fixtures/herschel.edges") },
    Fixture { name: "Icosahedral", n: 12, expected_z: 6, edge_list: include_str!("../fixtures/icosahedral.edges") },
    Fixture { name: "Errera", n: 17, expected_z: 7, edge_list: include_str!("../fixtures/errera.edges") },
    Fixture { name: "Wheel-19", n: 19, expected_z: 3, edge_list: include_str!("../fixtures/wheel19.edges") },
];

pub fn by_name(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name.eq_ignore_ascii_case(name))
}

/// Reads an expected zero forcing number from a `# z = <k>` comment line.
pub fn expected_z_comment(text: &str) -> Option<usize> {
    text.lines().find_map(|l| {
        let rest = l.trim().strip_prefix('#')?.trim().strip_prefix("z")?.trim_start().strip_prefix('=')?;
        rest.trim().parse().ok()
    })
}
