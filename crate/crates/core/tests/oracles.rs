//! Values checked against an independent brute-force implementation
//! (Python + networkx), recorded here as fixed expectations.

use zforce::bounds::{audit_graph, AuditOptions, BoundsReport, RowStatus};
use zforce::{
    encode_graph6, generate, is_forcing_set, parse_graph6, verify_certificate, zero_forcing_number, ColorSet,
    GeneratorSpec, Graph, Structure,
};

/// `(graph6, Z)` for `random-outerplanar` graphs; the three blocks are
/// seeds 100.., 200.., 300.. with (n, chords) = (10, 4), (13, 7), (14, 10).
const RANDOM: [(&str, usize); 12] = [
    ("IhCGGC@bw", 2),
    ("IjeKGC@_G", 2),
    ("IxCGGSPgG", 2),
    ("IjCGWCBcG", 3),
    ("LjSIGCB?G?_@od", 3),
    ("LhCGGCD?Gg_@{B", 3),
    ("LhSGGEF?G?_B_L", 3),
    ("LhDYGC@?iCo@_@", 3),
    ("MjTGMC@?G?_@?F_[_", 2),
    ("MhKHXC@?GBsH_@_?_", 4),
    ("MjCI}C@?W?_H?P_O_", 3),
    ("MjTGIK@?W?_@oT_?_", 4),
];

#[test]
fn random_graphs_match_brute_force() {
    for (g6, z) in RANDOM {
        let g = parse_graph6(g6).unwrap();
        assert_eq!(zero_forcing_number(&g).unwrap().0, z, "{g6}");
    }
}

#[test]
fn generator_output_is_pinned() {
    let blocks = [(10, 4, 100), (13, 7, 200), (14, 10, 300)];
    let mut expected = RANDOM.iter().map(|(g6, _)| *g6);
    for (n, chords, seed) in blocks {
        for i in 0..4 {
            let (g, _) = generate(&GeneratorSpec::RandomOuterplanar { n, chords, seed: seed + i }).unwrap();
            assert_eq!(encode_graph6(&g).unwrap(), expected.next().unwrap());
        }
    }
}

fn graph(n: usize, chords: &[(usize, usize)]) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).chain(chords.iter().copied())).unwrap()
}

/// Four leaf triangles, yet three vertices force: a leaf count is not a
/// lower bound on `Z` when leaf triangles share vertices.
#[test]
fn leaf_count_is_not_a_lower_bound() {
    let g = graph(8, &[(0, 2), (0, 4), (0, 6), (2, 4), (4, 6)]);
    let s = Structure::analyze(&g).unwrap();
    assert_eq!(s.decomposition.n_leaf, 4);
    let cert = is_forcing_set(&g, &ColorSet::new(&g, [0, 1, 7]).unwrap()).unwrap();
    verify_certificate(&g, &cert).unwrap();
    assert_eq!(zero_forcing_number(&g).unwrap().0, 3);

    let audit = audit_graph(&g, &AuditOptions::default());
    assert_eq!(audit.row("lower-bound").unwrap().status, RowStatus::Fail);
}

/// Two outer limbs sharing a boundary vertex push the leaf count past
/// `(n_F - n_B/2)/2`.
#[test]
fn foliage_leaf_cap_can_fail() {
    let g = graph(9, &[(1, 3), (1, 8), (3, 8), (4, 6), (4, 8), (6, 8)]);
    let s = Structure::analyze(&g).unwrap();
    let b = BoundsReport::from_decomposition(&s.decomposition);
    assert_eq!((b.n_leaf, b.n_f, b.n_t, b.n_b), (4, 9, 3, 3));
    assert!(zforce::bounds::Rational64::from_integer(4) > b.foliage_leaf_cap());
    // The bound the cap is used for still holds here.
    assert!(b.formula_value <= b.half_n + 1);
    assert_eq!(zero_forcing_number(&g).unwrap().0, 4);
}

#[test]
fn complete_graph_k4() {
    let g = parse_graph6("C~").unwrap();
    assert_eq!(zero_forcing_number(&g).unwrap().0, 3);
}

#[test]
fn cycles_and_suns() {
    for n in 3..=12 {
        let (g, _) = generate(&GeneratorSpec::Cycle { n }).unwrap();
        assert_eq!(zero_forcing_number(&g).unwrap().0, 2);
    }
    for k in 3..=8 {
        let (g, _) = generate(&GeneratorSpec::Sun { k }).unwrap();
        assert_eq!(zero_forcing_number(&g).unwrap().0, k);
    }
}
