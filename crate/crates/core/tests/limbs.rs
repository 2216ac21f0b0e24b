//! Outer limbs of single-trunk graphs behave as their E / O+ / O− tag says:
//! from its own seeds alone, an O+ limb forces both boundary vertices, an E
//! limb one, and an O− limb none.

use std::collections::BTreeSet;

use zforce::bounds::{construct_strategy_zfs, LimbTag};
use zforce::generate::random_corpus;
use zforce::outerplanar::LimbKind;
use zforce::{closure, generate, ColorSet, Structure};

#[test]
fn outer_limbs_force_their_boundary_as_tagged() {
    let mut checked = 0;
    for spec in random_corpus(200, 1, 6..=24) {
        let (g, _) = generate(&spec).unwrap();
        let s = Structure::analyze(&g).unwrap();
        let d = &s.decomposition;
        if d.trunk_cycles.len() != 1 {
            continue;
        }
        let out = construct_strategy_zfs(&g, &s).unwrap();
        for class in &out.trace.limb_classes {
            let limb = &d.limbs[class.limb];
            if limb.kind != LimbKind::Outer {
                continue;
            }
            let seeds: BTreeSet<usize> = out
                .trace
                .seeded_leaves
                .iter()
                .filter(|l| d.face_limb[l.face] == Some(class.limb))
                .flat_map(|l| l.seeds)
                .collect();
            let (blue, _) = closure(&g, &ColorSet::new(&g, seeds).unwrap());
            let forced = limb.boundary.iter().filter(|&&v| blue.contains(v)).count();
            let expected = match class.segments[..] {
                [LimbTag::OPlus] => 2,
                [LimbTag::E] => 1,
                [LimbTag::OMinus] => 0,
                _ => panic!("{spec:?}: outer limb with {:?}", class.segments),
            };
            assert_eq!(forced, expected, "{spec:?} limb {}", class.limb);
            checked += 1;
        }
    }
    assert!(checked >= 40, "only {checked} limbs checked");
}
