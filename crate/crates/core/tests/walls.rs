use crystals::graph::DEFAULT_NODE_CAP;
use crystals::lie::LieType;
use crystals::scalar::q;
use crystals::walls::*;
use crystals::weyl_dim;
use proptest::prelude::*;
use std::collections::{BTreeSet, VecDeque};

fn fixture(name: &str) -> YoungWall {
    let path = format!("{}/fixtures/walls/{name}.wall", env!("CARGO_MANIFEST_DIR"));
    YoungWall::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

const FIXTURES: [&str; 4] = ["b4_w3_w4_spin", "b4_w2_w3_spin", "b3_spin", "b4_w3"];

#[test]
fn fixtures_round_trip_and_are_proper_and_reduced() {
    for name in FIXTURES {
        let y = fixture(name);
        assert!(y.is_proper() && y.is_reduced(), "{name}");
        assert_eq!(YoungWall::parse(&y.to_string()).unwrap(), y, "{name}");
    }
}

#[test]
fn saturated_fixtures_are_the_constructed_highest_walls() {
    for name in FIXTURES {
        let y = fixture(name);
        let h = e_saturate(&y);
        let n = y.n();
        assert!((1..=n).all(|i| h.wall_e(i).is_none()), "{name}");
        let layout = WallLayout::over(y.ground, &h.weight()).unwrap();
        assert_eq!(layout.highest().unwrap(), h, "{name}");
    }
}

#[test]
fn fixture_components_have_weyl_dimension() {
    for name in ["b4_w3", "b3_spin", "b4_w3_w4_spin"] {
        let y = fixture(name);
        let ty = LieType::b(y.n());
        let h = e_saturate(&y);
        let comp = wall_component(&h, true, DEFAULT_NODE_CAP).unwrap();
        assert_eq!(comp.len() as u128, weyl_dim(ty, &h.weight()).unwrap(), "{name}");
        assert!(comp.elems.contains(&y), "{name}");
    }
}

#[test]
fn ground_state_components() {
    let y = YoungWall::ground_state(Ground::half_width(3, 0));
    assert_eq!(wall_component(&y, true, 10).unwrap().len(), 1);
    let y = YoungWall::ground_state(Ground::half_width(3, 1));
    assert_eq!(wall_component(&y, true, 10).unwrap().len(), 7);
    let y = YoungWall::ground_state(Ground::half_height(3, 1));
    assert_eq!(wall_component(&y, true, 10).unwrap().len(), 8);
}

/// Walls reachable from every ground state within `depth` affine steps.
fn affine_ball(n: usize, depth: usize) -> Vec<YoungWall> {
    let mut out = Vec::new();
    for g in [Ground::half_width(n, 0), Ground::half_width(n, 1), Ground::half_height(n, 0), Ground::half_height(n, 1)] {
        let y0 = YoungWall::ground_state(g);
        let mut seen = BTreeSet::from([y0.clone()]);
        let mut queue = VecDeque::from([(y0, 0)]);
        while let Some((y, d)) = queue.pop_front() {
            if d < depth {
                for i in 0..=n {
                    if let Some(z) = y.wall_f(i) {
                        if seen.insert(z.clone()) {
                            queue.push_back((z, d + 1));
                        }
                    }
                }
            }
        }
        out.extend(seen);
    }
    out
}

#[test]
fn affine_operators_are_crystal_operators() {
    for (n, depth) in [(2, 12), (3, 12), (4, 9)] {
        let ty = LieType::b(n);
        for y in affine_ball(n, depth) {
            assert!(y.is_proper() && y.is_reduced(), "{y:?}");
            for i in 0..=n {
                assert_eq!(y.signature(i), y.signature_by_letter(i), "{y:?} colour {i}");
                if let Some(z) = y.wall_f(i) {
                    assert_eq!(z.wall_e(i).as_ref(), Some(&y));
                    let mut k = y.content();
                    k[i] += 1;
                    assert_eq!(z.content(), k);
                }
                if let Some(z) = y.wall_e(i) {
                    assert_eq!(z.wall_f(i).as_ref(), Some(&y));
                }
            }
            let w = y.weight();
            for i in 1..=n {
                let (e, p) = y.eps_phi(i);
                assert_eq!(q(p as i64 - e as i64), ty.pairing(&w, i));
            }
        }
    }
}

/// `(n, fundamental coordinates)` of weights small enough to enumerate all
/// candidate walls.
const CASES: [(usize, &[i64]); 12] = [
    (2, &[1, 1]),
    (2, &[0, 3]),
    (3, &[0, 0, 1]),
    (3, &[1, 1, 0]),
    (3, &[0, 2, 0]),
    (3, &[0, 1, 1]),
    (3, &[1, 1, 1]),
    (3, &[0, 0, 3]),
    (4, &[0, 0, 1, 0]),
    (4, &[0, 1, 0, 1]),
    (4, &[0, 0, 1, 1]),
    (4, &[0, 0, 2, 0]),
];

#[test]
fn containment_conditions_cut_out_the_component() {
    for (n, c) in CASES {
        let ty = LieType::b(n);
        let lam = ty.weight_from_fundamental(c).unwrap();
        let layout = WallLayout::new(n, &lam).unwrap();
        let h = layout.highest().unwrap();
        assert_eq!(h.weight(), lam);
        let comp: BTreeSet<YoungWall> = wall_component(&h, true, DEFAULT_NODE_CAP).unwrap().elems.into_iter().collect();
        assert_eq!(comp.len() as u128, weyl_dim(ty, &lam).unwrap());
        let passing: BTreeSet<YoungWall> = layout
            .candidates()
            .into_iter()
            .filter(|y| WallDecomposition::new(y, &layout).unwrap().check_all())
            .collect();
        assert_eq!(passing, comp, "B{n} {c:?}");
    }
}

#[test]
fn fixture_components_satisfy_the_containment_conditions() {
    for name in ["b4_w3", "b3_spin"] {
        let y = fixture(name);
        let h = e_saturate(&y);
        let lam = h.weight();
        for z in wall_component(&h, true, DEFAULT_NODE_CAP).unwrap().elems {
            assert!(decompose(&z, &lam).unwrap().check_all(), "{name}: {z:?}");
        }
    }
}

proptest! {
    #[test]
    fn random_walks_stay_in_the_classical_component(steps in proptest::collection::vec((1usize..=4, any::<bool>()), 0..40)) {
        let h = e_saturate(&fixture("b4_w3_w4_spin"));
        let lam = h.weight();
        let mut y = h.clone();
        for (i, up) in steps {
            let next = if up { y.wall_e(i) } else { y.wall_f(i) };
            if let Some(z) = next {
                prop_assert_eq!(z.weight(), {
                    let a = LieType::b(4).simple_root(i);
                    if up { &y.weight() + &a } else { &y.weight() - &a }
                });
                y = z;
            }
        }
        prop_assert!(y.is_proper() && y.is_reduced());
        prop_assert_eq!(e_saturate(&y), h);
        prop_assert!(decompose(&y, &lam).unwrap().check_all());
    }
}
