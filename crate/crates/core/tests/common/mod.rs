#![allow(dead_code)]

use crystals::crystal::Crystal;
use crystals::graph::Component;
use crystals::{Family, LieType, Weight};
use std::collections::BTreeMap;

/// `(type, fundamental coordinates)` with coordinate sum at most 2, plus the
/// spin fundamentals.
pub fn grid() -> Vec<(LieType, Vec<i64>)> {
    let types = [LieType::a(2), LieType::a(3), LieType::b(2), LieType::b(3), LieType::c(2), LieType::c(3), LieType::d(4)];
    let mut out = Vec::new();
    for ty in types {
        let n = ty.rank;
        let mut ws: Vec<Vec<i64>> = vec![vec![0; n]];
        for i in 0..n {
            let mut w = vec![0; n];
            w[i] = 1;
            ws.push(w);
            for j in i..n {
                let mut w = vec![0; n];
                w[i] += 1;
                w[j] += 1;
                ws.push(w);
            }
        }
        out.extend(ws.into_iter().map(|w| (ty, w)));
    }
    out
}

/// Spin fundamentals, already contained in [`grid`] as unit vectors.
pub fn spin_cases() -> Vec<(LieType, Vec<i64>)> {
    vec![
        (LieType::b(2), vec![0, 1]),
        (LieType::b(3), vec![0, 0, 1]),
        (LieType::d(4), vec![0, 0, 1, 0]),
        (LieType::d(4), vec![0, 0, 0, 1]),
    ]
}

pub fn weight(ty: LieType, c: &[i64]) -> Weight {
    ty.weight_from_fundamental(c).unwrap()
}

/// Check `e`/`f` inverse, seminormality and weight shifts on every node.
pub fn check_axioms<C: Crystal>(c: &C, comp: &Component<C::Elem>) -> Result<(), String> {
    let ty = c.lie_type();
    for b in &comp.elems {
        let w = c.weight(b);
        for i in ty.colors() {
            if let Some(nb) = c.f(i, b) {
                if c.e(i, &nb).as_ref() != Some(b) {
                    return Err(format!("e_{i} f_{i} {} != id", c.key(b)));
                }
                if c.weight(&nb) != &w - &ty.simple_root(i) {
                    return Err(format!("f_{i} {} shifts the weight wrongly", c.key(b)));
                }
            }
            if let Some(nb) = c.e(i, b) {
                if c.f(i, &nb).as_ref() != Some(b) {
                    return Err(format!("f_{i} e_{i} {} != id", c.key(b)));
                }
            }
            let (e, p) = (c.eps(i, b) as i64, c.phi(i, b) as i64);
            if crystals::scalar::q(p - e) != ty.pairing(&w, i) {
                return Err(format!("phi - eps at {} colour {i}", c.key(b)));
            }
        }
    }
    Ok(())
}

/// Whether the weight multiset of `comp` is stable under every simple reflection.
pub fn weights_symmetric<C: Crystal>(c: &C, comp: &Component<C::Elem>) -> bool {
    let ty = c.lie_type();
    let mut count: BTreeMap<Weight, usize> = BTreeMap::new();
    for w in &comp.graph.weights {
        *count.entry(w.clone()).or_default() += 1;
    }
    ty.colors().into_iter().all(|i| {
        let a = ty.simple_root(i);
        count.iter().all(|(w, &m)| {
            let r = w - &a.scale(ty.pairing(w, i));
            count.get(&r) == Some(&m)
        })
    })
}

pub fn is_spin_family(ty: LieType) -> bool {
    matches!(ty.family, Family::B | Family::D)
}
