//! Crystal graphs: component generation, isomorphism and export.

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::lie::Weight;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write;

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub key: String,
    pub weight: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: String,
    pub color: usize,
    pub to: String,
}

/// A finite colored digraph. Nodes are sorted by key; edges by
/// `(from, color, to)` node index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub keys: Vec<String>,
    pub weights: Vec<Weight>,
    /// `(from, color, to)` as node indices.
    pub edges: Vec<(usize, usize, usize)>,
    pub highest: Vec<usize>,
}

#[derive(Serialize)]
struct GraphDoc {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
    highest: Vec<String>,
}

impl CrystalGraph {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn index_of(&self, key: &str) -> Option<usize> {
        self.keys.binary_search_by(|k| k.as_str().cmp(key)).ok()
    }

    pub fn out_edges(&self) -> HashMap<(usize, usize), usize> {
        self.edges.iter().map(|&(a, i, b)| ((a, i), b)).collect()
    }

    pub fn in_edges(&self) -> HashMap<(usize, usize), usize> {
        self.edges.iter().map(|&(a, i, b)| ((b, i), a)).collect()
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            nodes: self
                .keys
                .iter()
                .zip(&self.weights)
                .map(|(k, w)| Node { key: k.clone(), weight: w.coords.iter().map(|c| c.to_string()).collect() })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(a, i, b)| Edge { from: self.keys[a].clone(), color: i, to: self.keys[b].clone() })
                .collect(),
            highest: self.highest.iter().map(|&h| self.keys[h].clone()).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, w) in self.keys.iter().zip(&self.weights) {
            writeln!(out, "  \"{}\" [label=\"{}\", weight=\"{}\"];", escape(k), escape(k), w).unwrap();
        }
        for &(a, i, b) in &self.edges {
            writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", escape(&self.keys[a]), escape(&self.keys[b]), i).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\n")
}

/// A generated component: the graph plus the model elements, aligned with
/// the graph's node order.
#[derive(Clone, Debug)]
pub struct Component<E> {
    pub elems: Vec<E>,
    pub graph: CrystalGraph,
}

impl<E> Component<E> {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

/// Breadth-first closure of `seed` under `e_i` and `f_i` for `i` in `colors`.
pub fn generate_component<C: Crystal>(
    c: &C,
    seed: &C::Elem,
    colors: &[usize],
    cap: usize,
) -> Result<Component<C::Elem>> {
    let mut seen: BTreeSet<C::Elem> = BTreeSet::new();
    let mut raw_edges: BTreeSet<(C::Elem, usize, C::Elem)> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed.clone());
    while let Some(b) = queue.pop_front() {
        for &i in colors {
            if let Some(nb) = c.f(i, &b) {
                raw_edges.insert((b.clone(), i, nb.clone()));
                if seen.insert(nb.clone()) {
                    queue.push_back(nb);
                }
            }
            if let Some(nb) = c.e(i, &b) {
                raw_edges.insert((nb.clone(), i, b.clone()));
                if seen.insert(nb.clone()) {
                    queue.push_back(nb);
                }
            }
            if seen.len() > cap {
                return Err(Error::NodeCap { cap });
            }
        }
    }
    let mut keyed: Vec<(String, C::Elem)> = seen.into_iter().map(|b| (c.key(&b), b)).collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    let index: BTreeMap<&C::Elem, usize> = keyed.iter().enumerate().map(|(k, (_, b))| (b, k)).collect();
    let mut edges: Vec<(usize, usize, usize)> =
        raw_edges.iter().map(|(a, i, b)| (index[a], *i, index[b])).collect();
    edges.sort();
    let weights = keyed.iter().map(|(_, b)| c.weight(b)).collect();
    let highest = (0..keyed.len())
        .filter(|k| colors.iter().all(|&i| c.e(i, &keyed[*k].1).is_none()))
        .collect();
    let keys = keyed.iter().map(|(k, _)| k.clone()).collect();
    let elems = keyed.into_iter().map(|(_, b)| b).collect();
    Ok(Component { elems, graph: CrystalGraph { keys, weights, edges, highest } })
}

/// Match two connected highest-weight graphs by propagating from their
/// highest nodes along same-colored edges.
///
/// Returns `map[k]` = index in `g2` of node `k` of `g1`, or `None` when the
/// propagation is not a weight- and edge-preserving bijection.
pub fn crystal_isomorphic(g1: &CrystalGraph, g2: &CrystalGraph) -> Result<Option<Vec<usize>>> {
    for g in [g1, g2] {
        if g.highest.len() != 1 {
            return Err(Error::NotHighestWeight(g.highest.len()));
        }
    }
    if g1.len() != g2.len() || g1.edges.len() != g2.edges.len() {
        return Ok(None);
    }
    let (out1, in1) = (g1.out_edges(), g1.in_edges());
    let (out2, in2) = (g2.out_edges(), g2.in_edges());
    let mut map: Vec<Option<usize>> = vec![None; g1.len()];
    let mut used = vec![false; g2.len()];
    let (h1, h2) = (g1.highest[0], g2.highest[0]);
    map[h1] = Some(h2);
    used[h2] = true;
    let mut queue = VecDeque::from([h1]);
    let mut colors: Vec<usize> = g1.edges.iter().map(|e| e.1).collect();
    colors.sort();
    colors.dedup();
    while let Some(u) = queue.pop_front() {
        let v = map[u].unwrap();
        if g1.weights[u] != g2.weights[v] {
            return Ok(None);
        }
        for &i in &colors {
            for (a, b) in [(&out1, &out2), (&in1, &in2)] {
                match (a.get(&(u, i)), b.get(&(v, i))) {
                    (None, None) => {}
                    (Some(&nu), Some(&nv)) => match map[nu] {
                        Some(m) if m == nv => {}
                        Some(_) => return Ok(None),
                        None => {
                            if used[nv] {
                                return Ok(None);
                            }
                            map[nu] = Some(nv);
                            used[nv] = true;
                            queue.push_back(nu);
                        }
                    },
                    _ => return Ok(None),
                }
            }
        }
    }
    if map.iter().any(|m| m.is_none()) {
        return Ok(None);
    }
    let map: Vec<usize> = map.into_iter().map(|m| m.unwrap()).collect();
    let mapped: BTreeSet<(usize, usize, usize)> = g1.edges.iter().map(|&(a, i, b)| (map[a], i, map[b])).collect();
    let target: BTreeSet<(usize, usize, usize)> = g2.edges.iter().copied().collect();
    if mapped != target {
        return Ok(None);
    }
    Ok(Some(map))
}
