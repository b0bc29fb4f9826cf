//! Prunings of states on planar singular diagrams.
//!
//! A state on an all-singular diagram drops one incoming edge at each
//! vertex: `inL` when the vertex sits in `A` or `D-`, `inR` when it sits in
//! `C` or `D+`. What remains is always connected, and distinct states give
//! distinct prunings.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use crate::diagram::{Diagram, EdgeLabel, Slot, VertexId};
use crate::error::{Error, Result};
use crate::faces::compute_faces;
use crate::states::{enumerate_states, Corner, KauffmanState};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pruning {
    num_vertices: usize,
    /// Kept edges with their `(tail, head)` vertices.
    kept: BTreeMap<EdgeLabel, (VertexId, VertexId)>,
    /// Incoming edge removed at each vertex.
    pub removed: Vec<EdgeLabel>,
}

impl Pruning {
    pub fn kept_edges(&self) -> impl Iterator<Item = EdgeLabel> + '_ {
        self.kept.keys().copied()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.kept.values().filter(|&&(_, h)| h == v).count()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.kept.values().filter(|&&(t, _)| t == v).count()
    }

    /// Copy with edge `e` also deleted.
    pub fn without_edge(&self, e: EdgeLabel) -> Pruning {
        let mut p = self.clone();
        p.kept.remove(&e);
        p
    }

    /// Connectivity as an undirected graph on all vertices of the diagram.
    pub fn is_connected(&self) -> bool {
        if self.num_vertices == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(t, h) in self.kept.values() {
            adj[t].push(h);
            adj[h].push(t);
        }
        let mut seen = vec![false; self.num_vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn pruning_graph(d: &Diagram, x: &KauffmanState) -> Result<Pruning> {
    if !d.is_planar_singular() {
        return Err(Error::NotPlanarSingular);
    }
    let removed: Vec<EdgeLabel> = d
        .vertices()
        .iter()
        .zip(&x.corners)
        .map(|(vx, c)| match c {
            Corner::A | Corner::DMinus => vx.edge(Slot::InL),
            _ => vx.edge(Slot::InR),
        })
        .collect();
    let dropped: BTreeSet<EdgeLabel> = removed.iter().copied().collect();
    let kept = d
        .edge_ends()
        .into_iter()
        .filter(|(e, _)| !dropped.contains(e))
        .map(|(e, ee)| (e, (ee.tail.vertex, ee.head.vertex)))
        .collect();
    Ok(Pruning {
        num_vertices: d.num_vertices(),
        kept,
        removed,
    })
}

/// Groups state indices (into the `enumerate_states` order) by the
/// pruning they induce.
pub fn equivalence_classes(d: &Diagram) -> Result<Vec<Vec<usize>>> {
    if !d.is_planar_singular() {
        return Err(Error::NotPlanarSingular);
    }
    let f = compute_faces(d)?;
    let states = enumerate_states(d, &f);
    classes_of(d, &states)
}

fn classes_of(d: &Diagram, states: &[KauffmanState]) -> Result<Vec<Vec<usize>>> {
    let mut classes: BTreeMap<Vec<EdgeLabel>, Vec<usize>> = BTreeMap::new();
    for (i, s) in states.iter().enumerate() {
        classes.entry(pruning_graph(d, s)?.removed).or_default().push(i);
    }
    Ok(classes.into_values().collect())
}

/// Pruning statistics for one planar diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PruningReport {
    pub states: usize,
    pub connected: usize,
    pub degree_ok: usize,
    pub class_sizes: Vec<usize>,
}

impl PruningReport {
    pub fn compute(d: &Diagram) -> Result<Self> {
        if !d.is_planar_singular() {
            return Err(Error::NotPlanarSingular);
        }
        let f = compute_faces(d)?;
        let states = enumerate_states(d, &f);
        let mut connected = 0;
        let mut degree_ok = 0;
        for s in &states {
            let p = pruning_graph(d, s)?;
            connected += usize::from(p.is_connected());
            let ok = (0..d.num_vertices()).all(|v| p.in_degree(v) == 1 && p.out_degree(v) <= 2);
            degree_ok += usize::from(ok);
        }
        let mut class_sizes: Vec<usize> = classes_of(d, &states)?.iter().map(Vec::len).collect();
        class_sizes.sort_unstable();
        Ok(Self {
            states: states.len(),
            connected,
            degree_ok,
            class_sizes,
        })
    }

    pub fn all_connected(&self) -> bool {
        self.connected == self.states && self.degree_ok == self.states
    }

    pub fn all_singletons(&self) -> bool {
        self.class_sizes.iter().all(|&n| n == 1)
    }

    pub fn passed(&self) -> bool {
        self.all_connected() && self.all_singletons()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "states": self.states,
            "connected_prunings": self.connected,
            "class_sizes": self.class_sizes,
            "connected_pass": self.all_connected(),
            "singleton_pass": self.all_singletons(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{from_braid, parse_diagram};

    fn planar(n: usize, w: &[i32]) -> Diagram {
        from_braid(n, w, &(1..=w.len()).collect()).unwrap()
    }

    #[test]
    fn singular_kink_pruning() {
        let d = parse_diagram("S 1 2 2 1\nQ 1\n").unwrap();
        let states = enumerate_states(&d, &compute_faces(&d).unwrap());
        let p = pruning_graph(&d, &states[0]).unwrap();
        assert_eq!(p.removed, [2]);
        assert_eq!(p.kept_edges().collect::<Vec<_>>(), [1]);
        assert!(p.is_connected());
        assert_eq!(equivalence_classes(&d).unwrap(), [vec![0]]);
    }

    #[test]
    fn torus_link_prunings() {
        let d = planar(3, &[1, 2, 1, 2, 1, 2]);
        let states = enumerate_states(&d, &compute_faces(&d).unwrap());
        for s in &states {
            let p = pruning_graph(&d, s).unwrap();
            assert_eq!(p.removed.len(), 6);
            assert_eq!(p.kept_edges().count(), 6);
            assert!(p.is_connected());
            for v in 0..6 {
                assert_eq!(p.in_degree(v), 1);
                assert!(p.out_degree(v) <= 2);
            }
        }
        let classes = equivalence_classes(&d).unwrap();
        assert_eq!(classes.len(), 21);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn singular_trefoil_prunings() {
        let d = planar(2, &[1, 1, 1]);
        let r = PruningReport::compute(&d).unwrap();
        assert_eq!(r.states, 4);
        assert!(r.passed());
    }

    #[test]
    fn removing_another_edge_disconnects_a_tree() {
        let d = planar(2, &[1, 1, 1]);
        let states = enumerate_states(&d, &compute_faces(&d).unwrap());
        let p = pruning_graph(&d, &states[0]).unwrap();
        // 3 vertices, 3 kept edges: drop one that isn't a loop
        let e = p
            .kept_edges()
            .find(|&e| {
                let ee = d.edge_ends()[&e];
                ee.tail.vertex != ee.head.vertex
            })
            .unwrap();
        let once = p.without_edge(e);
        let twice = once.without_edge(once.kept_edges().find(|&f| {
            let ee = d.edge_ends()[&f];
            ee.tail.vertex != ee.head.vertex
        }).unwrap());
        assert!(!twice.is_connected());
    }

    #[test]
    fn requires_planar_singular() {
        let d = from_braid(2, &[1, 1, 1], &Default::default()).unwrap();
        assert_eq!(equivalence_classes(&d), Err(Error::NotPlanarSingular));
        let states = enumerate_states(&d, &compute_faces(&d).unwrap());
        assert_eq!(pruning_graph(&d, &states[0]), Err(Error::NotPlanarSingular));
    }
}
