//! Face tracing and Euler genus.
//!
//! Faces are the orbits of the next-arc permutation: after entering a
//! vertex through dart `d`, the walk departs along the rotation successor
//! of `d`. An isolated vertex bounds a single empty face, so Euler
//! characteristic and the per-component product formulas stay well-defined
//! when an edge subset misses a vertex entirely.

use super::{EmbeddedGraph, GraphArc, GraphError};

/// A face: the cyclic arc sequence of a facial walk. Isolated vertices
/// carry an empty arc list and remember their vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub arcs: Vec<GraphArc>,
    pub isolated_at: Option<usize>,
}

impl Face {
    /// Boundary length (number of arcs).
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

impl EmbeddedGraph {
    /// The arc that follows `a` in its facial walk.
    pub fn next_face_arc(&self, a: GraphArc) -> GraphArc {
        let next = self.next_dart(a.entering_dart());
        match next.end {
            super::EdgeEnd::Tail => GraphArc::forward(next.edge),
            super::EdgeEnd::Head => GraphArc::backward(next.edge),
        }
    }

    /// All faces, ordered by smallest contained arc; one empty face per
    /// isolated vertex follows, in vertex order.
    pub fn trace_faces(&self) -> Vec<Face> {
        let mut assigned = vec![false; 2 * self.edge_count()];
        let key = |a: GraphArc| a.edge * 2 + usize::from(a.dir == super::Direction::Backward);
        let mut faces = Vec::new();
        for start in self.arcs() {
            if assigned[key(start)] {
                continue;
            }
            let mut arcs = Vec::new();
            let mut a = start;
            loop {
                assigned[key(a)] = true;
                arcs.push(a);
                a = self.next_face_arc(a);
                if a == start {
                    break;
                }
            }
            faces.push(Face {
                arcs,
                isolated_at: None,
            });
        }
        for v in 0..self.vertex_count() {
            if self.degree(v) == 0 {
                faces.push(Face {
                    arcs: Vec::new(),
                    isolated_at: Some(v),
                });
            }
        }
        faces
    }

    /// Number of faces (arc orbits plus isolated vertices).
    pub fn face_count(&self) -> usize {
        self.trace_faces().len()
    }

    /// Genus of each connected component, ordered like
    /// [`EmbeddedGraph::components`]. Fails if a component's Euler
    /// characteristic is odd or exceeds 2, which would indicate a
    /// face-tracing bug.
    pub fn euler_genus(&self) -> Result<Vec<u64>, GraphError> {
        self.components()
            .iter()
            .map(|c| c.graph.connected_genus())
            .collect()
    }

    /// Genus of a connected graph.
    pub fn genus(&self) -> Result<u64, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected("genus"));
        }
        self.connected_genus()
    }

    fn connected_genus(&self) -> Result<u64, GraphError> {
        let v = self.vertex_count() as i64;
        let e = self.edge_count() as i64;
        let f = self.face_count() as i64;
        let chi = v - e + f;
        if chi % 2 != 0 || chi > 2 {
            return Err(GraphError::EulerAssertion(format!(
                "component has V={v}, E={e}, F={f}, Euler characteristic {chi}"
            )));
        }
        Ok(((2 - chi) / 2) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::Direction;

    fn face_lengths(g: &EmbeddedGraph) -> Vec<usize> {
        g.trace_faces().iter().map(Face::len).collect()
    }

    #[test]
    fn single_loop_has_two_faces() {
        let g = corpus::loop_graph();
        assert_eq!(face_lengths(&g), vec![1, 1]);
        assert_eq!(g.genus().unwrap(), 0);
    }

    #[test]
    fn interleaved_bouquet_has_one_face() {
        let g = corpus::bouquet(1);
        assert_eq!(face_lengths(&g), vec![4]);
        assert_eq!(g.genus().unwrap(), 1);
    }

    #[test]
    fn planar_theta_has_three_faces() {
        let g = corpus::theta_planar();
        assert_eq!(g.face_count(), 3);
        assert_eq!(g.genus().unwrap(), 0);
    }

    #[test]
    fn twisted_theta_is_toroidal() {
        let g = corpus::theta_twisted();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.genus().unwrap(), 1);
    }

    #[test]
    fn face_lengths_sum_to_twice_edges() {
        for g in corpus::all() {
            let faces = g.trace_faces();
            let total: usize = faces.iter().map(Face::len).sum();
            assert_eq!(total, 2 * g.edge_count(), "{}", g.vertex_count());
            // every arc in exactly one face
            let mut seen = std::collections::BTreeSet::new();
            for f in &faces {
                for &a in &f.arcs {
                    assert!(seen.insert(a));
                }
            }
            assert_eq!(seen.len(), 2 * g.edge_count());
        }
    }

    #[test]
    fn disjoint_union_genera_are_per_component() {
        // loop plus digon: two components, both genus 0
        let g = crate::graph::parse_graph(
            r#"{
                "vertices": ["w", "u", "v"],
                "edges": [
                    {"id": "l", "tail": "w", "head": "w"},
                    {"id": "e1", "tail": "u", "head": "v"},
                    {"id": "e2", "tail": "u", "head": "v"}
                ],
                "rotations": {
                    "w": [["l", "tail"], ["l", "head"]],
                    "u": [["e1", "tail"], ["e2", "tail"]],
                    "v": [["e2", "head"], ["e1", "head"]]
                }
            }"#,
        )
        .unwrap();
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.euler_genus().unwrap(), vec![0, 0]);
        assert!(g.genus().is_err());
    }

    #[test]
    fn isolated_vertex_bounds_one_face() {
        let g = crate::graph::parse_graph(r#"{"vertices": ["v"], "edges": [], "rotations": {}}"#)
            .unwrap();
        let faces = g.trace_faces();
        assert_eq!(faces.len(), 1);
        assert!(faces[0].is_empty());
        assert_eq!(faces[0].isolated_at, Some(0));
        assert_eq!(g.genus().unwrap(), 0);
    }

    #[test]
    fn faces_are_invariant_under_rotation_rerooting() {
        // cyclically re-rooting a rotation must leave face orbits unchanged
        let g = corpus::k4_planar();
        let mut rotations = std::collections::BTreeMap::new();
        for v in 0..g.vertex_count() {
            let mut rot: Vec<(String, crate::graph::EdgeEnd)> = g
                .rotation(v)
                .iter()
                .map(|d| (g.edge(d.edge).id.clone(), d.end))
                .collect();
            let shift = v % rot.len().max(1);
            rot.rotate_left(shift);
            rotations.insert(g.vertex_id(v).to_string(), rot);
        }
        let edges = g
            .edges()
            .iter()
            .map(|e| {
                (
                    e.id.clone(),
                    g.vertex_id(e.tail).to_string(),
                    g.vertex_id(e.head).to_string(),
                )
            })
            .collect();
        let rerooted =
            EmbeddedGraph::build(g.vertex_ids().to_vec(), edges, rotations).unwrap();
        let canon = |g: &EmbeddedGraph| {
            let mut faces: Vec<Vec<(usize, Direction)>> = g
                .trace_faces()
                .iter()
                .map(|f| {
                    // canonical rotation of the cyclic arc list
                    let arcs: Vec<(usize, Direction)> =
                        f.arcs.iter().map(|a| (a.edge, a.dir)).collect();
                    let n = arcs.len();
                    (0..n)
                        .map(|s| {
                            let mut rot = arcs.clone();
                            rot.rotate_left(s);
                            rot
                        })
                        .min()
                        .unwrap_or_default()
                })
                .collect();
            faces.sort();
            faces
        };
        assert_eq!(canon(&g), canon(&rerooted));
    }
}
