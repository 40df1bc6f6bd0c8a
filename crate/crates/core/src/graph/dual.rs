//! Geometric duals of embedded graphs.
//!
//! The dual has one vertex per face (`f0`, `f1`, ... in face order) and one
//! edge per primal edge, keeping the primal edge id so the edge bijection
//! is the identity on ids. A dual edge runs from the face containing the
//! primal edge's backward arc to the face containing its forward arc, and
//! the rotation at a face vertex follows that face's arc order. Under this
//! orientation the flow condition at a primal vertex is exactly the
//! identity-height condition on the corresponding dual facial walk.

use std::collections::BTreeMap;

use super::{Direction, EdgeEnd, EmbeddedGraph, Face, GraphError};

/// An embedded graph together with the face data of the primal it was
/// derived from.
#[derive(Debug, Clone)]
pub struct DualGraph {
    pub graph: EmbeddedGraph,
    /// Primal faces, in the order that names the dual vertices.
    pub primal_faces: Vec<Face>,
}

impl DualGraph {
    /// JSON document: the dual graph plus a `maps` section with face
    /// membership and the (identity) edge correspondence.
    pub fn to_json(&self) -> serde_json::Value {
        let faces: BTreeMap<String, Vec<(String, String)>> = self
            .primal_faces
            .iter()
            .enumerate()
            .map(|(i, face)| {
                let arcs = face
                    .arcs
                    .iter()
                    .map(|a| {
                        (
                            self.graph.edge(a.edge).id.clone(),
                            a.dir.as_str().to_string(),
                        )
                    })
                    .collect();
                (format!("f{i}"), arcs)
            })
            .collect();
        let edges: BTreeMap<String, String> = self
            .graph
            .edges()
            .iter()
            .map(|e| (e.id.clone(), e.id.clone()))
            .collect();
        serde_json::json!({
            "graph": self.graph.to_json(),
            "maps": { "faces": faces, "edges": edges },
        })
    }
}

impl EmbeddedGraph {
    /// The dual of a connected embedded graph. Edge ids carry over
    /// unchanged; dual vertex `f{i}` corresponds to primal face `i`.
    pub fn dual(&self) -> Result<DualGraph, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected("dual_graph"));
        }
        let faces = self.trace_faces();
        let mut face_of_arc = vec![usize::MAX; 2 * self.edge_count()];
        let arc_key =
            |a: super::GraphArc| a.edge * 2 + usize::from(a.dir == Direction::Backward);
        for (i, face) in faces.iter().enumerate() {
            for &a in &face.arcs {
                face_of_arc[arc_key(a)] = i;
            }
        }
        let vertex_ids: Vec<String> = (0..faces.len()).map(|i| format!("f{i}")).collect();
        let edges: Vec<(String, String, String)> = self
            .edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let tail_face = face_of_arc[e * 2 + 1]; // backward arc
                let head_face = face_of_arc[e * 2]; // forward arc
                (
                    edge.id.clone(),
                    vertex_ids[tail_face].clone(),
                    vertex_ids[head_face].clone(),
                )
            })
            .collect();
        let mut rotations: BTreeMap<String, Vec<(String, EdgeEnd)>> = BTreeMap::new();
        for (i, face) in faces.iter().enumerate() {
            let darts: Vec<(String, EdgeEnd)> = face
                .arcs
                .iter()
                .map(|a| {
                    let end = match a.dir {
                        Direction::Forward => EdgeEnd::Head,
                        Direction::Backward => EdgeEnd::Tail,
                    };
                    (self.edge(a.edge).id.clone(), end)
                })
                .collect();
            rotations.insert(vertex_ids[i].clone(), darts);
        }
        let graph = EmbeddedGraph::build(vertex_ids, edges, rotations)
            .expect("dual of a valid connected graph is valid");
        Ok(DualGraph {
            graph,
            primal_faces: faces,
        })
    }
}

/// Embedded-graph isomorphism: bijections of vertices and edges that
/// preserve edge directions and cyclic rotations. Backtracking search,
/// intended for the small graphs in the test corpus.
pub fn embedded_isomorphic(a: &EmbeddedGraph, b: &EmbeddedGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut vmap = vec![usize::MAX; a.vertex_count()];
    let mut emap = vec![usize::MAX; a.edge_count()];
    let mut used_v = vec![false; b.vertex_count()];
    let mut used_e = vec![false; b.edge_count()];
    search(a, b, 0, &mut vmap, &mut emap, &mut used_v, &mut used_e)
}

fn search(
    a: &EmbeddedGraph,
    b: &EmbeddedGraph,
    v: usize,
    vmap: &mut Vec<usize>,
    emap: &mut Vec<usize>,
    used_v: &mut Vec<bool>,
    used_e: &mut Vec<bool>,
) -> bool {
    if v == a.vertex_count() {
        // rotations have pinned every dart; double-check edge endpoints
        return a.edges().iter().enumerate().all(|(e, edge)| {
            let im = emap[e];
            im != usize::MAX
                && b.edge(im).tail == vmap[edge.tail]
                && b.edge(im).head == vmap[edge.head]
        });
    }
    for w in 0..b.vertex_count() {
        if used_v[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        let deg = a.degree(v);
        let shifts: Vec<usize> = if deg == 0 { vec![0] } else { (0..deg).collect() };
        for shift in shifts {
            // tentatively align rotation of v with rotation of w at `shift`
            let mut touched = Vec::new();
            let mut ok = true;
            for (i, da) in a.rotation(v).iter().enumerate() {
                let db = b.rotation(w)[(i + shift) % deg.max(1)];
                if da.end != db.end {
                    ok = false;
                    break;
                }
                match emap[da.edge] {
                    usize::MAX => {
                        if used_e[db.edge] {
                            ok = false;
                            break;
                        }
                        emap[da.edge] = db.edge;
                        used_e[db.edge] = true;
                        touched.push(da.edge);
                    }
                    assigned if assigned != db.edge => {
                        ok = false;
                        break;
                    }
                    _ => {}
                }
            }
            if ok {
                vmap[v] = w;
                used_v[w] = true;
                if search(a, b, v + 1, vmap, emap, used_v, used_e) {
                    return true;
                }
                vmap[v] = usize::MAX;
                used_v[w] = false;
            }
            for e in touched {
                used_e[emap[e]] = false;
                emap[e] = usize::MAX;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn dual_of_loop_is_single_edge() {
        let g = corpus::loop_graph();
        let dual = g.dual().unwrap();
        assert_eq!(dual.graph.vertex_count(), 2);
        assert_eq!(dual.graph.edge_count(), 1);
        assert_eq!(dual.graph.genus().unwrap(), 0);
    }

    #[test]
    fn dual_of_torus_bouquet_is_torus_bouquet() {
        let g = corpus::bouquet(1);
        let dual = g.dual().unwrap();
        assert_eq!(dual.graph.vertex_count(), 1);
        assert_eq!(dual.graph.edge_count(), 2);
        assert_eq!(dual.graph.genus().unwrap(), 1);
        assert!(dual.graph.edges().iter().all(super::super::Edge::is_loop));
    }

    #[test]
    fn dual_preserves_edges_and_genus() {
        for g in corpus::all() {
            if !g.is_connected() {
                continue;
            }
            let dual = g.dual().unwrap();
            assert_eq!(dual.graph.edge_count(), g.edge_count());
            assert_eq!(dual.graph.vertex_count(), g.face_count());
            assert_eq!(dual.graph.genus().unwrap(), g.genus().unwrap());
        }
    }

    #[test]
    fn double_dual_of_planar_theta_is_theta() {
        let g = corpus::theta_planar();
        let dd = g.dual().unwrap().graph.dual().unwrap().graph;
        assert!(embedded_isomorphic(&g, &dd));
    }

    #[test]
    fn isomorphism_distinguishes_rotations() {
        // same underlying graph, different embedding: theta vs twisted theta
        let a = corpus::theta_planar();
        let b = corpus::theta_twisted();
        assert!(!embedded_isomorphic(&a, &b));
        assert!(embedded_isomorphic(&a, &a));
    }
}
