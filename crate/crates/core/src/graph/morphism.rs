//! Graph morphisms and the covering check.

use std::sync::Arc;

use super::{Dart, EmbeddedGraph, GraphError};

/// A direction-preserving homomorphism between embedded graphs, given by a
/// vertex map and an edge map. The dart map is implied: `(e, end)` goes to
/// `(edge_map[e], end)`.
#[derive(Debug, Clone)]
pub struct GraphMorphism {
    source: Arc<EmbeddedGraph>,
    target: Arc<EmbeddedGraph>,
    vertex_map: Vec<usize>,
    edge_map: Vec<usize>,
}

/// Outcome of a covering check: valid, or a list of violations.
#[derive(Debug, Clone)]
pub struct CoveringReport {
    pub is_covering: bool,
    pub violations: Vec<String>,
}

impl GraphMorphism {
    /// Build a morphism, checking that the maps respect incidence and edge
    /// direction. (Local bijectivity on rotations is a separate property,
    /// checked by [`GraphMorphism::check_covering`].)
    pub fn new(
        source: Arc<EmbeddedGraph>,
        target: Arc<EmbeddedGraph>,
        vertex_map: Vec<usize>,
        edge_map: Vec<usize>,
    ) -> Result<GraphMorphism, GraphError> {
        if vertex_map.len() != source.vertex_count() {
            return Err(GraphError::MorphismInvalid(format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                source.vertex_count()
            )));
        }
        if edge_map.len() != source.edge_count() {
            return Err(GraphError::MorphismInvalid(format!(
                "edge map has {} entries for {} edges",
                edge_map.len(),
                source.edge_count()
            )));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= target.vertex_count()) {
            return Err(GraphError::MorphismInvalid(format!(
                "vertex image {v} out of range"
            )));
        }
        if let Some(&e) = edge_map.iter().find(|&&e| e >= target.edge_count()) {
            return Err(GraphError::MorphismInvalid(format!(
                "edge image {e} out of range"
            )));
        }
        for (e, edge) in source.edges().iter().enumerate() {
            let image = target.edge(edge_map[e]);
            if vertex_map[edge.tail] != image.tail || vertex_map[edge.head] != image.head {
                return Err(GraphError::MorphismInvalid(format!(
                    "edge `{}` maps to `{}` but endpoints do not correspond",
                    edge.id, image.id
                )));
            }
        }
        Ok(GraphMorphism {
            source,
            target,
            vertex_map,
            edge_map,
        })
    }

    /// Identity morphism of a graph.
    pub fn identity(graph: Arc<EmbeddedGraph>) -> GraphMorphism {
        GraphMorphism {
            source: graph.clone(),
            vertex_map: (0..graph.vertex_count()).collect(),
            edge_map: (0..graph.edge_count()).collect(),
            target: graph,
        }
    }

    pub fn source(&self) -> &Arc<EmbeddedGraph> {
        &self.source
    }

    pub fn target(&self) -> &Arc<EmbeddedGraph> {
        &self.target
    }

    pub fn vertex_image(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn edge_image(&self, e: usize) -> usize {
        self.edge_map[e]
    }

    pub fn dart_image(&self, d: Dart) -> Dart {
        Dart {
            edge: self.edge_map[d.edge],
            end: d.end,
        }
    }

    /// Check whether this morphism is a covering: surjective, and at every
    /// source vertex the dart map restricted to the rotation is a
    /// cyclic-order-preserving bijection onto the image vertex's rotation.
    /// Violations are reported, not thrown.
    pub fn check_covering(&self) -> CoveringReport {
        let mut violations = Vec::new();

        let mut vertex_hit = vec![false; self.target.vertex_count()];
        for &v in &self.vertex_map {
            vertex_hit[v] = true;
        }
        for (v, hit) in vertex_hit.iter().enumerate() {
            if !hit {
                violations.push(format!(
                    "vertex `{}` not in the image",
                    self.target.vertex_id(v)
                ));
            }
        }
        let mut edge_hit = vec![false; self.target.edge_count()];
        for &e in &self.edge_map {
            edge_hit[e] = true;
        }
        for (e, hit) in edge_hit.iter().enumerate() {
            if !hit {
                violations.push(format!("edge `{}` not in the image", self.target.edge(e).id));
            }
        }

        for v in 0..self.source.vertex_count() {
            let w = self.vertex_map[v];
            let src_rot = self.source.rotation(v);
            let dst_rot = self.target.rotation(w);
            if src_rot.len() != dst_rot.len() {
                violations.push(format!(
                    "degree mismatch: `{}` has degree {}, image `{}` has degree {}",
                    self.source.vertex_id(v),
                    src_rot.len(),
                    self.target.vertex_id(w),
                    dst_rot.len()
                ));
                continue;
            }
            if src_rot.is_empty() {
                continue;
            }
            let first = self.dart_image(src_rot[0]);
            let Some(shift) = dst_rot.iter().position(|&d| d == first) else {
                violations.push(format!(
                    "dart image of ({}, {}) missing from rotation at `{}`",
                    self.source.edge(src_rot[0].edge).id,
                    src_rot[0].end.as_str(),
                    self.target.vertex_id(w)
                ));
                continue;
            };
            for (i, &d) in src_rot.iter().enumerate() {
                let expected = dst_rot[(shift + i) % dst_rot.len()];
                let got = self.dart_image(d);
                if got != expected {
                    violations.push(format!(
                        "rotation at `{}` does not map cyclically onto rotation at `{}` \
                         (position {i}: got ({}, {}), expected ({}, {}))",
                        self.source.vertex_id(v),
                        self.target.vertex_id(w),
                        self.target.edge(got.edge).id,
                        got.end.as_str(),
                        self.target.edge(expected.edge).id,
                        expected.end.as_str(),
                    ));
                    break;
                }
            }
        }

        CoveringReport {
            is_covering: violations.is_empty(),
            violations,
        }
    }
}

/// Free-function alias for [`GraphMorphism::check_covering`].
pub fn check_covering(m: &GraphMorphism) -> CoveringReport {
    m.check_covering()
}
