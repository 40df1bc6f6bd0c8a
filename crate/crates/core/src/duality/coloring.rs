//! Proper G-colorings and their correspondence with global tensions.
//!
//! A nowhere-identity global tension determines |G| proper colorings: one
//! base coloring from spanning-tree heights, then all right-translates.
//! Conversely a coloring induces the tension `psi(e) = k(tail) k(head)^-1`,
//! which is constant on right-translation orbits.

use std::sync::Arc;

use crate::graph::EmbeddedGraph;
use crate::group::FiniteGroup;
use crate::partition::EdgeLabeling;

use super::{is_global_tension, tree_heights, DualityError};

/// A total assignment of group elements to vertices.
#[derive(Debug, Clone)]
pub struct GColoring {
    graph: Arc<EmbeddedGraph>,
    group: Arc<FiniteGroup>,
    values: Vec<usize>,
}

impl GColoring {
    pub fn new(
        graph: Arc<EmbeddedGraph>,
        group: Arc<FiniteGroup>,
        values: Vec<usize>,
    ) -> Result<GColoring, DualityError> {
        if values.len() != graph.vertex_count() || values.iter().any(|&v| v >= group.order()) {
            return Err(DualityError::LabelingMismatch);
        }
        Ok(GColoring {
            graph,
            group,
            values,
        })
    }

    pub fn graph(&self) -> &Arc<EmbeddedGraph> {
        &self.graph
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn color(&self, v: usize) -> usize {
        self.values[v]
    }

    /// Proper: the endpoints of every edge receive different values. A
    /// graph with a loop admits no proper coloring.
    pub fn is_proper(&self) -> bool {
        self.graph
            .edges()
            .iter()
            .all(|e| self.values[e.tail] != self.values[e.head])
    }

    /// Coloring document: vertex id -> element index.
    pub fn to_json(&self) -> serde_json::Value {
        let map: std::collections::BTreeMap<String, usize> = self
            .values
            .iter()
            .enumerate()
            .map(|(v, &c)| (self.graph.vertex_id(v).to_string(), c))
            .collect();
        serde_json::json!(map)
    }

    /// The right-translate `u -> k(u) * g`.
    pub fn translated(&self, g: usize) -> GColoring {
        let values = self
            .values
            .iter()
            .map(|&v| self.group.mul(v, g))
            .collect();
        GColoring {
            graph: self.graph.clone(),
            group: self.group.clone(),
            values,
        }
    }
}

/// The global tension induced by a coloring: `psi(e) = k(tail) k(head)^-1`.
/// It is nowhere-identity iff the coloring is proper.
pub fn coloring_to_tension(coloring: &GColoring) -> EdgeLabeling {
    let graph = coloring.graph();
    let group = coloring.group();
    let values = graph
        .edges()
        .iter()
        .map(|e| group.mul(coloring.color(e.tail), group.inv(coloring.color(e.head))))
        .collect();
    EdgeLabeling::new(graph.clone(), group.clone(), values)
        .expect("coloring and graph share edge structure")
}

/// All |G| colorings corresponding to a global tension on a connected
/// graph: the base coloring assigns each vertex the inverse of its
/// tree-path height (so the base vertex gets the identity), and the rest
/// are its right-translates, in element order. Every one of them maps back
/// to the tension under [`coloring_to_tension`].
pub fn colorings_from_tension(labeling: &EdgeLabeling) -> Result<Vec<GColoring>, DualityError> {
    if !is_global_tension(labeling)? {
        return Err(DualityError::NotGlobalTension);
    }
    let graph = labeling.graph();
    let group = labeling.group();
    let heights = tree_heights(labeling);
    let base = GColoring::new(
        graph.clone(),
        group.clone(),
        heights.iter().map(|&h| group.inv(h)).collect(),
    )?;
    Ok((0..group.order()).map(|g| base.translated(g)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::group::build_group;
    use crate::partition::EdgeLabeling;

    fn path_graph() -> EmbeddedGraph {
        crate::graph::parse_graph(
            r#"{
                "vertices": ["a", "b"],
                "edges": [{"id": "e", "tail": "a", "head": "b"}],
                "rotations": {"a": [["e", "tail"]], "b": [["e", "head"]]}
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn constant_coloring_gives_identity_tension() {
        let g = Arc::new(corpus::theta_planar());
        let group = build_group("symmetric:3").unwrap();
        let kappa = GColoring::new(g.clone(), group.clone(), vec![3, 3]).unwrap();
        let psi = coloring_to_tension(&kappa);
        assert!(psi.values().iter().all(|&v| v == 0));
        assert!(!kappa.is_proper());
    }

    #[test]
    fn path_coloring_reads_off_label() {
        let g = Arc::new(path_graph());
        let group = build_group("cyclic:5").unwrap();
        let kappa = GColoring::new(g.clone(), group.clone(), vec![2, 0]).unwrap();
        let psi = coloring_to_tension(&kappa);
        assert_eq!(psi.values(), &[2]);
        assert!(kappa.is_proper());
    }

    #[test]
    fn translates_yield_the_same_tension() {
        let g = Arc::new(corpus::theta_planar());
        let group = build_group("symmetric:3").unwrap();
        let kappa = GColoring::new(g.clone(), group.clone(), vec![1, 4]).unwrap();
        let psi = coloring_to_tension(&kappa);
        for t in 0..6 {
            let translated = kappa.translated(t);
            assert_eq!(coloring_to_tension(&translated).values(), psi.values());
        }
    }

    #[test]
    fn tension_to_colorings_roundtrip() {
        let g = Arc::new(path_graph());
        let group = build_group("cyclic:3").unwrap();
        let psi = EdgeLabeling::new(g.clone(), group.clone(), vec![1]).unwrap();
        let colorings = colorings_from_tension(&psi).unwrap();
        assert_eq!(colorings.len(), 3);
        for kappa in &colorings {
            assert!(kappa.is_proper());
            assert_eq!(coloring_to_tension(kappa).values(), psi.values());
        }
        // all distinct
        let mut seen: Vec<&[usize]> = colorings.iter().map(|c| c.values()).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn all_identity_tension_gives_constant_colorings() {
        let g = Arc::new(corpus::theta_planar());
        let group = build_group("cyclic:4").unwrap();
        let psi = EdgeLabeling::identity(g.clone(), group.clone());
        let colorings = colorings_from_tension(&psi).unwrap();
        assert_eq!(colorings.len(), 4);
        for kappa in &colorings {
            assert!(!kappa.is_proper()); // the graph has edges
            assert!(kappa.values().windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn non_global_tension_rejected() {
        let g = Arc::new(corpus::bouquet(1));
        let group = build_group("cyclic:2").unwrap();
        let psi = EdgeLabeling::new(g, group, vec![1, 1]).unwrap();
        assert!(matches!(
            colorings_from_tension(&psi),
            Err(DualityError::NotGlobalTension)
        ));
    }

    #[test]
    fn nonabelian_roundtrip_on_nontrivial_tension() {
        // build a proper coloring of theta over S3 and check the
        // coloring -> tension -> colorings cycle reproduces it
        let g = Arc::new(corpus::theta_planar());
        let group = build_group("symmetric:3").unwrap();
        let kappa = GColoring::new(g.clone(), group.clone(), vec![0, 2]).unwrap();
        assert!(kappa.is_proper());
        let psi = coloring_to_tension(&kappa);
        assert!(is_global_tension(&psi).unwrap());
        let colorings = colorings_from_tension(&psi).unwrap();
        assert_eq!(colorings.len(), 6);
        assert!(colorings.iter().any(|c| c.values() == kappa.values()));
        for c in &colorings {
            assert_eq!(coloring_to_tension(c).values(), psi.values());
        }
    }
}
