//! Directed multigraphs with rotation systems.
//!
//! A graph is stored as vertices, directed edges (loops and parallel edges
//! allowed), and one cyclic dart sequence per vertex. A dart is an edge end
//! — `(edge, Tail)` or `(edge, Head)` — so a loop contributes two distinct
//! darts to its vertex's rotation. The rotation system determines a
//! cellular embedding in an orientable surface; faces, genus and duals are
//! derived from it.
//!
//! Graphs are immutable after construction and all operations are pure.

mod dual;
mod faces;
mod morphism;

pub use dual::{embedded_isomorphic, DualGraph};
pub use faces::Face;
pub use morphism::{check_covering, CoveringReport, GraphMorphism};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from graph parsing, validation, and graph-level operations.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid graph document: {0}")]
    Parse(String),
    #[error("graph validation failed:\n  {}", .0.join("\n  "))]
    Invalid(Vec<String>),
    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("{0} requires a connected graph")]
    Disconnected(&'static str),
    #[error("Euler characteristic assertion failed: {0}")]
    EulerAssertion(String),
    #[error("invalid morphism: {0}")]
    MorphismInvalid(String),
}

/// Which end of an edge a dart sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeEnd {
    Tail,
    Head,
}

impl EdgeEnd {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeEnd::Tail => "tail",
            EdgeEnd::Head => "head",
        }
    }
}

/// A dart: one of the two ends of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: usize,
    pub end: EdgeEnd,
}

/// Traversal direction of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }

    pub fn reversed(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// An arc: an edge with a traversal direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphArc {
    pub edge: usize,
    pub dir: Direction,
}

impl GraphArc {
    pub fn forward(edge: usize) -> Self {
        GraphArc {
            edge,
            dir: Direction::Forward,
        }
    }

    pub fn backward(edge: usize) -> Self {
        GraphArc {
            edge,
            dir: Direction::Backward,
        }
    }

    /// The dart this arc departs through.
    pub fn departing_dart(self) -> Dart {
        Dart {
            edge: self.edge,
            end: match self.dir {
                Direction::Forward => EdgeEnd::Tail,
                Direction::Backward => EdgeEnd::Head,
            },
        }
    }

    /// The dart this arc enters through.
    pub fn entering_dart(self) -> Dart {
        Dart {
            edge: self.edge,
            end: match self.dir {
                Direction::Forward => EdgeEnd::Head,
                Direction::Backward => EdgeEnd::Tail,
            },
        }
    }

    pub fn reversed(self) -> GraphArc {
        GraphArc {
            edge: self.edge,
            dir: self.dir.reversed(),
        }
    }
}

/// A directed edge between vertex indices.
#[derive(Debug, Clone)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// A directed multigraph with a rotation system.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    vertex_ids: Vec<String>,
    vertex_index: BTreeMap<String, usize>,
    edges: Vec<Edge>,
    edge_index: BTreeMap<String, usize>,
    rotations: Vec<Vec<Dart>>,
    /// dart (edge * 2 + end) -> (vertex, position in that vertex's rotation)
    dart_position: Vec<(usize, usize)>,
}

fn dart_key(d: Dart) -> usize {
    d.edge * 2 + usize::from(d.end == EdgeEnd::Head)
}

impl EmbeddedGraph {
    /// Build and validate a graph from raw parts. `edges` entries are
    /// `(id, tail, head)`; `rotations` maps vertex ids to dart lists and may
    /// omit isolated vertices. Every violated invariant is reported.
    pub fn build(
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
        rotations: BTreeMap<String, Vec<(String, EdgeEnd)>>,
    ) -> Result<EmbeddedGraph, GraphError> {
        let mut violations = Vec::new();

        let mut vertex_index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                violations.push(format!("duplicate vertex id `{v}`"));
            }
        }

        let mut edge_list = Vec::new();
        let mut edge_index = BTreeMap::new();
        for (id, tail, head) in &edges {
            let t = vertex_index.get(tail).copied();
            let h = vertex_index.get(head).copied();
            if t.is_none() {
                violations.push(format!("edge `{id}` references unknown tail vertex `{tail}`"));
            }
            if h.is_none() {
                violations.push(format!("edge `{id}` references unknown head vertex `{head}`"));
            }
            if edge_index.insert(id.clone(), edge_list.len()).is_some() {
                violations.push(format!("duplicate edge id `{id}`"));
            }
            if let (Some(t), Some(h)) = (t, h) {
                edge_list.push(Edge {
                    id: id.clone(),
                    tail: t,
                    head: h,
                });
            }
        }
        if !violations.is_empty() {
            // Later checks need consistent indices; report what we have.
            return Err(GraphError::Invalid(violations));
        }

        let mut rotation_vec: Vec<Vec<Dart>> = vec![Vec::new(); vertices.len()];
        let mut seen = vec![false; 2 * edge_list.len()];
        for (vid, darts) in &rotations {
            let Some(&v) = vertex_index.get(vid) else {
                violations.push(format!("rotation given for unknown vertex `{vid}`"));
                continue;
            };
            for (eid, end) in darts {
                let Some(&e) = edge_index.get(eid) else {
                    violations.push(format!(
                        "rotation at `{vid}` references unknown edge `{eid}`"
                    ));
                    continue;
                };
                let dart = Dart { edge: e, end: *end };
                let expected = match end {
                    EdgeEnd::Tail => edge_list[e].tail,
                    EdgeEnd::Head => edge_list[e].head,
                };
                if expected != v {
                    violations.push(format!(
                        "dart ({eid}, {}) listed at `{vid}` but belongs at `{}`",
                        end.as_str(),
                        vertices[expected]
                    ));
                    continue;
                }
                if seen[dart_key(dart)] {
                    violations.push(format!("duplicate dart ({eid}, {})", end.as_str()));
                    continue;
                }
                seen[dart_key(dart)] = true;
                rotation_vec[v].push(dart);
            }
        }
        for (e, edge) in edge_list.iter().enumerate() {
            for end in [EdgeEnd::Tail, EdgeEnd::Head] {
                if !seen[dart_key(Dart { edge: e, end })] {
                    violations.push(format!(
                        "rotation missing dart ({}, {})",
                        edge.id,
                        end.as_str()
                    ));
                }
            }
        }
        if !violations.is_empty() {
            return Err(GraphError::Invalid(violations));
        }

        let mut dart_position = vec![(usize::MAX, usize::MAX); 2 * edge_list.len()];
        for (v, rot) in rotation_vec.iter().enumerate() {
            for (pos, &d) in rot.iter().enumerate() {
                dart_position[dart_key(d)] = (v, pos);
            }
        }

        Ok(EmbeddedGraph {
            vertex_ids: vertices,
            vertex_index,
            edges: edge_list,
            edge_index,
            rotations: rotation_vec,
            dart_position,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertex_ids[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn vertex_by_id(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_by_id(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    /// Rotation (cyclic dart order) at a vertex.
    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rotations[v]
    }

    /// Total degree of a vertex (loops count twice).
    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    /// The vertex a dart is incident to.
    pub fn dart_vertex(&self, d: Dart) -> usize {
        self.dart_position[dart_key(d)].0
    }

    /// The dart after `d` in its vertex's cyclic rotation.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let (v, pos) = self.dart_position[dart_key(d)];
        let rot = &self.rotations[v];
        rot[(pos + 1) % rot.len()]
    }

    /// Source vertex of an arc.
    pub fn arc_source(&self, a: GraphArc) -> usize {
        match a.dir {
            Direction::Forward => self.edges[a.edge].tail,
            Direction::Backward => self.edges[a.edge].head,
        }
    }

    /// Target vertex of an arc.
    pub fn arc_target(&self, a: GraphArc) -> usize {
        match a.dir {
            Direction::Forward => self.edges[a.edge].head,
            Direction::Backward => self.edges[a.edge].tail,
        }
    }

    /// All `2|E|` arcs in canonical order (by edge, forward before backward).
    pub fn arcs(&self) -> impl Iterator<Item = GraphArc> + '_ {
        (0..self.edges.len()).flat_map(|e| [GraphArc::forward(e), GraphArc::backward(e)])
    }

    /// Connected components, ordered by their minimal vertex index.
    /// Each component keeps the original vertex/edge ids and carries maps
    /// back to the parent's indices.
    pub fn components(&self) -> Vec<Component> {
        let n = self.vertex_count();
        let mut comp_of = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = count;
            count += 1;
            let mut stack = vec![start];
            comp_of[start] = id;
            while let Some(v) = stack.pop() {
                for &d in &self.rotations[v] {
                    let e = &self.edges[d.edge];
                    for w in [e.tail, e.head] {
                        if comp_of[w] == usize::MAX {
                            comp_of[w] = id;
                            stack.push(w);
                        }
                    }
                }
            }
        }
        let mut components = Vec::with_capacity(count);
        for id in 0..count {
            let vertex_map: Vec<usize> = (0..n).filter(|&v| comp_of[v] == id).collect();
            let edge_map: Vec<usize> = (0..self.edges.len())
                .filter(|&e| comp_of[self.edges[e].tail] == id)
                .collect();
            let vertices: Vec<String> = vertex_map.iter().map(|&v| self.vertex_ids[v].clone()).collect();
            let edges: Vec<(String, String, String)> = edge_map
                .iter()
                .map(|&e| {
                    let edge = &self.edges[e];
                    (
                        edge.id.clone(),
                        self.vertex_ids[edge.tail].clone(),
                        self.vertex_ids[edge.head].clone(),
                    )
                })
                .collect();
            let mut rotations = BTreeMap::new();
            for &v in &vertex_map {
                let darts: Vec<(String, EdgeEnd)> = self.rotations[v]
                    .iter()
                    .map(|d| (self.edges[d.edge].id.clone(), d.end))
                    .collect();
                rotations.insert(self.vertex_ids[v].clone(), darts);
            }
            let graph = EmbeddedGraph::build(vertices, edges, rotations)
                .expect("component of a valid graph is valid");
            components.push(Component {
                graph,
                vertex_map,
                edge_map,
            });
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Restriction to an edge subset: all vertices retained, rotations
    /// restricted to darts of kept edges in the same cyclic order. Edge
    /// indices are renumbered; ids are preserved.
    pub fn edge_subgraph(&self, keep_ids: &[&str]) -> Result<EmbeddedGraph, GraphError> {
        let mut keep = vec![false; self.edges.len()];
        for id in keep_ids {
            let e = self
                .edge_by_id(id)
                .ok_or_else(|| GraphError::UnknownEdge(id.to_string()))?;
            keep[e] = true;
        }
        Ok(self.edge_subgraph_by_flags(&keep))
    }

    /// Flag-based subgraph restriction (see [`Self::edge_subgraph`]).
    pub fn edge_subgraph_by_flags(&self, keep: &[bool]) -> EmbeddedGraph {
        let edges: Vec<(String, String, String)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(e, _)| keep[*e])
            .map(|(_, edge)| {
                (
                    edge.id.clone(),
                    self.vertex_ids[edge.tail].clone(),
                    self.vertex_ids[edge.head].clone(),
                )
            })
            .collect();
        let mut rotations = BTreeMap::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            let darts: Vec<(String, EdgeEnd)> = rot
                .iter()
                .filter(|d| keep[d.edge])
                .map(|d| (self.edges[d.edge].id.clone(), d.end))
                .collect();
            rotations.insert(self.vertex_ids[v].clone(), darts);
        }
        EmbeddedGraph::build(self.vertex_ids.clone(), edges, rotations)
            .expect("restriction of a valid graph is valid")
    }

    /// Structural equality: same vertex ids, edges, and rotations. Used to
    /// detect labelings applied to the wrong graph.
    pub fn same_graph(&self, other: &EmbeddedGraph) -> bool {
        std::ptr::eq(self, other)
            || (self.vertex_ids == other.vertex_ids
                && self.rotations == other.rotations
                && self.edges.len() == other.edges.len()
                && self
                    .edges
                    .iter()
                    .zip(&other.edges)
                    .all(|(a, b)| a.id == b.id && a.tail == b.tail && a.head == b.head))
    }

    /// The same embedded graph with one edge's direction reversed. The
    /// edge's darts swap ends in place, so the rotation system (and hence
    /// the embedding) is unchanged.
    pub fn with_edge_reversed(&self, e: usize) -> EmbeddedGraph {
        let edges: Vec<(String, String, String)> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, edge)| {
                let (t, h) = if i == e {
                    (edge.head, edge.tail)
                } else {
                    (edge.tail, edge.head)
                };
                (
                    edge.id.clone(),
                    self.vertex_ids[t].clone(),
                    self.vertex_ids[h].clone(),
                )
            })
            .collect();
        let mut rotations = BTreeMap::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            let darts: Vec<(String, EdgeEnd)> = rot
                .iter()
                .map(|d| {
                    let end = if d.edge == e {
                        match d.end {
                            EdgeEnd::Tail => EdgeEnd::Head,
                            EdgeEnd::Head => EdgeEnd::Tail,
                        }
                    } else {
                        d.end
                    };
                    (self.edges[d.edge].id.clone(), end)
                })
                .collect();
            rotations.insert(self.vertex_ids[v].clone(), darts);
        }
        EmbeddedGraph::build(self.vertex_ids.clone(), edges, rotations)
            .expect("edge reversal preserves validity")
    }

    /// DOT text for external viewers.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph embedded {\n");
        for v in &self.vertex_ids {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertex_ids[e.tail], self.vertex_ids[e.head], e.id
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// A connected component with maps back to the parent graph.
#[derive(Debug, Clone)]
pub struct Component {
    pub graph: EmbeddedGraph,
    /// component vertex index -> parent vertex index
    pub vertex_map: Vec<usize>,
    /// component edge index -> parent edge index
    pub edge_map: Vec<usize>,
}

// ---------------------------------------------------------------------------
// JSON format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    id: String,
    tail: String,
    head: String,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<String>,
    edges: Vec<EdgeDoc>,
    #[serde(default)]
    rotations: BTreeMap<String, Vec<(String, String)>>,
}

/// Parse and validate a graph from its JSON document.
pub fn parse_graph(document: &str) -> Result<EmbeddedGraph, GraphError> {
    let doc: GraphDoc = serde_json::from_str(document).map_err(|e| GraphError::Parse(e.to_string()))?;
    graph_from_doc(doc)
}

fn graph_from_doc(doc: GraphDoc) -> Result<EmbeddedGraph, GraphError> {
    let mut violations = Vec::new();
    let mut rotations = BTreeMap::new();
    for (v, darts) in doc.rotations {
        let mut list = Vec::with_capacity(darts.len());
        for (eid, end) in darts {
            match end.as_str() {
                "tail" => list.push((eid, EdgeEnd::Tail)),
                "head" => list.push((eid, EdgeEnd::Head)),
                other => violations.push(format!(
                    "dart for edge `{eid}` at `{v}` has bad end `{other}` (want tail|head)"
                )),
            }
        }
        rotations.insert(v, list);
    }
    if !violations.is_empty() {
        return Err(GraphError::Invalid(violations));
    }
    let edges = doc
        .edges
        .into_iter()
        .map(|e| (e.id, e.tail, e.head))
        .collect();
    EmbeddedGraph::build(doc.vertices, edges, rotations)
}

impl EmbeddedGraph {
    /// JSON document in the interchange format.
    pub fn to_json(&self) -> serde_json::Value {
        let rotations: BTreeMap<String, Vec<(String, String)>> = self
            .vertex_ids
            .iter()
            .enumerate()
            .map(|(v, id)| {
                let darts = self.rotations[v]
                    .iter()
                    .map(|d| (self.edges[d.edge].id.clone(), d.end.as_str().to_string()))
                    .collect();
                (id.clone(), darts)
            })
            .collect();
        serde_json::json!({
            "vertices": self.vertex_ids,
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "id": e.id,
                "tail": self.vertex_ids[e.tail],
                "head": self.vertex_ids[e.head],
            })).collect::<Vec<_>>(),
            "rotations": rotations,
        })
    }
}

impl fmt::Display for EmbeddedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            serde_json::to_string_pretty(&self.to_json()).map_err(|_| fmt::Error)?
        )
    }
}
