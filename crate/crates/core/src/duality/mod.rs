//! Heights, flows, tensions, and coloring-flow duality.
//!
//! The height of a walk under an edge labeling is the left-to-right
//! product of the labels, inverted on steps against the edge direction.
//! A labeling is a local tension when every facial walk has identity
//! height, and a global tension when every closed walk does (decided
//! finitely via a spanning tree). Flows on a graph correspond to local
//! tensions on its dual; the covering construction turns a local tension
//! into a global one on a finite cover, which is where proper colorings
//! come from on higher-genus surfaces.

mod coloring;
mod covering;

pub use coloring::{coloring_to_tension, colorings_from_tension, GColoring};
pub use covering::{
    build_covering, covering_tension_to_flow, flow_to_proper_coloring, Covering,
    GlobalCoveringTension,
};

use std::sync::Arc;

use thiserror::Error;

use crate::graph::{Direction, DualGraph, EmbeddedGraph, GraphArc, GraphError};
use crate::group::GroupError;
use crate::partition::{CountError, EdgeLabeling};

/// Errors from duality-pipeline operations.
#[derive(Debug, Error)]
pub enum DualityError {
    #[error("inconsistent walk: {0}")]
    InvalidWalk(String),
    #[error("{0} requires a connected graph")]
    Disconnected(&'static str),
    #[error("labeling is not a local tension")]
    NotLocalTension,
    #[error("labeling is not a global tension")]
    NotGlobalTension,
    #[error("labeling is not a flow")]
    NotAFlow,
    #[error("labeling is not nowhere-identity")]
    NotNowhereIdentity,
    #[error("labeling does not match the expected graph or group")]
    LabelingMismatch,
    #[error("covering labels are not constant on the fiber of edge `{0}`")]
    FiberInconsistent(String),
    #[error("invalid covering: {0}")]
    InvalidCovering(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// A walk: a start vertex and a chained arc sequence.
#[derive(Debug, Clone)]
pub struct Walk {
    start: usize,
    steps: Vec<GraphArc>,
}

impl Walk {
    /// Validate chaining against a graph. The empty walk is allowed.
    pub fn new(
        graph: &EmbeddedGraph,
        start: usize,
        steps: Vec<GraphArc>,
    ) -> Result<Walk, DualityError> {
        if start >= graph.vertex_count() {
            return Err(DualityError::InvalidWalk(format!(
                "start vertex {start} out of range"
            )));
        }
        let mut at = start;
        for (i, &a) in steps.iter().enumerate() {
            if a.edge >= graph.edge_count() {
                return Err(DualityError::InvalidWalk(format!(
                    "step {i} references edge {} out of range",
                    a.edge
                )));
            }
            if graph.arc_source(a) != at {
                return Err(DualityError::InvalidWalk(format!(
                    "step {i} departs `{}` but the walk is at `{}`",
                    graph.vertex_id(graph.arc_source(a)),
                    graph.vertex_id(at)
                )));
            }
            at = graph.arc_target(a);
        }
        Ok(Walk { start, steps })
    }

    /// The facial walk of a non-empty face.
    pub fn facial(graph: &EmbeddedGraph, face: &crate::graph::Face) -> Option<Walk> {
        let first = *face.arcs.first()?;
        Walk::new(graph, graph.arc_source(first), face.arcs.clone()).ok()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn steps(&self) -> &[GraphArc] {
        &self.steps
    }

    pub fn end(&self, graph: &EmbeddedGraph) -> usize {
        self.steps
            .last()
            .map_or(self.start, |&a| graph.arc_target(a))
    }

    pub fn is_closed(&self, graph: &EmbeddedGraph) -> bool {
        self.end(graph) == self.start
    }

    /// The reversed walk (directions flipped, order reversed).
    pub fn reversed(&self, graph: &EmbeddedGraph) -> Walk {
        let steps = self.steps.iter().rev().map(|a| a.reversed()).collect();
        Walk {
            start: self.end(graph),
            steps,
        }
    }

    /// Concatenation; the other walk must start where this one ends.
    pub fn concat(&self, graph: &EmbeddedGraph, other: &Walk) -> Result<Walk, DualityError> {
        if self.end(graph) != other.start {
            return Err(DualityError::InvalidWalk(
                "concatenation endpoints do not match".into(),
            ));
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(Walk {
            start: self.start,
            steps,
        })
    }
}

/// Height of a walk: the ordered product of labels along it, inverted on
/// backward steps.
pub fn walk_height(labeling: &EdgeLabeling, walk: &Walk) -> Result<usize, DualityError> {
    let graph = labeling.graph();
    let group = labeling.group();
    // revalidate chaining so walks from another graph cannot be evaluated
    let mut at = walk.start;
    let mut height = group.identity();
    for &a in &walk.steps {
        if a.edge >= graph.edge_count() || graph.arc_source(a) != at {
            return Err(DualityError::InvalidWalk(
                "walk does not chain in the labeling's graph".into(),
            ));
        }
        at = graph.arc_target(a);
        let x = labeling.label(a.edge);
        let x = match a.dir {
            Direction::Forward => x,
            Direction::Backward => group.inv(x),
        };
        height = group.mul(height, x);
    }
    Ok(height)
}

/// Is the labeling a G-flow: identity signed product at every vertex?
/// The result does not depend on where each rotation starts.
pub fn is_flow(labeling: &EdgeLabeling) -> bool {
    let graph = labeling.graph();
    (0..graph.vertex_count()).all(|v| labeling.signed_vertex_product(v) == 0)
}

/// Is the labeling a local tension: identity height on every facial walk?
pub fn is_local_tension(labeling: &EdgeLabeling) -> bool {
    let graph = labeling.graph();
    let group = labeling.group();
    graph.trace_faces().iter().all(|face| {
        let mut height = group.identity();
        for &a in &face.arcs {
            let x = labeling.label(a.edge);
            let x = match a.dir {
                Direction::Forward => x,
                Direction::Backward => group.inv(x),
            };
            height = group.mul(height, x);
        }
        height == group.identity()
    })
}

/// Is the labeling a global tension: identity height on every closed walk?
///
/// Decided finitely: a breadth-first spanning tree assigns every vertex the
/// height of its tree path from the base vertex; the labeling is a global
/// tension iff `h(tail) * label = h(head)` holds across every edge. This is
/// sound and complete because every walk's height then telescopes to
/// `h(start)^-1 h(end)`.
pub fn is_global_tension(labeling: &EdgeLabeling) -> Result<bool, DualityError> {
    let graph = labeling.graph();
    if !graph.is_connected() {
        return Err(DualityError::Disconnected("is_global_tension"));
    }
    let heights = tree_heights(labeling);
    let group = labeling.group();
    Ok(graph.edges().iter().enumerate().all(|(e, edge)| {
        group.mul(heights[edge.tail], labeling.label(e)) == heights[edge.head]
    }))
}

/// Lexicographically smallest vertex id: the canonical base vertex.
pub(crate) fn base_vertex(graph: &EmbeddedGraph) -> usize {
    (0..graph.vertex_count())
        .min_by_key(|&v| graph.vertex_id(v))
        .expect("graph has at least one vertex")
}

/// Heights of breadth-first tree paths from the base vertex (graph must be
/// connected).
pub(crate) fn tree_heights(labeling: &EdgeLabeling) -> Vec<usize> {
    let graph = labeling.graph();
    let group = labeling.group();
    let mut heights = vec![usize::MAX; graph.vertex_count()];
    let base = base_vertex(graph);
    heights[base] = group.identity();
    let mut queue = std::collections::VecDeque::from([base]);
    while let Some(u) = queue.pop_front() {
        for d in graph.rotation(u) {
            let edge = graph.edge(d.edge);
            let (w, h) = match d.end {
                crate::graph::EdgeEnd::Tail => {
                    (edge.head, group.mul(heights[u], labeling.label(d.edge)))
                }
                crate::graph::EdgeEnd::Head => (
                    edge.tail,
                    group.mul(heights[u], group.inv(labeling.label(d.edge))),
                ),
            };
            if heights[w] == usize::MAX {
                heights[w] = h;
                queue.push_back(w);
            }
        }
    }
    heights
}

/// Enumerate every nowhere-identity flow by filtering the
/// (|G|-1)^|E| nowhere-identity labelings; the enumeration cost is
/// budgeted like other brute-force sums.
pub fn nowhere_identity_flows(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<crate::group::FiniteGroup>,
    budget: u64,
) -> Result<Vec<EdgeLabeling>, CountError> {
    let radix = group.order() - 1;
    let edge_count = graph.edge_count();
    if radix == 0 {
        let out = if edge_count == 0 {
            vec![EdgeLabeling::identity(graph.clone(), group.clone())]
        } else {
            Vec::new()
        };
        return Ok(out);
    }
    let total = crate::partition::labeling_space_size(radix, edge_count, budget)?;
    let mut flows = Vec::new();
    let mut digits = vec![0usize; edge_count];
    for i in 0..total {
        if i != 0 {
            let mut carry = 0;
            while carry < edge_count {
                digits[carry] += 1;
                if digits[carry] < radix {
                    break;
                }
                digits[carry] = 0;
                carry += 1;
            }
        }
        let values: Vec<usize> = digits.iter().map(|d| d + 1).collect();
        let candidate = EdgeLabeling::new(graph.clone(), group.clone(), values)?;
        if is_flow(&candidate) {
            flows.push(candidate);
        }
    }
    Ok(flows)
}

/// Transport a labeling across the dual-edge bijection: a labeling on H and
/// the corresponding labeling on H* carry the same values edge for edge.
/// The labeling is a flow on H iff its dual is a local tension on H*.
pub fn flow_to_dual_tension(
    graph: &Arc<EmbeddedGraph>,
    labeling: &EdgeLabeling,
) -> Result<(DualGraph, EdgeLabeling), DualityError> {
    if !labeling.graph().same_graph(graph) {
        return Err(DualityError::LabelingMismatch);
    }
    let dual = graph.dual()?;
    let dual_graph = Arc::new(dual.graph.clone());
    let dual_labeling = EdgeLabeling::new(
        dual_graph,
        labeling.group().clone(),
        labeling.values().to_vec(),
    )?;
    Ok((dual, dual_labeling))
}
