//! Finite coverings from local tensions, and the flow-to-coloring pipeline.
//!
//! Given a local tension psi on connected H, the covering graph is built
//! directly as the reachable component of the derived construction: states
//! are (vertex, height) pairs, starting from (base, 1), and crossing an
//! edge e multiplies the height on the right by psi(e) (inverted against
//! the edge direction). Backtracking steps contribute the identity to
//! heights, so labeling reachable states by walk heights is the same as
//! labeling all non-backtracking walks; the finite state graph therefore
//! realizes the quotient of the universal cover by label equivalence
//! without materializing the infinite tree.

use std::collections::HashMap;
use std::sync::Arc;

use crate::graph::{EdgeEnd, EmbeddedGraph, GraphMorphism};
use crate::group::FiniteGroup;
use crate::partition::EdgeLabeling;

use super::{
    base_vertex, is_flow, is_global_tension, is_local_tension, DualityError, GColoring,
};

/// A covering: a total graph K, a base graph H, the projection K -> H, and
/// a (base vertex, group element) sheet label per K-vertex.
#[derive(Debug, Clone)]
pub struct Covering {
    morphism: GraphMorphism,
    group: Arc<FiniteGroup>,
    sheets: Vec<(usize, usize)>,
    sheet_count: usize,
}

impl Covering {
    /// Validate and wrap covering data: the projection must pass the
    /// covering check, sheet labels must be distinct, and the label's
    /// first component must agree with the projection.
    pub fn new(
        morphism: GraphMorphism,
        group: Arc<FiniteGroup>,
        sheets: Vec<(usize, usize)>,
    ) -> Result<Covering, DualityError> {
        let total = morphism.source();
        let base = morphism.target();
        if sheets.len() != total.vertex_count() {
            return Err(DualityError::InvalidCovering(format!(
                "{} sheet labels for {} vertices",
                sheets.len(),
                total.vertex_count()
            )));
        }
        let report = morphism.check_covering();
        if !report.is_covering {
            return Err(DualityError::InvalidCovering(
                report.violations.join("; "),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (x, &(v, h)) in sheets.iter().enumerate() {
            if v >= base.vertex_count() || h >= group.order() {
                return Err(DualityError::InvalidCovering(format!(
                    "sheet label ({v}, {h}) out of range"
                )));
            }
            if v != morphism.vertex_image(x) {
                return Err(DualityError::InvalidCovering(format!(
                    "sheet label of `{}` disagrees with the projection",
                    total.vertex_id(x)
                )));
            }
            if !seen.insert((v, h)) {
                return Err(DualityError::InvalidCovering(format!(
                    "duplicate sheet label ({v}, {h})"
                )));
            }
        }
        let mut fiber_sizes = vec![0usize; base.vertex_count()];
        for &(v, _) in &sheets {
            fiber_sizes[v] += 1;
        }
        let sheet_count = fiber_sizes.first().copied().unwrap_or(0);
        if fiber_sizes.iter().any(|&s| s != sheet_count) {
            return Err(DualityError::InvalidCovering(
                "fibers have unequal sizes".into(),
            ));
        }
        Ok(Covering {
            morphism,
            group,
            sheets,
            sheet_count,
        })
    }

    /// The one-sheet covering of a graph by itself, labeled at the
    /// identity.
    pub fn identity(graph: Arc<EmbeddedGraph>, group: Arc<FiniteGroup>) -> Covering {
        let sheets = (0..graph.vertex_count()).map(|v| (v, 0)).collect();
        let morphism = GraphMorphism::identity(graph);
        Covering {
            morphism,
            group,
            sheets,
            sheet_count: 1,
        }
    }

    pub fn total(&self) -> &Arc<EmbeddedGraph> {
        self.morphism.source()
    }

    pub fn base(&self) -> &Arc<EmbeddedGraph> {
        self.morphism.target()
    }

    pub fn projection(&self) -> &GraphMorphism {
        &self.morphism
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Sheet label (base vertex, group element) of a total-graph vertex.
    pub fn sheet(&self, vertex: usize) -> (usize, usize) {
        self.sheets[vertex]
    }

    pub fn sheets(&self) -> &[(usize, usize)] {
        &self.sheets
    }

    pub fn sheet_count(&self) -> usize {
        self.sheet_count
    }

    /// Covering output document: the total graph, sheet labels, and the
    /// projection's vertex and dart maps.
    pub fn to_json(&self) -> serde_json::Value {
        let total = self.total();
        let base = self.base();
        let sheets: std::collections::BTreeMap<String, serde_json::Value> = self
            .sheets
            .iter()
            .enumerate()
            .map(|(x, &(v, h))| {
                (
                    total.vertex_id(x).to_string(),
                    serde_json::json!([base.vertex_id(v), h]),
                )
            })
            .collect();
        let vertices: std::collections::BTreeMap<String, String> = (0..total.vertex_count())
            .map(|x| {
                (
                    total.vertex_id(x).to_string(),
                    base.vertex_id(self.morphism.vertex_image(x)).to_string(),
                )
            })
            .collect();
        let mut darts = std::collections::BTreeMap::new();
        for e in 0..total.edge_count() {
            let image = &base.edge(self.morphism.edge_image(e)).id;
            for end in [EdgeEnd::Tail, EdgeEnd::Head] {
                darts.insert(
                    format!("{}:{}", total.edge(e).id, end.as_str()),
                    serde_json::json!([image, end.as_str()]),
                );
            }
        }
        serde_json::json!({
            "graph": total.to_json(),
            "sheets": sheets,
            "projection": { "vertices": vertices, "darts": darts },
        })
    }

    /// Lift a labeling of the base to the total graph: every lifted edge
    /// carries its base edge's label.
    pub fn lift_labeling(&self, labeling: &EdgeLabeling) -> Result<EdgeLabeling, DualityError> {
        if !labeling.graph().same_graph(self.base()) {
            return Err(DualityError::LabelingMismatch);
        }
        let values = (0..self.total().edge_count())
            .map(|e| labeling.label(self.morphism.edge_image(e)))
            .collect();
        Ok(EdgeLabeling::new(
            self.total().clone(),
            labeling.group().clone(),
            values,
        )?)
    }
}

/// Build the canonical finite covering of a connected graph carrying a
/// local tension: the reachable derived-graph component based at the
/// lexicographically smallest vertex with identity height.
///
/// Postconditions (checked): the projection is a covering, the lifted
/// tension is a global tension on the total graph, and the sheet count
/// divides |G|.
pub fn build_covering(labeling: &EdgeLabeling) -> Result<Covering, DualityError> {
    let graph = labeling.graph().clone();
    let group = labeling.group().clone();
    if !graph.is_connected() {
        return Err(DualityError::Disconnected("build_covering"));
    }
    if !is_local_tension(labeling) {
        return Err(DualityError::NotLocalTension);
    }
    let covering = derived_component(&graph, labeling, base_vertex(&graph), group.identity())?;

    let lifted = covering.lift_labeling(labeling)?;
    if !is_global_tension(&lifted)? {
        return Err(DualityError::InvalidCovering(
            "lifted tension is not a global tension".into(),
        ));
    }
    if group.order() % covering.sheet_count() != 0 {
        return Err(DualityError::InvalidCovering(format!(
            "sheet count {} does not divide |G| = {}",
            covering.sheet_count(),
            group.order()
        )));
    }
    Ok(covering)
}

/// The reachable derived-graph component from (start vertex, start
/// height). States are explored breadth-first, darts in rotation order, so
/// the output is canonical.
fn derived_component(
    graph: &Arc<EmbeddedGraph>,
    labeling: &EdgeLabeling,
    start_vertex: usize,
    start_height: usize,
) -> Result<Covering, DualityError> {
    let group = labeling.group().clone();
    let mut state_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut states: Vec<(usize, usize)> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    state_index.insert((start_vertex, start_height), 0);
    states.push((start_vertex, start_height));
    queue.push_back(0usize);
    while let Some(s) = queue.pop_front() {
        let (u, h) = states[s];
        for d in graph.rotation(u) {
            let edge = graph.edge(d.edge);
            let next = match d.end {
                EdgeEnd::Tail => (edge.head, group.mul(h, labeling.label(d.edge))),
                EdgeEnd::Head => (edge.tail, group.mul(h, group.inv(labeling.label(d.edge)))),
            };
            if let std::collections::hash_map::Entry::Vacant(slot) = state_index.entry(next) {
                slot.insert(states.len());
                states.push(next);
                queue.push_back(states.len() - 1);
            }
        }
    }

    // one lifted edge per (base edge, tail height) with both ends reachable
    let mut lift_index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut lift_list: Vec<(usize, usize)> = Vec::new();
    let mut edge_docs: Vec<(String, String, String)> = Vec::new();
    let vertex_id =
        |&(u, h): &(usize, usize)| format!("{}@{}", graph.vertex_id(u), h);
    for &(u, h) in &states {
        for (e, edge) in graph.edges().iter().enumerate() {
            if edge.tail != u {
                continue;
            }
            let head_state = (edge.head, group.mul(h, labeling.label(e)));
            debug_assert!(state_index.contains_key(&head_state));
            lift_index.insert((e, h), lift_list.len());
            lift_list.push((e, h));
            edge_docs.push((
                format!("{}@{}", edge.id, h),
                vertex_id(&(u, h)),
                vertex_id(&head_state),
            ));
        }
    }

    let mut rotations = std::collections::BTreeMap::new();
    for &(u, h) in &states {
        let mut darts = Vec::with_capacity(graph.rotation(u).len());
        for d in graph.rotation(u) {
            let lift = match d.end {
                EdgeEnd::Tail => lift_index[&(d.edge, h)],
                EdgeEnd::Head => {
                    let tail_height = group.mul(h, group.inv(labeling.label(d.edge)));
                    lift_index[&(d.edge, tail_height)]
                }
            };
            darts.push((edge_docs[lift].0.clone(), d.end));
        }
        rotations.insert(vertex_id(&(u, h)), darts);
    }

    let total = Arc::new(
        EmbeddedGraph::build(states.iter().map(vertex_id).collect(), edge_docs, rotations)
            .map_err(DualityError::Graph)?,
    );
    let vertex_map = states.iter().map(|&(u, _)| u).collect();
    let edge_map = lift_list.iter().map(|&(e, _)| e).collect();
    let morphism = GraphMorphism::new(total, graph.clone(), vertex_map, edge_map)?;
    Covering::new(morphism, group, states)
}

/// A covering of H together with a fiber-constant global tension on its
/// total graph whose pushdown to H is a local tension.
#[derive(Debug, Clone)]
pub struct GlobalCoveringTension {
    covering: Covering,
    labeling: EdgeLabeling,
}

impl GlobalCoveringTension {
    /// Validate the three defining properties: fiber-constance, globality
    /// on the total graph, and the pushdown being a local tension.
    pub fn new(
        covering: Covering,
        labeling: EdgeLabeling,
    ) -> Result<GlobalCoveringTension, DualityError> {
        if !labeling.graph().same_graph(covering.total())
            || !labeling.group().same_group(covering.group())
        {
            return Err(DualityError::LabelingMismatch);
        }
        let base_edges = covering.base().edge_count();
        let mut pushed = vec![usize::MAX; base_edges];
        for e in 0..covering.total().edge_count() {
            let image = covering.projection().edge_image(e);
            let value = labeling.label(e);
            if pushed[image] == usize::MAX {
                pushed[image] = value;
            } else if pushed[image] != value {
                return Err(DualityError::FiberInconsistent(
                    covering.base().edge(image).id.clone(),
                ));
            }
        }
        if !is_global_tension(&labeling)? {
            return Err(DualityError::NotGlobalTension);
        }
        let pushdown = EdgeLabeling::new(
            covering.base().clone(),
            labeling.group().clone(),
            pushed,
        )?;
        if !is_local_tension(&pushdown) {
            return Err(DualityError::NotLocalTension);
        }
        Ok(GlobalCoveringTension { covering, labeling })
    }

    pub fn covering(&self) -> &Covering {
        &self.covering
    }

    pub fn labeling(&self) -> &EdgeLabeling {
        &self.labeling
    }

    /// The induced labeling on the base graph (well-defined by
    /// fiber-constance).
    pub fn pushdown(&self) -> EdgeLabeling {
        let base_edges = self.covering.base().edge_count();
        let mut pushed = vec![0usize; base_edges];
        for e in 0..self.covering.total().edge_count() {
            pushed[self.covering.projection().edge_image(e)] = self.labeling.label(e);
        }
        EdgeLabeling::new(
            self.covering.base().clone(),
            self.labeling.group().clone(),
            pushed,
        )
        .expect("pushdown edge count matches base")
    }
}

/// End-to-end pipeline: a nowhere-identity flow gives the dual local
/// tension, its canonical covering, and the proper coloring assigning each
/// covering vertex its sheet height.
pub fn flow_to_proper_coloring(
    labeling: &EdgeLabeling,
) -> Result<(Covering, GColoring), DualityError> {
    if !is_flow(labeling) {
        return Err(DualityError::NotAFlow);
    }
    if !labeling.is_nowhere_identity() {
        return Err(DualityError::NotNowhereIdentity);
    }
    let graph = labeling.graph().clone();
    let (_, dual_tension) = super::flow_to_dual_tension(&graph, labeling)?;
    let covering = build_covering(&dual_tension)?;
    let colors = covering.sheets().iter().map(|&(_, h)| h).collect();
    let coloring = GColoring::new(
        covering.total().clone(),
        labeling.group().clone(),
        colors,
    )?;
    if !coloring.is_proper() {
        return Err(DualityError::InvalidCovering(
            "pipeline coloring is not proper".into(),
        ));
    }
    Ok((covering, coloring))
}

/// Inverse direction of the duality: a global covering tension on the dual
/// of `primal` pushes down to a local tension there, which pulls back
/// across the edge bijection to a flow on `primal`.
pub fn covering_tension_to_flow(
    tension: &GlobalCoveringTension,
    primal: &Arc<EmbeddedGraph>,
) -> Result<EdgeLabeling, DualityError> {
    let base = tension.covering().base();
    if base.edge_count() != primal.edge_count()
        || (0..base.edge_count()).any(|e| base.edge(e).id != primal.edge(e).id)
    {
        return Err(DualityError::LabelingMismatch);
    }
    let pushdown = tension.pushdown();
    let flow = EdgeLabeling::new(
        primal.clone(),
        pushdown.group().clone(),
        pushdown.values().to_vec(),
    )?;
    if !is_flow(&flow) {
        return Err(DualityError::NotAFlow);
    }
    Ok(flow)
}
