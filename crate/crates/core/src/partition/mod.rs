//! Partition functions over group-valued edge labelings.
//!
//! The partition function of a class function chi at an embedded graph H
//! sums, over all labelings of the edges by group elements, the product
//! over vertices of chi evaluated at the signed rotation-ordered product of
//! incident labels (inverting labels on outward darts).
//!
//! Two evaluation routes are kept deliberately independent: a brute-force
//! sum over all |G|^|E| labelings, and the closed form
//! `|G|^|E| * sum_l dim_l^(|F|-|E|) m_l^|V|` over irreducible characters.
//! Counts that must be exact (flows, Frobenius numbers) are carried in
//! arbitrary-precision integers/rationals; everything else is complex with
//! explicit tolerances.

mod flows;
mod frobenius;

pub use flows::{
    abelian_flow_count, count_flows, count_flows_brute, count_flows_closed,
    count_nowhere_identity, count_nowhere_identity_brute, count_nowhere_identity_formula,
    partition_nowhere_identity, FlowMethod,
};
pub use frobenius::{frobenius_count, frobenius_count_brute, frobenius_count_formula};

/// Re-export: the bouquet builder lives with the corpus graphs.
pub use crate::corpus::bouquet;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{EdgeEnd, EmbeddedGraph, GraphError};
use crate::group::{CharacterTable, ClassFunction, FiniteGroup, GroupError};

/// Tolerance for deciding that a class function or decomposition
/// coefficient is integer-valued (exact-path detection).
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// Errors from counting operations.
#[derive(Debug, Error)]
pub enum CountError {
    #[error("work {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("{0} requires a connected graph; use the multiplicative variant")]
    Disconnected(&'static str),
    #[error("labeling does not belong to the given graph/group")]
    Mismatch,
    #[error("expected an exact integer result, got {0}")]
    NonIntegerResult(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Budgets for enumeration-based methods. Exceeding a budget is an error,
/// never silent truncation.
#[derive(Debug, Clone, Copy)]
pub struct CountOptions {
    /// Max number of term evaluations for brute-force sums.
    pub term_budget: u64,
    /// Max number of edge subsets for inclusion-exclusion.
    pub subset_budget: u64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            term_budget: 100_000_000,
            subset_budget: 1 << 20,
        }
    }
}

/// Which evaluation route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Closed,
    InclusionExclusion,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Closed => "closed",
            Method::InclusionExclusion => "inclusion-exclusion",
        }
    }
}

/// An exact integer or a complex value.
#[derive(Debug, Clone, PartialEq)]
pub enum CountValue {
    Integer(BigInt),
    Complex(Complex64),
}

impl CountValue {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            CountValue::Integer(v) => Some(v),
            CountValue::Complex(_) => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            CountValue::Integer(v) => Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0),
            CountValue::Complex(v) => *v,
        }
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountValue::Integer(v) => write!(f, "{v}"),
            CountValue::Complex(v) => write!(f, "{}{:+}i", v.re, v.im),
        }
    }
}

/// A counted value with its method tag and work counter.
#[derive(Debug, Clone)]
pub struct CountResult {
    pub value: CountValue,
    pub method: Method,
    /// Number of terms summed (labelings, subsets, or characters).
    pub terms: u64,
}

impl CountResult {
    /// The exact integer value, or an error for complex results.
    pub fn expect_integer(&self) -> Result<&BigInt, CountError> {
        self.value
            .as_integer()
            .ok_or_else(|| CountError::NonIntegerResult(self.value.to_string()))
    }

    /// Compare two results: exact equality for integer pairs, otherwise
    /// `|delta| <= tol * (1 + |value|)`.
    pub fn agrees_with(&self, other: &CountResult, tol: f64) -> bool {
        match (&self.value, &other.value) {
            (CountValue::Integer(a), CountValue::Integer(b)) => a == b,
            (a, b) => {
                let (a, b) = (a.to_complex(), b.to_complex());
                (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
            }
        }
    }
}

/// A total assignment of group elements to the edges of a graph.
#[derive(Debug, Clone)]
pub struct EdgeLabeling {
    graph: Arc<EmbeddedGraph>,
    group: Arc<FiniteGroup>,
    values: Vec<usize>,
}

impl EdgeLabeling {
    pub fn new(
        graph: Arc<EmbeddedGraph>,
        group: Arc<FiniteGroup>,
        values: Vec<usize>,
    ) -> Result<EdgeLabeling, CountError> {
        if values.len() != graph.edge_count() || values.iter().any(|&v| v >= group.order()) {
            return Err(CountError::Mismatch);
        }
        Ok(EdgeLabeling {
            graph,
            group,
            values,
        })
    }

    /// The all-identity labeling.
    pub fn identity(graph: Arc<EmbeddedGraph>, group: Arc<FiniteGroup>) -> EdgeLabeling {
        let values = vec![0; graph.edge_count()];
        EdgeLabeling {
            graph,
            group,
            values,
        }
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

    pub fn label(&self, edge: usize) -> usize {
        self.values[edge]
    }

    /// The signed rotation-ordered product at a vertex, starting from the
    /// first dart of the stored rotation: labels enter inverted on outward
    /// (tail) darts and plain on inward (head) darts.
    pub fn signed_vertex_product(&self, v: usize) -> usize {
        signed_vertex_product(&self.graph, &self.group, &self.values, v)
    }

    /// Is every edge labeled by a non-identity element?
    pub fn is_nowhere_identity(&self) -> bool {
        self.values.iter().all(|&x| x != 0)
    }

    /// Parse the labelings file format: a JSON object with a `group` spec
    /// field and one `<edge id>: <element index>` entry per edge.
    pub fn parse(text: &str, graph: Arc<EmbeddedGraph>) -> Result<EdgeLabeling, CountError> {
        let doc: serde_json::Map<String, serde_json::Value> = serde_json::from_str(text)
            .map_err(|e| CountError::Graph(GraphError::Parse(e.to_string())))?;
        let spec = doc
            .get("group")
            .and_then(|v| v.as_str())
            .ok_or_else(|| CountError::Graph(GraphError::Parse("missing `group` field".into())))?;
        let group = crate::group::build_group(spec)?;
        let mut values = vec![usize::MAX; graph.edge_count()];
        for (key, value) in &doc {
            if key == "group" {
                continue;
            }
            let e = graph
                .edge_by_id(key)
                .ok_or_else(|| CountError::Graph(GraphError::UnknownEdge(key.clone())))?;
            let idx = value.as_u64().ok_or_else(|| {
                CountError::Graph(GraphError::Parse(format!(
                    "label of `{key}` is not a nonnegative integer"
                )))
            })?;
            values[e] = idx as usize;
        }
        if let Some(missing) = values.iter().position(|&v| v == usize::MAX) {
            return Err(CountError::Graph(GraphError::Parse(format!(
                "edge `{}` is unlabeled",
                graph.edge(missing).id
            ))));
        }
        EdgeLabeling::new(graph, group, values)
    }

    /// The labelings file document for this labeling.
    pub fn to_json(&self) -> serde_json::Value {
        let mut doc = serde_json::Map::new();
        doc.insert(
            "group".to_string(),
            serde_json::Value::String(self.group.spec_string().to_string()),
        );
        for (e, &v) in self.values.iter().enumerate() {
            doc.insert(self.graph.edge(e).id.clone(), serde_json::json!(v));
        }
        serde_json::Value::Object(doc)
    }
}

fn signed_vertex_product(
    graph: &EmbeddedGraph,
    group: &FiniteGroup,
    values: &[usize],
    v: usize,
) -> usize {
    let mut acc = 0;
    for d in graph.rotation(v) {
        let x = values[d.edge];
        let x = match d.end {
            EdgeEnd::Tail => group.inv(x),
            EdgeEnd::Head => x,
        };
        acc = group.mul(acc, x);
    }
    acc
}

// ---------------------------------------------------------------------------
// Brute-force evaluation
// ---------------------------------------------------------------------------

/// Per-vertex dart recipe used by the hot loop: (edge index, invert?).
fn vertex_recipes(graph: &EmbeddedGraph) -> Vec<Vec<(usize, bool)>> {
    (0..graph.vertex_count())
        .map(|v| {
            graph
                .rotation(v)
                .iter()
                .map(|d| (d.edge, d.end == EdgeEnd::Tail))
                .collect()
        })
        .collect()
}

pub(crate) fn labeling_space_size(order: usize, edges: usize, budget: u64) -> Result<u64, CountError> {
    let mut total: u128 = 1;
    for _ in 0..edges {
        total = total.saturating_mul(order as u128);
        if total > budget as u128 {
            return Err(CountError::BudgetExceeded {
                needed: format!("{order}^{edges}"),
                budget,
            });
        }
    }
    Ok(total as u64)
}

fn decode_labeling(mut index: u64, order: usize, out: &mut [usize]) {
    for slot in out.iter_mut() {
        *slot = (index % order as u64) as usize;
        index /= order as u64;
    }
}

fn advance_labeling(digits: &mut [usize], order: usize) {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < order {
            return;
        }
        *d = 0;
    }
}

const CHUNK: u64 = 1 << 14;

/// Deterministic parallel sum over all labelings: the index space is cut
/// into fixed chunks, each chunk is reduced in order, and chunk results are
/// folded sequentially (a fixed-order reduction, so complex sums do not
/// depend on the worker schedule).
fn parallel_chunk_sum<T, F>(total: u64, eval_chunk: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64) -> T + Sync,
{
    let chunks: Vec<(u64, u64)> = (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect();
    chunks
        .into_par_iter()
        .map(|(start, end)| eval_chunk(start, end))
        .collect()
}

/// Evaluate the partition function by brute force over all labelings.
pub fn partition_brute(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    chi: &ClassFunction,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    if !chi.group().same_group(group) {
        return Err(CountError::Mismatch);
    }
    let order = group.order();
    let total = labeling_space_size(order, graph.edge_count(), options.term_budget)?;
    let recipes = vertex_recipes(graph);
    let class_of: Vec<usize> = (0..order).map(|x| group.classes().class_of(x)).collect();

    let value = if let Some(int_values) = chi.integer_values(1e-9) {
        let partials = parallel_chunk_sum(total, |start, end| {
            let mut digits = vec![0usize; graph.edge_count()];
            decode_labeling(start, order, &mut digits);
            let mut sum_small: i128 = 0;
            let mut sum_big = BigInt::zero();
            for i in start..end {
                if i != start {
                    advance_labeling(&mut digits, order);
                }
                let mut term: i128 = 1;
                let mut overflow = false;
                for recipe in &recipes {
                    let p = signed_product(group, recipe, &digits);
                    let v = int_values[class_of[p]] as i128;
                    match term.checked_mul(v) {
                        Some(t) => term = t,
                        None => {
                            overflow = true;
                            break;
                        }
                    }
                }
                if overflow {
                    // recompute this labeling in arbitrary precision
                    let mut term_big = BigInt::one();
                    for recipe in &recipes {
                        let p = signed_product(group, recipe, &digits);
                        term_big *= BigInt::from(int_values[class_of[p]]);
                    }
                    sum_big += term_big;
                } else {
                    match sum_small.checked_add(term) {
                        Some(s) => sum_small = s,
                        None => {
                            sum_big += BigInt::from(sum_small);
                            sum_small = term;
                        }
                    }
                }
            }
            sum_big + BigInt::from(sum_small)
        });
        CountValue::Integer(partials.into_iter().sum())
    } else {
        let values = chi.class_values().to_vec();
        let partials = parallel_chunk_sum(total, |start, end| {
            let mut digits = vec![0usize; graph.edge_count()];
            decode_labeling(start, order, &mut digits);
            let mut sum = Complex64::new(0.0, 0.0);
            for i in start..end {
                if i != start {
                    advance_labeling(&mut digits, order);
                }
                let mut term = Complex64::new(1.0, 0.0);
                for recipe in &recipes {
                    let p = signed_product(group, recipe, &digits);
                    term *= values[class_of[p]];
                }
                sum += term;
            }
            sum
        });
        CountValue::Complex(partials.into_iter().fold(Complex64::new(0.0, 0.0), |a, b| a + b))
    };

    Ok(CountResult {
        value,
        method: Method::Brute,
        terms: total,
    })
}

#[inline]
fn signed_product(group: &FiniteGroup, recipe: &[(usize, bool)], digits: &[usize]) -> usize {
    let mut acc = 0;
    for &(edge, invert) in recipe {
        let x = digits[edge];
        let x = if invert { group.inv(x) } else { x };
        acc = group.mul(acc, x);
    }
    acc
}

// ---------------------------------------------------------------------------
// Closed form
// ---------------------------------------------------------------------------

fn bigint_pow(base: &BigInt, exp: i64) -> BigRational {
    if exp >= 0 {
        BigRational::from_integer(base.pow(exp as u32))
    } else {
        BigRational::new(BigInt::one(), base.pow((-exp) as u32))
    }
}

/// Closed-form partition function for a connected graph:
/// `|G|^|E| * sum_l dim_l^(|F|-|E|) m_l^|V|`.
///
/// When every decomposition coefficient rounds to an integer within 1e-6
/// the sum is evaluated in exact rational arithmetic and asserted to be an
/// integer; otherwise the result is complex.
pub fn partition_closed(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    chi: &ClassFunction,
    table: &CharacterTable,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let _ = options;
    if !chi.group().same_group(group) || !table.group().same_group(group) {
        return Err(CountError::Mismatch);
    }
    if !graph.is_connected() {
        return Err(CountError::Disconnected("partition_closed"));
    }
    let coeffs = table.decompose(chi)?;
    let v_count = graph.vertex_count() as i64;
    let e_count = graph.edge_count() as i64;
    let f_count = graph.face_count() as i64;
    let order = BigInt::from(group.order());

    let integral: Option<Vec<i64>> = coeffs
        .iter()
        .map(|m| {
            let r = m.re.round();
            ((m.re - r).abs() <= INTEGRALITY_TOL && m.im.abs() <= INTEGRALITY_TOL)
                .then_some(r as i64)
        })
        .collect();

    let value = match integral {
        Some(ms) => {
            let mut sum = BigRational::zero();
            for (m, &d) in ms.iter().zip(table.dimensions()) {
                let dim_pow = bigint_pow(&BigInt::from(d), f_count - e_count);
                let m_pow = BigInt::from(*m).pow(v_count as u32);
                sum += dim_pow * BigRational::from_integer(m_pow);
            }
            let result = sum * bigint_pow(&order, e_count);
            if !result.is_integer() {
                return Err(CountError::NonIntegerResult(result.to_string()));
            }
            CountValue::Integer(result.to_integer())
        }
        None => {
            let mut sum = Complex64::new(0.0, 0.0);
            for (m, &d) in coeffs.iter().zip(table.dimensions()) {
                let dim_pow = (d as f64).powi((f_count - e_count) as i32);
                sum += dim_pow * complex_pow(*m, v_count as u32);
            }
            let scale = (group.order() as f64).powi(e_count as i32);
            CountValue::Complex(sum * scale)
        }
    };
    Ok(CountResult {
        value,
        method: Method::Closed,
        terms: table.dimensions().len() as u64,
    })
}

fn complex_pow(base: Complex64, exp: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// The partition function of a possibly disconnected graph: the product of
/// [`partition_closed`] over connected components.
pub fn partition_multiplicative(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    chi: &ClassFunction,
    table: &CharacterTable,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let mut value = CountValue::Integer(BigInt::one());
    let mut terms = 0;
    for component in graph.components() {
        let part = partition_closed(&Arc::new(component.graph), group, chi, table, options)?;
        terms += part.terms;
        value = match (value, part.value) {
            (CountValue::Integer(a), CountValue::Integer(b)) => CountValue::Integer(a * b),
            (a, b) => CountValue::Complex(a.to_complex() * b.to_complex()),
        };
    }
    Ok(CountResult {
        value,
        method: Method::Closed,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::group::build_group;

    fn setup(
        graph: EmbeddedGraph,
        spec: &str,
    ) -> (Arc<EmbeddedGraph>, Arc<FiniteGroup>, CharacterTable) {
        let group = build_group(spec).unwrap();
        let table = CharacterTable::for_group(&group).unwrap();
        (Arc::new(graph), group, table)
    }

    #[test]
    fn loop_z2_regular_is_four() {
        let (g, group, table) = setup(corpus::loop_graph(), "cyclic:2");
        let chi = ClassFunction::regular(group.clone());
        let opts = CountOptions::default();
        let brute = partition_brute(&g, &group, &chi, &opts).unwrap();
        assert_eq!(brute.expect_integer().unwrap(), &BigInt::from(4));
        let closed = partition_closed(&g, &group, &chi, &table, &opts).unwrap();
        assert_eq!(closed.expect_integer().unwrap(), &BigInt::from(4));
    }

    #[test]
    fn trivial_character_counts_all_labelings() {
        let opts = CountOptions::default();
        for (name, graph) in corpus::matrix() {
            let (g, group, _) = setup(graph, "symmetric:3");
            let chi = ClassFunction::trivial(group.clone());
            let brute = partition_brute(&g, &group, &chi, &opts).unwrap();
            let expected = BigInt::from(6).pow(g.edge_count() as u32);
            assert_eq!(brute.expect_integer().unwrap(), &expected, "{name}");
        }
    }

    #[test]
    fn torus_bouquet_s3_regular_is_108() {
        let (g, group, table) = setup(corpus::bouquet(1), "symmetric:3");
        let chi = ClassFunction::regular(group.clone());
        let opts = CountOptions::default();
        let brute = partition_brute(&g, &group, &chi, &opts).unwrap();
        assert_eq!(brute.expect_integer().unwrap(), &BigInt::from(108));
        let closed = partition_closed(&g, &group, &chi, &table, &opts).unwrap();
        assert_eq!(closed.expect_integer().unwrap(), &BigInt::from(108));
        // |G|^|V| * (number of commuting pairs = 18): oracle for the 108
        let commuting = {
            let mut count = 0;
            for x in 0..6 {
                for y in 0..6 {
                    if group.mul(x, y) == group.mul(y, x) {
                        count += 1;
                    }
                }
            }
            count
        };
        assert_eq!(commuting, 18);
    }

    #[test]
    fn single_vertex_closed_equals_chi_at_identity() {
        let (g, group, table) = setup(corpus::bouquet(0), "symmetric:3");
        let opts = CountOptions::default();
        let chi = ClassFunction::regular(group.clone());
        let closed = partition_closed(&g, &group, &chi, &table, &opts).unwrap();
        assert_eq!(closed.expect_integer().unwrap(), &BigInt::from(6));
    }

    #[test]
    fn multiplicative_matches_closed_on_connected() {
        let (g, group, table) = setup(corpus::theta_planar(), "cyclic:3");
        let opts = CountOptions::default();
        let chi = ClassFunction::regular(group.clone());
        let a = partition_closed(&g, &group, &chi, &table, &opts).unwrap();
        let b = partition_multiplicative(&g, &group, &chi, &table, &opts).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn multiplicative_over_isolated_vertices() {
        // two isolated vertices: chi_reg gives |G| per vertex
        let g = Arc::new(
            crate::graph::parse_graph(r#"{"vertices": ["a", "b"], "edges": [], "rotations": {}}"#)
                .unwrap(),
        );
        let group = build_group("cyclic:4").unwrap();
        let table = CharacterTable::for_group(&group).unwrap();
        let chi = ClassFunction::regular(group.clone());
        let opts = CountOptions::default();
        let result = partition_multiplicative(&g, &group, &chi, &table, &opts).unwrap();
        assert_eq!(result.expect_integer().unwrap(), &BigInt::from(16));
        // and partition_closed refuses the disconnected input
        assert!(matches!(
            partition_closed(&g, &group, &chi, &table, &opts),
            Err(CountError::Disconnected(_))
        ));
    }

    #[test]
    fn multiplicative_over_disjoint_loops() {
        // loop + loop: 4 * 4 from the single-loop value
        let g = Arc::new(
            crate::graph::parse_graph(
                r#"{
                    "vertices": ["u", "v"],
                    "edges": [
                        {"id": "a", "tail": "u", "head": "u"},
                        {"id": "b", "tail": "v", "head": "v"}
                    ],
                    "rotations": {
                        "u": [["a", "tail"], ["a", "head"]],
                        "v": [["b", "tail"], ["b", "head"]]
                    }
                }"#,
            )
            .unwrap(),
        );
        let group = build_group("cyclic:2").unwrap();
        let table = CharacterTable::for_group(&group).unwrap();
        let chi = ClassFunction::regular(group.clone());
        let opts = CountOptions::default();
        let result = partition_multiplicative(&g, &group, &chi, &table, &opts).unwrap();
        assert_eq!(result.expect_integer().unwrap(), &BigInt::from(16));
        // matches the brute evaluation of the whole disjoint union
        let brute = partition_brute(&g, &group, &chi, &opts).unwrap();
        assert_eq!(brute.expect_integer().unwrap(), &BigInt::from(16));
    }

    #[test]
    fn budget_is_enforced() {
        let (g, group, _) = setup(corpus::k4_planar(), "quaternion");
        let chi = ClassFunction::regular(group.clone());
        let opts = CountOptions {
            term_budget: 1000,
            ..CountOptions::default()
        };
        assert!(matches!(
            partition_brute(&g, &group, &chi, &opts),
            Err(CountError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn complex_brute_sums_are_bit_reproducible() {
        // chunked parallel reduction folds in a fixed order, so repeated
        // runs produce identical floats regardless of worker scheduling
        let (g, group, _) = setup(corpus::k4_planar(), "symmetric:3");
        let chi = ClassFunction::random(group.clone(), 99);
        let opts = CountOptions::default();
        let a = partition_brute(&g, &group, &chi, &opts).unwrap();
        let b = partition_brute(&g, &group, &chi, &opts).unwrap();
        match (&a.value, &b.value) {
            (CountValue::Complex(x), CountValue::Complex(y)) => {
                assert_eq!(x.re.to_bits(), y.re.to_bits());
                assert_eq!(x.im.to_bits(), y.im.to_bits());
            }
            other => panic!("expected complex results, got {other:?}"),
        }
    }

    #[test]
    fn complex_path_used_for_non_integral_class_functions() {
        let (g, group, table) = setup(corpus::digon(), "cyclic:3");
        let opts = CountOptions::default();
        // an irreducible character of Z3 has complex values; decomposition
        // is an integer unit vector, so closed stays exact, while brute
        // goes complex. They still agree within tolerance.
        let chi = table.characters()[1].clone();
        let brute = partition_brute(&g, &group, &chi, &opts).unwrap();
        let closed = partition_closed(&g, &group, &chi, &table, &opts).unwrap();
        assert!(matches!(brute.value, CountValue::Complex(_)));
        assert!(brute.agrees_with(&closed, 1e-9));
    }
}
