//! Counting G-flows and nowhere-identity G-flows.
//!
//! A G-flow is an edge labeling whose signed rotation-ordered product at
//! every vertex is the identity. For connected H the count is
//! `N_G(H) = |G|^(|E|-|V|) * sum_l dim_l^(2-2g(H))`, and the
//! nowhere-identity count follows by inclusion-exclusion over edge subsets,
//! with one Euler-characteristic factor per component of each subgraph.
//! Both are evaluated in exact rational arithmetic; the individual terms
//! are fractional but the totals are asserted to be nonnegative integers.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::EmbeddedGraph;
use crate::group::{CharacterTable, ClassFunction, FiniteGroup};

use super::{
    bigint_pow, labeling_space_size, partition_multiplicative, signed_product, vertex_recipes,
    CountError, CountOptions, CountResult, CountValue, Method,
};

/// Method selector for flow counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowMethod {
    /// Enumerate labelings and test the flow condition.
    Brute,
    /// Closed formula / inclusion-exclusion over edge subsets.
    Formula,
}

/// Number of G-flows, by the requested method.
pub fn count_flows(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    table: &CharacterTable,
    method: FlowMethod,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    match method {
        FlowMethod::Brute => count_flows_brute(graph, group, options),
        FlowMethod::Formula => count_flows_closed(graph, table, options),
    }
}

/// Count flows by enumerating all |G|^|E| labelings.
pub fn count_flows_brute(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let total = labeling_space_size(group.order(), graph.edge_count(), options.term_budget)?;
    let count = count_flow_labelings(graph, group, group.order(), 0, total);
    Ok(CountResult {
        value: CountValue::Integer(BigInt::from(count)),
        method: Method::Brute,
        terms: total,
    })
}

/// Closed-form flow count for a connected graph.
pub fn count_flows_closed(
    graph: &Arc<EmbeddedGraph>,
    table: &CharacterTable,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let _ = options;
    if !graph.is_connected() {
        return Err(CountError::Disconnected("count_flows (closed)"));
    }
    let group_order = BigInt::from(table.group().order());
    let e = graph.edge_count() as i64;
    let v = graph.vertex_count() as i64;
    let chi = 2 - 2 * graph.genus()? as i64;
    let mut sum = BigRational::zero();
    for &d in table.dimensions() {
        sum += bigint_pow(&BigInt::from(d), chi);
    }
    let result = bigint_pow(&group_order, e - v) * sum;
    if !result.is_integer() || result.is_negative() {
        return Err(CountError::NonIntegerResult(result.to_string()));
    }
    Ok(CountResult {
        value: CountValue::Integer(result.to_integer()),
        method: Method::Closed,
        terms: table.dimensions().len() as u64,
    })
}

/// Number of nowhere-identity G-flows, by the requested method.
pub fn count_nowhere_identity(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    table: &CharacterTable,
    method: FlowMethod,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    match method {
        FlowMethod::Brute => count_nowhere_identity_brute(graph, group, options),
        FlowMethod::Formula => count_nowhere_identity_formula(graph, table, options),
    }
}

/// Enumerate the (|G|-1)^|E| nowhere-identity labelings and test the flow
/// condition directly.
pub fn count_nowhere_identity_brute(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let radix = group.order() - 1;
    if radix == 0 {
        // trivial group: only the empty labeling is nowhere-identity
        let count = u64::from(graph.edge_count() == 0);
        return Ok(CountResult {
            value: CountValue::Integer(BigInt::from(count)),
            method: Method::Brute,
            terms: 1,
        });
    }
    let total = labeling_space_size(radix, graph.edge_count(), options.term_budget)?;
    let count = count_flow_labelings(graph, group, radix, 1, total);
    Ok(CountResult {
        value: CountValue::Integer(BigInt::from(count)),
        method: Method::Brute,
        terms: total,
    })
}

/// Shared enumeration: digits run over `radix` values per edge and are
/// shifted by `offset` to form group elements.
fn count_flow_labelings(
    graph: &EmbeddedGraph,
    group: &FiniteGroup,
    radix: usize,
    offset: usize,
    total: u64,
) -> u64 {
    let recipes = vertex_recipes(graph);
    let partials = super::parallel_chunk_sum(total, |start, end| {
        let mut digits = vec![0usize; graph.edge_count()];
        super::decode_labeling(start, radix, &mut digits);
        let mut labels = vec![0usize; graph.edge_count()];
        let mut count = 0u64;
        for i in start..end {
            if i != start {
                super::advance_labeling(&mut digits, radix);
            }
            for (l, d) in labels.iter_mut().zip(&digits) {
                *l = d + offset;
            }
            if recipes
                .iter()
                .all(|recipe| signed_product(group, recipe, &labels) == 0)
            {
                count += 1;
            }
        }
        count
    });
    partials.into_iter().sum()
}

/// Nowhere-identity flow count via inclusion-exclusion over edge subsets:
/// `sum_B (-1)^(|E \ B|) |G|^(|B|-|V|) prod_C sum_l dim_l^(2-2g(C))`,
/// the product running over components C of (V, B).
pub fn count_nowhere_identity_formula(
    graph: &Arc<EmbeddedGraph>,
    table: &CharacterTable,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let e_count = graph.edge_count();
    let subsets = subset_space_size(e_count, options.subset_budget)?;
    let group_order = BigInt::from(table.group().order());
    let v_count = graph.vertex_count() as i64;

    let mut sum = BigRational::zero();
    for mask in 0u64..subsets {
        let keep: Vec<bool> = (0..e_count).map(|e| mask >> e & 1 == 1).collect();
        let b = keep.iter().filter(|&&k| k).count() as i64;
        let subgraph = graph.edge_subgraph_by_flags(&keep);
        let mut product = BigRational::one();
        for component in subgraph.components() {
            let chi = 2 - 2 * component.graph.genus()? as i64;
            let mut factor = BigRational::zero();
            for &d in table.dimensions() {
                factor += bigint_pow(&BigInt::from(d), chi);
            }
            product *= factor;
        }
        let term = bigint_pow(&group_order, b - v_count) * product;
        if (e_count as i64 - b) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if !sum.is_integer() || sum.is_negative() {
        return Err(CountError::NonIntegerResult(sum.to_string()));
    }
    Ok(CountResult {
        value: CountValue::Integer(sum.to_integer()),
        method: Method::InclusionExclusion,
        terms: subsets,
    })
}

fn subset_space_size(edges: usize, budget: u64) -> Result<u64, CountError> {
    if edges >= 63 || (1u64 << edges) > budget {
        return Err(CountError::BudgetExceeded {
            needed: format!("2^{edges}"),
            budget,
        });
    }
    Ok(1 << edges)
}

/// Abelian reduction of the nowhere-identity count:
/// `sum_B (-1)^(|E \ B|) n^(|B|-|V|+c(B))` with `c(B)` the number of
/// components of (V, B). Depends only on the group order `n`.
pub fn abelian_flow_count(
    graph: &Arc<EmbeddedGraph>,
    n: usize,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let e_count = graph.edge_count();
    let subsets = subset_space_size(e_count, options.subset_budget)?;
    let v_count = graph.vertex_count();
    let endpoints: Vec<(usize, usize)> = graph.edges().iter().map(|e| (e.tail, e.head)).collect();
    let n_big = BigInt::from(n);

    let mut sum = BigInt::zero();
    for mask in 0u64..subsets {
        let mut dsu: Vec<usize> = (0..v_count).collect();
        fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
            if dsu[x] != x {
                let root = find(dsu, dsu[x]);
                dsu[x] = root;
            }
            dsu[x]
        }
        let mut components = v_count;
        let mut b = 0i64;
        for (e, &(t, h)) in endpoints.iter().enumerate() {
            if mask >> e & 1 == 1 {
                b += 1;
                let (rt, rh) = (find(&mut dsu, t), find(&mut dsu, h));
                if rt != rh {
                    dsu[rt] = rh;
                    components -= 1;
                }
            }
        }
        let exponent = b - v_count as i64 + components as i64;
        debug_assert!(exponent >= 0, "subgraph rank bound violated");
        let term = n_big.pow(exponent as u32);
        if (e_count as i64 - b) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_negative() {
        return Err(CountError::NonIntegerResult(sum.to_string()));
    }
    Ok(CountResult {
        value: CountValue::Integer(sum),
        method: Method::InclusionExclusion,
        terms: subsets,
    })
}

/// Inclusion-exclusion partition sum over nowhere-identity labelings for an
/// arbitrary class function:
/// `sum_B (-1)^(|E \ B|) P_chi((V, B))`. For the regular character this
/// equals `|G|^|V|` times the nowhere-identity flow count.
pub fn partition_nowhere_identity(
    graph: &Arc<EmbeddedGraph>,
    group: &Arc<FiniteGroup>,
    chi: &ClassFunction,
    table: &CharacterTable,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let e_count = graph.edge_count();
    let subsets = subset_space_size(e_count, options.subset_budget)?;
    let mut int_sum = BigInt::zero();
    let mut complex_sum = Complex64::new(0.0, 0.0);
    let mut exact = true;
    for mask in 0u64..subsets {
        let keep: Vec<bool> = (0..e_count).map(|e| mask >> e & 1 == 1).collect();
        let b = keep.iter().filter(|&&k| k).count() as i64;
        let subgraph = Arc::new(graph.edge_subgraph_by_flags(&keep));
        let part = partition_multiplicative(&subgraph, group, chi, table, options)?;
        let negate = (e_count as i64 - b) % 2 != 0;
        match part.value {
            CountValue::Integer(v) if exact => {
                if negate {
                    int_sum -= v;
                } else {
                    int_sum += v;
                }
            }
            other => {
                if exact {
                    // switch to complex accumulation, carrying what we have
                    complex_sum += CountValue::Integer(int_sum.clone()).to_complex();
                    exact = false;
                }
                let v = other.to_complex();
                if negate {
                    complex_sum -= v;
                } else {
                    complex_sum += v;
                }
            }
        }
    }
    Ok(CountResult {
        value: if exact {
            CountValue::Integer(int_sum)
        } else {
            CountValue::Complex(complex_sum)
        },
        method: Method::InclusionExclusion,
        terms: subsets,
    })
}
