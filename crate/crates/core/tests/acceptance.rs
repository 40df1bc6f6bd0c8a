//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Tolerances are pinned in code.
//!
//! Matrix: {loop, digon, theta x2 rotations, K4 planar, bouquet genus 1
//! and 2, dumbbell} x {cyclic:2,3,4, symmetric:3, dihedral:4, quaternion}.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;

use surface_flows_core::corpus;
use surface_flows_core::duality::{
    colorings_from_tension, covering_tension_to_flow, flow_to_dual_tension,
    flow_to_proper_coloring, is_local_tension, nowhere_identity_flows, GlobalCoveringTension,
};
use surface_flows_core::graph::{embedded_isomorphic, EmbeddedGraph};
use surface_flows_core::group::{build_group, CharacterTable, ClassFunction, FiniteGroup};
use surface_flows_core::partition::{
    abelian_flow_count, count_nowhere_identity_brute, count_nowhere_identity_formula,
    frobenius_count_brute, frobenius_count_formula, partition_brute, partition_closed,
    CountOptions, CountValue,
};

const GROUP_SPECS: [&str; 6] = [
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "symmetric:3",
    "dihedral:4",
    "quaternion",
];

fn groups() -> Vec<(Arc<FiniteGroup>, CharacterTable)> {
    GROUP_SPECS
        .iter()
        .map(|spec| {
            let group = build_group(spec).unwrap();
            let table = CharacterTable::for_group(&group).unwrap();
            (group, table)
        })
        .collect()
}

fn matrix() -> Vec<(&'static str, Arc<EmbeddedGraph>)> {
    corpus::matrix()
        .into_iter()
        .map(|(name, g)| (name, Arc::new(g)))
        .collect()
}

fn int(result: &surface_flows_core::partition::CountResult) -> BigInt {
    result.expect_integer().unwrap().clone()
}

#[test]
fn criterion_1_closed_formula_matches_brute_oracle() {
    let opts = CountOptions::default();
    let mut checked = 0u32;
    for (gname, graph) in matrix() {
        for ((group, table), spec) in groups().iter().zip(GROUP_SPECS) {
            // budget guard: |G|^|E| <= 1e8 (never exceeded on this matrix)
            let mut class_functions = vec![ClassFunction::regular(group.clone())];
            for c in 0..group.classes().count() {
                class_functions.push(ClassFunction::class_indicator(group.clone(), c).unwrap());
            }
            class_functions.push(ClassFunction::random(group.clone(), 0x5eed));
            for (i, chi) in class_functions.iter().enumerate() {
                let brute = match partition_brute(&graph, group, chi, &opts) {
                    Ok(r) => r,
                    Err(surface_flows_core::partition::CountError::BudgetExceeded { .. }) => {
                        continue;
                    }
                    Err(e) => panic!("{gname}/{spec}/cf{i}: {e}"),
                };
                let closed = partition_closed(&graph, group, chi, table, &opts).unwrap();
                // exact when both sides are exact integers, else relative 1e-6
                match (&brute.value, &closed.value) {
                    (CountValue::Integer(a), CountValue::Integer(b)) => {
                        assert_eq!(a, b, "{gname}/{spec}/cf{i}");
                    }
                    _ => {
                        assert!(
                            brute.agrees_with(&closed, 1e-6),
                            "{gname}/{spec}/cf{i}: {} vs {}",
                            brute.value,
                            closed.value
                        );
                    }
                }
                checked += 1;
            }
        }
    }
    println!("[criterion 1] PASS: partition_closed = partition_brute on {checked} matrix instances");
}

#[test]
fn criterion_2_nowhere_identity_counts() {
    let opts = CountOptions::default();
    let brute_budget = 10_000_000u64;
    let mut checked = 0u32;
    for (gname, graph) in matrix() {
        for ((group, table), spec) in groups().iter().zip(GROUP_SPECS) {
            let formula = int(&count_nowhere_identity_formula(&graph, table, &opts).unwrap());
            let work = ((group.order() - 1) as u64).checked_pow(graph.edge_count() as u32);
            if work.is_some_and(|w| w <= brute_budget) {
                let brute = int(&count_nowhere_identity_brute(&graph, group, &opts).unwrap());
                assert_eq!(formula, brute, "{gname}/{spec}");
                checked += 1;
            }
            // 0 <= N~ <= N, both integers
            assert!(formula >= BigInt::from(0), "{gname}/{spec}");
            let all_flows = int(
                &surface_flows_core::partition::count_flows_closed(&graph, table, &opts).unwrap(),
            );
            assert!(formula <= all_flows, "{gname}/{spec}: N~ exceeds N");
        }
    }
    // hand-derived fixtures on the 2-loop bouquet (genus 1)
    let bouquet = Arc::new(corpus::bouquet(1));
    let z2 = build_group("cyclic:2").unwrap();
    let z2_table = CharacterTable::for_group(&z2).unwrap();
    assert_eq!(
        int(&count_nowhere_identity_formula(&bouquet, &z2_table, &opts).unwrap()),
        BigInt::from(1)
    );
    let s3 = build_group("symmetric:3").unwrap();
    let s3_table = CharacterTable::for_group(&s3).unwrap();
    assert_eq!(
        int(&count_nowhere_identity_formula(&bouquet, &s3_table, &opts).unwrap()),
        BigInt::from(7)
    );
    println!("[criterion 2] PASS: formula = brute on {checked} instances; fixtures 1 and 7 match");
}

#[test]
fn criterion_3_dimension_multiset_corollary() {
    let opts = CountOptions::default();
    let d4 = build_group("dihedral:4").unwrap();
    let d4_table = CharacterTable::for_group(&d4).unwrap();
    let q8 = build_group("quaternion").unwrap();
    let q8_table = CharacterTable::for_group(&q8).unwrap();
    for (gname, graph) in matrix() {
        let a = int(&count_nowhere_identity_formula(&graph, &d4_table, &opts).unwrap());
        let b = int(&count_nowhere_identity_formula(&graph, &q8_table, &opts).unwrap());
        assert_eq!(a, b, "{gname}");
    }
    println!("[criterion 3] PASS: N~_D4 = N~_Q8 on every matrix graph");
}

#[test]
fn criterion_4_abelian_reduction() {
    let opts = CountOptions::default();
    let cases: [(usize, &str, &str); 3] = [
        (2, "cyclic:2", "product:cyclic:1,cyclic:2"),
        (3, "cyclic:3", "product:cyclic:3,cyclic:1"),
        (4, "cyclic:4", "product:cyclic:2,cyclic:2"),
    ];
    for (gname, graph) in matrix() {
        for (n, cyclic_spec, product_spec) in cases {
            let reduced = int(&abelian_flow_count(&graph, n, &opts).unwrap());
            for spec in [cyclic_spec, product_spec] {
                let group = build_group(spec).unwrap();
                let table = CharacterTable::for_group(&group).unwrap();
                let full = int(&count_nowhere_identity_formula(&graph, &table, &opts).unwrap());
                assert_eq!(reduced, full, "{gname} n={n} {spec}");
            }
        }
    }
    println!("[criterion 4] PASS: abelian reduction matches both abelian groups for n = 2, 3, 4");
}

#[test]
fn criterion_5_frobenius_counts() {
    let opts = CountOptions::default();
    for spec in ["cyclic:4", "symmetric:3", "dihedral:4", "quaternion"] {
        let group = build_group(spec).unwrap();
        let table = CharacterTable::for_group(&group).unwrap();
        for genus in 0..=2u32 {
            for class in 0..group.classes().count() {
                let formula = int(&frobenius_count_formula(&table, class, genus).unwrap());
                let brute = int(&frobenius_count_brute(&group, class, genus, &opts).unwrap());
                assert_eq!(formula, brute, "{spec} g={genus} C={class}");
            }
        }
        // A_0(G, identity class) = 1
        assert_eq!(int(&frobenius_count_formula(&table, 0, 0).unwrap()), BigInt::from(1));
    }
    let s3 = build_group("symmetric:3").unwrap();
    let s3_table = CharacterTable::for_group(&s3).unwrap();
    assert_eq!(int(&frobenius_count_formula(&s3_table, 0, 1).unwrap()), BigInt::from(18));
    let transpositions = (0..3).find(|&c| s3.classes().size(c) == 3).unwrap();
    assert_eq!(
        int(&frobenius_count_formula(&s3_table, transpositions, 1).unwrap()),
        BigInt::from(0)
    );
    println!("[criterion 5] PASS: Frobenius formula = brute for genus 0..2 on all four groups; fixtures match");
}

#[test]
fn criterion_6_embedding_correctness() {
    for (gname, graph) in matrix() {
        let faces = graph.trace_faces();
        let total: usize = faces.iter().map(|f| f.arcs.len()).sum();
        assert_eq!(total, 2 * graph.edge_count(), "{gname}");
        let genus = graph.genus().unwrap(); // asserts chi even, g >= 0
        let chi = graph.vertex_count() as i64 - graph.edge_count() as i64 + faces.len() as i64;
        assert_eq!(chi, 2 - 2 * genus as i64, "{gname}");
        let dual = graph.dual().unwrap();
        assert_eq!(dual.graph.edge_count(), graph.edge_count(), "{gname}");
        assert_eq!(dual.graph.genus().unwrap(), genus, "{gname}");
        if genus == 0 {
            let double = dual.graph.dual().unwrap().graph;
            assert!(embedded_isomorphic(&graph, &double), "{gname} double dual");
        }
    }
    for g in 0..=3 {
        assert_eq!(corpus::bouquet(g).genus().unwrap(), g as u64, "bouquet({g})");
    }
    println!("[criterion 6] PASS: face sums, Euler formula, bouquet genera, dual invariants, genus-0 double duals");
}

#[test]
fn criterion_7_duality_pipeline() {
    let opts = CountOptions::default();
    // planar graphs over cyclic:3 and symmetric:3
    for graph in [corpus::theta_planar(), corpus::k4_planar()] {
        let graph = Arc::new(graph);
        for spec in ["cyclic:3", "symmetric:3"] {
            let group = build_group(spec).unwrap();
            let table = CharacterTable::for_group(&group).unwrap();
            let n_tilde = int(&count_nowhere_identity_formula(&graph, &table, &opts).unwrap());
            let flows = nowhere_identity_flows(&graph, &group, opts.term_budget).unwrap();
            assert_eq!(BigInt::from(flows.len()), n_tilde, "{spec} flow count");
            let mut colorings: BTreeSet<Vec<usize>> = BTreeSet::new();
            for flow in &flows {
                let (_, dual_tension) = flow_to_dual_tension(&graph, flow).unwrap();
                let (covering, coloring) = flow_to_proper_coloring(flow).unwrap();
                assert!(coloring.is_proper(), "{spec}");
                assert_eq!(covering.sheet_count(), 1, "{spec}: planar covering is 1-sheet");
                assert!(
                    embedded_isomorphic(covering.total(), covering.base()),
                    "{spec}: planar covering is an isomorphism"
                );
                // all |G| translates are proper colorings of H* itself
                for kappa in colorings_from_tension(&dual_tension).unwrap() {
                    assert!(kappa.is_proper());
                    colorings.insert(kappa.values().to_vec());
                }
                // round trip
                let lifted = covering.lift_labeling(&dual_tension).unwrap();
                let gct = GlobalCoveringTension::new(covering, lifted).unwrap();
                let back = covering_tension_to_flow(&gct, &graph).unwrap();
                assert_eq!(back.values(), flow.values(), "{spec} round trip");
            }
            let expected = n_tilde * group.order();
            assert_eq!(BigInt::from(colorings.len()), expected, "{spec}: |G| * N~ colorings");
        }
    }
    // torus: 2-loop bouquet over Z2, flow (1,1)
    let bouquet = Arc::new(corpus::bouquet(1));
    let z2 = build_group("cyclic:2").unwrap();
    let flow = surface_flows_core::partition::EdgeLabeling::new(
        bouquet.clone(),
        z2.clone(),
        vec![1, 1],
    )
    .unwrap();
    let (_, dual_tension) = flow_to_dual_tension(&bouquet, &flow).unwrap();
    assert!(is_local_tension(&dual_tension));
    let (covering, coloring) = flow_to_proper_coloring(&flow).unwrap();
    assert_eq!(covering.sheet_count(), 2, "torus flow gives a 2-sheet covering");
    assert!(coloring.is_proper());
    assert_eq!(
        {
            let mut cs = coloring.values().to_vec();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        },
        2,
        "proper 2-coloring"
    );
    let lifted = covering.lift_labeling(&dual_tension).unwrap();
    let gct = GlobalCoveringTension::new(covering, lifted).unwrap();
    let back = covering_tension_to_flow(&gct, &bouquet).unwrap();
    assert_eq!(back.values(), flow.values());
    println!("[criterion 7] PASS: pipeline, planar 1-sheet, |G|*N~ colorings, torus 2-sheet, round trips");
}

#[test]
fn criterion_8_character_tables() {
    let mut specs: Vec<String> = (1..=48).map(|n| format!("cyclic:{n}")).collect();
    specs.extend((1..=24).map(|n| format!("dihedral:{n}")));
    specs.extend((1..=4).map(|n| format!("symmetric:{n}")));
    specs.push("quaternion".to_string());
    let mut compared = 0u32;
    for spec in &specs {
        let group = build_group(spec).unwrap();
        assert!(group.order() <= 48, "{spec}");
        let builtin = CharacterTable::builtin(&group)
            .unwrap_or_else(|| panic!("{spec} should have a built-in table"));
        // validate() checks orthogonality at 1e-9, exact dimension sum,
        // and divisibility; it runs at construction, re-run explicitly
        builtin.validate().unwrap();
        let numerical = CharacterTable::numerical(&group).unwrap();
        numerical.validate().unwrap();
        assert!(
            numerical.matches(&builtin, 1e-9),
            "{spec}: numerical and built-in tables disagree"
        );
        compared += 1;
    }
    println!("[criterion 8] PASS: {compared} built-in groups of order <= 48 validated; numerical path agrees");
}
