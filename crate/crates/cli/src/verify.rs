//! The `duality verify` subcommand: run the whole flow -> dual tension ->
//! covering -> proper coloring pipeline over nowhere-identity flows and
//! report every assertion.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use surface_flows_core::duality::{
    colorings_from_tension, covering_tension_to_flow, flow_to_dual_tension,
    flow_to_proper_coloring, is_local_tension, nowhere_identity_flows, GlobalCoveringTension,
};
use surface_flows_core::partition::{
    count_nowhere_identity_brute, count_nowhere_identity_formula, EdgeLabeling,
};

use crate::CommonOpts;

const SAMPLE_LIMIT: usize = 1000;

struct Report {
    failures: u32,
    json: bool,
    lines: Vec<serde_json::Value>,
}

impl Report {
    fn check(&mut self, ok: bool, what: &str) {
        if self.json {
            self.lines.push(serde_json::json!({ "ok": ok, "check": what }));
        } else if ok {
            println!("ok: {what}");
        } else {
            println!("FAIL: {what}");
        }
        if !ok {
            self.failures += 1;
        }
    }
}

pub fn run(path: &PathBuf, group_spec: &str, seed: u64, common: &CommonOpts) -> crate::CmdResult {
    let graph = crate::load_graph(path)?;
    let (group, table) = crate::build_group_and_table(group_spec)?;
    let opts = crate::options(common);
    let mut report = Report {
        failures: 0,
        json: common.json,
        lines: Vec::new(),
    };

    let formula = count_nowhere_identity_formula(&graph, &table, &opts).map_err(crate::domain)?;
    let formula_count = formula.expect_integer().map_err(crate::domain)?.clone();

    // enumerate flows, exhaustively when the budget allows
    let (flows, exhaustive) = match nowhere_identity_flows(&graph, &group, opts.term_budget) {
        Ok(flows) => (flows, true),
        Err(_) => (sample_flows(&graph, &group, seed, &opts), false),
    };

    if exhaustive {
        let brute = count_nowhere_identity_brute(&graph, &group, &opts).map_err(crate::domain)?;
        report.check(
            brute.expect_integer().map_err(crate::domain)? == &formula_count,
            &format!(
                "nowhere-identity counts agree: brute = formula = {formula_count}"
            ),
        );
        report.check(
            num_bigint_matches(&formula_count, flows.len()),
            &format!("enumerated {} flows, matching the formula", flows.len()),
        );
    } else {
        report.check(
            true,
            &format!(
                "sampled {} flows (seed {seed}); formula count = {formula_count}",
                flows.len()
            ),
        );
    }

    let genus = graph.genus().map_err(crate::domain)?;
    let planar = genus == 0;
    let mut all_colorings: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut pipeline_ok = true;
    let mut local_ok = true;
    let mut sheets_ok = true;
    let mut proper_ok = true;
    let mut roundtrip_ok = true;
    let mut translates_ok = true;
    for flow in &flows {
        let (_, dual_tension) = flow_to_dual_tension(&graph, flow).map_err(crate::domain)?;
        local_ok &= is_local_tension(&dual_tension);
        let (covering, coloring) = match flow_to_proper_coloring(flow) {
            Ok(pair) => pair,
            Err(e) => {
                pipeline_ok = false;
                report.check(false, &format!("pipeline failed on a flow: {e}"));
                continue;
            }
        };
        sheets_ok &= group.order() % covering.sheet_count() == 0;
        if planar {
            sheets_ok &= covering.sheet_count() == 1;
        }
        proper_ok &= coloring.is_proper();
        // round-trip through the inverse construction
        let lifted = covering
            .lift_labeling(&dual_tension)
            .map_err(crate::domain)?;
        match GlobalCoveringTension::new(covering, lifted)
            .and_then(|gct| covering_tension_to_flow(&gct, &graph))
        {
            Ok(back) => roundtrip_ok &= back.values() == flow.values(),
            Err(_) => roundtrip_ok = false,
        }
        // all |G| right-translate colorings on the (planar) dual
        if planar && exhaustive {
            match colorings_from_tension(&dual_tension) {
                Ok(colorings) => {
                    for kappa in colorings {
                        translates_ok &= kappa.is_proper();
                        all_colorings.insert(kappa.values().to_vec());
                    }
                }
                Err(_) => translates_ok = false,
            }
        }
    }
    report.check(local_ok, "every flow's dual labeling is a local tension");
    report.check(pipeline_ok, "flow_to_proper_coloring succeeded on every flow");
    report.check(
        sheets_ok,
        if planar {
            "coverings are 1-sheet (planar) and sheet counts divide |G|"
        } else {
            "sheet counts divide |G|"
        },
    );
    report.check(proper_ok, "pipeline colorings are proper");
    report.check(roundtrip_ok, "covering tensions round-trip to the original flows");
    if planar && exhaustive {
        let expected = formula_count.clone() * group.order();
        report.check(
            translates_ok && num_bigint_matches(&expected, all_colorings.len()),
            &format!(
                "proper colorings from translates: {} = |G| * {}",
                all_colorings.len(),
                formula_count
            ),
        );
    }

    if common.json {
        println!(
            "{}",
            crate::render::pretty(&serde_json::json!({
                "graph": path.display().to_string(),
                "group": group_spec,
                "nowhere_identity_count": formula_count.to_string(),
                "flows_checked": flows.len(),
                "exhaustive": exhaustive,
                "checks": report.lines,
                "failures": report.failures,
            }))
        );
    } else {
        println!(
            "{}: {} checks failed",
            if report.failures == 0 { "PASS" } else { "FAIL" },
            report.failures
        );
    }
    Ok(if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn num_bigint_matches(value: &num_bigint::BigInt, count: usize) -> bool {
    value == &num_bigint::BigInt::from(count)
}

/// Rejection-sample distinct nowhere-identity flows (uniform over flows),
/// capped at SAMPLE_LIMIT.
fn sample_flows(
    graph: &std::sync::Arc<surface_flows_core::graph::EmbeddedGraph>,
    group: &std::sync::Arc<surface_flows_core::group::FiniteGroup>,
    seed: u64,
    opts: &surface_flows_core::partition::CountOptions,
) -> Vec<EdgeLabeling> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut flows = Vec::new();
    let attempts = opts.term_budget.min(1_000_000);
    for _ in 0..attempts {
        if flows.len() >= SAMPLE_LIMIT {
            break;
        }
        let values: Vec<usize> = (0..graph.edge_count())
            .map(|_| rng.gen_range(1..group.order()))
            .collect();
        let labeling = EdgeLabeling::new(graph.clone(), group.clone(), values.clone())
            .expect("sampled labels in range");
        if surface_flows_core::duality::is_flow(&labeling) && seen.insert(values) {
            flows.push(labeling);
        }
    }
    flows
}
