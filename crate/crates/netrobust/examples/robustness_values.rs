//! Condenses attack traces into scalar robustness values: the twelve
//! supported measures on one network, under node and edge attacks, with
//! both complete-disconnection (CD) and threshold-truncated (TD) sums.
//!
//! Run with: `cargo run --example robustness_values`

use netrobust::attacks::{AttackPlan, StrategyId, TargetKind};
use netrobust::engine::{
    detect_threshold, evaluate, run_trace, EvalOptions, MeasureId, Scheme, StopRule,
};
use netrobust::generators::{generate, GeneratorConfig, ModelId};
use netrobust::measures::MeasureSet;
use netrobust::Result;

fn main() -> Result<()> {
    let g = generate(&GeneratorConfig::new(ModelId::Er, 80, 6.0).seed(5))?;
    println!("network: Erdos-Renyi, N = {}, M = {}\n", g.node_count(), g.edge_count());
    let opts = EvalOptions::default(); // undirected -> ECT driver counts

    // One adaptive degree attack per target kind; sample every quantity so
    // all measures are evaluable from the same trace.
    let which = MeasureSet::all_for(g.is_directed());
    let node_plan = AttackPlan::new(StrategyId::Mdta, TargetKind::Node);
    let node_trace = run_trace(&g, &node_plan, which, StopRule::Full)?;
    let edge_plan = AttackPlan::new(StrategyId::Mdta, TargetKind::Edge);
    let edge_trace = run_trace(&g, &edge_plan, which, StopRule::Full)?;

    // TD truncates the sum at the destruction threshold (window p = 5%).
    let node_t = detect_threshold(&node_trace, 0.05)?.t;
    let edge_t = detect_threshold(&edge_trace, 0.05)?.t;
    println!("destruction thresholds: node T = {}, edge T = {}\n", node_t, edge_t);

    let measures = [
        MeasureId::R1,
        MeasureId::R2,
        MeasureId::R1e,
        MeasureId::R3,
        MeasureId::R3e,
        MeasureId::R6,
        MeasureId::R7,
        MeasureId::R8,
        MeasureId::R9,
        MeasureId::R10,
        MeasureId::R15,
        MeasureId::R15n,
    ];

    println!("{:<6} {:>12} {:>12}  {}", "", "CD", "TD", "direction");
    for m in measures {
        // R1e/R3e are edge-trace measures; the rest read the node trace.
        let (trace, t) = match m.target_kind() {
            TargetKind::Node => (&node_trace, node_t),
            TargetKind::Edge => (&edge_trace, edge_t),
        };
        let cd = evaluate(trace, m, opts, Scheme::Cd)?;
        let td = evaluate(trace, m, opts, Scheme::Td(t))?;
        let dir = if m.higher_is_better() { "higher is better" } else { "lower is better" };
        println!("{:<6} {:>12.6} {:>12.6}  {}", m.name(), cd, td, dir);
    }

    // Truncated-sum variant: stop the attack after the first H removals
    // instead of running to complete disconnection.
    let h = g.node_count() / 4;
    let capped = run_trace(&g, &node_plan, which, StopRule::Cap(h))?;
    let partial = evaluate(&capped, MeasureId::R1, opts, Scheme::Td(h))?;
    println!("\nr1 over the first H = {} removals only: {:.6}", h, partial);

    // Identity: the driver-density pair is complementary.
    let r3 = evaluate(&node_trace, MeasureId::R3, opts, Scheme::Cd)?;
    let r9 = evaluate(&node_trace, MeasureId::R9, opts, Scheme::Cd)?;
    println!("\ncomplementarity check: R3 + R9 = {:.12} (exactly 1)", r3 + r9);
    Ok(())
}
