//! Improves a network's attack robustness by degree-preserving rewiring:
//! hill climbing over two-edge swaps, maximizing the mean LCC fraction
//! under an adaptive degree-targeted attack.
//!
//! Run with: `cargo run --example optimize_rewiring` (a few seconds)

use netrobust::attacks::{AttackPlan, StrategyId, TargetKind};
use netrobust::engine::{EvalOptions, MeasureId, SchemePick};
use netrobust::generators::{generate, GeneratorConfig, ModelId};
use netrobust::optimize::{optimize, Objective, OptimizeConfig};
use netrobust::Result;

fn main() -> Result<()> {
    let g = generate(&GeneratorConfig::new(ModelId::Ba, 60, 4.0).seed(23))?;
    println!("network: Barabasi-Albert, N = {}, M = {}", g.node_count(), g.edge_count());

    let objective = Objective {
        measure: MeasureId::R1,
        plan: AttackPlan::new(StrategyId::Mdta, TargetKind::Node),
        opts: EvalOptions::default(),
        scheme: SchemePick::Cd,
        repeats: 1, // the degree attack is deterministic
    };
    let mut config = OptimizeConfig::hill_climb(objective, 400);
    config.seed = 5;

    let (best, log) = optimize(&g, &config)?;

    println!("\nobjective r1 (higher is better):");
    println!("  initial {:.6}", log.initial);
    println!("  best    {:.6}  (+{:.2}%)", log.best, 100.0 * (log.best - log.initial) / log.initial);
    let accepted = log.steps.iter().filter(|s| s.accepted).count();
    println!("  {} swaps proposed, {} accepted, {} stagnated", log.steps.len(), accepted, log.stagnated);

    // Rewiring preserves every node's degree.
    let degrees = |g: &netrobust::Graph| {
        let mut d = vec![0usize; g.node_count()];
        for &(u, v) in g.edges() {
            d[u] += 1;
            d[v] += 1;
        }
        d.sort_unstable();
        d
    };
    assert_eq!(degrees(&g), degrees(&best));
    println!("  degree sequence preserved: confirmed");

    let path = std::env::temp_dir().join("rewired.edg");
    best.to_edge_list_file(&path)?;
    println!("\nwrote optimized network to {}", path.display());
    Ok(())
}
