//! Computes the a-priori (pre-attack) structural indicators for several
//! networks: efficiency, betweenness, clustering, and the spectral family
//! (spectral radius and gap, natural and algebraic connectivity,
//! spanning-tree count, effective resistance).
//!
//! Run with: `cargo run --example structure_report`

use netrobust::apriori::report;
use netrobust::generators::{canonical4, generate, GeneratorConfig, ModelId};
use netrobust::{Graph, Result};

fn main() -> Result<()> {
    let nets: Vec<(&str, Graph)> = vec![
        ("complete K4", canonical4("FUL", false)?),
        ("4-cycle", canonical4("LOP", false)?),
        ("4-star", canonical4("STR", false)?),
        ("ER N=60 <k>=6", generate(&GeneratorConfig::new(ModelId::Er, 60, 6.0).seed(2))?),
        ("BA N=60 <k>=6", generate(&GeneratorConfig::new(ModelId::Ba, 60, 6.0).seed(2))?),
    ];

    let fmt = |v: Option<f64>| match v {
        Some(x) => format!("{:>9.4}", x),
        None => format!("{:>9}", "na"),
    };

    println!(
        "{:<16} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "network", "eff", "nb", "cc", "sr", "gap", "natconn", "algconn", "ln(st)", "effres"
    );
    for (label, g) in &nets {
        let r = report(g)?;
        println!(
            "{:<16} {} {} {} {} {} {} {} {} {}",
            label,
            fmt(r.efficiency),
            fmt(r.node_betweenness),
            fmt(r.clustering),
            fmt(r.spectral_radius),
            fmt(r.spectral_gap),
            fmt(r.natural_connectivity),
            fmt(r.algebraic_connectivity),
            fmt(r.spanning_trees_log),
            fmt(r.effective_resistance),
        );
        if let Some(exact) = r.spanning_trees_exact {
            println!("{:<16} exact spanning-tree count: {}", "", exact);
        }
    }

    // Directed graphs skip the symmetric spectral family but keep the
    // path-based indicators.
    let qs = generate(&GeneratorConfig::new(ModelId::Qs, 60, 6.0).directed(true).seed(2))?;
    let r = report(&qs)?;
    println!(
        "\nq-snapback (directed): eff = {}, nb = {}, spectral fields = {}",
        fmt(r.efficiency),
        fmt(r.node_betweenness),
        if r.spectral_radius.is_none() { "na" } else { "present" }
    );
    println!("\nfull JSON of the last report:\n{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
    Ok(())
}
