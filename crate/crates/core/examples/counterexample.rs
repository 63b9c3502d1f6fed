//! A degree-12 extension none of whose Hopf Galois structures has a
//! bijective correspondence.

use std::sync::Arc;

use hgx::families::counterexample;
use hgx::gp::{enumerate_regular_normalized, intermediate_subgroups, is_bijective_correspondence, lattice_profile_match, SearchConfig};
use hgx::group::catalog;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = counterexample()?;
    println!("polynomial: {}", ctx.polynomial);
    let inter = intermediate_subgroups(&ctx.action)?;
    println!("intermediate subgroups by order: {:?}", inter.count_by_order());

    println!("stable involutions:");
    for w in &ctx.omegas {
        println!("  {w}");
    }
    println!("pairwise commuting: {}", ctx.pairwise_commuting());

    for (id, m) in catalog::catalog(12)? {
        let pm = lattice_profile_match(&m, inter)?;
        println!("{:<6} counting {:<5} embedding {}", id.display_name(), pm.counting, pm.embedding);
    }

    let out = enumerate_regular_normalized(&Arc::clone(&ctx.action), &SearchConfig::default())?;
    let bijective = out
        .structures
        .iter()
        .map(is_bijective_correspondence)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .filter(|&b| b)
        .count();
    println!("{} structures, {bijective} bijective ({} search nodes)", out.structures.len(), out.nodes);
    Ok(())
}
