//! Enumerate the subgroups of a Frobenius group and test normality.

use hgx::group::{all_subgroups, catalog, is_normal, DEFAULT_SUBGROUP_BOUND};
use std::collections::BTreeMap;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = catalog::frobenius_group(5, 4);
    println!("F20 generators: {:?}", g.generator_strings());

    let subs = all_subgroups(&g, DEFAULT_SUBGROUP_BOUND)?;
    let mut by_order: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for h in &subs {
        let e = by_order.entry(h.order()).or_default();
        e.0 += 1;
        if is_normal(h, &g)? {
            e.1 += 1;
        }
    }
    println!("{} subgroups", subs.len());
    for (order, (count, normal)) in by_order {
        println!("  order {order:>2}: {count} ({normal} normal)");
    }
    Ok(())
}
