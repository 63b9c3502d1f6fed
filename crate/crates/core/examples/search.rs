//! Exhaustive enumeration of regular subgroups normalized by lambda(G)
//! for a few small transitive groups, then a search restricted to one
//! isomorphism type.

use std::sync::Arc;

use hgx::gp::{enumerate_regular_normalized, is_bijective_correspondence, CosetAction, SearchConfig};
use hgx::group::{catalog, PermGroup};
use hgx::perm::parse_perm;

fn group(n: usize, gens: &[&str]) -> Result<PermGroup, Box<dyn std::error::Error>> {
    let gens = gens.iter().map(|s| parse_perm(s, n)).collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::closure(n, &gens, 1000)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("S4 on 4 points", group(4, &["(1,2,3,4)", "(1,2)"])?),
        ("D8 on 4 points", group(4, &["(1,2,3,4)", "(1,3)"])?),
        ("D12 on 6 points", group(6, &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"])?),
        ("C3 wr C2 on 6 points", group(6, &["(1,2,3)", "(1,4)(2,5)(3,6)"])?),
    ];
    for (name, g) in &cases {
        let action = Arc::new(CosetAction::from_transitive(g, 0)?);
        let out = enumerate_regular_normalized(&action, &SearchConfig::default())?;
        println!("{name}: |G| = {}, {} structures ({} nodes)", g.order(), out.structures.len(), out.nodes);
        for s in &out.structures {
            println!("  {:<4} bijective {}", s.iso_type().display_name(), is_bijective_correspondence(s)?);
        }
    }

    // The Galois case for D8 acting on itself, cyclic structures only.
    let d8 = catalog::dihedral(8);
    let action = Arc::new(CosetAction::new(&d8, &PermGroup::trivial(d8.degree()))?);
    let c8 = enumerate_regular_normalized(&action, &SearchConfig::default().with_filter(catalog::cyclic(8)))?;
    println!("D8 Galois: {} cyclic structures", c8.structures.len());
    Ok(())
}
