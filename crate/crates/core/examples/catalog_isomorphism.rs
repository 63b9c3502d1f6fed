//! Walk the catalog of a given order and identify groups built by hand.

use hgx::group::{are_isomorphic, catalog, DEFAULT_ISO_BOUND};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let order: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(12);
    for (id, g) in catalog::catalog(order)? {
        println!("{:<8} center {:>2}, derived {:>2}, abelian {}", id.display_name(), g.center().order(), g.derived_subgroup().order(), g.is_abelian());
    }

    let s3 = catalog::dihedral(6);
    let product = catalog::direct_product(&s3, &s3);
    println!("S3 x S3 is named {:?}", catalog::name_of(&product));

    let d6 = catalog::dihedral(12);
    let c2xs3 = catalog::direct_product(&catalog::cyclic(2), &s3);
    println!("D12 ~ C2 x S3: {}", are_isomorphic(&d6, &c2xs3, DEFAULT_ISO_BOUND)?);
    Ok(())
}
