//! The p+2 structures of a dihedral extension of degree 2p and their images.

use hgx::families::dihedral;
use hgx::gp::{correspondence_image, fixed_subgroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let ctx = dihedral(p)?;
    for s in &ctx.structures {
        let image = correspondence_image(s)?;
        let orders: Vec<usize> = image.groups().map(|g| g.order()).collect();
        println!("{:<20} {:<4} image orders {:?}", s.label(), s.iso_type().display_name(), orders);
    }

    let c = 1;
    let s = ctx.cyclic(c);
    let fixed = fixed_subgroup(&ctx.pi_power_subgroup(c, p as i64), s)?;
    println!("fixed subgroup of <pi_{c}^{p}>: {:?}", fixed.generator_strings());
    println!("equals <tau sigma^{c}>: {}", fixed == ctx.tau_sigma_subgroup(c));
    Ok(())
}
