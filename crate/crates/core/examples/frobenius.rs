//! The cyclic and Frobenius structures on a degree-pd extension with group F_{p(p-1)}.

use hgx::families::frobenius;
use hgx::gp::{is_almost_classically_galois, is_bijective_correspondence, stable_subgroups};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let p = args.next().transpose()?.unwrap_or(7);
    let d = args.next().transpose()?.unwrap_or(3);

    let ctx = frobenius(p, d, None)?;
    println!("p = {p}, d = {d}, zeta = {}", ctx.zeta);
    println!("gcd criterion: {}", ctx.gcd_criterion());
    println!("almost classically Galois: {}", is_almost_classically_galois(&ctx.action)?);
    println!("sigma2 tau1 sigma2^-1 = tau1^{}", ctx.k1);
    println!("sigma2 tau sigma2^-1 = tau^{}", ctx.k);
    for s in [&ctx.n1, &ctx.n2] {
        println!(
            "{} ({}): {} stable subgroups, bijective {}",
            s.label(),
            s.iso_type().display_name(),
            stable_subgroups(s)?.len(),
            is_bijective_correspondence(s)?
        );
    }
    Ok(())
}
