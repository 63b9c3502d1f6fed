//! Cycle notation, composition order, and the basic permutation invariants.

use hgx::perm::{parse_perm, Perm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_perm("(1,11,5,9,3,7)(2,12,6,10,4,8)", 12)?;
    let b = parse_perm("(1,10)(2,9)(3,8)(4,7)(5,12)(6,11)", 12)?;

    // (a*b)(x) = a(b(x)): the right factor acts first.
    let ab = &a * &b;
    println!("a      = {a}");
    println!("b      = {b}");
    println!("a*b    = {ab}");
    println!("b*a    = {}", &b * &a);
    println!("a^-1   = {}", a.inverse());
    println!("order  = {} (cycle type {:?})", a.order(), a.cycle_type());
    println!("even   = {}", a.is_even());
    println!("b a b^-1 = {}", a.conjugate_by(&b)?);

    let c = Perm::from_cycles(5, &[&[0, 1], &[2, 3, 4]])?;
    println!("{c} has order {} and fixed points {:?}", c.order(), c.fixed_points());
    assert!(c.pow(c.order() as i64).is_identity());
    Ok(())
}
