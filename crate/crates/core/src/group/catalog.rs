//! Small groups realized as regular permutation groups (left translation on
//! their own elements), one representative per isomorphism class.
//!
//! Supported orders: 1 through 16, 18, every prime, and every product `p·q`
//! of two distinct primes.

use super::iso::{isomorphic, Fingerprint, GroupId};
use super::{GroupError, PermGroup, DEFAULT_ISO_BOUND};
use crate::perm::Perm;

/// Regular representation of the abstract group on `0..k` with product `mul`
/// and identity `0`.
///
/// Panics if `mul` is not a group law; every caller passes a formula that is
/// one, and the closure check below catches mistakes.
pub fn regular_from_law(k: usize, mul: impl Fn(usize, usize) -> usize) -> PermGroup {
    let elements: Vec<Perm> = (0..k).map(|a| Perm::from_fn(k, |x| mul(a, x))).collect();
    let g = PermGroup::from_elements(k, elements).expect("product is not a group law");
    assert_eq!(g.order(), k, "product is not a group law");
    g
}

/// Regular representation of an already materialized group.
pub fn regularize(g: &PermGroup) -> PermGroup {
    let t = g.table();
    regular_from_law(g.order(), |a, b| t.mul(a, b))
}

pub fn cyclic(n: usize) -> PermGroup {
    regular_from_law(n, |a, b| (a + b) % n)
}

/// Dihedral group of order `n` (even), elements `t^i s^j`.
pub fn dihedral(n: usize) -> PermGroup {
    assert!(n >= 2 && n % 2 == 0, "dihedral order must be even");
    let m = n / 2;
    regular_from_law(n, |x, y| {
        let (a, b) = (x / m, x % m);
        let (c, d) = (y / m, y % m);
        // t^a s^b t^c s^d = t^(a+c) s^((-1)^c b + d)
        let j = (if c == 0 { b + d } else { m - b + d }) % m;
        ((a + c) % 2) * m + j
    })
}

/// `<a, b | a^m = 1, b^k = a^s, b a b^-1 = a^r>`, order `m·k`.
pub fn metacyclic(m: usize, k: usize, r: usize, s: usize) -> PermGroup {
    let rpow: Vec<usize> = (0..k)
        .scan(1usize, |acc, _| {
            let cur = *acc;
            *acc = (*acc * r) % m;
            Some(cur)
        })
        .collect();
    regular_from_law(m * k, |x, y| {
        let (i, j) = (x % m, x / m);
        let (u, v) = (y % m, y / m);
        let mut a = i + rpow[j] * u;
        let mut b = j + v;
        if b >= k {
            b -= k;
            a += s;
        }
        b * m + a % m
    })
}

/// Dicyclic group of order `4m`.
pub fn dicyclic(m: usize) -> PermGroup {
    metacyclic(2 * m, 2, 2 * m - 1, m)
}

/// `C_p ⋊ C_d`, the generator of `C_d` acting as `x -> η x` with `η` of
/// multiplicative order `d` mod `p`.
pub fn frobenius_group(p: usize, d: usize) -> PermGroup {
    let eta = element_of_order(p, d).expect("d must divide p - 1");
    metacyclic(p, d, eta, 0)
}

pub fn alternating4() -> PermGroup {
    let a4 = PermGroup::closure(
        4,
        &[
            Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
        ],
        12,
    )
    .unwrap();
    regularize(&a4)
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (ta, tb) = (a.table(), b.table());
    let kb = b.order();
    regular_from_law(a.order() * kb, |x, y| {
        ta.mul(x / kb, y / kb) * kb + tb.mul(x % kb, y % kb)
    })
}

fn prod(parts: &[PermGroup]) -> PermGroup {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, g| direct_product(&acc, g))
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Least element of multiplicative order exactly `d` modulo the prime `p`.
pub fn element_of_order(p: usize, d: usize) -> Option<usize> {
    if !is_prime(p) || (p - 1) % d != 0 {
        return None;
    }
    (1..p).find(|&x| mult_order(x, p) == d)
}

pub fn mult_order(x: usize, p: usize) -> usize {
    let mut y = x % p;
    let mut k = 1;
    while y != 1 {
        y = y * x % p;
        k += 1;
        if k > p {
            return 0;
        }
    }
    k
}

fn prime_pair(n: usize) -> Option<(usize, usize)> {
    let q = (2..n).find(|d| n % d == 0)?;
    let p = n / q;
    (is_prime(q) && is_prime(p) && p != q).then_some((p, q))
}

pub fn is_supported(order: usize) -> bool {
    (1..=16).contains(&order) || order == 18 || is_prime(order) || prime_pair(order).is_some()
}

fn s3() -> PermGroup {
    dihedral(6)
}

fn named(order: usize) -> Option<Vec<(String, PermGroup)>> {
    let c = cyclic;
    let list: Vec<(&str, PermGroup)> = match order {
        1 => vec![("C1", c(1))],
        4 => vec![("C4", c(4)), ("C2xC2", prod(&[c(2), c(2)]))],
        6 => vec![("C6", c(6)), ("S3", s3())],
        8 => vec![
            ("C8", c(8)),
            ("C2xC4", prod(&[c(2), c(4)])),
            ("C2xC2xC2", prod(&[c(2), c(2), c(2)])),
            ("D8", dihedral(8)),
            ("Q8", dicyclic(2)),
        ],
        9 => vec![("C9", c(9)), ("C3xC3", prod(&[c(3), c(3)]))],
        12 => vec![
            ("C12", c(12)),
            ("C2xC6", prod(&[c(2), c(6)])),
            ("D12", dihedral(12)),
            ("A4", alternating4()),
            ("Dic3", dicyclic(3)),
        ],
        16 => vec![
            ("C16", c(16)),
            ("C4xC4", prod(&[c(4), c(4)])),
            ("C2xC8", prod(&[c(2), c(8)])),
            ("C2xC2xC4", prod(&[c(2), c(2), c(4)])),
            ("C2xC2xC2xC2", prod(&[c(2), c(2), c(2), c(2)])),
            ("D16", dihedral(16)),
            ("Q16", dicyclic(4)),
            ("SD16", metacyclic(8, 2, 3, 0)),
            ("M16", metacyclic(8, 2, 5, 0)),
            ("C4:C4", metacyclic(4, 4, 3, 0)),
            ("C2xD8", prod(&[c(2), dihedral(8)])),
            ("C2xQ8", prod(&[c(2), dicyclic(2)])),
            ("C2xC2:C4", klein_by_c4()),
            ("C4oD8", pauli()),
        ],
        18 => vec![
            ("C18", c(18)),
            ("C3xC6", prod(&[c(3), c(6)])),
            ("D18", dihedral(18)),
            ("C3xS3", prod(&[c(3), s3()])),
            ("C3xC3:C2", generalized_dihedral_c3c3()),
        ],
        n if is_prime(n) => return Some(vec![(format!("C{n}"), c(n))]),
        n => {
            let (p, q) = prime_pair(n)?;
            let mut v = vec![(format!("C{n}"), c(n))];
            if (p - 1) % q == 0 {
                let name = if q == 2 {
                    format!("D{n}")
                } else {
                    format!("F{n}")
                };
                v.push((name, frobenius_group(p, q)));
            }
            return Some(v);
        }
    };
    Some(list.into_iter().map(|(s, g)| (s.to_string(), g)).collect())
}

/// `(C2 × C2) ⋊ C4`, the generator of `C4` swapping the two `C2` factors.
fn klein_by_c4() -> PermGroup {
    let swap = |x: usize| ((x & 1) << 1) | (x >> 1);
    regular_from_law(16, |x, y| {
        let (u, j) = (x % 4, x / 4);
        let (v, l) = (y % 4, y / 4);
        let w = if j % 2 == 1 { swap(v) } else { v };
        ((j + l) % 4) * 4 + (u ^ w)
    })
}

/// Central product `C4 ∘ D8` (the Pauli group): `i^k X^a Z^b` with `ZX = -XZ`.
fn pauli() -> PermGroup {
    regular_from_law(16, |x, y| {
        let (k1, a1, b1) = (x / 4, (x >> 1) & 1, x & 1);
        let (k2, a2, b2) = (y / 4, (y >> 1) & 1, y & 1);
        let k = (k1 + k2 + 2 * (b1 * a2)) % 4;
        k * 4 + ((a1 ^ a2) << 1) + (b1 ^ b2)
    })
}

/// `(C3 × C3) ⋊ C2` with the involution inverting every element.
fn generalized_dihedral_c3c3() -> PermGroup {
    regular_from_law(18, |x, y| {
        let (u, i) = (x % 9, x / 9);
        let (v, j) = (y % 9, y / 9);
        let w = if i == 1 {
            ((3 - v / 3) % 3) * 3 + (3 - v % 3) % 3
        } else {
            v
        };
        let s = ((u / 3 + w / 3) % 3) * 3 + (u % 3 + w % 3) % 3;
        ((i + j) % 2) * 9 + s
    })
}

/// One representative per isomorphism class of groups of the given order.
pub fn catalog(order: usize) -> Result<Vec<(GroupId, PermGroup)>, GroupError> {
    if order == 0 || !is_supported(order) {
        return Err(GroupError::UnsupportedOrder(order));
    }
    let list = named(order).ok_or(GroupError::UnsupportedOrder(order))?;
    Ok(list
        .into_iter()
        .map(|(name, g)| {
            let id = GroupId {
                order,
                fingerprint: Fingerprint::of(&g),
                name: Some(name),
            };
            (id, g)
        })
        .collect())
}

/// Extra named constructions consulted for orders outside the catalog.
fn extra_candidates(n: usize) -> Vec<(String, PermGroup)> {
    let mut out = vec![(format!("C{n}"), cyclic(n))];
    if n % 2 == 0 && n >= 6 {
        out.push((format!("D{n}"), dihedral(n)));
    }
    for p in (3..n).filter(|&p| is_prime(p) && n % p == 0) {
        let d = n / p;
        if d > 2 && (p - 1) % d == 0 {
            out.push((format!("F{n}"), frobenius_group(p, d)));
        }
    }
    for a in (2..n).filter(|a| n % a == 0 && a * a <= n) {
        let b = n / a;
        if let (Some(la), Some(lb)) = (named(a), named(b)) {
            for (na, ga) in &la {
                for (nb, gb) in &lb {
                    out.push((format!("{na}x{nb}"), direct_product(ga, gb)));
                }
            }
        }
    }
    out
}

/// Name of the first catalog entry (or extra construction) isomorphic to `g`.
pub fn name_of(g: &PermGroup) -> Option<String> {
    let n = g.order();
    if n > DEFAULT_ISO_BOUND {
        return None;
    }
    let fp = Fingerprint::of(g);
    let candidates: Vec<(String, PermGroup)> = if is_supported(n) {
        named(n)?
    } else {
        extra_candidates(n)
    };
    candidates
        .into_iter()
        .filter(|(_, h)| Fingerprint::of(h) == fp)
        .find(|(_, h)| isomorphic(g, h))
        .map(|(s, _)| s)
}

/// Looks a group up by name among the catalog entries of `order`, or
/// among the extra constructions when the order has no full catalog.
pub fn by_name(order: usize, name: &str) -> Result<Option<PermGroup>, GroupError> {
    if !is_supported(order) {
        return Ok(extra_candidates(order)
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g));
    }
    Ok(catalog(order)?
        .into_iter()
        .find(|(id, _)| id.name.as_deref() == Some(name))
        .map(|(_, g)| g))
}
