use std::collections::BTreeMap;

use serde::Serialize;

use super::table::Table;
use super::{catalog, GroupError, PermGroup, DEFAULT_ISO_BOUND};

/// Cheap isomorphism invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<usize, usize>,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
}

impl Fingerprint {
    pub fn of(g: &PermGroup) -> Fingerprint {
        let mut order_histogram = BTreeMap::new();
        for e in g.elements() {
            *order_histogram.entry(e.order() as usize).or_insert(0) += 1;
        }
        Fingerprint {
            order_histogram,
            abelian: g.is_abelian(),
            center_order: g.center().order(),
            derived_order: g.derived_subgroup().order(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupId {
    pub order: usize,
    pub fingerprint: Fingerprint,
    /// Catalog name when the group matched a known construction.
    pub name: Option<String>,
}

impl GroupId {
    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("order-{}", self.order))
    }
}

pub fn identify(g: &PermGroup) -> GroupId {
    GroupId {
        order: g.order(),
        fingerprint: Fingerprint::of(g),
        name: catalog::name_of(g),
    }
}

/// Decides `G ≅ H` exactly: fingerprints first, then a search over images of
/// a small generating set of `G`.
pub fn are_isomorphic(g: &PermGroup, h: &PermGroup, bound: usize) -> Result<bool, GroupError> {
    Ok(find_isomorphism(g, h, bound)?.is_some())
}

/// An isomorphism as a map from indices of `g.elements()` to indices of
/// `h.elements()`, if one exists.
pub fn find_isomorphism(
    g: &PermGroup,
    h: &PermGroup,
    bound: usize,
) -> Result<Option<Vec<usize>>, GroupError> {
    for x in [g, h] {
        if x.order() > bound {
            return Err(GroupError::BoundExceeded {
                order: x.order(),
                bound,
            });
        }
    }
    if g.order() != h.order() || Fingerprint::of(g) != Fingerprint::of(h) {
        return Ok(None);
    }
    let tg = g.table();
    let th = h.table();
    let all: Vec<usize> = (0..g.order()).collect();
    let gens = tg.small_generating_set(&tg.generate(&all));
    let mut images = Vec::with_capacity(gens.len());
    Ok(extend(&tg, &th, &gens, &mut images))
}

fn extend(tg: &Table, th: &Table, gens: &[usize], images: &mut Vec<usize>) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        let map = partial_hom(tg, th, gens, images)?;
        return if map.iter().all(|m| m.is_some()) {
            Some(map.into_iter().map(Option::unwrap).collect())
        } else {
            None
        };
    }
    let want = tg.elem_order(gens[k]);
    for cand in 0..th.order() {
        if th.elem_order(cand) != want {
            continue;
        }
        images.push(cand);
        if partial_hom(tg, th, &gens[..=k], images).is_some() {
            if let Some(m) = extend(tg, th, gens, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] -> images[i]` along left multiplication; `None` on any
/// inconsistency or loss of injectivity.
fn partial_hom(tg: &Table, th: &Table, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; tg.order()];
    let mut used = vec![false; th.order()];
    map[0] = Some(0);
    used[0] = true;
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        let mx = map[x].unwrap();
        for (&gi, &hi) in gens.iter().zip(images) {
            let y = tg.mul(gi, x);
            let my = th.mul(hi, mx);
            match map[y] {
                Some(v) if v != my => return None,
                Some(_) => {}
                None => {
                    if used[my] {
                        return None;
                    }
                    used[my] = true;
                    map[y] = Some(my);
                    stack.push(y);
                }
            }
        }
    }
    Some(map)
}

/// Convenience: isomorphism with the default bound.
pub(crate) fn isomorphic(g: &PermGroup, h: &PermGroup) -> bool {
    are_isomorphic(g, h, DEFAULT_ISO_BOUND.max(g.order())).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn reflexive_and_c12_vs_d12() {
        let c12 = catalog::cyclic(12);
        let d12 = catalog::dihedral(12);
        assert!(are_isomorphic(&c12, &c12, 100).unwrap());
        assert!(!are_isomorphic(&c12, &d12, 100).unwrap());
        // relabeled copy of D12 is found
        let g = d12.conjugate_by(&crate::perm::Perm::from_fn(12, |x| (x * 5) % 12));
        assert!(are_isomorphic(&d12, &g, 100).unwrap());
    }

    #[test]
    fn isomorphism_is_a_homomorphism() {
        let a = catalog::dihedral(12);
        let b = catalog::direct_product(&catalog::cyclic(2), &catalog::dihedral(6));
        let m = find_isomorphism(&a, &b, 100).unwrap().unwrap();
        let (ta, tb) = (a.table(), b.table());
        for x in 0..12 {
            for y in 0..12 {
                assert_eq!(m[ta.mul(x, y)], tb.mul(m[x], m[y]));
            }
        }
    }

    #[test]
    fn bound_exceeded() {
        let g = catalog::cyclic(101);
        assert!(matches!(
            are_isomorphic(&g, &g, 100),
            Err(GroupError::BoundExceeded { order: 101, bound: 100 })
        ));
    }

    #[test]
    fn fingerprint_differs_between_c4_and_klein() {
        let c4 = Fingerprint::of(&catalog::cyclic(4));
        let v4 = Fingerprint::of(&catalog::direct_product(&catalog::cyclic(2), &catalog::cyclic(2)));
        assert_ne!(c4, v4);
    }
}
