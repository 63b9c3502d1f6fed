use std::collections::BTreeMap;

use super::{CosetAction, GpError, HGStructure, LatticeNode, SubgroupLattice};
use crate::group::{
    all_subgroups, normal_complement, subgroups_containing, GroupError, PermGroup,
    DEFAULT_SUBGROUP_BOUND,
};
use crate::perm::Perm;

/// `aνa⁻¹ ∈ N` for every generator `a` of `A`.
pub fn normalizes(a: &PermGroup, n: &PermGroup) -> Result<bool, GpError> {
    if a.degree() != n.degree() {
        return Err(GroupError::DegreeMismatch(a.degree(), n.degree()).into());
    }
    Ok(n.is_normalized_by(a.generators()))
}

/// For regular `N`, the element `ν_x` with `ν_x(base) = x`, indexed by `x`.
pub fn point_map(n: &PermGroup, base: usize) -> Option<Vec<Perm>> {
    if !super::is_regular(n) || base >= n.degree() {
        return None;
    }
    let mut out: Vec<Option<Perm>> = vec![None; n.degree()];
    for v in n.elements() {
        out[v.apply(base)] = Some(v.clone());
    }
    out.into_iter().collect()
}

/// Conjugates `aνa⁻¹` over all `a ∈ A`, sorted and deduplicated.
pub fn conjugation_orbit(a: &PermGroup, nu: &Perm) -> Vec<Perm> {
    let mut out: Vec<Perm> = a.elements().iter().map(|g| &(g * nu) * &g.inverse()).collect();
    out.sort();
    out.dedup();
    out
}

fn is_stable(np: &PermGroup, s: &HGStructure) -> bool {
    np.is_normalized_by(s.action().lambda_group().generators())
}

/// The λ(G)-stable subgroups of `N` with their Hasse diagram.
pub fn stable_subgroups(s: &HGStructure) -> Result<&SubgroupLattice, GpError> {
    if let Some(l) = s.stable_cache().get() {
        return Ok(l);
    }
    let subs = all_subgroups(s.n(), DEFAULT_SUBGROUP_BOUND.max(s.n().order()))?;
    let nodes = subs
        .into_iter()
        .filter(|h| is_stable(h, s))
        .map(|group| LatticeNode {
            group,
            stable: Some(true),
            origin: None,
        })
        .collect();
    Ok(s.stable_cache().get_or_init(|| SubgroupLattice::from_nodes(nodes)))
}

/// `∩_g λ(g) N' λ(g)⁻¹`, the largest stable subgroup inside `N'`.
pub fn stable_core(np: &PermGroup, s: &HGStructure) -> Result<PermGroup, GpError> {
    if !np.is_subgroup_of(s.n()) {
        return Err(GpError::NotSubgroup);
    }
    let mut core = np.clone();
    for g in s.action().lambda_group().elements() {
        if core.order() == 1 {
            break;
        }
        core = core.intersection(&np.conjugate_by(g));
    }
    Ok(core)
}

/// `S(N') = {g ∈ G : λ(g)(ē) ∈ N'ē}`, a subgroup of `G` containing `G'`.
pub fn fixed_subgroup(np: &PermGroup, s: &HGStructure) -> Result<PermGroup, GpError> {
    if !np.is_subgroup_of(s.n()) {
        return Err(GpError::NotSubgroup);
    }
    if !is_stable(np, s) {
        return Err(GpError::NotStable);
    }
    let a = s.action();
    let orbit = np.orbit(a.base_point());
    let mut inside = vec![false; a.degree()];
    for x in orbit {
        inside[x] = true;
    }
    let elems: Vec<Perm> = a
        .lambda_pairs()
        .filter(|(_, l)| inside[l.apply(a.base_point())])
        .map(|(g, _)| g.clone())
        .collect();
    if elems.len() != a.stabilizer().order() * np.order() {
        return Err(GpError::Invariant("|S(N')| differs from |G'|·|N'|"));
    }
    PermGroup::from_elements(a.source().degree(), elems)
        .map_err(|_| GpError::Invariant("S(N') is not closed under multiplication"))
}

/// Image of the correspondence: `S(N')` for each stable `N'`, each node
/// carrying the index of its stable subgroup in [`stable_subgroups`].
pub fn correspondence_image(s: &HGStructure) -> Result<SubgroupLattice, GpError> {
    let stable = stable_subgroups(s)?;
    let mut nodes = Vec::with_capacity(stable.len());
    for (i, node) in stable.nodes.iter().enumerate() {
        nodes.push(LatticeNode {
            group: fixed_subgroup(&node.group, s)?,
            stable: None,
            origin: Some(i),
        });
    }
    Ok(SubgroupLattice::from_nodes(nodes))
}

pub fn is_bijective_correspondence(s: &HGStructure) -> Result<bool, GpError> {
    Ok(stable_subgroups(s)?.len() == intermediate_subgroups(s.action())?.len())
}

/// Subgroups `H` with `G' ⊆ H ⊆ G`.
pub fn intermediate_subgroups(a: &CosetAction) -> Result<&SubgroupLattice, GpError> {
    if let Some(l) = a.intermediate_cache().get() {
        return Ok(l);
    }
    let subs = subgroups_containing(a.source(), a.stabilizer())?;
    Ok(a.intermediate_cache()
        .get_or_init(|| SubgroupLattice::from_groups(subs)))
}

/// `G'` has a normal complement in `G`.
pub fn is_almost_classically_galois(a: &CosetAction) -> Result<bool, GpError> {
    Ok(normal_complement(a.source(), a.stabilizer())?.is_some())
}

/// The centralizer of `λ(G)` in `Perm(G/G')`.
///
/// A centralizing `c` is determined by `c(ē)`, which must be a fixed point of
/// `λ(G')`; every such choice extends to `c(λ(g)ē) = λ(g)c(ē)`.
pub fn centralizer_of_transitive(a: &CosetAction) -> PermGroup {
    let n = a.degree();
    let base = a.base_point();
    let movers: Vec<&Perm> = a
        .coset_labels()
        .iter()
        .map(|g| a.lambda(g).expect("label in G"))
        .collect();
    let stab = a.lambda_stabilizer();
    let mut elems = Vec::new();
    for y in 0..n {
        if stab.generators().iter().any(|h| h.apply(y) != y) {
            continue;
        }
        let mut images = vec![0usize; n];
        for m in &movers {
            images[m.apply(base)] = m.apply(y);
        }
        let c = Perm::from_images(images).expect("centralizer element is a bijection");
        debug_assert!(a
            .lambda_group()
            .generators()
            .iter()
            .all(|g| g * &c == &c * g));
        elems.push(c);
    }
    elems.sort();
    PermGroup::from_sorted_elements(n, elems)
}

/// `ρ(G)`: in the Galois case the centralizer of `λ(G)` is regular and gives
/// the classical structure.
pub fn classical_structure(a: &std::sync::Arc<CosetAction>) -> Result<HGStructure, GpError> {
    HGStructure::new(a.clone(), centralizer_of_transitive(a), "rho-classical")
}

/// Fixed-point-free involutions commuting with `λ(G)`.
pub fn stable_order2_involutions(a: &CosetAction) -> Vec<Perm> {
    centralizer_of_transitive(a)
        .elements()
        .iter()
        .filter(|c| c.order() == 2 && c.is_fixed_point_free())
        .cloned()
        .collect()
}

/// Outcome of matching a candidate group against an intermediate-subgroup
/// lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileMatch {
    /// `M` has at least as many subgroups of each required order.
    pub counting: bool,
    /// Some family of subgroups of `M` is order-isomorphic to the target.
    pub embedding: bool,
}

/// Can the subgroups of `M` host a bijective correspondence onto `target`?
///
/// A node `H` of the target needs a subgroup of order `|H|/|G'|`, with `G'`
/// the least node; the assignment must be injective and respect inclusion
/// in both directions.
pub fn lattice_profile_match(m: &PermGroup, target: &SubgroupLattice) -> Result<ProfileMatch, GpError> {
    let Some(bottom) = target.nodes.first() else {
        return Ok(ProfileMatch {
            counting: true,
            embedding: true,
        });
    };
    let base = bottom.order();
    let subs = all_subgroups(m, DEFAULT_SUBGROUP_BOUND)?;
    let mut need: BTreeMap<usize, usize> = BTreeMap::new();
    for node in &target.nodes {
        if node.order() % base != 0 {
            return Err(GpError::Invariant("target lattice is not above its least node"));
        }
        *need.entry(node.order() / base).or_insert(0) += 1;
    }
    let have = |o: usize| subs.iter().filter(|s| s.order() == o).count();
    let counting = need.iter().all(|(&o, &k)| have(o) >= k);
    if !counting {
        return Ok(ProfileMatch {
            counting,
            embedding: false,
        });
    }
    let candidates: Vec<Vec<usize>> = target
        .nodes
        .iter()
        .map(|node| {
            (0..subs.len())
                .filter(|&i| subs[i].order() == node.order() / base)
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(target.len());
    let embedding = embed(target, &subs, &candidates, &mut chosen);
    Ok(ProfileMatch { counting, embedding })
}

fn embed(
    target: &SubgroupLattice,
    subs: &[PermGroup],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> bool {
    let k = chosen.len();
    if k == candidates.len() {
        return true;
    }
    for &c in &candidates[k] {
        if chosen.contains(&c) {
            continue;
        }
        let consistent = chosen.iter().enumerate().all(|(j, &d)| {
            target.le(j, k) == subs[d].is_subgroup_of(&subs[c])
                && target.le(k, j) == subs[c].is_subgroup_of(&subs[d])
        });
        if consistent {
            chosen.push(c);
            if embed(target, subs, candidates, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}
