//! Finite permutation groups with fully materialized element sets.

pub mod catalog;
mod iso;
pub(crate) mod table;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::perm::{Perm, PermError};
use table::{ElemSet, Table};

pub use iso::{are_isomorphic, find_isomorphism, identify, Fingerprint, GroupId};

/// Default upper bound on `|G|` for subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 400;
/// Default upper bound on group orders for isomorphism testing.
pub const DEFAULT_ISO_BOUND: usize = 100;
/// Default element cap for [`PermGroup::closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded cap {cap} after {partial} elements")]
    CapExceeded { cap: usize, partial: usize },
    #[error("group order {order} exceeds bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("no catalog for groups of order {0}")]
    UnsupportedOrder(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A subgroup of `Sym(n)` stored with its full element set in canonical order.
///
/// Equality, hashing and ordering only look at the degree and element set,
/// never at the generators.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// The group generated by `gens` on `n` points; fails once more than
    /// `cap` elements have been produced.
    pub fn closure(n: usize, gens: &[Perm], cap: usize) -> Result<PermGroup, GroupError> {
        if n == 0 {
            return Err(PermError::ZeroDegree.into());
        }
        for g in gens {
            if g.degree() != n {
                return Err(GroupError::DegreeMismatch(n, g.degree()));
            }
        }
        let id = Perm::identity(n);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g * &x;
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            cap,
                            partial: seen.len(),
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        let mut generators: Vec<Perm> = Vec::new();
        for g in gens {
            if !g.is_identity() && !generators.contains(g) {
                generators.push(g.clone());
            }
        }
        Ok(PermGroup {
            degree: n,
            generators,
            elements,
        })
    }

    pub fn trivial(n: usize) -> PermGroup {
        PermGroup {
            degree: n,
            generators: Vec::new(),
            elements: vec![Perm::identity(n)],
        }
    }

    /// Wraps an element set already known to be a group. The generators are
    /// derived from the elements, so the result does not depend on how the
    /// set was obtained.
    pub(crate) fn from_sorted_elements(degree: usize, elements: Vec<Perm>) -> PermGroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements[0].is_identity());
        let mut g = PermGroup {
            degree,
            generators: Vec::new(),
            elements,
        };
        g.generators = g.canonical_generators();
        g
    }

    /// Builds the group on an element set, checking closure.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Result<PermGroup, GroupError> {
        if elements.iter().any(|e| e.degree() != degree) {
            return Err(GroupError::DegreeMismatch(degree, 0));
        }
        elements.sort();
        elements.dedup();
        if elements.is_empty() || !elements[0].is_identity() {
            return Err(GroupError::NotSubgroup);
        }
        let set: HashSet<&Perm> = elements.iter().collect();
        for a in &elements {
            for b in &elements {
                if !set.contains(&(a * b)) {
                    return Err(GroupError::NotSubgroup);
                }
            }
        }
        Ok(PermGroup::from_sorted_elements(degree, elements))
    }

    pub(crate) fn from_index_set(&self, set: &ElemSet) -> PermGroup {
        let elements = set.ones().map(|i| self.elements[i].clone()).collect();
        PermGroup::from_sorted_elements(self.degree, elements)
    }

    pub(crate) fn index_set_of(&self, sub: &PermGroup) -> Option<ElemSet> {
        let mut set = ElemSet::with_capacity(self.order());
        for e in &sub.elements {
            set.insert(self.index_of(e)?);
        }
        Some(set)
    }

    pub(crate) fn table(&self) -> Table {
        Table::new(&self.elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.index_of(p).is_some()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() <= other.order()
            && other.order() % self.order() == 0
            && self.elements.iter().all(|e| other.contains(e))
    }

    /// A small generating set that depends only on the element set: elements
    /// are scanned by decreasing order, ties broken by canonical order.
    pub fn canonical_generators(&self) -> Vec<Perm> {
        if self.order() == 1 {
            return Vec::new();
        }
        let mut candidates: Vec<&Perm> = self.elements[1..].iter().collect();
        candidates.sort_by_cached_key(|p| (std::cmp::Reverse(p.order()), (*p).clone()));
        let mut gens: Vec<Perm> = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([self.identity()]);
        for c in candidates {
            if span.len() == self.order() {
                break;
            }
            if span.contains(c) {
                continue;
            }
            gens.push(c.clone());
            span = PermGroup::closure(self.degree, &gens, usize::MAX)
                .expect("uncapped closure")
                .elements
                .into_iter()
                .collect();
        }
        gens
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut out = vec![x];
        let mut i = 0;
        while i < out.len() {
            let y = out[i];
            for g in &self.generators {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// `{g in G : g(x) = x}`.
    pub fn point_stabilizer(&self, x: usize) -> PermGroup {
        let elements = self
            .elements
            .iter()
            .filter(|g| g.apply(x) == x)
            .cloned()
            .collect();
        PermGroup::from_sorted_elements(self.degree, elements)
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elements = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        PermGroup::from_sorted_elements(self.degree, elements)
    }

    pub fn conjugate_by(&self, g: &Perm) -> PermGroup {
        let mut elements: Vec<Perm> = self
            .elements
            .iter()
            .map(|e| e.conjugate_by(g).expect("degree checked by caller"))
            .collect();
        elements.sort();
        PermGroup::from_sorted_elements(self.degree, elements)
    }

    /// True iff conjugation by each of `by` maps the group onto itself.
    pub fn is_normalized_by(&self, by: &[Perm]) -> bool {
        by.iter().all(|a| {
            self.generators
                .iter()
                .all(|g| self.contains(&g.conjugate_by(a).expect("degree mismatch")))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a * b == b * a))
    }

    pub fn center(&self) -> PermGroup {
        let elements = self
            .elements
            .iter()
            .filter(|z| self.generators.iter().all(|g| *z * g == g * *z))
            .cloned()
            .collect();
        PermGroup::from_sorted_elements(self.degree, elements)
    }

    /// The subgroup generated by all commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms: Vec<Perm> = Vec::new();
        let mut seen = HashSet::new();
        for a in &self.elements {
            let ai = a.inverse();
            for b in &self.elements {
                let c = &(&(a * b) * &ai) * &b.inverse();
                if !c.is_identity() && seen.insert(c.clone()) {
                    comms.push(c);
                }
            }
        }
        let g = PermGroup::closure(self.degree, &comms, usize::MAX).expect("uncapped closure");
        PermGroup::from_sorted_elements(self.degree, g.elements)
    }

    /// Canonical generator strings, e.g. `["(1,2,3)", "(1,2)"]`; independent
    /// of the generators the group was built from.
    pub fn generator_strings(&self) -> Vec<String> {
        self.canonical_generators().iter().map(Perm::to_cycle_string).collect()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl Hash for PermGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl PartialOrd for PermGroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then order, then element list.
impl Ord for PermGroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.order().cmp(&other.order()))
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(deg {}, order {}, <{}>)",
            self.degree,
            self.order(),
            self.generator_strings().join(", ")
        )
    }
}

/// Every subgroup of `g`, each exactly once, sorted by order then elements.
pub fn all_subgroups(g: &PermGroup, bound: usize) -> Result<Vec<PermGroup>, GroupError> {
    if g.order() > bound {
        return Err(GroupError::BoundExceeded {
            order: g.order(),
            bound,
        });
    }
    let table = g.table();
    let mut subs: Vec<PermGroup> = table
        .all_subgroups()
        .iter()
        .map(|s| g.from_index_set(s))
        .collect();
    subs.sort();
    Ok(subs)
}

/// Every subgroup of `g` containing `h`, sorted by order then elements.
pub fn subgroups_containing(g: &PermGroup, h: &PermGroup) -> Result<Vec<PermGroup>, GroupError> {
    if h.degree != g.degree {
        return Err(GroupError::DegreeMismatch(h.degree, g.degree));
    }
    let table = g.table();
    let base = g.index_set_of(h).ok_or(GroupError::NotSubgroup)?;
    let mut subs: Vec<PermGroup> = table
        .overgroups(&base)
        .iter()
        .map(|s| g.from_index_set(s))
        .collect();
    subs.sort();
    Ok(subs)
}

pub fn is_normal(h: &PermGroup, g: &PermGroup) -> Result<bool, GroupError> {
    if h.degree != g.degree {
        return Err(GroupError::DegreeMismatch(h.degree, g.degree));
    }
    if !h.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    Ok(h.is_normalized_by(&g.generators))
}

/// First normal subgroup `H` of `g` (in canonical subgroup order) with
/// `H ∩ gp = 1` and `|H|·|gp| = |g|`.
pub fn normal_complement(g: &PermGroup, gp: &PermGroup) -> Result<Option<PermGroup>, GroupError> {
    if gp.degree != g.degree {
        return Err(GroupError::DegreeMismatch(gp.degree, g.degree));
    }
    if !gp.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    if gp.order() == 1 {
        return Ok(Some(g.clone()));
    }
    let target = g.order() / gp.order();
    let table = g.table();
    let whole = table.generate(&(0..g.order()).collect::<Vec<_>>());
    let gp_set = g.index_set_of(gp).ok_or(GroupError::NotSubgroup)?;
    if g.order() > DEFAULT_SUBGROUP_BOUND {
        return Err(GroupError::BoundExceeded {
            order: g.order(),
            bound: DEFAULT_SUBGROUP_BOUND,
        });
    }
    let mut found: Vec<PermGroup> = table
        .all_subgroups()
        .into_iter()
        .filter(|s| s.count_ones(..) == target)
        .filter(|s| s.intersection(&gp_set).count() == 1)
        .filter(|s| table.is_normal(s, &whole))
        .map(|s| g.from_index_set(&s))
        .collect();
    found.sort();
    Ok(found.into_iter().next())
}

pub fn point_stabilizer(g: &PermGroup, x: usize) -> PermGroup {
    g.point_stabilizer(x)
}
