//! Regular subgroups normalized by a transitive action, their stable
//! subgroups, and the group-level Galois correspondence.
//!
//! An extension `K/k` with Galois closure group `G` and `G' = Gal(K̃/K)` is
//! modelled by the action `λ` of `G` on the left cosets `G/G'`. A Hopf Galois
//! structure is a regular subgroup `N ≤ Perm(G/G')` normalized by `λ(G)`;
//! its sub-Hopf algebras are stood in for by the `λ(G)`-stable subgroups of
//! `N`, and the fixed field of a stable `N'` by the subgroup of `G`
//! stabilizing the `N'`-orbit of the base coset.

mod correspondence;
mod lattice;
mod search;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::group::{identify, GroupError, GroupId, PermGroup};
use crate::perm::Perm;

pub use correspondence::{
    centralizer_of_transitive, classical_structure, conjugation_orbit, correspondence_image,
    fixed_subgroup, intermediate_subgroups, is_almost_classically_galois,
    is_bijective_correspondence, lattice_profile_match, normalizes, point_map, stable_core,
    stable_order2_involutions, stable_subgroups, ProfileMatch,
};
pub use lattice::{LatticeNode, SubgroupLattice};
pub use search::{
    enumerate_regular_normalized, SearchConfig, SearchOutcome, DEFAULT_MAX_DEGREE, DEFAULT_NODE_BUDGET,
    DEFAULT_TIME_BUDGET_MS, HARD_MAX_DEGREE,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GpError {
    #[error("action not faithful: the stabilizer has a core of order {0}")]
    NotFaithful(usize),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("point {0} out of range")]
    BadPoint(usize),
    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,
    #[error("subgroup is not stable under λ(G)")]
    NotStable,
    #[error("N is not regular")]
    NotRegular,
    #[error("λ(G) does not normalize N")]
    NotNormalized,
    #[error("degree {degree} exceeds enumeration bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },
    #[error("search incomplete: budget exhausted after {nodes} nodes ({found} structures found so far)")]
    Incomplete { nodes: u64, found: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The permutation action `λ` of `G` on the cosets `G/G'`.
///
/// Points are `0..degree`; `base_point` is the coset `G'` itself.
/// `images[i]` is `λ` of `source.elements()[i]`.
#[derive(Debug)]
pub struct CosetAction {
    source: PermGroup,
    stabilizer: PermGroup,
    base_point: usize,
    images: Vec<Perm>,
    coset_labels: Vec<Perm>,
    lambda_group: PermGroup,
    lambda_stabilizer: PermGroup,
    intermediate: OnceLock<SubgroupLattice>,
}

impl CosetAction {
    /// Action of `g` on the left cosets of `gp`, cosets labelled by their
    /// least element (the base coset `gp` is label 0).
    pub fn new(g: &PermGroup, gp: &PermGroup) -> Result<CosetAction, GpError> {
        if !gp.is_subgroup_of(g) {
            return Err(GpError::NotSubgroup);
        }
        let mut covered = vec![false; g.order()];
        let mut labels: Vec<Perm> = Vec::new();
        for (i, x) in g.elements().iter().enumerate() {
            if covered[i] {
                continue;
            }
            for h in gp.elements() {
                covered[g.index_of(&(x * h)).expect("closed")] = true;
            }
            labels.push(x.clone());
        }
        Self::with_labels(g, gp, labels)
    }

    /// Action of `g` on the left cosets of `gp` with point `i` the coset
    /// `labels[i]·gp`. `labels[0]` must lie in `gp`.
    pub fn with_labels(g: &PermGroup, gp: &PermGroup, labels: Vec<Perm>) -> Result<CosetAction, GpError> {
        if !gp.is_subgroup_of(g) {
            return Err(GpError::NotSubgroup);
        }
        if labels.len() * gp.order() != g.order() || !labels.first().is_some_and(|l| gp.contains(l)) {
            return Err(GpError::Invariant("labels are not a transversal with the base coset first"));
        }
        let mut coset_of = vec![usize::MAX; g.order()];
        for (c, x) in labels.iter().enumerate() {
            if !g.contains(x) {
                return Err(GpError::NotSubgroup);
            }
            for h in gp.elements() {
                let j = g.index_of(&(x * h)).expect("closed");
                if coset_of[j] != usize::MAX {
                    return Err(GpError::Invariant("labels are not a transversal with the base coset first"));
                }
                coset_of[j] = c;
            }
        }
        let n = labels.len();
        let images: Vec<Perm> = g
            .elements()
            .iter()
            .map(|a| {
                Perm::from_fn(n, |c| {
                    coset_of[g.index_of(&(a * &labels[c])).expect("closed")]
                })
            })
            .collect();
        let kernel = images.iter().filter(|p| p.is_identity()).count();
        if kernel > 1 {
            return Err(GpError::NotFaithful(kernel));
        }
        Ok(Self::assemble(g.clone(), 0, images, labels))
    }

    /// Uses a transitive permutation group's own action: `λ` is the identity
    /// embedding and `G'` is the stabilizer of `base`.
    pub fn from_transitive(g: &PermGroup, base: usize) -> Result<CosetAction, GpError> {
        if base >= g.degree() {
            return Err(GpError::BadPoint(base));
        }
        if !g.is_transitive() {
            return Err(GpError::NotTransitive);
        }
        let mut labels: Vec<Option<Perm>> = vec![None; g.degree()];
        for e in g.elements() {
            let x = e.apply(base);
            if labels[x].is_none() {
                labels[x] = Some(e.clone());
            }
        }
        let labels = labels.into_iter().map(Option::unwrap).collect();
        Ok(Self::assemble(g.clone(), base, g.elements().to_vec(), labels))
    }

    fn assemble(source: PermGroup, base: usize, images: Vec<Perm>, coset_labels: Vec<Perm>) -> Self {
        let n = coset_labels.len();
        let mut sorted = images.clone();
        sorted.sort();
        let lambda_group = PermGroup::from_sorted_elements(n, sorted);
        let lambda_stabilizer = lambda_group.point_stabilizer(base);
        let stabilizer_elems: Vec<Perm> = source
            .elements()
            .iter()
            .zip(&images)
            .filter(|(_, l)| l.apply(base) == base)
            .map(|(g, _)| g.clone())
            .collect();
        let stabilizer = PermGroup::from_sorted_elements(source.degree(), stabilizer_elems);
        CosetAction {
            source,
            stabilizer,
            base_point: base,
            images,
            coset_labels,
            lambda_group,
            lambda_stabilizer,
            intermediate: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coset_labels.len()
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    /// `G`.
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    /// `G'`, as a subgroup of `G`.
    pub fn stabilizer(&self) -> &PermGroup {
        &self.stabilizer
    }

    pub fn lambda_group(&self) -> &PermGroup {
        &self.lambda_group
    }

    pub fn lambda_stabilizer(&self) -> &PermGroup {
        &self.lambda_stabilizer
    }

    /// A representative in `G` of the coset at each point.
    pub fn coset_labels(&self) -> &[Perm] {
        &self.coset_labels
    }

    pub fn lambda(&self, g: &Perm) -> Option<&Perm> {
        self.source.index_of(g).map(|i| &self.images[i])
    }

    /// Pairs `(g, λ(g))` in the canonical order of `G`.
    pub fn lambda_pairs(&self) -> impl Iterator<Item = (&Perm, &Perm)> {
        self.source.elements().iter().zip(&self.images)
    }

    pub fn is_galois(&self) -> bool {
        self.stabilizer.order() == 1
    }

    pub(crate) fn intermediate_cache(&self) -> &OnceLock<SubgroupLattice> {
        &self.intermediate
    }
}

pub fn coset_action(g: &PermGroup, gp: &PermGroup) -> Result<CosetAction, GpError> {
    CosetAction::new(g, gp)
}

/// Regular: transitive and `|N|` equals the degree.
pub fn is_regular(n: &PermGroup) -> bool {
    n.order() == n.degree() && n.is_transitive()
}

/// A regular subgroup `N` normalized by `λ(G)`, with its isomorphism type.
#[derive(Debug, Clone)]
pub struct HGStructure {
    action: Arc<CosetAction>,
    n: PermGroup,
    iso_type: GroupId,
    label: String,
    stable: OnceLock<SubgroupLattice>,
}

impl HGStructure {
    pub fn new(action: Arc<CosetAction>, n: PermGroup, label: impl Into<String>) -> Result<Self, GpError> {
        if n.degree() != action.degree() || !is_regular(&n) {
            return Err(GpError::NotRegular);
        }
        if !n.is_normalized_by(action.lambda_group().generators()) {
            return Err(GpError::NotNormalized);
        }
        let iso_type = identify(&n);
        Ok(HGStructure {
            action,
            n,
            iso_type,
            label: label.into(),
            stable: OnceLock::new(),
        })
    }

    pub fn action(&self) -> &CosetAction {
        &self.action
    }

    pub fn shared_action(&self) -> &Arc<CosetAction> {
        &self.action
    }

    pub fn n(&self) -> &PermGroup {
        &self.n
    }

    pub fn iso_type(&self) -> &GroupId {
        &self.iso_type
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub(crate) fn stable_cache(&self) -> &OnceLock<SubgroupLattice> {
        &self.stable
    }

    /// `N ⊆ A_n`.
    pub fn is_even(&self) -> bool {
        self.n.generators().iter().all(Perm::is_even)
    }
}
