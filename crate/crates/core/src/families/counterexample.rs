use std::sync::Arc;

use super::{check, FamilyError};
use crate::gp::{stable_order2_involutions, CosetAction, HGStructure};
use crate::group::{are_isomorphic, catalog, PermGroup};
use crate::perm::{parse_perm, Perm};

/// A degree-12 polynomial over `Q` whose splitting field has group
/// `S3×S3`. Carried as text only.
pub const POLYNOMIAL: &str =
    "x^12 - 2x^11 - 2x^9 + 15x^8 - 4x^7 - 12x^6 - 4x^5 + 15x^4 - 2x^3 - 2x + 1";

pub const SIGMA: &str = "(1,2,3,4,5,6)(7,8,9,10,11,12)";
pub const TAU: &str = "(1,9)(2,10)(3,7)(4,8)(5,11)(6,12)";
pub const N_GENERATORS: [&str; 2] = [
    "(1,11,5,9,3,7)(2,12,6,10,4,8)",
    "(1,10)(2,9)(3,8)(4,7)(5,12)(6,11)",
];
pub const OMEGAS: [&str; 3] = [
    "(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)",
    "(1,9)(2,10)(3,11)(4,12)(5,7)(6,8)",
    "(1,11)(2,12)(3,7)(4,8)(5,9)(6,10)",
];

/// `λ(G) = ⟨σ, τ⟩ ≤ S_12` with `G ≅ S3×S3`, the dihedral structure `N`, and
/// the three stable fixed-point-free involutions.
#[derive(Debug, Clone)]
pub struct CounterexampleContext {
    pub sigma: Perm,
    pub tau: Perm,
    pub action: Arc<CosetAction>,
    pub n: HGStructure,
    pub omegas: [Perm; 3],
    pub polynomial: &'static str,
}

fn parse12(s: &str) -> Perm {
    parse_perm(s, 12).expect("fixed data parses")
}

pub fn counterexample() -> Result<CounterexampleContext, FamilyError> {
    let sigma = parse12(SIGMA);
    let tau = parse12(TAU);
    let g = PermGroup::closure(12, &[sigma.clone(), tau.clone()], 100)?;
    check(g.order() == 36, "|G| = 36")?;
    check(g.is_transitive(), "G is transitive")?;
    let s3 = catalog::dihedral(6);
    check(
        are_isomorphic(&g, &catalog::direct_product(&s3, &s3), 36)?,
        "G ≅ S3×S3",
    )?;
    let action = Arc::new(CosetAction::from_transitive(&g, 0)?);
    let n = PermGroup::closure(12, &N_GENERATORS.map(parse12), 100)?;
    let n = HGStructure::new(action.clone(), n, "N-dihedral")?;
    check(are_isomorphic(n.n(), &catalog::dihedral(12), 12)?, "N ≅ D12")?;
    let omegas = OMEGAS.map(parse12);
    let mut listed = omegas.to_vec();
    listed.sort();
    check(
        stable_order2_involutions(&action) == listed,
        "stable involutions are ω₁, ω₂, ω₃",
    )?;
    Ok(CounterexampleContext {
        sigma,
        tau,
        action,
        n,
        omegas,
        polynomial: POLYNOMIAL,
    })
}

impl CounterexampleContext {
    /// Pairs `(i, j)`, `i < j`, with `ω_i ω_j = ω_j ω_i`.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let w = &self.omegas;
        let mut out = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                if &w[i] * &w[j] == &w[j] * &w[i] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn pairwise_commuting(&self) -> bool {
        self.commuting_pairs().len() == 3
    }

    /// Some `ω_i` commutes with the other two.
    pub fn some_omega_central(&self) -> bool {
        let pairs = self.commuting_pairs();
        (0..3).any(|i| pairs.iter().filter(|&&(a, b)| a == i || b == i).count() == 2)
    }
}
