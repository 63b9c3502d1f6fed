use std::sync::Arc;

use super::{check, invalid, FamilyError};
use crate::gp::{centralizer_of_transitive, CosetAction, HGStructure};
use crate::group::{catalog, PermGroup};
use crate::perm::Perm;

/// `G = D_{2p} = ⟨σ, τ⟩` acting on itself by left translation.
///
/// Points are `Y = F_2 × F_p` with `(0, n) ↔ σ^{−n}` and `(1, n) ↔ τσ^n`,
/// index `m·p + n`. In these coordinates `λ(σ)(m, n) = (m, n−1)`,
/// `λ(τ)(m, n) = (m+1, −n)`, and every `π_c` is normalized by `λ(G)`.
#[derive(Debug, Clone)]
pub struct DihedralContext {
    pub p: usize,
    /// `σ: x ↦ x+1` and `τ: x ↦ −x` on `F_p`.
    pub sigma: Perm,
    pub tau: Perm,
    pub action: Arc<CosetAction>,
    /// `ρ(G)`, `λ(G)`, then `⟨π_c⟩` for `c = 0..p`.
    pub structures: Vec<HGStructure>,
}

fn point(p: usize, m: usize, n: usize) -> usize {
    (m % 2) * p + n % p
}

/// `π_c: (m, n) ↦ (m+1, n+1+(−1)^m c)`.
pub fn pi(p: usize, c: usize) -> Perm {
    Perm::from_fn(2 * p, |i| {
        let (m, n) = (i / p, i % p);
        let shift = if m == 0 { c % p } else { p - c % p };
        point(p, m + 1, n + 1 + shift)
    })
}

pub fn dihedral(p: usize) -> Result<DihedralContext, FamilyError> {
    if !catalog::is_prime(p) || p == 2 {
        return Err(invalid("p must be an odd prime"));
    }
    let sigma = Perm::from_fn(p, |x| (x + 1) % p);
    let tau = Perm::from_fn(p, |x| (p - x) % p);
    let g = PermGroup::closure(p, &[sigma.clone(), tau.clone()], 2 * p)?;
    let labels: Vec<Perm> = (0..2 * p)
        .map(|i| {
            let n = (i % p) as i64;
            if i < p {
                sigma.pow(-n)
            } else {
                &tau * &sigma.pow(n)
            }
        })
        .collect();
    let action = Arc::new(CosetAction::with_labels(&g, &PermGroup::trivial(p), labels.clone())?);

    let lsigma = Perm::from_fn(2 * p, |i| point(p, i / p, i % p + p - 1));
    let ltau = Perm::from_fn(2 * p, |i| point(p, i / p + 1, p - i % p));
    check(action.lambda(&sigma) == Some(&lsigma), "λ(σ)(m,n) = (m,n−1)")?;
    check(action.lambda(&tau) == Some(&ltau), "λ(τ)(m,n) = (m+1,−n)")?;

    // ρ(g)(x) = x g⁻¹
    let index = |h: &Perm| labels.iter().position(|l| l == h).expect("label");
    let rho_gens: Vec<Perm> = [&sigma, &tau]
        .iter()
        .map(|g| Perm::from_fn(2 * p, |i| index(&(&labels[i] * &g.inverse()))))
        .collect();
    let rho = PermGroup::closure(2 * p, &rho_gens, 2 * p)?;
    check(rho == centralizer_of_transitive(&action), "ρ(G) is the centralizer of λ(G)")?;

    let mut structures = vec![
        HGStructure::new(action.clone(), rho, "rho-classical")?,
        HGStructure::new(action.clone(), action.lambda_group().clone(), "lambda-nonclassical")?,
    ];
    for c in 0..p {
        let pc = pi(p, c);
        check(pc.cycle_type() == vec![2 * p], "π_c is a 2p-cycle")?;
        let n = PermGroup::closure(2 * p, &[pc], 2 * p)?;
        structures.push(HGStructure::new(action.clone(), n, format!("pi_{c}"))?);
    }
    Ok(DihedralContext {
        p,
        sigma,
        tau,
        action,
        structures,
    })
}

impl DihedralContext {
    pub fn classical(&self) -> &HGStructure {
        &self.structures[0]
    }

    pub fn nonclassical(&self) -> &HGStructure {
        &self.structures[1]
    }

    pub fn cyclic(&self, c: usize) -> &HGStructure {
        &self.structures[2 + c]
    }

    pub fn pi(&self, c: usize) -> Perm {
        pi(self.p, c)
    }

    /// `⟨σ⟩ ⊆ G`.
    pub fn sigma_subgroup(&self) -> PermGroup {
        PermGroup::closure(self.p, &[self.sigma.clone()], self.p).expect("cyclic")
    }

    /// `⟨τσ^c⟩ ⊆ G`.
    pub fn tau_sigma_subgroup(&self, c: usize) -> PermGroup {
        let g = &self.tau * &self.sigma.pow(c as i64);
        PermGroup::closure(self.p, &[g], 2).expect("order two")
    }

    /// `⟨π_c^k⟩`.
    pub fn pi_power_subgroup(&self, c: usize, k: i64) -> PermGroup {
        PermGroup::closure(2 * self.p, &[self.pi(c).pow(k)], 2 * self.p).expect("cyclic")
    }
}
