use std::sync::Arc;

use super::{check, divisors, invalid, is_primitive_root, modinv, modpow, smallest_primitive_root, FamilyError};
use crate::gp::{CosetAction, HGStructure};
use crate::group::{are_isomorphic, catalog, PermGroup};
use crate::perm::{gcd, Perm};

/// `G = F_{p(p−1)} = ⟨S, T⟩` acting on `X = Z/d × F_p` through the
/// transversal `T^x S^m ↔ (m, x)`, point index `m·p + x`, with the
/// structures `N₁ ≅ F_{pd}` and `N₂ ≅ C_{pd}`.
#[derive(Debug, Clone)]
pub struct FrobeniusContext {
    pub p: usize,
    pub d: usize,
    pub zeta: usize,
    /// `S = diag(1, ζ)` and `T`, as permutations of `F_p` (`x ↦ (x+b)/c`).
    pub s: Perm,
    pub t: Perm,
    pub action: Arc<CosetAction>,
    pub sigma1: Perm,
    pub sigma2: Perm,
    pub tau1: Perm,
    pub tau2: Perm,
    pub tau: Perm,
    pub n1: HGStructure,
    pub n2: HGStructure,
    /// `σ₂τ₁σ₂⁻¹ = τ₁^{k1}`.
    pub k1: usize,
    /// `σ₂τσ₂⁻¹ = τ^k`, `0 ≤ k < pd`.
    pub k: usize,
}

fn point(p: usize, m: usize, x: usize) -> usize {
    m * p + x
}

/// Builds the family for prime `p ≥ 5`, a divisor `1 < d < p−1` of `p−1`
/// and a primitive root `zeta` (default: the least one).
pub fn frobenius(p: usize, d: usize, zeta: Option<usize>) -> Result<FrobeniusContext, FamilyError> {
    if !catalog::is_prime(p) {
        return Err(invalid("p must be prime"));
    }
    if p < 5 {
        return Err(invalid("p must be at least 5"));
    }
    if d == 0 || (p - 1) % d != 0 {
        return Err(invalid("d must divide p-1"));
    }
    if d <= 1 || d >= p - 1 {
        return Err(invalid("d must satisfy 1 < d < p-1"));
    }
    let zeta = zeta.unwrap_or_else(|| smallest_primitive_root(p));
    if !is_primitive_root(zeta, p) {
        return Err(invalid("zeta must generate the multiplicative group mod p"));
    }
    let zeta = zeta % p;
    let zinv = modinv(zeta, p);
    let eta = modpow(zeta, ((p - 1) / d) as u64, p);
    let n = p * d;

    let s = Perm::from_fn(p, |x| x * zinv % p);
    let t = Perm::from_fn(p, |x| (x + 1) % p);
    let g = PermGroup::closure(p, &[s.clone(), t.clone()], p * p)?;
    let gp = PermGroup::closure(p, &[s.pow(d as i64)], p)?;
    let mut labels = vec![g.identity(); n];
    for m in 0..d {
        for x in 0..p {
            labels[point(p, m, x)] = &t.pow(x as i64) * &s.pow(m as i64);
        }
    }
    let action = Arc::new(CosetAction::with_labels(&g, &gp, labels)?);

    let sigma1 = Perm::from_fn(n, |i| point(p, i / p, (i % p + 1) % p));
    let sigma2 = Perm::from_fn(n, |i| point(p, (i / p + 1) % d, i % p * zinv % p));
    check(action.lambda(&t) == Some(&sigma1), "λ(T) = σ₁")?;
    check(action.lambda(&s) == Some(&sigma2), "λ(S) = σ₂")?;

    let tau1 = Perm::from_fn(n, |i| {
        let m = i / p;
        point(p, m, (i % p + modpow(eta, m as u64, p)) % p)
    });
    let tau2 = Perm::from_fn(n, |i| point(p, (i / p + 1) % d, i % p));
    let tau = Perm::from_fn(n, |i| point(p, (i / p + 1) % d, (i % p + 1) % p));

    let n1 = PermGroup::closure(n, &[tau1.clone(), tau2.clone()], n)?;
    let n2 = PermGroup::closure(n, &[tau.clone()], n)?;
    let n1 = HGStructure::new(action.clone(), n1, "N1-Frobenius")?;
    let n2 = HGStructure::new(action.clone(), n2, "N2-cyclic")?;
    check(
        are_isomorphic(n1.n(), &catalog::frobenius_group(p, d), n)?,
        "N₁ ≅ F_pd",
    )?;
    check(are_isomorphic(n2.n(), &catalog::cyclic(n), n)?, "N₂ ≅ C_pd")?;

    // ζ^{−1−(p−1)/d} mod p, and k ≡ 1 (mod d), k ≡ ζ⁻¹ (mod p)
    let k1 = modpow(zinv, (1 + (p - 1) / d) as u64, p);
    let k = (0..n)
        .find(|k| k % d == 1 % d && k % p == zinv)
        .ok_or_else(|| FamilyError::Check("CRT exponent".into()))?;
    let conj = |x: &Perm, g: &Perm| x.conjugate_by(g).expect("same degree");
    check(conj(&tau1, &sigma1) == tau1, "σ₁τ₁σ₁⁻¹ = τ₁")?;
    check(conj(&tau2, &sigma1) == tau2, "σ₁τ₂σ₁⁻¹ = τ₂")?;
    check(conj(&tau1, &sigma2) == tau1.pow(k1 as i64), "σ₂τ₁σ₂⁻¹ = τ₁^k1")?;
    check(conj(&tau2, &sigma2) == tau2, "σ₂τ₂σ₂⁻¹ = τ₂")?;
    check(conj(&tau, &sigma1) == tau, "σ₁τσ₁⁻¹ = τ")?;
    check(conj(&tau, &sigma2) == tau.pow(k as i64), "σ₂τσ₂⁻¹ = τ^k")?;

    Ok(FrobeniusContext {
        p,
        d,
        zeta,
        s,
        t,
        action,
        sigma1,
        sigma2,
        tau1,
        tau2,
        tau,
        n1,
        n2,
        k1,
        k,
    })
}

impl FrobeniusContext {
    /// `η = ζ^{(p−1)/d}`.
    pub fn eta(&self) -> usize {
        modpow(self.zeta, ((self.p - 1) / self.d) as u64, self.p)
    }

    pub fn degree(&self) -> usize {
        self.p * self.d
    }

    /// `gcd((p−1)/d, d) = 1`.
    pub fn gcd_criterion(&self) -> bool {
        gcd(((self.p - 1) / self.d) as u64, self.d as u64) == 1
    }

    /// `C_{d'}(b) = ⟨τ₂^e τ₁^b⟩ ⊆ N₁` with `e = d/d'`.
    pub fn c_sub(&self, dp: usize, b: usize) -> PermGroup {
        let e = (self.d / dp) as i64;
        let gen = &self.tau2.pow(e) * &self.tau1.pow(b as i64);
        PermGroup::closure(self.degree(), &[gen], self.degree()).expect("inside N₁")
    }

    /// `F_{pd'} = ⟨τ₂^{d/d'}, τ₁⟩ ⊆ N₁`.
    pub fn f_sub(&self, dp: usize) -> PermGroup {
        let e = (self.d / dp) as i64;
        PermGroup::closure(self.degree(), &[self.tau2.pow(e), self.tau1.clone()], self.degree())
            .expect("inside N₁")
    }

    /// The stable subgroups of `N₁` predicted by the classification:
    /// `F_{pd'}` and `C_{d'}(0)` for `d' | d`.
    pub fn expected_stable_n1(&self) -> Vec<PermGroup> {
        let mut out = Vec::new();
        for dp in divisors(self.d) {
            out.push(self.f_sub(dp));
            out.push(self.c_sub(dp, 0));
        }
        out.sort();
        out
    }

    /// The subgroups of `G` containing `G'`: `⟨S^{d'}⟩` and `⟨S^{d'}, T⟩`
    /// for `d' | d`.
    pub fn expected_intermediate(&self) -> Vec<PermGroup> {
        let mut out = Vec::new();
        for dp in divisors(self.d) {
            let sd = self.s.pow(dp as i64);
            out.push(PermGroup::closure(self.p, &[sd.clone()], self.p).expect("cyclic"));
            out.push(PermGroup::closure(self.p, &[sd, self.t.clone()], self.p * self.p).expect("affine"));
        }
        out.sort();
        out
    }

    /// `(τ₂^e τ₁^b)^k = τ₂^{ke} τ₁^{b(1+η^e+…+η^{(k−1)e})}`.
    pub fn power_identity_holds(&self, e: usize, b: usize, k: usize) -> bool {
        let p = self.p;
        let x = &self.tau2.pow(e as i64) * &self.tau1.pow(b as i64);
        let etae = modpow(self.eta(), e as u64, p);
        let sum = (0..k).fold(0, |acc, j| (acc + modpow(etae, j as u64, p)) % p);
        x.pow(k as i64) == &self.tau2.pow((k * e) as i64) * &self.tau1.pow((b * sum % p) as i64)
    }
}
