#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use hgx::families;
use hgx::gp::{
    classical_structure, correspondence_image, enumerate_regular_normalized, fixed_subgroup,
    is_bijective_correspondence, stable_core, stable_subgroups, CosetAction, HGStructure, SearchConfig,
};
use hgx::group::{all_subgroups, catalog, is_normal, PermGroup, DEFAULT_SUBGROUP_BOUND};
use hgx::perm::{parse_perm, Perm};

pub const CASES: u32 = 10_000;

pub fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn group(n: usize, gens: &[&str]) -> PermGroup {
    let gens: Vec<Perm> = gens.iter().map(|s| parse_perm(s, n).unwrap()).collect();
    PermGroup::closure(n, &gens, 10_000).unwrap()
}

/// Small transitive groups used as non-Galois test actions.
pub fn transitive_examples() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("S3 on 3", group(3, &["(1,2,3)", "(1,2)"])),
        ("A4 on 4", group(4, &["(1,2,3)", "(1,2)(3,4)"])),
        ("S4 on 4", group(4, &["(1,2,3,4)", "(1,2)"])),
        ("D8 on 4", group(4, &["(1,2,3,4)", "(1,3)"])),
        ("D10 on 5", group(5, &["(1,2,3,4,5)", "(2,5)(3,4)"])),
        ("F20 on 5", group(5, &["(1,2,3,4,5)", "(2,3,5,4)"])),
        ("A5 on 5", group(5, &["(1,2,3)", "(1,2,3,4,5)"])),
        ("D12 on 6", group(6, &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"])),
        ("C3 wr C2 on 6", group(6, &["(1,2,3)", "(1,4)(2,5)(3,6)"])),
        ("A4 on 6", group(6, &["(1,2)(3,4)", "(1,3,5)(2,4,6)"])),
        ("S4 on 6", group(6, &["(1,2)(3,4)", "(1,3,5)(2,4,6)", "(1,2)"])),
        ("D14 on 7", group(7, &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"])),
        ("F21 on 7", group(7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"])),
    ]
}

/// Every structure the suite produces: family constructions plus search
/// results over small actions.
pub fn structure_pool() -> &'static [HGStructure] {
    static POOL: OnceLock<Vec<HGStructure>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = Vec::new();
        for p in [3, 5, 7] {
            pool.extend(families::dihedral(p).unwrap().structures);
        }
        for (p, d) in [(5, 2), (7, 2), (7, 3)] {
            let ctx = families::frobenius(p, d, None).unwrap();
            pool.push(ctx.n1);
            pool.push(ctx.n2);
        }
        let ce = families::counterexample().unwrap();
        pool.push(ce.n);
        pool.extend(search(&ce.action));
        for (_, g) in transitive_examples() {
            let a = Arc::new(CosetAction::from_transitive(&g, 0).unwrap());
            pool.extend(search(&a));
        }
        for order in 2..=8 {
            for (_, k) in catalog::catalog(order).unwrap() {
                let a = Arc::new(CosetAction::new(&k, &PermGroup::trivial(k.degree())).unwrap());
                pool.extend(search(&a));
            }
        }
        pool
    })
}

pub fn search(a: &Arc<CosetAction>) -> Vec<HGStructure> {
    enumerate_regular_normalized(a, &SearchConfig::default())
        .unwrap()
        .structures
}

/// Regular subgroups of Sym(n) normalized by `λ(G)`, found by closing
/// pairs of fixed-point-free permutations. Exhaustive for degree ≤ 7,
/// where every group of order n is generated by two elements.
pub fn brute_force_structures(a: &CosetAction) -> BTreeSet<Vec<Perm>> {
    let n = a.degree();
    assert!(n <= 7);
    let fpf: Vec<Perm> = all_perms(n)
        .into_iter()
        .filter(|p| p.is_identity() || p.is_fixed_point_free())
        .collect();
    let lambda_gens = a.lambda_group().canonical_generators();
    let mut found = BTreeSet::new();
    for (i, x) in fpf.iter().enumerate() {
        for y in &fpf[i..] {
            let Ok(nn) = PermGroup::closure(n, &[x.clone(), y.clone()], n) else {
                continue;
            };
            if nn.order() != n || !nn.is_transitive() {
                continue;
            }
            if nn.is_normalized_by(&lambda_gens) {
                found.insert(nn.elements().to_vec());
            }
        }
    }
    found
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(Perm::from_images(cur.clone()).unwrap());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn perm_strategy(max_degree: usize) -> impl Strategy<Value = Perm> {
    (1..=max_degree).prop_flat_map(perm_of_degree)
}

pub fn perm_of_degree(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

/// A pool structure moved by a random relabeling of the points.
pub fn relabeled(index: usize, seed: &[usize]) -> HGStructure {
    let pool = structure_pool();
    let s = &pool[index % pool.len()];
    let a = s.action();
    let n = a.degree();
    let mut images: Vec<usize> = (0..n).collect();
    for (i, r) in seed.iter().enumerate().take(n) {
        images.swap(i, i + r % (n - i));
    }
    let pi = Perm::from_images(images).unwrap();
    let g = a.lambda_group().conjugate_by(&pi);
    let action = Arc::new(CosetAction::from_transitive(&g, pi.apply(a.base_point())).unwrap());
    HGStructure::new(action, s.n().conjugate_by(&pi), s.label()).unwrap()
}

fn pick<'a>(items: &'a [PermGroup], r: usize) -> &'a PermGroup {
    &items[r % items.len()]
}

fn stable_list(s: &HGStructure) -> Vec<PermGroup> {
    stable_subgroups(s).unwrap().groups().cloned().collect()
}

type Case = (usize, Vec<usize>, usize, usize);

fn case_strategy() -> impl Strategy<Value = Case> {
    (any::<usize>(), prop::collection::vec(any::<usize>(), 12), any::<usize>(), any::<usize>())
}

fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    TestRunner::new(config())
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn prop_group_axioms() -> Result<(), String> {
    let s = (1usize..=12).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n), perm_of_degree(n)));
    run(s, |(a, b, c)| {
        let e = Perm::identity(a.degree());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &a.inverse(), e.clone());
        prop_assert_eq!(&a.inverse() * &a, e.clone());
        prop_assert_eq!(&a * &e, a.clone());
        prop_assert_eq!(&e * &a, a.clone());
        prop_assert!(a.pow(a.order() as i64).is_identity());
        prop_assert_eq!(parse_perm(&a.to_cycle_string(), a.degree()).unwrap(), a.clone());
        Ok(())
    })
}

pub fn prop_conjugation_preserves_cycle_type() -> Result<(), String> {
    let s = (1usize..=12).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n)));
    run(s, |(a, g)| {
        let c = a.conjugate_by(&g).unwrap();
        prop_assert_eq!(c.cycle_type(), a.cycle_type());
        prop_assert_eq!(c.order(), a.order());
        prop_assert_eq!(c.is_even(), a.is_even());
        Ok(())
    })
}

/// Injectivity and inclusion preservation of the fixed-subgroup map, and
/// `|S(N')| = |G'||N'|`.
pub fn prop_correspondence_invariants() -> Result<(), String> {
    run(case_strategy(), |(k, seed, i, j)| {
        let s = relabeled(k, &seed);
        let stable = stable_list(&s);
        let (a, b) = (pick(&stable, i), pick(&stable, j));
        let (fa, fb) = (fixed_subgroup(a, &s).unwrap(), fixed_subgroup(b, &s).unwrap());
        let gp = s.action().stabilizer().order();
        prop_assert_eq!(fa.order(), gp * a.order());
        prop_assert_eq!(fb.order(), gp * b.order());
        prop_assert!(s.action().stabilizer().is_subgroup_of(&fa));
        prop_assert_eq!(a == b, fa == fb);
        prop_assert_eq!(a.is_subgroup_of(b), fa.is_subgroup_of(&fb));
        Ok(())
    })
}

/// An odd structure has a stable even part of index 2 whose fixed subgroup
/// has index 2 in `G`.
pub fn check_parity(s: &HGStructure) -> Result<(), TestCaseError> {
    let n = s.n();
    let even: Vec<Perm> = n.elements().iter().filter(|x| x.is_even()).cloned().collect();
    prop_assert_eq!(s.is_even(), even.len() == n.order());
    if !s.is_even() {
        let e = PermGroup::from_elements(n.degree(), even).unwrap();
        prop_assert_eq!(2 * e.order(), n.order());
        prop_assert!(stable_subgroups(s).unwrap().contains(&e));
        let f = fixed_subgroup(&e, s).unwrap();
        prop_assert_eq!(2 * f.order(), s.action().source().order());
    }
    Ok(())
}

pub fn prop_parity() -> Result<(), String> {
    for s in structure_pool() {
        check_parity(s).map_err(|e| format!("{}: {e}", s.label()))?;
    }
    run((any::<usize>(), prop::collection::vec(any::<usize>(), 12)), |(k, seed)| {
        check_parity(&relabeled(k, &seed))
    })
}

pub fn prop_stable_core() -> Result<(), String> {
    run(case_strategy(), |(k, seed, i, j)| {
        let s = relabeled(k, &seed);
        let subs = all_subgroups(s.n(), DEFAULT_SUBGROUP_BOUND).unwrap();
        let stable = stable_subgroups(&s).unwrap();
        let x = pick(&subs, i);
        let y = pick(&subs, j);
        let cx = stable_core(x, &s).unwrap();
        prop_assert!(cx.is_subgroup_of(x));
        prop_assert!(stable.contains(&cx));
        prop_assert_eq!(stable_core(&cx, &s).unwrap(), cx.clone());
        prop_assert_eq!(&cx == x, stable.contains(x));
        let meet = x.intersection(y);
        let cm = stable_core(&meet, &s).unwrap();
        prop_assert!(cm.is_subgroup_of(&cx));
        prop_assert!(cm.is_subgroup_of(&stable_core(y, &s).unwrap()));
        Ok(())
    })
}

/// Galois cases over the catalog of orders at most 12, each relabeled at
/// random: `ρ(G)` hits every subgroup and `λ(G)` has exactly the normal
/// subgroups as stable subgroups.
pub fn prop_classical_oracle() -> Result<(), String> {
    let groups: Vec<PermGroup> = (1..=12)
        .flat_map(|o| catalog::catalog(o).unwrap().into_iter().map(|(_, g)| g))
        .collect();
    run((any::<usize>(), prop::collection::vec(any::<usize>(), 12)), move |(k, seed)| {
        let base = &groups[k % groups.len()];
        let n = base.degree();
        let mut images: Vec<usize> = (0..n).collect();
        for (i, r) in seed.iter().enumerate().take(n) {
            images.swap(i, i + r % (n - i));
        }
        let g = base.conjugate_by(&Perm::from_images(images).unwrap());
        let a = Arc::new(CosetAction::new(&g, &PermGroup::trivial(n)).unwrap());
        let subs = all_subgroups(&g, DEFAULT_SUBGROUP_BOUND).unwrap();

        let rho = classical_structure(&a).unwrap();
        let image: BTreeSet<Vec<Perm>> = correspondence_image(&rho)
            .unwrap()
            .groups()
            .map(|h| h.elements().to_vec())
            .collect();
        let all: BTreeSet<Vec<Perm>> = subs.iter().map(|h| h.elements().to_vec()).collect();
        prop_assert_eq!(image, all);
        prop_assert!(is_bijective_correspondence(&rho).unwrap());

        let lambda = HGStructure::new(Arc::clone(&a), a.lambda_group().clone(), "lambda").unwrap();
        let stable: BTreeSet<Vec<Perm>> = stable_subgroups(&lambda)
            .unwrap()
            .groups()
            .map(|h| h.elements().to_vec())
            .collect();
        let normal: BTreeSet<Vec<Perm>> = subs
            .iter()
            .filter(|h| is_normal(h, &g).unwrap())
            .map(|h| {
                let mut e: Vec<Perm> = h.elements().iter().map(|x| a.lambda(x).unwrap().clone()).collect();
                e.sort();
                e
            })
            .collect();
        prop_assert_eq!(stable, normal);
        Ok(())
    })
}
