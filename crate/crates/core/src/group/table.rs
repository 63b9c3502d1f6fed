//! Index-space view of a materialized group: elements are addressed by their
//! position in the canonical element list and products come from a full
//! multiplication table. Subgroups are bitsets over those positions.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::perm::Perm;

pub(crate) type ElemSet = FixedBitSet;

pub(crate) struct Table {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_orders: Vec<u32>,
}

/// Points whose images separate all elements, plus the lookup keyed by those
/// images.
pub(crate) struct BaseIndex {
    base: Vec<usize>,
    lookup: HashMap<Vec<u32>, usize>,
}

impl BaseIndex {
    pub(crate) fn new(elements: &[Perm]) -> BaseIndex {
        let degree = elements.first().map_or(1, Perm::degree);
        let mut base = Vec::new();
        let mut classes = 1usize;
        for x in 0..degree {
            if classes == elements.len() {
                break;
            }
            let mut trial = base.clone();
            trial.push(x);
            let distinct: HashSet<Vec<usize>> = elements
                .iter()
                .map(|g| trial.iter().map(|&b| g.apply(b)).collect())
                .collect();
            if distinct.len() > classes {
                classes = distinct.len();
                base = trial;
            }
        }
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (base.iter().map(|&b| g.apply(b) as u32).collect(), i))
            .collect();
        BaseIndex { base, lookup }
    }

    pub(crate) fn index_of_product(&self, a: &Perm, b: &Perm) -> Option<usize> {
        let key: Vec<u32> = self
            .base
            .iter()
            .map(|&x| a.apply(b.apply(x)) as u32)
            .collect();
        self.lookup.get(&key).copied()
    }
}

impl Table {
    /// `elements` must be a group in canonical order (identity first).
    pub(crate) fn new(elements: &[Perm]) -> Table {
        let order = elements.len();
        let index = BaseIndex::new(elements);
        let mut mul = vec![0u32; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * order + j] = index
                    .index_of_product(a, b)
                    .expect("element set is not closed under composition")
                    as u32;
            }
        }
        let mut inv = vec![0u32; order];
        for i in 0..order {
            for j in 0..order {
                if mul[i * order + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        let mut elem_orders = vec![1u32; order];
        for (i, o) in elem_orders.iter_mut().enumerate() {
            let mut x = i;
            while x != 0 {
                x = mul[x * order + i] as usize;
                *o += 1;
            }
        }
        Table {
            order,
            mul,
            inv,
            elem_orders,
        }
    }

    #[inline]
    pub(crate) fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub(crate) fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub(crate) fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub(crate) fn elem_order(&self, a: usize) -> usize {
        self.elem_orders[a] as usize
    }

    pub(crate) fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.order)
    }

    /// Subgroup generated by `gens`.
    pub(crate) fn generate(&self, gens: &[usize]) -> ElemSet {
        let mut set = self.empty_set();
        set.insert(0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(g, x);
                if !set.contains(y) {
                    set.insert(y);
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Smallest subgroup containing `a` and `b`, both given as subgroups.
    pub(crate) fn join(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let gens: Vec<usize> = a.ones().chain(b.ones()).collect();
        // the generated set already contains both, so start from their union
        let mut set = a.clone();
        set.union_with(b);
        let mut frontier: Vec<usize> = set.ones().collect();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.mul(g, x);
                if !set.contains(y) {
                    set.insert(y);
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub(crate) fn cyclic(&self, a: usize) -> ElemSet {
        let mut set = self.empty_set();
        let mut x = 0;
        loop {
            set.insert(x);
            x = self.mul(a, x);
            if x == 0 {
                break;
            }
        }
        set
    }

    pub(crate) fn is_normal(&self, set: &ElemSet, in_group: &ElemSet) -> bool {
        in_group.ones().all(|g| {
            let gi = self.inv(g);
            set.ones().all(|x| set.contains(self.mul(self.mul(g, x), gi)))
        })
    }

    /// Every subgroup of the whole group, as element sets in no particular order.
    ///
    /// Starts from the cyclic subgroups and closes under joins with cyclic
    /// subgroups; every subgroup is a join of the cyclic subgroups it contains,
    /// so the closure is complete.
    pub(crate) fn all_subgroups(&self) -> Vec<ElemSet> {
        let mut cyclics: Vec<ElemSet> = Vec::new();
        let mut seen: HashSet<ElemSet> = HashSet::new();
        for a in 0..self.order {
            let c = self.cyclic(a);
            if seen.insert(c.clone()) {
                cyclics.push(c);
            }
        }
        let mut all: Vec<ElemSet> = cyclics.clone();
        let mut i = 0;
        while i < all.len() {
            let h = all[i].clone();
            for c in &cyclics {
                if c.is_subset(&h) {
                    continue;
                }
                let j = self.join(&h, c);
                if seen.insert(j.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all
    }

    /// Every subgroup containing `base`, as element sets in no particular order.
    pub(crate) fn overgroups(&self, base: &ElemSet) -> Vec<ElemSet> {
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut steps: Vec<ElemSet> = Vec::new();
        for a in 0..self.order {
            if !base.contains(a) {
                let c = self.cyclic(a);
                if seen.insert(c.clone()) {
                    steps.push(c);
                }
            }
        }
        seen.clear();
        seen.insert(base.clone());
        let mut all = vec![base.clone()];
        let mut i = 0;
        while i < all.len() {
            let h = all[i].clone();
            for c in &steps {
                if c.is_subset(&h) {
                    continue;
                }
                let j = self.join(&h, c);
                if seen.insert(j.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all
    }

    /// Greedy generating set for `set`: scan candidates by decreasing element
    /// order (ties by index) and keep those not yet generated.
    pub(crate) fn small_generating_set(&self, set: &ElemSet) -> Vec<usize> {
        let mut candidates: Vec<usize> = set.ones().filter(|&x| x != 0).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.elem_order(x)), x));
        let mut gens = Vec::new();
        let mut span = self.generate(&[]);
        for x in candidates {
            if span.count_ones(..) == set.count_ones(..) {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.generate(&gens);
            }
        }
        gens
    }
}
