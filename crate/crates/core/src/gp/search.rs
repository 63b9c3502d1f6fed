//! Exhaustive search for regular subgroups normalized by `λ(G)`.
//!
//! A regular `N` is recorded as the table `T[x][y] = ν_x(y)`, where `ν_x` is
//! the unique element of `N` sending the base point to `x`. `T` is then the
//! multiplication table of `N` on the labels, so the search fills a Latin
//! square subject to associativity and to the equivariance
//! `λ(g) ν_x λ(g)⁻¹ = ν_{λ(g)ν_x(b_g)}` with `b_g = λ(g)⁻¹(ē)`.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use super::{CosetAction, GpError, HGStructure};
use crate::group::{are_isomorphic, PermGroup};
use crate::perm::Perm;

pub const DEFAULT_MAX_DEGREE: usize = 12;
pub const HARD_MAX_DEGREE: usize = 16;
pub const DEFAULT_NODE_BUDGET: u64 = 500_000_000;
pub const DEFAULT_TIME_BUDGET_MS: u64 = 600_000;

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_degree: usize,
    pub node_budget: u64,
    pub time_budget: Duration,
    /// Keep only subgroups isomorphic to this group.
    pub iso_filter: Option<PermGroup>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_degree: DEFAULT_MAX_DEGREE,
            node_budget: DEFAULT_NODE_BUDGET,
            time_budget: Duration::from_millis(DEFAULT_TIME_BUDGET_MS),
            iso_filter: None,
        }
    }
}

impl SearchConfig {
    /// Defaults, with the time budget taken from `HGX_BUDGET_MS` when set.
    pub fn from_env() -> Self {
        let mut c = Self::default();
        if let Some(ms) = std::env::var("HGX_BUDGET_MS")
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            c.time_budget = Duration::from_millis(ms);
        }
        c
    }

    pub fn with_filter(mut self, g: PermGroup) -> Self {
        self.iso_filter = Some(g);
        self
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Sorted by the element set of `N`.
    pub structures: Vec<HGStructure>,
    pub nodes: u64,
    pub elapsed: Duration,
}

const NONE: u8 = u8::MAX;

#[derive(Clone)]
struct State {
    n: usize,
    dom: Vec<u32>,
    val: Vec<u8>,
    // rowinv[x * n + v] = y with T[x][y] = v
    rowinv: Vec<u8>,
    row_known: Vec<u8>,
    order_count: BTreeMap<usize, usize>,
}

struct Ctx<'a> {
    n: usize,
    base: usize,
    // (g, b_g) for every element of λ(G)
    lambda: Vec<(Vec<u8>, usize)>,
    hist: Option<&'a BTreeMap<usize, usize>>,
    nodes: u64,
    node_budget: u64,
    deadline: Instant,
    exhausted: bool,
    found: Vec<Vec<Vec<u8>>>,
}

impl State {
    fn new(n: usize) -> State {
        State {
            n,
            dom: vec![(1u32 << n) - 1; n * n],
            val: vec![NONE; n * n],
            rowinv: vec![NONE; n * n],
            row_known: vec![0; n],
            order_count: BTreeMap::new(),
        }
    }

    fn get(&self, x: usize, y: usize) -> Option<usize> {
        let v = self.val[x * self.n + y];
        (v != NONE).then_some(v as usize)
    }
}

impl Ctx<'_> {
    /// Assigns `T[x][y] = v` and propagates; false on contradiction.
    fn assign(&self, st: &mut State, x: usize, y: usize, v: usize) -> bool {
        let mut queue = vec![(x, y, v)];
        while let Some((x, y, v)) = queue.pop() {
            let n = self.n;
            let cell = x * n + y;
            match st.get(x, y) {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {}
            }
            if st.dom[cell] & (1 << v) == 0 {
                return false;
            }
            st.val[cell] = v as u8;
            st.dom[cell] = 1 << v;
            st.rowinv[x * n + v] = y as u8;
            // Latin square
            for z in 0..n {
                if z != y && st.val[x * n + z] == NONE && !self.remove(st, x, z, v, &mut queue) {
                    return false;
                }
                if z != x && st.val[z * n + y] == NONE && !self.remove(st, z, y, v, &mut queue) {
                    return false;
                }
            }
            st.row_known[x] += 1;
            if st.row_known[x] as usize == n && !self.row_complete(st, x) {
                return false;
            }
            if !self.associativity(st, x, y, v, &mut queue) || !self.equivariance(st, x, y, v, &mut queue) {
                return false;
            }
        }
        true
    }

    fn remove(&self, st: &mut State, x: usize, y: usize, v: usize, queue: &mut Vec<(usize, usize, usize)>) -> bool {
        let cell = x * self.n + y;
        if st.dom[cell] & (1 << v) == 0 {
            return true;
        }
        st.dom[cell] &= !(1 << v);
        match st.dom[cell].count_ones() {
            0 => false,
            1 => {
                queue.push((x, y, st.dom[cell].trailing_zeros() as usize));
                true
            }
            _ => true,
        }
    }

    fn row_complete(&self, st: &mut State, x: usize) -> bool {
        let Some(hist) = self.hist else { return true };
        let row = &st.val[x * self.n..(x + 1) * self.n];
        let mut seen = 0usize;
        let mut y = self.base;
        loop {
            y = row[y] as usize;
            seen += 1;
            if y == self.base {
                break;
            }
        }
        let c = st.order_count.entry(seen).or_insert(0);
        *c += 1;
        *c <= hist.get(&seen).copied().unwrap_or(0)
    }

    /// Requires `a` and `b` to take equal values once either is known.
    fn equate(
        &self,
        st: &State,
        a: (usize, usize),
        b: (usize, usize),
        queue: &mut Vec<(usize, usize, usize)>,
    ) -> bool {
        match (st.get(a.0, a.1), st.get(b.0, b.1)) {
            (Some(u), Some(w)) => u == w,
            (Some(u), None) => {
                queue.push((b.0, b.1, u));
                true
            }
            (None, Some(w)) => {
                queue.push((a.0, a.1, w));
                true
            }
            (None, None) => true,
        }
    }

    /// `T[T[p][q]][r] = T[p][T[q][r]]` for every equation the new cell
    /// `T[x][y] = v` takes part in.
    fn associativity(&self, st: &State, x: usize, y: usize, v: usize, queue: &mut Vec<(usize, usize, usize)>) -> bool {
        let n = self.n;
        for z in 0..n {
            // as T[p][q] with p = x, q = y
            if let Some(w) = st.get(y, z) {
                if !self.equate(st, (v, z), (x, w), queue) {
                    return false;
                }
            }
            // as T[q][r] with q = x, r = y
            if let Some(u) = st.get(z, x) {
                if !self.equate(st, (u, y), (z, v), queue) {
                    return false;
                }
            }
            // as T[T[p][q]][r] with T[p][q] = x
            let q = st.rowinv[z * n + x];
            if q != NONE {
                if let Some(w) = st.get(q as usize, y) {
                    if !self.equate(st, (z, w), (x, y), queue) {
                        return false;
                    }
                }
            }
            // as T[p][T[q][r]] with T[q][r] = y
            let r = st.rowinv[z * n + y];
            if r != NONE {
                if let Some(u) = st.get(x, z) {
                    if !self.equate(st, (u, r as usize), (x, y), queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `T[g(c)][g(w)] = g(T[x][w])` where `c = T[x][b_g]`.
    fn equivariance(&self, st: &State, x: usize, y: usize, v: usize, queue: &mut Vec<(usize, usize, usize)>) -> bool {
        let n = self.n;
        for (g, b) in &self.lambda {
            let g = |i: usize| g[i] as usize;
            if y == *b {
                let c = g(v);
                for w in 0..n {
                    if let Some(u) = st.get(x, w) {
                        let cell = (c, g(w));
                        match st.get(cell.0, cell.1) {
                            Some(t) if t != g(u) => return false,
                            Some(_) => {}
                            None => queue.push((cell.0, cell.1, g(u))),
                        }
                    }
                }
            } else if let Some(c) = st.get(x, *b) {
                let cell = (g(c), g(y));
                match st.get(cell.0, cell.1) {
                    Some(t) if t != g(v) => return false,
                    Some(_) => {}
                    None => queue.push((cell.0, cell.1, g(v))),
                }
            }
        }
        true
    }

    fn search(&mut self, st: State) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_budget || (self.nodes % 1024 == 0 && Instant::now() > self.deadline) {
            self.exhausted = true;
            return;
        }
        let n = self.n;
        let mut best: Option<(u32, usize)> = None;
        for cell in 0..n * n {
            if st.val[cell] == NONE {
                let k = st.dom[cell].count_ones();
                if best.map_or(true, |(bk, _)| k < bk) {
                    best = Some((k, cell));
                }
            }
        }
        let Some((_, cell)) = best else {
            self.found.push(
                (0..n)
                    .map(|x| st.val[x * n..(x + 1) * n].to_vec())
                    .collect(),
            );
            return;
        };
        let mut dom = st.dom[cell];
        while dom != 0 {
            let v = dom.trailing_zeros() as usize;
            dom &= dom - 1;
            let mut next = st.clone();
            if self.assign(&mut next, cell / n, cell % n, v) {
                self.search(next);
            }
        }
    }
}

/// Every regular `N ≤ Perm(G/G')` normalized by `λ(G)`, optionally only
/// those isomorphic to `config.iso_filter`.
///
/// Fails with [`GpError::Incomplete`] rather than return a partial list.
pub fn enumerate_regular_normalized(
    action: &Arc<CosetAction>,
    config: &SearchConfig,
) -> Result<SearchOutcome, GpError> {
    let n = action.degree();
    let bound = config.max_degree.min(HARD_MAX_DEGREE);
    if n > bound {
        return Err(GpError::DegreeTooLarge { degree: n, bound });
    }
    let start = Instant::now();
    let hist = config.iso_filter.as_ref().map(|f| {
        let mut h = BTreeMap::new();
        for e in f.elements() {
            *h.entry(e.order() as usize).or_insert(0) += 1;
        }
        h
    });
    if let Some(f) = &config.iso_filter {
        if f.order() != n {
            return Ok(SearchOutcome {
                structures: Vec::new(),
                nodes: 0,
                elapsed: start.elapsed(),
            });
        }
    }
    let base = action.base_point();
    let lambda = action
        .lambda_group()
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .map(|g| {
            let images: Vec<u8> = g.images().map(|i| i as u8).collect();
            (images, g.inverse().apply(base))
        })
        .collect();
    let mut ctx = Ctx {
        n,
        base,
        lambda,
        hist: hist.as_ref(),
        nodes: 0,
        node_budget: config.node_budget,
        deadline: start + config.time_budget,
        exhausted: false,
        found: Vec::new(),
    };
    let mut st = State::new(n);
    let mut ok = true;
    for y in 0..n {
        ok = ok && ctx.assign(&mut st, base, y, y) && ctx.assign(&mut st, y, base, y);
    }
    if ok {
        ctx.search(st);
    }
    if ctx.exhausted {
        return Err(GpError::Incomplete {
            nodes: ctx.nodes,
            found: ctx.found.len(),
        });
    }
    let mut groups = Vec::new();
    for table in &ctx.found {
        let mut elems: Vec<Perm> = table
            .iter()
            .map(|row| Perm::from_images(row.iter().map(|&v| v as usize).collect()))
            .collect::<Result<_, _>>()
            .map_err(|_| GpError::Invariant("search produced a non-bijective row"))?;
        elems.sort();
        let Ok(g) = PermGroup::from_elements(n, elems) else {
            continue;
        };
        if !g.is_normalized_by(action.lambda_group().generators()) {
            continue;
        }
        if let Some(f) = &config.iso_filter {
            if !are_isomorphic(&g, f, n.max(1))? {
                continue;
            }
        }
        groups.push(g);
    }
    groups.sort();
    groups.dedup();
    let structures = groups
        .into_iter()
        .enumerate()
        .map(|(i, g)| HGStructure::new(action.clone(), g, format!("found-{}", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SearchOutcome {
        structures,
        nodes: ctx.nodes,
        elapsed: start.elapsed(),
    })
}
