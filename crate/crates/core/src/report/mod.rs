//! Serializable reports for the case studies and ad-hoc analyses, with text,
//! JSON and DOT renderings. Every collection is ordered, so identical inputs
//! render to identical bytes.

mod dot;
mod text;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::families::{CounterexampleContext, DihedralContext, FrobeniusContext};
use crate::gp::{
    correspondence_image, intermediate_subgroups, is_almost_classically_galois,
    is_bijective_correspondence, is_regular, lattice_profile_match, normalizes,
    stable_order2_involutions, stable_subgroups, CosetAction, GpError, HGStructure, SearchOutcome,
    SubgroupLattice,
};
use crate::group::{catalog, PermGroup};

pub use dot::render_dot;
pub use text::render_text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportOptions {
    /// Include full element lists for every subgroup.
    pub verbose: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(u64),
    Text(String),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(i) => write!(f, "{i}"),
            Value::Text(s) => write!(f, "{s}"),
        }
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<usize> for Value {
    fn from(i: usize) -> Self {
        Value::Int(i as u64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupReport {
    pub order: usize,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub nodes: Vec<SubgroupReport>,
    /// Hasse diagram: `[i, j]` when node `i` is covered by node `j`.
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub generators: Vec<String>,
    pub stabilizer: SubgroupReport,
    pub action_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub label: String,
    pub iso_type: String,
    pub order: usize,
    pub generators: Vec<String>,
    pub regular: bool,
    pub normalized: bool,
    pub even: bool,
    pub stable_subgroups: LatticeReport,
    pub bijective: bool,
    pub image: LatticeReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileReport {
    pub name: String,
    pub counting: bool,
    pub embedding: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_filter: Option<String>,
    pub structures_found: usize,
    pub bijective_found: usize,
    pub by_type: BTreeMap<String, usize>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Timings {
    pub total_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub group: GroupSummary,
    pub facts: Vec<Fact>,
    pub intermediate: LatticeReport,
    pub profiles: Vec<ProfileReport>,
    pub structures: Vec<StructureReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl Report {
    /// Pretty JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn fact(&self, key: &str) -> Option<&Value> {
        self.facts.iter().find(|f| f.key == key).map(|f| &f.value)
    }

    fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.facts.push(Fact {
            key: key.to_string(),
            value: value.into(),
        });
    }
}

pub fn subgroup_report(g: &PermGroup, origin: Option<usize>, opts: ReportOptions) -> SubgroupReport {
    SubgroupReport {
        order: g.order(),
        generators: g.generator_strings(),
        elements: opts
            .verbose
            .then(|| g.elements().iter().map(|e| e.to_cycle_string()).collect()),
        origin,
    }
}

pub fn lattice_report(l: &SubgroupLattice, opts: ReportOptions) -> LatticeReport {
    LatticeReport {
        nodes: l
            .nodes
            .iter()
            .map(|n| subgroup_report(&n.group, n.origin, opts))
            .collect(),
        edges: l.edges.iter().map(|&(i, j)| [i, j]).collect(),
    }
}

pub fn structure_report(s: &HGStructure, opts: ReportOptions) -> Result<StructureReport, GpError> {
    Ok(StructureReport {
        label: s.label().to_string(),
        iso_type: s.iso_type().display_name(),
        order: s.n().order(),
        generators: s.n().generator_strings(),
        regular: is_regular(s.n()),
        normalized: normalizes(s.action().lambda_group(), s.n())?,
        even: s.is_even(),
        stable_subgroups: lattice_report(stable_subgroups(s)?, opts),
        bijective: is_bijective_correspondence(s)?,
        image: lattice_report(&correspondence_image(s)?, opts),
    })
}

pub fn search_report(outcome: &SearchOutcome, filter: Option<String>) -> Result<SearchReport, GpError> {
    let mut by_type = BTreeMap::new();
    let mut bijective_found = 0;
    for s in &outcome.structures {
        *by_type.entry(s.iso_type().display_name()).or_insert(0) += 1;
        if is_bijective_correspondence(s)? {
            bijective_found += 1;
        }
    }
    Ok(SearchReport {
        complete: true,
        iso_filter: filter,
        structures_found: outcome.structures.len(),
        bijective_found,
        by_type,
        nodes: outcome.nodes,
    })
}

/// The report skeleton shared by every command: `G`, `G'`, the
/// intermediate subgroups and the almost-classically-Galois verdict.
pub fn base_report(command: &str, a: &CosetAction, opts: ReportOptions) -> Result<Report, GpError> {
    let g = a.source();
    let name = if g.order() <= 100 { catalog::name_of(g) } else { None };
    let mut r = Report {
        command: command.to_string(),
        parameters: BTreeMap::new(),
        group: GroupSummary {
            order: g.order(),
            degree: g.degree(),
            name,
            generators: g.generator_strings(),
            stabilizer: subgroup_report(a.stabilizer(), None, opts),
            action_degree: a.degree(),
        },
        facts: Vec::new(),
        intermediate: lattice_report(intermediate_subgroups(a)?, opts),
        profiles: Vec::new(),
        structures: Vec::new(),
        search: None,
        timings: None,
    };
    r.push("almost classically Galois", is_almost_classically_galois(a)?);
    let inter = intermediate_subgroups(a)?;
    r.push("intermediate subgroups", inter.len());
    let profile: Vec<String> = inter
        .count_by_order()
        .iter()
        .map(|(o, k)| format!("{o}:{k}"))
        .collect();
    r.push("intermediate subgroups by order", profile.join(" "));
    Ok(r)
}

pub fn frobenius_report(ctx: &FrobeniusContext, opts: ReportOptions) -> Result<Report, GpError> {
    let mut r = base_report("frobenius", &ctx.action, opts)?;
    r.parameters.insert("p".into(), ctx.p.into());
    r.parameters.insert("d".into(), ctx.d.into());
    r.parameters.insert("zeta".into(), ctx.zeta.into());
    let g = crate::perm::gcd(((ctx.p - 1) / ctx.d) as u64, ctx.d as u64) as usize;
    r.push("gcd((p-1)/d, d)", g);
    r.push("gcd criterion", g == 1);
    r.push("sigma2 tau1 sigma2^-1 = tau1^k1, k1", ctx.k1);
    r.push("sigma2 tau sigma2^-1 = tau^k, k", ctx.k);
    for s in [&ctx.n1, &ctx.n2] {
        r.structures.push(structure_report(s, opts)?);
    }
    let all = r.structures.iter().all(|s| s.bijective);
    r.push("all structures bijective", all);
    Ok(r)
}

pub fn dihedral_report(
    ctx: &DihedralContext,
    search: Option<&SearchOutcome>,
    opts: ReportOptions,
) -> Result<Report, GpError> {
    let mut r = base_report("dihedral", &ctx.action, opts)?;
    r.parameters.insert("p".into(), ctx.p.into());
    r.push("structures", ctx.structures.len());
    let mut images = Vec::new();
    for s in &ctx.structures {
        r.structures.push(structure_report(s, opts)?);
        images.push(correspondence_image(s)?);
    }
    let distinct = (0..images.len()).all(|i| {
        (i + 1..images.len()).all(|j| {
            images[i].groups().collect::<Vec<_>>() != images[j].groups().collect::<Vec<_>>()
        })
    });
    r.push("pairwise distinct images", distinct);
    if let Some(out) = search {
        r.push("structures found", out.structures.len());
        r.search = Some(search_report(out, None)?);
    }
    Ok(r)
}

/// The order-12 catalog checked against the intermediate lattice.
pub fn profile_reports(a: &CosetAction) -> Result<Vec<ProfileReport>, GpError> {
    let target = intermediate_subgroups(a)?;
    let order = a.degree();
    let mut out = Vec::new();
    for (id, m) in catalog::catalog(order)? {
        let pm = lattice_profile_match(&m, target)?;
        out.push(ProfileReport {
            name: id.display_name(),
            counting: pm.counting,
            embedding: pm.embedding,
        });
    }
    Ok(out)
}

pub fn counterexample_report(
    ctx: &CounterexampleContext,
    search: Option<&SearchOutcome>,
    opts: ReportOptions,
) -> Result<Report, GpError> {
    let mut r = base_report("counterexample", &ctx.action, opts)?;
    r.parameters
        .insert("polynomial".into(), ctx.polynomial.into());
    let involutions = stable_order2_involutions(&ctx.action);
    r.push("stable involutions", involutions.len());
    r.push("pairwise commuting", ctx.pairwise_commuting());
    r.push("some involution commutes with the other two", ctx.some_omega_central());
    r.structures.push(structure_report(&ctx.n, opts)?);
    r.profiles = profile_reports(&ctx.action)?;
    if let Some(out) = search {
        let sr = search_report(out, None)?;
        r.push("structures found", sr.structures_found);
        r.push("bijective structures found", sr.bijective_found);
        r.structures = out
            .structures
            .iter()
            .map(|s| structure_report(s, opts))
            .collect::<Result<_, _>>()?;
        r.search = Some(sr);
    }
    Ok(r)
}

pub fn analyze_report(
    a: &CosetAction,
    search: Option<&SearchOutcome>,
    opts: ReportOptions,
) -> Result<Report, GpError> {
    let mut r = base_report("analyze", a, opts)?;
    if let Some(out) = search {
        let sr = search_report(out, None)?;
        r.push("structures found", sr.structures_found);
        r.push("bijective structures found", sr.bijective_found);
        r.structures = out
            .structures
            .iter()
            .map(|s| structure_report(s, opts))
            .collect::<Result<_, _>>()?;
        r.search = Some(sr);
    }
    Ok(r)
}

/// Marks a report whose search ran out of budget.
pub fn mark_incomplete(r: &mut Report, nodes: u64, found: usize) {
    r.push("search", "incomplete");
    r.search = Some(SearchReport {
        complete: false,
        iso_filter: None,
        structures_found: found,
        bijective_found: 0,
        by_type: BTreeMap::new(),
        nodes,
    });
}
