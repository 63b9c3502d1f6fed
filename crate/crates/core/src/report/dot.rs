use std::collections::BTreeMap;
use std::fmt::Write;

use super::{LatticeReport, Report};

/// Node ids are `o<order>_g<k>`, `k` counting nodes of that order across the
/// whole document.
#[derive(Default)]
struct Ids(BTreeMap<usize, usize>);

impl Ids {
    fn next(&mut self, order: usize) -> String {
        let k = self.0.entry(order).or_insert(0);
        let id = format!("o{order}_g{k}");
        *k += 1;
        id
    }
}

fn cluster(out: &mut String, ids: &mut Ids, name: &str, label: &str, l: &LatticeReport) -> Vec<String> {
    let names: Vec<String> = l.nodes.iter().map(|n| ids.next(n.order)).collect();
    let _ = writeln!(out, "  subgraph cluster_{name} {{");
    let _ = writeln!(out, "    label=\"{}\";", escape(label));
    for (id, n) in names.iter().zip(&l.nodes) {
        let gens = if n.generators.is_empty() {
            "()".to_string()
        } else {
            n.generators.join("\\n")
        };
        let _ = writeln!(out, "    {id} [label=\"{}\\n{}\"];", n.order, escape(&gens));
    }
    for [i, j] in &l.edges {
        let _ = writeln!(out, "    {} -> {};", names[*i], names[*j]);
    }
    let _ = writeln!(out, "  }}");
    names
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

/// Hasse diagrams as a DOT digraph: one cluster for the subgroups of `G`
/// containing `G'`, one per structure for its stable subgroups, and dashed
/// edges from each stable subgroup to its fixed subgroup.
pub fn render_dot(r: &Report) -> String {
    let mut out = String::new();
    let mut ids = Ids::default();
    let _ = writeln!(out, "digraph hgx {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    let inter = cluster(
        &mut out,
        &mut ids,
        "intermediate",
        "subgroups of G containing G'",
        &r.intermediate,
    );
    for (k, s) in r.structures.iter().enumerate() {
        let label = format!("{} ({})", s.label, s.iso_type);
        let stable = cluster(&mut out, &mut ids, &format!("s{k}"), &label, &s.stable_subgroups);
        for img in &s.image.nodes {
            let Some(o) = img.origin else { continue };
            let target = r
                .intermediate
                .nodes
                .iter()
                .position(|n| n.order == img.order && n.generators == img.generators);
            if let Some(t) = target {
                let _ = writeln!(out, "  {} -> {} [style=dashed];", stable[o], inter[t]);
            }
        }
    }
    let _ = writeln!(out, "}}");
    out
}
