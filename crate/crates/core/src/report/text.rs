use std::fmt::Write;

use super::{LatticeReport, Report, SubgroupReport};

fn subgroup_line(s: &SubgroupReport) -> String {
    let gens = if s.generators.is_empty() {
        "()".to_string()
    } else {
        s.generators.join(", ")
    };
    format!("order {}: <{}>", s.order, gens)
}

fn lattice(out: &mut String, l: &LatticeReport, indent: &str) {
    for (i, n) in l.nodes.iter().enumerate() {
        let origin = n
            .origin
            .map(|o| format!(" from stable #{o}"))
            .unwrap_or_default();
        let _ = writeln!(out, "{indent}#{i} {}{origin}", subgroup_line(n));
        if let Some(elems) = &n.elements {
            let _ = writeln!(out, "{indent}   elements: {}", elems.join(" "));
        }
    }
    if !l.edges.is_empty() {
        let edges: Vec<String> = l.edges.iter().map(|[i, j]| format!("{i}<{j}")).collect();
        let _ = writeln!(out, "{indent}covers: {}", edges.join(" "));
    }
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", r.command);
    for (k, v) in &r.parameters {
        let _ = writeln!(out, "{k}: {v}");
    }
    let g = &r.group;
    let name = g.name.as_deref().map(|n| format!(" ({n})")).unwrap_or_default();
    let _ = writeln!(out, "G: order {}{name} on {} points", g.order, g.degree);
    let _ = writeln!(out, "G generators: {}", g.generators.join(", "));
    let _ = writeln!(out, "G': {}", subgroup_line(&g.stabilizer));
    let _ = writeln!(out, "degree [G:G']: {}", g.action_degree);
    for f in &r.facts {
        let _ = writeln!(out, "{}: {}", f.key, f.value);
    }
    let _ = writeln!(out, "subgroups of G containing G':");
    lattice(&mut out, &r.intermediate, "  ");
    if !r.profiles.is_empty() {
        let _ = writeln!(out, "order-{} candidates:", r.group.action_degree);
        for p in &r.profiles {
            let _ = writeln!(
                out,
                "  {}: counting {}, embedding {}",
                p.name, p.counting, p.embedding
            );
        }
    }
    for s in &r.structures {
        let _ = writeln!(out, "structure {} ({}, order {})", s.label, s.iso_type, s.order);
        let _ = writeln!(out, "  generators: {}", s.generators.join(", "));
        let _ = writeln!(out, "  regular: {}", s.regular);
        let _ = writeln!(out, "  normalized: {}", s.normalized);
        let _ = writeln!(out, "  even: {}", s.even);
        let _ = writeln!(out, "  stable subgroups: {}", s.stable_subgroups.nodes.len());
        lattice(&mut out, &s.stable_subgroups, "    ");
        let _ = writeln!(out, "  bijective: {}", s.bijective);
        let _ = writeln!(out, "  image: {}", s.image.nodes.len());
        lattice(&mut out, &s.image, "    ");
    }
    if let Some(sr) = &r.search {
        let status = if sr.complete { "complete" } else { "incomplete" };
        let _ = writeln!(out, "search: {status}, {} nodes", sr.nodes);
        for (t, k) in &sr.by_type {
            let _ = writeln!(out, "  {t}: {k}");
        }
    }
    if let Some(t) = &r.timings {
        let _ = write!(out, "time: {} ms", t.total_ms);
        if let Some(s) = t.search_ms {
            let _ = write!(out, " (search {s} ms)");
        }
        out.push('\n');
    }
    out
}
