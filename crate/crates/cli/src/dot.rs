//! DOT text export.

use metamour_core::Graph;
use std::fmt::Write;

/// Undirected DOT with node ids 0..n-1 and optional display labels.
pub fn export_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        match labels {
            Some(names) => writeln!(out, "  {v} [label=\"{}\"];", names[v]).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push('}');
    out.push('\n');
    out
}

/// Plain edge list: header line `n edge_count`, then one edge per line.
pub fn export_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
