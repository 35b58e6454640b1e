use std::fmt::Write;

use crate::cluster::Partition;
use crate::complex::SimplicialComplex;

/// Fill colors by cluster label; labels past the end wrap around.
pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

/// GraphViz text for a clustered complex. Nodes missing from `partition` are
/// drawn white. Filled triangles appear as `// t u v w` comments.
pub fn export_dot(x: &SimplicialComplex, partition: &Partition) -> String {
    let mut out = String::from("graph G {\n  node [style=filled];\n");
    for &v in x.nodes() {
        let color = partition
            .label(v)
            .map_or("#ffffff", |l| PALETTE[l % PALETTE.len()]);
        writeln!(out, "  {v} [fillcolor=\"{color}\"];").unwrap();
    }
    for [u, v] in x.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    for [u, v, w] in x.triangles() {
        writeln!(out, "  // t {u} {v} {w}").unwrap();
    }
    out.push_str("}\n");
    out
}
