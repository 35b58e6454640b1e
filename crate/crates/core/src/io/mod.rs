//! File formats, embedded datasets and synthetic complexes.

mod datasets;
mod dot;
mod format;
mod generate;

pub use datasets::{
    load_zachary, synth_hollow_bridge, zachary_bridge_removals, zachary_graph, FillPolicy,
    ZACHARY_BRIDGE_EDGES,
};
pub use dot::{export_dot, PALETTE};
pub use format::{
    format_phi, parse_complex, parse_labels, parse_triangle_list, write_assignment, write_complex,
    write_labels, write_sweep, LabelsFile,
};
pub use generate::{planted_partition, random_clique_complex};
