//! Text formats.
//!
//! Complex files (`.scx`) are line records: `n <id>`, `e <u> <v>` and
//! `t <u> <v> <w>`, with `#` comments and an optional `%autoclose` directive
//! that adds missing faces. Label files are CSV with a `node,label` header.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::cluster::{Partition, SweepProfile};
use crate::complex::{NodeId, SimplicialComplex};
use crate::error::{Error, Result};

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn parse_ids<const K: usize>(line: usize, fields: &[&str]) -> Result<[NodeId; K]> {
    if fields.len() != K {
        return Err(parse_err(
            line,
            format!("expected {K} node ids, found {}", fields.len()),
        ));
    }
    let mut ids = [0; K];
    for (slot, f) in ids.iter_mut().zip(fields) {
        *slot = f
            .parse::<NodeId>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| parse_err(line, format!("`{f}` is not a positive integer id")))?;
    }
    Ok(ids)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut auto_close = false;
    let (mut nodes, mut edges, mut tris) = (Vec::new(), Vec::new(), Vec::new());
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if content.starts_with('%') {
            match content {
                "%autoclose" => auto_close = true,
                other => return Err(parse_err(line, format!("unknown directive `{other}`"))),
            }
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "n" => nodes.push(parse_ids::<1>(line, &fields[1..])?[0]),
            "e" => edges.push(parse_ids::<2>(line, &fields[1..])?),
            "t" => tris.push(parse_ids::<3>(line, &fields[1..])?),
            other => return Err(parse_err(line, format!("unknown record `{other}`"))),
        }
    }
    SimplicialComplex::new(nodes, edges, tris, auto_close)
}

/// Canonical complex file: header comment, then nodes, edges and triangles
/// in sorted order.
pub fn write_complex(x: &SimplicialComplex) -> String {
    let (n0, n1, n2) = x.counts();
    let mut out = format!("# simplicial complex: {n0} nodes, {n1} edges, {n2} filled triangles\n");
    for v in x.nodes() {
        writeln!(out, "n {v}").unwrap();
    }
    for [u, v] in x.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    for [u, v, w] in x.triangles() {
        writeln!(out, "t {u} {v} {w}").unwrap();
    }
    out
}

/// Triangle list for removals: one triple per line, written either as
/// `t u v w` or `u v w`. Comments and blank lines are skipped.
pub fn parse_triangle_list(text: &str) -> Result<Vec<[NodeId; 3]>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields: Vec<&str> = content.split_whitespace().collect();
        if fields[0] == "t" {
            fields.remove(0);
        }
        out.push(parse_ids::<3>(i + 1, &fields)?);
    }
    Ok(out)
}

/// Node labels as written in a CSV file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelsFile {
    /// Sorted by node id.
    pub rows: Vec<(NodeId, String)>,
}

impl LabelsFile {
    pub fn to_partition(&self) -> Partition {
        Partition::from_raw(self.rows.iter().map(|(n, l)| (*n, l.clone())))
    }

    pub fn from_partition(p: &Partition) -> Self {
        Self {
            rows: p
                .labels()
                .iter()
                .map(|(&n, l)| (n, l.to_string()))
                .collect(),
        }
    }
}

/// Reads a two-column CSV with a header row (`node,label` or
/// `node,cluster`). Labels are arbitrary strings.
pub fn parse_labels(text: &str) -> Result<LabelsFile> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::Headers)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .clone();
    if headers.len() != 2 || &headers[0] != "node" {
        return Err(parse_err(1, "header must be `node,label`"));
    }
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(|e| parse_err(line, e.to_string()))?;
        if record.len() != 2 {
            return Err(parse_err(line, "expected two fields"));
        }
        let [node] = parse_ids::<1>(line, &[record[0].trim()])?;
        if !seen.insert(node) {
            return Err(parse_err(line, format!("node {node} listed twice")));
        }
        rows.push((node, record[1].to_string()));
    }
    rows.sort();
    Ok(LabelsFile { rows })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// `node,label` CSV; labels are always double-quoted.
pub fn write_labels(labels: &LabelsFile) -> String {
    let mut out = String::from("node,label\n");
    for (n, l) in &labels.rows {
        writeln!(out, "{n},{}", quote(l)).unwrap();
    }
    out
}

/// `node,cluster` CSV of a partition.
pub fn write_assignment(p: &Partition) -> String {
    let mut out = String::from("node,cluster\n");
    for (n, l) in p.labels() {
        writeln!(out, "{n},{l}").unwrap();
    }
    out
}

/// Shortest decimal that round-trips the conductance as `f64`.
pub fn format_phi(phi: f64) -> String {
    format!("{phi}")
}

/// `k,node,phi` CSV of a sweep, one row per proper prefix. Prefixes with a
/// zero-volume side have `phi` = `NA`.
pub fn write_sweep(profile: &SweepProfile) -> String {
    let mut out = String::from("k,node,phi\n");
    for (i, phi) in profile.phis().into_iter().enumerate() {
        let phi = phi.map_or_else(|| "NA".to_string(), format_phi);
        writeln!(out, "{},{},{}", i + 1, profile.ordering[i], phi).unwrap();
    }
    out
}
