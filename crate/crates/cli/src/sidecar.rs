//! Plain-text companions to `.gr`/`.td` output.

use std::fmt::Write;

use linetw_core::constructions::{Part, TriPartition, VertexOrdering};
use linetw_core::{EdgeVertexMap, MultipartiteSpec};

use crate::CliError;

/// One line `<line-graph vertex> <u> <v>` per edge of the base graph.
pub fn write_edge_map(map: &EdgeVertexMap) -> String {
    let mut out = String::new();
    for (i, e) in map.edges().iter().enumerate() {
        writeln!(out, "{} {} {}", i + 1, e.u + 1, e.v + 1).unwrap();
    }
    out
}

/// Reads [`write_edge_map`] output back as 0-indexed `(u, v)` pairs.
pub fn parse_edge_map(text: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let fields: Vec<usize> = raw
            .split_whitespace()
            .map(|f| f.parse().map_err(|_| CliError::parse(i + 1, "expected a number")))
            .collect::<Result<_, _>>()?;
        match fields.as_slice() {
            &[lv, u, v] if lv == i + 1 && u >= 1 && v >= 1 => pairs.push((u - 1, v - 1)),
            _ => return Err(CliError::parse(i + 1, "expected `<index> <u> <v>` in sequence")),
        }
    }
    Ok(pairs)
}

/// One line `<vertex> <part> <colour> <type>` per vertex, listing `x_1..`,
/// then `y_1..`, then `z`. Types are `1`–`3`, or `-` where none applies.
pub fn write_partition(spec: &MultipartiteSpec, p: &TriPartition, ordering: &VertexOrdering) -> String {
    let mut out = String::new();
    let z = p.z();
    let seq = ordering.x.iter().chain(&ordering.y).chain(std::iter::once(&z));
    for &u in seq {
        let part = match p.part_of(u) {
            Some(Part::Q1) => 1,
            Some(Part::Q2) => 2,
            _ => 3,
        };
        let colour = spec.class_of(u).expect("vertex of the spec") + 1;
        let ty = ordering.types[u].map_or_else(|| "-".to_string(), |t| t.number().to_string());
        writeln!(out, "{} {} {} {}", u + 1, part, colour, ty).unwrap();
    }
    out
}
