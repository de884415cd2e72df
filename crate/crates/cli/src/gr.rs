//! PACE `.gr` graphs: `p tw <n> <m>`, then one `u v` line per edge.

use std::fmt::Write;

use linetw_core::Graph;

use crate::CliError;

/// Canonical text: header, then edges in canonical order, LF endings.
pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u + 1, e.v + 1).unwrap();
    }
    out
}

fn numbers(line: usize, fields: &[&str]) -> Result<Vec<usize>, CliError> {
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| CliError::parse(line, format!("expected a number, found {f:?}")))
        })
        .collect()
}

/// Parses a `.gr` file; `c` lines and blank lines are skipped.
pub fn parse_gr(text: &str) -> Result<Graph, CliError> {
    let mut header = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", "tw", rest @ ..] => {
                if header.is_some() {
                    return Err(CliError::parse(line, "second header line"));
                }
                match numbers(line, rest)?.as_slice() {
                    &[n, m] => header = Some((n, m)),
                    _ => return Err(CliError::parse(line, "header must be `p tw <n> <m>`")),
                }
            }
            _ => {
                let Some((n, _)) = header else {
                    return Err(CliError::parse(line, "edge before the `p tw` header"));
                };
                match *numbers(line, &fields)?.as_slice() {
                    [u, v] if (1..=n).contains(&u) && (1..=n).contains(&v) => pairs.push((u - 1, v - 1)),
                    [_, _] => return Err(CliError::parse(line, "vertex out of range")),
                    _ => return Err(CliError::parse(line, "edge lines hold two vertices")),
                }
            }
        }
    }
    let (n, m) = header.ok_or_else(|| CliError::parse(0, "missing `p tw` header"))?;
    if pairs.len() != m {
        return Err(CliError::parse(
            0,
            format!("header announces {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, pairs).map_err(|e| CliError::parse(0, e.to_string()))
}
