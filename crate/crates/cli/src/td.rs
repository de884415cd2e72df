//! PACE `.td` decompositions: `s td <#bags> <max_bag_size> <n>`, bag lines
//! `b <id> <v...>`, then tree edges.

use std::fmt::Write;

use linetw_core::decomp::{PathDecomposition, TreeDecomposition};

use crate::CliError;

/// Canonical text for a decomposition of a graph on `n` vertices: bags in
/// node order with ascending vertices, then edges in canonical order.
pub fn write_td(d: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {}\n", d.node_count(), d.max_bag_size(), n);
    for (i, bag) in d.bags().iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for &x in bag {
            write!(out, " {}", x + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in d.tree_edges() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// A path decomposition written with path edges `(i, i+1)`.
pub fn write_path_td(d: &PathDecomposition, n: usize) -> String {
    write_td(&d.to_tree(), n)
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

/// Parses a `.td` file, returning the decomposition and the vertex count
/// announced in the header.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize), CliError> {
    let mut header = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] | ["c", ..] => {}
            ["s", "td", rest @ ..] => {
                if header.is_some() {
                    return Err(CliError::parse(line, "second header line"));
                }
                match numbers(line, rest)?.as_slice() {
                    &[count, width, n] => {
                        header = Some((count, width, n));
                        bags = vec![None; count];
                    }
                    _ => return Err(CliError::parse(line, "header must be `s td <bags> <max_bag_size> <n>`")),
                }
            }
            ["b", rest @ ..] => {
                let Some((count, _, n)) = header else {
                    return Err(CliError::parse(line, "bag before the `s td` header"));
                };
                let values = numbers(line, rest)?;
                let Some((&id, vertices)) = values.split_first() else {
                    return Err(CliError::parse(line, "bag line without an id"));
                };
                if !(1..=count).contains(&id) {
                    return Err(CliError::parse(line, "bag id out of range"));
                }
                if bags[id - 1].is_some() {
                    return Err(CliError::parse(line, "bag listed twice"));
                }
                if vertices.iter().any(|&x| !(1..=n).contains(&x)) {
                    return Err(CliError::parse(line, "bag vertex out of range"));
                }
                bags[id - 1] = Some(vertices.iter().map(|x| x - 1).collect());
            }
            _ => {
                let Some((count, _, _)) = header else {
                    return Err(CliError::parse(line, "edge before the `s td` header"));
                };
                match *numbers(line, &fields)?.as_slice() {
                    [a, b] if (1..=count).contains(&a) && (1..=count).contains(&b) => edges.push((a - 1, b - 1)),
                    [_, _] => return Err(CliError::parse(line, "tree edge names a missing bag")),
                    _ => return Err(CliError::parse(line, "tree edge lines hold two bag ids")),
                }
            }
        }
    }
    let (_, width, n) = header.ok_or_else(|| CliError::parse(0, "missing `s td` header"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| CliError::parse(0, format!("bag {} is missing", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    let d = TreeDecomposition::new(bags, edges).map_err(|e| CliError::parse(0, e.to_string()))?;
    if d.max_bag_size() != width {
        return Err(CliError::parse(
            0,
            format!("header announces max bag size {width}, found {}", d.max_bag_size()),
        ));
    }
    Ok((d, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_round_trip() {
        let d = PathDecomposition::new(vec![vec![0, 1], vec![2, 1], vec![2]]);
        let text = write_path_td(&d, 3);
        assert_eq!(text, "s td 3 2 3\nb 1 1 2\nb 2 2 3\nb 3 3\n1 2\n2 3\n");
        let (td, n) = parse_td(&text).unwrap();
        assert_eq!(n, 3);
        assert_eq!(td.as_path(), Some(d));
        assert_eq!(write_td(&td, n), text);
    }

    #[test]
    fn tree_round_trip() {
        let d = TreeDecomposition::new(vec![vec![0], vec![0, 1], vec![0, 2]], vec![(2, 0), (1, 0)]).unwrap();
        let text = write_td(&d, 3);
        assert_eq!(parse_td(&text).unwrap().0, d);
    }

    #[test]
    fn malformed_input() {
        assert!(parse_td("b 1 1\n").is_err());
        assert!(parse_td("s td 1 1 2\nb 1 3\n").is_err());
        assert!(parse_td("s td 2 1 2\nb 1 1\n").is_err());
        assert!(parse_td("s td 2 1 2\nb 1 1\nb 2 2\n").is_err());
        assert!(parse_td("s td 1 2 2\nb 1 1\n").is_err());
        assert!(parse_td("s td 1 1 2\nb 1 1\nb 1 2\n").is_err());
        assert!(parse_td("s td 2 1 2\nb 1 1\nb 2 2\n1 3\n").is_err());
    }
}
