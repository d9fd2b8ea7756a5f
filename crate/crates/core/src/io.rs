//! Text formats: edge lists, cut partitions and hexagon cell lists.
//!
//! All formats are line based; lines starting with `#` are comments and
//! blank lines are ignored. A trailing CR is tolerated.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n').enumerate().filter_map(|(i, line)| {
        let line = line.strip_suffix('\r').unwrap_or(line).trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_fields<T: std::str::FromStr>(
    line_no: usize,
    line: &str,
    expected: usize,
) -> Result<Vec<T>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != expected {
        return Err(parse_err(
            line_no,
            format!("expected {expected} fields, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| parse_err(line_no, format!("invalid number {f:?}")))
        })
        .collect()
}

/// Parses the `n m` header followed by exactly `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(parse_err(1, "missing \"n m\" header"));
    };
    let nm: Vec<usize> = parse_fields(header_line, header, 2)?;
    let (n, m) = (nm[0], nm[1]);

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_err(line_no, format!("more than {m} edge lines")));
        }
        let uv: Vec<usize> = parse_fields(line_no, line, 2)?;
        let (u, v) = (uv[0], uv[1]);
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("expected {m} edge lines, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Writes the edge-list format, LF line endings, no comments.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One cut per data line, as edge indices.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>> {
    data_lines(text)
        .map(|(line_no, line)| {
            line.split_whitespace()
                .map(|f| {
                    f.parse()
                        .map_err(|_| parse_err(line_no, format!("invalid edge index {f:?}")))
                })
                .collect()
        })
        .collect()
}

pub fn write_partition(sets: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for set in sets {
        let ids: Vec<String> = set.iter().map(usize::to_string).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

/// Hexagon cells, one `q r` pair per data line.
pub fn parse_cells(text: &str) -> Result<Vec<(i32, i32)>> {
    data_lines(text)
        .map(|(line_no, line)| {
            let qr: Vec<i32> = parse_fields(line_no, line, 2)?;
            Ok((qr[0], qr[1]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_comments_and_crlf() {
        let g = parse_edge_list("# triangle\r\n3 3\r\n0 1\r\n1 2\r\n# mid\n0 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n1 2\n0 2\n");
    }

    #[test]
    fn reports_line_numbers() {
        let err = |t: &str| match parse_edge_list(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err(""), 1);
        assert_eq!(err("3 2\n0 1\n1 1\n"), 3);
        assert_eq!(err("3 2\n0 1\n1 0\n"), 3);
        assert_eq!(err("3 1\n0 1\n1 2\n"), 3);
        assert_eq!(err("3 2\n0 1\n"), 2);
        assert_eq!(err("2 1\n0 x\n"), 2);
        assert_eq!(err("2 1\n0 5\n"), 2);
        assert_eq!(err("# c\n2\n"), 2);
        assert_eq!(err("2 1\n0 1 2\n"), 2);
    }

    #[test]
    fn partitions_and_cells() {
        let sets = parse_partition("# cuts\n0 3\n1 4\n\n2 5\n").unwrap();
        assert_eq!(sets, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        assert_eq!(write_partition(&sets), "0 3\n1 4\n2 5\n");
        assert!(matches!(
            parse_partition("0 -1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert_eq!(parse_cells("0 0\n1 -1\n").unwrap(), vec![(0, 0), (1, -1)]);
    }
}
