//! Plain-text edge lists:
//!
//! ```text
//! p 3
//! e 0 1
//! e 1 2
//! l 0 e
//! ```

use std::fmt::Write;

use super::SimpleGraph;
use crate::error::{Error, Result};

pub fn to_edgelist(g: &SimpleGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p {}", g.vertex_count()).unwrap();
    for (i, j) in g.edges() {
        writeln!(out, "e {i} {j}").unwrap();
    }
    if let Some(labels) = g.labels() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(out, "l {i} {l}").unwrap();
        }
    }
    out
}

pub fn parse_edgelist(text: &str) -> Result<SimpleGraph> {
    let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    let mut graph: Option<SimpleGraph> = None;
    let mut labels: Vec<Option<String>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().unwrap();
        let mut index = |what: &str| -> Result<usize> {
            fields
                .next()
                .ok_or_else(|| err(line, &format!("missing {what}")))?
                .parse::<usize>()
                .map_err(|e| err(line, &format!("bad {what}: {e}")))
        };
        match tag {
            "p" => {
                if graph.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                let n = index("vertex count")?;
                labels = vec![None; n];
                graph = Some(SimpleGraph::empty(n));
            }
            "e" => {
                let g = graph.as_mut().ok_or_else(|| err(line, "edge before header"))?;
                let (i, j) = (index("endpoint")?, index("endpoint")?);
                if i >= g.vertex_count() || j >= g.vertex_count() {
                    return Err(err(line, "endpoint out of range"));
                }
                if i == j {
                    return Err(err(line, "loops are not allowed"));
                }
                g.add_edge(i, j);
            }
            "l" => {
                if graph.is_none() {
                    return Err(err(line, "label before header"));
                }
                let i = index("vertex")?;
                let name = trimmed.splitn(3, char::is_whitespace).nth(2).map(str::trim);
                let name = name.filter(|s| !s.is_empty()).ok_or_else(|| err(line, "missing label"))?;
                let slot = labels.get_mut(i).ok_or_else(|| err(line, "vertex out of range"))?;
                *slot = Some(name.to_string());
            }
            other => return Err(err(line, &format!("unknown record {other:?}"))),
        }
    }
    let g = graph.ok_or_else(|| err(0, "missing \"p <n>\" header"))?;
    if labels.iter().any(Option::is_some) {
        let all: Option<Vec<String>> = labels.into_iter().collect();
        let all = all.ok_or_else(|| err(0, "labels must cover every vertex"))?;
        return g.with_labels(all);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_labels() {
        let g = SimpleGraph::from_edges(3, &[(1, 2), (0, 1)])
            .with_labels(vec!["e".into(), "a".into(), "a^2".into()])
            .unwrap();
        let text = to_edgelist(&g);
        assert_eq!(text, "p 3\ne 0 1\ne 1 2\nl 0 e\nl 1 a\nl 2 a^2\n");
        assert_eq!(parse_edgelist(&text).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_edgelist("e 0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_edgelist("p 2\ne 0 2\n").is_err());
        assert!(parse_edgelist("p 2\ne 1 1\n").is_err());
        assert!(parse_edgelist("p 2\nx\n").is_err());
        assert!(parse_edgelist("p 2\nl 0 e\n").is_err());
        assert!(parse_edgelist("").is_err());
    }
}
